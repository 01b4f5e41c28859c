#include <CLI11.hpp>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <thread>
#include <unistd.h>

#include "reebforge/assembler.hpp"
#include "reebforge/errors.hpp"
#include "reebforge/graph_model.hpp"
#include "reebforge/pl_oracle.hpp"
#include "reebforge/random_graph.hpp"
#include "reebforge/reeb_sweep.hpp"

using namespace reebforge;
using ordered_json = nlohmann::ordered_json;

namespace {

bool color_enabled() {
    if (std::getenv("REEBFORGE_NO_COLOR")) return false;
    return isatty(fileno(stderr));
}

void print_error(const std::string& message) {
    if (color_enabled())
        std::cerr << "reebforge: \x1b[31merror\x1b[0m: " << message << "\n";
    else
        std::cerr << "reebforge: error: " << message << "\n";
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(Errc::BadConfig, "cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(Errc::BadConfig, "cannot open output file '" + path + "'");
    out << data;
}

/// Use the file's heights when every vertex carries one, otherwise assign
/// distinct integers. A partially heighted file is ambiguous and rejected.
GoodFunction choose_good_function(const LabeledGraph& g) {
    int heighted = 0;
    for (const Vertex& v : g.vertices())
        if (v.height) ++heighted;
    if (heighted == 0) return synthesize_good_function(g, HeightPolicy::DistinctIntegers);
    if (heighted == g.vertex_count())
        return synthesize_good_function(g, HeightPolicy::RespectGivenHeights);
    raise(Errc::GivenHeightsNotGood,
          "heights given for " + std::to_string(heighted) + " of " +
              std::to_string(g.vertex_count()) + " vertices; give all or none");
}

int run_check(const std::string& input, const std::string& output) {
    LabeledGraph g = parse_graph(read_input(input));
    ValidationReport vr = validate(g);
    bool good = has_good_function(g);

    ordered_json j;
    j["admissible"] = vr.ok();
    ordered_json problems = ordered_json::array();
    for (const std::string& p : vr.problems) problems.push_back(p);
    if (!good) problems.push_back("no good function: loop present");
    j["problems"] = std::move(problems);
    j["has_good_function"] = good;
    write_output(output, j.dump(2) + "\n");
    return (vr.ok() && good) ? 0 : 1;
}

int run_realize(const std::string& input, const std::string& output) {
    LabeledGraph g = parse_graph(read_input(input));
    ValidationReport vr = validate(g);
    if (!vr.ok()) raise(Errc::InvalidGraph, vr.problems.front());
    GoodFunction gf = choose_good_function(g);
    RealizationPlan plan = assemble(g, gf);
    write_output(output, plan_to_json(plan));
    return 0;
}

int run_verify_single(const std::string& input, const std::string& output, bool timing) {
    LabeledGraph g = parse_graph(read_input(input));
    ValidationReport vr = validate(g);
    if (!vr.ok()) raise(Errc::InvalidGraph, vr.problems.front());
    GoodFunction gf = choose_good_function(g);
    VerificationReport report = verify_realization(g, gf);
    write_output(output, report_to_json(report, timing));
    return report.passed() ? 0 : 1;
}

int run_verify_batch(int batch, std::uint64_t seed, const GraphBounds& bounds,
                     const std::string& output, bool timing) {
    std::vector<std::string> lines(static_cast<size_t>(batch));
    std::vector<char> passed(static_cast<size_t>(batch), 0);

    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::future<void>> futures;
    std::atomic<int> next{0};
    for (unsigned t = 0; t < workers; ++t) {
        futures.push_back(std::async(std::launch::async, [&] {
            for (int i = next.fetch_add(1); i < batch; i = next.fetch_add(1)) {
                std::uint64_t unit_seed = seed + static_cast<std::uint64_t>(i);
                LabeledGraph g = random_graph(unit_seed, bounds);
                GoodFunction gf = synthesize_good_function(g);
                VerificationReport report = verify_realization(g, gf);
                ordered_json j;
                j["seed"] = unit_seed;
                j["passed"] = report.passed();
                j["property1"] = report.property1;
                j["property2"] = report.property2;
                j["property3"] = report.property3;
                j["chi_zero"] = report.chi_zero;
                if (timing) j["elapsed_ms"] = report.elapsed_ms;
                lines[static_cast<size_t>(i)] = j.dump();
                passed[static_cast<size_t>(i)] = report.passed();
            }
        }));
    }
    for (auto& f : futures) f.get();

    std::ostringstream out;
    int npassed = 0;
    for (int i = 0; i < batch; ++i) {
        out << lines[static_cast<size_t>(i)] << "\n";
        if (passed[static_cast<size_t>(i)]) ++npassed;
    }
    ordered_json summary;
    summary["total"] = batch;
    summary["passed"] = npassed;
    out << summary.dump() << "\n";
    write_output(output, out.str());
    return npassed == batch ? 0 : 1;
}

int run_sweep_off(const std::string& input, const std::string& values_path,
                  const std::string& format, const std::string& output) {
    std::string text = read_input(input);
    SimplicialSurface mesh = values_path.empty()
                                 ? load_off(text)
                                 : load_off(text, read_input(values_path));
    ReebGraph w = reeb_graph_pl(mesh);
    write_output(output, format == "dot" ? reeb_to_dot(w) : reeb_to_json(w));
    return 0;
}

int run_random(std::uint64_t seed, const GraphBounds& bounds, const std::string& output) {
    write_output(output, serialize_graph(random_graph(seed, bounds)));
    return 0;
}

int run_export_dot(const std::string& input, const std::string& output) {
    LabeledGraph g = parse_graph(read_input(input));
    write_output(output, export_dot(g));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Realize genus-labeled graphs as Reeb graphs of functions on closed "
                 "orientable 3-manifolds, and verify the realizations"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string output;
    std::string values_path;
    std::string format = "json";
    std::uint64_t seed = 0;
    int batch = 0;
    bool timing = false;
    GraphBounds bounds;

    auto add_bounds = [&](CLI::App* cmd) {
        cmd->add_option("--max-vertices", bounds.max_vertices, "vertex bound")
            ->check(CLI::Range(2, 1000000));
        cmd->add_option("--max-edges", bounds.max_edges, "edge bound")
            ->check(CLI::Range(1, 1000000));
        cmd->add_option("--max-genus", bounds.max_genus, "genus bound")
            ->check(CLI::Range(0, 1000000));
    };

    CLI::App* check = app.add_subcommand("check", "validate a graph and report good-function diagnostics");
    check->add_option("input", input, "graph file or -");
    check->add_option("--output", output, "output path");

    CLI::App* realize = app.add_subcommand("realize", "emit the realization plan JSON");
    realize->add_option("input", input, "graph file or -");
    realize->add_option("--output", output, "output path");

    CLI::App* verify = app.add_subcommand("verify", "realize, sweep and check the realization properties");
    verify->add_option("input", input, "graph file or -");
    verify->add_option("--batch", batch, "verify N seeded random graphs instead of a file")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "base seed for --batch");
    verify->add_flag("--timing", timing, "include elapsed_ms in reports");
    verify->add_option("--output", output, "output path");
    add_bounds(verify);

    CLI::App* sweep_off = app.add_subcommand("sweep-off", "Reeb graph of a PL scalar field on an OFF mesh");
    sweep_off->add_option("input", input, "OFF file or -");
    sweep_off->add_option("--values", values_path, "sidecar scalar file, one value per vertex");
    sweep_off->add_option("--format", format, "json or dot")
        ->check(CLI::IsMember({"json", "dot"}));
    sweep_off->add_option("--output", output, "output path");

    CLI::App* random_cmd = app.add_subcommand("random", "emit a seeded random admissible graph");
    random_cmd->add_option("--seed", seed, "generator seed");
    random_cmd->add_option("--output", output, "output path");
    add_bounds(random_cmd);

    CLI::App* export_cmd = app.add_subcommand("export-dot", "emit the graph as DOT");
    export_cmd->add_option("input", input, "graph file or -");
    export_cmd->add_option("--output", output, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // usage problems are exit 2, --help is success
    }

    try {
        if (check->parsed()) return run_check(input, output);
        if (realize->parsed()) return run_realize(input, output);
        if (verify->parsed()) {
            if (batch > 0) return run_verify_batch(batch, seed, bounds, output, timing);
            return run_verify_single(input, output, timing);
        }
        if (sweep_off->parsed()) return run_sweep_off(input, values_path, format, output);
        if (random_cmd->parsed()) return run_random(seed, bounds, output);
        if (export_cmd->parsed()) return run_export_dot(input, output);
    } catch (const Error& e) {
        print_error(e.what());
        return 2;
    } catch (const std::exception& e) {
        print_error(e.what());
        return 2;
    }
    return 2;
}
