#include "reebforge/reeb_sweep.hpp"

#include <algorithm>
#include <chrono>
#include <json.hpp>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "reebforge/errors.hpp"

namespace reebforge {

using ordered_json = nlohmann::ordered_json;

int ReebGraph::degree(int v) const {
    int d = 0;
    for (const ReebEdge& e : edges) {
        if (e.u == v) ++d;
        if (e.v == v) ++d;
    }
    return d;
}

ReebGraph sweep(const RealizationPlan& plan, bool strip_identities) {
    struct ActiveComponent {
        int genus = 0;
        int birth_event = -1;
    };

    ReebGraph w;
    std::unordered_map<EdgeId, ActiveComponent> active; // keyed by port

    for (size_t i = 0; i < plan.events.size(); ++i) {
        const PlanEvent& event = plan.events[i];
        const VertexModel& model = event.model;

        std::string name = strip_identities ? "r" + std::to_string(i)
                                            : plan.graph.vertex(model.vertex).name;
        w.vertices.push_back(ReebVertex{std::move(name), model.value});

        int expected = consumed_count(model);
        if (expected != static_cast<int>(event.down_ports.size()))
            raise(Errc::DanglingComponent,
                  "event " + std::to_string(i) + " consumes " + std::to_string(expected) +
                      " components but lists " + std::to_string(event.down_ports.size()) +
                      " descending ports");
        for (EdgeId port : event.down_ports) {
            auto it = active.find(port);
            if (it == active.end())
                raise(Errc::DanglingComponent,
                      "event " + std::to_string(i) + " expects a component on port " +
                          std::to_string(port) + " that is not active");
            w.edges.push_back(ReebEdge{it->second.birth_event, static_cast<int>(i),
                                       it->second.genus});
            active.erase(it);
        }

        std::vector<int> genera = born_genera(model);
        if (genera.size() != event.up_ports.size())
            raise(Errc::DanglingComponent,
                  "event " + std::to_string(i) + " births " + std::to_string(genera.size()) +
                      " components but lists " + std::to_string(event.up_ports.size()) +
                      " ascending ports");
        for (size_t j = 0; j < genera.size(); ++j) {
            EdgeId port = event.up_ports[j];
            if (active.count(port))
                raise(Errc::DanglingComponent,
                      "event " + std::to_string(i) + " births onto port " + std::to_string(port) +
                          " which is already active");
            active.emplace(port, ActiveComponent{genera[j], static_cast<int>(i)});
        }
    }

    if (!active.empty())
        raise(Errc::LeftoverComponent, std::to_string(active.size()) +
                                           " component(s) still active after the last event");
    return w;
}

namespace {

struct PairKey {
    int a, b;
    bool operator==(const PairKey&) const = default;
};

struct PairKeyHash {
    size_t operator()(const PairKey& k) const {
        return std::hash<long long>()((static_cast<long long>(k.a) << 32) ^ k.b);
    }
};

PairKey make_key(int u, int v) {
    return u <= v ? PairKey{u, v} : PairKey{v, u};
}

using PairMap = std::unordered_map<PairKey, std::vector<int>, PairKeyHash>;

struct Signature {
    std::optional<Rational> height;
    int degree = 0;
    std::vector<int> genera; // sorted, empty when genus is ignored

    bool operator==(const Signature&) const = default;
};

std::optional<Isomorphism> search(const ReebGraph& w, const LabeledGraph& g,
                                  const GoodFunction* gf, bool use_genus) {
    int n = static_cast<int>(w.vertices.size());
    if (n != g.vertex_count()) return std::nullopt;
    if (w.edges.size() != static_cast<size_t>(g.edge_count())) return std::nullopt;

    PairMap w_pairs, g_pairs;
    std::vector<int> w_degree(static_cast<size_t>(n), 0);
    std::vector<std::vector<int>> w_genera(static_cast<size_t>(n));
    for (const ReebEdge& e : w.edges) {
        w_pairs[make_key(e.u, e.v)].push_back(use_genus ? e.genus : 0);
        ++w_degree[static_cast<size_t>(e.u)];
        ++w_degree[static_cast<size_t>(e.v)];
        w_genera[static_cast<size_t>(e.u)].push_back(e.genus);
        w_genera[static_cast<size_t>(e.v)].push_back(e.genus);
    }
    std::vector<std::vector<int>> g_genera(static_cast<size_t>(n));
    for (const Edge& e : g.edges()) {
        g_pairs[make_key(e.u, e.v)].push_back(use_genus ? e.genus : 0);
        g_genera[static_cast<size_t>(e.u)].push_back(e.genus);
        g_genera[static_cast<size_t>(e.v)].push_back(e.genus);
    }
    for (auto& [k, v] : w_pairs) std::sort(v.begin(), v.end());
    for (auto& [k, v] : g_pairs) std::sort(v.begin(), v.end());

    auto signature_of = [&](int degree, std::vector<int> genera,
                            std::optional<Rational> height) {
        Signature s;
        s.degree = degree;
        if (use_genus) {
            std::sort(genera.begin(), genera.end());
            s.genera = std::move(genera);
        }
        if (gf) s.height = std::move(height);
        return s;
    };

    std::vector<Signature> w_sig, g_sig;
    w_sig.reserve(static_cast<size_t>(n));
    g_sig.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        w_sig.push_back(signature_of(w_degree[static_cast<size_t>(i)],
                                     w_genera[static_cast<size_t>(i)],
                                     w.vertices[static_cast<size_t>(i)].height));
    for (int i = 0; i < n; ++i)
        g_sig.push_back(signature_of(g.degree(i), g_genera[static_cast<size_t>(i)],
                                     gf ? std::optional<Rational>(gf->at(i)) : std::nullopt));

    std::vector<std::vector<int>> candidates(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (w_sig[static_cast<size_t>(i)] == g_sig[static_cast<size_t>(j)])
                candidates[static_cast<size_t>(i)].push_back(j);
        if (candidates[static_cast<size_t>(i)].empty()) return std::nullopt;
    }

    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return candidates[static_cast<size_t>(a)].size() < candidates[static_cast<size_t>(b)].size();
    });

    std::vector<int> assignment(static_cast<size_t>(n), -1);
    std::vector<char> used(static_cast<size_t>(n), 0);

    auto pairs_match = [&](int ru, int gu, int rv, int gv) {
        auto wit = w_pairs.find(make_key(ru, rv));
        auto git = g_pairs.find(make_key(gu, gv));
        bool w_has = wit != w_pairs.end();
        bool g_has = git != g_pairs.end();
        if (w_has != g_has) return false;
        if (!w_has) return true;
        return wit->second == git->second;
    };

    std::vector<int> assigned_so_far;
    assigned_so_far.reserve(static_cast<size_t>(n));

    auto dfs = [&](auto&& self, size_t depth) -> bool {
        if (depth == order.size()) return true;
        int rv = order[depth];
        for (int gv : candidates[static_cast<size_t>(rv)]) {
            if (used[static_cast<size_t>(gv)]) continue;
            bool ok = true;
            for (int prev : assigned_so_far) {
                if (!pairs_match(rv, gv, prev, assignment[static_cast<size_t>(prev)])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            assignment[static_cast<size_t>(rv)] = gv;
            used[static_cast<size_t>(gv)] = 1;
            assigned_so_far.push_back(rv);
            if (self(self, depth + 1)) return true;
            assigned_so_far.pop_back();
            used[static_cast<size_t>(gv)] = 0;
            assignment[static_cast<size_t>(rv)] = -1;
        }
        return false;
    };

    if (!dfs(dfs, 0)) return std::nullopt;
    Isomorphism iso;
    iso.map = assignment;
    return iso;
}

} // namespace

std::optional<Isomorphism> find_isomorphism(const ReebGraph& w, const LabeledGraph& g,
                                            const GoodFunction& gf) {
    return search(w, g, &gf, true);
}

std::optional<Isomorphism> find_isomorphism_adjacency(const ReebGraph& w, const LabeledGraph& g) {
    return search(w, g, nullptr, false);
}

std::optional<Isomorphism> find_isomorphism_genus(const ReebGraph& w, const LabeledGraph& g) {
    return search(w, g, nullptr, true);
}

VerificationReport verify_realization(const LabeledGraph& g, const GoodFunction& gf) {
    auto start = std::chrono::steady_clock::now();

    RealizationPlan plan = assemble(g, gf);
    ReebGraph w = sweep(plan, /*strip_identities=*/true);

    VerificationReport report;
    report.chi_zero = plan.invariants.global_chi == 0;

    if (find_isomorphism(w, g, gf)) {
        report.property1 = report.property2 = report.property3 = true;
    } else {
        report.property3 = false;
        report.property2 = find_isomorphism_genus(w, g).has_value();
        report.property1 = report.property2 || find_isomorphism_adjacency(w, g).has_value();
    }

    for (const PlanEvent& event : plan.events)
        for (const SingularPoint& p : event.model.singular_inventory())
            ++report.tags[normal_form_name(p.tag)];

    auto end = std::chrono::steady_clock::now();
    report.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
    return report;
}

std::string report_to_json(const VerificationReport& report, bool include_timing) {
    ordered_json j;
    j["property1"] = report.property1;
    j["property2"] = report.property2;
    j["property3"] = report.property3;
    j["chi_zero"] = report.chi_zero;
    ordered_json tags = ordered_json::object();
    for (const auto& [name, count] : report.tags) tags[name] = count;
    j["tags"] = std::move(tags);
    if (include_timing) j["elapsed_ms"] = report.elapsed_ms;
    return j.dump(2) + "\n";
}

std::string reeb_to_dot(const ReebGraph& w) {
    std::ostringstream out;
    out << "graph reeb {\n";
    for (size_t i = 0; i < w.vertices.size(); ++i)
        out << "  \"" << w.vertices[i].name << "\" [label=\"" << w.vertices[i].name
            << "\\nh=" << w.vertices[i].height.str() << "\"];\n";
    for (const ReebEdge& e : w.edges)
        out << "  \"" << w.vertices[static_cast<size_t>(e.u)].name << "\" -- \""
            << w.vertices[static_cast<size_t>(e.v)].name << "\" [label=\"" << e.genus
            << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string reeb_to_json(const ReebGraph& w) {
    ordered_json j;
    ordered_json vertices = ordered_json::array();
    for (const ReebVertex& v : w.vertices)
        vertices.push_back({{"name", v.name}, {"height", v.height.str()}});
    ordered_json edges = ordered_json::array();
    for (const ReebEdge& e : w.edges)
        edges.push_back({{"u", e.u}, {"v", e.v}, {"genus", e.genus}});
    j["vertices"] = std::move(vertices);
    j["edges"] = std::move(edges);
    return j.dump(2) + "\n";
}

} // namespace reebforge
