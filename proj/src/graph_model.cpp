#include "reebforge/graph_model.hpp"

#include <algorithm>
#include <sstream>

#include "reebforge/errors.hpp"

namespace reebforge {

VertexId LabeledGraph::add_vertex(std::string name, std::optional<Rational> height) {
    if (name_index_.count(name))
        raise(Errc::DuplicateVertex, "vertex '" + name + "' already declared");
    VertexId id = vertex_count();
    name_index_.emplace(name, id);
    vertices_.push_back(Vertex{std::move(name), std::move(height)});
    incidence_.emplace_back();
    return id;
}

EdgeId LabeledGraph::add_edge(VertexId u, VertexId v, int genus) {
    if (u < 0 || u >= vertex_count() || v < 0 || v >= vertex_count())
        raise(Errc::UnknownVertex, "edge endpoint out of range");
    if (genus < 0)
        raise(Errc::NegativeGenus, "edge genus must be non-negative, got " + std::to_string(genus));
    EdgeId id = edge_count();
    edges_.push_back(Edge{u, v, genus});
    incidence_[static_cast<size_t>(u)].push_back(id);
    if (u != v) incidence_[static_cast<size_t>(v)].push_back(id);
    return id;
}

EdgeId LabeledGraph::add_edge(std::string_view u_name, std::string_view v_name, int genus) {
    auto u = find_vertex(u_name);
    if (!u) raise(Errc::UnknownVertex, "unknown vertex '" + std::string(u_name) + "'");
    auto v = find_vertex(v_name);
    if (!v) raise(Errc::UnknownVertex, "unknown vertex '" + std::string(v_name) + "'");
    return add_edge(*u, *v, genus);
}

std::optional<VertexId> LabeledGraph::find_vertex(std::string_view name) const {
    auto it = name_index_.find(std::string(name));
    if (it == name_index_.end()) return std::nullopt;
    return it->second;
}

int LabeledGraph::degree(VertexId v) const {
    int d = 0;
    for (EdgeId e : incidence_[static_cast<size_t>(v)])
        d += edges_[static_cast<size_t>(e)].is_loop() ? 2 : 1;
    return d;
}

int LabeledGraph::self_loop_count() const {
    int n = 0;
    for (const Edge& e : edges_)
        if (e.is_loop()) ++n;
    return n;
}

bool LabeledGraph::is_connected() const {
    if (vertices_.empty()) return true;
    std::vector<char> seen(vertices_.size(), 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (EdgeId e : incidence_[static_cast<size_t>(v)]) {
            const Edge& ed = edges_[static_cast<size_t>(e)];
            VertexId w = ed.u == v ? ed.v : ed.u;
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

namespace {

std::vector<std::string> split_tokens(std::string_view line) {
    std::vector<std::string> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) out.emplace_back(line.substr(start, i - start));
    }
    return out;
}

[[noreturn]] void parse_fail(Errc code, int line_no, const std::string& message) {
    raise(code, "line " + std::to_string(line_no) + ": " + message);
}

} // namespace

LabeledGraph parse_graph(std::string_view text) {
    LabeledGraph g;
    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view line = eol == std::string_view::npos
                                    ? text.substr(pos)
                                    : text.substr(pos, eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto tokens = split_tokens(line);
        if (tokens.empty()) continue;

        if (tokens[0] == "vertex") {
            if (tokens.size() < 2 || tokens.size() > 3)
                parse_fail(Errc::SyntaxError, line_no, "expected 'vertex <id> [height=...]'");
            std::optional<Rational> height;
            if (tokens.size() == 3) {
                constexpr std::string_view kPrefix = "height=";
                if (tokens[2].rfind(kPrefix, 0) != 0)
                    parse_fail(Errc::SyntaxError, line_no, "expected 'height=<p>/<q>' attribute");
                auto value = Rational::parse(std::string_view(tokens[2]).substr(kPrefix.size()));
                if (!value)
                    parse_fail(Errc::SyntaxError, line_no, "bad height '" + tokens[2] + "'");
                height = *value;
            }
            if (g.find_vertex(tokens[1]))
                parse_fail(Errc::DuplicateVertex, line_no, "vertex '" + tokens[1] + "' already declared");
            g.add_vertex(tokens[1], height);
        } else if (tokens[0] == "edge") {
            if (tokens.size() != 4)
                parse_fail(Errc::SyntaxError, line_no, "expected 'edge <u> <v> genus=<n>'");
            constexpr std::string_view kPrefix = "genus=";
            if (tokens[3].rfind(kPrefix, 0) != 0)
                parse_fail(Errc::SyntaxError, line_no, "expected 'genus=<n>' attribute");
            auto genus = Rational::parse(std::string_view(tokens[3]).substr(kPrefix.size()));
            if (!genus || genus->den() != 1)
                parse_fail(Errc::SyntaxError, line_no, "bad genus '" + tokens[3] + "'");
            if (genus->num() < 0)
                parse_fail(Errc::NegativeGenus, line_no,
                           "edge genus must be non-negative, got " + std::to_string(genus->num()));
            if (!g.find_vertex(tokens[1]))
                parse_fail(Errc::UnknownVertex, line_no, "unknown vertex '" + tokens[1] + "'");
            if (!g.find_vertex(tokens[2]))
                parse_fail(Errc::UnknownVertex, line_no, "unknown vertex '" + tokens[2] + "'");
            g.add_edge(tokens[1], tokens[2], static_cast<int>(genus->num()));
        } else {
            parse_fail(Errc::SyntaxError, line_no, "unknown directive '" + tokens[0] + "'");
        }
    }
    return g;
}

std::string serialize_graph(const LabeledGraph& g) {
    std::ostringstream out;
    for (const Vertex& v : g.vertices()) {
        out << "vertex " << v.name;
        if (v.height) out << " height=" << v.height->str();
        out << "\n";
    }
    for (const Edge& e : g.edges()) {
        out << "edge " << g.vertex(e.u).name << " " << g.vertex(e.v).name
            << " genus=" << e.genus << "\n";
    }
    return out.str();
}

ValidationReport validate(const LabeledGraph& g) {
    ValidationReport report;
    if (g.edge_count() == 0)
        report.problems.push_back("no edge");
    if (g.vertex_count() > 0 && !g.is_connected())
        report.problems.push_back("not connected");
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (g.edge(e).genus < 0)
            report.problems.push_back("edge " + std::to_string(e) + " has negative genus");
    return report;
}

bool has_good_function(const LabeledGraph& g) {
    return !g.has_self_loop();
}

GoodFunction synthesize_good_function(const LabeledGraph& g, HeightPolicy policy) {
    if (g.has_self_loop())
        raise(Errc::LoopPresent, "graph has a self-loop, no good function exists");
    GoodFunction gf;
    gf.heights.reserve(static_cast<size_t>(g.vertex_count()));
    if (policy == HeightPolicy::DistinctIntegers) {
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            gf.heights.emplace_back(v);
    } else {
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            const auto& h = g.vertex(v).height;
            if (!h)
                raise(Errc::GivenHeightsNotGood,
                      "vertex '" + g.vertex(v).name + "' has no given height");
            gf.heights.push_back(*h);
        }
        for (const Edge& e : g.edges()) {
            if (gf.at(e.u) == gf.at(e.v))
                raise(Errc::GivenHeightsNotGood,
                      "edge " + g.vertex(e.u).name + "-" + g.vertex(e.v).name +
                          " has equal endpoint heights " + gf.at(e.u).str());
        }
    }
    return gf;
}

std::vector<VertexClass> classify_vertices(const LabeledGraph& g, const GoodFunction& gf) {
    std::vector<VertexClass> classes(static_cast<size_t>(g.vertex_count()));
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        bool below = false, above = false;
        for (EdgeId e : g.incident_edges(v)) {
            const Edge& ed = g.edge(e);
            VertexId w = ed.u == v ? ed.v : ed.u;
            if (gf.at(w) < gf.at(v)) below = true;
            if (gf.at(w) > gf.at(v)) above = true;
        }
        VertexClass& cls = classes[static_cast<size_t>(v)];
        if (below && above) {
            cls.kind = VertexKind::Interior;
        } else {
            cls.kind = g.degree(v) == 1 ? VertexKind::ExtremumDeg1 : VertexKind::ExtremumMulti;
            cls.side = below ? ExtremumSide::Max : ExtremumSide::Min;
        }
    }
    return classes;
}

std::string export_dot(const LabeledGraph& g, const GoodFunction* gf) {
    std::ostringstream out;
    out << "graph G {\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        out << "  \"" << g.vertex(v).name << "\" [label=\"" << g.vertex(v).name;
        if (gf)
            out << "\\nh=" << gf->at(v).str();
        else if (g.vertex(v).height)
            out << "\\nh=" << g.vertex(v).height->str();
        out << "\"];\n";
    }
    for (const Edge& e : g.edges()) {
        out << "  \"" << g.vertex(e.u).name << "\" -- \"" << g.vertex(e.v).name
            << "\" [label=\"" << e.genus << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace reebforge
