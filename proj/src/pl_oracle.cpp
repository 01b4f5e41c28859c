#include "reebforge/pl_oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "reebforge/errors.hpp"

namespace reebforge {

namespace {

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> out;
    size_t i = 0;
    while (i < text.size()) {
        if (text[i] == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
               text[i] != '#')
            ++i;
        out.emplace_back(text.substr(start, i - start));
    }
    return out;
}

struct EdgeRef {
    int a, b; // a < b
    bool operator<(const EdgeRef& o) const { return a < o.a || (a == o.a && b < o.b); }
    bool operator==(const EdgeRef&) const = default;
};

EdgeRef edge_of(int u, int v) { return u < v ? EdgeRef{u, v} : EdgeRef{v, u}; }

void validate_surface(const SimplicialSurface& s) {
    const int nv = static_cast<int>(s.vertices.size());
    if (nv < 4 || s.triangles.empty())
        raise(Errc::NotClosedSurface, "mesh too small to be a closed surface");

    std::map<EdgeRef, std::vector<int>> edge_faces;
    for (size_t f = 0; f < s.triangles.size(); ++f) {
        const auto& t = s.triangles[f];
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
            raise(Errc::ParseError, "degenerate triangle " + std::to_string(f));
        for (int c = 0; c < 3; ++c) {
            int u = t[static_cast<size_t>(c)];
            int v = t[static_cast<size_t>((c + 1) % 3)];
            if (u < 0 || u >= nv || v < 0 || v >= nv)
                raise(Errc::ParseError, "triangle " + std::to_string(f) + " references missing vertex");
            edge_faces[edge_of(u, v)].push_back(static_cast<int>(f));
        }
    }
    for (const auto& [e, faces] : edge_faces) {
        if (faces.size() != 2)
            raise(Errc::NotClosedSurface,
                  "edge " + std::to_string(e.a) + "-" + std::to_string(e.b) + " borders " +
                      std::to_string(faces.size()) + " triangle(s), expected 2");
    }

    // orientability: every edge must be traversed once in each direction
    std::map<std::pair<int, int>, int> directed;
    for (const auto& t : s.triangles) {
        for (int c = 0; c < 3; ++c) {
            int u = t[static_cast<size_t>(c)];
            int v = t[static_cast<size_t>((c + 1) % 3)];
            if (++directed[{u, v}] > 1)
                raise(Errc::NotClosedSurface, "mesh is not consistently oriented");
        }
    }
    for (const auto& [uv, count] : directed) {
        if (!directed.count({uv.second, uv.first}))
            raise(Errc::NotClosedSurface, "mesh is not consistently oriented");
    }

    // vertex links must be single cycles: count link edges == link vertices
    std::vector<std::vector<int>> star(static_cast<size_t>(nv));
    for (size_t f = 0; f < s.triangles.size(); ++f)
        for (int c : s.triangles[f]) star[static_cast<size_t>(c)].push_back(static_cast<int>(f));
    for (int v = 0; v < nv; ++v) {
        std::vector<int> link_vertices;
        for (int f : star[static_cast<size_t>(v)])
            for (int c : s.triangles[static_cast<size_t>(f)])
                if (c != v) link_vertices.push_back(c);
        std::sort(link_vertices.begin(), link_vertices.end());
        // each link vertex appears in exactly two of v's triangles on a cycle
        for (size_t i = 0; i + 1 < link_vertices.size(); i += 2) {
            if (link_vertices[i] != link_vertices[i + 1])
                raise(Errc::NotClosedSurface,
                      "link of vertex " + std::to_string(v) + " is not a single cycle");
        }
        size_t distinct = link_vertices.size() / 2;
        if (distinct != star[static_cast<size_t>(v)].size())
            raise(Errc::NotClosedSurface,
                  "link of vertex " + std::to_string(v) + " is not a single cycle");
    }

    // connectivity across shared edges
    std::vector<int> comp(s.triangles.size(), -1);
    std::map<EdgeRef, std::vector<int>>& ef = edge_faces;
    std::vector<int> stack{0};
    comp[0] = 0;
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        const auto& t = s.triangles[static_cast<size_t>(f)];
        for (int c = 0; c < 3; ++c) {
            EdgeRef e = edge_of(t[static_cast<size_t>(c)], t[static_cast<size_t>((c + 1) % 3)]);
            for (int g : ef[e]) {
                if (comp[static_cast<size_t>(g)] == -1) {
                    comp[static_cast<size_t>(g)] = 0;
                    stack.push_back(g);
                }
            }
        }
    }
    if (std::count(comp.begin(), comp.end(), -1) > 0)
        raise(Errc::NotClosedSurface, "mesh is not connected");
}

SimplicialSurface parse_off(std::string_view text) {
    auto tokens = tokenize(text);
    size_t pos = 0;
    auto next = [&]() -> const std::string& {
        if (pos >= tokens.size()) raise(Errc::ParseError, "unexpected end of OFF data");
        return tokens[pos++];
    };
    auto next_int = [&]() {
        const std::string& t = next();
        auto r = Rational::parse(t);
        if (!r || r->den() != 1) raise(Errc::ParseError, "expected integer, got '" + t + "'");
        return static_cast<int>(r->num());
    };

    if (next() != "OFF") raise(Errc::ParseError, "missing OFF header");
    int nv = next_int();
    int nf = next_int();
    next_int(); // edge count, ignored

    if (nv <= 0 || nf <= 0) raise(Errc::ParseError, "OFF mesh must have vertices and faces");

    SimplicialSurface s;
    s.vertices.reserve(static_cast<size_t>(nv));
    for (int i = 0; i < nv; ++i) {
        MeshVertex v;
        auto coord = [&](double& slot, Rational& exact) {
            const std::string& t = next();
            auto r = Rational::parse_decimal(t);
            if (!r) raise(Errc::ParseError, "bad coordinate '" + t + "'");
            exact = *r;
            slot = r->to_double();
        };
        Rational rx, ry, rz;
        coord(v.x, rx);
        coord(v.y, ry);
        coord(v.z, rz);
        v.value = rz;
        s.vertices.push_back(v);
    }
    for (int i = 0; i < nf; ++i) {
        int arity = next_int();
        if (arity != 3) raise(Errc::ParseError, "face " + std::to_string(i) + " is not a triangle");
        std::array<int, 3> t{next_int(), next_int(), next_int()};
        s.triangles.push_back(t);
    }
    return s;
}

} // namespace

SimplicialSurface load_off(std::string_view text) {
    SimplicialSurface s = parse_off(text);
    validate_surface(s);
    return s;
}

SimplicialSurface load_off(std::string_view text, std::string_view sidecar_values) {
    SimplicialSurface s = parse_off(text);
    auto tokens = tokenize(sidecar_values);
    if (tokens.size() != s.vertices.size())
        raise(Errc::ParseError, "sidecar has " + std::to_string(tokens.size()) +
                                    " values for " + std::to_string(s.vertices.size()) +
                                    " vertices");
    for (size_t i = 0; i < tokens.size(); ++i) {
        auto r = Rational::parse_decimal(tokens[i]);
        if (!r) raise(Errc::ParseError, "bad sidecar value '" + tokens[i] + "'");
        s.vertices[i].value = *r;
    }
    validate_surface(s);
    return s;
}

int euler_from_mesh(const SimplicialSurface& s) {
    std::vector<EdgeRef> edges;
    for (const auto& t : s.triangles)
        for (int c = 0; c < 3; ++c)
            edges.push_back(edge_of(t[static_cast<size_t>(c)], t[static_cast<size_t>((c + 1) % 3)]));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return static_cast<int>(s.vertices.size()) - static_cast<int>(edges.size()) +
           static_cast<int>(s.triangles.size());
}

namespace {

/// Union-find over contour-class nodes.
struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<size_t>(a)] = b;
    }
};

} // namespace

ReebGraph reeb_graph_pl(const SimplicialSurface& s) {
    const int nv = static_cast<int>(s.vertices.size());
    const int nf = static_cast<int>(s.triangles.size());

    // simulation of simplicity: perturbed order is (value, index) lex
    std::vector<int> order(static_cast<size_t>(nv));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const Rational& va = s.vertices[static_cast<size_t>(a)].value;
        const Rational& vb = s.vertices[static_cast<size_t>(b)].value;
        if (va != vb) return va < vb;
        return a < b;
    });
    std::vector<int> rank(static_cast<size_t>(nv));
    for (int i = 0; i < nv; ++i) rank[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;

    std::vector<std::vector<int>> star(static_cast<size_t>(nv));
    for (int f = 0; f < nf; ++f)
        for (int c : s.triangles[static_cast<size_t>(f)])
            star[static_cast<size_t>(c)].push_back(f);

    auto tri_min_max = [&](int f) {
        const auto& t = s.triangles[static_cast<size_t>(f)];
        int lo = std::min({rank[static_cast<size_t>(t[0])], rank[static_cast<size_t>(t[1])],
                           rank[static_cast<size_t>(t[2])]});
        int hi = std::max({rank[static_cast<size_t>(t[0])], rank[static_cast<size_t>(t[1])],
                           rank[static_cast<size_t>(t[2])]});
        return std::pair<int, int>{lo, hi};
    };

    // crossing triangles for the gap between rank r and r+1: min <= r < max
    auto crosses_gap = [&](int f, int r) {
        auto [lo, hi] = tri_min_max(f);
        return lo <= r && hi >= r + 1;
    };

    // link component counts below/above the vertex
    auto link_components = [&](int v, bool below) {
        std::vector<int> nodes;
        std::vector<std::pair<int, int>> links;
        for (int f : star[static_cast<size_t>(v)]) {
            const auto& t = s.triangles[static_cast<size_t>(f)];
            std::vector<int> others;
            for (int c : t)
                if (c != v) others.push_back(c);
            auto side = [&](int w) {
                return below ? rank[static_cast<size_t>(w)] < rank[static_cast<size_t>(v)]
                             : rank[static_cast<size_t>(w)] > rank[static_cast<size_t>(v)];
            };
            for (int w : others)
                if (side(w)) nodes.push_back(w);
            if (others.size() == 2 && side(others[0]) && side(others[1]))
                links.emplace_back(others[0], others[1]);
        }
        std::sort(nodes.begin(), nodes.end());
        nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
        if (nodes.empty()) return 0;
        std::map<int, int> index;
        for (size_t i = 0; i < nodes.size(); ++i) index[nodes[i]] = static_cast<int>(i);
        DisjointSet ds(nodes.size());
        for (auto [a, b] : links) ds.unite(index[a], index[b]);
        int comps = 0;
        for (size_t i = 0; i < nodes.size(); ++i)
            if (ds.find(static_cast<int>(i)) == static_cast<int>(i)) ++comps;
        return comps;
    };

    std::vector<char> critical(static_cast<size_t>(nv), 0);
    for (int v = 0; v < nv; ++v) {
        int lower = link_components(v, true);
        int upper = link_components(v, false);
        critical[static_cast<size_t>(v)] = !(lower == 1 && upper == 1);
    }

    // contour components per gap: comp_of[r][f] = component index at gap r
    const int gaps = nv - 1;
    std::vector<std::vector<int>> comp_of(static_cast<size_t>(gaps),
                                          std::vector<int>(static_cast<size_t>(nf), -1));
    std::vector<int> comp_count(static_cast<size_t>(gaps), 0);

    std::map<EdgeRef, std::vector<int>> edge_faces;
    for (int f = 0; f < nf; ++f) {
        const auto& t = s.triangles[static_cast<size_t>(f)];
        for (int c = 0; c < 3; ++c)
            edge_faces[edge_of(t[static_cast<size_t>(c)], t[static_cast<size_t>((c + 1) % 3)])]
                .push_back(f);
    }
    auto edge_crosses_gap = [&](const EdgeRef& e, int r) {
        int ra = rank[static_cast<size_t>(e.a)];
        int rb = rank[static_cast<size_t>(e.b)];
        return std::min(ra, rb) <= r && std::max(ra, rb) >= r + 1;
    };

    for (int r = 0; r < gaps; ++r) {
        for (int f = 0; f < nf; ++f) {
            if (!crosses_gap(f, r) || comp_of[static_cast<size_t>(r)][static_cast<size_t>(f)] != -1)
                continue;
            int id = comp_count[static_cast<size_t>(r)]++;
            std::vector<int> stack{f};
            comp_of[static_cast<size_t>(r)][static_cast<size_t>(f)] = id;
            while (!stack.empty()) {
                int cur = stack.back();
                stack.pop_back();
                const auto& t = s.triangles[static_cast<size_t>(cur)];
                for (int c = 0; c < 3; ++c) {
                    EdgeRef e = edge_of(t[static_cast<size_t>(c)],
                                        t[static_cast<size_t>((c + 1) % 3)]);
                    if (!edge_crosses_gap(e, r)) continue;
                    for (int g : edge_faces[e]) {
                        if (crosses_gap(g, r) &&
                            comp_of[static_cast<size_t>(r)][static_cast<size_t>(g)] == -1) {
                            comp_of[static_cast<size_t>(r)][static_cast<size_t>(g)] = id;
                            stack.push_back(g);
                        }
                    }
                }
            }
        }
    }

    // node ids for (gap, comp) pairs
    std::vector<int> gap_base(static_cast<size_t>(gaps) + 1, 0);
    for (int r = 0; r < gaps; ++r)
        gap_base[static_cast<size_t>(r) + 1] =
            gap_base[static_cast<size_t>(r)] + comp_count[static_cast<size_t>(r)];
    int total_nodes = gap_base[static_cast<size_t>(gaps)];
    DisjointSet segments(static_cast<size_t>(total_nodes));
    auto node_of = [&](int r, int comp) { return gap_base[static_cast<size_t>(r)] + comp; };

    ReebGraph w;
    std::vector<int> reeb_vertex_of_rank(static_cast<size_t>(nv), -1);
    // lower endpoint of the segment containing each node root
    std::vector<int> segment_lower(static_cast<size_t>(total_nodes), -1);

    auto set_lower = [&](int node, int reeb_vertex) {
        segment_lower[static_cast<size_t>(segments.find(node))] = reeb_vertex;
    };
    auto lower_of = [&](int node) { return segment_lower[static_cast<size_t>(segments.find(node))]; };

    for (int r = 0; r < nv; ++r) {
        int v = order[static_cast<size_t>(r)];
        bool is_crit = critical[static_cast<size_t>(v)] != 0;

        // level-r contour component through v: star triangles crossing the
        // exact level, grown through edges that straddle it
        std::vector<char> in_level_comp(static_cast<size_t>(nf), 0);
        if (is_crit) {
            std::vector<int> stack;
            for (int f : star[static_cast<size_t>(v)]) {
                auto [lo, hi] = tri_min_max(f);
                if (lo < r && hi > r && !in_level_comp[static_cast<size_t>(f)]) {
                    in_level_comp[static_cast<size_t>(f)] = 1;
                    stack.push_back(f);
                }
            }
            auto edge_crosses_level = [&](const EdgeRef& e) {
                int ra = rank[static_cast<size_t>(e.a)];
                int rb = rank[static_cast<size_t>(e.b)];
                return std::min(ra, rb) < r && std::max(ra, rb) > r;
            };
            while (!stack.empty()) {
                int cur = stack.back();
                stack.pop_back();
                const auto& t = s.triangles[static_cast<size_t>(cur)];
                for (int c = 0; c < 3; ++c) {
                    EdgeRef e = edge_of(t[static_cast<size_t>(c)],
                                        t[static_cast<size_t>((c + 1) % 3)]);
                    if (!edge_crosses_level(e)) continue;
                    for (int g : edge_faces[e]) {
                        auto [lo, hi] = tri_min_max(g);
                        if (lo < r && hi > r && !in_level_comp[static_cast<size_t>(g)]) {
                            in_level_comp[static_cast<size_t>(g)] = 1;
                            stack.push_back(g);
                        }
                    }
                }
            }
        }

        // comps touching v from below/above: meeting the level component or
        // the star triangles crossing the adjacent gap
        auto touching = [&](int gap) {
            std::vector<char> touched(static_cast<size_t>(comp_count[static_cast<size_t>(gap)]), 0);
            for (int f : star[static_cast<size_t>(v)])
                if (crosses_gap(f, gap))
                    touched[static_cast<size_t>(
                        comp_of[static_cast<size_t>(gap)][static_cast<size_t>(f)])] = 1;
            for (int f = 0; f < nf; ++f)
                if (in_level_comp[static_cast<size_t>(f)] && crosses_gap(f, gap))
                    touched[static_cast<size_t>(
                        comp_of[static_cast<size_t>(gap)][static_cast<size_t>(f)])] = 1;
            return touched;
        };

        if (is_crit) {
            int reeb_v = static_cast<int>(w.vertices.size());
            reeb_vertex_of_rank[static_cast<size_t>(r)] = reeb_v;
            w.vertices.push_back(
                ReebVertex{std::to_string(v), s.vertices[static_cast<size_t>(v)].value});

            std::vector<char> before_touched, after_touched;
            if (r > 0) {
                before_touched = touching(r - 1);
                for (int c = 0; c < comp_count[static_cast<size_t>(r - 1)]; ++c) {
                    if (!before_touched[static_cast<size_t>(c)]) continue;
                    int lower = lower_of(node_of(r - 1, c));
                    w.edges.push_back(ReebEdge{lower, reeb_v, 0});
                }
            }
            if (r < gaps) {
                after_touched = touching(r);
                for (int c = 0; c < comp_count[static_cast<size_t>(r)]; ++c)
                    if (after_touched[static_cast<size_t>(c)]) set_lower(node_of(r, c), reeb_v);
            }
            // continuation of contours not involved with v
            if (r > 0 && r < gaps) {
                for (int f = 0; f < nf; ++f) {
                    if (!crosses_gap(f, r - 1) || !crosses_gap(f, r)) continue;
                    int cb = comp_of[static_cast<size_t>(r - 1)][static_cast<size_t>(f)];
                    int ca = comp_of[static_cast<size_t>(r)][static_cast<size_t>(f)];
                    if (before_touched[static_cast<size_t>(cb)] ||
                        after_touched[static_cast<size_t>(ca)])
                        continue;
                    int lower = lower_of(node_of(r - 1, cb));
                    segments.unite(node_of(r - 1, cb), node_of(r, ca));
                    set_lower(node_of(r, ca), lower);
                }
            }
        } else {
            // regular passage: every contour continues across
            for (int f = 0; f < nf; ++f) {
                if (!crosses_gap(f, r - 1) || !crosses_gap(f, r)) continue;
                int cb = comp_of[static_cast<size_t>(r - 1)][static_cast<size_t>(f)];
                int ca = comp_of[static_cast<size_t>(r)][static_cast<size_t>(f)];
                int na = node_of(r, ca);
                int nb = node_of(r - 1, cb);
                if (segments.find(na) == segments.find(nb)) continue;
                int lower = lower_of(nb);
                segments.unite(nb, na);
                set_lower(na, lower);
            }
        }
    }

    return w;
}

} // namespace reebforge
