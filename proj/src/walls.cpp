#include "diwallkit/walls.hpp"

#include "diwallkit/error.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

namespace diwallkit {

namespace {

struct Builder {
    Digraph g;
    std::vector<std::pair<double, double>> xy;

    int vertex(std::string name, double x, double y) {
        xy.push_back({x, y});
        return g.add_vertex(std::move(name));
    }
};

std::string cell_name(char tag, int a, int b) {
    std::ostringstream os;
    os << tag << a << '_' << b;
    return os.str();
}

// Follows the unique directed path formed by `edges` from its only source.
DirectedPath walk(const Digraph& g, const std::vector<int>& edges) {
    std::map<int, int> out;
    std::set<int> heads;
    for (int e : edges) {
        out[g.edge(e).tail] = e;
        heads.insert(g.edge(e).head);
    }
    int start = -1;
    for (auto [v, e] : out)
        if (!heads.count(v)) start = v;
    if (start < 0) throw Error(Errc::PreconditionViolated, "edge set has no source");
    DirectedPath p;
    p.vertices.push_back(start);
    for (auto it = out.find(start); it != out.end(); it = out.find(p.vertices.back())) {
        p.edges.push_back(it->second);
        p.vertices.push_back(g.edge(it->second).head);
    }
    if (p.edges.size() != edges.size()) throw Error(Errc::PreconditionViolated, "edge set is not one path");
    return p;
}

void require_even(int k1, int k2) {
    if (k1 < 2 || k2 < 2) throw Error(Errc::TooSmall, "grid needs at least 2 x 2");
    if (k1 % 2 || k2 % 2) throw Error(Errc::BadParity, "grid dimensions must be even");
}

// Rectangular grid with each row and column directed by the callbacks:
// row_right(i) says row i runs left to right, col_down(j) says column j runs
// top to bottom. Rows and columns are 1-based, row 1 on top.
template <class RowRight, class ColDown>
GeneratedGrid rectangular(GridKind kind, int k1, int k2, RowRight row_right, ColDown col_down) {
    Builder b;
    for (int i = 1; i <= k1; ++i)
        for (int j = 1; j <= k2; ++j) b.vertex(cell_name('v', i, j), j, -i);
    auto at = [&](int i, int j) { return grid_vertex(i, j, k2); };
    std::vector<std::vector<int>> rows(k1), cols(k2);
    for (int i = 1; i <= k1; ++i)
        for (int j = 1; j < k2; ++j)
            rows[i - 1].push_back(row_right(i) ? b.g.add_edge(at(i, j), at(i, j + 1))
                                               : b.g.add_edge(at(i, j + 1), at(i, j)));
    for (int j = 1; j <= k2; ++j)
        for (int i = 1; i < k1; ++i)
            cols[j - 1].push_back(col_down(j) ? b.g.add_edge(at(i, j), at(i + 1, j))
                                              : b.g.add_edge(at(i + 1, j), at(i, j)));
    GeneratedGrid out{kind, k1, k2, drawing_from_coordinates(b.g, b.xy), {}, {}};
    const Digraph& g = out.drawing.graph();
    for (int i = 0; i < k1; ++i) {
        if (k2 == 1) out.certificate.horizontal.push_back({{at(i + 1, 1)}, {}});
        else out.certificate.horizontal.push_back(walk(g, rows[i]));
    }
    for (int j = 0; j < k2; ++j) {
        if (k1 == 1) out.certificate.vertical.push_back({{at(1, j + 1)}, {}});
        else out.certificate.vertical.push_back(walk(g, cols[j]));
    }
    return out;
}

// Rows a = 1..k1 of 2*k2 vertices; column pair p = columns 2p-1, 2p.
GeneratedGrid diwall(int k1, int k2) {
    require_even(k1, k2);
    int w = 2 * k2;
    Builder b;
    for (int a = 1; a <= k1; ++a)
        for (int c = 1; c <= w; ++c) b.vertex(cell_name('r', a, c), c, -a);
    auto at = [&](int a, int c) { return (a - 1) * w + (c - 1); };
    std::vector<std::vector<int>> rows(k1), pairs(k2);
    std::vector<int> diagonal;
    for (int a = 1; a <= k1; ++a)
        for (int c = 1; c < w; ++c) {
            int e = a % 2 ? b.g.add_edge(at(a, c), at(a, c + 1)) : b.g.add_edge(at(a, c + 1), at(a, c));
            rows[a - 1].push_back(e);
            if (c % 2) {
                diagonal.push_back(e);
                pairs[(c - 1) / 2].push_back(e);
            }
        }
    for (int p = 1; p <= k2; ++p)
        for (int r = 1; r < k1; ++r) {
            int e;
            if (p % 2) {
                int c = (r + 1) % 2 == 0 ? 2 * p - 1 : 2 * p;
                e = b.g.add_edge(at(r + 1, c), at(r, c));
            } else {
                int c = r % 2 ? 2 * p : 2 * p - 1;
                e = b.g.add_edge(at(r, c), at(r + 1, c));
            }
            pairs[p - 1].push_back(e);
        }
    GeneratedGrid out{GridKind::Diwall, k1, k2, drawing_from_coordinates(b.g, b.xy), {}, diagonal};
    for (auto& r : rows) out.certificate.horizontal.push_back(walk(out.drawing.graph(), r));
    for (auto& q : pairs) out.certificate.vertical.push_back(walk(out.drawing.graph(), q));
    return out;
}

// Columns x = 1..k2, rows y = 1..k1 from the bottom; each cell has a plain
// vertex and a partner joined by a diagonal edge.
GeneratedGrid diwall_classic(int k1, int k2) {
    require_even(k1, k2);
    Builder b;
    for (int y = 1; y <= k1; ++y)
        for (int x = 1; x <= k2; ++x) {
            bool even = (x + y) % 2 == 0;
            b.vertex(cell_name('p', x, y), x - 0.2, y + (even ? 0.2 : -0.2));
            b.vertex(cell_name('q', x, y), x + 0.2, y + (even ? -0.2 : 0.2));
        }
    auto plain = [&](int x, int y) { return 2 * ((y - 1) * k2 + (x - 1)); };
    auto partner = [&](int x, int y) { return plain(x, y) + 1; };
    std::vector<std::vector<int>> rows(k1), cols(k2);
    std::vector<int> diagonal;
    for (int y = 1; y <= k1; ++y)
        for (int x = 1; x <= k2; ++x) {
            int e = y % 2 ? b.g.add_edge(partner(x, y), plain(x, y)) : b.g.add_edge(plain(x, y), partner(x, y));
            diagonal.push_back(e);
            rows[y - 1].push_back(e);
            cols[x - 1].push_back(e);
        }
    for (int x = 1; x <= k2; ++x)
        for (int y = 1; y <= k1; ++y) {
            int e = -1;
            if (x % 2) {
                if (y < k1)
                    e = y % 2 ? b.g.add_edge(plain(x, y), plain(x, y + 1))
                              : b.g.add_edge(partner(x, y), partner(x, y + 1));
            } else if (y % 2 == 0) {
                e = b.g.add_edge(partner(x, y), partner(x, y - 1));
            } else if (y >= 3) {
                e = b.g.add_edge(plain(x, y), plain(x, y - 1));
            }
            if (e >= 0) cols[x - 1].push_back(e);
        }
    for (int y = 1; y <= k1; ++y)
        for (int x = 1; x < k2; ++x)
            rows[y - 1].push_back(y % 2 ? b.g.add_edge(plain(x + 1, y), partner(x, y))
                                        : b.g.add_edge(partner(x, y), plain(x + 1, y)));
    GeneratedGrid out{GridKind::DiwallClassic, k1, k2, drawing_from_coordinates(b.g, b.xy), {}, diagonal};
    for (int y = k1; y >= 1; --y) out.certificate.horizontal.push_back(walk(out.drawing.graph(), rows[y - 1]));
    for (auto& c : cols) out.certificate.vertical.push_back(walk(out.drawing.graph(), c));
    return out;
}

// k1 nested clockwise cycles (1 innermost) crossed by k2 spokes, even spokes
// pointing outwards.
GeneratedGrid cylindrical(int k1, int k2) {
    if (k1 < 1 || k2 < 4) throw Error(Errc::TooSmall, "cylindrical grid needs a cycle and 4 spokes");
    if (k2 % 2) throw Error(Errc::BadParity, "number of spokes must be even");
    Builder b;
    for (int c = 1; c <= k1; ++c)
        for (int s = 0; s < k2; ++s) {
            double t = -2 * std::numbers::pi * s / k2;
            b.vertex(cell_name('c', c, s), c * std::cos(t), c * std::sin(t));
        }
    auto at = [&](int c, int s) { return (c - 1) * k2 + s; };
    std::vector<std::vector<int>> cycles(k1), spokes(k2);
    for (int c = 1; c <= k1; ++c)
        for (int s = 0; s < k2; ++s) cycles[c - 1].push_back(b.g.add_edge(at(c, s), at(c, (s + 1) % k2)));
    for (int s = 0; s < k2; ++s)
        for (int c = 1; c < k1; ++c)
            spokes[s].push_back(s % 2 == 0 ? b.g.add_edge(at(c, s), at(c + 1, s)) : b.g.add_edge(at(c + 1, s), at(c, s)));
    GeneratedGrid out{GridKind::Cylindrical, k1, k2, drawing_from_coordinates(b.g, b.xy), {}, {}};
    for (int c = 1; c <= k1; ++c) {
        DirectedPath p;
        for (int s = 0; s < k2; ++s) p.vertices.push_back(at(c, s));
        p.edges = cycles[c - 1];
        p.cyclic = true;
        out.certificate.horizontal.push_back(std::move(p));
    }
    for (int s = 0; s < k2; ++s) {
        if (k1 == 1) out.certificate.vertical.push_back({{at(1, s)}, {}});
        else out.certificate.vertical.push_back(walk(out.drawing.graph(), spokes[s]));
    }
    return out;
}

} // namespace

GridKind parse_grid_kind(std::string_view name) {
    static const std::map<std::string_view, GridKind> kinds{
        {"diwall", GridKind::Diwall},           {"diwall-classic", GridKind::DiwallClassic},
        {"alternating", GridKind::Alternating}, {"semigrid", GridKind::Semigrid},
        {"cylindrical", GridKind::Cylindrical}, {"acyclicA", GridKind::AcyclicA},
        {"acyclicB", GridKind::AcyclicB},
    };
    auto it = kinds.find(name);
    if (it == kinds.end()) throw Error(Errc::ParseError, "unknown grid kind '" + std::string(name) + "'");
    return it->second;
}

std::string_view grid_kind_name(GridKind kind) {
    switch (kind) {
    case GridKind::Diwall: return "diwall";
    case GridKind::DiwallClassic: return "diwall-classic";
    case GridKind::Alternating: return "alternating";
    case GridKind::Semigrid: return "semigrid";
    case GridKind::Cylindrical: return "cylindrical";
    case GridKind::AcyclicA: return "acyclicA";
    case GridKind::AcyclicB: return "acyclicB";
    }
    return "?";
}

DirectedPath DirectedPath::from_edges(const Digraph& g, const std::vector<int>& edges) {
    if (edges.empty()) throw Error(Errc::NotPath, "empty edge sequence");
    DirectedPath p;
    p.edges = edges;
    p.vertices.push_back(g.edge(edges.front()).tail);
    for (int e : edges) p.vertices.push_back(g.edge(e).head);
    return p;
}

CheckResult check_directed_path(const Digraph& g, const DirectedPath& p) {
    std::size_t n = p.vertices.size();
    if (n == 0) return CheckResult::fail("path has no vertices");
    if (p.edges.size() != (p.cyclic ? n : n - 1)) return CheckResult::fail("edge count does not match vertex count");
    std::set<int> seen;
    for (int v : p.vertices) {
        if (v < 0 || v >= g.vertex_count()) return CheckResult::fail("vertex out of range");
        if (!seen.insert(v).second) return CheckResult::fail("repeated vertex " + g.vertex_name(v));
    }
    for (std::size_t t = 0; t < p.edges.size(); ++t) {
        int e = p.edges[t];
        if (e < 0 || e >= g.edge_count()) return CheckResult::fail("edge out of range");
        if (g.edge(e).tail != p.vertices[t] || g.edge(e).head != p.vertices[(t + 1) % n])
            return CheckResult::fail("edge " + g.edge_name(e) + " is not directed along the path");
    }
    return {};
}

GeneratedGrid generate(GridKind kind, int k1, int k2) {
    switch (kind) {
    case GridKind::Diwall: return diwall(k1, k2);
    case GridKind::DiwallClassic: return diwall_classic(k1, k2);
    case GridKind::Alternating:
        require_even(k1, k2);
        return rectangular(kind, k1, k2, [](int i) { return i % 2 == 1; }, [](int j) { return j % 2 == 0; });
    case GridKind::Semigrid:
        require_even(k1, k2);
        return rectangular(
            kind, k1, k2, [k1](int i) { return i <= k1 / 2; }, [k2](int j) { return j > k2 / 2; });
    case GridKind::AcyclicA:
    case GridKind::AcyclicB:
        if (k1 < 1 || k2 < 1) throw Error(Errc::TooSmall, "grid needs at least 1 x 1");
        return rectangular(kind, k1, k2, [](int) { return true; },
                           [kind](int j) { return kind == GridKind::AcyclicA || j % 2 == 1; });
    case GridKind::Cylindrical: return cylindrical(k1, k2);
    }
    throw Error(Errc::PreconditionViolated, "unknown grid kind");
}

namespace {

CheckResult check_family(const Digraph& g, const std::vector<DirectedPath>& family, const char* what) {
    std::vector<int> owner(g.vertex_count(), -1);
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (auto r = check_directed_path(g, family[i]); !r) {
            std::ostringstream os;
            os << what << ' ' << i + 1 << ": " << r.reason;
            return CheckResult::fail(os.str());
        }
        for (int v : family[i].vertices) {
            if (owner[v] >= 0) {
                std::ostringstream os;
                os << what << ' ' << owner[v] + 1 << " and " << i + 1 << " share vertex " << g.vertex_name(v);
                return CheckResult::fail(os.str());
            }
            owner[v] = static_cast<int>(i);
        }
    }
    return {};
}

std::string cell(int i, int j) {
    std::ostringstream os;
    os << '(' << i << ',' << j << ')';
    return os.str();
}

} // namespace

CheckResult verify_grid(const Digraph& g, const GridCertificate& c, bool shared_edge) {
    if (auto r = check_family(g, c.horizontal, "horizontal"); !r) return r;
    if (auto r = check_family(g, c.vertical, "vertical"); !r) return r;
    for (std::size_t i = 0; i < c.horizontal.size(); ++i)
        for (std::size_t j = 0; j < c.vertical.size(); ++j) {
            const auto& h = c.horizontal[i];
            const auto& v = c.vertical[j];
            std::set<int> hv(h.vertices.begin(), h.vertices.end()), he(h.edges.begin(), h.edges.end());
            int common_v = 0, common_e = 0;
            for (int x : v.vertices) common_v += hv.count(x);
            for (int e : v.edges) common_e += he.count(e);
            bool ok = shared_edge ? common_v == 2 && common_e == 1 : common_v == 1 && common_e == 0;
            if (!ok) return CheckResult::fail("paths " + cell(int(i) + 1, int(j) + 1) + " meet wrongly");
        }
    std::vector<char> covered(g.edge_count(), 0);
    for (const auto* fam : {&c.horizontal, &c.vertical})
        for (const auto& p : *fam)
            for (int e : p.edges) covered[e] = 1;
    for (int e = 0; e < g.edge_count(); ++e)
        if (!covered[e]) return CheckResult::fail("edge " + g.edge_name(e) + " lies on no path");
    return {};
}

CheckResult verify_layout(const Digraph& g, const DiwallLayout& layout, int k) {
    if (k < 1 || static_cast<int>(layout.P.size()) != k || static_cast<int>(layout.Q.size()) != k)
        return CheckResult::fail("layout does not have k horizontal and k vertical paths");
    for (const auto* fam : {&layout.P, &layout.Q})
        for (const auto& p : *fam)
            if (p.cyclic) return CheckResult::fail("layout paths must not be cycles");
    if (auto r = check_family(g, layout.P, "P"); !r) return r;
    if (auto r = check_family(g, layout.Q, "Q"); !r) return r;

    // start position of R_ij along P_i and along Q_j
    std::vector<std::vector<int>> along_p(k, std::vector<int>(k)), along_q(k, std::vector<int>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const auto& P = layout.P[i];
            const auto& Q = layout.Q[j];
            std::map<int, int> qpos;
            for (std::size_t t = 0; t < Q.vertices.size(); ++t) qpos[Q.vertices[t]] = static_cast<int>(t);
            std::vector<int> ppos;
            for (std::size_t t = 0; t < P.vertices.size(); ++t)
                if (qpos.count(P.vertices[t])) ppos.push_back(static_cast<int>(t));
            std::string where = "R" + cell(i + 1, j + 1);
            if (ppos.empty()) return CheckResult::fail(where + " is empty");
            int a = ppos.front(), len = static_cast<int>(ppos.size());
            if (ppos.back() - a + 1 != len) return CheckResult::fail(where + " is not contiguous along P");
            int c = qpos[P.vertices[a]];
            for (int t = 0; t < len; ++t) {
                if (qpos[P.vertices[a + t]] != c + t) return CheckResult::fail(where + " is not a path");
                if (t + 1 < len && P.edges[a + t] != Q.edges[c + t]) return CheckResult::fail(where + " is not a path");
            }
            along_p[i][j] = a;
            along_q[j][i] = c;
        }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j + 1 < k; ++j) {
            bool forward = (i + 1) % 2 == 1;
            bool ok = forward ? along_p[i][j] < along_p[i][j + 1] : along_p[i][j] > along_p[i][j + 1];
            if (!ok) return CheckResult::fail("wrong order of intersections along P" + std::to_string(i + 1));
        }
    for (int j = 0; j < k; ++j)
        for (int i = 0; i + 1 < k; ++i) {
            bool forward = (j + 1) % 2 == 0;
            bool ok = forward ? along_q[j][i] < along_q[j][i + 1] : along_q[j][i] > along_q[j][i + 1];
            if (!ok) return CheckResult::fail("wrong order of intersections along Q" + std::to_string(j + 1));
        }
    return {};
}

DiwallLayout diwall_layout(const GeneratedGrid& wall) {
    return {wall.certificate.horizontal, wall.certificate.vertical};
}

Digraph layout_union(const Digraph& g, const DiwallLayout& layout) {
    std::set<int> edges;
    for (const auto* fam : {&layout.P, &layout.Q})
        for (const auto& p : *fam) edges.insert(p.edges.begin(), p.edges.end());
    std::vector<int> list(edges.begin(), edges.end());
    return g.edge_subgraph(list);
}

// ---------------------------------------------------------------------------
// Box systems

namespace {

// Shortest directed path inside `box` from a to b (edge ids); neighbours are
// scanned by increasing vertex id so ties resolve to the smallest ids.
struct BoxRouter {
    const Digraph& g;
    std::vector<std::vector<std::pair<int, int>>> out, in;  // (neighbour, edge)

    explicit BoxRouter(const Digraph& graph) : g(graph), out(graph.vertex_count()), in(graph.vertex_count()) {
        for (int e = 0; e < g.edge_count(); ++e) {
            out[g.edge(e).tail].push_back({g.edge(e).head, e});
            in[g.edge(e).head].push_back({g.edge(e).tail, e});
        }
        for (auto& l : out) std::sort(l.begin(), l.end());
        for (auto& l : in) std::sort(l.begin(), l.end());
    }

    // BFS from all `sources` (in order) through vertices allowed by `pass`,
    // stopping at `target`. With `backwards` edges are followed head to tail.
    // Returns the edges from the reached source to the target in travel order,
    // or nullopt.
    template <class Pass>
    std::optional<std::pair<int, std::vector<int>>> search(const std::vector<int>& sources, int target, Pass pass,
                                                            bool backwards) const {
        std::map<int, std::pair<int, int>> parent;  // vertex -> (previous, edge)
        std::deque<int> queue;
        for (int s : sources)
            if (!parent.count(s)) {
                parent[s] = {-1, -1};
                queue.push_back(s);
            }
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            if (x == target) {
                std::vector<int> edges;
                int y = x;
                while (parent[y].first >= 0) {
                    edges.push_back(parent[y].second);
                    y = parent[y].first;
                }
                if (!backwards) std::reverse(edges.begin(), edges.end());
                return std::pair{y, edges};
            }
            for (auto [y, e] : (backwards ? in : out)[x]) {
                if (parent.count(y) || !pass(y)) continue;
                parent[y] = {x, e};
                queue.push_back(y);
            }
        }
        return std::nullopt;
    }
};

struct GammaIndex {
    Digraph gamma;
    std::map<std::pair<int, int>, int> edge_between;

    GammaIndex(int k1, int k2) : gamma(generate(GridKind::Alternating, k1, k2).drawing.graph()) {
        for (int e = 0; e < gamma.edge_count(); ++e) edge_between[{gamma.edge(e).tail, gamma.edge(e).head}] = e;
    }
};

} // namespace

CheckResult verify_box_system(const Digraph& g, const BoxSystem& bs) {
    if (bs.k1 < 2 || bs.k2 < 2 || bs.k1 % 2 || bs.k2 % 2)
        return CheckResult::fail("box system dimensions must be even and at least 2");
    GammaIndex gi(bs.k1, bs.k2);
    const Digraph& gamma = gi.gamma;
    if (static_cast<int>(bs.box.size()) != gamma.vertex_count() ||
        static_cast<int>(bs.edge_image.size()) != gamma.edge_count())
        return CheckResult::fail("box system size does not match the grid");
    std::vector<int> owner(g.vertex_count(), -1);
    for (int v = 0; v < gamma.vertex_count(); ++v) {
        if (bs.box[v].empty()) return CheckResult::fail("box of " + gamma.vertex_name(v) + " is empty");
        for (int x : bs.box[v]) {
            if (x < 0 || x >= g.vertex_count()) return CheckResult::fail("box vertex out of range");
            if (owner[x] >= 0) return CheckResult::fail("boxes overlap at " + g.vertex_name(x));
            owner[x] = v;
        }
    }
    for (int e = 0; e < gamma.edge_count(); ++e) {
        int f = bs.edge_image[e];
        if (f < 0 || f >= g.edge_count()) return CheckResult::fail("edge image out of range");
        if (owner[g.edge(f).tail] != gamma.edge(e).tail || owner[g.edge(f).head] != gamma.edge(e).head)
            return CheckResult::fail("image of " + gamma.edge_name(e) + " does not join the right boxes");
    }
    for (int v = 0; v < gamma.vertex_count(); ++v) {
        std::vector<char> mask(g.vertex_count(), 0);
        for (int x : bs.box[v]) mask[x] = 1;
        for (int e = 0; e < gamma.edge_count(); ++e) {
            if (gamma.edge(e).head != v) continue;
            auto reach = reachable_from(g, g.edge(bs.edge_image[e]).head, mask);
            for (int f = 0; f < gamma.edge_count(); ++f)
                if (gamma.edge(f).tail == v && !reach[g.edge(bs.edge_image[f]).tail])
                    return CheckResult::fail("no route in box " + gamma.vertex_name(v) + " from " + gamma.edge_name(e) +
                                             " to " + gamma.edge_name(f));
        }
    }
    return {};
}

BoxSystem identity_box_system(int k1, int k2) {
    GammaIndex gi(k1, k2);
    BoxSystem bs{k1, k2, {}, {}};
    for (int v = 0; v < gi.gamma.vertex_count(); ++v) bs.box.push_back({v});
    for (int e = 0; e < gi.gamma.edge_count(); ++e) bs.edge_image.push_back(e);
    return bs;
}

DiwallLayout box_to_layout(const Digraph& g, const BoxSystem& bs) {
    int k = bs.k1;
    if (k < 2 || k % 2 || bs.k2 != 3 * k) throw Error(Errc::PreconditionViolated, "box system must be k x 3k, k even");
    GammaIndex gi(bs.k1, bs.k2);
    const Digraph& gamma = gi.gamma;
    if (static_cast<int>(bs.box.size()) != gamma.vertex_count() ||
        static_cast<int>(bs.edge_image.size()) != gamma.edge_count())
        throw Error(Errc::PreconditionViolated, "box system size does not match the grid");
    int width = bs.k2;
    BoxRouter router(g);
    auto v_at = [&](int i, int j) { return grid_vertex(i, j, width); };
    auto gamma_edge = [&](int a, int b) {
        auto it = gi.edge_between.find({a, b});
        if (it == gi.edge_between.end()) throw Error(Errc::PreconditionViolated, "grid walk uses a missing edge");
        return it->second;
    };
    auto image = [&](int e) { return g.edge(bs.edge_image[e]); };
    auto fail = [&](int v) {
        return Error(Errc::RoutingFailed, "box of " + gamma.vertex_name(v) + " lacks an internal path");
    };
    auto in_box = [&](int v) {
        std::vector<char> mask(g.vertex_count(), 0);
        for (int x : bs.box[v]) mask[x] = 1;
        return mask;
    };

    // Horizontal in/out edges of each grid vertex (-1 at row ends).
    std::vector<int> hin(gamma.vertex_count(), -1), hout(gamma.vertex_count(), -1);
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j < width; ++j) {
            int a = v_at(i, j), b = v_at(i, j + 1);
            int e = i % 2 ? gamma_edge(a, b) : gamma_edge(b, a);
            hout[gamma.edge(e).tail] = e;
            hin[gamma.edge(e).head] = e;
        }

    auto plain = [&](int v, int from, int to) {
        auto mask = in_box(v);
        auto r = router.search({from}, to, [&](int y) { return mask[y] != 0; }, false);
        if (!r) throw fail(v);
        return r->second;
    };
    std::map<int, std::vector<int>> row_link;  // W(v): link of the two horizontal edges
    auto horizontal_link = [&](int v) -> const std::vector<int>& {
        auto it = row_link.find(v);
        if (it == row_link.end())
            it = row_link.emplace(v, plain(v, image(hin[v]).head, image(hout[v]).tail)).first;
        return it->second;
    };

    // Interior edges of L(e,f), e entering and f leaving grid vertex v.
    auto link = [&](int e, int f) -> std::vector<int> {
        int v = gamma.edge(e).head;
        int from = image(e).head, to = image(f).tail;
        bool has_x = hin[v] >= 0 && hout[v] >= 0;
        if (!has_x || (e != hin[v] && f != hout[v])) return plain(v, from, to);
        const auto& w = horizontal_link(v);
        if (e == hin[v] && f == hout[v]) return w;
        std::vector<int> wv{image(hin[v]).head};
        for (int x : w) wv.push_back(g.edge(x).head);
        std::map<int, int> index;
        for (std::size_t t = 0; t < wv.size(); ++t) index[wv[t]] = static_cast<int>(t);
        auto mask = in_box(v);
        auto off_w = [&](int y) { return mask[y] != 0 && !index.count(y); };
        if (e == hin[v]) {
            // a prefix of W, then a minimal path leaving W
            if (index.count(to)) return {w.begin(), w.begin() + index[to]};
            auto r = router.search(wv, to, off_w, false);
            if (!r) throw fail(v);
            std::vector<int> out(w.begin(), w.begin() + index[r->first]);
            out.insert(out.end(), r->second.begin(), r->second.end());
            return out;
        }
        // a minimal path joining W, then a suffix of W
        if (index.count(from)) return {w.begin() + index[from], w.end()};
        auto r = router.search(wv, from, off_w, true);
        if (!r) throw fail(v);
        std::vector<int> out = r->second;
        out.insert(out.end(), w.begin() + index[r->first], w.end());
        return out;
    };

    auto trace = [&](const std::vector<int>& cells) {
        std::vector<int> grid_edges;
        for (std::size_t t = 0; t + 1 < cells.size(); ++t) grid_edges.push_back(gamma_edge(cells[t], cells[t + 1]));
        std::vector<int> edges{bs.edge_image[grid_edges[0]]};
        for (std::size_t t = 0; t + 1 < grid_edges.size(); ++t) {
            auto l = link(grid_edges[t], grid_edges[t + 1]);
            edges.insert(edges.end(), l.begin(), l.end());
            edges.push_back(bs.edge_image[grid_edges[t + 1]]);
        }
        return DirectedPath::from_edges(g, edges);
    };

    DiwallLayout out;
    for (int i = 1; i <= k; ++i) {
        std::vector<int> cells;
        for (int j = 1; j <= width; ++j) cells.push_back(v_at(i, i % 2 ? j : width + 1 - j));
        out.P.push_back(trace(cells));
    }
    for (int j = 1; j <= width; ++j) {
        std::vector<int> cells;
        if (j % 6 == 0) {
            cells = {v_at(1, j - 1), v_at(1, j)};
            for (int r = 2; r < k; ++r) {
                bool left = r % 2 == 0;
                for (int c : {0, 1, 2}) cells.push_back(v_at(r, left ? j - c : j - 2 + c));
            }
            cells.push_back(v_at(k, j));
            cells.push_back(v_at(k, j - 1));
        } else if (j % 6 == 1) {
            cells = {v_at(k, j + 1), v_at(k, j)};
            for (int r = k - 1; r > 1; --r) {
                bool right = r % 2 == 1;
                for (int c : {0, 1, 2}) cells.push_back(v_at(r, right ? j + c : j + 2 - c));
            }
            cells.push_back(v_at(1, j));
            cells.push_back(v_at(1, j + 1));
        } else {
            continue;
        }
        out.Q.push_back(trace(cells));
    }
    return out;
}

} // namespace diwallkit
