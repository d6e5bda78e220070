#include "diwallkit/blowup.hpp"
#include "diwallkit/duality.hpp"
#include "diwallkit/enumerate.hpp"
#include "diwallkit/error.hpp"
#include "diwallkit/io.hpp"
#include "diwallkit/minors.hpp"
#include "diwallkit/multicut.hpp"
#include "diwallkit/rings.hpp"
#include "diwallkit/walls.hpp"
#include "diwallkit/width.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace diwallkit;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitScale = 3;
constexpr int kExitParse = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::ParseError, "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Didrawing load(const std::string& path) {
    try {
        return parse_didrawing(read_file(path));
    } catch (const Error& e) {
        // Rotations that fail validation are input errors too.
        std::string what = e.what();
        if (e.code() == Errc::ParseError) what = what.substr(what.find(": ") + 2);
        throw Error(Errc::ParseError, path + ": " + what);
    }
}

// Writes a drawing after checking that the text parses back to the same map.
void emit(const Didrawing& g, const std::string& format, const std::string& out) {
    std::string text = format == "dot" ? write_dot(g) : write_didrawing(g);
    if (format != "dot" && !map_isomorphic(parse_didrawing(text), g))
        throw Error(Errc::PreconditionViolated, "emitted drawing does not parse back");
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw Error(Errc::PreconditionViolated, "cannot write " + out);
    f << text;
}

int vertex_ref(const Digraph& g, const std::string& ref) {
    if (auto v = g.find_vertex(ref)) return *v;
    try {
        std::size_t used = 0;
        int v = std::stoi(ref, &used);
        if (used == ref.size() && v >= 0 && v < g.vertex_count()) return v;
    } catch (const std::exception&) {
    }
    throw Error(Errc::ParseError, "unknown vertex " + ref);
}

std::string darts_text(const Digraph& g, const std::vector<int>& darts) {
    std::ostringstream os;
    for (std::size_t i = 0; i < darts.size(); ++i) os << (i ? " " : "") << dart_token(g, darts[i]);
    return os.str();
}

std::string edges_text(const Digraph& g, const std::vector<int>& edges) {
    std::ostringstream os;
    for (std::size_t i = 0; i < edges.size(); ++i) os << (i ? " " : "") << g.edge_name(edges[i]);
    return os.str();
}

void print_carving(const Carving& c) {
    std::cout << "carving nodes " << c.node_count << "\n";
    for (auto [a, b] : c.tree_edges) std::cout << "tree " << a << ' ' << b << "\n";
    for (int x = 0; x < c.ground_size(); ++x) std::cout << "leaf " << x << ' ' << c.leaf[x] << "\n";
}

void require(const CheckResult& r, const std::string& what) {
    if (!r.ok) throw Error(Errc::PreconditionViolated, what + ": " + r.reason);
}

// One fuzz round: several invariants on a random map.
std::string fuzz_round(std::mt19937_64& rng, int max_edges) {
    int edges = std::uniform_int_distribution<int>(1, max_edges)(rng);
    Didrawing g = random_map(rng, edges);
    auto r = dual(g, DualSide::Right);
    if (!map_isomorphic(dual(r.dual, DualSide::Left).dual, g)) return "left of right dual differs";
    std::uniform_int_distribution<int> pick(0, g.vertex_count() - 1);
    int u = pick(rng), v = pick(rng);
    if (u != v) {
        Pattern pi;
        int len = std::uniform_int_distribution<int>(1, 3)(rng);
        for (int i = 0; i < len; ++i) pi.push_back(rng() & 1 ? 1 : -1);
        auto s = find_multicut_or_path(g.graph(), u, v, pi);
        if (s.multicut && !verify_multicut(g.graph(), u, v, pi, *s.multicut)) return "multicut fails verification";
        if (!s.multicut && s.witness_path.empty()) return "no multicut and no witness";
    }
    if (is_two_weak(g.graph()) && !g.graph().has_loop() && g.vertex_count() <= 10) {
        auto w = diwidth_exact(g);
        if (diwidth_of(g, w.carving) != w.width) return "diwidth carving does not certify its width";
    }
    if (bridges(g.graph()).empty() && g.vertex_count() >= 2) {
        Blowup b = blow_up(g);
        if (!map_isomorphic(recover(b), g)) return "blowup does not recover";
        if (interleaving(b.J) > 2) return "blowup interleaving above two";
    }
    return {};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Directed planar width and grid toolkit"};
    app.require_subcommand(1);
    bool override_scale = false;
    app.add_flag("--scale-override", override_scale, "Lift the soft scale limits");

    std::string format = "json", out;
    auto add_output = [&](CLI::App* c) {
        c->add_option("-f,--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
        c->add_option("-o,--output", out, "Output file (default stdout)");
    };

    auto* gen = app.add_subcommand("gen", "Generate a grid family member");
    std::string kind = "diwall";
    int k1 = 2, k2 = 0;
    gen->add_option("--kind", kind, "diwall, diwall-classic, alternating, semigrid, cylindrical, acyclic-a, acyclic-b");
    gen->add_option("-k", k1, "Rows (or cycles)")->required();
    gen->add_option("--k2", k2, "Columns (default: same as -k)");
    add_output(gen);

    std::string input, input2;
    auto* dual_cmd = app.add_subcommand("dual", "Directed dual of a drawing");
    std::string side = "right";
    dual_cmd->add_option("input", input)->required();
    dual_cmd->add_option("--side", side)->check(CLI::IsMember({"right", "left"}));
    add_output(dual_cmd);

    auto* mc = app.add_subcommand("multicut", "Multicut with a pattern, or a path refuting it");
    std::string from, to, pattern;
    mc->add_option("input", input)->required();
    mc->add_option("--from", from)->required();
    mc->add_option("--to", to)->required();
    mc->add_option("--pattern", pattern, "e.g. +-+")->required();
    bool connect = false;
    mc->add_flag("--connectify", connect, "Make prefixes and suffixes weakly connected");

    auto* ring = app.add_subcommand("ring", "Alternating ring or low-change dual path");
    std::string ring_vertex, first_dart;
    std::vector<int> arc_sizes;
    int ring_k = 1;
    ring->add_option("input", input)->required();
    ring->add_option("--vertex", ring_vertex)->required();
    ring->add_option("--arcs", arc_sizes, "Four block sizes, anticlockwise")->expected(4)->delimiter(',')->required();
    ring->add_option("--first", first_dart, "First dart of R1 (default: first in the rotation)");
    ring->add_option("-k", ring_k)->required();

    auto* emb = app.add_subcommand("embeds", "Whether G contains a subdivision of H");
    emb->add_option("G", input)->required();
    emb->add_option("H", input2)->required();

    auto* dw = app.add_subcommand("diwidth", "Diwidth of a 2-weak drawing");
    bool exact = false;
    int greedy = -1;
    dw->add_option("input", input)->required();
    dw->add_flag("--exact", exact);
    dw->add_option("--greedy", greedy, "Greedy search up to this width");
    bool show_carving = false;
    dw->add_flag("--carving", show_carving, "Print the certifying carving");

    auto* dtw = app.add_subcommand("dartwidth", "Dart-width of a bridgeless drawing");
    bool via_blowup = false;
    dtw->add_option("input", input)->required();
    dtw->add_flag("--via-blowup", via_blowup, "Upper bound through the blowup");
    dtw->add_flag("--carving", show_carving, "Print the certifying carving");

    auto* bl = app.add_subcommand("blowup", "Blowup of a 2-edge-connected drawing");
    bl->add_option("input", input)->required();
    add_output(bl);

    auto* minor = app.add_subcommand("minor", "Directed minor test");
    std::string minor_kind = "semi-strong";
    minor->add_option("--kind", minor_kind)->check(CLI::IsMember({"semi-strong"}));
    minor->add_option("H", input2)->required();
    minor->add_option("G", input)->required();

    auto* fuzz = app.add_subcommand("fuzz", "Randomised invariant checks");
    std::uint64_t seed = 0;
    int rounds = 200, fuzz_edges = 8;
    fuzz->add_option("--seed", seed)->required();
    fuzz->add_option("--rounds", rounds);
    fuzz->add_option("--max-edges", fuzz_edges);

    auto* report = app.add_subcommand("report", "CSV summary of the grid families");
    std::vector<int> report_ks{2, 4};
    report->add_option("-k", report_ks, "Sizes")->delimiter(',');
    report->add_option("-o,--output", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }
    if (override_scale) setenv("DIWALLKIT_SCALE_OVERRIDE", "1", 1);

    try {
        if (*gen) {
            auto grid = generate(parse_grid_kind(kind), k1, k2 ? k2 : k1);
            bool shared = !grid.diagonal_edges.empty();
            require(verify_grid(grid.drawing.graph(), grid.certificate, shared), "generated grid");
            emit(grid.drawing, format, out);
        } else if (*dual_cmd) {
            auto g = load(input);
            emit(dual(g, side == "left" ? DualSide::Left : DualSide::Right).dual, format, out);
        } else if (*mc) {
            auto g = load(input);
            const Digraph& d = g.graph();
            int u = vertex_ref(d, from), v = vertex_ref(d, to);
            Pattern pi = parse_pattern(pattern);
            auto r = find_multicut_or_path(d, u, v, pi);
            if (r.multicut) {
                Multicut m = connect ? connectify(d, u, v, *r.multicut) : *r.multicut;
                if (!verify_multicut(d, u, v, pi, m)) throw Error(Errc::InvalidMulticut, "multicut fails verification");
                std::cout << "multicut\n";
                for (int i = 0; i <= m.k(); ++i) {
                    std::cout << "A" << i << ":";
                    for (int x : m.parts[i]) std::cout << ' ' << d.vertex_name(x);
                    std::cout << "\n";
                }
            } else {
                std::cout << "path " << darts_text(d, r.witness_path) << "\n";
            }
        } else if (*ring) {
            auto g = load(input);
            int v = vertex_ref(g.graph(), ring_vertex);
            if (g.rotation(v).empty()) throw Error(Errc::PreconditionViolated, "vertex has no darts");
            int first = g.rotation(v).front();
            if (!first_dart.empty()) {
                first = -1;
                for (int d : g.rotation(v))
                    if (dart_token(g.graph(), d) == first_dart) first = d;
                if (first < 0) throw Error(Errc::ParseError, "no dart " + first_dart + " at the vertex");
            }
            auto arcs = make_arcs(g, v, first, {arc_sizes[0], arc_sizes[1], arc_sizes[2], arc_sizes[3]});
            auto r = find_ring(g, arcs, ring_k);
            if (r.ring) {
                require(check_ring_from(g, *r.ring, arcs), "ring");
                std::cout << "ring " << r.ring->size() << (r.ring->disjointed ? " disjointed" : "") << "\n";
                for (const auto& c : r.ring->cycles) std::cout << "cycle " << edges_text(g.graph(), c) << "\n";
            } else {
                std::cout << "dual-path change " << r.change_number << "\n";
                std::cout << "darts " << darts_text(g.graph(), r.dual_path) << "\n";
            }
        } else if (*emb) {
            Digraph G = load(input).graph(), H = load(input2).graph();
            auto m = embeds(G, H);
            if (m) require(verify_model(G, H, *m, false), "model");
            std::cout << (m ? "true" : "false") << "\n";
            if (m)
                for (int e = 0; e < H.edge_count(); ++e)
                    std::cout << H.edge_name(e) << ": " << edges_text(G, m->paths[e]) << "\n";
        } else if (*dw) {
            auto g = load(input);
            std::optional<WidthResult> r;
            if (exact || greedy < 0) {
                r = diwidth_exact(g);
            } else {
                r = diwidth_greedy_bound(g, greedy);
                if (!r) {
                    std::cout << "greedy found no carving of width <= " << greedy << "\n";
                    return kExitValidation;
                }
            }
            if (diwidth_of(g, r->carving) > r->width) throw Error(Errc::PreconditionViolated, "carving check failed");
            std::cout << r->width << "\n";
            if (show_carving) print_carving(r->carving);
        } else if (*dtw) {
            auto g = load(input);
            WidthResult r = via_blowup ? dart_width_via_blowup(g) : dart_width_exact(g);
            auto w = dart_width_of(r.carving, sensible_partitions(g));
            if (!w || *w > r.width) throw Error(Errc::PreconditionViolated, "carving check failed");
            std::cout << r.width << "\n";
            if (show_carving) print_carving(r.carving);
        } else if (*bl) {
            auto g = load(input);
            Blowup b = blow_up(g);
            if (!map_isomorphic(recover(b), g)) throw Error(Errc::PreconditionViolated, "blowup does not recover");
            emit(b.J, format, out);
        } else if (*minor) {
            Digraph G = load(input).graph(), H = load(input2).graph();
            auto m = semi_strong_minor_model(H, G);
            if (m) require(verify_model(G, H, *m, true), "model");
            std::cout << (m ? "true" : "false") << "\n";
            if (m)
                for (int h = 0; h < H.vertex_count(); ++h) {
                    std::cout << H.vertex_name(h) << ":";
                    for (int x : m->branch[h]) std::cout << ' ' << G.vertex_name(x);
                    std::cout << "\n";
                }
        } else if (*fuzz) {
            std::mt19937_64 rng(seed);
            for (int i = 0; i < rounds; ++i) {
                std::string fail = fuzz_round(rng, fuzz_edges);
                if (!fail.empty()) {
                    std::cout << "round " << i << ": " << fail << "\n";
                    return kExitValidation;
                }
            }
            std::cout << "ok " << rounds << " rounds, seed " << seed << "\n";
        } else if (*report) {
            std::ostringstream csv;
            csv << "kind,k,vertices,edges,interleaving,two_weak,diwidth_exact,diwidth_greedy\n";
            for (GridKind gk : {GridKind::Diwall, GridKind::Alternating, GridKind::Semigrid})
                for (int k : report_ks) {
                    auto grid = generate(gk, k, k);
                    const Didrawing& g = grid.drawing;
                    bool two_weak = is_two_weak(g.graph());
                    csv << grid_kind_name(gk) << ',' << k << ',' << g.vertex_count() << ',' << g.edge_count() << ','
                        << interleaving(g) << ',' << (two_weak ? 1 : 0) << ',';
                    if (two_weak && g.vertex_count() <= kExactWidthMaxElements) csv << diwidth_exact(g).width;
                    csv << ',';
                    if (two_weak)
                        if (auto b = diwidth_greedy_bound(g, 2 * g.vertex_count())) csv << b->width;
                    csv << "\n";
                }
            if (out.empty() || out == "-") {
                std::cout << csv.str();
            } else {
                std::ofstream f(out, std::ios::binary);
                f << csv.str();
            }
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (e.code() == Errc::ParseError) return kExitParse;
        if (e.code() == Errc::ScaleExceeded) return kExitScale;
        return kExitValidation;
    }
    return 0;
}
