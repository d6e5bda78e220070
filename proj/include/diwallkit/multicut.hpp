#pragma once

#include "diwallkit/digraph.hpp"

#include <optional>
#include <span>
#include <string_view>
#include <tuple>
#include <vector>

namespace diwallkit {

/// Sequence of +1/-1 terms.
using Pattern = std::vector<int>;

bool is_pattern(const Pattern& pi);
bool is_alternating(const Pattern& pi);
Pattern negated(const Pattern& pi);
/// The alternating pattern extended by one opposite term at each end.
Pattern extended(const Pattern& pi);
/// Parses strings such as "+-+" or "1,-1,1".
Pattern parse_pattern(std::string_view text);

/// Ordered partition (A_0, ..., A_k) of the vertex set.
struct Multicut {
    std::vector<std::vector<int>> parts;
    Pattern pattern;

    int k() const { return static_cast<int>(parts.size()) - 1; }
    /// Level of every vertex (index of the part containing it).
    std::vector<int> levels(int vertex_count) const;
    static Multicut from_levels(std::span<const int> levels, const Pattern& pattern);
};

/// u in A_0, v in A_k, parts partition V, no edge skips a level, and across
/// level i edges only run A_{i-1} -> A_i when pi_i = +1, A_i -> A_{i-1} when -1.
bool verify_multicut(const Digraph& g, int u, int v, const Pattern& pi, const Multicut& mc);

/// Number of path edges between A_{i-1} and A_i, for i = 1..k.
std::vector<int> crossing_profile(const Digraph& g, std::span<const int> path_darts, const Multicut& mc);

/// Total number of edges of g between consecutive parts.
int crossing_count(const Digraph& g, const Multicut& mc);

struct MulticutSearch {
    std::optional<Multicut> multicut;
    /// When no multicut exists: a u-v path of g (darts from u) that admits no
    /// multicut with the pattern either.
    std::vector<int> witness_path;
};

/// Decides whether a (u,v)-multicut with pattern pi exists by the
/// contraction recursion: normalise to pi_k = +1, contract an out-edge of v
/// if one exists, otherwise merge v with its in-neighbourhood and drop the
/// last term. Throws NotOneWeak or SameVertex.
MulticutSearch find_multicut_or_path(const Digraph& g, int u, int v, const Pattern& pi);
std::optional<Multicut> find_multicut(const Digraph& g, int u, int v, const Pattern& pi);

/// Rearranges a multicut so that every prefix A_0..A_{i-1} and every suffix
/// A_i..A_k induces a weakly connected subgraph. Each step moves the
/// lexicographically least stray component one level over and strictly
/// lowers crossing_count. Throws InvalidMulticut.
Multicut connectify(const Digraph& g, int u, int v, const Multicut& mc);

/// Split of a path into consecutive directed segments; segment i runs from
/// breakpoint i-1 to breakpoint i along the path and is traversed forwards
/// (tail to head) iff signs[i] = +1. Positions index the path's vertices.
struct Concatenation {
    std::vector<int> breakpoints;
    Pattern signs;

    /// Nonempty segments as (start, end, sign), adjacent equal signs merged.
    std::vector<std::tuple<int, int, int>> merged_segments() const;
};

bool verify_concatenation(const Digraph& g, std::span<const int> path_darts, const Concatenation& c);

struct PathCase {
    std::optional<Multicut> multicut;
    std::optional<Concatenation> concatenation;
};

/// For a path (darts from u to v) and an alternating pattern pi, returns
/// either a multicut of the path with pattern pi or a (-pi)-concatenation;
/// exactly one exists. The multicut is over the path's vertices as vertices
/// of g; vertices off the path are left out. Throws NotAlternating, NotPath.
PathCase path_case(const Digraph& g, std::span<const int> path_darts, const Pattern& pi);

} // namespace diwallkit
