#pragma once

#include <cstddef>
#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

namespace imbalance {

/// Digraph with no loops and at most one arc per unordered vertex pair.
/// Stored as one ternary state per pair, so equality is canonical and
/// membership tests are O(1).
class OrientedDigraph {
public:
    OrientedDigraph() = default;

    /// n vertices labeled 0..n-1, no arcs.
    explicit OrientedDigraph(int n);

    int vertex_count() const noexcept { return n_; }
    long long arc_count() const noexcept { return arc_count_; }

    bool has_arc(int u, int v) const;

    /// Throws std::invalid_argument on a loop or when the pair already
    /// carries an arc (either direction), std::out_of_range on bad vertices.
    void add_arc(int u, int v);

    /// Returns true if the arc was present.
    bool remove_arc(int u, int v);

    /// Arcs as ordered pairs, sorted lexicographically.
    std::vector<std::pair<int, int>> arcs() const;

    bool operator==(const OrientedDigraph&) const = default;

private:
    enum : std::uint8_t { kNone = 0, kForward = 1, kBackward = 2 };

    std::size_t pair_index(int u, int v) const;  // requires u < v
    void check_vertex(int v) const;

    int n_ = 0;
    long long arc_count_ = 0;
    std::vector<std::uint8_t> state_;  // one entry per unordered pair
};

/// Loop-free digraph with repeated arcs, construction-only.
class MultiDigraph {
public:
    MultiDigraph() = default;

    /// Arcs as (u, v, multiplicity) with positive multiplicities and no
    /// loops; throws std::invalid_argument otherwise. The arc list is kept
    /// sorted with one entry per ordered pair.
    MultiDigraph(int n, std::vector<std::tuple<int, int, long long>> arcs);

    int vertex_count() const noexcept { return n_; }
    const std::vector<std::tuple<int, int, long long>>& arcs() const noexcept { return arcs_; }

    /// Sum of multiplicities.
    long long arc_count() const;

private:
    int n_ = 0;
    std::vector<std::tuple<int, int, long long>> arcs_;
};

/// Outdegree minus indegree per vertex, in vertex order. Entries sum to zero.
std::vector<int> imbalance_sequence(const OrientedDigraph& g);
std::vector<long long> imbalance_sequence(const MultiDigraph& g);

/// All arcs from lower to higher label: arcs {(i, j) : i < j}.
OrientedDigraph transitive_tournament(int n);

/// Its imbalance sequence in closed form: n-1, n-3, ..., -(n-1).
std::vector<int> tournament_imbalances(int n);

}  // namespace imbalance
