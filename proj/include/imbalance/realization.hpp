#pragma once

#include <optional>
#include <span>
#include <vector>

#include "imbalance/digraph.hpp"
#include "imbalance/sequences.hpp"

namespace imbalance {

/// How a unit shift rewired the graph. The first three cases pivot on a
/// witness vertex z; the last fires only when no witness pattern exists,
/// which forces the arc i->j to be present, and removes that arc.
enum class ShiftCase {
    out_arc_handoff,     // i->z, z/j non-adjacent   =>  arc i->z replaced by j->z
    path_erase,          // i->z->j                  =>  both arcs removed
    in_arc_handoff,      // i/z non-adjacent, z->j   =>  arc z->j replaced by z->i
    direct_arc_removal,  // arc i->j removed (no witness exists)
};

const char* to_string(ShiftCase c);

struct ShiftOutcome {
    OrientedDigraph graph;
    ShiftCase fired{};
    std::optional<int> witness;  // absent for direct_arc_removal
};

/// Lowers b(i) by one and raises b(j) by one, leaving every other imbalance
/// unchanged and never introducing a loop or an opposed pair. Witnesses are
/// scanned in ascending vertex order and cases in declaration order; the
/// first match wins, so the result is deterministic.
///
/// Requires b(i) > b(j); throws std::invalid_argument otherwise.
ShiftOutcome unit_shift(const OrientedDigraph& g, int i, int j);

/// One schedule entry: the sequence position that gave up a unit, the later
/// position that received it, and how the graph was rewired.
struct ShiftStep {
    int from_pos = 0;  // 0-based position in the sorted sequence
    int to_pos = 0;    // later position, to_pos > from_pos
    ShiftCase fired{};
    std::optional<int> witness;
};

struct ShiftSchedule {
    ImbalanceSequence start;
    ImbalanceSequence end;
    std::vector<ShiftStep> steps;

    /// Sum of (to_pos - from_pos) over all steps. Each step lowers the
    /// prefix sums at positions from_pos..to_pos-1 by exactly one, so this
    /// equals the total prefix-sum gap between start and end.
    long long total_displacement() const;
};

struct RealizeOutcome {
    FeasibilityReport report;
    std::optional<OrientedDigraph> graph;  // present iff feasible
};

struct DominanceOutcome {
    FeasibilityReport report;
    std::optional<OrientedDigraph> graph;
    std::optional<ShiftSchedule> schedule;
};

/// Recursive-reduction construction: reduce to the single-vertex base case,
/// then unwind, each level adding a fresh vertex with out-arcs to exactly
/// the entries that were incremented at that level. The reduction is run
/// iteratively, so depth is not a concern for large n.
///
/// The returned digraph is relabeled to the caller's original vertex order:
/// vertex p of the result has imbalance equal to entry p of the caller's
/// raw input. Infeasible input yields a report instead of a graph.
RealizeOutcome greedy_realize(const ImbalanceSequence& a);

/// Dominance-descent construction: starts from the transitive tournament,
/// whose sequence meets every prefix bound with equality, and walks down to
/// the target by unit shifts. Every intermediate sequence stays
/// non-increasing and feasible. The returned digraph is relabeled to caller
/// order; the schedule's positions refer to the sorted sequence.
DominanceOutcome dominance_realize(const ImbalanceSequence& a);

struct MultigraphOutcome {
    std::optional<MultiDigraph> graph;  // absent when the sum is nonzero
    long long sum = 0;
};

/// Realizes any zero-sum sequence with repeated arcs running only from
/// positive-imbalance to negative-imbalance vertices: repeatedly connects
/// the largest remaining surplus to the largest remaining deficit (ties to
/// the lower index) with multiplicity min(surplus, deficit).
MultigraphOutcome multigraph_realize(std::span<const int> b);

}  // namespace imbalance
