#pragma once

#include <optional>
#include <set>
#include <span>
#include <vector>

#include "imbalance/digraph.hpp"
#include "imbalance/sequences.hpp"

namespace imbalance::oracle {

// The search space is 3^(n(n-1)/2) digraphs; the default caps keep runs at
// desk scale (cap 6 is about 14.3M digraphs).
inline constexpr int kDefaultSearchCap = 6;
inline constexpr int kDefaultEnumerateCap = 8;

/// Exhaustive realizability search. Enumerates every oriented digraph on
/// |a| vertices as a base-3 counter over unordered pairs in lexicographic
/// order (pair (0,1) is the fastest digit; digit 1 = forward, 2 = backward)
/// and returns the first whose sorted imbalance sequence matches sorted(a),
/// or nullopt. Deliberately shares nothing with the feasibility test or the
/// realizers beyond the digraph type.
///
/// Throws std::invalid_argument when |a| > cap.
std::optional<OrientedDigraph> brute_force_realizable(std::span<const int> a,
                                                      int cap = kDefaultSearchCap);

/// Every sorted (non-increasing) imbalance sequence attained by some
/// oriented digraph on n vertices, collected in one enumeration pass.
std::set<std::vector<int>> realizable_sequences(int n, int cap = kDefaultSearchCap);

/// All non-increasing zero-sum sequences of length n with entries in
/// [-(n-1), n-1], in lexicographically decreasing order. This is the
/// candidate grid the feasibility test is validated against.
std::vector<std::vector<int>> enumerate_zero_sum(int n, int cap = kDefaultEnumerateCap);

/// The members of enumerate_zero_sum(n) that additionally satisfy every
/// prefix bound, in lexicographically decreasing order, no duplicates.
/// The prefix arithmetic here is written out independently of is_feasible.
std::vector<ImbalanceSequence> enumerate_feasible(int n, int cap = kDefaultEnumerateCap);

}  // namespace imbalance::oracle
