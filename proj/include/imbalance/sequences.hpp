#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace imbalance {

/// An integer sequence held in non-increasing order, together with the
/// permutation back to the order the caller supplied it in.
///
/// All sequence-level operations in this library require non-increasing
/// input; the only ways to build an ImbalanceSequence (normalize, from_sorted)
/// establish that invariant, so downstream code never re-checks it.
class ImbalanceSequence {
public:
    /// Empty sequence, identity permutation.
    ImbalanceSequence() = default;

    /// Stable descending sort of `raw`. Entries that compare equal keep their
    /// original relative order, so the recorded permutation is deterministic.
    static ImbalanceSequence normalize(std::span<const int> raw);
    static ImbalanceSequence normalize(std::initializer_list<int> raw);

    /// Adopts `values` as-is with an identity permutation.
    /// Throws std::invalid_argument if `values` is not non-increasing.
    static ImbalanceSequence from_sorted(std::vector<int> values);

    /// Values in non-increasing order.
    const std::vector<int>& values() const noexcept { return values_; }

    /// sort_perm()[sorted_pos] == position of that entry in the caller's input.
    const std::vector<int>& sort_perm() const noexcept { return sort_perm_; }

    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    int operator[](std::size_t i) const { return values_[i]; }

    /// The sorted values written back into the caller's original order.
    std::vector<int> to_original_order() const;

private:
    ImbalanceSequence(std::vector<int> values, std::vector<int> perm)
        : values_(std::move(values)), sort_perm_(std::move(perm)) {}

    std::vector<int> values_;     // non-increasing
    std::vector<int> sort_perm_;  // sorted slot -> original index
};

struct NonZeroSum {
    long long sum = 0;
};

struct PrefixViolation {
    int k = 0;  // 1-based prefix length, smallest violating one
    long long prefix_sum = 0;
    long long bound = 0;  // k * (n - k)
};

/// Verdict of the feasibility test. A sequence is feasible when its entries
/// sum to zero and every k-prefix sums to at most k(n-k).
struct FeasibilityReport {
    std::optional<std::variant<NonZeroSum, PrefixViolation>> failure;

    bool feasible() const noexcept { return !failure.has_value(); }

    /// "FEASIBLE", "INFEASIBLE: sum = 1", "INFEASIBLE: prefix k=1 sum 2 > 1".
    std::string describe() const;
};

/// One reduction step: the removed head, a 0/1 vector marking which of the
/// surviving entries received +1, and the shortened sequence.
struct HatTrace {
    int head = 0;
    std::vector<std::uint8_t> augmented;  // length n-1, aligned with result
    ImbalanceSequence result;
};

/// Zero-sum and prefix-bound test. A nonzero sum is reported before any
/// prefix violation; among prefix violations the smallest k wins.
FeasibilityReport is_feasible(const ImbalanceSequence& a);

/// Removes the head a[0] and adds 1 to the a[0] smallest remaining entries,
/// where an entry is smaller than another if its value is smaller or the
/// values are equal and its index is lower. Equal runs split by the count
/// cutoff are therefore incremented on the left, which keeps the result
/// non-increasing.
///
/// Throws std::invalid_argument when the sequence is empty or a[0] lies
/// outside [0, n-1] (no valid selection of "a[0] smallest" exists).
HatTrace hat_reduce(const ImbalanceSequence& a);

/// Strengthened prefix bound for a constant run
/// a[first] == a[first+1] == ... == a[first+run]: returns k(n-k) - run with
/// k = first + 1. Feasible sequences satisfy sum(a[0..first]) <= this value.
/// Throws std::out_of_range / std::invalid_argument when (first, run) does
/// not index a constant run.
long long run_bound(const ImbalanceSequence& a, std::size_t first, std::size_t run);

/// True iff every prefix sum of `a` is >= the matching prefix sum of `b`.
/// Throws std::invalid_argument on length mismatch or a nonzero total.
bool dominates(const ImbalanceSequence& a, const ImbalanceSequence& b);

}  // namespace imbalance
