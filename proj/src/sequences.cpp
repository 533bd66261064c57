#include "imbalance/sequences.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace imbalance {

namespace {

bool non_increasing(const std::vector<int>& v) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i - 1] < v[i]) return false;
    }
    return true;
}

}  // namespace

ImbalanceSequence ImbalanceSequence::normalize(std::span<const int> raw) {
    const std::size_t n = raw.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&raw](int lhs, int rhs) { return raw[lhs] > raw[rhs]; });
    std::vector<int> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = raw[perm[i]];
    return ImbalanceSequence(std::move(values), std::move(perm));
}

ImbalanceSequence ImbalanceSequence::normalize(std::initializer_list<int> raw) {
    return normalize(std::span<const int>(raw.begin(), raw.size()));
}

ImbalanceSequence ImbalanceSequence::from_sorted(std::vector<int> values) {
    if (!non_increasing(values)) {
        throw std::invalid_argument("from_sorted: values are not non-increasing");
    }
    std::vector<int> perm(values.size());
    std::iota(perm.begin(), perm.end(), 0);
    return ImbalanceSequence(std::move(values), std::move(perm));
}

std::vector<int> ImbalanceSequence::to_original_order() const {
    std::vector<int> out(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) out[sort_perm_[i]] = values_[i];
    return out;
}

std::string FeasibilityReport::describe() const {
    if (feasible()) return "FEASIBLE";
    std::ostringstream os;
    os << "INFEASIBLE: ";
    if (const auto* nz = std::get_if<NonZeroSum>(&*failure)) {
        os << "sum = " << nz->sum;
    } else {
        const auto& pv = std::get<PrefixViolation>(*failure);
        os << "prefix k=" << pv.k << " sum " << pv.prefix_sum << " > " << pv.bound;
    }
    return os.str();
}

FeasibilityReport is_feasible(const ImbalanceSequence& a) {
    const auto& v = a.values();
    const long long n = static_cast<long long>(v.size());

    // Entries are 32-bit and prefixes are accumulated in 64 bits, so no
    // range pre-check is needed: a_1 > n-1 trips the k=1 bound and, once the
    // sum is known to vanish, a_n < -(n-1) trips the k=n-1 bound.
    long long sum = 0;
    for (int x : v) sum += x;
    if (sum != 0) return {NonZeroSum{sum}};

    long long prefix = 0;
    for (long long k = 1; k <= n; ++k) {
        prefix += v[static_cast<std::size_t>(k - 1)];
        const long long bound = k * (n - k);
        if (prefix > bound) {
            return {PrefixViolation{static_cast<int>(k), prefix, bound}};
        }
    }
    return {};
}

HatTrace hat_reduce(const ImbalanceSequence& a) {
    const auto& v = a.values();
    const std::size_t n = v.size();
    if (n == 0) throw std::invalid_argument("hat_reduce: empty sequence");
    const int head = v[0];
    if (head < 0 || static_cast<std::size_t>(head) > n - 1) {
        throw std::invalid_argument("hat_reduce: head " + std::to_string(head) +
                                    " not in [0, " + std::to_string(n - 1) + "]");
    }

    // The tail v[1..n-1] is non-increasing, so the `head` smallest entries
    // occupy a suffix, except that a value run straddling the cutoff is taken
    // from its left end (equal values: lower index is smaller). Positions of
    // the run are found once; everything else is index arithmetic.
    const std::size_t m = n - 1;                 // tail length
    const std::size_t h = static_cast<std::size_t>(head);
    std::vector<std::uint8_t> augmented(m, 0);
    if (h > 0) {
        std::size_t cut = m - h;  // 0-based tail index of the naive cutoff
        if (cut == 0 || v[cut] != v[cut + 1]) {
            // No straddling run: increment the whole suffix.
            for (std::size_t t = cut; t < m; ++t) augmented[t] = 1;
        } else {
            const int run_value = v[cut + 1];  // == v[(cut-1) + 1 + 1]
            std::size_t lo = cut;              // leftmost tail index with run_value
            while (lo > 0 && v[lo] == run_value) --lo;  // v[t+1] is tail entry t
            std::size_t hi = cut;              // rightmost tail index with run_value
            while (hi + 1 < m && v[hi + 2] == run_value) ++hi;
            // Entries strictly below the run (tail indexes > hi) all get +1;
            // the remainder comes from the left of the run, leaving a gap.
            const std::size_t below = m - 1 - hi;
            const std::size_t from_run = h - below;
            for (std::size_t t = hi + 1; t < m; ++t) augmented[t] = 1;
            for (std::size_t t = lo; t < lo + from_run; ++t) augmented[t] = 1;
        }
    }

    std::vector<int> result(m);
    for (std::size_t t = 0; t < m; ++t) result[t] = v[t + 1] + (augmented[t] ? 1 : 0);
    return HatTrace{head, std::move(augmented), ImbalanceSequence::from_sorted(std::move(result))};
}

long long run_bound(const ImbalanceSequence& a, std::size_t first, std::size_t run) {
    const auto& v = a.values();
    const std::size_t n = v.size();
    if (first >= n || first + run >= n) {
        throw std::out_of_range("run_bound: run extends past the sequence");
    }
    for (std::size_t t = first; t <= first + run; ++t) {
        if (v[t] != v[first]) {
            throw std::invalid_argument("run_bound: entries are not a constant run");
        }
    }
    const long long k = static_cast<long long>(first) + 1;
    return k * (static_cast<long long>(n) - k) - static_cast<long long>(run);
}

bool dominates(const ImbalanceSequence& a, const ImbalanceSequence& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("dominates: length mismatch");
    }
    long long sa = 0, sb = 0;
    for (int x : a.values()) sa += x;
    for (int x : b.values()) sb += x;
    if (sa != 0 || sb != 0) {
        throw std::invalid_argument("dominates: sequences must sum to zero");
    }
    long long pa = 0, pb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        pa += a[i];
        pb += b[i];
        if (pa < pb) return false;
    }
    return true;
}

}  // namespace imbalance
