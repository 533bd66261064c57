#include "imbalance/oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace imbalance::oracle {

namespace {

void check_cap(int n, int cap, const char* what) {
    if (n < 0) throw std::invalid_argument(std::string(what) + ": negative length");
    if (n > cap) {
        throw std::invalid_argument(std::string(what) + ": n=" + std::to_string(n) +
                                    " exceeds cap " + std::to_string(cap));
    }
}

// Unordered pairs in lexicographic order; pair 0 is the fastest base-3 digit.
std::vector<std::pair<int, int>> pair_list(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    return pairs;
}

// Walks every trit assignment (0 none, 1 u->v, 2 v->u) as an odometer,
// keeping the imbalance vector updated incrementally, and hands each state
// to `visit`. Returns after `visit` first returns true (or after the last
// state). The digraph for the current state is materialized on demand.
class DigraphScan {
public:
    explicit DigraphScan(int n) : n_(n), pairs_(pair_list(n)), trits_(pairs_.size(), 0), b_(n, 0) {}

    const std::vector<int>& imbalances() const { return b_; }

    OrientedDigraph materialize() const {
        OrientedDigraph g(n_);
        for (std::size_t t = 0; t < pairs_.size(); ++t) {
            const auto [u, v] = pairs_[t];
            if (trits_[t] == 1) g.add_arc(u, v);
            if (trits_[t] == 2) g.add_arc(v, u);
        }
        return g;
    }

    void run(const std::function<bool()>& visit) {
        if (visit()) return;
        while (advance()) {
            if (visit()) return;
        }
    }

private:
    bool advance() {
        for (std::size_t t = 0; t < trits_.size(); ++t) {
            const auto [u, v] = pairs_[t];
            if (trits_[t] == 0) {  // add u->v
                trits_[t] = 1;
                ++b_[u];
                --b_[v];
                return true;
            }
            if (trits_[t] == 1) {  // u->v becomes v->u
                trits_[t] = 2;
                b_[u] -= 2;
                b_[v] += 2;
                return true;
            }
            trits_[t] = 0;  // wrap: drop v->u, carry to the next pair
            ++b_[u];
            --b_[v];
        }
        return false;
    }

    int n_;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<std::uint8_t> trits_;
    std::vector<int> b_;
};

}  // namespace

std::optional<OrientedDigraph> brute_force_realizable(std::span<const int> a, int cap) {
    const int n = static_cast<int>(a.size());
    check_cap(n, cap, "brute_force_realizable");

    std::vector<int> target(a.begin(), a.end());
    std::sort(target.begin(), target.end(), std::greater<>());

    DigraphScan scan(n);
    std::optional<OrientedDigraph> found;
    std::vector<int> sorted(static_cast<std::size_t>(n));
    scan.run([&]() {
        sorted.assign(scan.imbalances().begin(), scan.imbalances().end());
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
        if (sorted == target) {
            found = scan.materialize();
            return true;
        }
        return false;
    });
    return found;
}

std::set<std::vector<int>> realizable_sequences(int n, int cap) {
    check_cap(n, cap, "realizable_sequences");
    std::set<std::vector<int>> out;
    DigraphScan scan(n);
    std::vector<int> sorted(static_cast<std::size_t>(n));
    scan.run([&]() {
        sorted.assign(scan.imbalances().begin(), scan.imbalances().end());
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
        out.insert(sorted);
        return false;
    });
    return out;
}

namespace {

// Shared DFS over non-increasing in-range sequences with a zero total.
// `prefix_bounded` additionally discards any prefix summing past k(n-k).
void descend(int n, bool prefix_bounded, std::vector<int>& acc, long long sum,
             const std::function<void(const std::vector<int>&)>& emit) {
    const int idx = static_cast<int>(acc.size());
    if (idx == n) {
        if (sum == 0) emit(acc);
        return;
    }
    const int remaining_after = n - idx - 1;
    const int lo = -(n - 1);
    const int hi = acc.empty() ? n - 1 : std::min(acc.back(), n - 1);
    for (int v = hi; v >= lo; --v) {
        const long long s = sum + v;
        // The rest are at most v each and at least lo each.
        if (s + static_cast<long long>(remaining_after) * v < 0) break;  // only smaller v follow
        if (s + static_cast<long long>(remaining_after) * lo > 0) continue;
        if (prefix_bounded) {
            const long long k = idx + 1;
            if (s > k * (n - k)) continue;
        }
        acc.push_back(v);
        descend(n, prefix_bounded, acc, s, emit);
        acc.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> enumerate_zero_sum(int n, int cap) {
    check_cap(n, cap, "enumerate_zero_sum");
    std::vector<std::vector<int>> out;
    std::vector<int> acc;
    descend(n, false, acc, 0, [&](const std::vector<int>& seq) { out.push_back(seq); });
    return out;
}

std::vector<ImbalanceSequence> enumerate_feasible(int n, int cap) {
    check_cap(n, cap, "enumerate_feasible");
    std::vector<ImbalanceSequence> out;
    std::vector<int> acc;
    descend(n, true, acc, 0, [&](const std::vector<int>& seq) {
        out.push_back(ImbalanceSequence::from_sorted(std::vector<int>(seq)));
    });
    return out;
}

}  // namespace imbalance::oracle
