#include "imbalance/digraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace imbalance {

OrientedDigraph::OrientedDigraph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    state_.assign(static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2, kNone);
}

std::size_t OrientedDigraph::pair_index(int u, int v) const {
    // Lexicographic over pairs (u, v) with u < v: pairs (0,*) first.
    const auto uu = static_cast<std::size_t>(u);
    const auto nn = static_cast<std::size_t>(n_);
    return uu * (nn - 1) - uu * (uu - 1) / 2 + static_cast<std::size_t>(v) - uu - 1;
}

void OrientedDigraph::check_vertex(int v) const {
    if (v < 0 || v >= n_) {
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range [0, " +
                                std::to_string(n_) + ")");
    }
}

bool OrientedDigraph::has_arc(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    if (u < v) return state_[pair_index(u, v)] == kForward;
    return state_[pair_index(v, u)] == kBackward;
}

void OrientedDigraph::add_arc(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop arcs are not allowed");
    const std::size_t idx = u < v ? pair_index(u, v) : pair_index(v, u);
    if (state_[idx] != kNone) {
        throw std::invalid_argument("pair {" + std::to_string(u) + "," + std::to_string(v) +
                                    "} already carries an arc");
    }
    state_[idx] = u < v ? kForward : kBackward;
    ++arc_count_;
}

bool OrientedDigraph::remove_arc(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    const std::size_t idx = u < v ? pair_index(u, v) : pair_index(v, u);
    const std::uint8_t want = u < v ? kForward : kBackward;
    if (state_[idx] != want) return false;
    state_[idx] = kNone;
    --arc_count_;
    return true;
}

std::vector<std::pair<int, int>> OrientedDigraph::arcs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(arc_count_));
    for (int u = 0; u < n_; ++u) {
        for (int v = u + 1; v < n_; ++v) {
            switch (state_[pair_index(u, v)]) {
                case kForward: out.emplace_back(u, v); break;
                case kBackward: out.emplace_back(v, u); break;
                default: break;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

MultiDigraph::MultiDigraph(int n, std::vector<std::tuple<int, int, long long>> arcs)
    : n_(n), arcs_(std::move(arcs)) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    std::sort(arcs_.begin(), arcs_.end());
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        const auto& [u, v, mult] = arcs_[i];
        if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("arc vertex out of range");
        if (u == v) throw std::invalid_argument("loop arcs are not allowed");
        if (mult <= 0) throw std::invalid_argument("arc multiplicities must be positive");
        if (i > 0 && std::get<0>(arcs_[i - 1]) == u && std::get<1>(arcs_[i - 1]) == v) {
            throw std::invalid_argument("duplicate entry for one ordered pair");
        }
    }
}

long long MultiDigraph::arc_count() const {
    long long total = 0;
    for (const auto& [u, v, mult] : arcs_) total += mult;
    return total;
}

std::vector<int> imbalance_sequence(const OrientedDigraph& g) {
    std::vector<int> b(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const auto& [u, v] : g.arcs()) {
        ++b[static_cast<std::size_t>(u)];
        --b[static_cast<std::size_t>(v)];
    }
    return b;
}

std::vector<long long> imbalance_sequence(const MultiDigraph& g) {
    std::vector<long long> b(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const auto& [u, v, mult] : g.arcs()) {
        b[static_cast<std::size_t>(u)] += mult;
        b[static_cast<std::size_t>(v)] -= mult;
    }
    return b;
}

OrientedDigraph transitive_tournament(int n) {
    OrientedDigraph g(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) g.add_arc(i, j);
    }
    return g;
}

std::vector<int> tournament_imbalances(int n) {
    std::vector<int> b(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) b[static_cast<std::size_t>(i)] = n - 1 - 2 * i;
    return b;
}

}  // namespace imbalance
