#include "imbalance/realization.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace imbalance {

namespace {

// Rewires g so that b(i) drops by one and b(j) rises by one. Scans witnesses
// in ascending vertex order, cases in declaration order, first match wins.
// Callers guarantee b(i) > b(j); under that precondition the fallthrough arc
// removal is reachable only when the arc i->j exists (if the pair i,j is
// non-adjacent or carries j->i, the imbalance surplus forces some witness).
std::pair<ShiftCase, std::optional<int>> shift_in_place(OrientedDigraph& g, int i, int j) {
    for (int z = 0; z < g.vertex_count(); ++z) {
        if (z == i || z == j) continue;
        const bool iz = g.has_arc(i, z);
        const bool zi = g.has_arc(z, i);
        const bool zj = g.has_arc(z, j);
        const bool jz = g.has_arc(j, z);
        if (iz && !zj && !jz) {  // i->z, z/j non-adjacent
            g.remove_arc(i, z);
            g.add_arc(j, z);
            return {ShiftCase::out_arc_handoff, z};
        }
        if (iz && zj) {  // i->z->j
            g.remove_arc(i, z);
            g.remove_arc(z, j);
            return {ShiftCase::path_erase, z};
        }
        if (!iz && !zi && zj) {  // i/z non-adjacent, z->j
            g.remove_arc(z, j);
            g.add_arc(z, i);
            return {ShiftCase::in_arc_handoff, z};
        }
    }
    if (g.remove_arc(i, j)) {
        return {ShiftCase::direct_arc_removal, std::nullopt};
    }
    throw std::logic_error("unit shift: no witness and no direct arc; b(i) > b(j) cannot hold");
}

OrientedDigraph relabel(const OrientedDigraph& g, const std::vector<int>& perm) {
    OrientedDigraph out(g.vertex_count());
    for (const auto& [u, v] : g.arcs()) {
        out.add_arc(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    }
    return out;
}

}  // namespace

const char* to_string(ShiftCase c) {
    switch (c) {
        case ShiftCase::out_arc_handoff: return "out_arc_handoff";
        case ShiftCase::path_erase: return "path_erase";
        case ShiftCase::in_arc_handoff: return "in_arc_handoff";
        case ShiftCase::direct_arc_removal: return "direct_arc_removal";
    }
    return "unknown";
}

ShiftOutcome unit_shift(const OrientedDigraph& g, int i, int j) {
    if (i == j) throw std::invalid_argument("unit_shift: i and j must differ");
    const auto b = imbalance_sequence(g);  // range-checks i, j implicitly
    if (i < 0 || j < 0 || i >= g.vertex_count() || j >= g.vertex_count()) {
        throw std::out_of_range("unit_shift: vertex out of range");
    }
    if (b[static_cast<std::size_t>(i)] <= b[static_cast<std::size_t>(j)]) {
        throw std::invalid_argument("unit_shift requires b(i) > b(j)");
    }
    OrientedDigraph out = g;
    auto [fired, witness] = shift_in_place(out, i, j);
    return {std::move(out), fired, witness};
}

long long ShiftSchedule::total_displacement() const {
    long long total = 0;
    for (const auto& s : steps) total += s.to_pos - s.from_pos;
    return total;
}

RealizeOutcome greedy_realize(const ImbalanceSequence& a) {
    FeasibilityReport report = is_feasible(a);
    if (!report.feasible()) return {std::move(report), std::nullopt};

    const int n = static_cast<int>(a.size());
    std::vector<HatTrace> tower;
    tower.reserve(n > 0 ? static_cast<std::size_t>(n - 1) : 0);
    ImbalanceSequence cur = a;
    while (cur.size() > 1) {
        tower.push_back(hat_reduce(cur));
        cur = tower.back().result;
    }

    // Level t removed the head of a sequence whose slot 0 is vertex t; slot q
    // of the reduced sequence is vertex t+1+q throughout the unwind.
    OrientedDigraph g(n);
    for (int t = 0; t < static_cast<int>(tower.size()); ++t) {
        const auto& aug = tower[static_cast<std::size_t>(t)].augmented;
        for (std::size_t q = 0; q < aug.size(); ++q) {
            if (aug[q]) g.add_arc(t, t + 1 + static_cast<int>(q));
        }
    }
    return {std::move(report), relabel(g, a.sort_perm())};
}

DominanceOutcome dominance_realize(const ImbalanceSequence& a) {
    FeasibilityReport report = is_feasible(a);
    if (!report.feasible()) return {std::move(report), std::nullopt, std::nullopt};

    const int n = static_cast<int>(a.size());
    OrientedDigraph g = transitive_tournament(n);
    std::vector<int> c = tournament_imbalances(n);
    const std::vector<int>& target = a.values();

    ShiftSchedule schedule;
    schedule.start = ImbalanceSequence::from_sorted(c);
    schedule.end = ImbalanceSequence::from_sorted(std::vector<int>(target));

    // Each round closes part of the prefix-sum surplus of c over the target:
    // take one unit from the right end of the constant run holding the first
    // surplus position and hand it to the first position where c falls short.
    // That pair keeps c non-increasing (the donor and recipient runs differ
    // by at least 2 in value) and keeps every prefix of c at or above the
    // target's, so intermediate sequences remain feasible.
    while (true) {
        int p = -1;
        long long pc = 0, pt = 0;
        for (int k = 0; k < n; ++k) {
            pc += c[static_cast<std::size_t>(k)];
            pt += target[static_cast<std::size_t>(k)];
            if (pc > pt) {
                p = k;
                break;
            }
        }
        if (p < 0) break;  // every prefix matches, so c == target

        int i = p;
        while (i + 1 < n && c[static_cast<std::size_t>(i + 1)] == c[static_cast<std::size_t>(p)]) ++i;
        int j = -1;
        for (int t = p + 1; t < n; ++t) {
            if (c[static_cast<std::size_t>(t)] < target[static_cast<std::size_t>(t)]) {
                j = t;
                break;
            }
        }
        if (j <= i || c[static_cast<std::size_t>(i)] <= c[static_cast<std::size_t>(j)]) {
            throw std::logic_error("dominance descent produced an invalid shift pair");
        }

        auto [fired, witness] = shift_in_place(g, i, j);
        --c[static_cast<std::size_t>(i)];
        ++c[static_cast<std::size_t>(j)];
        schedule.steps.push_back(ShiftStep{i, j, fired, witness});
    }

    return {std::move(report), relabel(g, a.sort_perm()), std::move(schedule)};
}

MultigraphOutcome multigraph_realize(std::span<const int> b) {
    long long sum = 0;
    for (int x : b) sum += x;
    if (sum != 0) return {std::nullopt, sum};

    const int n = static_cast<int>(b.size());
    std::vector<long long> bal(b.begin(), b.end());
    std::vector<std::tuple<int, int, long long>> arcs;
    while (true) {
        int src = -1, dst = -1;
        for (int v = 0; v < n; ++v) {
            if (bal[static_cast<std::size_t>(v)] > 0 &&
                (src < 0 || bal[static_cast<std::size_t>(v)] > bal[static_cast<std::size_t>(src)]))
                src = v;
            if (bal[static_cast<std::size_t>(v)] < 0 &&
                (dst < 0 || bal[static_cast<std::size_t>(v)] < bal[static_cast<std::size_t>(dst)]))
                dst = v;
        }
        if (src < 0) break;  // zero sum: no surplus left means no deficit left
        const long long amount =
            std::min(bal[static_cast<std::size_t>(src)], -bal[static_cast<std::size_t>(dst)]);
        arcs.emplace_back(src, dst, amount);
        bal[static_cast<std::size_t>(src)] -= amount;
        bal[static_cast<std::size_t>(dst)] += amount;
    }
    return {MultiDigraph(n, std::move(arcs)), 0};
}

}  // namespace imbalance
