#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "imbalance/digraph.hpp"
#include "imbalance/oracle.hpp"
#include "imbalance/sequences.hpp"
#include "test_util.hpp"

using imbalance::ImbalanceSequence;
using imbalance::NonZeroSum;
using imbalance::PrefixViolation;

namespace {

const std::vector<int> kWorkedSequence{5, 3, 2, 2, 2, 2, -5, -5, -6};

}  // namespace

TEST_CASE("normalize sorts descending and records the permutation") {
    const auto a = ImbalanceSequence::normalize({-2, 1, 1});
    CHECK(a.values() == std::vector<int>{1, 1, -2});
    CHECK(a.sort_perm() == std::vector<int>{1, 2, 0});
    CHECK(a.to_original_order() == std::vector<int>{-2, 1, 1});
}

TEST_CASE("normalize of the empty sequence is empty with identity perm") {
    const auto a = ImbalanceSequence::normalize({});
    CHECK(a.empty());
    CHECK(a.sort_perm().empty());
}

TEST_CASE("normalize keeps already-sorted input with identity perm") {
    const auto a = ImbalanceSequence::normalize(
        std::span<const int>(kWorkedSequence.data(), kWorkedSequence.size()));
    CHECK(a.values() == kWorkedSequence);
    CHECK(a.sort_perm() == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8});
}

TEST_CASE("normalize permutation is a stable bijection") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> val(-5, 5);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = trial % 17;
        std::vector<int> raw(static_cast<std::size_t>(n));
        for (auto& x : raw) x = val(rng);
        const auto a = ImbalanceSequence::normalize(raw);
        REQUIRE(a.size() == raw.size());
        // bijection that reproduces the caller's input
        std::vector<bool> seen(raw.size(), false);
        for (std::size_t i = 0; i < a.size(); ++i) {
            const int p = a.sort_perm()[i];
            REQUIRE(!seen[static_cast<std::size_t>(p)]);
            seen[static_cast<std::size_t>(p)] = true;
            REQUIRE(raw[static_cast<std::size_t>(p)] == a[i]);
        }
        // stable: equal values keep their original order
        for (std::size_t i = 1; i < a.size(); ++i) {
            REQUIRE(a[i - 1] >= a[i]);
            if (a[i - 1] == a[i]) REQUIRE(a.sort_perm()[i - 1] < a.sort_perm()[i]);
        }
    }
}

TEST_CASE("from_sorted rejects increasing input") {
    CHECK_THROWS_AS(ImbalanceSequence::from_sorted({1, 2}), std::invalid_argument);
}

TEST_CASE("is_feasible accepts the worked nine-entry sequence") {
    const auto r = imbalance::is_feasible(ImbalanceSequence::normalize(
        std::span<const int>(kWorkedSequence.data(), kWorkedSequence.size())));
    CHECK(r.feasible());
    CHECK(r.describe() == "FEASIBLE");
}

TEST_CASE("is_feasible reports the first violated prefix") {
    const auto r = imbalance::is_feasible(ImbalanceSequence::normalize({2, -2}));
    REQUIRE_FALSE(r.feasible());
    const auto& pv = std::get<PrefixViolation>(*r.failure);
    CHECK(pv.k == 1);
    CHECK(pv.prefix_sum == 2);
    CHECK(pv.bound == 1);
    CHECK(r.describe() == "INFEASIBLE: prefix k=1 sum 2 > 1");
}

TEST_CASE("is_feasible reports a nonzero sum before prefix checks") {
    const auto r = imbalance::is_feasible(ImbalanceSequence::normalize({1, 1, -1}));
    REQUIRE_FALSE(r.feasible());
    const auto& nz = std::get<NonZeroSum>(*r.failure);
    CHECK(nz.sum == 1);
    CHECK(r.describe() == "INFEASIBLE: sum = 1");
}

TEST_CASE("is_feasible small verdicts") {
    CHECK(imbalance::is_feasible(ImbalanceSequence::normalize({1, 1, -2})).feasible());
    CHECK(imbalance::is_feasible(ImbalanceSequence::normalize({})).feasible());
    CHECK(imbalance::is_feasible(ImbalanceSequence::normalize({0})).feasible());
    // entries past +/-(n-1) always trip a prefix bound
    CHECK_FALSE(imbalance::is_feasible(ImbalanceSequence::normalize({2, 2, -4})).feasible());
    CHECK_FALSE(imbalance::is_feasible(ImbalanceSequence::normalize({4, -2, -1, -1})).feasible());
}

TEST_CASE("hat_reduce reproduces the worked n=9 step exactly") {
    const auto trace = imbalance::hat_reduce(ImbalanceSequence::normalize(
        std::span<const int>(kWorkedSequence.data(), kWorkedSequence.size())));
    CHECK(trace.head == 5);
    CHECK(trace.augmented == std::vector<std::uint8_t>{0, 1, 1, 0, 0, 1, 1, 1});
    CHECK(trace.result.values() == std::vector<int>{3, 3, 3, 2, 2, -4, -4, -5});
}

TEST_CASE("hat_reduce base case n=1") {
    const auto trace = imbalance::hat_reduce(ImbalanceSequence::normalize({0}));
    CHECK(trace.head == 0);
    CHECK(trace.augmented.empty());
    CHECK(trace.result.empty());
}

TEST_CASE("hat_reduce increments the single smallest entry") {
    const auto trace = imbalance::hat_reduce(ImbalanceSequence::normalize({1, 1, -2}));
    CHECK(trace.head == 1);
    CHECK(trace.augmented == std::vector<std::uint8_t>{0, 1});
    CHECK(trace.result.values() == std::vector<int>{1, -1});
    CHECK(imbalance::is_feasible(trace.result).feasible());
}

TEST_CASE("hat_reduce rejects an oversized or negative head") {
    CHECK_THROWS_AS(imbalance::hat_reduce(ImbalanceSequence::normalize({2, -2})),
                    std::invalid_argument);
    CHECK_THROWS_AS(imbalance::hat_reduce(ImbalanceSequence::normalize({-1, -1})),
                    std::invalid_argument);
    CHECK_THROWS_AS(imbalance::hat_reduce(ImbalanceSequence::normalize({})),
                    std::invalid_argument);
}

TEST_CASE("hat_reduce matches the stable-sort selection oracle") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 1 + trial % 40;
        const auto a = test_util::random_feasible_sequence(rng, n);
        const auto trace = imbalance::hat_reduce(a);
        CHECK(trace.augmented == test_util::expected_augmentation(a.values()));
        REQUIRE(trace.result.size() == a.size() - 1);
        long long marks = 0;
        for (auto m : trace.augmented) marks += m;
        CHECK(marks == trace.head);
    }
}

TEST_CASE("run_bound strengthens the prefix bound along constant runs") {
    const auto paper = ImbalanceSequence::normalize(
        std::span<const int>(kWorkedSequence.data(), kWorkedSequence.size()));
    // run of 2s at positions 3..6 (1-based): first = 2, run = 3
    CHECK(imbalance::run_bound(paper, 2, 3) == 15);
    CHECK(test_util::prefix_sums(paper.values())[2] == 10);

    const auto small = ImbalanceSequence::normalize({1, 1, -2});
    CHECK(imbalance::run_bound(small, 0, 1) == 1);  // tight: prefix sum is 1

    // trivial run at the last position
    CHECK(imbalance::run_bound(small, 2, 0) == 0);

    CHECK_THROWS_AS(imbalance::run_bound(small, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(imbalance::run_bound(small, 2, 1), std::out_of_range);
}

TEST_CASE("dominates compares prefix sums") {
    const auto top = ImbalanceSequence::normalize({2, 0, -2});
    const auto low = ImbalanceSequence::normalize({1, 1, -2});
    CHECK(imbalance::dominates(top, low));
    CHECK_FALSE(imbalance::dominates(low, top));
    CHECK(imbalance::dominates(low, low));

    CHECK_THROWS_AS(imbalance::dominates(top, ImbalanceSequence::normalize({0, 0})),
                    std::invalid_argument);
    CHECK_THROWS_AS(imbalance::dominates(top, ImbalanceSequence::normalize({1, 1, -1})),
                    std::invalid_argument);
}

TEST_CASE("reduction of a feasible sequence stays feasible") {
    for (int n = 1; n <= 7; ++n) {
        for (const auto& a : imbalance::oracle::enumerate_feasible(n)) {
            const auto trace = imbalance::hat_reduce(a);
            REQUIRE(trace.result.size() == a.size() - 1);
            REQUIRE(imbalance::is_feasible(trace.result).feasible());
        }
    }
    std::mt19937 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + trial % 50;
        const auto a = test_util::random_feasible_sequence(rng, n);
        REQUIRE(imbalance::is_feasible(a).feasible());
        REQUIRE(imbalance::is_feasible(imbalance::hat_reduce(a).result).feasible());
    }
}

TEST_CASE("constant-run prefix bounds hold on every enumerated feasible sequence") {
    for (int n = 1; n <= 7; ++n) {
        for (const auto& a : imbalance::oracle::enumerate_feasible(n)) {
            const auto prefix = test_util::prefix_sums(a.values());
            for (std::size_t first = 0; first < a.size(); ++first) {
                std::size_t last = first;
                while (last + 1 < a.size() && a[last + 1] == a[first]) ++last;
                REQUIRE(prefix[first] <= imbalance::run_bound(a, first, last - first));
            }
        }
    }
}

TEST_CASE("dominance is a partial order on enumerated feasible sequences") {
    for (int n = 1; n <= 6; ++n) {
        const auto all = imbalance::oracle::enumerate_feasible(n);
        for (const auto& a : all) REQUIRE(imbalance::dominates(a, a));
        for (const auto& a : all) {
            for (const auto& b : all) {
                if (imbalance::dominates(a, b) && imbalance::dominates(b, a)) {
                    REQUIRE(a.values() == b.values());
                }
                for (const auto& c : all) {
                    if (imbalance::dominates(a, b) && imbalance::dominates(b, c)) {
                        REQUIRE(imbalance::dominates(a, c));
                    }
                }
            }
        }
        if (n > 4) break;  // cubic loop; n=5 already covers 59^3 triples
    }
}

TEST_CASE("the tournament sequence dominates every feasible sequence") {
    for (int n = 1; n <= 7; ++n) {
        const auto top = ImbalanceSequence::from_sorted(imbalance::tournament_imbalances(n));
        for (const auto& a : imbalance::oracle::enumerate_feasible(n)) {
            REQUIRE(imbalance::dominates(top, a));
        }
    }
}
