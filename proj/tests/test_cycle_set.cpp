#include <doctest.h>

#include <future>

#include "ddsx/cycle_set.hpp"
#include "ddsx/function_graph.hpp"
#include "test_support.hpp"

using namespace ddsx;
using ddsx::testing::cs;
using ddsx::testing::random_cycle_set;
using ddsx::testing::repeated_multiply;

TEST_CASE("canonicalize merges, sorts and drops zero counts") {
    CHECK(canonicalize({{2, 1}, {2, 1}}) == cs({{2, 2}}));
    CHECK(canonicalize({}) == CycleSet{});
    CHECK(canonicalize({{3, 2}, {1, 1}, {3, 1}}) == cs({{1, 1}, {3, 3}}));
    CHECK(canonicalize({{5, 0}, {2, 3}}) == cs({{2, 3}}));
    CHECK_THROWS_AS(canonicalize({{0, 1}}), invalid_component_error);
}

TEST_CASE("canonicalize is idempotent on random values") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const CycleSet s = random_cycle_set(rng);
        CHECK(canonicalize(s.components()) == s);
    }
}

TEST_CASE("add is multiset union with the empty set as identity") {
    CHECK(add(cs({{2, 2}}), cs({{2, 1}, {5, 1}})) == cs({{2, 3}, {5, 1}}));
    const CycleSet s = cs({{3, 2}, {7, 1}});
    CHECK(add(s, CycleSet{}) == s);
    CHECK(add(add(cs({{1, 1}}), cs({{2, 1}})), cs({{3, 1}})) ==
          cs({{1, 1}, {2, 1}, {3, 1}}));
}

TEST_CASE("multiply follows the gcd/lcm product formula") {
    CHECK(multiply(cs({{2, 1}}), cs({{3, 1}})) == cs({{6, 1}}));
    CHECK(multiply(cs({{2, 2}}), cs({{4, 3}})) == cs({{4, 12}}));
    CHECK(multiply(cs({{1, 1}}), cs({{5, 4}})) == cs({{5, 4}}));
    // Graph-level oracle: explicit 6-cycle times 3-cycle.
    CHECK(multiply(cs({{6, 1}}), cs({{3, 1}})) ==
          cycle_structure(graph_product(build_cycle_graph(6, 1), build_cycle_graph(3, 1))));
    CHECK(multiply(cs({{6, 1}}), cs({{3, 1}})) == cs({{6, 3}}));
    CHECK(multiply(cs({{2, 1}}), CycleSet{}) == CycleSet{});
}

TEST_CASE("multiply reports multiplicity overflow") {
    const CycleSet big = cs({{1, u64{1} << 40}});
    CHECK_THROWS_AS(multiply(big, big), arithmetic_overflow_error);
}

TEST_CASE("scalar_multiply replicates components") {
    CHECK(scalar_multiply(3, cs({{2, 1}})) == cs({{2, 3}}));
    const CycleSet s = cs({{2, 1}, {9, 4}});
    CHECK(scalar_multiply(1, s) == s);
    CHECK(scalar_multiply(0, cs({{7, 5}})) == CycleSet{});
}

TEST_CASE("power matches its examples and the repeated-multiply oracle") {
    CHECK(power(cs({{1, 1}, {2, 1}}), 2) == cs({{1, 1}, {2, 4}}));
    CHECK(power(cs({{2, 1}, {3, 1}}), 2) == cs({{2, 2}, {3, 3}, {6, 2}}));
    CHECK(power(cs({{4, 2}, {6, 1}}), 0) == cs({{1, 1}}));
    const CycleSet s = cs({{3, 2}, {5, 1}});
    CHECK(power(s, 1) == s);
    CHECK(power(CycleSet{}, 0) == cs({{1, 1}}));
    CHECK(power(CycleSet{}, 3) == CycleSet{});

    // Oracle sweep: every system with <= 3 entries, periods <= 6, counts <= 2.
    std::mt19937_64 rng(23);
    for (int i = 0; i < 300; ++i) {
        const CycleSet v = random_cycle_set(rng, 3, 6, 2);
        for (u64 n = 0; n <= 4; ++n) CHECK(power(v, n) == repeated_multiply(v, n));
    }
}

TEST_CASE("semiring axioms hold on random values") {
    std::mt19937_64 rng(42);
    const CycleSet one = cs({{1, 1}});
    for (int i = 0; i < 500; ++i) {
        const CycleSet a = random_cycle_set(rng);
        const CycleSet b = random_cycle_set(rng);
        const CycleSet c = random_cycle_set(rng);
        CHECK(add(a, b) == add(b, a));
        CHECK(multiply(a, b) == multiply(b, a));
        CHECK(add(add(a, b), c) == add(a, add(b, c)));
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
        CHECK(multiply(a, add(b, c)) == add(multiply(a, b), multiply(a, c)));
        CHECK(add(a, CycleSet{}) == a);
        CHECK(multiply(a, one) == a);
        CHECK(multiply(a, CycleSet{}) == CycleSet{});
    }
}

TEST_CASE("nth_root inverts power") {
    SolutionSet expected;
    expected.insert(cs({{1, 1}, {2, 1}}));
    CHECK(nth_root(cs({{1, 1}, {2, 4}}), 2) == expected);

    const CycleSet s = cs({{2, 3}, {7, 1}});
    SolutionSet identity;
    identity.insert(s);
    CHECK(nth_root(s, 1) == identity);

    CHECK(nth_root(cs({{2, 1}}), 2).empty());

    SolutionSet empty_root;
    empty_root.insert(CycleSet{});
    CHECK(nth_root(CycleSet{}, 3) == empty_root);
}

TEST_CASE("nth_root round-trips random bases") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 60; ++i) {
        const CycleSet base = random_cycle_set(rng, 2, 5, 2);
        for (u64 n = 1; n <= 3; ++n) {
            const CycleSet v = power(base, n);
            const SolutionSet roots = nth_root(v, n);
            CHECK(roots.contains(base));
            for (const CycleSet& r : roots) CHECK(power(r, n) == v);
        }
    }
}

TEST_CASE("nth_root reports budget exhaustion instead of truncating") {
    CHECK_THROWS_AS(nth_root(cs({{1, 30}, {2, 30}, {3, 30}}), 2, 3),
                    budget_exhausted_error);
}

TEST_CASE("operations are safe to run concurrently") {
    const CycleSet a = cs({{2, 3}, {5, 1}});
    const CycleSet b = cs({{3, 2}, {4, 2}});
    const CycleSet expected = multiply(a, b);
    std::vector<std::future<CycleSet>> futures;
    for (int i = 0; i < 8; ++i)
        futures.push_back(std::async(std::launch::async, [&] { return multiply(a, b); }));
    for (auto& f : futures) CHECK(f.get() == expected);
}
