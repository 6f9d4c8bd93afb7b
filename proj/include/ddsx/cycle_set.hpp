#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "ddsx/checked.hpp"

namespace ddsx {

// One entry of a cycle multiset: `count` disjoint cycles of length `period`.
struct CycleComponent {
    u64 period;
    u64 count;

    friend auto operator<=>(const CycleComponent&, const CycleComponent&) = default;
};

// A finite dynamical system restricted to its strongly connected components,
// i.e. a multiset of cycles. Canonical form: entries sorted by period
// ascending, one entry per distinct period, all counts >= 1. The empty set is
// the neutral element of the sum.
//
// Values are immutable after construction; all operations below are pure and
// safe to call concurrently.
class CycleSet {
public:
    CycleSet() = default;

    static CycleSet single(u64 period, u64 count = 1);

    const std::vector<CycleComponent>& components() const noexcept { return comps_; }
    bool empty() const noexcept { return comps_.empty(); }
    std::size_t entry_count() const noexcept { return comps_.size(); }

    // Total number of cycles, counting multiplicity.
    u64 total_components() const;

    // Multiplicity of `period`, 0 if absent.
    u64 count_of(u64 period) const noexcept;

    bool operator==(const CycleSet&) const = default;
    auto operator<=>(const CycleSet&) const = default;

private:
    friend CycleSet canonicalize(std::vector<CycleComponent> raw);
    std::vector<CycleComponent> comps_;
};

// Sorted, deduplicated set of CycleSets. Used for every enumeration result so
// that output order is deterministic.
class SolutionSet {
public:
    SolutionSet() = default;

    void insert(CycleSet s);
    void merge(const SolutionSet& other);
    bool contains(const CycleSet& s) const;

    bool empty() const noexcept { return items_.empty(); }
    std::size_t size() const noexcept { return items_.size(); }
    const std::vector<CycleSet>& items() const noexcept { return items_; }

    auto begin() const noexcept { return items_.begin(); }
    auto end() const noexcept { return items_.end(); }

    bool operator==(const SolutionSet&) const = default;

private:
    std::vector<CycleSet> items_;  // sorted ascending, unique
};

// Merges entries with equal period, drops zero counts, sorts by period.
// Throws invalid_component_error on a zero period.
CycleSet canonicalize(std::vector<CycleComponent> raw);

// Disjoint union of components. Commutative; the empty set is the identity.
CycleSet add(const CycleSet& a, const CycleSet& b);

// Product of systems. On single entries:
//   C^m_p * C^n_q = C^(m*n*gcd(p,q))_lcm(p,q)
// extended bilinearly. C(1,1) is the identity; the empty set annihilates.
CycleSet multiply(const CycleSet& a, const CycleSet& b);

// k disjoint copies: every multiplicity scaled by k. k = 0 gives the empty set.
CycleSet scalar_multiply(u64 k, const CycleSet& s);

// n-th power by the closed multinomial form. An entry (p, m) with m > 1 is
// expanded into m distinct period-p components first. power(s, 0) = C(1,1).
CycleSet power(const CycleSet& s, u64 n);

inline constexpr u64 kDefaultRootBudget = 1'000'000;

// All r with power(r, n) == v, exhaustively. Candidate periods are restricted
// to the periods of v (every period of a root survives into the power), and
// candidate component counts are bounded by the component count of v. Throws
// budget_exhausted_error once more than `budget` candidates were examined.
SolutionSet nth_root(const CycleSet& v, u64 n, u64 budget = kDefaultRootBudget);

inline CycleSet operator+(const CycleSet& a, const CycleSet& b) { return add(a, b); }
inline CycleSet operator*(const CycleSet& a, const CycleSet& b) { return multiply(a, b); }

}  // namespace ddsx
