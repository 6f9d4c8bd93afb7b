#pragma once

#include <optional>
#include <vector>

#include "ddsx/checked.hpp"

namespace ddsx {

// Multiset of coin values summing to some amount, sorted descending.
using Partition = std::vector<u64>;

// Distinct positive coin denominations, sorted descending.
class CoinSet {
public:
    CoinSet() = default;

    // Validates positivity and uniqueness, sorts descending.
    static CoinSet from_coins(std::vector<u64> coins);

    CoinSet without(u64 coin) const;
    bool contains(u64 coin) const;

    const std::vector<u64>& coins() const noexcept { return coins_; }
    bool empty() const noexcept { return coins_.empty(); }

private:
    std::vector<u64> coins_;
};

// All divisors of q, descending.
CoinSet divisors(u64 q);

// Minimum-cardinality partition of `amount` into the given coins, computed by
// exact dynamic programming (divisor coin systems are not canonical, so the
// greedy heuristic is not enough). Ties break to the lexicographically
// greatest partition under descending order. Infeasible is a normal return.
std::optional<Partition> mcda(u64 amount, const CoinSet& coins);

// Every multiset of coins summing to `amount`, each exactly once, in
// descending-lexicographic order.
std::vector<Partition> all_partitions(u64 amount, const CoinSet& coins);

}  // namespace ddsx
