#include "ddsx/decomposition.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace ddsx {

CoinSet CoinSet::from_coins(std::vector<u64> coins) {
    std::set<u64> seen;
    for (u64 c : coins) {
        if (c == 0) throw invalid_component_error("coin values must be >= 1");
        if (!seen.insert(c).second)
            throw invalid_component_error("duplicate coin value");
    }
    CoinSet out;
    out.coins_.assign(seen.rbegin(), seen.rend());
    return out;
}

CoinSet CoinSet::without(u64 coin) const {
    CoinSet out;
    out.coins_.reserve(coins_.size());
    for (u64 c : coins_)
        if (c != coin) out.coins_.push_back(c);
    return out;
}

bool CoinSet::contains(u64 coin) const {
    return std::binary_search(coins_.rbegin(), coins_.rend(), coin);
}

CoinSet divisors(u64 q) {
    if (q == 0) throw invalid_component_error("divisors of 0 are undefined here");
    std::vector<u64> divs;
    for (u64 d = 1; d * d <= q; ++d) {
        if (q % d != 0) continue;
        divs.push_back(d);
        if (d != q / d) divs.push_back(q / d);
    }
    return CoinSet::from_coins(std::move(divs));
}

std::optional<Partition> mcda(u64 amount, const CoinSet& coins) {
    if (amount == 0) throw invalid_component_error("amount must be >= 1");
    constexpr u64 kInfeasible = std::numeric_limits<u64>::max();

    std::vector<u64> best(amount + 1, kInfeasible);
    best[0] = 0;
    for (u64 a = 1; a <= amount; ++a)
        for (u64 c : coins.coins()) {
            if (c > a || best[a - c] == kInfeasible) continue;
            best[a] = std::min(best[a], best[a - c] + 1);
        }
    if (best[amount] == kInfeasible) return std::nullopt;

    // Largest feasible coin first yields the lexicographically greatest
    // minimum partition; the resulting parts are automatically non-increasing.
    Partition parts;
    u64 remaining = amount;
    while (remaining > 0) {
        for (u64 c : coins.coins()) {
            if (c > remaining || best[remaining - c] == kInfeasible) continue;
            if (best[remaining - c] + 1 == best[remaining]) {
                parts.push_back(c);
                remaining -= c;
                break;
            }
        }
    }
    return parts;
}

namespace {

void partitions_rec(u64 remaining, const std::vector<u64>& coins, std::size_t min_idx,
                    Partition& current, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (std::size_t i = min_idx; i < coins.size(); ++i) {
        if (coins[i] > remaining) continue;
        current.push_back(coins[i]);
        partitions_rec(remaining - coins[i], coins, i, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Partition> all_partitions(u64 amount, const CoinSet& coins) {
    if (amount == 0) throw invalid_component_error("amount must be >= 1");
    std::vector<Partition> out;
    Partition current;
    partitions_rec(amount, coins.coins(), 0, current, out);
    return out;
}

}  // namespace ddsx
