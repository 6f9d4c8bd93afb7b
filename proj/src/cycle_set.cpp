#include "ddsx/cycle_set.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ddsx {

CycleSet CycleSet::single(u64 period, u64 count) {
    return canonicalize({{period, count}});
}

u64 CycleSet::total_components() const {
    u64 total = 0;
    for (const auto& c : comps_) total = checked_add(total, c.count);
    return total;
}

u64 CycleSet::count_of(u64 period) const noexcept {
    for (const auto& c : comps_) {
        if (c.period == period) return c.count;
        if (c.period > period) break;
    }
    return 0;
}

void SolutionSet::insert(CycleSet s) {
    auto it = std::lower_bound(items_.begin(), items_.end(), s);
    if (it != items_.end() && *it == s) return;
    items_.insert(it, std::move(s));
}

void SolutionSet::merge(const SolutionSet& other) {
    for (const auto& s : other.items_) insert(s);
}

bool SolutionSet::contains(const CycleSet& s) const {
    return std::binary_search(items_.begin(), items_.end(), s);
}

CycleSet canonicalize(std::vector<CycleComponent> raw) {
    std::map<u64, u64> merged;
    for (const auto& c : raw) {
        if (c.period == 0)
            throw invalid_component_error("cycle period must be >= 1");
        if (c.count == 0) continue;
        auto [it, inserted] = merged.emplace(c.period, c.count);
        if (!inserted) it->second = checked_add(it->second, c.count);
    }
    CycleSet out;
    out.comps_.reserve(merged.size());
    for (const auto& [p, n] : merged) out.comps_.push_back({p, n});
    return out;
}

CycleSet add(const CycleSet& a, const CycleSet& b) {
    std::vector<CycleComponent> raw = a.components();
    raw.insert(raw.end(), b.components().begin(), b.components().end());
    return canonicalize(std::move(raw));
}

CycleSet multiply(const CycleSet& a, const CycleSet& b) {
    std::vector<CycleComponent> raw;
    raw.reserve(a.entry_count() * b.entry_count());
    for (const auto& x : a.components()) {
        for (const auto& y : b.components()) {
            const u64 g = std::gcd(x.period, y.period);
            raw.push_back({checked_lcm(x.period, y.period),
                           checked_mul(checked_mul(x.count, y.count), g)});
        }
    }
    return canonicalize(std::move(raw));
}

CycleSet scalar_multiply(u64 k, const CycleSet& s) {
    if (k == 0) return {};
    std::vector<CycleComponent> raw = s.components();
    for (auto& c : raw) c.count = checked_mul(c.count, k);
    return canonicalize(std::move(raw));
}

namespace {

// Periods of s with every multiplicity expanded into individual components.
std::vector<u64> expand_instances(const CycleSet& s) {
    std::vector<u64> instances;
    for (const auto& c : s.components())
        for (u64 i = 0; i < c.count; ++i) instances.push_back(c.period);
    return instances;
}

}  // namespace

CycleSet power(const CycleSet& s, u64 n) {
    if (n == 0) return CycleSet::single(1);
    if (n == 1 || s.empty()) return s;

    const std::vector<u64> periods = expand_instances(s);
    const std::size_t m = periods.size();

    // Multinomial expansion over the individual components. A product of
    // single cycles of lengths r_1, ..., r_j splits into equal cycles of the
    // lcm length, so a composition (k_1, ..., k_m) of n contributes
    //   multinomial(n; k) * (prod_{k_t != 0} p_t^(k_t)) / l
    // components of period l = lcm of the participating periods. With one
    // participant this is the pure term C^(p^(n-1))_p, with two it reduces to
    // the gcd form of the binary product.
    constexpr auto u128_max = ~static_cast<unsigned __int128>(0);
    std::vector<CycleComponent> raw;
    std::vector<u64> k(m, 0);
    k[0] = n;
    for (;;) {
        u64 l = 1;
        unsigned __int128 prod = 1;
        for (std::size_t i = 0; i < m; ++i) {
            if (k[i] == 0) continue;
            l = checked_lcm(l, periods[i]);
            for (u64 e = 0; e < k[i]; ++e) {
                if (prod > u128_max / periods[i])
                    throw arithmetic_overflow_error("power multiplicity overflow");
                prod *= periods[i];
            }
        }
        const unsigned __int128 base = prod / l;
        if (base > UINT64_MAX)
            throw arithmetic_overflow_error("power multiplicity overflow");
        const u64 coef = multinomial(n, k);
        raw.push_back({l, checked_mul(coef, static_cast<u64>(base))});

        // Next composition: move one unit from the rightmost positive slot
        // before the tail into the slot after it, collecting the tail.
        if (k[m - 1] == n) break;
        std::size_t i = m - 1;
        while (k[i] == 0) --i;
        if (i == m - 1) {
            const u64 t = k[m - 1];
            k[m - 1] = 0;
            std::size_t j = m - 2;
            while (k[j] == 0) --j;
            --k[j];
            k[j + 1] = t + 1;
        } else {
            --k[i];
            k[i + 1] = 1;
        }
    }
    return canonicalize(std::move(raw));
}

SolutionSet nth_root(const CycleSet& v, u64 n, u64 budget) {
    if (n == 0) throw invalid_component_error("root index must be >= 1");
    SolutionSet out;
    if (n == 1) {
        out.insert(v);
        return out;
    }
    if (v.empty()) {
        out.insert(CycleSet{});  // only the empty set powers to the empty set
        return out;
    }

    // Per-period bound: m components of period s account for at least
    // m * s^(n-1) period-s components of the power.
    const auto& entries = v.components();
    std::vector<u64> bounds(entries.size(), 0);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        u64 weight = 1;
        bool too_big = false;
        for (u64 e = 0; e + 1 < n; ++e) {
            weight = checked_mul(weight, entries[i].period);
            if (weight > entries[i].count) {
                too_big = true;
                break;
            }
        }
        bounds[i] = too_big ? 0 : entries[i].count / weight;
    }
    const u64 total_bound = v.total_components();

    std::vector<u64> counts(entries.size(), 0);
    u64 examined = 0;
    for (;;) {
        // Odometer step over candidate multiplicity vectors.
        std::size_t i = 0;
        for (; i < entries.size(); ++i) {
            if (counts[i] < bounds[i]) {
                ++counts[i];
                break;
            }
            counts[i] = 0;
        }
        if (i == entries.size()) break;

        u64 total = std::accumulate(counts.begin(), counts.end(), u64{0});
        if (total == 0 || total > total_bound) continue;

        if (++examined > budget)
            throw budget_exhausted_error("nth_root candidate budget exhausted (" +
                                         std::to_string(budget) + ")");

        std::vector<CycleComponent> raw;
        for (std::size_t j = 0; j < entries.size(); ++j)
            if (counts[j] > 0) raw.push_back({entries[j].period, counts[j]});
        CycleSet candidate = canonicalize(std::move(raw));
        if (power(candidate, n) == v) out.insert(std::move(candidate));
    }
    return out;
}

}  // namespace ddsx
