#include "ddsx/function_graph.hpp"

#include <limits>
#include <numeric>
#include <string>

namespace ddsx {

FunctionGraph FunctionGraph::from_next_map(std::vector<State> next) {
    for (State t : next)
        if (t >= next.size())
            throw invalid_component_error("next-state map target out of range");
    return FunctionGraph(std::move(next));
}

FunctionGraph build_cycle_graph(u64 p, u64 n) {
    if (p == 0 || n == 0)
        throw invalid_component_error("cycle graph needs period and count >= 1");
    const u64 size = checked_mul(p, n);
    if (size > std::numeric_limits<FunctionGraph::State>::max())
        throw arithmetic_overflow_error("state count exceeds index range");
    std::vector<FunctionGraph::State> next(size);
    for (u64 c = 0; c < n; ++c) {
        const u64 base = c * p;
        for (u64 i = 0; i < p; ++i)
            next[base + i] = static_cast<FunctionGraph::State>(base + (i + 1) % p);
    }
    return FunctionGraph::from_next_map(std::move(next));
}

FunctionGraph graph_sum(const FunctionGraph& a, const FunctionGraph& b) {
    const u64 size = checked_add(a.size(), b.size());
    if (size > std::numeric_limits<FunctionGraph::State>::max())
        throw arithmetic_overflow_error("state count exceeds index range");
    std::vector<FunctionGraph::State> next;
    next.reserve(size);
    next.insert(next.end(), a.next_map().begin(), a.next_map().end());
    const auto offset = static_cast<FunctionGraph::State>(a.size());
    for (FunctionGraph::State t : b.next_map())
        next.push_back(static_cast<FunctionGraph::State>(t + offset));
    return FunctionGraph::from_next_map(std::move(next));
}

FunctionGraph graph_product(const FunctionGraph& a, const FunctionGraph& b) {
    const u64 size = checked_mul(a.size(), b.size());
    if (size > std::numeric_limits<FunctionGraph::State>::max())
        throw arithmetic_overflow_error("product state count exceeds index range");
    std::vector<FunctionGraph::State> next(size);
    const u64 bs = b.size();
    for (u64 x = 0; x < a.size(); ++x)
        for (u64 y = 0; y < bs; ++y)
            next[x * bs + y] =
                static_cast<FunctionGraph::State>(a.next(static_cast<FunctionGraph::State>(x)) * bs +
                                                  b.next(static_cast<FunctionGraph::State>(y)));
    return FunctionGraph::from_next_map(std::move(next));
}

CycleSet cycle_structure(const FunctionGraph& g) {
    const std::size_t n = g.size();
    // Peel transient states: repeatedly remove states with in-degree zero.
    std::vector<u64> indegree(n, 0);
    for (std::size_t s = 0; s < n; ++s)
        ++indegree[g.next(static_cast<FunctionGraph::State>(s))];
    std::vector<FunctionGraph::State> stack;
    for (std::size_t s = 0; s < n; ++s)
        if (indegree[s] == 0) stack.push_back(static_cast<FunctionGraph::State>(s));
    std::vector<bool> transient(n, false);
    while (!stack.empty()) {
        const auto s = stack.back();
        stack.pop_back();
        transient[s] = true;
        const auto t = g.next(s);
        if (--indegree[t] == 0) stack.push_back(t);
    }

    // Remaining states lie on cycles; walk each once.
    std::vector<bool> visited(n, false);
    std::vector<CycleComponent> raw;
    for (std::size_t s = 0; s < n; ++s) {
        if (transient[s] || visited[s]) continue;
        u64 length = 0;
        auto cur = static_cast<FunctionGraph::State>(s);
        while (!visited[cur]) {
            visited[cur] = true;
            ++length;
            cur = g.next(cur);
        }
        raw.push_back({length, 1});
    }
    return canonicalize(std::move(raw));
}

namespace {

std::vector<u64> divisors_ascending(u64 q) {
    std::vector<u64> divs;
    for (u64 d = 1; d * d <= q; ++d) {
        if (q % d != 0) continue;
        divs.push_back(d);
        if (d != q / d) divs.push_back(q / d);
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// Extend `current` with period s repeated over the remaining target, trying
// larger divisor indices first is not needed; ascending index keeps the
// recursion deterministic.
void enumerate_weighted(const std::vector<u64>& periods, const std::vector<u64>& weights,
                        std::size_t idx, u64 remaining, std::vector<CycleComponent>& current,
                        SolutionSet& out) {
    if (remaining == 0) {
        out.insert(canonicalize(current));
        return;
    }
    if (idx == periods.size()) return;
    const u64 w = weights[idx];
    const u64 max_take = remaining / w;
    for (u64 m = 0; m <= max_take; ++m) {
        if (m > 0) current.push_back({periods[idx], m});
        enumerate_weighted(periods, weights, idx + 1, remaining - m * w, current, out);
        if (m > 0) current.pop_back();
    }
}

}  // namespace

SolutionSet brute_force_simple_solutions(u64 p, u64 n, u64 q) {
    if (p == 0 || n == 0 || q == 0)
        throw invalid_component_error("simple equation parameters must be >= 1");
    std::vector<u64> periods, weights;
    for (u64 s : divisors_ascending(q)) {
        if (checked_lcm(p, s) != q) continue;
        periods.push_back(s);
        weights.push_back(std::gcd(p, s));
    }
    SolutionSet out;
    std::vector<CycleComponent> current;
    enumerate_weighted(periods, weights, 0, n, current, out);
    return out;
}

SolutionSet brute_force_direct_check(u64 p, u64 n, u64 q) {
    if (p == 0 || n == 0 || q == 0)
        throw invalid_component_error("simple equation parameters must be >= 1");
    const std::vector<u64> divs = divisors_ascending(q);
    const CycleSet lhs = CycleSet::single(p);
    const CycleSet target = CycleSet::single(q, n);
    SolutionSet out;

    // Odometer over all multisets of divisors with at most n components in
    // total; every candidate is verified by evaluating the product.
    std::vector<u64> counts(divs.size(), 0);
    for (;;) {
        std::size_t i = 0;
        u64 total = std::accumulate(counts.begin(), counts.end(), u64{0});
        for (; i < divs.size(); ++i) {
            if (total < n) {
                ++counts[i];
                break;
            }
            total -= counts[i];
            counts[i] = 0;
        }
        if (i == divs.size()) break;

        std::vector<CycleComponent> raw;
        for (std::size_t j = 0; j < divs.size(); ++j)
            if (counts[j] > 0) raw.push_back({divs[j], counts[j]});
        CycleSet candidate = canonicalize(std::move(raw));
        if (multiply(lhs, candidate) == target) out.insert(std::move(candidate));
    }
    return out;
}

}  // namespace ddsx
