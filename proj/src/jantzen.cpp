#include "schur/jantzen.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <thread>
#include <utility>

namespace schur {

int nu_ep(int h, const ArithmeticParams& params) {
    if (h < 1) throw InputError("nu_ep is defined for positive integers");
    if (h % params.e != 0) return 0;
    int m = h / params.e;
    int v = 1;
    if (params.p > 0)
        while (m % params.p == 0) {
            m /= params.p;
            ++v;
        }
    return v;
}

namespace {

JantzenEdge make_edge(Partition upper, Partition lower, Node first, Node second,
                      bool column, int moved, int magnitude, int leg_sum) {
    JantzenEdge edge;
    edge.upper = std::move(upper);
    edge.lower = std::move(lower);
    edge.witness_first = first;
    edge.witness_second = second;
    edge.column_witness = column;
    edge.moved_size = moved;
    edge.magnitude = magnitude;
    edge.sign = leg_sum % 2 == 0 ? 1 : -1;
    return edge;
}

std::vector<JantzenEdge> sorted_edges(std::map<Partition, JantzenEdge>&& found) {
    std::vector<JantzenEdge> out;
    out.reserve(found.size());
    for (auto it = found.rbegin(); it != found.rend(); ++it)
        out.push_back(std::move(it->second));
    return out;
}

}  // namespace

std::vector<JantzenEdge> jantzen_partners(const Partition& lambda,
                                          const ArithmeticParams& params) {
    std::map<Partition, JantzenEdge> found;
    const Partition conj = conjugate(lambda);
    for (int a = 1; a <= lambda.length(); ++a) {
        const int row_len = lambda.part(a);
        std::vector<int> hooks(row_len + 1), vals(row_len + 1);
        for (int c = 1; c <= row_len; ++c) {
            hooks[c] = lambda.part(a) - a + conj.part(c) - c + 1;
            vals[c] = nu_ep(hooks[c], params);
        }
        for (int c = 2; c <= row_len; ++c) {
            bool any = false;
            for (int b = 1; b < c && !any; ++b) any = vals[b] != vals[c];
            if (!any) continue;

            const RimHookInfo removed = rim_hook(lambda, {a, c}, params.e);
            const Partition base = remove_rim_hook(lambda, {a, c});
            std::map<int, WrapCandidate> by_hand_col;
            for (WrapCandidate& cand : wrap_hook_candidates(base, hooks[c])) {
                const int col = cand.hook.hand.col;
                if (!by_hand_col.emplace(col, std::move(cand)).second)
                    throw InvariantError("two wrap candidates share a hand column");
            }
            for (int b = 1; b < c; ++b) {
                if (vals[b] == vals[c]) continue;
                auto it = by_hand_col.find(b);
                if (it == by_hand_col.end()) continue;
                const WrapCandidate& cand = it->second;
                if (!strictly_dominates(lambda, cand.result))
                    throw InvariantError("re-wrapped hook failed to move down in dominance");
                JantzenEdge edge = make_edge(lambda, cand.result, {a, b}, {a, c}, false,
                                             hooks[c], std::abs(vals[b] - vals[c]),
                                             removed.leg + cand.hook.leg);
                if (!found.emplace(cand.result, std::move(edge)).second)
                    throw InvariantError("two row witnesses certify the same Jantzen pair");
            }
        }
    }
    return sorted_edges(std::move(found));
}

std::vector<JantzenEdge> jantzen_partners_by_columns(const Partition& mu,
                                                     const ArithmeticParams& params) {
    std::map<Partition, JantzenEdge> found;
    const Partition conj = conjugate(mu);
    for (int z = 1; z <= mu.part(1); ++z) {
        const int height = conj.part(z);
        std::vector<int> hooks(height + 1), vals(height + 1);
        for (int x = 1; x <= height; ++x) {
            hooks[x] = mu.part(x) - x + height - z + 1;
            vals[x] = nu_ep(hooks[x], params);
        }
        for (int y = 2; y <= height; ++y) {
            bool any = false;
            for (int x = 1; x < y && !any; ++x) any = vals[x] != vals[y];
            if (!any) continue;

            const RimHookInfo removed = rim_hook(mu, {y, z}, params.e);
            const Partition base = remove_rim_hook(mu, {y, z});
            std::map<int, WrapCandidate> by_foot_row;
            for (WrapCandidate& cand : wrap_hook_candidates(base, hooks[y])) {
                const int row = cand.hook.foot.row;
                if (!by_foot_row.emplace(row, std::move(cand)).second)
                    throw InvariantError("two wrap candidates share a foot row");
            }
            for (int x = 1; x < y; ++x) {
                if (vals[x] == vals[y]) continue;
                auto it = by_foot_row.find(x);
                if (it == by_foot_row.end()) continue;
                const WrapCandidate& cand = it->second;
                if (!strictly_dominates(cand.result, mu))
                    throw InvariantError("re-wrapped hook failed to move up in dominance");
                JantzenEdge edge = make_edge(cand.result, mu, {x, z}, {y, z}, true,
                                             hooks[y], std::abs(vals[x] - vals[y]),
                                             removed.leg + cand.hook.leg);
                if (!found.emplace(cand.result, std::move(edge)).second)
                    throw InvariantError("two column witnesses certify the same Jantzen pair");
            }
        }
    }
    return sorted_edges(std::move(found));
}

bool jantzen_nonzero(const Partition& lambda, const Partition& mu,
                     const ArithmeticParams& params) {
    if (lambda.size() != mu.size())
        throw SizeMismatchError("Jantzen coefficients compare partitions of equal size");
    if (lambda == mu) return false;
    for (const JantzenEdge& edge : jantzen_partners(lambda, params))
        if (edge.lower == mu) return true;
    return false;
}

JantzenGraph build_jantzen_graph(const WeightPoset& poset, int threads) {
    if (threads < 1) throw InputError("thread count must be positive");
    JantzenGraph graph;
    graph.vertices = poset.members();
    const int n = static_cast<int>(graph.vertices.size());

    std::vector<std::vector<JantzenEdge>> slots(n);
    auto work = [&](int i) {
        for (JantzenEdge& edge : jantzen_partners(graph.vertices[i], poset.params()))
            if (poset.contains(edge.lower)) slots[i].push_back(std::move(edge));
    };

    if (threads == 1 || n < 2) {
        for (int i = 0; i < n; ++i) work(i);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        const int workers = std::min(threads, n);
        pool.reserve(workers);
        for (int t = 0; t < workers; ++t)
            pool.emplace_back([&] {
                for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) work(i);
            });
        for (std::thread& t : pool) t.join();
    }

    for (std::vector<JantzenEdge>& slot : slots)
        for (JantzenEdge& edge : slot) graph.edges.push_back(std::move(edge));
    return graph;
}

std::vector<std::vector<Partition>> linkage_classes(const JantzenGraph& graph) {
    std::map<Partition, int> index;
    for (int i = 0; i < static_cast<int>(graph.vertices.size()); ++i)
        index.emplace(graph.vertices[i], i);

    std::vector<int> parent(graph.vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };

    for (const JantzenEdge& edge : graph.edges) {
        auto u = index.find(edge.upper);
        auto l = index.find(edge.lower);
        if (u == index.end() || l == index.end())
            throw InputError("edge endpoint is not a vertex of the graph");
        parent[find(u->second)] = find(l->second);
    }

    std::map<int, std::vector<Partition>> components;
    for (int i = 0; i < static_cast<int>(graph.vertices.size()); ++i)
        components[find(i)].push_back(graph.vertices[i]);

    std::vector<std::vector<Partition>> classes;
    classes.reserve(components.size());
    for (auto& [root, members] : components) {
        std::sort(members.begin(), members.end(), std::greater<Partition>());
        classes.push_back(std::move(members));
    }
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() > b.front(); });
    return classes;
}

}  // namespace schur
