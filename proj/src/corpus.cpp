#include "tchrom/corpus.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>

namespace tchrom {

namespace {

// Index of the pair {u,v}, u < v, among all pairs of 0..n-1.
int pair_index(int n, int u, int v) { return u * n - u * (u + 1) / 2 + (v - u - 1); }

}  // namespace

std::vector<Graph> graphs_up_to_isomorphism(int n, bool connected_only) {
    if (n < 0 || n > 6) throw std::invalid_argument("graphs_up_to_isomorphism supports 0 <= n <= 6");
    const int pairs = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> endpoints;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) endpoints.emplace_back(u, v);

    // For each vertex permutation, where each pair goes.
    std::vector<std::vector<int>> pair_maps;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<int> m;
        for (auto [u, v] : endpoints) {
            int a = perm[static_cast<std::size_t>(u)], b = perm[static_cast<std::size_t>(v)];
            m.push_back(pair_index(n, std::min(a, b), std::max(a, b)));
        }
        pair_maps.push_back(std::move(m));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::set<std::uint32_t> seen;
    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs); ++mask) {
        std::uint32_t canon = mask;
        for (const auto& m : pair_maps) {
            std::uint32_t image = 0;
            for (int p = 0; p < pairs; ++p)
                if (mask >> p & 1U) image |= std::uint32_t{1} << m[static_cast<std::size_t>(p)];
            canon = std::min(canon, image);
        }
        if (!seen.insert(canon).second) continue;
        std::vector<Edge> es;
        for (int p = 0; p < pairs; ++p)
            if (canon >> p & 1U) es.emplace_back(endpoints[static_cast<std::size_t>(p)].first,
                                                 endpoints[static_cast<std::size_t>(p)].second);
        Graph g = Graph::from_edges(n, es);
        if (!connected_only || g.is_connected()) out.push_back(std::move(g));
    }
    return out;
}

std::vector<std::vector<std::size_t>> simple_cycles(const Graph& g) {
    const int m = g.edge_count();
    if (m > 20) throw std::invalid_argument("simple_cycles: too many edges");
    std::vector<std::vector<std::size_t>> out;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << m); ++mask) {
        // A cycle: every touched vertex has degree 2 and the edges connect.
        std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()), 0);
        std::vector<std::size_t> idx;
        for (int i = 0; i < m; ++i) {
            if (!(mask >> i & 1U)) continue;
            const auto& e = g.edges()[static_cast<std::size_t>(i)];
            ++deg[static_cast<std::size_t>(e.u)];
            ++deg[static_cast<std::size_t>(e.v)];
            idx.push_back(static_cast<std::size_t>(i));
        }
        if (idx.size() < 3 || std::any_of(deg.begin(), deg.end(), [](int d) { return d != 0 && d != 2; })) continue;
        std::vector<Edge> es;
        for (auto i : idx) es.push_back(g.edges()[i]);
        Graph sub = Graph::from_edges(g.vertex_count(), es);
        // Connected on its touched vertices: walking from one endpoint reaches idx.size() vertices.
        int start = es.front().u, prev = -1, cur = start, steps = 0;
        do {
            const auto& nb = sub.neighbors(cur);
            int next = nb[0] != prev ? nb[0] : nb[1];
            prev = cur;
            cur = next;
            ++steps;
        } while (cur != start);
        if (steps == static_cast<int>(idx.size())) out.push_back(std::move(idx));
    }
    return out;
}

bool cycles_edge_disjoint(const Graph& g) {
    std::vector<int> uses(g.edges().size(), 0);
    for (const auto& c : simple_cycles(g))
        for (auto i : c)
            if (++uses[i] > 1) return false;
    return true;
}

Graph triangle_with_tail() {
    const Edge es[] = {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}};
    return Graph::from_edges(5, es);
}

Graph bowtie() {
    const Edge es[] = {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}};
    return Graph::from_edges(5, es);
}

Graph diamond() {
    const Edge es[] = {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}};
    return Graph::from_edges(4, es);
}

Graph triangle_square_cactus() {
    const Edge es[] = {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {0, 5}};
    return Graph::from_edges(6, es);
}

Graph bowtie_with_pendant() {
    const Edge es[] = {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}, {1, 5}};
    return Graph::from_edges(6, es);
}

std::vector<NamedGraph> structural_corpus(int max_n) {
    std::vector<NamedGraph> out;
    for (int n = 1; n <= max_n; ++n) {
        int id = 0;
        for (auto& g : graphs_up_to_isomorphism(n, true))
            out.push_back({"connected" + std::to_string(n) + "_" + std::to_string(id++), std::move(g)});
    }
    out.push_back({"C6", Graph::cycle(6)});
    out.push_back({"triangle_square_cactus", triangle_square_cactus()});
    out.push_back({"bowtie_with_pendant", bowtie_with_pendant()});
    return out;
}

}  // namespace tchrom
