#include "tchrom/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "tchrom/error.hpp"
#include "tchrom/limits.hpp"

namespace tchrom {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    adj_.assign(static_cast<std::size_t>(n_), {});
    for (const auto& e : edges_) {
        adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    if (n < 0) throw FormatError("vertex count must be non-negative");
    std::vector<Edge> es;
    es.reserve(edges.size());
    for (const auto& e : edges) {
        if (e.u == e.v) throw FormatError("loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.v >= n)
            throw FormatError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") out of range");
        es.push_back(e);
    }
    std::sort(es.begin(), es.end());
    if (auto it = std::adjacent_find(es.begin(), es.end()); it != es.end())
        throw FormatError("duplicate edge (" + std::to_string(it->u) + "," + std::to_string(it->v) + ")");
    return Graph(n, std::move(es));
}

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> pairs) {
    std::vector<Edge> es;
    for (auto [a, b] : pairs) {
        if (a == b) throw FormatError("loop at vertex " + std::to_string(a));
        es.emplace_back(a, b);
    }
    return from_edges(n, es);
}

Graph Graph::empty(int n) { return from_edges(n, {}); }

Graph Graph::star(int n) {
    if (n < 1) throw std::invalid_argument("star: n must be >= 1");
    std::vector<Edge> es;
    for (int v = 1; v < n; ++v) es.emplace_back(0, v);
    return Graph(n, std::move(es));
}

Graph Graph::path(int n) {
    if (n < 1) throw std::invalid_argument("path: n must be >= 1");
    std::vector<Edge> es;
    for (int v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
    return Graph(n, std::move(es));
}

Graph Graph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: n must be >= 3");
    std::vector<Edge> es;
    for (int v = 0; v < n; ++v) es.emplace_back(v, (v + 1) % n);
    return Graph(n, std::move(es));
}

bool Graph::has_edge(Edge e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

std::size_t Graph::edge_index(Edge e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e)
        throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                    ") is not in the graph");
    return static_cast<std::size_t>(it - edges_.begin());
}

namespace {

// Vertices reachable from `start` while ignoring edge `skip` (if given).
std::vector<bool> reachable(const Graph& g, int start, const Edge* skip) {
    std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
    std::vector<int> stack{start};
    seen[static_cast<std::size_t>(start)] = true;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : g.neighbors(x)) {
            if (skip && Edge(x, y) == *skip) continue;
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = true;
                stack.push_back(y);
            }
        }
    }
    return seen;
}

}  // namespace

bool Graph::is_connected() const {
    if (n_ == 0) return true;
    auto seen = reachable(*this, 0, nullptr);
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    std::vector<Edge> es(g.edges());
    const int shift = g.vertex_count();
    for (const auto& e : h.edges()) es.emplace_back(e.u + shift, e.v + shift);
    return Graph::from_edges(g.vertex_count() + h.vertex_count(), es);
}

Graph delete_edge(const Graph& g, Edge e) {
    g.edge_index(e);
    std::vector<Edge> es;
    for (const auto& f : g.edges())
        if (f != e) es.push_back(f);
    return Graph::from_edges(g.vertex_count(), es);
}

Graph contract_edge(const Graph& g, Edge e) {
    g.edge_index(e);
    auto remap = [&](int x) {
        if (x == e.v) return e.u;
        return x > e.v ? x - 1 : x;
    };
    std::vector<Edge> es;
    for (const auto& f : g.edges()) {
        int a = remap(f.u), b = remap(f.v);
        if (a != b) es.emplace_back(a, b);
    }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return Graph::from_edges(g.vertex_count() - 1, es);
}

NearContraction near_contract(const Graph& g, Edge e) {
    Graph c = contract_edge(g, e);
    const int ve = e.u;
    const int vprime = c.vertex_count();
    std::vector<Edge> es(c.edges());
    es.emplace_back(ve, vprime);
    return {Graph::from_edges(c.vertex_count() + 1, es), Edge(ve, vprime)};
}

bool is_internal(const Graph& g, Edge e) {
    g.edge_index(e);
    return g.degree(e.u) >= 2 && g.degree(e.v) >= 2;
}

bool lies_on_cycle(const Graph& g, Edge e) {
    g.edge_index(e);
    return reachable(g, e.u, &e)[static_cast<std::size_t>(e.v)];
}

Labeling::Labeling(std::vector<int> labels) : labels_(std::move(labels)) {
    std::vector<bool> used(labels_.size() + 1, false);
    for (int l : labels_) {
        if (l < 1 || l > static_cast<int>(labels_.size()))
            throw FormatError("label " + std::to_string(l) + " out of range 1.." + std::to_string(labels_.size()));
        if (used[static_cast<std::size_t>(l)]) throw FormatError("label " + std::to_string(l) + " used twice");
        used[static_cast<std::size_t>(l)] = true;
    }
}

Labeling Labeling::identity(int n) {
    std::vector<int> l(static_cast<std::size_t>(n));
    std::iota(l.begin(), l.end(), 1);
    return Labeling(std::move(l));
}

Labeling Labeling::complement() const {
    std::vector<int> l(labels_);
    const int n = size();
    for (int& x : l) x = n + 1 - x;
    return Labeling(std::move(l));
}

Orientation Orientation::induced_by(const Graph& g, const Labeling& l) {
    std::vector<bool> fwd;
    fwd.reserve(g.edges().size());
    for (const auto& e : g.edges()) fwd.push_back(l(e.u) < l(e.v));
    return Orientation(std::move(fwd));
}

Orientation Orientation::toward_larger(const Graph& g, std::span<const int> colors) {
    std::vector<bool> fwd;
    fwd.reserve(g.edges().size());
    for (const auto& e : g.edges()) {
        int cu = colors[static_cast<std::size_t>(e.u)], cv = colors[static_cast<std::size_t>(e.v)];
        if (cu == cv) throw std::invalid_argument("toward_larger: coloring is not proper");
        fwd.push_back(cu < cv);
    }
    return Orientation(std::move(fwd));
}

Orientation Orientation::parse(const Graph& g, const std::string& spec) {
    std::vector<int> state(g.edges().size(), -1);
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto pos = item.find('>');
        if (pos == std::string::npos) throw FormatError("orientation item '" + item + "' is not of the form u>v");
        int a = 0, b = 0;
        try {
            std::size_t used_a = 0, used_b = 0;
            a = std::stoi(item.substr(0, pos), &used_a);
            b = std::stoi(item.substr(pos + 1), &used_b);
            if (used_a != item.substr(0, pos).size() || used_b != item.substr(pos + 1).size())
                throw std::invalid_argument("trailing characters");
        } catch (const std::logic_error&) {
            throw FormatError("orientation item '" + item + "' has non-integer endpoints");
        }
        Edge e(a, b);
        if (!g.has_edge(e)) throw FormatError("orientation item '" + item + "' is not an edge of the graph");
        auto idx = g.edge_index(e);
        if (state[idx] != -1) throw FormatError("edge in '" + item + "' oriented twice");
        state[idx] = (a == e.u) ? 1 : 0;
    }
    std::vector<bool> fwd;
    for (std::size_t i = 0; i < state.size(); ++i) {
        if (state[i] == -1) {
            const auto& e = g.edges()[i];
            throw FormatError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") has no orientation");
        }
        fwd.push_back(state[i] == 1);
    }
    return Orientation(std::move(fwd));
}

std::pair<int, int> Orientation::arc(const Graph& g, std::size_t i) const {
    const auto& e = g.edges()[i];
    return forward_[i] ? std::pair{e.u, e.v} : std::pair{e.v, e.u};
}

Orientation Orientation::reversed() const {
    std::vector<bool> r(forward_);
    r.flip();
    return Orientation(std::move(r));
}

void for_each_labeling(int n, const std::function<void(const Labeling&)>& fn) {
    if (n > limits().max_labeling_vertices)
        throw CapExceeded("labeling enumeration: n=" + std::to_string(n) + " exceeds cap " +
                          std::to_string(limits().max_labeling_vertices));
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        fn(Labeling(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
}

std::vector<Labeling> enumerate_labelings(const Graph& g) {
    std::vector<Labeling> out;
    for_each_labeling(g.vertex_count(), [&](const Labeling& l) { out.push_back(l); });
    return out;
}

bool is_acyclic(const Graph& g, const Orientation& o) {
    // Kahn's algorithm on the oriented graph.
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<int> indeg(n, 0);
    std::vector<std::vector<int>> out(n);
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        auto [a, b] = o.arc(g, i);
        out[static_cast<std::size_t>(a)].push_back(b);
        ++indeg[static_cast<std::size_t>(b)];
    }
    std::vector<int> ready;
    for (std::size_t v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push_back(static_cast<int>(v));
    std::size_t removed = 0;
    while (!ready.empty()) {
        int x = ready.back();
        ready.pop_back();
        ++removed;
        for (int y : out[static_cast<std::size_t>(x)])
            if (--indeg[static_cast<std::size_t>(y)] == 0) ready.push_back(y);
    }
    return removed == n;
}

void for_each_acyclic_orientation(const Graph& g, const std::function<void(const Orientation&)>& fn) {
    const int m = g.edge_count();
    if (m > limits().max_orientation_edges)
        throw CapExceeded("orientation enumeration: |E|=" + std::to_string(m) + " exceeds cap " +
                          std::to_string(limits().max_orientation_edges));
    const std::uint64_t total = std::uint64_t{1} << m;
    std::vector<bool> fwd(static_cast<std::size_t>(m));
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        for (int i = 0; i < m; ++i) fwd[static_cast<std::size_t>(i)] = (mask >> i) & 1U;
        Orientation o(fwd);
        if (is_acyclic(g, o)) fn(o);
    }
}

std::vector<Orientation> enumerate_acyclic_orientations(const Graph& g) {
    std::vector<Orientation> out;
    for_each_acyclic_orientation(g, [&](const Orientation& o) { out.push_back(o); });
    return out;
}

namespace {

void colorings_rec(const Graph& g, int num_colors, std::size_t v, Coloring& k, std::vector<int>& used_count,
                   int distinct, const std::function<void(const Coloring&)>& fn) {
    const auto n = k.color.size();
    if (v == n) {
        if (distinct == num_colors) fn(k);
        return;
    }
    // Not enough vertices left to use every color.
    if (static_cast<int>(n - v) < num_colors - distinct) return;
    for (int c = 1; c <= num_colors; ++c) {
        bool ok = true;
        for (int w : g.neighbors(static_cast<int>(v))) {
            if (static_cast<std::size_t>(w) < v && k.color[static_cast<std::size_t>(w)] == c) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        k.color[v] = c;
        int fresh = used_count[static_cast<std::size_t>(c)]++ == 0 ? 1 : 0;
        colorings_rec(g, num_colors, v + 1, k, used_count, distinct + fresh, fn);
        --used_count[static_cast<std::size_t>(c)];
    }
    k.color[v] = 0;
}

}  // namespace

void for_each_proper_coloring(const Graph& g, int num_colors, const std::function<void(const Coloring&)>& fn) {
    const int n = g.vertex_count();
    if (n > limits().max_coloring_vertices)
        throw CapExceeded("coloring enumeration: n=" + std::to_string(n) + " exceeds cap " +
                          std::to_string(limits().max_coloring_vertices));
    if (num_colors < 1 || num_colors > n) return;
    Coloring k;
    k.color.assign(static_cast<std::size_t>(n), 0);
    k.num_colors = num_colors;
    std::vector<int> used(static_cast<std::size_t>(num_colors) + 1, 0);
    colorings_rec(g, num_colors, 0, k, used, 0, fn);
}

std::vector<Coloring> enumerate_proper_colorings(const Graph& g, int num_colors) {
    std::vector<Coloring> out;
    for_each_proper_coloring(g, num_colors, [&](const Coloring& k) { out.push_back(k); });
    return out;
}

int ascents_labeled(const Graph& g, const Labeling& l, std::span<const int> colors) {
    int asc = 0;
    for (const auto& e : g.edges()) {
        int cu = colors[static_cast<std::size_t>(e.u)], cv = colors[static_cast<std::size_t>(e.v)];
        if ((l(e.u) < l(e.v) && cu < cv) || (l(e.v) < l(e.u) && cv < cu)) ++asc;
    }
    return asc;
}

int ascents_oriented(const Graph& g, const Orientation& o, std::span<const int> colors) {
    int asc = 0;
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        auto [a, b] = o.arc(g, i);
        if (colors[static_cast<std::size_t>(a)] < colors[static_cast<std::size_t>(b)]) ++asc;
    }
    return asc;
}

Composition coloring_composition(const Coloring& k) {
    std::vector<int> sizes(static_cast<std::size_t>(k.num_colors), 0);
    for (int c : k.color) ++sizes[static_cast<std::size_t>(c - 1)];
    std::erase(sizes, 0);
    return Composition(std::move(sizes));
}

std::vector<Graph> enumerate_trees(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_trees: n must be >= 1");
    if (n > limits().max_tree_vertices)
        throw CapExceeded("tree enumeration: n=" + std::to_string(n) + " exceeds cap " +
                          std::to_string(limits().max_tree_vertices));
    if (n == 1) return {Graph::empty(1)};
    if (n == 2) return {Graph::path(2)};

    std::vector<Graph> out;
    const auto len = static_cast<std::size_t>(n - 2);
    std::vector<int> code(len, 0);
    while (true) {
        std::vector<int> degree(static_cast<std::size_t>(n), 1);
        for (int x : code) ++degree[static_cast<std::size_t>(x)];
        std::vector<Edge> es;
        for (int x : code) {
            int leaf = 0;
            while (degree[static_cast<std::size_t>(leaf)] != 1) ++leaf;
            es.emplace_back(leaf, x);
            --degree[static_cast<std::size_t>(leaf)];
            --degree[static_cast<std::size_t>(x)];
        }
        int a = -1, b = -1;
        for (int v = 0; v < n; ++v) {
            if (degree[static_cast<std::size_t>(v)] == 1) (a < 0 ? a : b) = v;
        }
        es.emplace_back(a, b);
        out.push_back(Graph::from_edges(n, es));

        // Next sequence, odometer style.
        std::size_t pos = 0;
        while (pos < len && ++code[pos] == n) code[pos++] = 0;
        if (pos == len) break;
    }
    return out;
}

Labeling parse_labeling(const std::string& spec, int n) {
    std::vector<int> labels;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            labels.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument("trailing characters");
        } catch (const std::logic_error&) {
            throw FormatError("labeling entry '" + item + "' is not an integer");
        }
    }
    if (static_cast<int>(labels.size()) != n)
        throw FormatError("labeling has " + std::to_string(labels.size()) + " entries, graph has " +
                          std::to_string(n) + " vertices");
    return Labeling(std::move(labels));
}

}  // namespace tchrom
