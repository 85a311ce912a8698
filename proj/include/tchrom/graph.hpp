#pragma once

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tchrom/combinat.hpp"

namespace tchrom {

/// Unordered vertex pair, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple graph on vertices 0..n-1. Immutable once built; the
/// edge list is kept sorted, and edge indices refer to that order.
class Graph {
public:
    Graph() = default;

    /// Throws FormatError on loops, duplicates or out-of-range endpoints.
    static Graph from_edge_list(int n, std::span<const std::pair<int, int>> pairs);
    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph empty(int n);
    /// Root is vertex 0, leaves 1..n-1.
    static Graph star(int n);
    static Graph path(int n);
    static Graph cycle(int n);

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_edge(Edge e) const;
    /// Position of e in edges(); throws std::invalid_argument if absent.
    std::size_t edge_index(Edge e) const;

    bool is_connected() const;
    bool is_tree() const { return is_connected() && edge_count() == n_ - 1; }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    Graph(int n, std::vector<Edge> edges);
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

/// H's vertices are shifted by |V(G)|.
Graph disjoint_union(const Graph& g, const Graph& h);

Graph delete_edge(const Graph& g, Edge e);

/// Merges the endpoints of e into one vertex v_e, dropping loops and
/// parallel edges. v_e takes the smaller endpoint's index; vertices above
/// the larger endpoint shift down by one.
Graph contract_edge(const Graph& g, Edge e);

struct NearContraction {
    Graph graph;
    Edge leaf_edge;  // {v', v_e}; v' is the last vertex
};

/// Contracts e into v_e and attaches a new pendant vertex v' to v_e.
NearContraction near_contract(const Graph& g, Edge e);

bool is_internal(const Graph& g, Edge e);
/// True iff the endpoints of e stay connected once e is removed.
bool lies_on_cycle(const Graph& g, Edge e);

/// Bijection vertex -> {1..n}.
class Labeling {
public:
    /// labels[v] is the label of vertex v; throws FormatError unless a
    /// permutation of 1..n.
    explicit Labeling(std::vector<int> labels);
    static Labeling identity(int n);

    int operator()(int v) const { return labels_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& labels() const noexcept { return labels_; }
    int size() const noexcept { return static_cast<int>(labels_.size()); }
    /// v -> n+1-L(v)
    Labeling complement() const;

    friend bool operator==(const Labeling&, const Labeling&) = default;

private:
    std::vector<int> labels_;
};

/// Direction per edge of a fixed graph, indexed like Graph::edges().
/// forward[i] means edges()[i].u -> edges()[i].v.
class Orientation {
public:
    Orientation() = default;
    explicit Orientation(std::vector<bool> forward) : forward_(std::move(forward)) {}

    /// Orients each edge from smaller to larger label.
    static Orientation induced_by(const Graph& g, const Labeling& l);
    /// Orients each edge toward the larger color (requires proper colors).
    static Orientation toward_larger(const Graph& g, std::span<const int> colors);
    /// Parses "u>v,..." and checks it covers every edge exactly once.
    static Orientation parse(const Graph& g, const std::string& spec);

    std::size_t size() const noexcept { return forward_.size(); }
    bool forward(std::size_t i) const { return forward_[i]; }
    std::pair<int, int> arc(const Graph& g, std::size_t i) const;
    Orientation reversed() const;

    friend bool operator==(const Orientation&, const Orientation&) = default;

private:
    std::vector<bool> forward_;
};

/// Proper coloring onto {1..num_colors}, every color used.
struct Coloring {
    std::vector<int> color;  // color[v] in 1..num_colors
    int num_colors = 0;
};

/// Visitor-style enumerators: each calls fn once per object, in a fixed
/// order. They throw CapExceeded past the configured limits.
void for_each_labeling(int n, const std::function<void(const Labeling&)>& fn);
std::vector<Labeling> enumerate_labelings(const Graph& g);

bool is_acyclic(const Graph& g, const Orientation& o);
void for_each_acyclic_orientation(const Graph& g, const std::function<void(const Orientation&)>& fn);
std::vector<Orientation> enumerate_acyclic_orientations(const Graph& g);

void for_each_proper_coloring(const Graph& g, int num_colors, const std::function<void(const Coloring&)>& fn);
std::vector<Coloring> enumerate_proper_colorings(const Graph& g, int num_colors);

int ascents_labeled(const Graph& g, const Labeling& l, std::span<const int> colors);
int ascents_oriented(const Graph& g, const Orientation& o, std::span<const int> colors);

Composition coloring_composition(const Coloring& k);

/// All n^(n-2) labeled trees on n vertices, via Pruefer decoding.
std::vector<Graph> enumerate_trees(int n);

/// Labeling from "2,1,3,4,5" (label of vertex 0, vertex 1, ...).
Labeling parse_labeling(const std::string& spec, int n);

}  // namespace tchrom
