#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "tchrom/error.hpp"
#include "tchrom/graph.hpp"
#include "tchrom/limits.hpp"

using namespace tchrom;

TEST_CASE("construction normalizes and validates edges") {
    const std::pair<int, int> pairs[] = {{3, 0}, {0, 1}, {2, 1}, {2, 3}};
    Graph g = Graph::from_edge_list(4, pairs);
    CHECK(g == Graph::cycle(4));
    CHECK(g.edges().front() == Edge(0, 1));
    CHECK(g.degree(0) == 2);
    CHECK(g.edge_index(Edge(3, 2)) == 3);
    const std::pair<int, int> dup[] = {{0, 1}, {1, 0}};
    CHECK_THROWS_AS(Graph::from_edge_list(2, dup), FormatError);
    const std::pair<int, int> loop[] = {{1, 1}};
    CHECK_THROWS_AS(Graph::from_edge_list(2, loop), FormatError);
    const std::pair<int, int> far[] = {{0, 5}};
    CHECK_THROWS_AS(Graph::from_edge_list(3, far), FormatError);
    CHECK_THROWS_AS(g.edge_index(Edge(0, 2)), std::invalid_argument);
}

TEST_CASE("edge surgery") {
    Graph c4 = Graph::cycle(4);
    CHECK(delete_edge(c4, Edge(0, 1)).edge_count() == 3);
    Graph tri = contract_edge(c4, Edge(0, 1));
    CHECK(tri.vertex_count() == 3);
    CHECK(tri.edge_count() == 3);
    // Contracting a triangle edge collapses the parallel pair.
    Graph k2 = contract_edge(Graph::cycle(3), Edge(0, 1));
    CHECK(k2 == Graph::path(2));
    auto nc = near_contract(c4, Edge(1, 2));
    CHECK(nc.graph.vertex_count() == 4);
    CHECK(nc.leaf_edge == Edge(1, 3));
    CHECK(nc.graph.degree(3) == 1);
    CHECK(disjoint_union(Graph::path(2), Graph::path(3)).edge_count() == 3);
    CHECK(disjoint_union(Graph::path(2), Graph::path(3)).has_edge(Edge(3, 4)));
}

TEST_CASE("edge classifiers") {
    Graph p4 = Graph::path(4);
    CHECK(is_internal(p4, Edge(1, 2)));
    CHECK_FALSE(is_internal(p4, Edge(0, 1)));
    CHECK_FALSE(lies_on_cycle(p4, Edge(1, 2)));
    CHECK(lies_on_cycle(Graph::cycle(5), Edge(0, 4)));
    CHECK(Graph::star(5).is_tree());
    CHECK_FALSE(Graph::cycle(3).is_tree());
    CHECK_FALSE(Graph::empty(2).is_connected());
}

TEST_CASE("labelings and orientations") {
    CHECK_THROWS_AS(Labeling({1, 1, 2}), FormatError);
    CHECK_THROWS_AS(parse_labeling("1,2,x", 3), FormatError);
    CHECK_THROWS_AS(parse_labeling("1,2", 3), FormatError);
    CHECK(parse_labeling("2,1,3", 3).labels() == std::vector<int>{2, 1, 3});
    CHECK(Labeling({2, 1, 3}).complement().labels() == std::vector<int>{2, 3, 1});

    Graph c4 = Graph::cycle(4);
    Orientation o = Orientation::parse(c4, "0>1,2>1,2>3,0>3");
    CHECK(is_acyclic(c4, o));
    CHECK_FALSE(is_acyclic(c4, Orientation::parse(c4, "0>1,1>2,2>3,3>0")));
    CHECK_THROWS_AS(Orientation::parse(c4, "0>1,2>1,2>3"), FormatError);
    CHECK_THROWS_AS(Orientation::parse(c4, "0>1,1>0,2>1,2>3,0>3"), FormatError);
    CHECK_THROWS_AS(Orientation::parse(c4, "0>2,0>1,2>1,2>3"), FormatError);
    CHECK_THROWS_AS(Orientation::parse(c4, "0-1"), FormatError);
    CHECK(o.reversed().reversed() == o);
    CHECK(Orientation::induced_by(c4, Labeling::identity(4)) == Orientation::parse(c4, "0>1,1>2,2>3,0>3"));
}

TEST_CASE("acyclic orientations are those induced by labelings") {
    for (const Graph& g : {Graph::cycle(4), Graph::cycle(5), Graph::star(5), Graph::path(5)}) {
        std::set<std::vector<bool>> ours;
        for (const auto& o : enumerate_acyclic_orientations(g)) {
            std::vector<bool> fwd;
            for (std::size_t i = 0; i < o.size(); ++i) fwd.push_back(o.forward(i));
            ours.insert(fwd);
        }
        CHECK(ours == oracle::acyclic_orientations(g));
    }
    CHECK(enumerate_acyclic_orientations(Graph::cycle(4)).size() == 14);
}

TEST_CASE("proper colorings match a naive enumeration") {
    for (const Graph& g : {Graph::cycle(4), Graph::star(4), Graph::path(5), Graph::empty(3)}) {
        for (int ell = 1; ell <= g.vertex_count(); ++ell) {
            std::vector<std::vector<int>> ours;
            for (const auto& k : enumerate_proper_colorings(g, ell)) ours.push_back(k.color);
            std::sort(ours.begin(), ours.end());
            auto theirs = oracle::colorings(g, ell);
            std::sort(theirs.begin(), theirs.end());
            CHECK(ours == theirs);
        }
    }
}

TEST_CASE("labeled ascents of L and its complement partition the edges") {
    Graph g = Graph::cycle(5);
    for (const auto& l : enumerate_labelings(g))
        for (const auto& k : enumerate_proper_colorings(g, 3))
            CHECK(ascents_labeled(g, l, k.color) + ascents_labeled(g, l.complement(), k.color) == g.edge_count());
}

TEST_CASE("oriented ascents agree with labeled ascents for the induced orientation") {
    Graph g = Graph::star(4);
    for (const auto& l : enumerate_labelings(g))
        for (const auto& k : enumerate_proper_colorings(g, 3))
            CHECK(ascents_oriented(g, Orientation::induced_by(g, l), k.color) == ascents_labeled(g, l, k.color));
}

TEST_CASE("Pruefer enumeration gives n^(n-2) distinct trees") {
    for (int n = 1; n <= 6; ++n) {
        auto trees = enumerate_trees(n);
        std::set<std::vector<Edge>> distinct;
        for (const auto& t : trees) {
            CHECK(t.is_tree());
            distinct.insert(t.edges());
        }
        Int expected = 1;
        for (int i = 0; i < n - 2; ++i) expected *= n;
        CHECK(static_cast<Int>(trees.size()) == expected);
        CHECK(distinct.size() == trees.size());
    }
}

TEST_CASE("enumeration caps") {
    Limits saved = limits();
    Limits tight = saved;
    tight.max_labeling_vertices = 3;
    tight.max_orientation_edges = 2;
    set_limits(tight);
    CHECK_THROWS_AS(enumerate_labelings(Graph::path(4)), CapExceeded);
    CHECK_THROWS_AS(enumerate_acyclic_orientations(Graph::path(4)), CapExceeded);
    set_limits(saved);
    CHECK_NOTHROW(enumerate_labelings(Graph::path(4)));
}

TEST_CASE("deletion and near-contraction of the hub graph") {
    const Edge es[] = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}};
    const Graph g = Graph::from_edges(5, es);
    CHECK(delete_edge(g, Edge(1, 2)) == Graph::star(5));
    const auto nc = near_contract(g, Edge(1, 2));
    const Edge expected[] = {{0, 1}, {0, 2}, {0, 3}, {1, 4}};
    CHECK(nc.graph == Graph::from_edges(5, expected));
    CHECK(nc.leaf_edge == Edge(1, 4));
    CHECK(nc.graph.degree(4) == 1);
}
