#pragma once

#include <string>
#include <vector>

#include "tchrom/graph.hpp"

namespace tchrom {

struct NamedGraph {
    std::string name;
    Graph graph;
};

/// One representative per isomorphism class, by brute-force canonical
/// form over all vertex permutations. Only meant for n <= 6.
std::vector<Graph> graphs_up_to_isomorphism(int n, bool connected_only);

/// Every simple cycle as a sorted list of edge indices. Exponential in
/// |E|; small graphs only.
std::vector<std::vector<std::size_t>> simple_cycles(const Graph& g);

/// True iff no two distinct cycles share an edge.
bool cycles_edge_disjoint(const Graph& g);

/// Triangle 0-1-2 with the path 2-3-4 hanging off it.
Graph triangle_with_tail();
/// Two triangles glued at vertex 0.
Graph bowtie();
/// Two triangles sharing the edge {0,1}.
Graph diamond();
/// Triangle and 4-cycle glued at vertex 0 (6 vertices).
Graph triangle_square_cactus();
/// Bowtie with a pendant vertex on one outer corner (6 vertices).
Graph bowtie_with_pendant();

/// All connected graphs on at most max_n vertices up to isomorphism,
/// plus C6 and two 6-vertex cacti.
std::vector<NamedGraph> structural_corpus(int max_n = 5);

}  // namespace tchrom
