#pragma once

// Graph families: finite ones are built whole; Z^n and regular trees are built as balls
// carrying a Truncation so that probes stay away from the cut.

#include "graphcurv/graph.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace graphcurv {

/// A regular graph whose edges at each vertex carry distinct labels 0..d-1, with the same
/// label seen from both ends: rotation[a][l] is the neighbor a[l].
struct RotationMap {
  Graph graph;
  std::vector<std::vector<VertexId>> rotation;
};

/// Omega_d on bitstrings; vertex id = integer value, label = bits with coordinate 0 first.
Graph hypercube(std::size_t d);

/// Omega_d with edge (a, a xor e_i) labelled i.
RotationMap labelled_hypercube(std::size_t d);

/// C_k, k >= 3.
Graph cycle(std::size_t k);

/// Vertices of Z^n with |p|_1 <= radius; center (the origin) is vertex 0.
Graph lattice_ball(std::size_t n, std::size_t radius);

/// Root 0 with d children, every other internal vertex with d - 1 children.
Graph regular_tree(std::size_t d, std::size_t depth);

/// K_{n,n}: left side 0..n-1, right side n..2n-1.
Graph complete_bipartite(std::size_t n);

/// Center 0 and leaves 1..n.
Graph star(std::size_t n);

/// Cayley graph, reachable from the identity, of the transpositions (i j) for the edges
/// {i,j} of h. Labels are one-line permutation notation.
Graph interchange_graph(const Graph& h);

/// Cayley graph of S_n generated by all transpositions.
Graph transposition_cayley(std::size_t n);

/// Cayley graph of S_n generated by (i, i+1).
Graph adjacent_transposition_cayley(std::size_t n);

/// Triangulations of the convex n-gon (n >= 4) joined by single diagonal flips.
Graph flip_graph(std::size_t n);

/// Bipartite incidence graph of the cyclic design {D + i mod n}: point i ~ block j iff
/// j - i mod n lies in D. Points are 0..n-1, blocks n..2n-1.
Graph cyclic_incidence_graph(std::size_t n, const std::vector<std::size_t>& difference_set);

/// Zig-zag product: (a, u) ~ (a[v], w) for each 2-walk u - v - w in g2.
/// Requires g1 regular of degree |V(g2)| and g2 regular. Vertex (a, u) has id a*|V2| + u
/// and label "(label1(a),u+1)".
Graph zigzag(const RotationMap& g1, const Graph& g2);

/// "petersen", "dodecahedron", "heawood", "fano-complement" ((7,4,2) incidence graph),
/// "biplane-11" ((11,5,2) incidence graph). Throws std::invalid_argument otherwise.
Graph named_graph(const std::string& name);

}  // namespace graphcurv
