#pragma once

#include <utility>
#include <vector>

#include "gtop/graph.hpp"
#include "gtop/simplicial.hpp"

namespace gtop {

// A ⊎ B: vertex a of shore 0 and vertex b of shore 1. For a graph on n
// vertices, (v, 0) carries label v and (v, 1) carries label n + v; cone
// apexes carry 2n and 2n + 1.
struct ShoreVertex {
  int vertex;
  int shore;
};
Vertex shore_label(int n, ShoreVertex sv);
// Splits a face of a box-type complex into its shore-0 and shore-1 parts
// (graph labels, apexes dropped).
std::pair<VertexSet, VertexSet> decode_shores(int n, std::span<const Vertex> face);

// N(G): nonempty S with CN(S) ≠ ∅, on graph vertex labels.
SimplicialComplex neighborhood_complex(const Graph& g);

// B(G): A ⊎ B with A ∩ B = ∅, G[A,B] complete bipartite and
// CN(A) ≠ ∅ ≠ CN(B), using CN(∅) = V(G). The action swaps shores.
Z2Complex box_complex(const Graph& g);

// B₀(G): as B(G) without the common-neighbor conditions.
Z2Complex box0_complex(const Graph& g);

// B_C(G): B(G) with a cone from apex x over shore 0 and from apex y over
// shore 1.
Z2Complex cones_over_shores_complex(const Graph& g);

// Elements (A, B) of the cell poset of Hom(K₂, G): A, B nonempty, disjoint,
// G[A,B] complete bipartite. Element i of the order complex is cell i.
std::vector<std::pair<VertexSet, VertexSet>> hom_k2_cells(const Graph& g);

// Order complex of the cell poset under componentwise inclusion, with the
// action (A, B) -> (B, A).
Z2Complex hom_k2_order_complex(const Graph& g);

// Induced subcomplex on one shore of a complex built by box_complex,
// relabeled to graph vertices. Throws InputError for other provenances.
SimplicialComplex shore_subcomplex(const Z2Complex& z, int shore);

}  // namespace gtop
