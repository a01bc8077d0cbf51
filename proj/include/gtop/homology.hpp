#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "gtop/simplicial.hpp"
#include "gtop/snf.hpp"

namespace gtop {

// Simplicial chain complex over Z with canonically ordered bases.
struct ChainComplex {
  // bases[k] lists the k-faces; row/column i of a boundary matrix is basis i.
  std::vector<std::vector<Face>> bases;
  // boundaries[k-1] is D_k : C_k -> C_{k-1}, for k = 1..dim.
  std::vector<SparseIntMatrix> boundaries;

  const SparseIntMatrix& d(int k) const { return boundaries.at(static_cast<std::size_t>(k - 1)); }
};

// Signs follow the position of the omitted vertex in sorted order. Asserts
// ∂∂ = 0. Throws InputError for the empty complex.
ChainComplex boundary_matrices(const SimplicialComplex& k);

// True when every composite D_k D_{k+1} vanishes.
bool boundary_squares_to_zero(const ChainComplex& c);

struct HomologyGroup {
  int k = 0;
  std::int64_t betti = 0;
  std::vector<std::int64_t> torsion;  // invariant factors >= 2

  bool trivial() const { return betti == 0 && torsion.empty(); }
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

// Reduced integral homology, one entry per degree 0..dim.
struct HomologyProfile {
  std::vector<HomologyGroup> dims;

  // Group in degree k; trivial outside the stored range.
  HomologyGroup at(int k) const;
  // Highest degree with a nontrivial group, or -1.
  int top_degree() const;
  std::int64_t reduced_euler() const;

  // Profiles compare equal when they agree in every degree; trailing
  // trivial degrees are ignored.
  friend bool operator==(const HomologyProfile& a, const HomologyProfile& b);
};

struct HomologyOptions {
  // Complexes with more faces than this are collapse-reduced first.
  std::size_t collapse_threshold = 2000;
};

// Empty complex: all-zero profile. A single point: all zero. m components
// give betti_0 = m - 1.
HomologyProfile reduced_homology(const SimplicialComplex& k, const HomologyOptions& options = {});

// Removes free pairs (σ, τ), τ the unique proper coface of σ, until none
// remain. Preserves homotopy type.
SimplicialComplex collapse_reduce(const SimplicialComplex& k);

// -2 for the empty complex; otherwise the largest k >= -1 with H̃_i = 0 for
// all i <= k.
int homological_connectivity(const SimplicialComplex& k, const HomologyOptions& options = {});
int homological_connectivity(const SimplicialComplex& k, const HomologyProfile& profile);

enum class Pi1Verdict { trivial, unknown };

// Edge-path presentation from a spanning tree and the 2-faces, simplified
// by bounded Tietze moves. `trivial` is returned only when every generator
// is eliminated. Throws InputError for disconnected or empty input.
Pi1Verdict pi1_trivial_heuristic(const SimplicialComplex& k);

}  // namespace gtop
