#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gtop {

using Vertex = int;
// A face is a nonempty, strictly increasing list of vertex labels.
using Face = std::vector<Vertex>;

// Finite simplicial complex stored as its full face set.
//
// Faces are kept per dimension in lexicographic order, so iteration order is
// canonical and two complexes compare equal iff their face sets agree. The
// empty face is never stored.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  // Downward closure of the given facets. Facets may be non-maximal, unsorted
  // or repeated; an empty facet is an InputError.
  static SimplicialComplex from_facets(const std::vector<Face>& facets);

  // Adopts a face set that is already downward closed. Faces are canonicalized
  // and deduplicated; a missing boundary face is an InputError.
  static SimplicialComplex from_closed_faces(std::vector<Face> faces);

  bool empty() const { return by_dim_.empty(); }
  int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
  std::size_t size() const;
  const std::vector<Vertex>& vertices() const { return vertices_; }

  // Faces with exactly k+1 vertices; empty span when k is out of range.
  std::span<const Face> faces_of_dim(int k) const;
  // All faces, ordered by dimension then lexicographically.
  std::vector<Face> faces() const;
  // Faces not contained in a larger face, in canonical order.
  std::vector<Face> facets() const;

  bool contains(std::span<const Vertex> face) const;
  std::vector<std::size_t> f_vector() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<std::vector<Face>> by_dim_;
  std::vector<Vertex> vertices_;
};

// Sorts and deduplicates; throws InputError for an empty result.
Face canonical_face(Face face);
bool is_subface(std::span<const Vertex> small, std::span<const Vertex> big);

// Order-two relabeling of vertices.
class Involution {
 public:
  Involution() = default;
  // Throws InputError unless map(map(v)) == v for every key.
  explicit Involution(std::map<Vertex, Vertex> map);

  Vertex operator()(Vertex v) const;
  Face operator()(std::span<const Vertex> face) const;
  const std::map<Vertex, Vertex>& map() const { return map_; }

  friend bool operator==(const Involution&, const Involution&) = default;

 private:
  std::map<Vertex, Vertex> map_;
};

// Where a vertex of a box-type complex came from.
enum class Shore : std::uint8_t { zero, one, apex_x, apex_y };

struct VertexRecord {
  Vertex graph_vertex = -1;  // -1 for apexes
  Shore shore = Shore::zero;
  friend bool operator==(const VertexRecord&, const VertexRecord&) = default;
};

enum class Provenance : std::uint8_t { generic, box, box0, box_cones, hom_k2 };

// A simplicial complex with a free simplicial Z2-action.
struct Z2Complex {
  SimplicialComplex complex;
  Involution action;
  Provenance provenance = Provenance::generic;
  // Filled only for box-type complexes.
  std::map<Vertex, VertexRecord> records;

  friend bool operator==(const Z2Complex&, const Z2Complex&) = default;
};

// Empty string when the action is a free simplicial involution of the
// complex, otherwise a description of the first violation found.
std::string z2_violation(const Z2Complex& z);
bool is_free_z2(const Z2Complex& z);
// Throws InputError carrying the violation.
void validate_z2(const Z2Complex& z);

long long euler_characteristic(const SimplicialComplex& k);

// The `count` smallest nonnegative labels not used by `k`.
std::vector<Vertex> fresh_labels(const SimplicialComplex& k, std::size_t count);

struct Subdivision {
  SimplicialComplex complex;
  // vertex_faces[i] is the face of the original complex that became vertex i.
  std::vector<Face> vertex_faces;

  std::optional<Vertex> label_of(std::span<const Vertex> face) const;
};

// Vertices are the faces of `k` relabeled 0..m-1 in canonical face order;
// faces are chains under strict inclusion.
Subdivision barycentric_subdivision(const SimplicialComplex& k);
Z2Complex subdivide_involution(const Z2Complex& z);

SimplicialComplex suspension(const SimplicialComplex& k);
// Apexes are the two smallest fresh labels and are swapped by the action.
Z2Complex z2_suspension(const Z2Complex& z);

SimplicialComplex cone(const SimplicialComplex& k, Vertex apex);

// {tau in K : tau ∪ sigma in K}. Throws InputError if sigma is not a face.
SimplicialComplex star(const SimplicialComplex& k, std::span<const Vertex> sigma);

struct NerveMember {
  Vertex label;
  std::vector<int> elements;
};
// Labels of members with a common element span a face.
SimplicialComplex nerve(const std::vector<NerveMember>& family);

struct IsomorphismOptions {
  std::size_t max_vertices = 12;
  bool force = false;
};
// Exact backtracking search for a face-preserving vertex bijection.
// Throws GuardError above the vertex limit unless forced.
bool isomorphic(const SimplicialComplex& a, const SimplicialComplex& b,
                const IsomorphismOptions& options = {});

}  // namespace gtop
