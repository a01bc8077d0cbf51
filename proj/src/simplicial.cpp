#include "gtop/simplicial.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include "gtop/errors.hpp"

namespace gtop {

namespace {

constexpr std::size_t kMaxFacetSize = 24;

bool face_less(const Face& a, const Face& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::string face_string(std::span<const Vertex> face) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < face.size(); ++i) out << (i ? "," : "") << face[i];
  out << '}';
  return out.str();
}

}  // namespace

Face canonical_face(Face face) {
  std::sort(face.begin(), face.end());
  face.erase(std::unique(face.begin(), face.end()), face.end());
  if (face.empty()) throw InputError("empty face is not allowed");
  return face;
}

bool is_subface(std::span<const Vertex> small, std::span<const Vertex> big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<Face>& facets) {
  std::vector<Face> faces;
  for (const Face& raw : facets) {
    const Face facet = canonical_face(raw);
    if (facet.size() > kMaxFacetSize)
      throw InputError("facet too large for closure: " + std::to_string(facet.size()) + " vertices");
    const std::uint32_t limit = std::uint32_t{1} << facet.size();
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
      Face sub;
      for (std::size_t i = 0; i < facet.size(); ++i)
        if (mask & (std::uint32_t{1} << i)) sub.push_back(facet[i]);
      faces.push_back(std::move(sub));
    }
  }
  return from_closed_faces(std::move(faces));
}

SimplicialComplex SimplicialComplex::from_closed_faces(std::vector<Face> faces) {
  for (Face& f : faces) f = canonical_face(std::move(f));
  std::sort(faces.begin(), faces.end(), face_less);
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

  SimplicialComplex k;
  for (Face& f : faces) {
    const std::size_t d = f.size() - 1;
    if (k.by_dim_.size() <= d) k.by_dim_.resize(d + 1);
    k.by_dim_[d].push_back(std::move(f));
  }
  for (std::size_t d = 1; d < k.by_dim_.size(); ++d) {
    for (const Face& f : k.by_dim_[d]) {
      Face boundary(f.begin() + 1, f.end());
      for (std::size_t omit = 0; omit < f.size(); ++omit) {
        if (omit > 0) boundary[omit - 1] = f[omit - 1];
        if (!std::binary_search(k.by_dim_[d - 1].begin(), k.by_dim_[d - 1].end(), boundary))
          throw InputError("face set is not downward closed: " + face_string(f) + " lacks " +
                           face_string(boundary));
      }
    }
  }
  if (!k.by_dim_.empty())
    for (const Face& f : k.by_dim_[0]) k.vertices_.push_back(f[0]);
  return k;
}

std::size_t SimplicialComplex::size() const {
  std::size_t total = 0;
  for (const auto& layer : by_dim_) total += layer.size();
  return total;
}

std::span<const Face> SimplicialComplex::faces_of_dim(int k) const {
  if (k < 0 || k > dim()) return {};
  return by_dim_[static_cast<std::size_t>(k)];
}

std::vector<Face> SimplicialComplex::faces() const {
  std::vector<Face> out;
  out.reserve(size());
  for (const auto& layer : by_dim_) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

std::vector<Face> SimplicialComplex::facets() const {
  std::vector<Face> out;
  for (int d = 0; d <= dim(); ++d) {
    const auto above = faces_of_dim(d + 1);
    // Mark every face covered by a face one dimension up.
    std::vector<char> covered(by_dim_[static_cast<std::size_t>(d)].size(), 0);
    const auto& layer = by_dim_[static_cast<std::size_t>(d)];
    for (const Face& big : above) {
      Face sub(big.begin() + 1, big.end());
      for (std::size_t omit = 0; omit < big.size(); ++omit) {
        if (omit > 0) sub[omit - 1] = big[omit - 1];
        const auto it = std::lower_bound(layer.begin(), layer.end(), sub);
        covered[static_cast<std::size_t>(it - layer.begin())] = 1;
      }
    }
    for (std::size_t i = 0; i < layer.size(); ++i)
      if (!covered[i]) out.push_back(layer[i]);
  }
  return out;
}

bool SimplicialComplex::contains(std::span<const Vertex> face) const {
  if (face.empty() || face.size() > by_dim_.size()) return false;
  const auto& layer = by_dim_[face.size() - 1];
  return std::binary_search(layer.begin(), layer.end(), face,
                            [](const auto& a, const auto& b) {
                              return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                                                  b.end());
                            });
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> out;
  for (const auto& layer : by_dim_) out.push_back(layer.size());
  return out;
}

Involution::Involution(std::map<Vertex, Vertex> map) : map_(std::move(map)) {
  for (const auto& [v, image] : map_) {
    const auto back = map_.find(image);
    if (back == map_.end() || back->second != v)
      throw InputError("involution is not of order two at vertex " + std::to_string(v));
  }
}

Vertex Involution::operator()(Vertex v) const {
  const auto it = map_.find(v);
  if (it == map_.end()) throw InputError("involution undefined at vertex " + std::to_string(v));
  return it->second;
}

Face Involution::operator()(std::span<const Vertex> face) const {
  Face out;
  out.reserve(face.size());
  for (Vertex v : face) out.push_back((*this)(v));
  std::sort(out.begin(), out.end());
  return out;
}

std::string z2_violation(const Z2Complex& z) {
  const auto& verts = z.complex.vertices();
  if (z.action.map().size() != verts.size())
    return "action domain does not match the vertex set";
  for (Vertex v : verts)
    if (!z.action.map().contains(v)) return "action undefined at vertex " + std::to_string(v);
  for (const Face& f : z.complex.faces()) {
    const Face image = z.action(f);
    if (image == f) return "face " + face_string(f) + " is fixed by the action";
    if (!z.complex.contains(image))
      return "image of " + face_string(f) + " is not a face";
  }
  return {};
}

bool is_free_z2(const Z2Complex& z) { return z2_violation(z).empty(); }

void validate_z2(const Z2Complex& z) {
  if (auto why = z2_violation(z); !why.empty()) throw InputError("invalid Z2 complex: " + why);
}

long long euler_characteristic(const SimplicialComplex& k) {
  long long chi = 0;
  for (int d = 0; d <= k.dim(); ++d) {
    const auto n = static_cast<long long>(k.faces_of_dim(d).size());
    chi += (d % 2 == 0) ? n : -n;
  }
  return chi;
}

std::vector<Vertex> fresh_labels(const SimplicialComplex& k, std::size_t count) {
  std::vector<Vertex> out;
  const auto& used = k.vertices();
  for (Vertex candidate = 0; out.size() < count; ++candidate)
    if (!std::binary_search(used.begin(), used.end(), candidate)) out.push_back(candidate);
  return out;
}

std::optional<Vertex> Subdivision::label_of(std::span<const Vertex> face) const {
  const Face key(face.begin(), face.end());
  const auto it = std::lower_bound(vertex_faces.begin(), vertex_faces.end(), key, face_less);
  if (it == vertex_faces.end() || *it != key) return std::nullopt;
  return static_cast<Vertex>(it - vertex_faces.begin());
}

Subdivision barycentric_subdivision(const SimplicialComplex& k) {
  Subdivision sd;
  sd.vertex_faces = k.faces();
  const std::size_t m = sd.vertex_faces.size();

  // Immediate cofaces of each face; chains are grown upward along them.
  std::vector<std::vector<std::size_t>> up(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Face& big = sd.vertex_faces[i];
    if (big.size() < 2) continue;
    Face sub(big.begin() + 1, big.end());
    for (std::size_t omit = 0; omit < big.size(); ++omit) {
      if (omit > 0) sub[omit - 1] = big[omit - 1];
      up[static_cast<std::size_t>(*sd.label_of(sub))].push_back(i);
    }
  }

  // Every chain is a subset of a maximal chain; enumerate chains directly so
  // the closure step has nothing to add.
  std::vector<Face> chains;
  std::vector<Vertex> chain;
  auto extend = [&](auto&& self, std::size_t top) -> void {
    chains.push_back(chain);
    // Any strict superface of `top` may follow, not only immediate ones.
    std::vector<std::size_t> stack = up[top];
    std::set<std::size_t> seen(stack.begin(), stack.end());
    while (!stack.empty()) {
      const std::size_t next = stack.back();
      stack.pop_back();
      chain.push_back(static_cast<Vertex>(next));
      self(self, next);
      chain.pop_back();
      for (std::size_t further : up[next])
        if (seen.insert(further).second) stack.push_back(further);
    }
  };
  for (std::size_t i = 0; i < m; ++i) {
    chain.assign(1, static_cast<Vertex>(i));
    extend(extend, i);
  }
  sd.complex = SimplicialComplex::from_closed_faces(std::move(chains));
  return sd;
}

Z2Complex subdivide_involution(const Z2Complex& z) {
  validate_z2(z);
  Subdivision sd = barycentric_subdivision(z.complex);
  std::map<Vertex, Vertex> map;
  for (std::size_t i = 0; i < sd.vertex_faces.size(); ++i)
    map[static_cast<Vertex>(i)] = *sd.label_of(z.action(sd.vertex_faces[i]));
  Z2Complex out{std::move(sd.complex), Involution(std::move(map)), Provenance::generic, {}};
  if (auto why = z2_violation(out); !why.empty())
    throw InternalError("subdivided action is not free: " + why);
  return out;
}

namespace {

SimplicialComplex suspend_with(const SimplicialComplex& k, Vertex x, Vertex y) {
  std::vector<Face> faces = k.faces();
  const std::size_t base = faces.size();
  faces.push_back({x});
  faces.push_back({y});
  for (std::size_t i = 0; i < base; ++i) {
    for (Vertex apex : {x, y}) {
      Face f = faces[i];
      f.insert(std::upper_bound(f.begin(), f.end(), apex), apex);
      faces.push_back(std::move(f));
    }
  }
  return SimplicialComplex::from_closed_faces(std::move(faces));
}

}  // namespace

SimplicialComplex suspension(const SimplicialComplex& k) {
  const auto apex = fresh_labels(k, 2);
  return suspend_with(k, apex[0], apex[1]);
}

Z2Complex z2_suspension(const Z2Complex& z) {
  const auto apex = fresh_labels(z.complex, 2);
  std::map<Vertex, Vertex> map = z.action.map();
  map[apex[0]] = apex[1];
  map[apex[1]] = apex[0];
  return {suspend_with(z.complex, apex[0], apex[1]), Involution(std::move(map)),
          Provenance::generic, {}};
}

SimplicialComplex cone(const SimplicialComplex& k, Vertex apex) {
  const auto& verts = k.vertices();
  if (std::binary_search(verts.begin(), verts.end(), apex))
    throw InputError("cone apex " + std::to_string(apex) + " is already a vertex");
  std::vector<Face> faces = k.faces();
  const std::size_t base = faces.size();
  faces.push_back({apex});
  for (std::size_t i = 0; i < base; ++i) {
    Face f = faces[i];
    f.insert(std::upper_bound(f.begin(), f.end(), apex), apex);
    faces.push_back(std::move(f));
  }
  return SimplicialComplex::from_closed_faces(std::move(faces));
}

SimplicialComplex star(const SimplicialComplex& k, std::span<const Vertex> sigma) {
  if (!k.contains(sigma)) throw InputError("star center " + face_string(sigma) + " is not a face");
  std::vector<Face> faces;
  for (const Face& tau : k.faces()) {
    Face joined;
    std::set_union(tau.begin(), tau.end(), sigma.begin(), sigma.end(), std::back_inserter(joined));
    if (k.contains(joined)) faces.push_back(tau);
  }
  return SimplicialComplex::from_closed_faces(std::move(faces));
}

SimplicialComplex nerve(const std::vector<NerveMember>& family) {
  // For each element, the members containing it span a simplex of the nerve;
  // the nerve is the closure of these simplices.
  std::map<int, Face> holders;
  std::vector<Face> facets;
  for (const auto& member : family) {
    if (member.elements.empty())
      throw InputError("nerve member " + std::to_string(member.label) + " is empty");
    for (int e : member.elements) holders[e].push_back(member.label);
  }
  for (auto& [element, labels] : holders) facets.push_back(canonical_face(labels));
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  // Drop facets contained in another one before closing.
  std::vector<Face> maximal;
  for (const Face& f : facets) {
    const bool dominated = std::any_of(facets.begin(), facets.end(), [&](const Face& g) {
      return g.size() > f.size() && is_subface(f, g);
    });
    if (!dominated) maximal.push_back(f);
  }
  return SimplicialComplex::from_facets(maximal);
}

namespace {

// Per-vertex counts of incident faces in each dimension.
std::map<Vertex, std::vector<std::size_t>> vertex_signatures(const SimplicialComplex& k) {
  std::map<Vertex, std::vector<std::size_t>> sig;
  for (Vertex v : k.vertices()) sig[v].assign(static_cast<std::size_t>(k.dim() + 1), 0);
  for (int d = 0; d <= k.dim(); ++d)
    for (const Face& f : k.faces_of_dim(d))
      for (Vertex v : f) ++sig[v][static_cast<std::size_t>(d)];
  return sig;
}

}  // namespace

bool isomorphic(const SimplicialComplex& a, const SimplicialComplex& b,
                const IsomorphismOptions& options) {
  if (a.f_vector() != b.f_vector()) return false;
  const std::size_t n = a.vertices().size();
  if (n > options.max_vertices && !options.force)
    throw GuardError("isomorphism search limited to " + std::to_string(options.max_vertices) +
                     " vertices (got " + std::to_string(n) + "); pass force to override");
  if (n == 0) return true;

  const auto sig_a = vertex_signatures(a);
  const auto sig_b = vertex_signatures(b);
  {
    std::vector<std::vector<std::size_t>> ma, mb;
    for (const auto& [v, s] : sig_a) ma.push_back(s);
    for (const auto& [v, s] : sig_b) mb.push_back(s);
    std::sort(ma.begin(), ma.end());
    std::sort(mb.begin(), mb.end());
    if (ma != mb) return false;
  }

  // Assign high-degree vertices first; they constrain the search most.
  std::vector<Vertex> order = a.vertices();
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex x, Vertex y) { return sig_a.at(x) > sig_a.at(y); });
  std::map<Vertex, std::size_t> position;
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;

  // Faces of `a` whose last-assigned vertex is order[i] get checked at step i.
  std::vector<std::vector<Face>> checks(n);
  for (const Face& f : a.faces()) {
    if (f.size() < 2) continue;
    std::size_t last = 0;
    for (Vertex v : f) last = std::max(last, position[v]);
    checks[last].push_back(f);
  }

  std::map<Vertex, Vertex> image;
  std::set<Vertex> used;
  auto assign = [&](auto&& self, std::size_t i) -> bool {
    if (i == n) return true;
    const Vertex v = order[i];
    for (Vertex w : b.vertices()) {
      if (used.contains(w) || sig_b.at(w) != sig_a.at(v)) continue;
      image[v] = w;
      bool ok = true;
      for (const Face& f : checks[i]) {
        Face mapped;
        for (Vertex u : f) mapped.push_back(image[u]);
        std::sort(mapped.begin(), mapped.end());
        if (!b.contains(mapped)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        used.insert(w);
        if (self(self, i + 1)) return true;
        used.erase(w);
      }
    }
    image.erase(v);
    return false;
  };
  return assign(assign, 0);
}

}  // namespace gtop
