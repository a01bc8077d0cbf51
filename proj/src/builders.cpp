#include "gtop/builders.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "gtop/errors.hpp"

namespace gtop {

namespace {

// Calls visit(S, CN(S)) for every subset S of `pool`, extending S only by
// vertices above its current maximum. When `require_cn` holds, subtrees with
// empty common neighborhood are pruned (empty S is always visited).
template <class Visit>
void walk_subsets(const std::vector<VertexMask>& adj, int n, VertexMask pool, bool require_cn,
                  Visit&& visit) {
  auto rec = [&](auto&& self, VertexMask set, VertexMask cn, int next) -> void {
    visit(set, cn);
    for (int v = next; v < n; ++v) {
      if (!(pool >> v & 1)) continue;
      const VertexMask grown_cn = cn & adj[static_cast<std::size_t>(v)];
      if (require_cn && grown_cn == 0) continue;
      self(self, set | VertexMask{1} << v, grown_cn, v + 1);
    }
  };
  rec(rec, 0, full_mask(n), 0);
}

Face encode(int n, VertexMask a, VertexMask b) {
  Face f;
  for (int v : mask_to_set(a)) f.push_back(v);
  for (int v : mask_to_set(b)) f.push_back(n + v);
  return f;
}

std::map<Vertex, Vertex> shore_swap(int n, bool with_apexes) {
  std::map<Vertex, Vertex> map;
  for (int v = 0; v < n; ++v) {
    map[v] = n + v;
    map[n + v] = v;
  }
  if (with_apexes) {
    map[2 * n] = 2 * n + 1;
    map[2 * n + 1] = 2 * n;
  }
  return map;
}

// Restricts the action and the records to the vertices actually present.
Z2Complex assemble(int n, std::vector<Face> faces, Provenance provenance, bool with_apexes) {
  Z2Complex z;
  z.complex = SimplicialComplex::from_closed_faces(std::move(faces));
  const auto full = shore_swap(n, with_apexes);
  std::map<Vertex, Vertex> map;
  for (Vertex v : z.complex.vertices()) {
    map[v] = full.at(v);
    if (v < n)
      z.records[v] = {v, Shore::zero};
    else if (v < 2 * n)
      z.records[v] = {v - n, Shore::one};
    else
      z.records[v] = {-1, v == 2 * n ? Shore::apex_x : Shore::apex_y};
  }
  z.action = Involution(std::move(map));
  z.provenance = provenance;
  if (auto why = z2_violation(z); !why.empty())
    throw InternalError("box-type complex failed the free involution check: " + why);
  return z;
}

}  // namespace

Vertex shore_label(int n, ShoreVertex sv) {
  if (sv.vertex < 0 || sv.vertex >= n || (sv.shore != 0 && sv.shore != 1))
    throw InputError("invalid shore vertex");
  return sv.shore == 0 ? sv.vertex : n + sv.vertex;
}

std::pair<VertexSet, VertexSet> decode_shores(int n, std::span<const Vertex> face) {
  std::pair<VertexSet, VertexSet> out;
  for (Vertex v : face) {
    if (v < n)
      out.first.push_back(v);
    else if (v < 2 * n)
      out.second.push_back(v - n);
  }
  return out;
}

SimplicialComplex neighborhood_complex(const Graph& g) {
  const auto adj = adjacency_masks(g);
  const int n = g.vertex_count();
  std::vector<Face> faces;
  walk_subsets(adj, n, full_mask(n), true, [&](VertexMask set, VertexMask) {
    if (set) faces.push_back(mask_to_set(set));
  });
  return SimplicialComplex::from_closed_faces(std::move(faces));
}

Z2Complex box_complex(const Graph& g) {
  const auto adj = adjacency_masks(g);
  const int n = g.vertex_count();
  std::vector<Face> faces;
  // A ranges over N(G) ∪ {∅}. For nonempty A every nonempty B ⊆ CN(A) has
  // A ⊆ CN(B), so only A = ∅ needs the CN(B) test.
  walk_subsets(adj, n, full_mask(n), true, [&](VertexMask a, VertexMask cn_a) {
    walk_subsets(adj, n, cn_a, a == 0, [&](VertexMask b, VertexMask) {
      if (a | b) faces.push_back(encode(n, a, b));
    });
  });
  return assemble(n, std::move(faces), Provenance::box, false);
}

Z2Complex box0_complex(const Graph& g) {
  const auto adj = adjacency_masks(g);
  const int n = g.vertex_count();
  std::vector<Face> faces;
  walk_subsets(adj, n, full_mask(n), false, [&](VertexMask a, VertexMask cn_a) {
    walk_subsets(adj, n, cn_a, false, [&](VertexMask b, VertexMask) {
      if (a | b) faces.push_back(encode(n, a, b));
    });
  });
  return assemble(n, std::move(faces), Provenance::box0, false);
}

Z2Complex cones_over_shores_complex(const Graph& g) {
  const auto adj = adjacency_masks(g);
  const int n = g.vertex_count();
  const Vertex x = 2 * n;
  const Vertex y = 2 * n + 1;
  std::vector<Face> faces;
  walk_subsets(adj, n, full_mask(n), true, [&](VertexMask a, VertexMask cn_a) {
    walk_subsets(adj, n, cn_a, a == 0, [&](VertexMask b, VertexMask) {
      if (a | b) faces.push_back(encode(n, a, b));
    });
    Face with_x = encode(n, a, 0);
    with_x.push_back(x);
    faces.push_back(std::move(with_x));
    Face with_y = encode(n, 0, a);
    with_y.push_back(y);
    faces.push_back(std::move(with_y));
  });
  return assemble(n, std::move(faces), Provenance::box_cones, true);
}

std::vector<std::pair<VertexSet, VertexSet>> hom_k2_cells(const Graph& g) {
  const auto adj = adjacency_masks(g);
  const int n = g.vertex_count();
  std::vector<std::pair<VertexMask, VertexMask>> cells;
  walk_subsets(adj, n, full_mask(n), true, [&](VertexMask a, VertexMask cn_a) {
    if (a == 0) return;
    walk_subsets(adj, n, cn_a, false, [&](VertexMask b, VertexMask) {
      if (b) cells.emplace_back(a, b);
    });
  });
  std::sort(cells.begin(), cells.end(), [](const auto& l, const auto& r) {
    const int sl = std::popcount(l.first) + std::popcount(l.second);
    const int sr = std::popcount(r.first) + std::popcount(r.second);
    return sl != sr ? sl < sr : l < r;
  });
  std::vector<std::pair<VertexSet, VertexSet>> out;
  for (const auto& [a, b] : cells) out.emplace_back(mask_to_set(a), mask_to_set(b));
  return out;
}

Z2Complex hom_k2_order_complex(const Graph& g) {
  const auto cells = hom_k2_cells(g);
  const std::size_t m = cells.size();
  std::vector<std::pair<VertexMask, VertexMask>> masks;
  std::map<std::pair<VertexMask, VertexMask>, int> index;
  for (std::size_t i = 0; i < m; ++i) {
    masks.emplace_back(set_to_mask(cells[i].first), set_to_mask(cells[i].second));
    index[masks.back()] = static_cast<int>(i);
  }
  // Cells are sorted by total size, so strict successors come later.
  std::vector<std::vector<int>> above(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const auto& [ai, bi] = masks[i];
      const auto& [aj, bj] = masks[j];
      if ((ai & ~aj) == 0 && (bi & ~bj) == 0 && masks[i] != masks[j])
        above[i].push_back(static_cast<int>(j));
    }
  std::vector<Face> chains;
  Face chain;
  auto extend = [&](auto&& self, int top) -> void {
    chains.push_back(chain);
    for (int next : above[static_cast<std::size_t>(top)]) {
      chain.push_back(next);
      self(self, next);
      chain.pop_back();
    }
  };
  for (std::size_t i = 0; i < m; ++i) {
    chain.assign(1, static_cast<int>(i));
    extend(extend, static_cast<int>(i));
  }
  std::map<Vertex, Vertex> map;
  for (std::size_t i = 0; i < m; ++i)
    map[static_cast<Vertex>(i)] = index.at({masks[i].second, masks[i].first});

  Z2Complex z;
  z.complex = SimplicialComplex::from_closed_faces(std::move(chains));
  z.action = Involution(std::move(map));
  z.provenance = Provenance::hom_k2;
  if (auto why = z2_violation(z); !why.empty())
    throw InternalError("Hom(K2,G) order complex failed the free involution check: " + why);
  return z;
}

SimplicialComplex shore_subcomplex(const Z2Complex& z, int shore) {
  if (z.provenance != Provenance::box)
    throw InputError("shore_subcomplex expects a complex built by box_complex");
  if (shore != 0 && shore != 1) throw InputError("shore must be 0 or 1");
  const Shore wanted = shore == 0 ? Shore::zero : Shore::one;
  std::vector<Face> faces;
  for (const Face& f : z.complex.faces()) {
    Face relabeled;
    bool inside = true;
    for (Vertex v : f) {
      const auto& rec = z.records.at(v);
      if (rec.shore != wanted) {
        inside = false;
        break;
      }
      relabeled.push_back(rec.graph_vertex);
    }
    if (inside) faces.push_back(std::move(relabeled));
  }
  return SimplicialComplex::from_closed_faces(std::move(faces));
}

}  // namespace gtop
