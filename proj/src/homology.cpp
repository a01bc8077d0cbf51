#include "gtop/homology.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <string>

#include "gtop/errors.hpp"

namespace gtop {

namespace {

std::size_t index_of(const std::vector<Face>& basis, const Face& f) {
  const auto it = std::lower_bound(basis.begin(), basis.end(), f);
  if (it == basis.end() || *it != f) throw InternalError("boundary face missing from basis");
  return static_cast<std::size_t>(it - basis.begin());
}

}  // namespace

ChainComplex boundary_matrices(const SimplicialComplex& k) {
  if (k.empty()) throw InputError("boundary matrices of the empty complex are undefined");
  ChainComplex c;
  for (int d = 0; d <= k.dim(); ++d) {
    const auto layer = k.faces_of_dim(d);
    c.bases.emplace_back(layer.begin(), layer.end());
  }
  for (int d = 1; d <= k.dim(); ++d) {
    const auto& lower = c.bases[static_cast<std::size_t>(d - 1)];
    const auto& upper = c.bases[static_cast<std::size_t>(d)];
    SparseIntMatrix m;
    m.rows = lower.size();
    m.cols = upper.size();
    m.columns.resize(m.cols);
    for (std::size_t j = 0; j < upper.size(); ++j) {
      const Face& f = upper[j];
      Face sub(f.begin() + 1, f.end());
      for (std::size_t omit = 0; omit < f.size(); ++omit) {
        if (omit > 0) sub[omit - 1] = f[omit - 1];
        m.columns[j].emplace_back(index_of(lower, sub), omit % 2 == 0 ? 1 : -1);
      }
      std::sort(m.columns[j].begin(), m.columns[j].end());
    }
    c.boundaries.push_back(std::move(m));
  }
  if (!boundary_squares_to_zero(c)) throw InternalError("boundary operator does not square to zero");
  return c;
}

bool boundary_squares_to_zero(const ChainComplex& c) {
  for (std::size_t i = 0; i + 1 < c.boundaries.size(); ++i)
    if (multiply(c.boundaries[i], c.boundaries[i + 1]).nonzeros() != 0) return false;
  return true;
}

HomologyGroup HomologyProfile::at(int k) const {
  for (const auto& g : dims)
    if (g.k == k) return g;
  return HomologyGroup{k, 0, {}};
}

int HomologyProfile::top_degree() const {
  int top = -1;
  for (const auto& g : dims)
    if (!g.trivial()) top = std::max(top, g.k);
  return top;
}

std::int64_t HomologyProfile::reduced_euler() const {
  std::int64_t total = 0;
  for (const auto& g : dims) total += (g.k % 2 == 0) ? g.betti : -g.betti;
  return total;
}

bool operator==(const HomologyProfile& a, const HomologyProfile& b) {
  const int top = std::max(a.top_degree(), b.top_degree());
  for (int k = 0; k <= top; ++k)
    if (a.at(k) != b.at(k)) return false;
  return true;
}

HomologyProfile reduced_homology(const SimplicialComplex& k, const HomologyOptions& options) {
  HomologyProfile profile;
  if (k.empty()) return profile;
  const SimplicialComplex reduced = k.size() > options.collapse_threshold ? collapse_reduce(k) : k;
  const ChainComplex chain = boundary_matrices(reduced);
  const int top = reduced.dim();

  // ranks[d] = rank of D_d; D_0 is the augmentation, of rank one.
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 2), 0);
  std::vector<std::vector<std::int64_t>> torsion(static_cast<std::size_t>(top + 1));
  ranks[0] = 1;
  for (int d = 1; d <= top; ++d) {
    const SnfResult snf = smith_normal_form(chain.d(d));
    ranks[static_cast<std::size_t>(d)] = snf.rank;
    for (const auto& f : snf.factors) {
      if (f == 1) continue;
      if (!f.fits_slong_p()) throw InternalError("torsion coefficient exceeds 64 bits");
      torsion[static_cast<std::size_t>(d - 1)].push_back(f.get_si());
    }
  }
  for (int d = 0; d <= k.dim(); ++d) {
    HomologyGroup g{d, 0, {}};
    if (d <= top) {
      const auto n = static_cast<std::int64_t>(chain.bases[static_cast<std::size_t>(d)].size());
      g.betti = n - static_cast<std::int64_t>(ranks[static_cast<std::size_t>(d)]) -
                static_cast<std::int64_t>(ranks[static_cast<std::size_t>(d + 1)]);
      g.torsion = torsion[static_cast<std::size_t>(d)];
    }
    profile.dims.push_back(std::move(g));
  }
  return profile;
}

SimplicialComplex collapse_reduce(const SimplicialComplex& k) {
  if (k.empty()) return k;
  const std::vector<Face> faces = k.faces();
  const std::size_t m = faces.size();
  auto id_of = [&](const Face& f) {
    const auto it = std::lower_bound(faces.begin(), faces.end(), f, [](const Face& a, const Face& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return static_cast<std::size_t>(it - faces.begin());
  };
  std::vector<std::vector<std::size_t>> down(m);
  std::vector<std::vector<std::size_t>> up(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Face& f = faces[i];
    if (f.size() < 2) continue;
    Face sub(f.begin() + 1, f.end());
    for (std::size_t omit = 0; omit < f.size(); ++omit) {
      if (omit > 0) sub[omit - 1] = f[omit - 1];
      const std::size_t j = id_of(sub);
      down[i].push_back(j);
      up[j].push_back(i);
    }
  }
  std::vector<char> alive(m, 1);
  std::vector<std::size_t> cofaces(m);
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < m; ++i) {
    cofaces[i] = up[i].size();
    if (cofaces[i] == 1) queue.push_back(i);
  }
  auto release = [&](std::size_t face) {
    for (std::size_t b : down[face]) {
      if (!alive[b]) continue;
      if (--cofaces[b] == 1) queue.push_back(b);
    }
  };
  while (!queue.empty()) {
    const std::size_t sigma = queue.front();
    queue.pop_front();
    if (!alive[sigma] || cofaces[sigma] != 1) continue;
    // A face with one live immediate coface lies in no larger face, so the
    // coface is maximal and the pair is free.
    std::size_t tau = m;
    for (std::size_t u : up[sigma])
      if (alive[u]) tau = u;
    alive[sigma] = 0;
    alive[tau] = 0;
    release(tau);
    release(sigma);
  }
  std::vector<Face> kept;
  for (std::size_t i = 0; i < m; ++i)
    if (alive[i]) kept.push_back(faces[i]);
  return SimplicialComplex::from_closed_faces(std::move(kept));
}

int homological_connectivity(const SimplicialComplex& k, const HomologyProfile& profile) {
  if (k.empty()) return -2;
  for (int d = 0; d <= k.dim(); ++d)
    if (!profile.at(d).trivial()) return d - 1;
  // Acyclic through its dimension; report the dimension as the cap.
  return k.dim();
}

int homological_connectivity(const SimplicialComplex& k, const HomologyOptions& options) {
  return homological_connectivity(k, reduced_homology(k, options));
}

namespace {

// Letters are ±(generator + 1).
using Word = std::vector<int>;

void free_reduce(Word& w) {
  Word out;
  for (int letter : w) {
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  // Cyclic reduction.
  std::size_t lo = 0;
  std::size_t hi = out.size();
  while (hi - lo >= 2 && out[lo] == -out[hi - 1]) {
    ++lo;
    --hi;
  }
  w.assign(out.begin() + static_cast<std::ptrdiff_t>(lo), out.begin() + static_cast<std::ptrdiff_t>(hi));
}

Word inverse(const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

constexpr std::size_t kMaxRelatorLength = 256;

}  // namespace

Pi1Verdict pi1_trivial_heuristic(const SimplicialComplex& k) {
  if (k.empty()) throw InputError("fundamental group of the empty complex is undefined");
  const auto& verts = k.vertices();
  std::map<Vertex, std::vector<Vertex>> adjacency;
  for (const Face& e : k.faces_of_dim(1)) {
    adjacency[e[0]].push_back(e[1]);
    adjacency[e[1]].push_back(e[0]);
  }
  // Breadth-first spanning tree.
  std::map<Vertex, Vertex> parent;
  std::deque<Vertex> frontier{verts.front()};
  parent[verts.front()] = verts.front();
  while (!frontier.empty()) {
    const Vertex v = frontier.front();
    frontier.pop_front();
    for (Vertex u : adjacency[v])
      if (parent.emplace(u, v).second) frontier.push_back(u);
  }
  if (parent.size() != verts.size()) throw InputError("pi1 heuristic needs a connected complex");

  std::map<std::pair<Vertex, Vertex>, int> generator;
  for (const Face& e : k.faces_of_dim(1)) {
    const bool tree = parent.at(e[1]) == e[0] || parent.at(e[0]) == e[1];
    if (!tree) generator.emplace(std::pair{e[0], e[1]}, static_cast<int>(generator.size()) + 1);
  }
  auto letter = [&](Vertex a, Vertex b) -> int {
    const auto it = generator.find({std::min(a, b), std::max(a, b)});
    if (it == generator.end()) return 0;
    return a < b ? it->second : -it->second;
  };
  std::vector<Word> relators;
  for (const Face& t : k.faces_of_dim(2)) {
    Word w;
    for (int l : {letter(t[0], t[1]), letter(t[1], t[2]), letter(t[2], t[0])})
      if (l != 0) w.push_back(l);
    free_reduce(w);
    if (!w.empty()) relators.push_back(std::move(w));
  }
  std::size_t remaining = generator.size();

  bool progress = true;
  while (remaining > 0 && progress) {
    progress = false;
    std::sort(relators.begin(), relators.end(),
              [](const Word& a, const Word& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
    for (std::size_t r = 0; r < relators.size() && !progress; ++r) {
      const Word& rel = relators[r];
      std::map<int, int> occurrences;
      for (int l : rel) ++occurrences[std::abs(l)];
      for (std::size_t pos = 0; pos < rel.size(); ++pos) {
        const int g = std::abs(rel[pos]);
        if (occurrences[g] != 1) continue;
        // rel = u g^e v  =>  g^e = u^-1 v^-1 (cyclically: g^e = (v u)^-1).
        Word rest(rel.begin() + static_cast<std::ptrdiff_t>(pos) + 1, rel.end());
        rest.insert(rest.end(), rel.begin(), rel.begin() + static_cast<std::ptrdiff_t>(pos));
        Word replacement = inverse(rest);
        if (rel[pos] < 0) replacement = inverse(replacement);

        std::vector<Word> next;
        bool too_long = false;
        for (std::size_t other = 0; other < relators.size(); ++other) {
          if (other == r) continue;
          Word w;
          for (int l : relators[other]) {
            if (std::abs(l) != g) {
              w.push_back(l);
              continue;
            }
            const Word& piece = l > 0 ? replacement : inverse(replacement);
            w.insert(w.end(), piece.begin(), piece.end());
          }
          free_reduce(w);
          if (w.size() > kMaxRelatorLength) too_long = true;
          if (!w.empty()) next.push_back(std::move(w));
        }
        if (too_long) continue;
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        relators = std::move(next);
        --remaining;
        progress = true;
        break;
      }
    }
  }
  return remaining == 0 ? Pi1Verdict::trivial : Pi1Verdict::unknown;
}

}  // namespace gtop
