#include "gtop/snf.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

namespace gtop {

SparseIntMatrix SparseIntMatrix::from_dense(const std::vector<std::vector<std::int64_t>>& dense) {
  SparseIntMatrix m;
  m.rows = dense.size();
  m.cols = dense.empty() ? 0 : dense.front().size();
  m.columns.resize(m.cols);
  for (std::size_t r = 0; r < m.rows; ++r) {
    if (dense[r].size() != m.cols) throw std::invalid_argument("ragged dense matrix");
    for (std::size_t c = 0; c < m.cols; ++c)
      if (dense[r][c] != 0) m.columns[c].emplace_back(r, dense[r][c]);
  }
  return m;
}

std::vector<std::vector<std::int64_t>> SparseIntMatrix::dense() const {
  std::vector<std::vector<std::int64_t>> out(rows, std::vector<std::int64_t>(cols, 0));
  for (std::size_t c = 0; c < cols; ++c)
    for (const auto& [r, v] : columns[c]) out[r][c] = v;
  return out;
}

std::size_t SparseIntMatrix::nonzeros() const {
  std::size_t total = 0;
  for (const auto& col : columns) total += col.size();
  return total;
}

SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matrix shapes do not compose");
  SparseIntMatrix out;
  out.rows = a.rows;
  out.cols = b.cols;
  out.columns.resize(b.cols);
  for (std::size_t c = 0; c < b.cols; ++c) {
    std::map<std::size_t, std::int64_t> acc;
    for (const auto& [k, bv] : b.columns[c])
      for (const auto& [r, av] : a.columns[k]) acc[r] += av * bv;
    for (const auto& [r, v] : acc)
      if (v != 0) out.columns[c].emplace_back(r, v);
  }
  return out;
}

namespace {

struct Overflow {};

// Arithmetic shims so the elimination runs on checked int64 or on mpz_class.
inline std::int64_t sub_mul(std::int64_t a, std::int64_t q, std::int64_t b) {
  std::int64_t prod = 0;
  std::int64_t out = 0;
  if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(a, prod, &out)) throw Overflow{};
  return out;
}
inline mpz_class sub_mul(const mpz_class& a, const mpz_class& q, const mpz_class& b) {
  return a - q * b;
}
inline std::int64_t magnitude(std::int64_t v) {
  if (v == INT64_MIN) throw Overflow{};
  return v < 0 ? -v : v;
}
inline mpz_class magnitude(const mpz_class& v) { return abs(v); }
inline bool is_unit(std::int64_t v) { return v == 1 || v == -1; }
inline bool is_unit(const mpz_class& v) { return v == 1 || v == -1; }
inline mpz_class to_mpz(std::int64_t v) { return mpz_class(static_cast<long>(v)); }
inline mpz_class to_mpz(const mpz_class& v) { return v; }

template <class T>
class Eliminator {
 public:
  explicit Eliminator(const SparseIntMatrix& m) : rows_(m.rows), cols_(m.cols) {
    for (std::size_t c = 0; c < m.cols; ++c)
      for (const auto& [r, v] : m.columns[c]) {
        rows_[r].emplace(c, T(v));
        cols_[c].insert(r);
        live_rows_.insert(r);
      }
  }

  // Absolute values of the diagonal left by the elimination.
  std::vector<T> run() {
    std::vector<T> diagonal;
    while (auto pivot = find_pivot()) {
      const auto [r, c] = *pivot;
      const T p = rows_[r].at(c);

      clear_column(r, c, p);
      if (cols_[c].size() > 1) continue;  // remainders left; repivot

      bool divides = true;
      for (const auto& [j, v] : rows_[r])
        if (j != c && v % p != 0) divides = false;
      if (divides) {
        // Column operations would only touch row r; drop it outright.
        diagonal.push_back(magnitude(p));
        drop_row(r);
        continue;
      }
      // Column operations leave remainders smaller than |p| in row r.
      std::vector<std::pair<std::size_t, T>> updates;
      for (const auto& [j, v] : rows_[r])
        if (j != c) updates.emplace_back(j, v % p);
      for (const auto& [j, rem] : updates) set(r, j, rem);
    }
    return diagonal;
  }

 private:
  std::optional<std::pair<std::size_t, std::size_t>> find_pivot() const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    T best_mag{};
    for (std::size_t r : live_rows_) {
      for (const auto& [c, v] : rows_[r]) {
        if (is_unit(v)) return std::pair{r, c};
        const T mag = magnitude(v);
        if (!best || mag < best_mag) {
          best = std::pair{r, c};
          best_mag = mag;
        }
      }
    }
    return best;
  }

  void set(std::size_t r, std::size_t c, const T& value) {
    auto& row = rows_[r];
    if (value == 0) {
      row.erase(c);
      cols_[c].erase(r);
      if (row.empty()) live_rows_.erase(r);
    } else {
      row[c] = value;
      cols_[c].insert(r);
      live_rows_.insert(r);
    }
  }

  // row_i -= q * row_r for every other row with an entry in column c.
  void clear_column(std::size_t r, std::size_t c, const T& p) {
    const std::vector<std::size_t> targets(cols_[c].begin(), cols_[c].end());
    const std::vector<std::pair<std::size_t, T>> pivot_row(rows_[r].begin(), rows_[r].end());
    for (std::size_t i : targets) {
      if (i == r) continue;
      const T q = rows_[i].at(c) / p;
      if (q == 0) continue;
      for (const auto& [j, v] : pivot_row) {
        const auto it = rows_[i].find(j);
        const T current = it == rows_[i].end() ? T(0) : it->second;
        set(i, j, sub_mul(current, q, v));
      }
    }
  }

  void drop_row(std::size_t r) {
    for (const auto& [c, v] : rows_[r]) cols_[c].erase(r);
    rows_[r].clear();
    live_rows_.erase(r);
  }

  std::vector<std::map<std::size_t, T>> rows_;
  std::vector<std::set<std::size_t>> cols_;
  std::set<std::size_t> live_rows_;
};

// Turns an arbitrary diagonal into invariant factors via pairwise gcd/lcm.
std::vector<mpz_class> invariant_factors(std::vector<mpz_class> diagonal) {
  std::vector<mpz_class> units;
  std::vector<mpz_class> rest;
  for (auto& d : diagonal) (d == 1 ? units : rest).push_back(d);
  for (std::size_t i = 0; i < rest.size(); ++i)
    for (std::size_t j = i + 1; j < rest.size(); ++j) {
      mpz_class g = gcd(rest[i], rest[j]);
      mpz_class l = lcm(rest[i], rest[j]);
      rest[i] = g;
      rest[j] = l;
    }
  units.insert(units.end(), rest.begin(), rest.end());
  return units;
}

}  // namespace

SnfResult smith_normal_form(const SparseIntMatrix& m) {
  SnfResult result;
  std::vector<mpz_class> diagonal;
  try {
    for (std::int64_t d : Eliminator<std::int64_t>(m).run()) diagonal.push_back(to_mpz(d));
  } catch (const Overflow&) {
    diagonal.clear();
    result.used_bigint = true;
    for (const mpz_class& d : Eliminator<mpz_class>(m).run()) diagonal.push_back(d);
  }
  result.factors = invariant_factors(std::move(diagonal));
  result.rank = result.factors.size();
  return result;
}

}  // namespace gtop
