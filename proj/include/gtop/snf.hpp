#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace gtop {

// Column-major sparse integer matrix; each column holds (row, value) pairs
// with strictly increasing rows and nonzero values.
struct SparseIntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> columns;

  static SparseIntMatrix from_dense(const std::vector<std::vector<std::int64_t>>& dense);
  std::vector<std::vector<std::int64_t>> dense() const;
  std::size_t nonzeros() const;

  friend bool operator==(const SparseIntMatrix&, const SparseIntMatrix&) = default;
};

// Product a * b; throws std::invalid_argument on a shape mismatch.
SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b);

struct SnfResult {
  // Nonzero diagonal of the Smith normal form: positive, each dividing the next.
  std::vector<mpz_class> factors;
  std::size_t rank = 0;
  // True when the checked 64-bit pass overflowed and GMP finished the job.
  bool used_bigint = false;
};

// Smith normal form by unimodular row and column operations. The pivot is a
// nonzero entry of least absolute value, ties broken by row-major position.
SnfResult smith_normal_form(const SparseIntMatrix& m);

}  // namespace gtop
