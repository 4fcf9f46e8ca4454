/* matrix.hpp -- arbitrary-precision integer matrices and Smith normal form. */

#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fpres {

using Int = boost::multiprecision::cpp_int;

struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Int> data;  // row-major

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

  Int& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Diagonal of the Smith normal form, d_1 | d_2 | ..., nonnegative,
/// trailing zeros trimmed. Full pivoting on the smallest nonzero entry.
std::vector<Int> smith_diagonal(IntMatrix m);

/// Invariant factors > 1 plus the free rank of the cokernel of the matrix
/// viewed as a map Z^rows -> Z^cols.
struct AbelianInvariants {
  std::vector<Int> torsion;    // divisibility chain, each > 1
  std::size_t free_rank = 0;

  bool operator==(const AbelianInvariants&) const = default;
};

AbelianInvariants abelian_invariants(const IntMatrix& relation_matrix);

}  // namespace fpres
