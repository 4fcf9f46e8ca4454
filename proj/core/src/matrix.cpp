#include "fpres/matrix.hpp"

#include <algorithm>

namespace fpres {

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

std::vector<Int> smith_diagonal(IntMatrix m) {
  std::vector<Int> diag;
  std::size_t top = 0;
  while (top < m.rows && top < m.cols) {
    // Full pivot search: smallest nonzero |entry| in the active block.
    std::size_t pr = top, pc = top;
    Int best = 0;
    for (std::size_t r = top; r < m.rows; ++r) {
      for (std::size_t c = top; c < m.cols; ++c) {
        const Int a = abs_int(m.at(r, c));
        if (a != 0 && (best == 0 || a < best)) {
          best = a;
          pr = r;
          pc = c;
        }
      }
    }
    if (best == 0) break;  // active block is zero

    for (std::size_t c = top; c < m.cols; ++c) std::swap(m.at(top, c), m.at(pr, c));
    for (std::size_t r = top; r < m.rows; ++r) std::swap(m.at(r, top), m.at(r, pc));

    bool clean = true;
    for (std::size_t r = top + 1; r < m.rows; ++r) {
      const Int q = m.at(r, top) / m.at(top, top);
      if (q != 0)
        for (std::size_t c = top; c < m.cols; ++c) m.at(r, c) -= q * m.at(top, c);
      if (m.at(r, top) != 0) clean = false;
    }
    for (std::size_t c = top + 1; c < m.cols; ++c) {
      const Int q = m.at(top, c) / m.at(top, top);
      if (q != 0)
        for (std::size_t r = top; r < m.rows; ++r) m.at(r, c) -= q * m.at(r, top);
      if (m.at(top, c) != 0) clean = false;
    }
    if (!clean) continue;  // remainders left; pick a new pivot

    // Divisibility fix-up: fold any entry the pivot does not divide into
    // the pivot column and redo this position.
    bool divides_all = true;
    for (std::size_t r = top + 1; r < m.rows && divides_all; ++r) {
      for (std::size_t c = top + 1; c < m.cols && divides_all; ++c) {
        if (m.at(r, c) % m.at(top, top) != 0) {
          for (std::size_t cc = top; cc < m.cols; ++cc) m.at(top, cc) += m.at(r, cc);
          divides_all = false;
        }
      }
    }
    if (!divides_all) continue;

    diag.push_back(abs_int(m.at(top, top)));
    ++top;
  }
  return diag;
}

AbelianInvariants abelian_invariants(const IntMatrix& relation_matrix) {
  AbelianInvariants out;
  std::vector<Int> diag = smith_diagonal(relation_matrix);
  out.free_rank = relation_matrix.cols - diag.size();
  for (Int& d : diag)
    if (d > 1) out.torsion.push_back(std::move(d));
  return out;
}

}  // namespace fpres
