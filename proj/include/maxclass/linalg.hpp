#pragma once

// Exact linear algebra over the rationals on sparse rows.
//
// Every routine here is deterministic: the reduced row-echelon form of a
// matrix is unique, and all derived bases (nullspace, spans, functionals) are
// reported in that canonical form so results can be compared byte for byte.

#include "maxclass/scalar.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace maxclass {

// Sorted by column, no explicit zeros.
using SparseVector = std::vector<std::pair<int, Scalar>>;

// y += a * x
void axpy(SparseVector& y, const Scalar& a, const SparseVector& x);
const Scalar* find_entry(const SparseVector& v, int col);
SparseVector make_sparse(const std::vector<Scalar>& dense);
std::vector<Scalar> to_dense(const SparseVector& v, int ambient);

// A finite list of vectors living in Q^ambient.
struct Span {
  int ambient = 0;
  std::vector<SparseVector> vectors;

  bool operator==(const Span&) const = default;
};

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols);

  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }

  const Scalar& at(int r, int c) const;
  void set(int r, int c, const Scalar& value);
  int append_row(SparseVector row);
  const SparseVector& row(int r) const;
  const std::vector<SparseVector>& row_data() const { return rows_; }

  // Column labels tie columns to solver unknowns; must be unique.
  void set_labels(std::vector<std::string> labels);
  const std::vector<std::string>& labels() const { return labels_; }

  bool operator==(const RatMatrix&) const = default;

 private:
  void check(int r, int c) const;

  int cols_ = 0;
  std::vector<SparseVector> rows_;
  std::vector<std::string> labels_;
};

struct RrefResult {
  RatMatrix reduced;  // same shape as the input; zero rows at the bottom
  std::vector<int> pivots;
};

// Gauss-Jordan with leftmost pivot and first-nonzero-row selection. The
// elimination sweep over rows runs under OpenMP.
RrefResult rref(const RatMatrix& m);
// Single-threaded reference for rref(); kept for testing and benchmarking.
RrefResult rref_serial(const RatMatrix& m);

// In-place kernels on raw row lists. Zero rows are dropped; on return `rows`
// holds exactly the nonzero RREF rows and the pivot list is returned.
std::vector<int> gauss_jordan(std::vector<SparseVector>& rows, int cols);
std::vector<int> gauss_jordan_serial(std::vector<SparseVector>& rows, int cols);

int rank(const RatMatrix& m);

// Basis of {v : M v = 0}, in reduced echelon form.
Span nullspace(const RatMatrix& m);
Span nullspace(std::vector<SparseVector> rows, int cols);

// Canonical (RREF) basis of the span.
Span echelon(const Span& s);
// Throws std::invalid_argument on ambient mismatch.
bool subspace_equal(const Span& a, const Span& b);
// span(inner) ⊆ span(outer)
bool subspace_contains(const Span& outer, const Span& inner);
// Basis of {l : l(v) = 0 for all v in V}, as row functionals.
Span annihilating_functionals(const Span& v);

struct LinearSolve {
  std::optional<SparseVector> solution;  // empty when inconsistent
  int rank = 0;
  int unknowns = 0;
  bool unique() const { return solution && rank == unknowns; }
};

// Solves A x = b; free variables are set to zero.
LinearSolve solve(const RatMatrix& a, const SparseVector& b);

}  // namespace maxclass
