#include "maxclass/linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace maxclass {

namespace {

const Scalar kZero(0);

void check_sorted(const SparseVector& v, int cols) {
  int prev = -1;
  for (const auto& [c, x] : v) {
    if (c <= prev || c < 0 || c >= cols)
      throw std::out_of_range("sparse row has unsorted or out-of-range column " + std::to_string(c));
    if (x == 0) throw std::invalid_argument("sparse row stores an explicit zero");
    prev = c;
  }
}

void scale(SparseVector& v, const Scalar& a) {
  for (auto& entry : v) entry.second *= a;
}

// Eliminates column `col` from every row except `pivot_row`.
template <bool Parallel>
void eliminate_column(std::vector<SparseVector>& rows, int pivot_row, int col) {
  const SparseVector& pivot = rows[pivot_row];
  const long n = static_cast<long>(rows.size());
#pragma omp parallel for schedule(dynamic, 32) if (Parallel)
  for (long i = 0; i < n; ++i) {
    if (i == pivot_row) continue;
    const Scalar* entry = find_entry(rows[i], col);
    if (entry == nullptr) continue;
    Scalar factor = -*entry;
    axpy(rows[i], factor, pivot);
  }
}

template <bool Parallel>
std::vector<int> gauss_jordan_impl(std::vector<SparseVector>& rows, int cols) {
  std::erase_if(rows, [](const SparseVector& v) { return v.empty(); });
  std::vector<int> pivots;
  std::size_t next = 0;
  for (int col = 0; col < cols && next < rows.size(); ++col) {
    // Rows at or below `next` have no entries left of `col`.
    std::size_t found = rows.size();
    for (std::size_t i = next; i < rows.size(); ++i) {
      if (!rows[i].empty() && rows[i].front().first == col) {
        found = i;
        break;
      }
    }
    if (found == rows.size()) continue;
    std::swap(rows[next], rows[found]);
    Scalar inv = 1 / rows[next].front().second;
    scale(rows[next], inv);
    eliminate_column<Parallel>(rows, static_cast<int>(next), col);
    pivots.push_back(col);
    ++next;
  }
  rows.resize(next);
  return pivots;
}

RrefResult rref_with(const RatMatrix& m, bool parallel) {
  std::vector<SparseVector> rows = m.row_data();
  auto pivots = parallel ? gauss_jordan(rows, m.cols()) : gauss_jordan_serial(rows, m.cols());
  RatMatrix out(0, m.cols());
  for (auto& r : rows) out.append_row(std::move(r));
  while (out.rows() < m.rows()) out.append_row({});
  if (!m.labels().empty()) out.set_labels(m.labels());
  return {std::move(out), std::move(pivots)};
}

}  // namespace

void axpy(SparseVector& y, const Scalar& a, const SparseVector& x) {
  if (a == 0 || x.empty()) return;
  SparseVector out;
  out.reserve(y.size() + x.size());
  auto iy = y.begin();
  auto ix = x.begin();
  while (iy != y.end() || ix != x.end()) {
    if (ix == x.end() || (iy != y.end() && iy->first < ix->first)) {
      out.push_back(std::move(*iy++));
    } else if (iy == y.end() || ix->first < iy->first) {
      out.emplace_back(ix->first, a * ix->second);
      ++ix;
    } else {
      Scalar s = iy->second + a * ix->second;
      if (s != 0) out.emplace_back(iy->first, std::move(s));
      ++iy;
      ++ix;
    }
  }
  y = std::move(out);
}

const Scalar* find_entry(const SparseVector& v, int col) {
  auto it = std::lower_bound(v.begin(), v.end(), col,
                             [](const auto& entry, int c) { return entry.first < c; });
  if (it == v.end() || it->first != col) return nullptr;
  return &it->second;
}

SparseVector make_sparse(const std::vector<Scalar>& dense) {
  SparseVector v;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) v.emplace_back(static_cast<int>(i), dense[i]);
  return v;
}

std::vector<Scalar> to_dense(const SparseVector& v, int ambient) {
  std::vector<Scalar> out(static_cast<std::size_t>(ambient));
  for (const auto& [c, x] : v) out.at(static_cast<std::size_t>(c)) = x;
  return out;
}

RatMatrix::RatMatrix(int rows, int cols) : cols_(cols), rows_(static_cast<std::size_t>(rows)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

void RatMatrix::check(int r, int c) const {
  if (r < 0 || r >= rows() || c < 0 || c >= cols_)
    throw std::out_of_range("matrix entry (" + std::to_string(r) + "," + std::to_string(c) +
                            ") outside " + std::to_string(rows()) + "x" + std::to_string(cols_));
}

const Scalar& RatMatrix::at(int r, int c) const {
  check(r, c);
  const Scalar* e = find_entry(rows_[r], c);
  return e ? *e : kZero;
}

void RatMatrix::set(int r, int c, const Scalar& value) {
  check(r, c);
  auto& row = rows_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& entry, int col) { return entry.first < col; });
  if (it != row.end() && it->first == c) {
    if (value == 0)
      row.erase(it);
    else
      it->second = value;
  } else if (value != 0) {
    row.insert(it, {c, value});
  }
}

int RatMatrix::append_row(SparseVector row) {
  check_sorted(row, cols_);
  rows_.push_back(std::move(row));
  return rows() - 1;
}

const SparseVector& RatMatrix::row(int r) const {
  if (r < 0 || r >= rows()) throw std::out_of_range("matrix row " + std::to_string(r));
  return rows_[r];
}

void RatMatrix::set_labels(std::vector<std::string> labels) {
  if (static_cast<int>(labels.size()) != cols_)
    throw std::invalid_argument("label count does not match column count");
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) throw std::invalid_argument("duplicate column label");
  labels_ = std::move(labels);
}

std::vector<int> gauss_jordan(std::vector<SparseVector>& rows, int cols) {
  return gauss_jordan_impl<true>(rows, cols);
}

std::vector<int> gauss_jordan_serial(std::vector<SparseVector>& rows, int cols) {
  return gauss_jordan_impl<false>(rows, cols);
}

RrefResult rref(const RatMatrix& m) { return rref_with(m, true); }
RrefResult rref_serial(const RatMatrix& m) { return rref_with(m, false); }

int rank(const RatMatrix& m) {
  std::vector<SparseVector> rows = m.row_data();
  return static_cast<int>(gauss_jordan(rows, m.cols()).size());
}

Span nullspace(std::vector<SparseVector> rows, int cols) {
  auto pivots = gauss_jordan(rows, cols);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<SparseVector> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    SparseVector v{{free, Scalar(1)}};
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (const Scalar* e = find_entry(rows[r], free)) v.emplace_back(pivots[r], -*e);
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    basis.push_back(std::move(v));
  }
  return echelon(Span{cols, std::move(basis)});
}

Span nullspace(const RatMatrix& m) { return nullspace(m.row_data(), m.cols()); }

Span echelon(const Span& s) {
  Span out{s.ambient, s.vectors};
  for (const auto& v : out.vectors) check_sorted(v, s.ambient);
  gauss_jordan(out.vectors, s.ambient);
  return out;
}

bool subspace_equal(const Span& a, const Span& b) {
  if (a.ambient != b.ambient)
    throw std::invalid_argument("subspace_equal: ambient dimensions " + std::to_string(a.ambient) +
                                " and " + std::to_string(b.ambient) + " differ");
  return echelon(a).vectors == echelon(b).vectors;
}

bool subspace_contains(const Span& outer, const Span& inner) {
  if (outer.ambient != inner.ambient)
    throw std::invalid_argument("subspace_contains: ambient dimensions differ");
  Span base = echelon(outer);
  Span joined = base;
  joined.vectors.insert(joined.vectors.end(), inner.vectors.begin(), inner.vectors.end());
  return echelon(joined).vectors.size() == base.vectors.size();
}

Span annihilating_functionals(const Span& v) {
  for (const auto& x : v.vectors) check_sorted(x, v.ambient);
  return nullspace(v.vectors, v.ambient);
}

LinearSolve solve(const RatMatrix& a, const SparseVector& b) {
  const int n = a.cols();
  check_sorted(b, a.rows());
  std::vector<SparseVector> rows = a.row_data();
  for (const auto& [r, x] : b) rows[r].emplace_back(n, x);
  auto pivots = gauss_jordan(rows, n + 1);
  LinearSolve out;
  out.unknowns = n;
  if (!pivots.empty() && pivots.back() == n) {
    out.rank = static_cast<int>(pivots.size()) - 1;
    return out;
  }
  out.rank = static_cast<int>(pivots.size());
  SparseVector x;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (const Scalar* e = find_entry(rows[r], n)) x.emplace_back(pivots[r], *e);
  }
  out.solution = std::move(x);
  return out;
}

}  // namespace maxclass
