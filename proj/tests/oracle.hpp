#pragma once

// Independent reference computations for the tests: dense elimination over
// mpq_class and bracket coefficients written directly from the defining
// relations of m0, l1 and m2. Nothing here calls the solver library.

#include <gmpxx.h>

#include <random>
#include <string>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Row = std::vector<Q>;

// Rank of a dense matrix by plain row reduction.
inline int rank(std::vector<Row> m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Q f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

// Kernel basis (one vector per free column).
inline std::vector<Row> kernel(std::vector<Row> m, std::size_t cols) {
  std::vector<int> pivot_of_row;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Q inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Q f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_of_row.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivot_of_row) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Row> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Row v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivot_of_row.size(); ++i)
      v[static_cast<std::size_t>(pivot_of_row[i])] = -m[i][f];
    out.push_back(std::move(v));
  }
  return out;
}

// Coefficient of e_{i+j} in [e_i, e_j] for the 1-dimensional-component algebras.
inline Q coef(const std::string& name, int i, int j) {
  if (i < 1 || j < 1 || i == j) return 0;
  if (i > j) return -coef(name, j, i);
  if (name == "l1") return j - i;
  if (i == 1 && j >= 2) return 1;
  if (name == "m2" && i == 2 && j >= 3) return 1;
  return 0;
}

// Dimension of the projection of a kernel onto the first `keep` columns.
inline int projected_dim(const std::vector<Row>& kern, const std::vector<std::size_t>& keep) {
  std::vector<Row> proj;
  for (const auto& v : kern) {
    Row p;
    for (auto c : keep) p.push_back(v[c]);
    proj.push_back(std::move(p));
  }
  return rank(proj);
}

// dim Der_k on source degrees 1..W, W = N - max(k,0), by brute force:
// D(e_i) = c_i e_{i+k}.
inline int derivation_dim(const std::string& name, int k, int n) {
  std::vector<int> col(static_cast<std::size_t>(n) + 1, -1);
  std::size_t cols = 0;
  for (int i = 1; i <= n; ++i)
    if (i + k >= 1 && i + k <= n) col[static_cast<std::size_t>(i)] = static_cast<int>(cols++);
  std::vector<Row> m;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; i + j <= n && i + j + k <= n; ++j) {
      Row r(cols, 0);
      auto add = [&](int src, const Q& c) {
        if (src >= 1 && src <= n && col[src] >= 0) r[static_cast<std::size_t>(col[src])] += c;
      };
      add(i + j, coef(name, i, j));
      add(i, -coef(name, i + k, j));
      add(j, -coef(name, i, j + k));
      m.push_back(std::move(r));
    }
  auto kern = kernel(m, cols);
  std::vector<std::size_t> keep;
  for (int i = 1; i <= n - std::max(k, 0); ++i)
    if (col[i] >= 0) keep.push_back(static_cast<std::size_t>(col[i]));
  return projected_dim(kern, keep);
}

// dim BDer_k on pairs with a + b <= N - max(k,0): f(e_a, e_b) = c_ab e_{a+b+k}.
inline int biderivation_dim(const std::string& name, int k, int n) {
  std::vector<std::vector<int>> col(static_cast<std::size_t>(n) + 1,
                                    std::vector<int>(static_cast<std::size_t>(n) + 1, -1));
  std::size_t cols = 0;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; a + b <= n; ++b)
      if (a + b + k >= 1 && a + b + k <= n) col[a][b] = static_cast<int>(cols++);
  auto add = [&](Row& r, int a, int b, const Q& c) {
    if (a == b || c == 0) return;
    Q s = c;
    if (a > b) {
      std::swap(a, b);
      s = -s;
    }
    if (a < 1 || a + b > n || col[a][b] < 0) return;
    r[static_cast<std::size_t>(col[a][b])] += s;
  };
  std::vector<Row> m;
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      for (int z = y + 1; x + y + z <= n && x + y + z + k <= n; ++z) {
        // f(x,[y,z]) - [f(x,y), z] - [y, f(x,z)]
        Row r(cols, 0);
        add(r, x, y + z, coef(name, y, z));
        // f(x,y) = c e_{x+y+k}; [e_{x+y+k}, e_z]
        add(r, x, y, -coef(name, x + y + k, z));
        add(r, x, z, -coef(name, y, x + z + k));
        m.push_back(std::move(r));
      }
  auto kern = kernel(m, cols);
  std::vector<std::size_t> keep;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; a + b <= n - std::max(k, 0); ++b)
      if (col[a][b] >= 0) keep.push_back(static_cast<std::size_t>(col[a][b]));
  return projected_dim(kern, keep);
}

// dim of weight-k commuting maps on degrees 1..N-max(k,0)-1.
inline int commuting_dim(const std::string& name, int k, int n) {
  std::vector<int> col(static_cast<std::size_t>(n) + 1, -1);
  std::size_t cols = 0;
  for (int i = 1; i <= n; ++i)
    if (i + k >= 1 && i + k <= n) col[static_cast<std::size_t>(i)] = static_cast<int>(cols++);
  std::vector<Row> m;
  for (int a = 1; a <= n; ++a)
    for (int b = a; a + b + std::max(k, 0) <= n; ++b) {
      Row r(cols, 0);
      if (col[a] >= 0) r[static_cast<std::size_t>(col[a])] += coef(name, a + k, b);
      if (col[b] >= 0) r[static_cast<std::size_t>(col[b])] += coef(name, b + k, a);
      m.push_back(std::move(r));
    }
  auto kern = kernel(m, cols);
  std::vector<std::size_t> keep;
  for (int i = 1; i <= n - std::max(k, 0) - 1; ++i)
    if (col[i] >= 0) keep.push_back(static_cast<std::size_t>(col[i]));
  return projected_dim(kern, keep);
}

// Small random rationals with numerators in [-5,5] and denominators in [1,4].
class RandomQ {
 public:
  explicit RandomQ(unsigned seed) : rng_(seed) {}
  Q next() {
    Q q(std::uniform_int_distribution<int>(-5, 5)(rng_), std::uniform_int_distribution<int>(1, 4)(rng_));
    q.canonicalize();
    return q;
  }
  Q nonzero() {
    Q q;
    do q = next();
    while (q == 0);
    return q;
  }
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

 private:
  std::mt19937 rng_;
};

}  // namespace oracle
