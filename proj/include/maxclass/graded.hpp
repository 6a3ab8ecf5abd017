#pragma once

#include "maxclass/linalg.hpp"
#include "maxclass/scalar.hpp"

#include <array>
#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace maxclass {

// Basis vector `slot` of the homogeneous component of degree `degree`.
struct BasisIndex {
  int degree = 0;
  int slot = 0;

  auto operator<=>(const BasisIndex&) const = default;
};

std::string to_string(const BasisIndex& index);

// Thrown whenever a bracket or map would need degrees past the horizon.
class horizon_error : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Finitely supported rational combination of basis vectors. Zero
// coefficients are never stored.
class Element {
 public:
  using Terms = std::map<BasisIndex, Scalar>;

  Element() = default;
  static Element basis(BasisIndex index, const Scalar& coeff = Scalar(1));
  static Element basis(int degree, const Scalar& coeff = Scalar(1)) {
    return basis(BasisIndex{degree, 0}, coeff);
  }

  void add(const BasisIndex& index, const Scalar& coeff);
  Scalar coeff(const BasisIndex& index) const;
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Degree of a nonzero homogeneous element; nullopt for zero or mixed.
  std::optional<int> degree() const;
  int max_degree() const;  // throws on zero

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Scalar& c);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Scalar& c, Element a) { return a *= c; }
  friend Element operator-(Element a) { return a *= Scalar(-1); }
  bool operator==(const Element&) const = default;

 private:
  Terms terms_;
};

// Human-readable, e.g. "e1 + 3/2*e(5,1)"; slot-0 vectors print as e<degree>.
std::string to_string(const Element& x);

struct DegreeWindow {
  int lo = 0;
  int hi = -1;
  bool contains(int d) const { return d >= lo && d <= hi; }
  bool empty() const { return hi < lo; }
  bool operator==(const DegreeWindow&) const = default;
};

// A graded Lie algebra given by sparse structure constants, valid up to
// degree `horizon`. The table stores [a,b] for a < b only; the reversed
// order and the diagonal follow from skew-symmetry.
class AlgebraSpec {
 public:
  // dims[d] is the dimension of the degree-d component, d = 0..horizon.
  AlgebraSpec(std::string name, int horizon, std::vector<int> dims);

  const std::string& name() const { return name_; }
  int horizon() const { return horizon_; }
  int component_dim(int degree) const;
  int min_degree() const { return min_degree_; }
  bool contains(const BasisIndex& index) const;

  std::vector<BasisIndex> basis_in_degree(int degree) const;
  std::vector<BasisIndex> basis(int lo, int hi) const;
  std::vector<BasisIndex> basis() const { return basis(min_degree_, horizon_); }

  // Records [a,b] = value. Checks grading, slot ranges, and that the pair
  // has not been set before with a different value (in either order).
  void set_bracket(BasisIndex a, BasisIndex b, Element value);
  // Structure constants for a basis pair; throws horizon_error past the horizon.
  Element bracket_basis(const BasisIndex& a, const BasisIndex& b) const;
  const std::map<std::pair<BasisIndex, BasisIndex>, Element>& table() const { return table_; }

  // Same algebra restricted to degrees <= horizon.
  AlgebraSpec truncated(int horizon) const;

 private:
  std::string name_;
  int horizon_;
  int min_degree_ = 0;
  std::vector<int> dims_;
  std::map<std::pair<BasisIndex, BasisIndex>, Element> table_;
};

Element bracket(const AlgebraSpec& spec, const Element& x, const Element& y);

// The six built-in algebras: m0, l1, m2 and their derivation models
// m0ext, m2ext, l1ext. Throws std::invalid_argument on an unknown name or
// horizon < 4.
AlgebraSpec builtin_algebra(const std::string& name, int horizon);
bool is_builtin_base(const std::string& name);
// m0 -> m0ext, l1 -> l1ext, m2 -> m2ext.
std::string extension_name(const std::string& base);

// The embedded copy of a base algebra inside its extension: e_d <-> (d, 0), d >= 1.
bool is_ideal_index(const BasisIndex& index);

struct JacobiReport {
  bool pass = true;
  std::array<BasisIndex, 3> triple{};
  Element defect;
};

// Checks [[a,b],c] + [[b,c],a] + [[c,a],b] = 0 over all unordered basis
// triples with total degree within the horizon, in lexicographic order.
JacobiReport jacobi_check(const AlgebraSpec& spec);

struct SubspaceReport {
  std::vector<Element> basis;  // reduced echelon form in BasisIndex order
  DegreeWindow window;
  int dimension = 0;
};

// Reduced echelon basis of the span of `elements`.
std::vector<Element> echelonize(const std::vector<Element>& elements);

// Elements of degrees lo..horizon-2 commuting with every basis vector that
// fits inside the horizon.
SubspaceReport center(const AlgebraSpec& spec);
// {x in ext : [x, e] = 0 for every e selected by `ideal`}, same window rule.
SubspaceReport annihilator(const AlgebraSpec& ext,
                           const std::function<bool(const BasisIndex&)>& ideal);

// Algebra file format: see README.
class parse_error : public std::runtime_error {
 public:
  parse_error(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

AlgebraSpec parse_algebra_file(const std::string& text);
std::string write_algebra_file(const AlgebraSpec& spec);

}  // namespace maxclass
