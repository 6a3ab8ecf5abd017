#include "maxclass/graded.hpp"

#include <algorithm>
#include <sstream>

namespace maxclass {

std::string to_string(const BasisIndex& index) {
  if (index.slot == 0) return "e" + std::to_string(index.degree);
  return "e(" + std::to_string(index.degree) + "," + std::to_string(index.slot) + ")";
}

Element Element::basis(BasisIndex index, const Scalar& coeff) {
  Element e;
  e.add(index, coeff);
  return e;
}

void Element::add(const BasisIndex& index, const Scalar& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(index, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

Scalar Element::coeff(const BasisIndex& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? Scalar(0) : it->second;
}

std::optional<int> Element::degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = terms_.begin()->first.degree;
  if (terms_.rbegin()->first.degree != d) return std::nullopt;
  return d;
}

int Element::max_degree() const {
  if (terms_.empty()) throw std::logic_error("max_degree of the zero element");
  return terms_.rbegin()->first.degree;
}

Element& Element::operator+=(const Element& other) {
  for (const auto& [idx, c] : other.terms_) add(idx, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  for (const auto& [idx, c] : other.terms_) add(idx, -c);
  return *this;
}

Element& Element::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& term : terms_) term.second *= c;
  return *this;
}

std::string to_string(const Element& x) {
  if (x.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [idx, c] : x.terms()) {
    Scalar mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1) out << mag.get_str() << "*";
    out << to_string(idx);
  }
  return out.str();
}

AlgebraSpec::AlgebraSpec(std::string name, int horizon, std::vector<int> dims)
    : name_(std::move(name)), horizon_(horizon), dims_(std::move(dims)) {
  if (horizon < 1) throw std::invalid_argument("horizon must be positive");
  if (static_cast<int>(dims_.size()) != horizon + 1)
    throw std::invalid_argument("component dimension list must cover degrees 0..horizon");
  if (std::any_of(dims_.begin(), dims_.end(), [](int d) { return d < 0; }))
    throw std::invalid_argument("negative component dimension");
  min_degree_ = dims_[0] > 0 ? 0 : 1;
}

int AlgebraSpec::component_dim(int degree) const {
  if (degree < 0 || degree > horizon_) return 0;
  return dims_[degree];
}

bool AlgebraSpec::contains(const BasisIndex& index) const {
  return index.slot >= 0 && index.slot < component_dim(index.degree);
}

std::vector<BasisIndex> AlgebraSpec::basis_in_degree(int degree) const {
  std::vector<BasisIndex> out;
  for (int s = 0; s < component_dim(degree); ++s) out.push_back({degree, s});
  return out;
}

std::vector<BasisIndex> AlgebraSpec::basis(int lo, int hi) const {
  std::vector<BasisIndex> out;
  for (int d = std::max(lo, 0); d <= std::min(hi, horizon_); ++d)
    for (int s = 0; s < dims_[d]; ++s) out.push_back({d, s});
  return out;
}

void AlgebraSpec::set_bracket(BasisIndex a, BasisIndex b, Element value) {
  if (!contains(a) || !contains(b))
    throw std::invalid_argument("bracket of " + to_string(a) + " and " + to_string(b) +
                                ": basis index out of range");
  if (a == b) {
    if (!value.is_zero()) throw std::invalid_argument("nonzero self-bracket at " + to_string(a));
    return;
  }
  if (b < a) {
    std::swap(a, b);
    value *= Scalar(-1);
  }
  const int target = a.degree + b.degree;
  if (target > horizon_)
    throw horizon_error("bracket of " + to_string(a) + " and " + to_string(b) +
                        " lies beyond horizon " + std::to_string(horizon_));
  for (const auto& [idx, c] : value.terms()) {
    if (idx.degree != target)
      throw std::invalid_argument("grading violation: [" + to_string(a) + "," + to_string(b) +
                                  "] has a term in degree " + std::to_string(idx.degree) +
                                  ", expected " + std::to_string(target));
    if (!contains(idx))
      throw std::invalid_argument("bracket target " + to_string(idx) + " out of range");
  }
  auto key = std::make_pair(a, b);
  auto it = table_.find(key);
  if (it != table_.end()) {
    if (it->second != value)
      throw std::invalid_argument("conflicting entries for [" + to_string(a) + "," +
                                  to_string(b) + "]");
    return;
  }
  if (!value.is_zero()) table_.emplace(key, std::move(value));
}

Element AlgebraSpec::bracket_basis(const BasisIndex& a, const BasisIndex& b) const {
  if (a.degree + b.degree > horizon_)
    throw horizon_error("[" + to_string(a) + "," + to_string(b) + "] exceeds horizon " +
                        std::to_string(horizon_));
  if (a == b) return {};
  if (a < b) {
    auto it = table_.find({a, b});
    return it == table_.end() ? Element{} : it->second;
  }
  auto it = table_.find({b, a});
  return it == table_.end() ? Element{} : -it->second;
}

AlgebraSpec AlgebraSpec::truncated(int horizon) const {
  if (horizon > horizon_) throw horizon_error("cannot extend a truncated algebra");
  AlgebraSpec out(name_, horizon, std::vector<int>(dims_.begin(), dims_.begin() + horizon + 1));
  for (const auto& [key, value] : table_)
    if (key.first.degree + key.second.degree <= horizon) out.table_.emplace(key, value);
  return out;
}

Element bracket(const AlgebraSpec& spec, const Element& x, const Element& y) {
  Element out;
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      Element t = spec.bracket_basis(a, b);
      if (t.is_zero()) continue;
      Scalar c = ca * cb;
      for (const auto& [idx, ct] : t.terms()) out.add(idx, c * ct);
    }
  }
  return out;
}

JacobiReport jacobi_check(const AlgebraSpec& spec) {
  const auto basis = spec.basis();
  const int n = static_cast<int>(basis.size());
  const int horizon = spec.horizon();
  for (int i = 0; i < n; ++i) {
    Element a = Element::basis(basis[i]);
    for (int j = i; j < n; ++j) {
      if (basis[i].degree + basis[j].degree > horizon) break;
      Element b = Element::basis(basis[j]);
      Element ab = spec.bracket_basis(basis[i], basis[j]);
      for (int l = j; l < n; ++l) {
        if (basis[i].degree + basis[j].degree + basis[l].degree > horizon) break;
        Element c = Element::basis(basis[l]);
        Element sum = bracket(spec, ab, c);
        sum += bracket(spec, spec.bracket_basis(basis[j], basis[l]), a);
        sum += bracket(spec, spec.bracket_basis(basis[l], basis[i]), b);
        if (!sum.is_zero()) return {false, {basis[i], basis[j], basis[l]}, std::move(sum)};
      }
    }
  }
  return {};
}

namespace {

struct Columns {
  std::map<BasisIndex, int> index;
  std::vector<BasisIndex> order;

  explicit Columns(std::vector<BasisIndex> keys) : order(std::move(keys)) {
    std::sort(order.begin(), order.end());
    order.erase(std::unique(order.begin(), order.end()), order.end());
    for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = static_cast<int>(i);
  }
};

SubspaceReport commutant(const AlgebraSpec& spec,
                         const std::function<bool(const BasisIndex&)>& tested_against) {
  SubspaceReport report;
  report.window = {spec.min_degree(), spec.horizon() - 2};
  const auto unknowns = spec.basis(report.window.lo, report.window.hi);
  std::map<std::pair<BasisIndex, BasisIndex>, std::map<int, Scalar>> rows;
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    for (const auto& y : spec.basis(spec.min_degree(), spec.horizon() - unknowns[u].degree)) {
      if (!tested_against(y)) continue;
      for (const Element value = spec.bracket_basis(unknowns[u], y); const auto& [t, c] : value.terms())
        rows[{y, t}][static_cast<int>(u)] += c;
    }
  }
  std::vector<SparseVector> matrix;
  for (auto& [key, row] : rows) {
    SparseVector v;
    for (auto& [col, c] : row)
      if (c != 0) v.emplace_back(col, c);
    matrix.push_back(std::move(v));
  }
  Span kernel = nullspace(std::move(matrix), static_cast<int>(unknowns.size()));
  for (const auto& v : kernel.vectors) {
    Element e;
    for (const auto& [col, c] : v) e.add(unknowns[col], c);
    report.basis.push_back(std::move(e));
  }
  report.dimension = static_cast<int>(report.basis.size());
  return report;
}

}  // namespace

std::vector<Element> echelonize(const std::vector<Element>& elements) {
  std::vector<BasisIndex> keys;
  for (const auto& e : elements)
    for (const auto& [idx, c] : e.terms()) keys.push_back(idx);
  Columns cols(std::move(keys));
  Span s{static_cast<int>(cols.order.size()), {}};
  for (const auto& e : elements) {
    SparseVector v;
    for (const auto& [idx, c] : e.terms()) v.emplace_back(cols.index.at(idx), c);
    s.vectors.push_back(std::move(v));
  }
  std::vector<Element> out;
  for (const auto& v : echelon(s).vectors) {
    Element e;
    for (const auto& [col, c] : v) e.add(cols.order[col], c);
    out.push_back(std::move(e));
  }
  return out;
}

SubspaceReport center(const AlgebraSpec& spec) {
  return commutant(spec, [](const BasisIndex&) { return true; });
}

SubspaceReport annihilator(const AlgebraSpec& ext,
                           const std::function<bool(const BasisIndex&)>& ideal) {
  return commutant(ext, ideal);
}

bool is_ideal_index(const BasisIndex& index) { return index.slot == 0 && index.degree >= 1; }

}  // namespace maxclass
