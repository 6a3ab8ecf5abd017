#include "maxclass/local.hpp"

#include "symbolic.hpp"

#include <map>

namespace maxclass {

using detail::SymElement;

namespace {

// Accumulates membership rows over a fixed coordinate system, keeping the
// row list reduced so long families stay cheap.
class MembershipSystem {
 public:
  MembershipSystem(const MapCoordinates& coords, const std::vector<GradedMap>& der_basis)
      : coords_(coords), der_basis_(der_basis) {}

  // Requires (D(x_1), ..., D(x_n)) in span{(B(x_1), ..., B(x_n)) : B in der_basis}.
  void add(const std::vector<Element>& xs) {
    std::map<std::pair<int, BasisIndex>, int> column;
    std::vector<SymElement> images;
    for (std::size_t blk = 0; blk < xs.size(); ++blk) {
      SymElement img;
      for (const auto& [s, c] : xs[blk].terms())
        detail::add_scaled(img, c, detail::sym_unknowns(coords_.unknowns_of(s), [&](int id) {
                             return coords_.unknowns()[id].second;
                           }));
      for (const auto& [t, lin] : img) column.emplace(std::make_pair(int(blk), t), 0);
      images.push_back(std::move(img));
    }
    std::vector<Element> values;
    for (const auto& b : der_basis_) {
      for (std::size_t blk = 0; blk < xs.size(); ++blk) {
        values.push_back(b.apply(xs[blk]));
        for (const auto& [t, c] : values.back().terms())
          column.emplace(std::make_pair(int(blk), t), 0);
      }
    }
    if (column.empty()) return;
    int n = 0;
    for (auto& [key, id] : column) id = n++;

    Span v{n, {}};
    for (std::size_t i = 0; i < der_basis_.size(); ++i) {
      SparseVector vec;
      for (std::size_t blk = 0; blk < xs.size(); ++blk)
        for (const auto& [t, c] : values[i * xs.size() + blk].terms())
          vec.emplace_back(column.at({int(blk), t}), c);
      std::sort(vec.begin(), vec.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      v.vectors.push_back(std::move(vec));
    }
    std::vector<const detail::LinearCombination*> by_column(static_cast<std::size_t>(n), nullptr);
    for (std::size_t blk = 0; blk < xs.size(); ++blk)
      for (const auto& [t, lin] : images[blk]) by_column[column.at({int(blk), t})] = &lin;

    for (const auto& ell : annihilating_functionals(v).vectors) {
      std::map<int, Scalar> row;
      for (const auto& [col, c] : ell)
        if (by_column[col])
          for (const auto& [id, x] : *by_column[col]) row[id] += c * x;
      SparseVector r;
      for (auto& [id, x] : row)
        if (x != 0) r.emplace_back(id, std::move(x));
      if (!r.empty()) rows_.push_back(std::move(r));
    }
    if (rows_.size() > 4 * static_cast<std::size_t>(coords_.size()) + 64)
      gauss_jordan(rows_, coords_.size());
  }

  Span solutions() const { return nullspace(rows_, coords_.size()); }

 private:
  const MapCoordinates& coords_;
  const std::vector<GradedMap>& der_basis_;
  std::vector<SparseVector> rows_;
};

int support_top(const Element& x) { return x.is_zero() ? 0 : x.max_degree(); }

SolveReport overapprox(const AlgebraSpec& spec, int weight, int horizon, const SolveReport& der,
                       SolveKind kind, const std::vector<std::vector<Element>>& tests) {
  if (tests.empty()) throw std::invalid_argument("empty test family");
  if (der.kind != SolveKind::derivation || der.weight != weight)
    throw std::invalid_argument("derivation report of weight " + std::to_string(weight) + " required");
  int top = 1;
  for (const auto& t : tests)
    for (const auto& x : t) {
      if (x.is_zero()) throw std::invalid_argument("test family contains the zero vector");
      top = std::max(top, support_top(x));
    }
  const DegreeWindow window{1, top};
  if (top > der.window.hi)
    throw std::invalid_argument("test family reaches degree " + std::to_string(top) +
                                " beyond the derivation window");
  std::vector<GradedMap> basis;
  for (const auto& m : der.maps) basis.push_back(m.restricted(window));

  MapCoordinates coords(spec, weight, window, horizon);
  MembershipSystem system(coords, basis);
  for (const auto& t : tests) system.add(t);

  SolveReport report;
  report.algebra = spec.name();
  report.kind = kind;
  report.weight = weight;
  report.horizon = horizon;
  report.window = window;
  for (const auto& v : system.solutions().vectors) report.maps.push_back(coords.to_map(v));
  report.dimension = static_cast<int>(report.maps.size());
  return report;
}

}  // namespace

SubspaceReport value_space(const std::vector<GradedMap>& der_basis, const Element& x) {
  std::vector<Element> values;
  for (const auto& b : der_basis) values.push_back(b.apply(x));
  SubspaceReport out;
  out.basis = echelonize(values);
  out.dimension = static_cast<int>(out.basis.size());
  if (!x.is_zero()) out.window = {x.terms().begin()->first.degree, x.max_degree()};
  return out;
}

TestFamily default_family(const AlgebraSpec& spec, int weight, int horizon, int bound) {
  const int top = std::min(bound, horizon - std::max(weight, 0));
  const auto basis = spec.basis(1, top);
  TestFamily fam;
  std::vector<Element> sums;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    fam.points.push_back(Element::basis(basis[a]));
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      Element s = Element::basis(basis[a]) + Element::basis(basis[b]);
      fam.points.push_back(s);
      fam.pairs.emplace_back(Element::basis(basis[a]), Element::basis(basis[b]));
      for (std::size_t c = 0; c < basis.size(); ++c)
        if (c != a && c != b) fam.pairs.emplace_back(s, Element::basis(basis[c]));
    }
  }
  const BasisIndex e1{1, 0}, e2{2, 0};
  if (spec.contains(e1) && spec.contains(e2) && top >= 3) {
    for (const auto& e : basis) {
      if (e.degree < 3) continue;
      Element t = Element::basis(e1) + Element::basis(e2) + Element::basis(e);
      fam.points.push_back(t);
      fam.pairs.emplace_back(t, Element::basis(e1));
    }
  }
  return fam;
}

SolveReport local_overapprox(const AlgebraSpec& spec, int weight, int horizon,
                             const TestFamily& family, const SolveReport& der) {
  std::vector<std::vector<Element>> tests;
  for (const auto& x : family.points) tests.push_back({x});
  return overapprox(spec, weight, horizon, der, SolveKind::local_overapprox, tests);
}

SolveReport two_local_overapprox(const AlgebraSpec& spec, int weight, int horizon,
                                 const TestFamily& family, const SolveReport& der) {
  std::vector<std::vector<Element>> tests;
  for (const auto& [x, y] : family.pairs) tests.push_back({x, y});
  return overapprox(spec, weight, horizon, der, SolveKind::two_local_overapprox, tests);
}

Element omega_eval(const OmegaParams& p, const Element& x, int horizon) {
  if (p.q <= 2) throw std::invalid_argument("omega needs q > 2");
  if (p.m < 2 || p.theta.size() != static_cast<std::size_t>(p.m - 1))
    throw std::invalid_argument("omega needs m >= 2 and m-1 theta entries");
  for (const auto& [idx, c] : x.terms())
    if (idx.slot != 0 || idx.degree < 1 || idx.degree > horizon)
      throw std::invalid_argument("omega argument " + to_string(idx) + " is not in m0 on the window");
  Element out;
  if (x.coeff({1, 0}) != 0) {
    for (const auto& [idx, ki] : x.terms()) {
      if (idx.degree < 2) continue;
      for (int j = 2; j <= p.m; ++j) {
        const int target = idx.degree + j - 2;
        if (target > horizon)
          throw horizon_error("omega term e" + std::to_string(target) + " past horizon");
        out.add({target, 0}, ki * p.theta[static_cast<std::size_t>(j - 2)]);
      }
    }
    return out;
  }
  if (x.size() == 1 && x.terms().begin()->first == BasisIndex{p.q, 0})
    return p.lambda * x;
  return out;
}

std::pair<Element, Element> omega_linearity_obstruction(const OmegaParams& p, int horizon) {
  auto w = [&](const Element& x) { return omega_eval(p, x, horizon); };
  const Element e1 = Element::basis(1), e2 = Element::basis(2), eq = Element::basis(p.q);
  return {w(e1 + e2) - w(e1) - w(e2), w(e2 + eq) - w(e2) - w(eq)};
}

}  // namespace maxclass
