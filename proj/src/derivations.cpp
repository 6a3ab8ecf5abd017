#include "maxclass/derivations.hpp"

#include "symbolic.hpp"

#include <cstdlib>

namespace maxclass {

using detail::SymElement;

namespace {

void check_solve_horizon(const AlgebraSpec& spec, int weight, int horizon, int margin) {
  if (horizon > spec.horizon())
    throw horizon_error("solve horizon " + std::to_string(horizon) + " exceeds algebra horizon " +
                        std::to_string(spec.horizon()));
  if (horizon < margin + std::abs(weight))
    throw std::invalid_argument("horizon " + std::to_string(horizon) +
                                " too small to constrain weight " + std::to_string(weight));
}

SymElement sym_image(const MapCoordinates& coords, const BasisIndex& source) {
  return detail::sym_unknowns(coords.unknowns_of(source),
                              [&](int id) { return coords.unknowns()[id].second; });
}

// Visits basis pairs a < b in `domain` whose bracket degree is in `domain`
// and whose image degree stays within the horizon.
template <class Fn>
void for_each_leibniz_pair(const AlgebraSpec& spec, DegreeWindow domain, int weight, int horizon,
                           Fn&& fn) {
  const auto basis = spec.basis(domain.lo, std::min(domain.hi, horizon));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const int sum = basis[i].degree + basis[j].degree;
      if (sum > horizon) break;
      if (!domain.contains(sum) || sum + weight > horizon) continue;
      fn(basis[i], basis[j]);
    }
  }
}

Element leibniz_defect(const AlgebraSpec& spec, const GradedMap& d, const BasisIndex& a,
                       const BasisIndex& b) {
  Element out = d.apply(spec.bracket_basis(a, b));
  out -= bracket(spec, d.image(a), Element::basis(b));
  out -= bracket(spec, Element::basis(a), d.image(b));
  return out;
}

GradedMap propagate_unchecked(const AlgebraSpec& spec, int weight, const Element& v1,
                              const Element& v2, int horizon) {
  const std::string& name = spec.name();
  if (!is_builtin_base(name))
    throw std::invalid_argument("propagation needs m0, l1 or m2, got '" + name + "'");
  if (!v1.is_zero() && v1.degree() != 1 + weight)
    throw std::invalid_argument("D(e1) must be homogeneous of degree 1+k");
  if (!v2.is_zero() && v2.degree() != 2 + weight)
    throw std::invalid_argument("D(e2) must be homogeneous of degree 2+k");
  const DegreeWindow window = derivation_window(weight, horizon);
  if (window.hi < 2) throw std::invalid_argument("horizon too small for propagation");

  const Element e1 = Element::basis(1);
  GradedMap d(weight, window);
  d.add_image({1, 0}, v1);
  d.add_image({2, 0}, v2);
  Element current = v2;
  for (int i = 2; i + 1 <= window.hi; ++i) {
    // [e1, e_i] = e_{i+1} in m0 and m2, (i-1) e_{i+1} in l1.
    Element next = bracket(spec, v1, Element::basis(i)) + bracket(spec, e1, current);
    if (name == "l1") next *= Scalar(1, i - 1);
    d.add_image({i + 1, 0}, next);
    current = std::move(next);
  }
  return d;
}

}  // namespace

DegreeWindow derivation_window(int weight, int horizon) {
  return {1, horizon - std::max(weight, 0)};
}

RatMatrix derivation_system(const AlgebraSpec& spec, int weight, int horizon,
                            const MapCoordinates& coords) {
  std::vector<SparseVector> rows;
  const auto basis = spec.basis(spec.min_degree(), horizon);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const auto& a = basis[i];
      const auto& b = basis[j];
      const int sum = a.degree + b.degree;
      if (sum > horizon) break;
      if (sum + weight > horizon) continue;
      SymElement acc;
      for (const Element value = spec.bracket_basis(a, b); const auto& [t, c] : value.terms())
        detail::add_scaled(acc, c, sym_image(coords, t));
      detail::add_scaled(acc, -1, detail::bracket_left(spec, sym_image(coords, a), b));
      detail::add_scaled(acc, -1, detail::bracket_right(spec, a, sym_image(coords, b)));
      detail::append_rows(rows, acc);
    }
  }
  RatMatrix m(0, coords.size());
  for (auto& r : rows) m.append_row(std::move(r));
  m.set_labels(coords.labels());
  return m;
}

SolveReport derivation_space(const AlgebraSpec& spec, int weight, int horizon) {
  check_solve_horizon(spec, weight, horizon, 4);
  MapCoordinates all(spec, weight, {spec.min_degree(), horizon}, horizon);
  Span kernel = nullspace(derivation_system(spec, weight, horizon, all));

  SolveReport report;
  report.algebra = spec.name();
  report.kind = SolveKind::derivation;
  report.weight = weight;
  report.horizon = horizon;
  report.window = derivation_window(weight, horizon);
  MapCoordinates win(spec, weight, report.window, horizon);
  Span projected{win.size(), {}};
  for (const auto& v : kernel.vectors) projected.vectors.push_back(win.to_vector(all.to_map(v)));
  for (const auto& v : echelon(projected).vectors) report.maps.push_back(win.to_map(v));
  report.dimension = static_cast<int>(report.maps.size());
  return report;
}

std::vector<GradedMap> closed_form_derivations(const std::string& name, int weight, int horizon) {
  if (!is_builtin_base(name))
    throw std::invalid_argument("no closed-form derivations for '" + name + "'");
  const DegreeWindow w = derivation_window(weight, horizon);
  const int k = weight;
  auto sum_from = [&](int first, auto coeff) {
    GradedMap m(k, w);
    for (int i = first; i <= w.hi; ++i) m.add_image({i, 0}, Element::basis(i + k, coeff(i)));
    return m;
  };
  auto one = [](int) { return Scalar(1); };
  auto single = [&](int i, const Scalar& c) {
    GradedMap m(k, w);
    m.add_image({i, 0}, Element::basis(i + k, c));
    return m;
  };
  std::vector<GradedMap> out;
  if (k < 0) return out;
  if (name == "m0") {
    if (k == 0) {
      out.push_back(sum_from(2, one));
      out.push_back(single(1, 1) + sum_from(3, [](int i) { return Scalar(i - 2); }));
    } else {
      out.push_back(single(1, 1));
      out.push_back(sum_from(2, one));
    }
  } else if (name == "l1") {
    out.push_back(sum_from(1, [k](int i) { return Scalar(i - k); }));
  } else {  // m2
    if (k == 0) {
      out.push_back(sum_from(1, [](int i) { return Scalar(i); }));
    } else if (k == 1) {
      out.push_back(sum_from(2, one));
    } else if (k == 2) {
      out.push_back(sum_from(2, one));
      out.push_back(single(1, 1) + sum_from(3, [](int) { return Scalar(-1); }));
    } else {
      out.push_back(single(1, 1) + single(2, 1));
      out.push_back(single(1, Scalar(-1, 2)) + single(2, Scalar(1, 2)) + sum_from(3, one));
    }
  }
  return out;
}

std::optional<LeibnizWitness> is_derivation(const AlgebraSpec& spec, const GradedMap& d,
                                            int horizon) {
  std::optional<LeibnizWitness> witness;
  for_each_leibniz_pair(spec, d.domain(), d.weight(), horizon,
                        [&](const BasisIndex& a, const BasisIndex& b) {
                          if (witness) return;
                          Element defect = leibniz_defect(spec, d, a, b);
                          if (!defect.is_zero()) witness = LeibnizWitness{a, b, std::move(defect)};
                        });
  return witness;
}

GradedMap ad(const AlgebraSpec& spec, const Element& x, int horizon) {
  if (x.is_zero()) return GradedMap(0, {spec.min_degree(), horizon});
  auto deg = x.degree();
  if (!deg) throw std::invalid_argument("ad of a non-homogeneous element");
  GradedMap m(*deg, {spec.min_degree(), horizon - *deg});
  for (const auto& s : spec.basis(spec.min_degree(), horizon - *deg))
    m.add_image(s, bracket(spec, x, Element::basis(s)));
  return m;
}

GradedMap ad_on_ideal(const AlgebraSpec& ext, const Element& y, int horizon) {
  if (y.is_zero()) return GradedMap(0, {1, horizon});
  auto deg = y.degree();
  if (!deg) throw std::invalid_argument("ad of a non-homogeneous element");
  GradedMap m(*deg, {1, horizon - *deg});
  for (int d = 1; d <= horizon - *deg; ++d) {
    Element img = bracket(ext, y, Element::basis(d));
    for (const auto& [idx, c] : img.terms())
      if (!is_ideal_index(idx))
        throw std::logic_error("ad image leaves the embedded ideal at " + to_string(idx));
    m.add_image({d, 0}, img);
  }
  return m;
}

Propagation propagate_from_generators(const AlgebraSpec& spec, int weight, const Element& v1,
                                      const Element& v2, int horizon) {
  GradedMap d = propagate_unchecked(spec, weight, v1, v2, horizon);
  Propagation out;
  out.witness = is_derivation(spec, d, horizon);
  if (!out.witness) out.map = std::move(d);
  return out;
}

Span propagated_derivation_span(const AlgebraSpec& spec, int weight, int horizon) {
  std::vector<GradedMap> seeds;
  for (const auto& b : spec.basis_in_degree(1 + weight))
    seeds.push_back(propagate_unchecked(spec, weight, Element::basis(b), {}, horizon));
  for (const auto& b : spec.basis_in_degree(2 + weight))
    seeds.push_back(propagate_unchecked(spec, weight, {}, Element::basis(b), horizon));

  const DegreeWindow window = derivation_window(weight, horizon);
  MapCoordinates win(spec, weight, window, horizon);
  if (seeds.empty()) return {win.size(), {}};

  // Leibniz defects are linear in the seed coefficients.
  std::map<std::tuple<BasisIndex, BasisIndex, BasisIndex>, SparseVector> rows;
  for (std::size_t s = 0; s < seeds.size(); ++s) {
    for_each_leibniz_pair(spec, window, weight, horizon,
                          [&](const BasisIndex& a, const BasisIndex& b) {
                            for (const Element value = leibniz_defect(spec, seeds[s], a, b); const auto& [t, c] : value.terms())
                              rows[{a, b, t}].emplace_back(static_cast<int>(s), c);
                          });
  }
  std::vector<SparseVector> system;
  for (auto& [key, row] : rows) system.push_back(std::move(row));
  Span combos = nullspace(std::move(system), static_cast<int>(seeds.size()));

  Span out{win.size(), {}};
  for (const auto& combo : combos.vectors) {
    GradedMap d(weight, window);
    for (const auto& [s, c] : combo) d += c * seeds[s];
    out.vectors.push_back(win.to_vector(d));
  }
  return echelon(out);
}

Realization realize_in_extension(const AlgebraSpec& base, const AlgebraSpec& ext,
                                 const GradedMap& d, int horizon) {
  const int k = d.weight();
  const auto component = ext.basis_in_degree(k);
  const int n = static_cast<int>(component.size());

  std::map<std::pair<BasisIndex, BasisIndex>, std::pair<SparseVector, Scalar>> rows;
  for (const auto& src : base.basis(std::max(d.domain().lo, 1), d.domain().hi)) {
    if (src.degree + k > horizon) continue;
    for (int s = 0; s < n; ++s)
      for (const Element value = ext.bracket_basis(component[s], src); const auto& [t, c] : value.terms())
        rows[{src, t}].first.emplace_back(s, c);
    for (const Element value = d.image(src); const auto& [t, c] : value.terms()) rows[{src, t}].second += c;
  }
  RatMatrix a(0, n);
  SparseVector rhs;
  for (auto& [key, row] : rows) {
    int r = a.append_row(std::move(row.first));
    if (row.second != 0) rhs.emplace_back(r, row.second);
  }
  LinearSolve sol = solve(a, rhs);
  if (!sol.solution)
    throw realization_error("map of weight " + std::to_string(k) + " is not ad of any element of " +
                            ext.name() + " on the window");
  Realization out;
  for (const auto& [s, c] : *sol.solution) out.y.add(component[s], c);
  out.unique = sol.unique();
  return out;
}

}  // namespace maxclass
