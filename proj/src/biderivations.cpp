#include "maxclass/biderivations.hpp"

#include "symbolic.hpp"

#include <cstdlib>

namespace maxclass {

using detail::SymElement;

namespace {

SymElement sym_value(const PairCoordinates& coords, const BasisIndex& a, const BasisIndex& b) {
  if (a == b) return {};
  const Scalar sign = a < b ? 1 : -1;
  return detail::sym_unknowns(
      coords.unknowns_of(a, b), [&](int id) { return coords.unknowns()[id].target; }, sign);
}

// Calls fn(x, y, z) for basis x and y < z with every degree sum in range.
template <class Fn>
void for_each_triple(const AlgebraSpec& spec, int pair_bound, int weight, int horizon, Fn&& fn) {
  const auto basis = spec.basis(spec.min_degree(), std::min(pair_bound, horizon));
  for (const auto& x : basis) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const auto& y = basis[j];
      if (x.degree + y.degree > pair_bound) break;
      for (std::size_t l = j + 1; l < basis.size(); ++l) {
        const auto& z = basis[l];
        const int sum = x.degree + y.degree + z.degree;
        if (sum > pair_bound) break;
        if (sum + weight > horizon) continue;
        fn(x, y, z);
      }
    }
  }
}

Element left_defect(const AlgebraSpec& spec, const BilinearForm& f, const BasisIndex& x,
                    const BasisIndex& y, const BasisIndex& z) {
  const Element ex = Element::basis(x);
  Element out = f.eval(ex, spec.bracket_basis(y, z));
  out -= bracket(spec, f.value(x, y), Element::basis(z));
  out -= bracket(spec, Element::basis(y), f.value(x, z));
  return out;
}

Element right_defect(const AlgebraSpec& spec, const BilinearForm& f, const BasisIndex& x,
                     const BasisIndex& y, const BasisIndex& z) {
  Element out = f.eval(spec.bracket_basis(x, y), Element::basis(z));
  out -= bracket(spec, f.value(x, z), Element::basis(y));
  out -= bracket(spec, Element::basis(x), f.value(y, z));
  return out;
}

}  // namespace

int biderivation_pair_bound(int weight, int horizon) { return horizon - std::max(weight, 0); }

RatMatrix biderivation_system(const AlgebraSpec& spec, int weight, int horizon,
                              const PairCoordinates& coords, bool include_right) {
  std::vector<SparseVector> rows;
  const int bound = coords.max_pair_degree();
  for_each_triple(spec, bound, weight, horizon,
                  [&](const BasisIndex& x, const BasisIndex& y, const BasisIndex& z) {
                    SymElement acc;
                    for (const Element value = spec.bracket_basis(y, z); const auto& [t, c] : value.terms())
                      detail::add_scaled(acc, c, sym_value(coords, x, t));
                    detail::add_scaled(acc, -1, detail::bracket_left(spec, sym_value(coords, x, y), z));
                    detail::add_scaled(acc, -1, detail::bracket_right(spec, y, sym_value(coords, x, z)));
                    detail::append_rows(rows, acc);
                  });
  if (include_right) {
    // f([y,z],x) = [f(y,x),z] + [y,f(z,x)] for y < z
    for_each_triple(spec, bound, weight, horizon,
                    [&](const BasisIndex& x, const BasisIndex& y, const BasisIndex& z) {
                      SymElement acc;
                      for (const Element value = spec.bracket_basis(y, z); const auto& [t, c] : value.terms())
                        detail::add_scaled(acc, c, sym_value(coords, t, x));
                      detail::add_scaled(acc, -1,
                                         detail::bracket_left(spec, sym_value(coords, y, x), z));
                      detail::add_scaled(acc, -1,
                                         detail::bracket_right(spec, y, sym_value(coords, z, x)));
                      detail::append_rows(rows, acc);
                    });
  }
  RatMatrix m(0, coords.size());
  for (auto& r : rows) m.append_row(std::move(r));
  return m;
}

SolveReport biderivation_space(const AlgebraSpec& spec, int weight, int horizon,
                               bool include_right) {
  if (horizon > spec.horizon())
    throw horizon_error("solve horizon " + std::to_string(horizon) + " exceeds algebra horizon " +
                        std::to_string(spec.horizon()));
  if (horizon < 6 + std::abs(weight))
    throw std::invalid_argument("horizon " + std::to_string(horizon) +
                                " too small to constrain weight " + std::to_string(weight));
  PairCoordinates all(spec, weight, horizon, horizon);
  Span kernel = nullspace(biderivation_system(spec, weight, horizon, all, include_right));

  SolveReport report;
  report.algebra = spec.name();
  report.kind = SolveKind::biderivation;
  report.weight = weight;
  report.horizon = horizon;
  report.window = {1, biderivation_pair_bound(weight, horizon)};
  PairCoordinates win(spec, weight, report.window.hi, horizon);
  Span projected{win.size(), {}};
  for (const auto& v : kernel.vectors) projected.vectors.push_back(win.to_vector(all.to_form(v)));
  for (const auto& v : echelon(projected).vectors) report.forms.push_back(win.to_form(v));
  report.dimension = static_cast<int>(report.forms.size());
  return report;
}

std::vector<BilinearForm> closed_form_biderivations(const std::string& name, int weight,
                                                    int horizon) {
  if (!is_builtin_base(name))
    throw std::invalid_argument("no closed-form biderivations for '" + name + "'");
  const int bound = biderivation_pair_bound(weight, horizon);
  const int k = weight;
  std::vector<BilinearForm> out;
  BilinearForm f(k, bound);
  auto chain = [&](int first_arg, int from) {
    for (int i = from; first_arg + i <= bound; ++i)
      f.add_value({first_arg, 0}, {i, 0}, Element::basis(first_arg + i + k));
  };
  if (name == "m0" && k >= -1) {
    chain(1, 2);
    out.push_back(f);
  } else if (name == "m2" && k >= 0) {
    chain(1, 2);
    chain(2, 3);
    out.push_back(f);
  } else if (name == "l1" && k == 0) {
    for (int a = 1; 2 * a + 1 <= bound; ++a)
      for (int b = a + 1; a + b <= bound; ++b)
        f.add_value({a, 0}, {b, 0}, Element::basis(a + b, b - a));
    out.push_back(f);
  }
  return out;
}

std::optional<TripleWitness> is_biderivation(const AlgebraSpec& spec, const BilinearForm& f,
                                             int horizon) {
  std::optional<TripleWitness> witness;
  const int bound = f.max_pair_degree();
  for_each_triple(spec, bound, f.weight(), horizon,
                  [&](const BasisIndex& x, const BasisIndex& y, const BasisIndex& z) {
                    if (witness) return;
                    Element d = left_defect(spec, f, x, y, z);
                    if (!d.is_zero()) witness = TripleWitness{x, y, z, std::move(d), false};
                  });
  if (witness) return witness;
  for_each_triple(spec, bound, f.weight(), horizon,
                  [&](const BasisIndex& z, const BasisIndex& x, const BasisIndex& y) {
                    if (witness) return;
                    Element d = right_defect(spec, f, x, y, z);
                    if (!d.is_zero()) witness = TripleWitness{x, y, z, std::move(d), true};
                  });
  return witness;
}

BilinearForm inner_biderivation(const AlgebraSpec& spec, const Scalar& lambda, int horizon) {
  BilinearForm f(0, horizon);
  if (lambda == 0) return f;
  for (const auto& [key, value] : spec.table())
    if (key.first.degree + key.second.degree <= horizon)
      f.add_value(key.first, key.second, lambda * value);
  return f;
}

GradedMap curry_left(const AlgebraSpec& spec, const BilinearForm& f, const Element& x) {
  const int lo = spec.min_degree();
  if (x.is_zero()) return GradedMap(f.weight(), {lo, f.max_pair_degree()});
  auto deg = x.degree();
  if (!deg) throw std::invalid_argument("curry_left needs a homogeneous element");
  const int hi = f.max_pair_degree() - *deg;
  GradedMap m(f.weight() + *deg, {lo, hi});
  for (const auto& y : spec.basis(lo, std::min(hi, spec.horizon())))
    m.add_image(y, f.eval(x, Element::basis(y)));
  return m;
}

PhiOfF phi_of_f(const AlgebraSpec& base, const AlgebraSpec& ext, const BilinearForm& f,
                int horizon) {
  PhiOfF out;
  const int bound = f.max_pair_degree();
  // Each curried map is tested on at least e1 and e2.
  out.window = {1, bound - 2};
  for (const auto& e : base.basis(out.window.lo, out.window.hi)) {
    const int target = f.weight() + e.degree;
    GradedMap d = curry_left(base, f, Element::basis(e));
    if (target < ext.min_degree()) {
      if (!d.images().empty())
        throw realization_error("curried map at " + to_string(e) + " has no degree to land in");
      out.images[e] = Element{};
      continue;
    }
    Realization r = realize_in_extension(base, ext, d, horizon);
    out.unique = out.unique && r.unique;
    out.images[e] = std::move(r.y);
  }
  for (const auto& [x, px] : out.images) {
    for (const auto& [y, py] : out.images) {
      if (x.degree + y.degree > bound || x.degree + y.degree + f.weight() > horizon) continue;
      const Element value = f.value(x, y);
      if (bracket(ext, px, Element::basis(y)) != value ||
          -bracket(ext, py, Element::basis(x)) != value)
        out.reconstructs = false;
    }
  }
  return out;
}

}  // namespace maxclass
