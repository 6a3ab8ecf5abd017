#include "maxclass/commuting.hpp"

#include "symbolic.hpp"

#include <cstdlib>

namespace maxclass {

using detail::SymElement;

namespace {

template <class Fn>
void for_each_commuting_pair(const AlgebraSpec& spec, DegreeWindow domain, int weight, int horizon,
                             Fn&& fn) {
  const auto basis = spec.basis(domain.lo, std::min(domain.hi, horizon));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      const int sum = basis[i].degree + basis[j].degree;
      if (sum + std::max(weight, 0) > horizon) break;
      fn(basis[i], basis[j]);
    }
  }
}

Element polarized_defect(const AlgebraSpec& spec, const GradedMap& phi, const BasisIndex& a,
                         const BasisIndex& b) {
  return bracket(spec, phi.image(a), Element::basis(b)) +
         bracket(spec, phi.image(b), Element::basis(a));
}

}  // namespace

DegreeWindow commuting_window(int weight, int horizon) {
  return {1, horizon - std::max(weight, 0) - 1};
}

RatMatrix commuting_system(const AlgebraSpec& spec, int weight, int horizon,
                           const MapCoordinates& coords) {
  auto sym = [&](const BasisIndex& s) {
    return detail::sym_unknowns(coords.unknowns_of(s),
                                [&](int id) { return coords.unknowns()[id].second; });
  };
  std::vector<SparseVector> rows;
  for_each_commuting_pair(spec, {spec.min_degree(), horizon}, weight, horizon,
                          [&](const BasisIndex& a, const BasisIndex& b) {
                            SymElement acc = detail::bracket_left(spec, sym(a), b);
                            detail::add_scaled(acc, 1, detail::bracket_left(spec, sym(b), a));
                            detail::append_rows(rows, acc);
                          });
  RatMatrix m(0, coords.size());
  for (auto& r : rows) m.append_row(std::move(r));
  m.set_labels(coords.labels());
  return m;
}

SolveReport commuting_space(const AlgebraSpec& spec, int weight, int horizon) {
  if (horizon > spec.horizon())
    throw horizon_error("solve horizon " + std::to_string(horizon) + " exceeds algebra horizon " +
                        std::to_string(spec.horizon()));
  if (horizon < 4 + std::abs(weight))
    throw std::invalid_argument("horizon " + std::to_string(horizon) +
                                " too small to constrain weight " + std::to_string(weight));
  MapCoordinates all(spec, weight, {spec.min_degree(), horizon}, horizon);
  Span kernel = nullspace(commuting_system(spec, weight, horizon, all));

  SolveReport report;
  report.algebra = spec.name();
  report.kind = SolveKind::commuting;
  report.weight = weight;
  report.horizon = horizon;
  report.window = commuting_window(weight, horizon);
  MapCoordinates win(spec, weight, report.window, horizon);
  Span projected{win.size(), {}};
  for (const auto& v : kernel.vectors) projected.vectors.push_back(win.to_vector(all.to_map(v)));
  for (const auto& v : echelon(projected).vectors) report.maps.push_back(win.to_map(v));
  report.dimension = static_cast<int>(report.maps.size());
  return report;
}

std::optional<PairWitness> is_commuting(const AlgebraSpec& spec, const GradedMap& phi,
                                        int horizon) {
  std::optional<PairWitness> witness;
  for_each_commuting_pair(spec, phi.domain(), phi.weight(), horizon,
                          [&](const BasisIndex& a, const BasisIndex& b) {
                            if (witness) return;
                            Element d = polarized_defect(spec, phi, a, b);
                            if (!d.is_zero()) witness = PairWitness{a, b, std::move(d)};
                          });
  return witness;
}

BilinearForm biderivation_from_commuting(const AlgebraSpec& spec, const GradedMap& phi,
                                         int horizon) {
  if (auto w = is_commuting(spec, phi, horizon))
    throw std::invalid_argument("map is not commuting at " + to_string(w->a) + "," +
                                to_string(w->b));
  const DegreeWindow dom = phi.domain();
  const int bound = dom.hi + 1;
  BilinearForm f(phi.weight(), bound);
  const auto basis = spec.basis(dom.lo, std::min(dom.hi, horizon));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const auto& a = basis[i];
      const auto& b = basis[j];
      if (a.degree + b.degree > bound) break;
      if (a.degree + b.degree + phi.weight() > horizon) continue;
      Element ab = bracket(spec, Element::basis(a), phi.image(b));
      if (ab != -bracket(spec, Element::basis(b), phi.image(a)))
        throw std::invalid_argument("induced form is not skew at " + to_string(a) + "," +
                                    to_string(b));
      f.add_value(a, b, ab);
    }
  }
  if (auto w = is_biderivation(spec, f, horizon))
    throw std::invalid_argument("induced form is not a biderivation at " + to_string(w->x) + ";" +
                                to_string(w->y) + "," + to_string(w->z));
  return f;
}

}  // namespace maxclass
