#pragma once

#include "maxclass/maps.hpp"

#include <optional>
#include <stdexcept>

namespace maxclass {

// Source degrees on which a weight-k derivation solve at horizon N is
// reported: 1..N-max(k,0).
DegreeWindow derivation_window(int weight, int horizon);

// Leibniz constraints D([a,b]) = [D a, b] + [a, D b] over every basis pair
// a < b with deg a + deg b + max(k,0) <= N. Columns follow `coords`.
RatMatrix derivation_system(const AlgebraSpec& spec, int weight, int horizon,
                            const MapCoordinates& coords);

// Der_k(spec) at truncation N, projected onto derivation_window(k, N).
SolveReport derivation_space(const AlgebraSpec& spec, int weight, int horizon);

// Stated bases of Der_k for m0, l1, m2 on derivation_window(k, N).
std::vector<GradedMap> closed_form_derivations(const std::string& name, int weight, int horizon);

struct LeibnizWitness {
  BasisIndex a, b;
  Element defect;  // D([a,b]) - [D a, b] - [a, D b]
};

// Checks the Leibniz rule on every pair a < b inside D's domain whose
// bracket also lies in the domain; returns the first failing pair.
std::optional<LeibnizWitness> is_derivation(const AlgebraSpec& spec, const GradedMap& d, int horizon);

// ad x on the basis vectors of degree min..N-deg(x). ad 0 is the zero map of weight 0.
GradedMap ad(const AlgebraSpec& spec, const Element& x, int horizon);
// ad y for y in an extension, restricted to the embedded base algebra (e_d, d >= 1).
GradedMap ad_on_ideal(const AlgebraSpec& ext, const Element& y, int horizon);

struct Propagation {
  std::optional<GradedMap> map;
  std::optional<LeibnizWitness> witness;
  bool consistent() const { return map.has_value(); }
};

// Builds D from D(e1) = v1, D(e2) = v2 via the defining relation of the
// algebra (m0, l1 or m2), then checks every in-window Leibniz constraint.
Propagation propagate_from_generators(const AlgebraSpec& spec, int weight, const Element& v1,
                                      const Element& v2, int horizon);

// All consistent propagations, as a span in derivation_window coordinates.
// Independent of derivation_space; used to cross-check it.
Span propagated_derivation_span(const AlgebraSpec& spec, int weight, int horizon);

class realization_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Realization {
  Element y;
  bool unique = false;
};

// Solves ad(y)|window = D for y in the degree-k component of `ext`.
// Throws realization_error when no such y exists.
Realization realize_in_extension(const AlgebraSpec& base, const AlgebraSpec& ext,
                                 const GradedMap& d, int horizon);

}  // namespace maxclass
