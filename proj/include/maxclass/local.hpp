#pragma once

#include "maxclass/derivations.hpp"

#include <utility>
#include <vector>

namespace maxclass {

// Test vectors for the membership constraints.
struct TestFamily {
  std::vector<Element> points;
  std::vector<std::pair<Element, Element>> pairs;
};

// span{B(x) : B in der_basis}
SubspaceReport value_space(const std::vector<GradedMap>& der_basis, const Element& x);

// Singletons e_i, sums e_a + e_b (a < b), and e1 + e2 + e_i for points;
// (e_a, e_b), (e_a + e_b, e_c) with c outside {a, b}, and (e1 + e2 + e_i, e1)
// for pairs. All indices lie in 1..min(bound, N - max(k,0)).
TestFamily default_family(const AlgebraSpec& spec, int weight, int horizon, int bound = 20);

// Weight-k maps D on the family's support with D(x) in span{B(x) : B in Der_k}
// for every point x. `der` must be a derivation report of the same weight
// whose window covers the family.
SolveReport local_overapprox(const AlgebraSpec& spec, int weight, int horizon,
                             const TestFamily& family, const SolveReport& der);

// Same, with (D(x), D(y)) in span{(B(x), B(y))} for every pair.
SolveReport two_local_overapprox(const AlgebraSpec& spec, int weight, int horizon,
                                 const TestFamily& family, const SolveReport& der);

struct OmegaParams {
  int q = 3;
  int m = 2;
  std::vector<Scalar> theta;  // theta_2 .. theta_m
  Scalar lambda;
};

// Three-branch nonlinear map on m0: a double sum weighted by theta when the
// e1 coefficient is nonzero, lambda * x when x is a multiple of e_q, zero
// otherwise.
Element omega_eval(const OmegaParams& p, const Element& x, int horizon);

// (W(e1+e2) - W(e1) - W(e2), W(e2+e_q) - W(e2) - W(e_q)) for W = omega_eval.
std::pair<Element, Element> omega_linearity_obstruction(const OmegaParams& p, int horizon);

}  // namespace maxclass
