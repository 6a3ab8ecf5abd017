#pragma once

#include "maxclass/biderivations.hpp"

#include <optional>

namespace maxclass {

// Source degrees reported by a weight-k commuting solve: 1..N-max(k,0)-1.
DegreeWindow commuting_window(int weight, int horizon);

// [phi(e_a), e_b] + [phi(e_b), e_a] = 0 for basis a <= b with
// deg a + deg b + max(k,0) <= N.
RatMatrix commuting_system(const AlgebraSpec& spec, int weight, int horizon,
                           const MapCoordinates& coords);

SolveReport commuting_space(const AlgebraSpec& spec, int weight, int horizon);

struct PairWitness {
  BasisIndex a, b;
  Element defect;  // [phi(a), b] + [phi(b), a]
};

std::optional<PairWitness> is_commuting(const AlgebraSpec& spec, const GradedMap& phi, int horizon);

// (x, y) -> [x, phi(y)] on pairs inside phi's domain with degree sum at most
// domain.hi + 1. Throws std::invalid_argument if phi is not commuting or the
// result fails is_biderivation.
BilinearForm biderivation_from_commuting(const AlgebraSpec& spec, const GradedMap& phi,
                                         int horizon);

}  // namespace maxclass
