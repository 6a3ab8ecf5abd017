#pragma once

#include "maxclass/derivations.hpp"

#include <map>
#include <optional>

namespace maxclass {

// Largest argument degree sum reported by a weight-k biderivation solve at horizon N.
int biderivation_pair_bound(int weight, int horizon);

// Left Leibniz rows f(x,[y,z]) = [f(x,y),z] + [y,f(x,z)] over basis triples
// with y < z and deg x + deg y + deg z + max(k,0) <= N. With
// `include_right`, the rows f([x,y],z) = [f(x,z),y] + [x,f(y,z)] are added.
RatMatrix biderivation_system(const AlgebraSpec& spec, int weight, int horizon,
                              const PairCoordinates& coords, bool include_right = false);

SolveReport biderivation_space(const AlgebraSpec& spec, int weight, int horizon,
                               bool include_right = false);

// Stated spanning forms of BDer_k for m0, l1, m2 on pairs with degree sum
// at most biderivation_pair_bound(k, N).
std::vector<BilinearForm> closed_form_biderivations(const std::string& name, int weight,
                                                    int horizon);

struct TripleWitness {
  BasisIndex x, y, z;
  Element defect;
  bool right = false;  // failed the right-argument rule
};

// Left then right Leibniz checks on every basis triple whose degree sum is
// within the form's pair bound and whose image fits the horizon.
std::optional<TripleWitness> is_biderivation(const AlgebraSpec& spec, const BilinearForm& f,
                                             int horizon);

// lambda * [x, y] on pairs with degree sum <= N.
BilinearForm inner_biderivation(const AlgebraSpec& spec, const Scalar& lambda, int horizon);

// y -> f(x, y) for homogeneous x, on degrees min..P-deg(x).
GradedMap curry_left(const AlgebraSpec& spec, const BilinearForm& f, const Element& x);

struct PhiOfF {
  DegreeWindow window;                    // base degrees with an extracted image
  std::map<BasisIndex, Element> images;   // e_d -> phi_f(e_d) in the extension
  bool unique = true;
  bool reconstructs = true;  // f(x,y) = [phi(x),y] = -[phi(y),x] on the window
};

// Extracts phi_f with f(x, y) = [phi_f(x), y]. Throws realization_error when
// some curried map is not inner in `ext`.
PhiOfF phi_of_f(const AlgebraSpec& base, const AlgebraSpec& ext, const BilinearForm& f,
                int horizon);

}  // namespace maxclass
