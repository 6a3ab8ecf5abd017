#pragma once

#include "maxclass/commuting.hpp"
#include "maxclass/local.hpp"

#include <string>
#include <vector>

namespace maxclass {

// Stated dimensions for the built-in base algebras.
int expected_derivation_dim(const std::string& name, int weight);
int expected_biderivation_dim(const std::string& name, int weight);
int expected_commuting_dim(int weight);

// One solve of the given kind. Local kinds run a derivation solve first and
// use default_family(spec, k, N, family_bound).
SolveReport solve_kind(const AlgebraSpec& spec, SolveKind kind, int weight, int horizon,
                       int family_bound = 20);

// For m0, l1, m2: compares the report with the stated basis on its window
// (local kinds compare with the derivation space). nullopt for other algebras.
std::optional<bool> closed_form_check(const AlgebraSpec& spec, const SolveReport& report,
                                      int family_bound = 20);

// Re-solves at `larger` (<= spec.horizon()) and compares on the report's
// window. nullopt when `spec` does not reach `larger` or for local kinds.
std::optional<bool> stability_check(const AlgebraSpec& spec, const SolveReport& report,
                                    int larger);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOutcome {
  std::string algebra;
  std::vector<CheckResult> checks;
  std::vector<int> der_dims, bider_dims, commuting_dims;
  bool pass() const;
};

struct VerifyOptions {
  int weight_min = -8;
  int weight_max = 12;
  int horizon = 48;
  int stability_horizon = 56;
  int family_bound = 20;
};

// Full battery for one base algebra: structure checks for it and its
// extension, derivation/biderivation/commuting sweeps against the stated
// forms, extension realization, phi_f extraction, local and 2-local
// sandwiches, stability, and (for m0) the omega obstruction grid.
VerifyOutcome verify_algebra(const std::string& base, const VerifyOptions& options);

// The omega obstruction vanishes exactly at the zero parameter point over
// theta_j, lambda in {-1, 0, 1/2, 1}, m in {2, 3}, q in {3, 4, 5}.
CheckResult omega_grid_check(int horizon);

}  // namespace maxclass
