#pragma once

// Elements whose coefficients are linear forms in solver unknowns. Used to
// assemble homogeneous constraint systems.

#include "maxclass/graded.hpp"

#include <map>
#include <vector>

namespace maxclass::detail {

using LinearCombination = std::map<int, Scalar>;
using SymElement = std::map<BasisIndex, LinearCombination>;

template <class TargetOf>
SymElement sym_unknowns(const std::vector<int>& ids, TargetOf target_of, const Scalar& scale = 1) {
  SymElement out;
  for (int id : ids) out[target_of(id)][id] += scale;
  return out;
}

inline void add_scaled(SymElement& acc, const Scalar& c, const SymElement& s) {
  if (c == 0) return;
  for (const auto& [idx, lin] : s) {
    auto& slot = acc[idx];
    for (const auto& [id, x] : lin) slot[id] += c * x;
  }
}

// [s, e_b]
inline SymElement bracket_left(const AlgebraSpec& spec, const SymElement& s, const BasisIndex& b) {
  SymElement out;
  for (const auto& [t, lin] : s) {
    Element br = spec.bracket_basis(t, b);
    for (const auto& [r, c] : br.terms()) {
      auto& slot = out[r];
      for (const auto& [id, x] : lin) slot[id] += c * x;
    }
  }
  return out;
}

// [e_a, s]
inline SymElement bracket_right(const AlgebraSpec& spec, const BasisIndex& a, const SymElement& s) {
  SymElement out;
  for (const auto& [t, lin] : s) {
    Element br = spec.bracket_basis(a, t);
    for (const auto& [r, c] : br.terms()) {
      auto& slot = out[r];
      for (const auto& [id, x] : lin) slot[id] += c * x;
    }
  }
  return out;
}

inline void append_rows(std::vector<SparseVector>& rows, const SymElement& s) {
  for (const auto& [idx, lin] : s) {
    SparseVector v;
    for (const auto& [id, x] : lin)
      if (x != 0) v.emplace_back(id, x);
    if (!v.empty()) rows.push_back(std::move(v));
  }
}

}  // namespace maxclass::detail
