#pragma once

#include "maxclass/graded.hpp"

#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace maxclass {

// A weight-k linear map defined on the basis vectors whose degree lies in
// `domain`. Sources without a stored image map to zero.
class GradedMap {
 public:
  GradedMap(int weight, DegreeWindow domain);

  // e_i^j : e_i -> e_j on the given domain (slot 0 vectors).
  static GradedMap elementary(int from, int to, DegreeWindow domain);

  int weight() const { return weight_; }
  const DegreeWindow& domain() const { return domain_; }
  const std::map<BasisIndex, Element>& images() const { return images_; }

  // Adds `image` to the current image of `source`.
  void add_image(const BasisIndex& source, const Element& image);
  Element image(const BasisIndex& source) const;
  Element apply(const Element& x) const;

  GradedMap restricted(DegreeWindow window) const;
  GradedMap& operator+=(const GradedMap& other);
  GradedMap& operator*=(const Scalar& c);
  friend GradedMap operator+(GradedMap a, const GradedMap& b) { return a += b; }
  friend GradedMap operator*(const Scalar& c, GradedMap a) { return a *= c; }
  bool operator==(const GradedMap&) const = default;

 private:
  int weight_;
  DegreeWindow domain_;
  std::map<BasisIndex, Element> images_;
};

// A weight-k skew-symmetric bilinear map, stored on pairs a < b whose degree
// sum is at most `max_pair_degree`.
class BilinearForm {
 public:
  BilinearForm(int weight, int max_pair_degree);

  // e^{i,j}_k : (e_i, e_j) -> e_k, i < j.
  static BilinearForm elementary(int i, int j, int k, int max_pair_degree);

  int weight() const { return weight_; }
  int max_pair_degree() const { return max_pair_degree_; }
  const std::map<std::pair<BasisIndex, BasisIndex>, Element>& values() const { return values_; }

  // Adds to f(a,b); (b,a) is folded in with a sign. f(a,a) must stay zero.
  void add_value(BasisIndex a, BasisIndex b, Element value);
  Element value(const BasisIndex& a, const BasisIndex& b) const;
  Element eval(const Element& x, const Element& y) const;

  BilinearForm restricted(int max_pair_degree) const;
  BilinearForm& operator+=(const BilinearForm& other);
  BilinearForm& operator*=(const Scalar& c);
  friend BilinearForm operator+(BilinearForm a, const BilinearForm& b) { return a += b; }
  friend BilinearForm operator*(const Scalar& c, BilinearForm a) { return a *= c; }
  bool operator==(const BilinearForm&) const = default;

 private:
  int weight_;
  int max_pair_degree_;
  std::map<std::pair<BasisIndex, BasisIndex>, Element> values_;
};

// Coordinates for weight-k maps: one unknown per (source, target) basis pair
// with source degree in `sources` and target degree source+k inside
// [min_degree, target_max]. Ordered by (source degree, source slot, target slot).
class MapCoordinates {
 public:
  MapCoordinates(const AlgebraSpec& spec, int weight, DegreeWindow sources, int target_max);

  int size() const { return static_cast<int>(unknowns_.size()); }
  int weight() const { return weight_; }
  const DegreeWindow& sources() const { return sources_; }
  const std::vector<std::pair<BasisIndex, BasisIndex>>& unknowns() const { return unknowns_; }
  // Unknown ids for the image of `source`; empty if the target component is empty.
  const std::vector<int>& unknowns_of(const BasisIndex& source) const;

  // Images outside the catalog are dropped (projection onto the window).
  SparseVector to_vector(const GradedMap& map) const;
  GradedMap to_map(const SparseVector& v) const;
  Span to_span(const std::vector<GradedMap>& maps) const;
  std::vector<std::string> labels() const;

 private:
  int weight_;
  DegreeWindow sources_;
  int target_max_;
  std::vector<std::pair<BasisIndex, BasisIndex>> unknowns_;
  std::map<BasisIndex, std::vector<int>> by_source_;
  std::map<std::pair<BasisIndex, BasisIndex>, int> index_;
};

// Coordinates for weight-k skew forms: one unknown per (a, b, target) with
// a < b, deg a + deg b <= max_pair_degree, target degree inside
// [min_degree, target_max].
class PairCoordinates {
 public:
  PairCoordinates(const AlgebraSpec& spec, int weight, int max_pair_degree, int target_max);

  int size() const { return static_cast<int>(unknowns_.size()); }
  int max_pair_degree() const { return max_pair_degree_; }
  struct Unknown {
    BasisIndex a, b, target;
  };
  const std::vector<Unknown>& unknowns() const { return unknowns_; }
  const std::vector<int>& unknowns_of(const BasisIndex& a, const BasisIndex& b) const;

  SparseVector to_vector(const BilinearForm& form) const;
  BilinearForm to_form(const SparseVector& v) const;
  Span to_span(const std::vector<BilinearForm>& forms) const;

 private:
  int weight_;
  int max_pair_degree_;
  int target_max_;
  std::vector<Unknown> unknowns_;
  std::map<std::pair<BasisIndex, BasisIndex>, std::vector<int>> by_pair_;
  std::map<std::tuple<BasisIndex, BasisIndex, BasisIndex>, int> index_;
};

enum class SolveKind { derivation, biderivation, commuting, local_overapprox, two_local_overapprox };

std::string to_string(SolveKind kind);
SolveKind parse_kind(const std::string& text);

struct SolveReport {
  std::string algebra;
  SolveKind kind = SolveKind::derivation;
  int weight = 0;
  int horizon = 0;
  // Source degrees for map reports; for biderivations, lo..hi bounds the
  // degree sum of argument pairs.
  DegreeWindow window;
  int dimension = 0;
  std::vector<GradedMap> maps;
  std::vector<BilinearForm> forms;
  std::optional<bool> closed_form_match;
  std::optional<bool> stability;

  bool operator==(const SolveReport&) const = default;
};

// Basis of the report as vectors in its own window coordinates.
Span report_span(const AlgebraSpec& spec, const SolveReport& report);
// The same, projected onto a smaller window.
Span report_span(const AlgebraSpec& spec, const SolveReport& report, DegreeWindow window);

}  // namespace maxclass
