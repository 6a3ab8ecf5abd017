#include "maxclass/maps.hpp"

#include <algorithm>

namespace maxclass {

namespace {

void check_homogeneous(const Element& value, int degree, const char* what) {
  for (const auto& [idx, c] : value.terms())
    if (idx.degree != degree)
      throw std::invalid_argument(std::string(what) + ": term " + to_string(idx) +
                                  " is not in degree " + std::to_string(degree));
}

const std::vector<int> kNone;

}  // namespace

GradedMap::GradedMap(int weight, DegreeWindow domain) : weight_(weight), domain_(domain) {}

GradedMap GradedMap::elementary(int from, int to, DegreeWindow domain) {
  GradedMap m(to - from, domain);
  m.add_image({from, 0}, Element::basis(to));
  return m;
}

void GradedMap::add_image(const BasisIndex& source, const Element& image) {
  if (!domain_.contains(source.degree))
    throw std::out_of_range("source " + to_string(source) + " outside map domain");
  check_homogeneous(image, source.degree + weight_, "graded map image");
  Element& slot = images_[source];
  slot += image;
  if (slot.is_zero()) images_.erase(source);
}

Element GradedMap::image(const BasisIndex& source) const {
  if (!domain_.contains(source.degree))
    throw std::out_of_range("source " + to_string(source) + " outside map domain [" +
                            std::to_string(domain_.lo) + "," + std::to_string(domain_.hi) + "]");
  auto it = images_.find(source);
  return it == images_.end() ? Element{} : it->second;
}

Element GradedMap::apply(const Element& x) const {
  Element out;
  for (const auto& [idx, c] : x.terms()) out += c * image(idx);
  return out;
}

GradedMap GradedMap::restricted(DegreeWindow window) const {
  GradedMap out(weight_, window);
  for (const auto& [src, img] : images_)
    if (window.contains(src.degree)) out.images_.emplace(src, img);
  return out;
}

GradedMap& GradedMap::operator+=(const GradedMap& other) {
  if (other.weight_ != weight_ || other.domain_ != domain_)
    throw std::invalid_argument("adding graded maps with different weight or domain");
  for (const auto& [src, img] : other.images_) add_image(src, img);
  return *this;
}

GradedMap& GradedMap::operator*=(const Scalar& c) {
  if (c == 0) images_.clear();
  for (auto& entry : images_) entry.second *= c;
  return *this;
}

BilinearForm::BilinearForm(int weight, int max_pair_degree)
    : weight_(weight), max_pair_degree_(max_pair_degree) {}

BilinearForm BilinearForm::elementary(int i, int j, int k, int max_pair_degree) {
  BilinearForm f(k - i - j, max_pair_degree);
  f.add_value({i, 0}, {j, 0}, Element::basis(k));
  return f;
}

void BilinearForm::add_value(BasisIndex a, BasisIndex b, Element value) {
  if (a == b) {
    if (!value.is_zero()) throw std::invalid_argument("skew form must vanish on the diagonal");
    return;
  }
  if (a.degree + b.degree > max_pair_degree_)
    throw std::out_of_range("pair " + to_string(a) + "," + to_string(b) + " outside form window");
  if (b < a) {
    std::swap(a, b);
    value *= Scalar(-1);
  }
  check_homogeneous(value, a.degree + b.degree + weight_, "bilinear form value");
  Element& slot = values_[{a, b}];
  slot += value;
  if (slot.is_zero()) values_.erase({a, b});
}

Element BilinearForm::value(const BasisIndex& a, const BasisIndex& b) const {
  if (a.degree + b.degree > max_pair_degree_)
    throw std::out_of_range("pair " + to_string(a) + "," + to_string(b) + " outside form window");
  if (a == b) return {};
  if (a < b) {
    auto it = values_.find({a, b});
    return it == values_.end() ? Element{} : it->second;
  }
  auto it = values_.find({b, a});
  return it == values_.end() ? Element{} : -it->second;
}

Element BilinearForm::eval(const Element& x, const Element& y) const {
  Element out;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) out += (ca * cb) * value(a, b);
  return out;
}

BilinearForm BilinearForm::restricted(int max_pair_degree) const {
  BilinearForm out(weight_, max_pair_degree);
  for (const auto& [key, v] : values_)
    if (key.first.degree + key.second.degree <= max_pair_degree) out.values_.emplace(key, v);
  return out;
}

BilinearForm& BilinearForm::operator+=(const BilinearForm& other) {
  if (other.weight_ != weight_ || other.max_pair_degree_ != max_pair_degree_)
    throw std::invalid_argument("adding forms with different weight or window");
  for (const auto& [key, v] : other.values_) add_value(key.first, key.second, v);
  return *this;
}

BilinearForm& BilinearForm::operator*=(const Scalar& c) {
  if (c == 0) values_.clear();
  for (auto& entry : values_) entry.second *= c;
  return *this;
}

MapCoordinates::MapCoordinates(const AlgebraSpec& spec, int weight, DegreeWindow sources,
                               int target_max)
    : weight_(weight), sources_(sources), target_max_(target_max) {
  const int lo = spec.min_degree();
  const int hi = std::min(target_max, spec.horizon());
  for (const auto& src : spec.basis(sources.lo, sources.hi)) {
    const int t = src.degree + weight;
    if (t > hi) continue;
    auto& ids = by_source_[src];
    if (t < lo) continue;
    for (const auto& tgt : spec.basis_in_degree(t)) {
      ids.push_back(size());
      index_[{src, tgt}] = size();
      unknowns_.emplace_back(src, tgt);
    }
  }
}

const std::vector<int>& MapCoordinates::unknowns_of(const BasisIndex& source) const {
  auto it = by_source_.find(source);
  if (it == by_source_.end())
    throw horizon_error("map image of " + to_string(source) + " is outside the solve window");
  return it->second;
}

SparseVector MapCoordinates::to_vector(const GradedMap& map) const {
  if (map.weight() != weight_) throw std::invalid_argument("map weight does not match coordinates");
  SparseVector v;
  for (const auto& [src, img] : map.images()) {
    auto it = by_source_.find(src);
    if (it == by_source_.end()) continue;
    for (const auto& [tgt, c] : img.terms()) {
      auto jt = index_.find({src, tgt});
      if (jt != index_.end()) v.emplace_back(jt->second, c);
    }
  }
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

GradedMap MapCoordinates::to_map(const SparseVector& v) const {
  GradedMap m(weight_, sources_);
  for (const auto& [col, c] : v) {
    const auto& [src, tgt] = unknowns_.at(static_cast<std::size_t>(col));
    m.add_image(src, Element::basis(tgt, c));
  }
  return m;
}

Span MapCoordinates::to_span(const std::vector<GradedMap>& maps) const {
  Span s{size(), {}};
  for (const auto& m : maps) s.vectors.push_back(to_vector(m));
  return s;
}

std::vector<std::string> MapCoordinates::labels() const {
  std::vector<std::string> out;
  for (const auto& [src, tgt] : unknowns_) out.push_back(to_string(src) + "->" + to_string(tgt));
  return out;
}

PairCoordinates::PairCoordinates(const AlgebraSpec& spec, int weight, int max_pair_degree,
                                 int target_max)
    : weight_(weight), max_pair_degree_(max_pair_degree), target_max_(target_max) {
  const int lo = spec.min_degree();
  const int hi = std::min(target_max, spec.horizon());
  const auto basis = spec.basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const auto& a = basis[i];
      const auto& b = basis[j];
      if (a.degree + b.degree > max_pair_degree) break;
      const int t = a.degree + b.degree + weight;
      if (t > hi) continue;
      auto& ids = by_pair_[{a, b}];
      if (t < lo) continue;
      for (const auto& tgt : spec.basis_in_degree(t)) {
        ids.push_back(size());
        index_[{a, b, tgt}] = size();
        unknowns_.push_back({a, b, tgt});
      }
    }
  }
}

const std::vector<int>& PairCoordinates::unknowns_of(const BasisIndex& a, const BasisIndex& b) const {
  if (a == b) return kNone;
  auto it = by_pair_.find(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
  if (it == by_pair_.end())
    throw horizon_error("form value at " + to_string(a) + "," + to_string(b) +
                        " is outside the solve window");
  return it->second;
}

SparseVector PairCoordinates::to_vector(const BilinearForm& form) const {
  if (form.weight() != weight_) throw std::invalid_argument("form weight does not match coordinates");
  SparseVector v;
  for (const auto& [key, val] : form.values()) {
    for (const auto& [tgt, c] : val.terms()) {
      auto it = index_.find({key.first, key.second, tgt});
      if (it != index_.end()) v.emplace_back(it->second, c);
    }
  }
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

BilinearForm PairCoordinates::to_form(const SparseVector& v) const {
  BilinearForm f(weight_, max_pair_degree_);
  for (const auto& [col, c] : v) {
    const auto& u = unknowns_.at(static_cast<std::size_t>(col));
    f.add_value(u.a, u.b, Element::basis(u.target, c));
  }
  return f;
}

Span PairCoordinates::to_span(const std::vector<BilinearForm>& forms) const {
  Span s{size(), {}};
  for (const auto& f : forms) s.vectors.push_back(to_vector(f));
  return s;
}

std::string to_string(SolveKind kind) {
  switch (kind) {
    case SolveKind::derivation: return "derivation";
    case SolveKind::biderivation: return "biderivation";
    case SolveKind::commuting: return "commuting";
    case SolveKind::local_overapprox: return "local-overapprox";
    case SolveKind::two_local_overapprox: return "two-local-overapprox";
  }
  return "?";
}

SolveKind parse_kind(const std::string& text) {
  for (auto k : {SolveKind::derivation, SolveKind::biderivation, SolveKind::commuting,
                 SolveKind::local_overapprox, SolveKind::two_local_overapprox})
    if (to_string(k) == text) return k;
  throw std::invalid_argument("unknown report kind '" + text + "'");
}

Span report_span(const AlgebraSpec& spec, const SolveReport& report) {
  return report_span(spec, report, report.window);
}

Span report_span(const AlgebraSpec& spec, const SolveReport& report, DegreeWindow window) {
  if (report.kind == SolveKind::biderivation) {
    PairCoordinates coords(spec, report.weight, window.hi, report.horizon);
    return echelon(coords.to_span(report.forms));
  }
  MapCoordinates coords(spec, report.weight, window, report.horizon);
  return echelon(coords.to_span(report.maps));
}

}  // namespace maxclass
