#include <doctest.h>

#include "maxclass/biderivations.hpp"
#include "oracle.hpp"

using namespace maxclass;

namespace {

Element e(int d, const Scalar& c = 1) { return Element::basis(d, c); }
Element b(int d, int s, const Scalar& c = 1) { return Element::basis(BasisIndex{d, s}, c); }

// sum_{i >= from} e^{first,i}_{first+i+k} on pairs with degree sum <= bound
BilinearForm chain(int first, int from, int k, int bound) {
  BilinearForm f(k, bound);
  for (int i = from; first + i <= bound; ++i) f.add_value({first, 0}, {i, 0}, e(first + i + k));
  return f;
}

bool same_span(const AlgebraSpec& spec, const SolveReport& r, const std::vector<BilinearForm>& forms) {
  PairCoordinates c(spec, r.weight, r.window.hi, r.horizon);
  return subspace_equal(report_span(spec, r), echelon(c.to_span(forms)));
}

}  // namespace

TEST_CASE("biderivation_space examples") {
  auto m0 = builtin_algebra("m0", 40);
  SolveReport r = biderivation_space(m0, -1, 40);
  CHECK(r.dimension == 1);
  CHECK(same_span(m0, r, {chain(1, 2, -1, 40)}));
  CHECK(biderivation_space(m0, -2, 40).dimension == 0);

  auto l1 = builtin_algebra("l1", 40);
  SolveReport l = biderivation_space(l1, 0, 40);
  CHECK(l.dimension == 1);
  BilinearForm bracket_form(0, 40);
  for (int i = 1; i <= 40; ++i)
    for (int j = i + 1; i + j <= 40; ++j) bracket_form.add_value({i, 0}, {j, 0}, e(i + j, j - i));
  CHECK(same_span(l1, l, {bracket_form}));
  CHECK(biderivation_space(l1, 3, 40).dimension == 0);

  auto m2 = builtin_algebra("m2", 40);
  SolveReport m = biderivation_space(m2, 1, 40);
  CHECK(m.dimension == 1);
  CHECK(same_span(m2, m, {chain(1, 2, 1, 39) + chain(2, 3, 1, 39)}));
}

TEST_CASE("biderivation_space preconditions") {
  auto m0 = builtin_algebra("m0", 20);
  CHECK_THROWS_AS(biderivation_space(m0, 15, 20), std::invalid_argument);
  CHECK_THROWS_AS(biderivation_space(m0, 0, 24), horizon_error);
}

TEST_CASE("closed_form_biderivations examples") {
  auto a = closed_form_biderivations("m0", 4, 20);
  REQUIRE(a.size() == 1);
  CHECK(a[0] == chain(1, 2, 4, 16));
  auto c = closed_form_biderivations("m2", 0, 20);
  REQUIRE(c.size() == 1);
  CHECK(c[0] == chain(1, 2, 0, 20) + chain(2, 3, 0, 20));
  CHECK(closed_form_biderivations("l1", 1, 20).empty());
  CHECK_THROWS_AS(closed_form_biderivations("x", 0, 20), std::invalid_argument);
}

TEST_CASE("is_biderivation examples") {
  auto m2 = builtin_algebra("m2", 20);
  CHECK_FALSE(is_biderivation(m2, inner_biderivation(m2, 2, 20), 20));
  auto m0 = builtin_algebra("m0", 20);
  auto w = is_biderivation(m0, BilinearForm::elementary(2, 3, 5, 20), 20);
  REQUIRE(w);
  CHECK_FALSE(w->defect.is_zero());
  CHECK_FALSE(is_biderivation(m0, BilinearForm(0, 20), 20));
}

TEST_CASE("inner_biderivation examples") {
  auto l1 = builtin_algebra("l1", 20);
  CHECK(inner_biderivation(l1, 0, 20).values().empty());
  CHECK(inner_biderivation(l1, 1, 20).value({2, 0}, {5, 0}) == e(7, 3));
  auto m0 = builtin_algebra("m0", 20);
  CHECK(inner_biderivation(m0, 1, 20).value({3, 0}, {4, 0}).is_zero());
  CHECK(inner_biderivation(m0, 1, 20).value({4, 0}, {1, 0}) == e(5, -1));
}

TEST_CASE("curry_left examples") {
  auto m0 = builtin_algebra("m0", 20);
  GradedMap c = curry_left(m0, inner_biderivation(m0, 1, 20), e(1));
  CHECK(c == ad(m0, e(1), 20));
  GradedMap d = curry_left(m0, chain(1, 2, -1, 20), e(1));
  GradedMap expected(0, {1, 19});
  for (int i = 2; i <= 19; ++i) expected.add_image({i, 0}, e(i));
  CHECK(d == expected);
  CHECK(curry_left(m0, chain(1, 2, -1, 20), Element{}).images().empty());
}

TEST_CASE("phi_of_f examples") {
  auto m0 = builtin_algebra("m0", 30), m0x = builtin_algebra("m0ext", 30);
  PhiOfF p = phi_of_f(m0, m0x, chain(1, 2, -1, 30), 30);
  CHECK(p.unique);
  CHECK(p.reconstructs);
  CHECK(p.images.at({1, 0}) == b(0, 1));
  CHECK(p.images.at({2, 0}) == b(1, 1));
  for (int i = 3; i <= p.window.hi; ++i) CHECK(p.images.at({i, 0}) == e(i - 1));

  auto l1 = builtin_algebra("l1", 30), l1x = builtin_algebra("l1ext", 30);
  PhiOfF q = phi_of_f(l1, l1x, inner_biderivation(l1, Scalar(3, 2), 30), 30);
  CHECK(q.unique);
  CHECK(q.reconstructs);
  for (const auto& [idx, y] : q.images) CHECK(y == Element::basis(idx, Scalar(3, 2)));

  PhiOfF z = phi_of_f(l1, l1x, BilinearForm(0, 30), 30);
  CHECK(z.unique);
  for (const auto& [idx, y] : z.images) CHECK(y.is_zero());
}

TEST_CASE("property: biderivation dimensions agree with a brute-force oracle") {
  for (const std::string name : {"m0", "l1", "m2"}) {
    auto spec = builtin_algebra(name, 22);
    for (int k = -4; k <= 6; ++k) {
      INFO(name << " k=" << k);
      CHECK(biderivation_space(spec, k, 22).dimension == oracle::biderivation_dim(name, k, 22));
    }
  }
}

TEST_CASE("property: right-Leibniz rows are redundant at N=16") {
  for (const std::string name : {"m0", "l1", "m2"}) {
    auto spec = builtin_algebra(name, 16);
    for (int k = -3; k <= 6; ++k) {
      INFO(name << " k=" << k);
      SolveReport left = biderivation_space(spec, k, 16);
      SolveReport both = biderivation_space(spec, k, 16, true);
      CHECK(subspace_equal(report_span(spec, left), report_span(spec, both)));
      for (const auto& f : left.forms) CHECK_FALSE(is_biderivation(spec, f, 16));
    }
  }
}

TEST_CASE("property: closed forms, curried maps and phi_f across weights at N=32") {
  for (const std::string name : {"m0", "l1", "m2"}) {
    auto spec = builtin_algebra(name, 40);
    auto ext = builtin_algebra(extension_name(name), 40);
    for (int k = -8; k <= 12; ++k) {
      INFO(name << " k=" << k);
      SolveReport r = biderivation_space(spec, k, 32);
      CHECK(same_span(spec, r, closed_form_biderivations(name, k, 32)));
      SolveReport big = biderivation_space(spec, k, 40);
      CHECK(subspace_equal(report_span(spec, big, r.window), report_span(spec, r)));
      for (const auto& f : r.forms) {
        for (int x = 1; x <= 6; ++x) {
          GradedMap c = curry_left(spec, f, e(x));
          CHECK_FALSE(is_derivation(spec, c, 32));
        }
        PhiOfF p = phi_of_f(spec, ext, f, 32);
        CHECK(p.unique);
        CHECK(p.reconstructs);
      }
    }
  }
}
