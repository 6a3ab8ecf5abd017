#include <doctest.h>

#include "maxclass/derivations.hpp"
#include "oracle.hpp"

using namespace maxclass;

namespace {

Element e(int d, const Scalar& c = 1) { return Element::basis(d, c); }
Element b(int d, int s, const Scalar& c = 1) { return Element::basis(BasisIndex{d, s}, c); }

// sum_{i=from}^{hi} coeff(i) e^{i+k}_i written out by hand.
template <class F>
GradedMap diagonal(int k, DegreeWindow w, int from, F coeff) {
  GradedMap m(k, w);
  for (int i = from; i <= w.hi; ++i)
    if (coeff(i) != 0) m.add_image({i, 0}, e(i + k, coeff(i)));
  return m;
}

bool same_span(const AlgebraSpec& spec, const SolveReport& r, const std::vector<GradedMap>& maps) {
  MapCoordinates c(spec, r.weight, r.window, r.horizon);
  return subspace_equal(report_span(spec, r), echelon(c.to_span(maps)));
}

}  // namespace

TEST_CASE("derivation_space examples") {
  auto m0 = builtin_algebra("m0", 40);
  SolveReport r = derivation_space(m0, 0, 40);
  CHECK(r.dimension == 2);
  CHECK(r.window == DegreeWindow{1, 40});
  CHECK(same_span(m0, r, {diagonal(0, r.window, 2, [](int) { return Scalar(1); }),
                          diagonal(0, r.window, 1, [](int i) { return Scalar(i == 1 ? 1 : i == 2 ? 0 : i - 2); })}));
  CHECK(derivation_space(m0, -3, 40).dimension == 0);

  auto l1 = builtin_algebra("l1", 40);
  SolveReport l = derivation_space(l1, 2, 40);
  CHECK(l.dimension == 1);
  CHECK(l.window == DegreeWindow{1, 38});
  CHECK(same_span(l1, l, {diagonal(2, l.window, 1, [](int i) { return Scalar(i - 2); })}));

  auto m2 = builtin_algebra("m2", 40);
  SolveReport m = derivation_space(m2, 2, 40);
  CHECK(m.dimension == 2);
  GradedMap second = diagonal(2, m.window, 3, [](int) { return Scalar(-1); });
  second.add_image({1, 0}, e(3));
  CHECK(same_span(m2, m, {diagonal(2, m.window, 2, [](int) { return Scalar(1); }), second}));
}

TEST_CASE("derivation_space preconditions") {
  auto m0 = builtin_algebra("m0", 20);
  CHECK_THROWS_AS(derivation_space(m0, 17, 20), std::invalid_argument);
  CHECK_THROWS_AS(derivation_space(m0, 0, 21), horizon_error);
  CHECK_NOTHROW(derivation_space(m0, 16, 20));
}

TEST_CASE("derivation system columns are labelled") {
  auto m0 = builtin_algebra("m0", 10);
  MapCoordinates coords(m0, 1, {1, 10}, 10);
  RatMatrix a = derivation_system(m0, 1, 10, coords);
  CHECK(a.cols() == coords.size());
  CHECK(a.labels().front() == "e1->e2");
}

TEST_CASE("closed_form_derivations examples") {
  auto f = closed_form_derivations("m0", 3, 20);
  REQUIRE(f.size() == 2);
  CHECK(f[0] == GradedMap::elementary(1, 4, {1, 17}));
  CHECK(f[1] == diagonal(3, {1, 17}, 2, [](int) { return Scalar(1); }));

  auto g = closed_form_derivations("m2", 5, 20);
  REQUIRE(g.size() == 2);
  GradedMap first(5, {1, 15});
  first.add_image({1, 0}, e(6));
  first.add_image({2, 0}, e(7));
  CHECK(g[0] == first);
  GradedMap second = diagonal(5, {1, 15}, 3, [](int) { return Scalar(1); });
  second.add_image({1, 0}, e(6, Scalar(-1, 2)));
  second.add_image({2, 0}, e(7, Scalar(1, 2)));
  CHECK(g[1] == second);

  CHECK(closed_form_derivations("l1", -1, 20).empty());
  CHECK_THROWS_AS(closed_form_derivations("m0ext", 0, 20), std::invalid_argument);
}

TEST_CASE("is_derivation examples") {
  auto l1 = builtin_algebra("l1", 20);
  CHECK_FALSE(is_derivation(l1, ad(l1, e(2), 20), 20));
  auto m0 = builtin_algebra("m0", 20);
  CHECK_FALSE(is_derivation(m0, GradedMap::elementary(1, 2, {1, 19}), 20));
  auto w = is_derivation(m0, GradedMap::elementary(2, 3, {1, 19}), 20);
  REQUIRE(w);
  CHECK(w->a == BasisIndex{1, 0});
  CHECK(w->b == BasisIndex{2, 0});
  CHECK(w->defect == e(4, -1));
}

TEST_CASE("ad examples") {
  auto l1x = builtin_algebra("l1ext", 20);
  CHECK(ad_on_ideal(l1x, e(0), 20) == diagonal(0, {1, 20}, 1, [](int i) { return Scalar(i); }));
  auto m0x = builtin_algebra("m0ext", 20);
  CHECK(ad_on_ideal(m0x, b(0, 1), 20) == diagonal(0, {1, 20}, 2, [](int) { return Scalar(1); }));
  auto m0 = builtin_algebra("m0", 20);
  GradedMap zero = ad(m0, Element{}, 20);
  CHECK(zero.images().empty());
  CHECK_THROWS_AS(ad(m0, e(1) + e(2), 20), std::invalid_argument);
}

TEST_CASE("propagation examples") {
  auto m0 = builtin_algebra("m0", 30);
  Propagation p = propagate_from_generators(m0, 0, e(1), {}, 30);
  REQUIRE(p.consistent());
  CHECK(*p.map == diagonal(0, {1, 30}, 1, [](int i) { return Scalar(i == 1 ? 1 : i == 2 ? 0 : i - 2); }));
  Propagation q = propagate_from_generators(m0, 1, e(2), {}, 30);
  REQUIRE(q.consistent());
  CHECK(*q.map == GradedMap::elementary(1, 2, {1, 29}));

  auto m2 = builtin_algebra("m2", 30);
  Propagation bad = propagate_from_generators(m2, -1, {}, e(1), 30);
  CHECK_FALSE(bad.consistent());
  CHECK(bad.witness);
  CHECK_THROWS_AS(propagate_from_generators(m2, -1, e(1), {}, 30), std::invalid_argument);

  auto l1 = builtin_algebra("l1", 30);
  Propagation w = propagate_from_generators(l1, 1, Element{}, e(3), 30);
  REQUIRE(w.consistent());
  CHECK(*w.map == diagonal(1, {1, 29}, 1, [](int i) { return Scalar(i - 1); }));
}

TEST_CASE("realize_in_extension examples") {
  auto m0 = builtin_algebra("m0", 30), m0x = builtin_algebra("m0ext", 30);
  Realization r = realize_in_extension(m0, m0x, diagonal(0, {1, 30}, 2, [](int) { return Scalar(1); }), 30);
  CHECK(r.y == b(0, 1));
  CHECK(r.unique);

  auto m2 = builtin_algebra("m2", 30), m2x = builtin_algebra("m2ext", 30);
  Realization s = realize_in_extension(m2, m2x, diagonal(0, {1, 30}, 1, [](int i) { return Scalar(i); }), 30);
  CHECK(s.y == b(0, 0));
  CHECK(s.unique);

  auto l1 = builtin_algebra("l1", 30), l1x = builtin_algebra("l1ext", 30);
  Realization t = realize_in_extension(l1, l1x, ad(l1, e(3), 30), 30);
  CHECK(t.y == e(3));
  CHECK(t.unique);

  // e^3_2 alone is not a derivation of m0, hence not inner in m0ext.
  CHECK_THROWS_AS(realize_in_extension(m0, m0x, GradedMap::elementary(2, 3, {1, 29}), 30),
                  realization_error);
}

TEST_CASE("property: derivation dimensions agree with a brute-force oracle") {
  for (const std::string name : {"m0", "l1", "m2"}) {
    auto spec = builtin_algebra(name, 24);
    for (int k = -4; k <= 8; ++k) {
      INFO(name << " k=" << k);
      CHECK(derivation_space(spec, k, 24).dimension == oracle::derivation_dim(name, k, 24));
    }
  }
}

TEST_CASE("property: closed forms, stability and propagation agree with the nullspace") {
  for (const std::string name : {"m0", "l1", "m2"}) {
    auto spec = builtin_algebra(name, 40);
    for (int k = -8; k <= 12; ++k) {
      for (int n : {32}) {
        INFO(name << " k=" << k << " N=" << n);
        SolveReport r = derivation_space(spec, k, n);
        CHECK(same_span(spec, r, closed_form_derivations(name, k, n)));
        SolveReport big = derivation_space(spec, k, n + 8);
        CHECK(subspace_equal(report_span(spec, big, r.window), report_span(spec, r)));
        CHECK(subspace_equal(propagated_derivation_span(spec, k, n), report_span(spec, r)));
      }
    }
  }
}

TEST_CASE("property: ad of random elements passes is_derivation") {
  oracle::RandomQ gen(17);
  for (const std::string name : {"m0", "l1", "m2", "m0ext", "m2ext", "l1ext"}) {
    auto spec = builtin_algebra(name, 24);
    for (int trial = 0; trial < 20; ++trial) {
      const int d = gen.uniform(spec.min_degree(), 6);
      Element x;
      for (const auto& idx : spec.basis_in_degree(d)) x.add(idx, gen.next());
      if (x.is_zero()) x.add(spec.basis_in_degree(d).front(), 1);
      INFO(name << " x=" << to_string(x));
      CHECK_FALSE(is_derivation(spec, ad(spec, x, 24), 24));
    }
  }
}

TEST_CASE("property: realization is unique and spans the extension component") {
  for (const std::string name : {"m0", "l1", "m2"}) {
    auto spec = builtin_algebra(name, 32);
    auto ext = builtin_algebra(extension_name(name), 32);
    CHECK(annihilator(ext, is_ideal_index).dimension == 0);
    for (int k = -2; k <= 8; ++k) {
      std::vector<Element> ys;
      for (const auto& d : derivation_space(spec, k, 32).maps) {
        Realization r = realize_in_extension(spec, ext, d, 32);
        CHECK(r.unique);
        CHECK(ad_on_ideal(ext, r.y, 32).restricted(d.domain()) == d);
        ys.push_back(r.y);
      }
      CHECK(static_cast<int>(echelonize(ys).size()) == (k >= 0 ? ext.component_dim(k) : 0));
    }
  }
}
