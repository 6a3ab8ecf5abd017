#include "maxclass/graded.hpp"

namespace maxclass {

namespace {

constexpr int kE = 0;  // slot of the embedded base vector e_d
constexpr int kX = 1;  // slot of the adjoined x_d

BasisIndex e(int d) { return {d, kE}; }
BasisIndex x(int d) { return {d, kX}; }

// Writes [a,b] = c * target unless the degrees leave the horizon.
void put(AlgebraSpec& spec, BasisIndex a, BasisIndex b, const Scalar& c, BasisIndex target) {
  if (a.degree + b.degree > spec.horizon()) return;
  spec.set_bracket(a, b, Element::basis(target, c));
}

std::vector<int> dims_from(int horizon, int from_degree) {
  std::vector<int> dims(static_cast<std::size_t>(horizon) + 1, 0);
  for (int d = from_degree; d <= horizon; ++d) dims[d] = 1;
  return dims;
}

AlgebraSpec make_m0(int n) {
  AlgebraSpec spec("m0", n, dims_from(n, 1));
  for (int i = 2; i + 1 <= n; ++i) put(spec, e(1), e(i), 1, e(i + 1));
  return spec;
}

AlgebraSpec make_witt(const std::string& name, int n, int from_degree) {
  AlgebraSpec spec(name, n, dims_from(n, from_degree));
  for (int i = from_degree; i <= n; ++i)
    for (int j = i + 1; i + j <= n; ++j) put(spec, e(i), e(j), j - i, e(i + j));
  return spec;
}

AlgebraSpec make_m2(int n) {
  AlgebraSpec spec("m2", n, dims_from(n, 1));
  for (int i = 2; i + 1 <= n; ++i) put(spec, e(1), e(i), 1, e(i + 1));
  for (int j = 3; j + 2 <= n; ++j) put(spec, e(2), e(j), 1, e(j + 2));
  return spec;
}

AlgebraSpec make_m0ext(int n) {
  std::vector<int> dims(static_cast<std::size_t>(n) + 1, 2);
  AlgebraSpec spec("m0ext", n, dims);
  const BasisIndex x01{0, 0};
  const BasisIndex x02{0, 1};
  for (int i = 2; i + 1 <= n; ++i) put(spec, e(1), e(i), 1, e(i + 1));
  put(spec, x01, x(1), -1, x(1));
  put(spec, x02, x(1), 1, x(1));
  put(spec, x01, e(1), 1, e(1));
  put(spec, x(1), e(1), -1, e(2));
  for (int k = 2; k <= n; ++k) {
    put(spec, x01, x(k), k, x(k));
    put(spec, x(1), x(k), -1, e(k + 1));
    put(spec, x01, e(k), k - 2, e(k));
    put(spec, x02, e(k), 1, e(k));
    for (int i = 2; i + k <= n; ++i) put(spec, x(k), e(i), 1, e(i + k));
  }
  return spec;
}

AlgebraSpec make_m2ext(int n) {
  std::vector<int> dims(static_cast<std::size_t>(n) + 1, 2);
  dims[0] = 1;
  dims[1] = 1;
  AlgebraSpec spec("m2ext", n, dims);
  const BasisIndex x0{0, 0};
  const Scalar half(1, 2);
  for (int i = 2; i + 1 <= n; ++i) put(spec, e(1), e(i), 1, e(i + 1));
  for (int j = 3; j + 2 <= n; ++j) put(spec, e(2), e(j), 1, e(j + 2));
  for (int m = 1; m <= n; ++m) put(spec, x0, e(m), m, e(m));
  for (int i = 2; i <= n; ++i) {
    put(spec, x0, x(i), i, x(i));
    put(spec, x(2), e(i), 1, e(i + 2));
  }
  for (int j = 3; j <= n; ++j) {
    put(spec, x(2), x(j), half, e(j + 2));
    put(spec, x(j), e(1), -half, e(j + 1));
    put(spec, x(j), e(2), half, e(j + 2));
  }
  for (int i = 2; i <= n; ++i)
    for (int j = 3; i + j <= n; ++j) put(spec, x(i), e(j), 1, e(i + j));
  return spec;
}

}  // namespace

AlgebraSpec builtin_algebra(const std::string& name, int horizon) {
  if (horizon < 4) throw std::invalid_argument("horizon must be at least 4");
  if (name == "m0") return make_m0(horizon);
  if (name == "l1") return make_witt("l1", horizon, 1);
  if (name == "m2") return make_m2(horizon);
  if (name == "m0ext") return make_m0ext(horizon);
  if (name == "m2ext") return make_m2ext(horizon);
  if (name == "l1ext") return make_witt("l1ext", horizon, 0);
  throw std::invalid_argument("unknown built-in algebra '" + name + "'");
}

bool is_builtin_base(const std::string& name) {
  return name == "m0" || name == "l1" || name == "m2";
}

std::string extension_name(const std::string& base) {
  if (!is_builtin_base(base)) throw std::invalid_argument("no extension for '" + base + "'");
  return base + "ext";
}

}  // namespace maxclass
