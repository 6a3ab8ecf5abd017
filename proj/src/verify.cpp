#include "maxclass/verify.hpp"

#include "maxclass/threads.hpp"

#include <sstream>

namespace maxclass {

namespace {

std::string join(const std::vector<int>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  return os.str();
}

bool is_local_kind(SolveKind kind) {
  return kind == SolveKind::local_overapprox || kind == SolveKind::two_local_overapprox;
}

GradedMap identity_map(DegreeWindow window) {
  GradedMap id(0, window);
  for (int d = window.lo; d <= window.hi; ++d) id.add_image({d, 0}, Element::basis(d));
  return id;
}

// Collects failures for one named check.
class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }
  void fail(const std::string& why) {
    if (result_.detail.empty()) result_.detail = why;
    ok_ = false;
  }
  CheckResult done(const std::string& detail_if_pass = "") {
    result_.pass = ok_;
    if (ok_) result_.detail = detail_if_pass;
    return result_;
  }

 private:
  CheckResult result_;
  bool ok_ = true;
};

std::string at_weight(int k) { return "k=" + std::to_string(k) + ": "; }

}  // namespace

int expected_derivation_dim(const std::string& name, int k) {
  if (k < 0) return 0;
  if (name == "m0") return 2;
  if (name == "l1") return 1;
  if (name == "m2") return k <= 1 ? 1 : 2;
  throw std::invalid_argument("no stated dimensions for '" + name + "'");
}

int expected_biderivation_dim(const std::string& name, int k) {
  if (name == "m0") return k >= -1 ? 1 : 0;
  if (name == "l1") return k == 0 ? 1 : 0;
  if (name == "m2") return k >= 0 ? 1 : 0;
  throw std::invalid_argument("no stated dimensions for '" + name + "'");
}

int expected_commuting_dim(int k) { return k == 0 ? 1 : 0; }

SolveReport solve_kind(const AlgebraSpec& spec, SolveKind kind, int weight, int horizon,
                       int family_bound) {
  switch (kind) {
    case SolveKind::derivation: return derivation_space(spec, weight, horizon);
    case SolveKind::biderivation: return biderivation_space(spec, weight, horizon);
    case SolveKind::commuting: return commuting_space(spec, weight, horizon);
    case SolveKind::local_overapprox:
    case SolveKind::two_local_overapprox: {
      SolveReport der = derivation_space(spec, weight, horizon);
      TestFamily fam = default_family(spec, weight, horizon, family_bound);
      return kind == SolveKind::local_overapprox
                 ? local_overapprox(spec, weight, horizon, fam, der)
                 : two_local_overapprox(spec, weight, horizon, fam, der);
    }
  }
  throw std::logic_error("unhandled solve kind");
}

std::optional<bool> closed_form_check(const AlgebraSpec& spec, const SolveReport& r,
                                      int /*family_bound*/) {
  if (!is_builtin_base(spec.name())) return std::nullopt;
  const int k = r.weight;
  if (r.kind == SolveKind::biderivation) {
    PairCoordinates coords(spec, k, r.window.hi, r.horizon);
    return subspace_equal(report_span(spec, r),
                          echelon(coords.to_span(closed_form_biderivations(spec.name(), k, r.horizon))));
  }
  MapCoordinates coords(spec, k, r.window, r.horizon);
  std::vector<GradedMap> stated;
  if (r.kind == SolveKind::commuting) {
    if (k == 0) stated.push_back(identity_map(r.window));
  } else {
    for (const auto& m : closed_form_derivations(spec.name(), k, r.horizon))
      stated.push_back(m.restricted(r.window));
  }
  return subspace_equal(report_span(spec, r), echelon(coords.to_span(stated)));
}

std::optional<bool> stability_check(const AlgebraSpec& spec, const SolveReport& r, int larger) {
  if (is_local_kind(r.kind) || spec.horizon() < larger) return std::nullopt;
  SolveReport big = solve_kind(spec, r.kind, r.weight, larger);
  return subspace_equal(report_span(spec, big, r.window), report_span(spec, r));
}

bool VerifyOutcome::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

CheckResult omega_grid_check(int horizon) {
  Check check("omega obstruction grid");
  const std::vector<Scalar> values{Scalar(-1), Scalar(0), Scalar(1, 2), Scalar(1)};
  int points = 0;
  for (int m = 2; m <= 3; ++m) {
    for (int q = 3; q <= 5; ++q) {
      const std::size_t n = static_cast<std::size_t>(m);  // theta entries plus lambda
      std::vector<std::size_t> digits(n, 0);
      while (true) {
        OmegaParams p;
        p.q = q;
        p.m = m;
        bool all_zero = true;
        for (std::size_t i = 0; i + 1 < n; ++i) {
          p.theta.push_back(values[digits[i]]);
          all_zero = all_zero && values[digits[i]] == 0;
        }
        p.lambda = values[digits[n - 1]];
        all_zero = all_zero && p.lambda == 0;
        auto [d1, d2] = omega_linearity_obstruction(p, horizon);
        const bool vanishes = d1.is_zero() && d2.is_zero();
        if (vanishes != all_zero)
          check.fail("m=" + std::to_string(m) + " q=" + std::to_string(q) + " lambda=" +
                     to_string(p.lambda) + (vanishes ? " vanishes" : " does not vanish"));
        ++points;
        std::size_t i = 0;
        while (i < n && ++digits[i] == values.size()) digits[i++] = 0;
        if (i == n) break;
      }
    }
  }
  return check.done(std::to_string(points) + " parameter points");
}

VerifyOutcome verify_algebra(const std::string& base, const VerifyOptions& o) {
  if (!is_builtin_base(base)) throw std::invalid_argument("verify needs m0, l1 or m2");
  const int N = o.horizon;
  const int big = std::max(o.stability_horizon, N);
  const AlgebraSpec spec = builtin_algebra(base, big);
  const AlgebraSpec ext = builtin_algebra(extension_name(base), big);
  const AlgebraSpec spec_n = spec.truncated(N);
  const AlgebraSpec ext_n = ext.truncated(N);

  VerifyOutcome out;
  out.algebra = base;
  std::vector<int> weights;
  for (int k = o.weight_min; k <= o.weight_max; ++k) weights.push_back(k);
  const std::size_t nw = weights.size();

  for (const AlgebraSpec* s : {&spec_n, &ext_n}) {
    Check c("jacobi " + s->name());
    JacobiReport j = jacobi_check(*s);
    if (!j.pass)
      c.fail("triple " + to_string(j.triple[0]) + "," + to_string(j.triple[1]) + "," +
             to_string(j.triple[2]) + " defect " + to_string(j.defect));
    out.checks.push_back(c.done("N=" + std::to_string(N)));
  }
  {
    Check c("center " + base);
    SubspaceReport r = center(spec_n);
    if (r.dimension != 0) c.fail("dimension " + std::to_string(r.dimension));
    out.checks.push_back(c.done("window [" + std::to_string(r.window.lo) + "," +
                                std::to_string(r.window.hi) + "] dim 0"));
    Check a("annihilator " + base + " in " + ext.name());
    SubspaceReport ar = annihilator(ext_n, is_ideal_index);
    if (ar.dimension != 0) a.fail("dimension " + std::to_string(ar.dimension));
    out.checks.push_back(a.done("window [" + std::to_string(ar.window.lo) + "," +
                                std::to_string(ar.window.hi) + "] dim 0"));
  }

  auto sweep = [&](SolveKind kind) {
    return parallel_indexed<SolveReport>(nw, [&](std::size_t i) {
      SolveReport r = solve_kind(spec, kind, weights[i], N, o.family_bound);
      r.closed_form_match = closed_form_check(spec, r, o.family_bound);
      r.stability = stability_check(spec, r, big);
      return r;
    });
  };
  const auto ders = sweep(SolveKind::derivation);
  const auto biders = sweep(SolveKind::biderivation);
  const auto comms = sweep(SolveKind::commuting);

  auto sweep_check = [&](const std::string& what, const std::vector<SolveReport>& reports,
                         auto expected, std::vector<int>& dims) {
    Check c(what + " " + base);
    for (std::size_t i = 0; i < nw; ++i) {
      const auto& r = reports[i];
      dims.push_back(r.dimension);
      if (r.dimension != expected(weights[i]))
        c.fail(at_weight(weights[i]) + "dimension " + std::to_string(r.dimension) + ", expected " +
               std::to_string(expected(weights[i])));
      if (r.closed_form_match != true) c.fail(at_weight(weights[i]) + "basis differs from stated form");
    }
    out.checks.push_back(c.done("dims " + join(dims)));
    Check s(what + " stability " + base);
    for (std::size_t i = 0; i < nw; ++i)
      if (reports[i].stability != true)
        s.fail(at_weight(weights[i]) + "differs at N=" + std::to_string(big));
    out.checks.push_back(s.done("N=" + std::to_string(N) + " vs N=" + std::to_string(big)));
  };
  sweep_check("derivations", ders, [&](int k) { return expected_derivation_dim(base, k); },
              out.der_dims);
  sweep_check("biderivations", biders, [&](int k) { return expected_biderivation_dim(base, k); },
              out.bider_dims);
  sweep_check("commuting", comms, expected_commuting_dim, out.commuting_dims);

  {
    Check c("inner biderivations " + base);
    for (std::size_t i = 0; i < nw; ++i) {
      if (weights[i] != 0) continue;
      const auto& r = biders[i];
      PairCoordinates coords(spec, 0, r.window.hi, N);
      Span inner = echelon(coords.to_span({inner_biderivation(spec, 1, r.window.hi)}));
      if (!subspace_equal(report_span(spec, r), inner)) c.fail("BDer_0 differs from span of the bracket");
    }
    out.checks.push_back(c.done());
  }
  {
    Check c("commuting to biderivation " + base);
    for (std::size_t i = 0; i < nw; ++i) {
      for (const auto& phi : comms[i].maps) {
        BilinearForm f = biderivation_from_commuting(spec, phi, N);
        PairCoordinates coords(spec, weights[i], f.max_pair_degree(), N);
        Span bspan = report_span(spec, biders[i], {1, f.max_pair_degree()});
        if (!subspace_contains(bspan, coords.to_span({f})))
          c.fail(at_weight(weights[i]) + "induced form outside BDer_k");
      }
    }
    out.checks.push_back(c.done());
  }
  {
    Check c("extension realization " + base);
    for (std::size_t i = 0; i < nw; ++i) {
      const int k = weights[i];
      std::vector<Element> ys;
      for (const auto& d : ders[i].maps) {
        try {
          Realization r = realize_in_extension(spec, ext, d, N);
          if (!r.unique) c.fail(at_weight(k) + "realization not unique");
          ys.push_back(r.y);
        } catch (const realization_error& e) {
          c.fail(at_weight(k) + e.what());
        }
      }
      const int comp = (k >= 0 && k <= ext.horizon()) ? ext.component_dim(k) : 0;
      if (static_cast<int>(echelonize(ys).size()) != comp)
        c.fail(at_weight(k) + "realized elements do not span the degree-" + std::to_string(k) +
               " component of " + ext.name());
    }
    out.checks.push_back(c.done());
  }
  {
    Check c("phi_f extraction " + base);
    for (std::size_t i = 0; i < nw; ++i) {
      const int k = weights[i];
      for (const auto& f : biders[i].forms) {
        try {
          PhiOfF phi = phi_of_f(spec, ext, f, N);
          if (!phi.unique) c.fail(at_weight(k) + "phi_f not unique");
          if (!phi.reconstructs) c.fail(at_weight(k) + "[phi_f(x), y] does not reproduce f");
          if (base == "m0" && k == -1) {
            const Scalar beta = f.value({1, 0}, {2, 0}).coeff({2, 0});
            if (beta == 0) c.fail("k=-1: f(e1,e2) has no e2 term");
            for (const auto& [e, y] : phi.images) {
              Element want = e.degree == 1   ? Element::basis({0, 1}, beta)
                             : e.degree == 2 ? Element::basis({1, 1}, beta)
                                             : Element::basis({e.degree - 1, 0}, beta);
              if (y != want) c.fail("k=-1: phi_f(" + to_string(e) + ") = " + to_string(y));
            }
          }
        } catch (const realization_error& e) {
          c.fail(at_weight(k) + e.what());
        }
      }
    }
    out.checks.push_back(c.done());
  }
  {
    Check c("local sandwich " + base);
    Check c2("2-local sandwich " + base);
    struct Pair {
      std::optional<bool> local, two;
    };
    auto results = parallel_indexed<Pair>(nw, [&](std::size_t i) {
      Pair p;
      const auto& der = ders[i];
      if (der.dimension == 0) return p;
      const int k = weights[i];
      TestFamily fam = default_family(spec, k, N, o.family_bound);
      SolveReport loc = local_overapprox(spec, k, N, fam, der);
      SolveReport two = two_local_overapprox(spec, k, N, fam, der);
      Span d = report_span(spec, der, loc.window);
      p.local = subspace_equal(report_span(spec, loc), d);
      p.two = subspace_equal(report_span(spec, two), d);
      return p;
    });
    for (std::size_t i = 0; i < nw; ++i) {
      if (results[i].local == false) c.fail(at_weight(weights[i]) + "overapproximation exceeds Der_k");
      if (results[i].two == false) c2.fail(at_weight(weights[i]) + "overapproximation exceeds Der_k");
    }
    out.checks.push_back(c.done());
    out.checks.push_back(c2.done());
  }
  if (base == "m0") out.checks.push_back(omega_grid_check(N));
  return out;
}

}  // namespace maxclass
