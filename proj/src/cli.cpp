#include "maxclass/cli.hpp"

#include "maxclass/threads.hpp"
#include "maxclass/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace maxclass {

using Json = nlohmann::ordered_json;

namespace {

constexpr int kStabilityMargin = 8;

struct Loaded {
  AlgebraSpec spec;  // may extend past the solve horizon for stability re-runs
  int horizon;
};

Loaded load(const RunConfig& c) {
  if (!c.file.empty()) {
    std::ifstream in(c.file);
    if (!in) throw usage_error("cannot read algebra file '" + c.file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    AlgebraSpec spec = [&] {
      try {
        return parse_algebra_file(buf.str());
      } catch (const parse_error& e) {
        throw usage_error(c.file + ":" + std::to_string(e.line()) + ": " + e.what());
      }
    }();
    const int n = c.horizon.value_or(spec.horizon());
    if (n > spec.horizon())
      throw usage_error("horizon " + std::to_string(n) + " exceeds the file's horizon " +
                        std::to_string(spec.horizon()));
    return {std::move(spec), n};
  }
  const int n = c.horizon.value_or(48);
  try {
    return {builtin_algebra(c.algebra, n + kStabilityMargin), n};
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }
}

SolveKind kind_of(Command c) {
  switch (c) {
    case Command::der: return SolveKind::derivation;
    case Command::bider: return SolveKind::biderivation;
    case Command::commuting: return SolveKind::commuting;
    case Command::local: return SolveKind::local_overapprox;
    case Command::two_local: return SolveKind::two_local_overapprox;
    default: throw std::logic_error("not a solve command");
  }
}

std::string triple_text(const std::array<BasisIndex, 3>& t) {
  return "(" + to_string(t[0]) + ", " + to_string(t[1]) + ", " + to_string(t[2]) + ")";
}

int run_solves(const RunConfig& c, const Loaded& l, std::ostream& out) {
  const SolveKind kind = kind_of(c.command);
  const int margin = kind == SolveKind::biderivation ? 6 : 4;
  for (int k = c.weight_min; k <= c.weight_max; ++k)
    if (l.horizon < margin + std::abs(k))
      throw usage_error("horizon " + std::to_string(l.horizon) + " too small for weight " +
                        std::to_string(k));
  const std::size_t n = static_cast<std::size_t>(c.weight_max - c.weight_min + 1);
  auto reports = parallel_indexed<SolveReport>(n, [&](std::size_t i) {
    const int k = c.weight_min + static_cast<int>(i);
    SolveReport r = solve_kind(l.spec, kind, k, l.horizon, c.family_bound);
    r.closed_form_match = closed_form_check(l.spec, r, c.family_bound);
    r.stability = stability_check(l.spec, r, l.horizon + kStabilityMargin);
    return r;
  });
  int status = 0;
  for (const auto& r : reports) {
    const bool bad = r.closed_form_match == false || r.stability == false;
    if (bad) status = 1;
    out << write_report(r, c.format);
    if (bad && c.format == ReportFormat::text) out << "\n  MISMATCH";
    out << '\n';
  }
  return status;
}

int run_jacobi(const RunConfig& c, const Loaded& l, std::ostream& out) {
  const AlgebraSpec spec = l.spec.truncated(l.horizon);
  JacobiReport j = jacobi_check(spec);
  if (c.format == ReportFormat::machine) {
    Json rec = {{"algebra", spec.name()}, {"kind", "jacobi"}, {"horizon", l.horizon}, {"pass", j.pass}};
    if (!j.pass) {
      Json triple = Json::array();
      for (const auto& t : j.triple) triple.push_back(Json::array({t.degree, t.slot}));
      rec["triple"] = triple;
      rec["defect"] = to_string(j.defect);
    }
    out << rec.dump() << '\n';
  } else if (j.pass) {
    out << "jacobi " << spec.name() << " N=" << l.horizon << ": pass\n";
  } else {
    out << "jacobi " << spec.name() << " N=" << l.horizon << ": FAIL at " << triple_text(j.triple)
        << " defect " << to_string(j.defect) << '\n';
  }
  return j.pass ? 0 : 1;
}

int run_center(const RunConfig& c, const Loaded& l, std::ostream& out) {
  const AlgebraSpec spec = l.spec.truncated(l.horizon);
  SubspaceReport r = center(spec);
  const bool builtin = c.file.empty();
  if (c.format == ReportFormat::machine) {
    Json basis = Json::array();
    for (const auto& x : r.basis) basis.push_back(to_string(x));
    out << Json{{"algebra", spec.name()},
                {"kind", "center"},
                {"horizon", l.horizon},
                {"window", Json::array({r.window.lo, r.window.hi})},
                {"dimension", r.dimension},
                {"basis", basis}}
               .dump()
        << '\n';
  } else {
    out << "center " << spec.name() << " N=" << l.horizon << " window=[" << r.window.lo << ','
        << r.window.hi << "] dim=" << r.dimension << '\n';
    for (const auto& x : r.basis) out << "  " << to_string(x) << '\n';
  }
  return builtin && r.dimension != 0 ? 1 : 0;
}

int run_verify(const RunConfig& c, std::ostream& out) {
  std::vector<std::string> names{"m0", "l1", "m2"};
  if (!c.algebra.empty()) {
    if (!is_builtin_base(c.algebra)) throw usage_error("verify-paper needs m0, l1 or m2");
    names = {c.algebra};
  }
  if (!c.file.empty()) throw usage_error("verify-paper runs on built-in algebras only");
  VerifyOptions o;
  o.weight_min = c.weight_min;
  o.weight_max = c.weight_max;
  o.horizon = c.horizon.value_or(48);
  o.stability_horizon = o.horizon + kStabilityMargin;
  o.family_bound = c.family_bound;
  for (int k = o.weight_min; k <= o.weight_max; ++k)
    if (o.horizon < 6 + std::abs(k))
      throw usage_error("horizon " + std::to_string(o.horizon) + " too small for weight " +
                        std::to_string(k));
  bool all = true;
  for (const auto& name : names) {
    VerifyOutcome v = verify_algebra(name, o);
    all = all && v.pass();
    auto dims = [](const std::vector<int>& xs) {
      std::string s;
      for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
      return s;
    };
    if (c.format == ReportFormat::machine) {
      for (const auto& ch : v.checks)
        out << Json{{"algebra", name}, {"check", ch.name}, {"pass", ch.pass}, {"detail", ch.detail}}
                   .dump()
            << '\n';
    } else {
      out << "== " << name << " (weights " << o.weight_min << ".." << o.weight_max
          << ", N=" << o.horizon << ") ==\n";
      out << "Der dims: " << dims(v.der_dims) << '\n';
      out << "BDer dims: " << dims(v.bider_dims) << '\n';
      out << "Commuting dims: " << dims(v.commuting_dims) << '\n';
      for (const auto& ch : v.checks)
        out << (ch.pass ? "PASS " : "FAIL ") << ch.name
            << (ch.detail.empty() ? "" : " (" + ch.detail + ")") << '\n';
    }
  }
  if (c.format == ReportFormat::text) out << "verify-paper: " << (all ? "PASS" : "FAIL") << '\n';
  return all ? 0 : 1;
}

}  // namespace

std::pair<int, int> parse_weight_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      std::size_t used = 0;
      int k = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {k, k};
    }
    std::size_t u1 = 0, u2 = 0;
    const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    int lo = std::stoi(a, &u1);
    int hi = std::stoi(b, &u2);
    if (u1 != a.size() || u2 != b.size()) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw usage_error("malformed weight range '" + text + "', expected a..b");
  }
}

int run(const RunConfig& c, std::ostream& out) {
  if (c.weight_min > c.weight_max) throw usage_error("empty weight range");
  if (c.horizon && *c.horizon < 8) throw usage_error("horizon must be at least 8");
  if (c.family_bound < 3) throw usage_error("family bound must be at least 3");
  if (c.algebra.empty() == c.file.empty() && c.command != Command::verify_paper)
    throw usage_error("exactly one of --algebra and --file is required");
  try {
    configure_threads();
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }
  if (c.command == Command::verify_paper) return run_verify(c, out);
  const Loaded l = load(c);
  if (l.horizon < 8) throw usage_error("horizon must be at least 8");
  switch (c.command) {
    case Command::jacobi: return run_jacobi(c, l, out);
    case Command::center: return run_center(c, l, out);
    default: return run_solves(c, l, out);
  }
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact derivation, biderivation and local-derivation solver for graded Lie algebras"};
  app.require_subcommand(1);

  RunConfig config;
  std::string weights, format = "text", out_path;
  int horizon = 0;
  struct Entry {
    const char* name;
    Command command;
    const char* help;
  };
  const std::vector<Entry> commands{
      {"der", Command::der, "graded derivations Der_k"},
      {"bider", Command::bider, "skew biderivations BDer_k"},
      {"commuting", Command::commuting, "weight-k commuting linear maps"},
      {"local", Command::local, "local-derivation over-approximation"},
      {"two-local", Command::two_local, "2-local-derivation over-approximation"},
      {"jacobi", Command::jacobi, "check the Jacobi identity up to the horizon"},
      {"center", Command::center, "center of the truncated algebra"},
      {"verify-paper", Command::verify_paper, "full verification battery on m0, l1, m2"}};
  std::vector<std::pair<CLI::App*, Command>> subs;
  std::vector<CLI::Option*> horizon_opts;
  for (const auto& [name, cmd, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    auto* alg = sub->add_option("--algebra", config.algebra, "built-in algebra name");
    auto* file = sub->add_option("--file", config.file, "algebra file");
    alg->excludes(file);
    sub->add_option("--weights", weights, "weight range a..b");
    horizon_opts.push_back(sub->add_option("--horizon", horizon, "truncation degree N"));
    sub->add_option("--family-bound", config.family_bound, "largest index in local test families");
    sub->add_option("--format", format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
    sub->add_option("--out", out_path, "write output to this file");
    subs.emplace_back(sub, cmd);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (subs[i].first->parsed()) {
      config.command = subs[i].second;
      if (horizon_opts[i]->count() > 0) config.horizon = horizon;
    }
  }
  config.format = format == "machine" ? ReportFormat::machine : ReportFormat::text;
  try {
    if (!weights.empty()) {
      std::tie(config.weight_min, config.weight_max) = parse_weight_range(weights);
    } else if (config.command == Command::verify_paper) {
      config.weight_min = -8;
      config.weight_max = 12;
    }
    if (out_path.empty()) return run(config, out);
    std::ofstream file(out_path);
    if (!file) throw usage_error("cannot write '" + out_path + "'");
    const int status = run(config, file);
    if (!file) throw usage_error("write to '" + out_path + "' failed");
    return status;
  } catch (const usage_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace maxclass
