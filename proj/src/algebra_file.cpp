#include "maxclass/graded.hpp"

#include <sstream>
#include <tuple>

namespace maxclass {

parse_error::parse_error(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

struct BracketLine {
  int line;
  BasisIndex a, b, target;
  Scalar coeff;
};

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

int to_int(const std::string& tok, int line) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &used);
  } catch (const std::exception&) {
    throw parse_error(line, "expected an integer, got '" + tok + "'");
  }
  if (used != tok.size()) throw parse_error(line, "expected an integer, got '" + tok + "'");
  return value;
}

}  // namespace

AlgebraSpec parse_algebra_file(const std::string& text) {
  std::istringstream in(text);
  std::string name;
  int horizon = -1;
  std::map<int, std::pair<int, int>> dims;  // degree -> (count, line)
  std::vector<BracketLine> brackets;

  int lineno = 0;
  int header = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto tok = tokenize(raw);
    if (tok.empty()) continue;
    if (header == 0) {
      if (tok[0] != "algebra" || tok.size() != 2)
        throw parse_error(lineno, "expected 'algebra <name>'");
      name = tok[1];
      ++header;
      continue;
    }
    if (header == 1) {
      if (tok[0] != "horizon" || tok.size() != 2)
        throw parse_error(lineno, "expected 'horizon <N>'");
      horizon = to_int(tok[1], lineno);
      if (horizon < 1) throw parse_error(lineno, "horizon must be positive");
      ++header;
      continue;
    }
    if (tok[0] == "dim") {
      if (tok.size() != 3) throw parse_error(lineno, "expected 'dim <degree> <count>'");
      int d = to_int(tok[1], lineno);
      int c = to_int(tok[2], lineno);
      if (d < 0 || d > horizon) throw parse_error(lineno, "dim degree outside 0..horizon");
      if (c < 0) throw parse_error(lineno, "negative dimension");
      if (dims.count(d)) throw parse_error(lineno, "duplicate dim line for degree " + tok[1]);
      dims[d] = {c, lineno};
    } else if (tok[0] == "bracket") {
      if (tok.size() != 9 || tok[5] != "->")
        throw parse_error(lineno, "expected 'bracket d1 s1 d2 s2 -> d3 s3 num/den'");
      BracketLine b{lineno,
                    {to_int(tok[1], lineno), to_int(tok[2], lineno)},
                    {to_int(tok[3], lineno), to_int(tok[4], lineno)},
                    {to_int(tok[6], lineno), to_int(tok[7], lineno)},
                    {}};
      try {
        b.coeff = parse_scalar(tok[8]);
      } catch (const std::invalid_argument& err) {
        throw parse_error(lineno, err.what());
      }
      brackets.push_back(std::move(b));
    } else {
      throw parse_error(lineno, "unknown directive '" + tok[0] + "'");
    }
  }
  if (header < 2) throw parse_error(lineno, "missing 'algebra' or 'horizon' header");

  std::vector<int> dim_list(static_cast<std::size_t>(horizon) + 1, 1);
  dim_list[0] = 0;
  for (const auto& [d, entry] : dims) dim_list[d] = entry.first;
  AlgebraSpec spec(name, horizon, dim_list);

  // Accumulate targets per ordered pair; each pair may be given in one order only.
  std::map<std::pair<BasisIndex, BasisIndex>, std::pair<Element, int>> pairs;
  std::map<std::tuple<BasisIndex, BasisIndex, BasisIndex>, Scalar> seen;
  for (const auto& b : brackets) {
    for (const auto* idx : {&b.a, &b.b, &b.target}) {
      if (idx->degree < 0 || idx->degree > horizon)
        throw parse_error(b.line, "degree " + std::to_string(idx->degree) + " outside 0..horizon");
      if (!spec.contains(*idx)) throw parse_error(b.line, "slot out of range at " + to_string(*idx));
    }
    if (b.target.degree != b.a.degree + b.b.degree)
      throw parse_error(b.line, "grading violation: " + std::to_string(b.a.degree) + "+" +
                                    std::to_string(b.b.degree) + " != " +
                                    std::to_string(b.target.degree));
    if (b.a == b.b) throw parse_error(b.line, "self-bracket entries are not allowed");
    if (pairs.count({b.b, b.a}))
      throw parse_error(b.line, "reversed-order entry for pair already given as [" +
                                    to_string(b.b) + "," + to_string(b.a) + "]");
    auto key = std::make_tuple(b.a, b.b, b.target);
    if (auto it = seen.find(key); it != seen.end()) {
      if (it->second != b.coeff) throw parse_error(b.line, "conflicting duplicate bracket entry");
      continue;
    }
    seen.emplace(key, b.coeff);
    auto& slot = pairs[{b.a, b.b}];
    slot.first.add(b.target, b.coeff);
    slot.second = b.line;
  }
  for (auto& [key, value] : pairs) {
    try {
      spec.set_bracket(key.first, key.second, value.first);
    } catch (const std::exception& err) {
      throw parse_error(value.second, err.what());
    }
  }
  return spec;
}

std::string write_algebra_file(const AlgebraSpec& spec) {
  std::ostringstream out;
  out << "algebra " << spec.name() << "\n";
  out << "horizon " << spec.horizon() << "\n";
  for (int d = 0; d <= spec.horizon(); ++d) {
    int expected = d == 0 ? 0 : 1;
    if (spec.component_dim(d) != expected) out << "dim " << d << " " << spec.component_dim(d) << "\n";
  }
  for (const auto& [key, value] : spec.table()) {
    for (const auto& [t, c] : value.terms()) {
      out << "bracket " << key.first.degree << " " << key.first.slot << " " << key.second.degree
          << " " << key.second.slot << " -> " << t.degree << " " << t.slot << " " << to_string(c)
          << "\n";
    }
  }
  return out.str();
}

}  // namespace maxclass
