#include "maxclass/report_io.hpp"

#include <json.hpp>

#include <sstream>

namespace maxclass {

using Json = nlohmann::ordered_json;

namespace {

Json index_json(const BasisIndex& i) { return Json::array({i.degree, i.slot}); }

BasisIndex index_from(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("basis index must be [deg, slot]");
  return {j[0].get<int>(), j[1].get<int>()};
}

Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

std::optional<bool> optional_bool_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<bool>();
}

std::string flag_text(const std::optional<bool>& b) {
  return b ? (*b ? "yes" : "NO") : "n/a";
}

}  // namespace

std::string write_report(const SolveReport& r, ReportFormat format) {
  if (format == ReportFormat::text) {
    std::ostringstream os;
    os << to_string(r.kind) << ' ' << r.algebra << " k=" << r.weight << " N=" << r.horizon
       << " window=[" << r.window.lo << ',' << r.window.hi << "] dim=" << r.dimension
       << " closed_form=" << flag_text(r.closed_form_match)
       << " stable=" << flag_text(r.stability);
    int n = 0;
    for (const auto& m : r.maps) {
      os << "\n  #" << ++n << ':';
      for (const auto& [src, img] : m.images()) os << "\n    " << to_string(src) << " -> " << to_string(img);
    }
    for (const auto& f : r.forms) {
      os << "\n  #" << ++n << ':';
      for (const auto& [key, v] : f.values())
        os << "\n    (" << to_string(key.first) << ", " << to_string(key.second)
           << ") -> " << to_string(v);
    }
    return os.str();
  }

  Json basis = Json::array();
  for (const auto& m : r.maps) {
    Json entries = Json::array();
    for (const auto& [src, img] : m.images())
      for (const auto& [tgt, c] : img.terms())
        entries.push_back(
            {{"source", index_json(src)}, {"target", index_json(tgt)}, {"coeff", to_string(c)}});
    basis.push_back(std::move(entries));
  }
  for (const auto& f : r.forms) {
    Json entries = Json::array();
    for (const auto& [key, v] : f.values())
      for (const auto& [tgt, c] : v.terms())
        entries.push_back({{"source", Json::array({index_json(key.first), index_json(key.second)})},
                           {"target", index_json(tgt)},
                           {"coeff", to_string(c)}});
    basis.push_back(std::move(entries));
  }
  Json j = {{"algebra", r.algebra},
            {"kind", to_string(r.kind)},
            {"weight", r.weight},
            {"horizon", r.horizon},
            {"window", Json::array({r.window.lo, r.window.hi})},
            {"dimension", r.dimension},
            {"basis", std::move(basis)},
            {"closed_form_match", optional_bool(r.closed_form_match)},
            {"stability", optional_bool(r.stability)}};
  return j.dump();
}

SolveReport parse_report(const std::string& text) {
  try {
    const Json j = Json::parse(text);
    SolveReport r;
    r.algebra = j.at("algebra").get<std::string>();
    r.kind = parse_kind(j.at("kind").get<std::string>());
    r.weight = j.at("weight").get<int>();
    r.horizon = j.at("horizon").get<int>();
    r.window = {j.at("window").at(0).get<int>(), j.at("window").at(1).get<int>()};
    r.dimension = j.at("dimension").get<int>();
    for (const auto& entries : j.at("basis")) {
      if (r.kind == SolveKind::biderivation) {
        BilinearForm f(r.weight, r.window.hi);
        for (const auto& e : entries)
          f.add_value(index_from(e.at("source").at(0)), index_from(e.at("source").at(1)),
                      Element::basis(index_from(e.at("target")),
                                     parse_scalar(e.at("coeff").get<std::string>())));
        r.forms.push_back(std::move(f));
      } else {
        GradedMap m(r.weight, r.window);
        for (const auto& e : entries)
          m.add_image(index_from(e.at("source")),
                      Element::basis(index_from(e.at("target")),
                                     parse_scalar(e.at("coeff").get<std::string>())));
        r.maps.push_back(std::move(m));
      }
    }
    r.closed_form_match = optional_bool_from(j.at("closed_form_match"));
    r.stability = optional_bool_from(j.at("stability"));
    if (r.dimension != static_cast<int>(r.maps.size() + r.forms.size()))
      throw std::invalid_argument("dimension does not match basis length");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

}  // namespace maxclass
