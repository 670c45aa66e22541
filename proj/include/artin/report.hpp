#pragma once

// JSON reports and their markdown rendering.

#include <json.hpp>

#include <algorithm>
#include <string>

#include "artin/bounds.hpp"
#include "artin/classify7.hpp"
#include "artin/semigroup.hpp"
#include "artin/structure.hpp"
#include "artin/verify.hpp"

namespace artin {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "artin-report/1";

/// Big integers go out as JSON numbers when they fit, as strings otherwise.
inline Json big(const mpz_class& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

inline Json strings(const std::vector<Polynomial>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(to_string(p));
  return out;
}

inline Json to_json(const IdealPresentation& I) {
  return Json{{"vars", I.nvars}, {"field", field_spec(*I.field)}, {"generators", strings(I.gens)}};
}

inline Json to_json(const RingMap& m) {
  Json out{{"vars", m.nvars()}, {"field", field_spec(*m.field())}};
  if (m.truncation() != kNoTruncation) out["truncation"] = m.truncation();
  Json images = Json::object();
  for (int i = 0; i < m.nvars(); ++i) images["x" + std::to_string(i + 1)] = to_string(m.image(i));
  out["images"] = std::move(images);
  return out;
}

inline Json to_json(const Invariants& inv, const HilbertFunction& H) {
  return Json{{"hf", H.values()}, {"e", inv.e}, {"h", inv.h}, {"s", inv.s}, {"tau", inv.tau}, {"gorenstein", inv.is_gorenstein}};
}

inline Json to_json(const BoundReport& b) {
  return Json{{"e", big(b.e)}, {"h", b.h}, {"t", b.t}, {"r", big(b.r)}, {"lower", big(b.lower)}, {"upper", big(b.upper)}};
}

inline Json to_json(const StretchedParams& p) {
  return Json{{"h", p.h}, {"s", p.s}, {"tau", p.tau}, {"field", field_spec(*p.field)}, {"units", strings(p.units)}};
}

inline Json to_json(const AlmostStretchedParams& p) {
  return Json{{"h", p.h}, {"t", p.t}, {"s", p.s}, {"field", field_spec(*p.field)}, {"a", to_string(p.a)}, {"w", to_string(p.w)}, {"units", strings(p.units)}};
}

inline IdealPresentation model_of(const StretchedParams& p) { return make_stretched(p); }
inline IdealPresentation model_of(const AlmostStretchedParams& p) { return make_almost_stretched(p); }

/// The map sends the model onto the presented ideal.
template <typename Params>
Json to_json(const NormalForm<Params>& f) {
  return Json{{"params", to_json(f.params)}, {"model", to_json(model_of(f.params))}, {"map", to_json(f.map)}};
}

inline Json to_json(const ClassificationResult& r) {
  Json out{{"case", case_name(r.kind)}};
  out["p"] = r.p ? Json(r.p->to_string()) : Json(nullptr);
  out["p_squared"] = r.p_squared ? Json(r.p_squared->to_string()) : Json(nullptr);
  out["field"] = field_spec(*r.field);
  out["model_generators"] = strings(r.model.gens);
  out["witness_map"] = to_json(r.witness);
  Json trace = Json::array();
  for (const auto& [k, v] : r.trace) trace.push_back(Json{{"step", k}, {"value", v}});
  out["trace"] = std::move(trace);
  return out;
}

inline Json to_json(const RgsReport& r) {
  Json out{{"e", r.e},           {"h", r.h},         {"v", r.v},         {"symmetric", r.symmetric}, {"lower", r.lower},
           {"upper", r.upper},   {"consistent", r.consistent()}};
  auto statement = [](bool applies, bool ok) { return applies ? Json(ok ? "holds" : "fails") : Json("n/a"); };
  out["minimal_multiplicity"] = statement(r.minimal_multiplicity, r.v == r.upper);
  out["r1"] = statement(r.r1_applies, r.r1_lower_ok && r.r1_upper_ok);
  out["r2"] = statement(r.r2_applies, r.r2_value_ok);
  out["r3"] = statement(r.r3_applies, r.r3_ok);
  return out;
}

inline Json to_json(const NumericalSemigroup& S, const RgsReport& r) {
  return Json{{"gens", S.gens}, {"e", S.e}, {"h", S.h}, {"frobenius", S.frobenius}, {"symmetric", S.symmetric}, {"v", r.v}, {"rgs_report", to_json(r)}};
}

inline Json to_json(const SuiteResult& r) {
  Json out{{"suite", r.name}, {"criterion", r.criterion}, {"seed", r.seed}, {"passed", r.passed}, {"failed", r.failed}, {"ok", r.ok()}};
  out["failures"] = r.failures;
  Json notes = Json::object();
  for (const auto& [k, v] : r.notes) notes[k] = v;
  out["notes"] = std::move(notes);
  return out;
}

inline Json with_schema(const std::string& command, Json body) {
  Json out{{"schema", kSchema}, {"command", command}};
  for (auto& [k, v] : body.items()) out[k] = v;
  return out;
}

inline Json error_record(std::string_view code, const std::string& message) {
  return Json{{"schema", kSchema}, {"error", {{"code", code}, {"message", message}}}};
}

namespace detail {

inline bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

inline std::string cell(const Json& j) {
  std::string s = j.is_string() ? j.get<std::string>() : j.dump();
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else out += c;
  }
  return out;
}

inline bool flat_object(const Json& j) {
  if (!j.is_object()) return false;
  for (const auto& [k, v] : j.items()) {
    if (!is_scalar(v)) return false;
  }
  return true;
}

/// One header from the first object, one row per object.
inline std::string flat_rows(const Json& objects) {
  std::string head = "|", rule = "|", rows;
  for (const auto& [k, v] : objects.front().items()) {
    head += " " + k + " |";
    rule += " --- |";
  }
  for (const auto& j : objects) {
    rows += "|";
    for (const auto& [k, v] : j.items()) rows += " " + cell(v) + " |";
    rows += "\n";
  }
  return head + "\n" + rule + "\n" + rows;
}

inline void render(const Json& j, int level, std::string& out) {
  if (flat_object(j)) {
    out += flat_rows(Json::array({j}));
    return;
  }
  std::string scalars;
  for (const auto& [k, v] : j.items()) {
    if (is_scalar(v)) scalars += "- **" + k + "**: " + cell(v) + "\n";
  }
  out += scalars;
  for (const auto& [k, v] : j.items()) {
    if (is_scalar(v)) continue;
    out += "\n" + std::string(static_cast<size_t>(level), '#') + " " + k + "\n\n";
    if (v.empty()) {
      out += "_none_\n";
    } else if (v.is_object()) {
      render(v, level + 1, out);
    } else if (!v.empty() && std::all_of(v.begin(), v.end(), [&](const Json& item) { return flat_object(item) && item.size() == v.front().size(); })) {
      out += flat_rows(v);
    } else if (!v.empty() && v.front().is_object()) {
      for (const auto& item : v) {
        render(item, level + 1, out);
        out += "\n";
      }
    } else {
      for (const auto& item : v) out += "- " + cell(item) + "\n";
    }
  }
}

}  // namespace detail

/// Markdown view of a report; a flat object becomes a single table row.
inline std::string to_markdown(const Json& report) {
  std::string out;
  if (report.is_array()) {
    for (const auto& item : report) {
      detail::render(item, 2, out);
      out += "\n";
    }
    return out;
  }
  detail::render(report, 2, out);
  return out;
}

}  // namespace artin
