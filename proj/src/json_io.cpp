#include "lagloci/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace lagloci {

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::ParseError, "field '" + field + "': " + what);
}

std::string join(const std::string& field, const std::string& key) { return field.empty() ? key : field + "." + key; }

std::string index(const std::string& field, std::size_t k) { return field + "[" + std::to_string(k) + "]"; }

const Json& member(const Json& j, const std::string& field, const std::string& key) {
  if (!j.is_object()) field_error(field.empty() ? "<root>" : field, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) field_error(join(field, key), "missing");
  return *it;
}

int int_from_json(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) field_error(field, "expected an integer");
  return j.get<int>();
}

const char* const kSlot[3] = {"z11", "z12", "z22"};

}  // namespace

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Translate the byte offset into a line and column.
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t k = 0; k < stop; ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::ParseError,
                source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path);
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

Json scalar_to_json(const GaussianRational& x) { return x.str(); }

GaussianRational scalar_from_json(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return GaussianRational(j.get<long>());
  if (!j.is_string()) field_error(field, "expected a rational string such as \"1/2-3*i\"");
  try {
    return GaussianRational::parse(j.get<std::string>());
  } catch (const Error& e) {
    field_error(field, e.what());
  }
}

Json series_to_json(const BiSeries& s) {
  Json coeffs = Json::array();
  for (const auto& [e, c] : s.terms()) coeffs.push_back(Json::array({e.first, e.second, c.str()}));
  return Json{{"order", s.order()}, {"coeffs", coeffs}};
}

BiSeries bi_series_from_json(const Json& j, const std::string& field) {
  const int order = int_from_json(member(j, field, "order"), join(field, "order"));
  if (order < 0) field_error(join(field, "order"), "must be non-negative");
  const Json& coeffs = member(j, field, "coeffs");
  if (!coeffs.is_array()) field_error(join(field, "coeffs"), "expected an array");
  BiSeries out(order);
  std::set<std::pair<int, int>> seen;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const std::string at = index(join(field, "coeffs"), k);
    const Json& t = coeffs[k];
    if (!t.is_array() || t.size() != 3) field_error(at, "expected [i, j, coefficient]");
    const int i = int_from_json(t[0], at + "[0]");
    const int jj = int_from_json(t[1], at + "[1]");
    if (i < 0 || jj < 0 || i + jj > order) field_error(at, "monomial outside the truncation order");
    if (!seen.insert({i, jj}).second) field_error(at, "duplicate monomial");
    out.set_coeff(i, jj, scalar_from_json(t[2], at + "[2]"));
  }
  return out;
}

Json series_to_json(const UniSeries& s) {
  Json coeffs = Json::array();
  for (const auto& [i, c] : s.terms()) coeffs.push_back(Json::array({i, c.str()}));
  return Json{{"order", s.order()}, {"coeffs", coeffs}};
}

UniSeries uni_series_from_json(const Json& j, const std::string& field) {
  const int order = int_from_json(member(j, field, "order"), join(field, "order"));
  if (order < 0) field_error(join(field, "order"), "must be non-negative");
  const Json& coeffs = member(j, field, "coeffs");
  if (!coeffs.is_array()) field_error(join(field, "coeffs"), "expected an array");
  UniSeries out(order);
  std::set<int> seen;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const std::string at = index(join(field, "coeffs"), k);
    const Json& t = coeffs[k];
    if (!t.is_array() || t.size() != 2) field_error(at, "expected [i, coefficient]");
    const int i = int_from_json(t[0], at + "[0]");
    if (i < 0 || i > order) field_error(at, "power outside the truncation order");
    if (!seen.insert(i).second) field_error(at, "duplicate power");
    out.set_coeff(i, scalar_from_json(t[1], at + "[1]"));
  }
  return out;
}

Json cubic_to_json(const ScalarCubic& f) {
  return Json{{"a", f.a.str()}, {"b", f.b.str()}, {"c", f.c.str()}, {"e", f.e.str()}};
}

ScalarCubic cubic_from_json(const Json& j, const std::string& field) {
  auto get = [&](const char* key) { return scalar_from_json(member(j, field, key), join(field, key)); };
  return {get("a"), get("b"), get("c"), get("e")};
}

Json quadratic_to_json(const ScalarQuadratic& q) {
  return Json{{"xx", q.xx.str()}, {"xy", q.xy.str()}, {"yy", q.yy.str()}};
}

ScalarQuadratic quadratic_from_json(const Json& j, const std::string& field) {
  auto get = [&](const char* key) { return scalar_from_json(member(j, field, key), join(field, key)); };
  return {get("xx"), get("xy"), get("yy")};
}

Json cubic_to_json(const SeriesCubic& f) {
  return Json{{"a", series_to_json(f.a)}, {"b", series_to_json(f.b)}, {"c", series_to_json(f.c)},
              {"e", series_to_json(f.e)}};
}

SeriesCubic series_cubic_from_json(const Json& j, const std::string& field) {
  auto get = [&](const char* key) { return bi_series_from_json(member(j, field, key), join(field, key)); };
  return {get("a"), get("b"), get("c"), get("e")};
}

Json germ_to_json(const Germ& g) {
  return std::visit(
      [](const auto& x) {
        Json comps;
        for (std::size_t k = 0; k < 3; ++k) comps[kSlot[k]] = series_to_json(x.comps[k]);
        const bool surface = std::is_same_v<std::decay_t<decltype(x)>, SurfaceGerm>;
        return Json{{"kind", surface ? "surface" : "curve"},
                    {"base", {{"z11", x.base.z11.str()}, {"z12", x.base.z12.str()}, {"z22", x.base.z22.str()}}},
                    {"order", x.order},
                    {"comps", comps}};
      },
      g);
}

Germ germ_from_json(const Json& j, const std::string& field) {
  const std::string kind_f = join(field, "kind");
  const Json& kind_j = member(j, field, "kind");
  if (!kind_j.is_string()) field_error(kind_f, "expected \"surface\" or \"curve\"");
  const std::string kind = kind_j.get<std::string>();
  if (kind != "surface" && kind != "curve") field_error(kind_f, "expected \"surface\" or \"curve\", got \"" + kind + "\"");
  const std::string base_f = join(field, "base");
  const Json& base_j = member(j, field, "base");
  const SiegelPoint base{scalar_from_json(member(base_j, base_f, "z11"), join(base_f, "z11")),
                         scalar_from_json(member(base_j, base_f, "z12"), join(base_f, "z12")),
                         scalar_from_json(member(base_j, base_f, "z22"), join(base_f, "z22"))};
  const int order = int_from_json(member(j, field, "order"), join(field, "order"));
  const std::string comps_f = join(field, "comps");
  const Json& comps = member(j, field, "comps");
  if (kind == "surface") {
    auto get = [&](std::size_t k) { return bi_series_from_json(member(comps, comps_f, kSlot[k]), join(comps_f, kSlot[k])); };
    return SurfaceGerm{base, {get(0), get(1), get(2)}, order};
  }
  auto get = [&](std::size_t k) { return uni_series_from_json(member(comps, comps_f, kSlot[k]), join(comps_f, kSlot[k])); };
  return CurveGerm{base, {get(0), get(1), get(2)}, order};
}

namespace {

Json series_list(const std::vector<BiSeries>& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(series_to_json(s));
  return out;
}

std::vector<BiSeries> series_list_from_json(const Json& j, const std::string& field) {
  if (!j.is_array()) field_error(field, "expected an array");
  std::vector<BiSeries> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(bi_series_from_json(j[k], index(field, k)));
  return out;
}

}  // namespace

Json certificate_to_json(const Germ& g, const LagrangianCertificate& cert) {
  Json vartheta = Json::array();
  for (std::size_t r = 0; r < 2; ++r) {
    vartheta.push_back(Json::array({series_to_json(cert.vartheta(r, 0)), series_to_json(cert.vartheta(r, 1))}));
  }
  Json j{
      {"kind", to_string(cert.kind)},
      {"certified_order", cert.certified_order},
      {"vartheta", vartheta},
      {"psi", cubic_to_json(cert.psi)},
      {"F", series_to_json(cert.F)},
      {"Ftilde", series_to_json(cert.Ftilde)},
      {"q", cubic_to_json(cert.q)},
      {"affine_coords", Json::array({series_to_json(cert.affine_coords[0]), series_to_json(cert.affine_coords[1])})},
      {"residual_closedness", series_list(cert.residual_closedness)},
      {"residual_cubic_condition", series_list(cert.residual_cubic_condition)},
      {"choices",
       {{"fiber_attempt", cert.choices.fiber_attempt},
        {"fiber_candidates", Json::array({cert.choices.fiber_candidates[0], cert.choices.fiber_candidates[1]})},
        {"chart_index", cert.choices.chart_index},
        {"chart_direction",
         Json::array({cert.choices.chart_direction[0].str(), cert.choices.chart_direction[1].str()})}}},
      {"semantics", "identities hold for jets modulo monomials of total degree > certified_order"},
      {"germ", germ_to_json(g)},
  };
  if (cert.qtilde) j["qtilde"] = cubic_to_json(*cert.qtilde);
  if (cert.psi_chi_hat_valuation) j["psi_chi_hat_valuation"] = *cert.psi_chi_hat_valuation;
  return j;
}

LagrangianCertificate certificate_body_from_json(const Json& j) {
  const Json& kind_j = member(j, "", "kind");
  if (!kind_j.is_string() || (kind_j != "surface" && kind_j != "curve")) {
    field_error("kind", "expected \"surface\" or \"curve\"");
  }
  const GermKind kind = kind_j == "surface" ? GermKind::surface : GermKind::curve;

  const Json& vt = member(j, "", "vartheta");
  if (!vt.is_array() || vt.size() != 2) field_error("vartheta", "expected a 2 x 2 array");
  std::vector<BiSeries> data;
  for (std::size_t r = 0; r < 2; ++r) {
    if (!vt[r].is_array() || vt[r].size() != 2) field_error(index("vartheta", r), "expected two entries");
    for (std::size_t c = 0; c < 2; ++c) data.push_back(bi_series_from_json(vt[r][c], index(index("vartheta", r), c)));
  }

  const Json& ac = member(j, "", "affine_coords");
  if (!ac.is_array() || ac.size() != 2) field_error("affine_coords", "expected two series");

  const Json& ch = member(j, "", "choices");
  ChoicesLog log;
  log.fiber_attempt = int_from_json(member(ch, "choices", "fiber_attempt"), "choices.fiber_attempt");
  const Json& fc = member(ch, "choices", "fiber_candidates");
  if (!fc.is_array() || fc.size() != 2) field_error("choices.fiber_candidates", "expected two indices");
  log.fiber_candidates = {static_cast<std::size_t>(int_from_json(fc[0], "choices.fiber_candidates[0]")),
                          static_cast<std::size_t>(int_from_json(fc[1], "choices.fiber_candidates[1]"))};
  log.chart_index = int_from_json(member(ch, "choices", "chart_index"), "choices.chart_index");
  const Json& cd = member(ch, "choices", "chart_direction");
  if (!cd.is_array() || cd.size() != 2) field_error("choices.chart_direction", "expected two scalars");
  log.chart_direction = {scalar_from_json(cd[0], "choices.chart_direction[0]"),
                         scalar_from_json(cd[1], "choices.chart_direction[1]")};

  std::optional<SeriesCubic> qtilde;
  if (j.contains("qtilde")) qtilde = series_cubic_from_json(j["qtilde"], "qtilde");
  std::optional<int> valuation;
  if (j.contains("psi_chi_hat_valuation") && !j["psi_chi_hat_valuation"].is_null()) {
    valuation = int_from_json(j["psi_chi_hat_valuation"], "psi_chi_hat_valuation");
  }

  return {kind,
          SeriesMatrix(2, 2, std::move(data)),
          series_cubic_from_json(member(j, "", "psi"), "psi"),
          bi_series_from_json(member(j, "", "F"), "F"),
          bi_series_from_json(member(j, "", "Ftilde"), "Ftilde"),
          series_cubic_from_json(member(j, "", "q"), "q"),
          std::move(qtilde),
          {bi_series_from_json(ac[0], "affine_coords[0]"), bi_series_from_json(ac[1], "affine_coords[1]")},
          series_list_from_json(member(j, "", "residual_closedness"), "residual_closedness"),
          series_list_from_json(member(j, "", "residual_cubic_condition"), "residual_cubic_condition"),
          int_from_json(member(j, "", "certified_order"), "certified_order"),
          log,
          valuation};
}

std::pair<Germ, LagrangianCertificate> certificate_from_json(const Json& j) {
  Germ g = germ_from_json(member(j, "", "germ"), "germ");
  return {std::move(g), certificate_body_from_json(j)};
}

}  // namespace lagloci
