#pragma once

#include <string>
#include <utility>

#include <json.hpp>

#include "lagloci/pipeline.hpp"

namespace lagloci {

using Json = nlohmann::json;

/// Parses text as JSON; syntax errors become ParseError naming line and column.
Json parse_json_text(const std::string& text, const std::string& source);
Json read_json_file(const std::string& path);
/// Canonical form: sorted keys, two-space indent, trailing newline.
std::string dump_canonical(const Json& j);

// Field errors raise ParseError naming the offending field path.
Json scalar_to_json(const GaussianRational& x);
GaussianRational scalar_from_json(const Json& j, const std::string& field);

Json series_to_json(const BiSeries& s);
BiSeries bi_series_from_json(const Json& j, const std::string& field);
Json series_to_json(const UniSeries& s);
UniSeries uni_series_from_json(const Json& j, const std::string& field);

Json cubic_to_json(const ScalarCubic& f);
ScalarCubic cubic_from_json(const Json& j, const std::string& field = "");
Json quadratic_to_json(const ScalarQuadratic& q);
ScalarQuadratic quadratic_from_json(const Json& j, const std::string& field = "");
Json cubic_to_json(const SeriesCubic& f);
SeriesCubic series_cubic_from_json(const Json& j, const std::string& field);

Json germ_to_json(const Germ& g);
Germ germ_from_json(const Json& j, const std::string& field = "");

/// The certificate with the germ it certifies embedded under "germ".
Json certificate_to_json(const Germ& g, const LagrangianCertificate& cert);
std::pair<Germ, LagrangianCertificate> certificate_from_json(const Json& j);
LagrangianCertificate certificate_body_from_json(const Json& j);

}  // namespace lagloci
