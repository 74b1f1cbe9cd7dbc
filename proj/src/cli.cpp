#include "lagloci/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "lagloci/json_io.hpp"

namespace lagloci::cli {

namespace {

struct Outcome {
  int code = kOk;
  std::string text;
  std::optional<std::string> json;
};

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidGerm:
    case ErrorCode::NotSiegel:
    case ErrorCode::NotImmersed:
    case ErrorCode::ZeroCubic:
      return kInvalidInput;
    case ErrorCode::NotNullCurve:
      return kNegative;
    default:
      return kInternal;
  }
}

std::string term(const GaussianRational& c, const std::string& monomial) {
  if (c == GaussianRational(1)) return monomial;
  if (c == GaussianRational(-1)) return "-" + monomial;
  const std::string s = c.str();
  const bool compound = !c.is_real() && !c.re().is_zero();
  return (compound ? "(" + s + ")" : s) + "*" + monomial;
}

std::string join_terms(const std::vector<std::pair<GaussianRational, std::string>>& parts) {
  std::string out;
  for (const auto& [c, m] : parts) {
    if (c.is_zero()) continue;
    std::string t = term(c, m);
    if (out.empty()) {
      out = t;
    } else if (t.front() == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out.empty() ? "0" : out;
}

std::string pluecker_text(const ScalarPluecker& p) { return "(" + p.p.str() + ", " + p.q.str() + ", " + p.r.str() + ")"; }

Germ load_germ(const std::string& path, const RunConfig& cfg) {
  Germ g = germ_from_json(read_json_file(path));
  if (cfg.order) g = with_order(g, *cfg.order);
  return g;
}

std::string report_text(const VerificationReport& report) {
  std::string out;
  for (const auto& c : report.checks) {
    out += "  " + c.name + ": " + (c.passed ? "pass" : "FAIL") + " (" + c.detail + ")\n";
  }
  return out;
}

Outcome certify(const std::string& path, const RunConfig& cfg, GermKind want) {
  const Germ g = load_germ(path, cfg);
  const bool surface = std::holds_alternative<SurfaceGerm>(g);
  if (surface != (want == GermKind::surface)) {
    return {kInvalidInput, path + ": expected a " + to_string(want) + " germ\n", std::nullopt};
  }
  const LagrangianCertificate cert = certificate(g);
  const VerificationReport report = verify_certificate(g, cert);
  Outcome out;
  out.text = path + ": " + to_string(cert.kind) + " certificate, certified_order = " +
             std::to_string(cert.certified_order) + "\n";
  out.text += "  psi(0) = " + format_cubic(at_origin(cert.psi)) + "\n";
  out.text += report_text(report);
  if (!report.ok()) {
    // The builder's own output failed independent verification: an implementation fault.
    out.code = kInternal;
    out.text += "  internal error: certificate failed verification\n";
  }
  if (cfg.emit_json) out.json = dump_canonical(certificate_to_json(g, cert));
  return out;
}

Outcome null_check(const std::string& path, const RunConfig& cfg) {
  const Germ g = load_germ(path, cfg);
  const auto* curve = std::get_if<CurveGerm>(&g);
  if (!curve) return {kInvalidInput, path + ": expected a curve germ\n", std::nullopt};
  if (is_null_curve(*curve)) return {kOk, path + ": null curve\n", std::nullopt};
  const UniSeries disc = tangent_discriminant(*curve);
  const int k = *disc.valuation();
  return {kNegative, path + ": not null, discriminant = " + disc.coeff(k).str() + " at order " + std::to_string(k) + "\n",
          std::nullopt};
}

Outcome classify(const std::string& path) {
  const ScalarCubic f = cubic_from_json(read_json_file(path));
  const Orbit o = classify_orbit(f);
  return {kOk, std::string(to_string(o)) + ", chi_hat = " + pluecker_text(chi_hat(f)) + "\n", std::nullopt};
}

Outcome chi(const std::string& path) {
  const ScalarCubic f = cubic_from_json(read_json_file(path));
  std::string text = "chi_hat = " + pluecker_text(chi_hat(f));
  if (is_degenerate(f)) text += ", degenerate, kappa = " + format_quadratic(kappa(f));
  return {kOk, text + "\n", std::nullopt};
}

Outcome verify_cert(const std::string& path, const RunConfig& cfg) {
  const Json j = read_json_file(path);
  LagrangianCertificate cert = certificate_body_from_json(j);
  if (!cfg.germ && !(j.is_object() && j.contains("germ"))) {
    throw Error(ErrorCode::ParseError, "field 'germ': missing (or pass --germ)");
  }
  const Germ g = cfg.germ ? germ_from_json(read_json_file(*cfg.germ)) : germ_from_json(j["germ"], "germ");
  const VerificationReport report = verify_certificate(g, cert);
  Outcome out;
  out.code = report.ok() ? kOk : kNegative;
  out.text = path + ": " + (report.ok() ? "certificate verified" : "certificate REJECTED") + "\n" + report_text(report);
  return out;
}

Outcome run_one(const std::string& path, const RunConfig& cfg) {
  try {
    if (cfg.command == "verify-surface") return certify(path, cfg, GermKind::surface);
    if (cfg.command == "verify-curve") return certify(path, cfg, GermKind::curve);
    if (cfg.command == "null-check") return null_check(path, cfg);
    if (cfg.command == "classify-cubic") return classify(path);
    if (cfg.command == "chi") return chi(path);
    if (cfg.command == "verify-cert") return verify_cert(path, cfg);
    return {kInvalidInput, "unknown command " + cfg.command + "\n", std::nullopt};
  } catch (const Error& e) {
    return {exit_code_for(e.code()), path + ": " + e.what() + "\n", std::nullopt};
  } catch (const std::exception& e) {
    return {kInternal, path + ": internal error: " + e.what() + "\n", std::nullopt};
  }
}

std::string output_path_for(const RunConfig& cfg, const std::string& input) {
  if (cfg.inputs.size() == 1) return *cfg.output;
  return (std::filesystem::path(*cfg.output) / (std::filesystem::path(input).stem().string() + ".cert.json")).string();
}

}  // namespace

std::string format_cubic(const ScalarCubic& f) {
  return join_terms({{f.a, "X^3"}, {f.c, "X^2*Y"}, {f.e, "X*Y^2"}, {f.b, "Y^3"}});
}

std::string format_quadratic(const ScalarQuadratic& q) {
  return join_terms({{q.xx, "X^2"}, {q.xy, "X*Y"}, {q.yy, "Y^2"}});
}

RunResult run_command(const RunConfig& cfg) {
  if (cfg.order && *cfg.order < 2) return {kInvalidInput, "--order must be at least 2\n"};
  if (cfg.order && cfg.command == "verify-cert") return {kInvalidInput, "--order does not apply to verify-cert\n"};
  if (cfg.inputs.empty()) return {kInvalidInput, "no input files\n"};
  if (cfg.output && cfg.inputs.size() > 1 && !std::filesystem::is_directory(*cfg.output)) {
    return {kInvalidInput, "--output must be an existing directory when several inputs are given\n"};
  }

  std::vector<Outcome> outcomes(cfg.inputs.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(cfg.jobs, cfg.inputs.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < cfg.inputs.size(); k = next++) outcomes[k] = run_one(cfg.inputs[k], cfg);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  RunResult result{kOk, ""};
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    auto& o = outcomes[k];
    result.exit_code = std::max(result.exit_code, o.code);
    result.report += o.text;
    if (!o.json) continue;
    if (!cfg.output) {
      result.report += *o.json;
      continue;
    }
    const std::string path = output_path_for(cfg, cfg.inputs[k]);
    std::ofstream file(path, std::ios::binary);
    file << *o.json;
    if (!file) {
      result.exit_code = std::max<int>(result.exit_code, kInvalidInput);
      result.report += "cannot write " + path + "\n";
    } else {
      result.report += "  certificate written to " + path + "\n";
    }
  }
  return result;
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certify surface and null-curve germs in the Siegel upper half space as Lagrangian loci"};
  app.require_subcommand(1);
  RunConfig cfg;
  int order = 0;
  std::string output;
  std::string germ;

  const std::vector<std::pair<const char*, const char*>> commands{
      {"verify-surface", "build and verify a certificate for a surface germ"},
      {"verify-curve", "build and verify a certificate for a null curve germ"},
      {"null-check", "test whether a curve germ is a null curve"},
      {"classify-cubic", "orbit type and chi_hat of a binary cubic"},
      {"chi", "chi_hat (and kappa when degenerate) of a binary cubic"},
      {"verify-cert", "re-check a certificate against its germ"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("inputs", cfg.inputs, "input JSON files")->required();
    sub->add_option("--order", order, "reinterpret the germ as a jet of this order (>= 2)");
    sub->add_option("--output", output, "certificate path (a directory for several inputs)");
    sub->add_flag("--emit-json", cfg.emit_json, "emit the certificate as canonical JSON");
    sub->add_option("--jobs", cfg.jobs, "worker threads over the input files")->check(CLI::PositiveNumber);
    if (std::string(name) == "verify-cert") sub->add_option("--germ", germ, "germ file to check against");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kInvalidInput;
  }

  for (CLI::App* sub : app.get_subcommands()) {
    cfg.command = sub->get_name();
    if (sub->count("--order") > 0) cfg.order = order;
    if (sub->count("--output") > 0) cfg.output = output;
    if (const CLI::Option* o = sub->get_option_no_throw("--germ"); o && o->count() > 0) cfg.germ = germ;
  }
  const RunResult r = run_command(cfg);
  (r.exit_code == kOk || r.exit_code == kNegative ? out : err) << r.report;
  return r.exit_code;
}

}  // namespace lagloci::cli
