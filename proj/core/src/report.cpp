#include "kodaira/report.hpp"

#include <sstream>

#include <json.hpp>

namespace kodaira {
namespace {

using ojson = nlohmann::ordered_json;

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

// Same naming convention as SurfacePresentation::generator_name, usable
// without knowing the genus.
std::string generator_label(std::size_t index) {
  const char kind = (index % 2 == 0) ? 'a' : 'b';
  return kind + std::to_string(index / 2 + 1);
}

std::string issue_kind_name(ValidationIssue::Kind kind) {
  switch (kind) {
    case ValidationIssue::Kind::shape:
      return "shape";
    case ValidationIssue::Kind::symplectic:
      return "symplectic";
    default:
      return "relator";
  }
}

ojson big_int_to_json(const mpz_class& v) {
  if (v.fits_slong_p()) return ojson(static_cast<std::int64_t>(v.get_si()));
  return ojson(v.get_str());
}

std::string torsion_text(const std::vector<mpz_class>& torsion) {
  if (torsion.empty()) return "trivial";
  std::string out;
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (i) out += " x ";
    out += "Z/" + torsion[i].get_str();
  }
  return out;
}

}  // namespace

std::string content_kind(const BundleSpec& bundle) {
  if (bundle.is_explicit()) return "explicit";
  if (bundle.is_generating_set()) return "generating_set";
  return "declared";
}

std::string render_validation(const ValidationReport& report,
                              OutputFormat format) {
  if (format == OutputFormat::json) {
    ojson j;
    j["ok"] = report.ok();
    ojson issues = ojson::array();
    for (const ValidationIssue& issue : report.issues) {
      ojson item;
      item["kind"] = issue_kind_name(issue.kind);
      item["generator"] = issue.generator
                              ? ojson(generator_label(*issue.generator))
                              : ojson(nullptr);
      item["detail"] = issue.detail;
      issues.push_back(std::move(item));
    }
    j["issues"] = std::move(issues);
    return dump(j);
  }

  if (report.ok()) return "ok: all invariants hold\n";
  std::ostringstream out;
  out << "invalid: " << report.issues.size()
      << (report.issues.size() == 1 ? " issue\n" : " issues\n");
  for (const ValidationIssue& issue : report.issues) {
    out << "  [" << issue_kind_name(issue.kind) << "]";
    if (issue.generator) out << " generator " << generator_label(*issue.generator);
    out << ": " << issue.detail << "\n";
  }
  return out.str();
}

std::string render_coinvariants(const CoinvariantsReport& report,
                                OutputFormat format) {
  if (format == OutputFormat::json) {
    ojson j;
    j["fiber_genus"] = report.fiber_genus;
    j["base_genus"] = report.base_genus;
    j["rank"] = report.rank;
    ojson torsion = ojson::array();
    for (const mpz_class& t : report.torsion) torsion.push_back(big_int_to_json(t));
    j["torsion"] = std::move(torsion);
    j["b1"] = report.b1;
    j["q_f"] = report.q_f ? ojson(*report.q_f) : ojson(nullptr);
    j["s"] = report.s ? ojson(*report.s) : ojson(nullptr);
    return dump(j);
  }

  std::ostringstream out;
  out << "fiber genus: " << report.fiber_genus << "\n";
  out << "base genus: " << report.base_genus << "\n";
  out << "coinvariant rank: " << report.rank << "\n";
  out << "coinvariant torsion: " << torsion_text(report.torsion) << "\n";
  out << "b1 of total space: " << report.b1 << "\n";
  if (report.q_f) {
    out << "q_f: " << *report.q_f << "\n";
    out << "s: " << *report.s << "\n";
  } else {
    out << "q_f: undefined (coinvariant rank is odd)\n";
    out << "s: undefined (coinvariant rank is odd)\n";
  }
  return out.str();
}

std::string render_verdict(const BundleSpec& bundle, const Verdict& verdict,
                           OutputFormat format) {
  if (format == OutputFormat::json) {
    ojson j;
    ojson b;
    b["fiber_genus"] = bundle.fiber_genus();
    b["base_genus"] = bundle.base_genus();
    b["kind"] = content_kind(bundle);
    j["bundle"] = std::move(b);
    j["verdict"] = verdict.overall();
    j["excluded"] = verdict.excluded;
    j["has_warnings"] = verdict.has_warnings;
    ojson outcomes = ojson::array();
    for (const ObstructionOutcome& outcome : verdict.outcomes) {
      ojson item;
      item["name"] = outcome.name;
      item["status"] = to_string(outcome.status);
      item["detail"] = outcome.detail;
      item["warning"] = outcome.warning;
      outcomes.push_back(std::move(item));
    }
    j["outcomes"] = std::move(outcomes);
    return dump(j);
  }

  std::ostringstream out;
  out << "bundle: fiber genus " << bundle.fiber_genus() << ", base genus "
      << bundle.base_genus() << ", kind " << content_kind(bundle) << "\n";
  out << "verdict: " << verdict.overall() << "\n";
  for (const ObstructionOutcome& outcome : verdict.outcomes) {
    out << "  [" << outcome.name << "] " << to_string(outcome.status);
    if (!outcome.detail.empty()) out << ": " << outcome.detail;
    if (outcome.warning) out << " (warning)";
    out << "\n";
  }
  return out.str();
}

std::string render_signature(const SignatureComparison& comparison,
                             OutputFormat format) {
  if (format == OutputFormat::json) {
    ojson j;
    j["computed"] = comparison.computed;
    j["tracked"] = comparison.tracked ? ojson(*comparison.tracked)
                                      : ojson(nullptr);
    j["consistent"] = comparison.consistent;
    return dump(j);
  }

  std::ostringstream out;
  out << "computed signature: " << comparison.computed << "\n";
  if (comparison.tracked) {
    out << "tracked signature: " << *comparison.tracked << "\n";
  } else {
    out << "tracked signature: unknown\n";
  }
  out << "consistent: " << (comparison.consistent ? "yes" : "no") << "\n";
  return out.str();
}

}  // namespace kodaira
