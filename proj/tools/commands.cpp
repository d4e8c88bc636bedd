#include "commands.hpp"

#include <functional>

#include "kodaira/document.hpp"
#include "kodaira/errors.hpp"
#include "kodaira/meyer.hpp"
#include "kodaira/monodromy.hpp"

namespace kodaira::cli {
namespace {

// Uniform exception-to-exit-code mapping for all subcommands.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const DeclaredBlockUnsupported& e) {
    err << "error: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const UnsupportedContent& e) {
    err << "error: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitSemantic;
  }
}

}  // namespace

int cmd_validate(const CommonOptions& options, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&] {
    // Leaf checks are deferred so a full issue list can be reported;
    // constructions still validate while they are assembled.
    const BundleSpec bundle =
        load_bundle_document(options.file, /*validate_leaves=*/false);
    const ValidationReport report = validate_bundle(bundle);
    out << render_validation(report, options.format);
    return report.ok() ? kExitOk : kExitSemantic;
  });
}

int cmd_coinvariants(const CommonOptions& options, std::ostream& out,
                     std::ostream& err) {
  return guarded(err, [&] {
    const BundleSpec bundle = load_bundle_document(options.file);
    out << render_coinvariants(coinvariants(bundle), options.format);
    return kExitOk;
  });
}

int cmd_verdict(const VerdictOptions& options, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    const BundleSpec bundle = load_bundle_document(options.common.file);
    CheckConfig config;
    config.chi = options.chi;
    config.enable_modified_xiao = options.modified_xiao;
    config.cover_degrees = options.cover_degrees;
    config.cover_strategy = options.cover_strategy;
    config.exhaustive_cap = options.exhaustive_cap;
    const Verdict verdict = run_verdict(bundle, config);
    out << render_verdict(bundle, verdict, options.common.format);
    if (verdict.excluded) return kExitExcluded;
    return verdict.has_warnings ? kExitWarnings : kExitOk;
  });
}

int cmd_cover(const CoverOptions& options, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const BundleSpec bundle = load_bundle_document(options.file);
    CyclicCoverSpec spec;
    if (!options.images.empty()) {
      spec.degree = options.degree;
      spec.images = options.images;
    } else {
      spec = twist_single_generator(options.degree,
                                    options.twist_generator.value_or(0),
                                    2 * bundle.base_genus());
    }
    const BundleSpec cover = restrict_to_cover(bundle, spec);
    const std::string document = serialize_bundle(cover);
    if (options.out_file) {
      save_bundle_document(cover, *options.out_file);
    } else {
      out << document;
    }
    return kExitOk;
  });
}

int cmd_signature(const CommonOptions& options, std::ostream& out,
                  std::ostream& err) {
  return guarded(err, [&] {
    const BundleSpec bundle = load_bundle_document(options.file);
    SignatureComparison comparison;
    comparison.computed = bundle_signature(bundle.rep());
    comparison.tracked = bundle.signature();
    comparison.consistent =
        !comparison.tracked || *comparison.tracked == comparison.computed;
    out << render_signature(comparison, options.format);
    return comparison.consistent ? kExitOk : kExitSemantic;
  });
}

}  // namespace kodaira::cli
