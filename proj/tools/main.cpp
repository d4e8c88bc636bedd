#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using kodaira::OutputFormat;
using kodaira::CheckConfig;

void add_output_option(CLI::App& cmd, std::string& format) {
  cmd.add_option("--output", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

OutputFormat parse_format(const std::string& format) {
  return format == "json" ? OutputFormat::json : OutputFormat::text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Surface bundles over surfaces: homological monodromy, numerical "
      "invariants, and fibration exclusion checks"};
  app.require_subcommand(1);

  std::string file;
  std::string format = "text";

  CLI::App* validate = app.add_subcommand(
      "validate", "Check the invariants of a bundle document");
  validate->add_option("file", file, "Bundle document (JSON)")->required();
  add_output_option(*validate, format);

  CLI::App* coinv = app.add_subcommand(
      "coinv", "Coinvariants of the monodromy action on fiber homology");
  coinv->add_option("file", file, "Bundle document (JSON)")->required();
  add_output_option(*coinv, format);

  CLI::App* verdict = app.add_subcommand(
      "verdict", "Run every applicable exclusion check");
  verdict->add_option("file", file, "Bundle document (JSON)")->required();
  add_output_option(*verdict, format);
  std::int64_t chi = 0;
  CLI::Option* chi_opt = verdict->add_option(
      "--chi", chi, "Holomorphic Euler characteristic of the total space");
  bool modified_xiao = false;
  verdict->add_flag("--modified-xiao", modified_xiao,
                    "Also report the conjectural irregularity bound");
  std::vector<std::size_t> degrees{2, 3, 4, 5, 6};
  verdict->add_option("--cover-degrees", degrees,
                      "Cyclic cover degrees for the sweep (comma separated)")
      ->delimiter(',')
      ->capture_default_str();
  std::string strategy = "single-generator";
  verdict->add_option("--cover-strategy", strategy,
                      "How cover specs are enumerated")
      ->check(CLI::IsMember({"single-generator", "exhaustive-capped"}))
      ->capture_default_str();
  std::size_t cap = 10000;
  verdict->add_option("--exhaustive-cap", cap,
                      "Spec budget for the exhaustive strategy")
      ->capture_default_str();

  CLI::App* cover = app.add_subcommand(
      "cover", "Restrict a bundle to a finite cyclic cover of its base");
  cover->add_option("file", file, "Bundle document (JSON)")->required();
  std::size_t degree = 1;
  cover->add_option("--degree", degree, "Cover degree (>= 1)")->required();
  std::size_t twist_generator = 0;
  CLI::Option* twist_opt = cover->add_option(
      "--twist-generator", twist_generator,
      "Base generator sent to 1 mod degree; the others go to 0");
  std::vector<std::size_t> images;
  CLI::Option* images_opt =
      cover
          ->add_option("--images", images,
                       "Residues mod degree, one per base generator "
                       "(comma separated)")
          ->delimiter(',');
  images_opt->excludes(twist_opt);
  std::string out_file;
  CLI::Option* out_opt = cover->add_option(
      "--out", out_file, "Write the resulting document here instead of stdout");

  CLI::App* signature = app.add_subcommand(
      "signature", "Relator-sum signature, compared with the tracked value");
  signature->add_option("file", file, "Bundle document (JSON)")->required();
  add_output_option(*signature, format);

  CLI11_PARSE(app, argc, argv);

  if (*validate || *coinv || *signature) {
    kodaira::cli::CommonOptions options;
    options.file = file;
    options.format = parse_format(format);
    if (*validate) {
      return kodaira::cli::cmd_validate(options, std::cout, std::cerr);
    }
    if (*coinv) {
      return kodaira::cli::cmd_coinvariants(options, std::cout, std::cerr);
    }
    return kodaira::cli::cmd_signature(options, std::cout, std::cerr);
  }
  if (*verdict) {
    kodaira::cli::VerdictOptions options;
    options.common.file = file;
    options.common.format = parse_format(format);
    if (*chi_opt) options.chi = chi;
    options.modified_xiao = modified_xiao;
    options.cover_degrees = degrees;
    options.cover_strategy =
        strategy == "exhaustive-capped"
            ? CheckConfig::CoverStrategy::exhaustive_capped
            : CheckConfig::CoverStrategy::single_generator;
    options.exhaustive_cap = cap;
    return kodaira::cli::cmd_verdict(options, std::cout, std::cerr);
  }

  kodaira::cli::CoverOptions options;
  options.file = file;
  options.degree = degree;
  if (*twist_opt) options.twist_generator = twist_generator;
  options.images = images;
  if (*out_opt) options.out_file = out_file;
  return kodaira::cli::cmd_cover(options, std::cout, std::cerr);
}
