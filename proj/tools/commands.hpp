#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "kodaira/obstructions.hpp"
#include "kodaira/report.hpp"

namespace kodaira::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;          // valid / not excluded / consistent
inline constexpr int kExitExcluded = 1;    // some obstruction fired
inline constexpr int kExitSchema = 2;      // unreadable file or malformed document
inline constexpr int kExitSemantic = 3;    // violated invariants or inconsistent data
inline constexpr int kExitWarnings = 4;    // not excluded, but a check gave up early
inline constexpr int kExitUnsupported = 5; // content kind cannot support the command

struct CommonOptions {
  std::string file;
  OutputFormat format = OutputFormat::text;
};

struct VerdictOptions {
  CommonOptions common;
  std::optional<std::int64_t> chi;
  bool modified_xiao = false;
  std::vector<std::size_t> cover_degrees{2, 3, 4, 5, 6};
  CheckConfig::CoverStrategy cover_strategy =
      CheckConfig::CoverStrategy::single_generator;
  std::size_t exhaustive_cap = 10000;
};

struct CoverOptions {
  std::string file;
  std::size_t degree = 1;
  std::optional<std::size_t> twist_generator;
  std::vector<std::size_t> images;  ///< used instead of twist_generator if set
  std::optional<std::string> out_file;
};

int cmd_validate(const CommonOptions& options, std::ostream& out,
                 std::ostream& err);
int cmd_coinvariants(const CommonOptions& options, std::ostream& out,
                     std::ostream& err);
int cmd_verdict(const VerdictOptions& options, std::ostream& out,
                std::ostream& err);
int cmd_cover(const CoverOptions& options, std::ostream& out,
              std::ostream& err);
int cmd_signature(const CommonOptions& options, std::ostream& out,
                  std::ostream& err);

}  // namespace kodaira::cli
