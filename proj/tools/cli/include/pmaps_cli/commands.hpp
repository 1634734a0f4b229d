#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "pmaps/census.hpp"
#include "pmaps/group_input.hpp"
#include "pmaps_cli/report_document.hpp"

namespace pmaps::cli {

/// Process exit statuses shared by every verb.
enum ExitCode : int {
  exit_ok = 0,
  exit_verify_failed = 1,
  exit_parse_error = 2,
  exit_contract_violation = 3,
  exit_theorem_violation = 4,
  exit_resource_error = 5,
};

struct CommonOptions {
  std::size_t max_order = kDefaultMaxOrder;
  std::size_t max_cosets = kDefaultMaxCosets;
  /// Census bound; kDefaultCensusMaxOrder unless --max-order was given.
  std::optional<std::size_t> census_max_order;
  unsigned threads = 1;
  bool json = false;
};

/// Package version baked in at build time.
std::string tool_version();

/// Each command writes its report to `out` and diagnostics to `err` and
/// returns the process exit status.
int cmd_analyze(const std::string& path, const std::optional<std::string>& map_name,
                const CommonOptions& options, std::ostream& out, std::ostream& err);

int cmd_quotient(const std::string& path, const std::optional<std::string>& map_name,
                 std::uint64_t p, const CommonOptions& options, std::ostream& out,
                 std::ostream& err);

int cmd_census(const std::string& path, MapKind kind, const CommonOptions& options,
               std::ostream& out, std::ostream& err);

int cmd_verify_paper(const std::string& corpus_dir, const CommonOptions& options,
                     std::ostream& out, std::ostream& err);

int cmd_tc(const std::string& path, bool export_perms, const CommonOptions& options,
           std::ostream& out, std::ostream& err);

/// Full command line front end (argv[0] is ignored).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Human-readable rendering of a report document.
void render_text(const ReportDocument& doc, std::ostream& out);

}  // namespace pmaps::cli
