#ifndef NRT_THEOREM_SUITE_HPP
#define NRT_THEOREM_SUITE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "nrt/transversal.hpp"

namespace nrt {

struct CatalogEntry {
  std::string label;
  std::string group;    ///< group descriptor, e.g. "dihedral:6"
  std::string subgroup; ///< generators, ';'-separated
  struct Expected {
    std::optional<bool> normal;
    std::optional<std::size_t> itp;
    std::optional<std::size_t> iso;
    std::optional<std::size_t> loop_transversals;
  } expected;
};

std::vector<CatalogEntry> default_catalog();

/// JSON array of {label, group, subgroup, expected?: {normal, itp, iso,
/// loop_transversals}}. Throws Error(Parse) on schema violations.
std::vector<CatalogEntry> parse_catalog(std::string_view json_text);
std::vector<CatalogEntry> load_catalog(const std::string& path);

struct CheckInfo {
  std::string id;
  std::string alias;
  std::string summary;
};

/// Known checks in run order.
const std::vector<CheckInfo>& check_catalog();

/// Accepts an id or its alias. Throws Error(InvalidArgument) otherwise.
std::string resolve_check_id(std::string_view name);

enum class Verdict { Pass, Fail, Vacuous };
const char* verdict_name(Verdict v) noexcept;

struct CheckReport {
  std::string check;
  std::string label;
  Verdict verdict = Verdict::Pass;
  std::string detail;
  nlohmann::ordered_json witness;
  /// Non-empty exactly when verdict is Fail.
  std::string counterexample;
};

struct SuiteOptions {
  /// Check ids (or aliases); empty runs every check.
  std::vector<std::string> checks;
  /// Restricts the dihedral checks to D_2p with H = {1,x}.
  std::optional<std::size_t> p;
  unsigned jobs = 1;
  std::uint64_t cap = kDefaultEnumerationCap;
};

/// One report per (check, applicable entry), ordered by check then entry.
std::vector<CheckReport> run_suite(const std::vector<CatalogEntry>& catalog,
                                   const SuiteOptions& options);

bool any_failed(const std::vector<CheckReport>& reports) noexcept;

std::string suite_table(const std::vector<CheckReport>& reports);
nlohmann::ordered_json suite_json(const std::vector<CheckReport>& reports);

} // namespace nrt

#endif // NRT_THEOREM_SUITE_HPP
