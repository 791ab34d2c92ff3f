#pragma once

// File formats, reports, the claim catalog and the command-line driver.

#include "selfdual/classify.hpp"

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace selfdual {

/// Malformed user input. line() and column() are 1-based; 0 when not tied to
/// a position.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& what, std::size_t line = 0, std::size_t column = 0);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Relation file: 1-12 rows of 12 scalar tokens; '#' starts a comment line,
/// blank lines are skipped.
Matrix parse_relation_file(std::string_view text);
Matrix read_relation_file(const std::filesystem::path& path);
std::string format_rows(const Matrix& rows);

/// Writes via a temporary sibling file and a rename.
void write_atomically(const std::filesystem::path& path, const std::string& contents);

enum class Format { text, structured };

inline constexpr int kSchemaVersion = 1;

struct Report {
  RelationSpace space;
  bool invariant = false;
  std::array<Eigen::Index, 3> multiplicities{};  // (M+, M-, M2); valid when invariant
  Certificate certificate;
};

Report make_report(const RelationSpace& u);
std::string render(const Report& report, Format format);
/// The basis recorded in a rendered report of either format.
Matrix report_basis(std::string_view rendered);

struct ClaimResult {
  std::string id;
  std::string statement;
  bool passed = false;
  std::string detail;
};

struct Claim {
  std::string id;
  std::string statement;
  /// Returns pass/fail; may append a short explanation to `detail`.
  std::function<bool(const Matrix& sigma_matrix, std::string& detail)> check;
};

/// The fixed catalog replayed by verify-paper.
const std::vector<Claim>& claim_catalog();
std::vector<ClaimResult> run_claims(const Matrix& sigma_matrix = sigma());

/// Exit codes: 0 self-dual / success, 1 not self-dual (or failing claims),
/// 2 invalid input, 3 internal inconsistency.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace selfdual
