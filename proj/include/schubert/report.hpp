#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "schubert/schubert.hpp"

namespace schubert {

using Json = nlohmann::json;

// Coefficients and other integers are JSON numbers when they fit in 64 bits
// and decimal strings otherwise.
Json bigint_to_json(const BigInt& value);
BigInt bigint_from_json(const Json& value);
Json poly_to_json(const QPolynomial& p);
QPolynomial poly_from_json(const Json& j);

std::string format_root(const Root& root);  // "a1+2a2"

Json report_to_json(const SchubertReport& report);
// Inverse of report_to_json; throws nlohmann::json::exception on bad input.
SchubertReport report_from_json(const Json& j);
std::string render_report_text(const SchubertReport& report, const RootSystem& rs, Grading grading);

Json identity_to_json(const IdentityCheck& check, const RootSystem& rs);
std::string render_identity_text(const IdentityCheck& check, const RootSystem& rs, Grading grading);

// Root data, height histogram, exponents and |W| for one type. The
// enumerated order is omitted when |W| exceeds the budget.
struct RootTable {
  std::string type;
  std::string labelling;
  std::vector<Root> roots;
  std::vector<int> histogram;
  std::vector<int> exponents;
  std::vector<int> d;
  int coxeter_number = 0;
  BigInt order_factored;
  std::optional<std::uint64_t> order_enumerated;
  QPolynomial poincare;  // prod [m_i + 1]_q
};

RootTable root_table(const RootSystem& rs, std::uint64_t budget = kDefaultBudget);
Json table_to_json(const RootTable& table);
std::string render_table_tsv(const RootTable& table, Grading grading);

enum class ScanFilter { All, Pass, Fail, Palindromic };

ScanFilter parse_scan_filter(std::string_view text);

struct ScanLine {
  Word word;
  int length = 0;
  bool pass = false;
  bool palindromic = false;
  bool te_submodule = false;
  std::uint64_t euler = 0;
  std::optional<bool> oracle_smooth;      // type A only
  std::optional<std::string> permutation;  // type A only

  friend bool operator==(const ScanLine&, const ScanLine&) = default;
};

struct ScanResult {
  std::string type;
  ScanFilter filter = ScanFilter::All;
  std::uint64_t total = 0;
  std::vector<ScanLine> lines;  // after filtering, in enumeration order
  std::uint64_t palindromic = 0;
  std::uint64_t necessary_pass = 0;
  std::optional<std::uint64_t> oracle_smooth;
  // type A: elements where necessary-PASS, palindromicity and pattern
  // avoidance disagree
  std::vector<std::string> mismatches;

  bool consistent() const { return mismatches.empty(); }
  friend bool operator==(const ScanResult&, const ScanResult&) = default;
};

// Analyzes every element of W in enumeration order. `workers` = 0 picks the
// hardware concurrency. Output does not depend on the worker count.
ScanResult run_scan(const RootSystem& rs, ScanFilter filter, std::uint64_t budget = kDefaultBudget,
                    unsigned workers = 1);

Json scan_to_json(const ScanResult& scan);
std::string render_scan_text(const ScanResult& scan, const RootSystem& rs);
std::string render_scan_tsv(const ScanResult& scan);

}  // namespace schubert
