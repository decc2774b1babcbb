// Command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "schubert/schubert.h"

namespace {

enum Exit { kOk = 0, kUsage = 1, kBudget = 2, kInconsistent = 3 };

int exit_code(sch_status status) {
  switch (status) {
    case SCH_OK: return kOk;
    case SCH_E_BUDGET: return kBudget;
    case SCH_E_INTERNAL: return kInconsistent;
    default: return kUsage;
  }
}

struct RootSystemDeleter {
  void operator()(sch_rootsystem* rs) const { sch_rootsystem_free(rs); }
};
struct StringDeleter {
  void operator()(char* s) const { sch_string_free(s); }
};
using RootSystemPtr = std::unique_ptr<sch_rootsystem, RootSystemDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

struct Common {
  std::string type;
  std::string format = "text";
  std::uint64_t budget = 1'000'000;
  bool t_grading = false;
  std::string out_path;
};

void add_common(CLI::App* cmd, Common& c, std::map<std::string, sch_format> formats) {
  cmd->add_option("--type", c.type, "Root system type, e.g. A3, D4, G2")->required();
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember(formats));
  cmd->add_option("--budget", c.budget, "Maximum number of Weyl group elements enumerated")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--t-grading", c.t_grading, "Render q as t^2");
  cmd->add_option("--out", c.out_path, "Write the output to this file instead of stdout");
}

int report_failure(sch_status status) {
  std::cerr << "error: " << sch_status_name(status) << ": " << sch_last_error() << "\n";
  return exit_code(status);
}

int emit(const Common& c, const char* text) {
  if (c.out_path.empty()) {
    std::cout << text;
    return kOk;
  }
  std::ofstream file(c.out_path);
  file << text;
  if (!file) {
    std::cerr << "error: cannot write " << c.out_path << "\n";
    return kUsage;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Poincare polynomials and smoothness tests for Schubert varieties in G/B"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sch_version()));

  const std::map<std::string, sch_format> text_json{{"text", SCH_FORMAT_TEXT}, {"json", SCH_FORMAT_JSON}};
  const std::map<std::string, sch_format> all_formats{
      {"text", SCH_FORMAT_TEXT}, {"json", SCH_FORMAT_JSON}, {"tsv", SCH_FORMAT_TSV}};

  Common common;
  std::string word;
  std::string filter = "all";
  unsigned workers = 1;

  auto* identity = app.add_subcommand("identity", "Check the three expressions for P(G/B) agree");
  add_common(identity, common, text_json);
  auto* report = app.add_subcommand("report", "Analyze the Schubert variety X(w)");
  add_common(report, common, text_json);
  report->add_option("--word", word, "Generator word, e.g. 2142132 (empty or 'e' for the identity)")->required();
  auto* scan = app.add_subcommand("scan", "Analyze every element of W");
  add_common(scan, common, all_formats);
  scan->add_option("--filter", filter, "Which elements to list")
      ->check(CLI::IsMember({"all", "pass", "fail", "palindromic"}));
  scan->add_option("--workers", workers, "Worker threads (0 = all cores)");
  auto* table = app.add_subcommand("table", "Positive roots, heights, exponents and |W|");
  add_common(table, common, all_formats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  sch_options options;
  sch_options_init(&options);
  options.budget = common.budget;
  options.format = all_formats.at(common.format);
  options.t_grading = common.t_grading ? 1 : 0;
  options.workers = workers;
  const std::map<std::string, sch_filter> filters{{"all", SCH_FILTER_ALL},
                                                  {"pass", SCH_FILTER_PASS},
                                                  {"fail", SCH_FILTER_FAIL},
                                                  {"palindromic", SCH_FILTER_PALINDROMIC}};
  options.filter = filters.at(filter);

  sch_rootsystem* raw = nullptr;
  if (sch_status s = sch_rootsystem_create(common.type.c_str(), &raw); s != SCH_OK) return report_failure(s);
  RootSystemPtr rs(raw);

  char* text = nullptr;
  int flag = 1;
  sch_status status = SCH_OK;
  if (*identity)
    status = sch_identity(rs.get(), &options, &text, &flag);
  else if (*report)
    status = sch_report(rs.get(), word.c_str(), &options, &text, nullptr);
  else if (*scan)
    status = sch_scan(rs.get(), &options, &text, &flag);
  else
    status = sch_table(rs.get(), &options, &text);
  if (status != SCH_OK) return report_failure(status);
  StringPtr owned(text);

  if (const int code = emit(common, text); code != kOk) return code;
  if (!flag) {
    std::cerr << (*identity ? "error: the three expressions differ\n"
                            : "error: necessary condition, palindromicity and pattern oracle disagree\n");
    return kInconsistent;
  }
  return kOk;
}
