#include <doctest.h>

#include <string>

#include <json.hpp>

#include "schubert/schubert.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  sch_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("c api: basics") {
  CHECK(std::string(sch_version()) == "0.1.0");
  CHECK(std::string(sch_status_name(SCH_E_BUDGET)) != "");
  sch_options o;
  sch_options_init(&o);
  CHECK(o.budget == 1000000u);
  CHECK(o.format == SCH_FORMAT_TEXT);
  CHECK(o.workers == 1u);
}

TEST_CASE("c api: root systems and elements") {
  sch_rootsystem* rs = nullptr;
  REQUIRE(sch_rootsystem_create("d4", &rs) == SCH_OK);
  int rank = 0, count = 0;
  CHECK(sch_rootsystem_rank(rs, &rank) == SCH_OK);
  CHECK(rank == 4);
  CHECK(sch_rootsystem_num_positive_roots(rs, &count) == SCH_OK);
  CHECK(count == 12);
  char* lab = nullptr;
  CHECK(sch_rootsystem_labelling(rs, &lab) == SCH_OK);
  CHECK(take(lab) == "1-2, 2-3, 2-4");

  sch_element* w = nullptr;
  sch_element* x = nullptr;
  REQUIRE(sch_element_from_word(rs, "2142132", &w) == SCH_OK);
  REQUIRE(sch_element_from_word(rs, "1,2", &x) == SCH_OK);
  int length = 0, leq = -1;
  CHECK(sch_element_length(w, &length) == SCH_OK);
  CHECK(length == 7);
  CHECK(sch_bruhat_leq(x, w, &leq) == SCH_OK);
  CHECK(leq == 1);
  CHECK(sch_bruhat_leq(w, x, &leq) == SCH_OK);
  CHECK(leq == 0);
  char* rw = nullptr;
  CHECK(sch_element_reduced_word(w, &rw) == SCH_OK);
  CHECK(take(rw).size() == 7);

  sch_element* bad = nullptr;
  CHECK(sch_element_from_word(rs, "125", &bad) == SCH_E_PARSE);
  CHECK(bad == nullptr);
  CHECK(std::string(sch_last_error()) != "");

  sch_rootsystem* b2 = nullptr;
  REQUIRE(sch_rootsystem_create("B2", &b2) == SCH_OK);
  sch_element* y = nullptr;
  REQUIRE(sch_element_from_word(b2, "1", &y) == SCH_OK);
  CHECK(sch_bruhat_leq(y, w, &leq) == SCH_E_DOMAIN);

  sch_element_free(y);
  sch_element_free(x);
  sch_element_free(w);
  sch_rootsystem_free(b2);
  sch_rootsystem_free(rs);
}

TEST_CASE("c api: errors") {
  sch_rootsystem* rs = nullptr;
  CHECK(sch_rootsystem_create("X3", &rs) == SCH_E_PARSE);
  CHECK(sch_rootsystem_create("D2", &rs) == SCH_E_CONFIG);
  CHECK(sch_rootsystem_create("E9", &rs) == SCH_E_CONFIG);
  CHECK(rs == nullptr);
  CHECK(sch_rootsystem_create(nullptr, &rs) == SCH_E_INVALID_ARGUMENT);
  CHECK(sch_rootsystem_rank(nullptr, nullptr) == SCH_E_INVALID_ARGUMENT);

  REQUIRE(sch_rootsystem_create("E8", &rs) == SCH_OK);
  sch_options o;
  sch_options_init(&o);
  char* out = nullptr;
  int equal = -1;
  CHECK(sch_identity(rs, &o, &out, &equal) == SCH_E_BUDGET);
  CHECK(out == nullptr);
  CHECK(std::string(sch_last_error()).find("696729600") != std::string::npos);
  sch_rootsystem_free(rs);
  sch_string_free(nullptr);
}

TEST_CASE("c api: commands") {
  sch_rootsystem* rs = nullptr;
  REQUIRE(sch_rootsystem_create("D4", &rs) == SCH_OK);
  sch_options o;
  sch_options_init(&o);
  o.format = SCH_FORMAT_JSON;

  char* out = nullptr;
  int pass = -1;
  REQUIRE(sch_report(rs, "2142132", &o, &out, &pass) == SCH_OK);
  CHECK(pass == 1);
  const auto j = nlohmann::json::parse(take(out));
  CHECK(j["euler"] == 54);
  CHECK(j["labelling"] == "1-2, 2-3, 2-4");

  int equal = -1;
  o.format = SCH_FORMAT_TEXT;
  REQUIRE(sch_identity(rs, &o, &out, &equal) == SCH_OK);
  CHECK(equal == 1);
  CHECK(take(out).find("EQUAL") != std::string::npos);

  REQUIRE(sch_table(rs, &o, &out) == SCH_OK);
  CHECK(!take(out).empty());

  o.format = static_cast<sch_format>(9);
  CHECK(sch_table(rs, &o, &out) == SCH_E_INVALID_ARGUMENT);
  sch_rootsystem_free(rs);

  sch_rootsystem* a3 = nullptr;
  REQUIRE(sch_rootsystem_create("A3", &a3) == SCH_OK);
  sch_options_init(&o);
  o.filter = SCH_FILTER_PASS;
  o.format = SCH_FORMAT_JSON;
  o.workers = 2;
  int consistent = -1;
  REQUIRE(sch_scan(a3, &o, &out, &consistent) == SCH_OK);
  CHECK(consistent == 1);
  CHECK(nlohmann::json::parse(take(out))["lines"].size() == 22);
  sch_rootsystem_free(a3);
}
