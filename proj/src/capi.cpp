#include "schubert/schubert.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "schubert/error.hpp"
#include "schubert/report.hpp"

struct sch_rootsystem {
  schubert::RootSystem rs;
};

struct sch_element {
  const sch_rootsystem* owner;
  schubert::WeylElement w;
};

namespace {

thread_local std::string last_error;

sch_status fail(sch_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Maps the C++ exception taxonomy onto status codes.
template <class F>
sch_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const schubert::ParseError& e) {
    return fail(SCH_E_PARSE, e.what());
  } catch (const schubert::ConfigError& e) {
    return fail(SCH_E_CONFIG, e.what());
  } catch (const schubert::ResourceError& e) {
    return fail(SCH_E_BUDGET, e.what());
  } catch (const schubert::DomainError& e) {
    return fail(SCH_E_DOMAIN, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SCH_E_BUDGET, "out of memory");
  } catch (const std::exception& e) {
    return fail(SCH_E_INTERNAL, e.what());
  } catch (...) {
    return fail(SCH_E_INTERNAL, "unknown error");
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sch_options resolve(const sch_options* options) {
  sch_options o;
  sch_options_init(&o);
  return options ? *options : o;
}

schubert::Grading grading(const sch_options& o) {
  return o.t_grading ? schubert::Grading::T : schubert::Grading::Q;
}

bool valid_format(sch_format f) { return f == SCH_FORMAT_TEXT || f == SCH_FORMAT_JSON || f == SCH_FORMAT_TSV; }

}  // namespace

extern "C" {

void sch_options_init(sch_options* options) {
  if (!options) return;
  options->budget = schubert::kDefaultBudget;
  options->format = SCH_FORMAT_TEXT;
  options->t_grading = 0;
  options->filter = SCH_FILTER_ALL;
  options->workers = 1;
}

const char* sch_version(void) { return "0.1.0"; }

const char* sch_status_name(sch_status status) {
  switch (status) {
    case SCH_OK: return "ok";
    case SCH_E_INVALID_ARGUMENT: return "invalid argument";
    case SCH_E_PARSE: return "parse error";
    case SCH_E_CONFIG: return "configuration error";
    case SCH_E_BUDGET: return "budget exceeded";
    case SCH_E_DOMAIN: return "domain error";
    case SCH_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* sch_last_error(void) { return last_error.c_str(); }

void sch_string_free(char* s) { std::free(s); }

sch_status sch_rootsystem_create(const char* type, sch_rootsystem** out) {
  if (!type || !out) return fail(SCH_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new sch_rootsystem{schubert::RootSystem::parse(type)};
    return SCH_OK;
  });
}

void sch_rootsystem_free(sch_rootsystem* rs) { delete rs; }

sch_status sch_rootsystem_rank(const sch_rootsystem* rs, int* rank) {
  if (!rs || !rank) return fail(SCH_E_INVALID_ARGUMENT, "null argument");
  *rank = rs->rs.rank();
  return SCH_OK;
}

sch_status sch_rootsystem_num_positive_roots(const sch_rootsystem* rs, int* count) {
  if (!rs || !count) return fail(SCH_E_INVALID_ARGUMENT, "null argument");
  *count = static_cast<int>(rs->rs.positive_roots().size());
  return SCH_OK;
}

sch_status sch_rootsystem_labelling(const sch_rootsystem* rs, char** out) {
  if (!rs || !out) return fail(SCH_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = duplicate(rs->rs.labelling());
    return SCH_OK;
  });
}

sch_status sch_element_from_word(const sch_rootsystem* rs, const char* word, sch_element** out) {
  if (!rs || !word || !out) return fail(SCH_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new sch_element{rs, schubert::from_word(rs->rs, std::string_view(word))};
    return SCH_OK;
  });
}

void sch_element_free(sch_element* w) { delete w; }

sch_status sch_element_length(const sch_element* w, int* length) {
  if (!w || !length) return fail(SCH_E_INVALID_ARGUMENT, "null argument");
  *length = w->w.length();
  return SCH_OK;
}

sch_status sch_element_reduced_word(const sch_element* w, char** out) {
  if (!w || !out) return fail(SCH_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto& rs = w->owner->rs;
    *out = duplicate(schubert::format_word(schubert::reduced_word(rs, w->w), rs.rank()));
    return SCH_OK;
  });
}

sch_status sch_bruhat_leq(const sch_element* x, const sch_element* w, int* result) {
  if (!x || !w || !result) return fail(SCH_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *result = schubert::bruhat_leq(w->owner->rs, x->w, w->w) ? 1 : 0;
    return SCH_OK;
  });
}

sch_status sch_identity(const sch_rootsystem* rs, const sch_options* options, char** out, int* equal) {
  if (!rs || !out) return fail(SCH_E_INVALID_ARGUMENT, "null argument");
  const sch_options o = resolve(options);
  if (!valid_format(o.format)) return fail(SCH_E_INVALID_ARGUMENT, "unknown format");
  return guarded([&] {
    const schubert::IdentityCheck check = schubert::identity_check(rs->rs, o.budget);
    *out = duplicate(o.format == SCH_FORMAT_JSON ? schubert::identity_to_json(check, rs->rs).dump(2) + "\n"
                                                 : schubert::render_identity_text(check, rs->rs, grading(o)));
    if (equal) *equal = check.equal() ? 1 : 0;
    return SCH_OK;
  });
}

sch_status sch_report(const sch_rootsystem* rs, const char* word, const sch_options* options, char** out,
                      int* pass) {
  if (!rs || !word || !out) return fail(SCH_E_INVALID_ARGUMENT, "null argument");
  const sch_options o = resolve(options);
  if (!valid_format(o.format)) return fail(SCH_E_INVALID_ARGUMENT, "unknown format");
  return guarded([&] {
    const schubert::Word w = schubert::parse_word(word, rs->rs.rank());
    const schubert::SchubertReport report = schubert::analyze(rs->rs, w, o.budget);
    if (o.format == SCH_FORMAT_JSON) {
      schubert::Json j = schubert::report_to_json(report);
      j["labelling"] = rs->rs.labelling();
      *out = duplicate(j.dump(2) + "\n");
    } else {
      *out = duplicate(schubert::render_report_text(report, rs->rs, grading(o)));
    }
    if (pass) *pass = report.smooth_necessary.pass() ? 1 : 0;
    return SCH_OK;
  });
}

sch_status sch_scan(const sch_rootsystem* rs, const sch_options* options, char** out, int* consistent) {
  if (!rs || !out) return fail(SCH_E_INVALID_ARGUMENT, "null argument");
  const sch_options o = resolve(options);
  if (!valid_format(o.format)) return fail(SCH_E_INVALID_ARGUMENT, "unknown format");
  schubert::ScanFilter filter;
  switch (o.filter) {
    case SCH_FILTER_ALL: filter = schubert::ScanFilter::All; break;
    case SCH_FILTER_PASS: filter = schubert::ScanFilter::Pass; break;
    case SCH_FILTER_FAIL: filter = schubert::ScanFilter::Fail; break;
    case SCH_FILTER_PALINDROMIC: filter = schubert::ScanFilter::Palindromic; break;
    default: return fail(SCH_E_INVALID_ARGUMENT, "unknown filter");
  }
  return guarded([&] {
    const schubert::ScanResult scan = schubert::run_scan(rs->rs, filter, o.budget, o.workers);
    switch (o.format) {
      case SCH_FORMAT_JSON: *out = duplicate(schubert::scan_to_json(scan).dump(2) + "\n"); break;
      case SCH_FORMAT_TSV: *out = duplicate(schubert::render_scan_tsv(scan)); break;
      default: *out = duplicate(schubert::render_scan_text(scan, rs->rs)); break;
    }
    if (consistent) *consistent = scan.consistent() ? 1 : 0;
    return SCH_OK;
  });
}

sch_status sch_table(const sch_rootsystem* rs, const sch_options* options, char** out) {
  if (!rs || !out) return fail(SCH_E_INVALID_ARGUMENT, "null argument");
  const sch_options o = resolve(options);
  if (!valid_format(o.format)) return fail(SCH_E_INVALID_ARGUMENT, "unknown format");
  return guarded([&] {
    const schubert::RootTable table = schubert::root_table(rs->rs, o.budget);
    *out = duplicate(o.format == SCH_FORMAT_JSON ? schubert::table_to_json(table).dump(2) + "\n"
                                                 : schubert::render_table_tsv(table, grading(o)));
    return SCH_OK;
  });
}

}  // extern "C"
