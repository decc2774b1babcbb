#include "schubert/report.hpp"

#include <limits>
#include <sstream>

#include "schubert/error.hpp"

namespace schubert {

namespace {

template <class T>
std::string join(const std::vector<T>& xs, const char* sep = ", ") {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? sep : "") << xs[i];
  return out.str();
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }
const char* ok(bool b) { return b ? "ok" : "FAIL"; }

Json roots_to_json(const std::vector<Root>& roots) {
  Json arr = Json::array();
  for (const Root& r : roots) arr.push_back(r.coords);
  return arr;
}

std::vector<Root> roots_from_json(const Json& j) {
  std::vector<Root> out;
  for (const auto& r : j) out.push_back(Root{r.get<std::vector<int>>()});
  return out;
}

Json rational_to_json(const RationalProduct& rp) {
  Json j;
  j["polynomial"] = rp.polynomial ? poly_to_json(*rp.polynomial) : Json(nullptr);
  j["numerator"] = rp.numerator;
  j["denominator"] = rp.denominator;
  j["divisible_pairs"] = rp.divisible_pairs;
  j["numerator_rest"] = rp.numerator_rest;
  j["denominator_rest"] = rp.denominator_rest;
  j["reduced"] = rp.reduced_text();
  return j;
}

RationalProduct rational_from_json(const Json& j) {
  RationalProduct rp;
  if (!j.at("polynomial").is_null()) rp.polynomial = poly_from_json(j.at("polynomial"));
  rp.numerator = j.at("numerator").get<std::vector<int>>();
  rp.denominator = j.at("denominator").get<std::vector<int>>();
  rp.divisible_pairs = j.at("divisible_pairs").get<std::vector<std::pair<int, int>>>();
  rp.numerator_rest = j.at("numerator_rest").get<std::vector<int>>();
  rp.denominator_rest = j.at("denominator_rest").get<std::vector<int>>();
  return rp;
}

std::string filter_name(ScanFilter f) {
  switch (f) {
    case ScanFilter::All: return "all";
    case ScanFilter::Pass: return "pass";
    case ScanFilter::Fail: return "fail";
    case ScanFilter::Palindromic: return "palindromic";
  }
  return "all";
}

}  // namespace

Json bigint_to_json(const BigInt& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(value));
  return Json(value.str());
}

BigInt bigint_from_json(const Json& value) {
  if (value.is_string()) return BigInt(value.get<std::string>());
  if (value.is_number_unsigned()) return BigInt(value.get<std::uint64_t>());
  return BigInt(value.get<std::int64_t>());
}

Json poly_to_json(const QPolynomial& p) {
  Json arr = Json::array();
  for (const BigInt& c : p.coeffs()) arr.push_back(bigint_to_json(c));
  return arr;
}

QPolynomial poly_from_json(const Json& j) {
  std::vector<BigInt> c;
  for (const auto& v : j) c.push_back(bigint_from_json(v));
  return QPolynomial(std::move(c));
}

std::string format_root(const Root& root) {
  std::string out;
  for (std::size_t i = 0; i < root.coords.size(); ++i) {
    const int c = root.coords[i];
    if (c == 0) continue;
    if (!out.empty() || c < 0) out += c < 0 ? "-" : "+";
    const int mag = c < 0 ? -c : c;
    if (mag != 1) out += std::to_string(mag);
    out += "a" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

Json report_to_json(const SchubertReport& r) {
  Json j;
  j["type"] = r.type;
  j["word"] = r.word;
  j["reduced_word"] = r.reduced_word;
  j["length"] = r.length;
  j["phi_w"] = roots_to_json(r.phi_w);
  j["profile"] = {{"counts", r.profile.counts}, {"d", r.profile.d}, {"k_w", r.profile.max_height()}};
  j["p_sum"] = poly_to_json(r.p_sum);
  j["p_product"] = rational_to_json(r.p_product);
  j["p_string"] = r.p_string ? poly_to_json(*r.p_string) : Json(nullptr);
  j["euler"] = r.euler;
  j["euler_factored"] = r.euler_factored ? bigint_to_json(*r.euler_factored) : Json(nullptr);
  j["rationally_smooth"] = r.rationally_smooth;
  const SmoothnessVerdict& v = r.smooth_necessary;
  j["smooth_necessary"] = {{"pass", v.pass()},
                           {"verdict", v.describe()},
                           {"subchecks",
                            {{"dimension", v.dimension},
                             {"string", v.string},
                             {"polynomial_match", v.polynomial_match},
                             {"euler_match", v.euler_match}}}};
  j["billey"] = r.billey ? Json(*r.billey) : Json(nullptr);
  j["te_submodule"] = r.te_submodule;
  j["partition_duality"] = r.partition_duality ? Json(*r.partition_duality) : Json(nullptr);
  j["annotations"] = r.annotations;
  return j;
}

SchubertReport report_from_json(const Json& j) {
  SchubertReport r;
  r.type = j.at("type").get<std::string>();
  r.word = j.at("word").get<Word>();
  r.reduced_word = j.at("reduced_word").get<Word>();
  r.length = j.at("length").get<int>();
  r.phi_w = roots_from_json(j.at("phi_w"));
  r.profile = HeightProfile::from_counts(j.at("profile").at("counts").get<std::vector<int>>());
  if (r.profile.d != j.at("profile").at("d").get<std::vector<int>>())
    throw nlohmann::json::other_error::create(501, "profile.d inconsistent with profile.counts", &j);
  r.p_sum = poly_from_json(j.at("p_sum"));
  r.p_product = rational_from_json(j.at("p_product"));
  if (!j.at("p_string").is_null()) r.p_string = poly_from_json(j.at("p_string"));
  r.euler = j.at("euler").get<std::uint64_t>();
  if (!j.at("euler_factored").is_null()) r.euler_factored = bigint_from_json(j.at("euler_factored"));
  r.rationally_smooth = j.at("rationally_smooth").get<bool>();
  const Json& sub = j.at("smooth_necessary").at("subchecks");
  r.smooth_necessary.dimension = sub.at("dimension").get<bool>();
  r.smooth_necessary.string = sub.at("string").get<bool>();
  r.smooth_necessary.polynomial_match = sub.at("polynomial_match").get<bool>();
  r.smooth_necessary.euler_match = sub.at("euler_match").get<bool>();
  if (!j.at("billey").is_null()) r.billey = j.at("billey").get<std::vector<int>>();
  r.te_submodule = j.at("te_submodule").get<bool>();
  if (!j.at("partition_duality").is_null()) r.partition_duality = j.at("partition_duality").get<bool>();
  r.annotations = j.at("annotations").get<std::vector<std::string>>();
  return r;
}

std::string render_report_text(const SchubertReport& r, const RootSystem& rs, Grading g) {
  std::ostringstream out;
  out << "Schubert variety X(w) in " << r.type << "/B\n";
  out << "generators:        " << rs.labelling() << "\n";
  out << "w:                 " << format_word(r.word, rs.rank()) << "  (reduced: "
      << format_word(r.reduced_word, rs.rank()) << ", length " << r.length << ")\n";
  std::vector<std::string> roots;
  for (const Root& root : r.phi_w) roots.push_back(format_root(root));
  out << "Phi(w):            {" << join(roots) << "}\n";
  out << "height counts:     (" << join(r.profile.counts) << ")  d = (" << join(r.profile.d) << ")\n";
  out << "P(X(w)):           " << r.p_sum.to_string(g) << "\n";
  out << "root product:      " << r.p_product.reduced_text(g)
      << (r.p_product.is_polynomial() ? "" : "  (not a polynomial)") << "\n";
  out << "height product:    ";
  if (r.p_string)
    out << r.p_string->to_string(g) << "\n";
  else
    out << "undefined (some d_i < 0)\n";
  out << "Euler number:      " << r.euler << "  factored: ";
  if (r.euler_factored)
    out << *r.euler_factored << "\n";
  else
    out << "undefined\n";
  out << "palindromic:       " << yes_no(r.rationally_smooth) << "\n";
  out << "q-integer factors: ";
  if (r.billey)
    out << format_q_integer_product(*r.billey, g) << "  {" << join(*r.billey) << "}\n";
  else
    out << "none\n";
  const SmoothnessVerdict& v = r.smooth_necessary;
  out << "necessary check:   " << (v.pass() ? "PASS" : "FAIL") << "  [dimension " << ok(v.dimension) << ", string "
      << ok(v.string) << ", polynomial_match " << ok(v.polynomial_match) << ", euler_match " << ok(v.euler_match)
      << "]\n";
  out << "verdict:           " << v.describe() << "\n";
  out << "TE B-submodule:    " << yes_no(r.te_submodule) << "\n";
  out << "partition duality: " << (r.partition_duality ? yes_no(*r.partition_duality) : "undefined") << "\n";
  for (const std::string& note : r.annotations) out << "note: " << note << "\n";
  return out.str();
}

Json identity_to_json(const IdentityCheck& c, const RootSystem& rs) {
  Json j;
  j["type"] = rs.name();
  j["labelling"] = rs.labelling();
  j["length_sum"] = poly_to_json(c.length_sum);
  j["root_product"] = rational_to_json(c.root_product);
  j["exponent_product"] = poly_to_json(c.exponent_product);
  j["exponents"] = rs.exponents();
  j["order"] = c.order;
  j["equal"] = c.equal();
  return j;
}

std::string render_identity_text(const IdentityCheck& c, const RootSystem& rs, Grading g) {
  std::ostringstream out;
  out << "type:                  " << rs.name() << "  (generators: " << rs.labelling() << ")\n";
  out << "sum over W:            " << c.length_sum.to_string(g) << "\n";
  out << "product over roots:    "
      << (c.root_product.polynomial ? c.root_product.polynomial->to_string(g) : c.root_product.reduced_text(g))
      << "\n";
  std::vector<int> ns;
  for (int m : rs.exponents()) ns.push_back(m + 1);
  out << "product over exponents: " << format_q_integer_product(ns, g) << " = " << c.exponent_product.to_string(g)
      << "\n";
  out << "exponents:             (" << join(rs.exponents()) << ")\n";
  out << "value at q=1:          " << c.length_sum.value_at_one() << "  (|W| = " << c.order << ")\n";
  out << (c.equal() ? "EQUAL" : "UNEQUAL") << "\n";
  return out.str();
}

RootTable root_table(const RootSystem& rs, std::uint64_t budget) {
  RootTable t;
  t.type = rs.name();
  t.labelling = rs.labelling();
  t.roots.assign(rs.positive_roots().begin(), rs.positive_roots().end());
  t.histogram = rs.height_histogram();
  t.exponents = rs.exponents();
  t.coxeter_number = rs.coxeter_number();
  const HeightProfile full = HeightProfile::from_counts(t.histogram);
  t.d = full.d;
  t.order_factored = euler_factored(full);
  t.poincare = poincare_product_string(full);
  if (group_order(rs) <= budget) t.order_enumerated = enumerate(rs, budget).size();
  return t;
}

Json table_to_json(const RootTable& t) {
  Json j;
  j["type"] = t.type;
  j["labelling"] = t.labelling;
  Json roots = Json::array();
  for (const Root& r : t.roots) roots.push_back({{"coords", r.coords}, {"height", r.height()}});
  j["positive_roots"] = roots;
  j["height_histogram"] = t.histogram;
  j["exponents"] = t.exponents;
  j["d"] = t.d;
  j["coxeter_number"] = t.coxeter_number;
  j["order_factored"] = bigint_to_json(t.order_factored);
  j["order_enumerated"] = t.order_enumerated ? Json(*t.order_enumerated) : Json(nullptr);
  j["poincare"] = poly_to_json(t.poincare);
  return j;
}

std::string render_table_tsv(const RootTable& t, Grading g) {
  std::ostringstream out;
  out << "# type\t" << t.type << "\n";
  out << "# generators\t" << t.labelling << "\n";
  out << "root\tcoords\theight\n";
  for (const Root& r : t.roots) out << format_root(r) << "\t" << join(r.coords, ",") << "\t" << r.height() << "\n";
  out << "# height_histogram\t" << join(t.histogram, ",") << "\n";
  out << "# exponents\t" << join(t.exponents, ",") << "\n";
  out << "# coxeter_number\t" << t.coxeter_number << "\n";
  out << "# d\t" << join(t.d, ",") << "\n";
  std::vector<std::string> factors;
  for (std::size_t i = 0; i < t.d.size(); ++i)
    if (t.d[i] > 0) factors.push_back(std::to_string(i + 2) + "^" + std::to_string(t.d[i]));
  out << "# order_factored\t" << join(factors, " * ") << " = " << t.order_factored << "\n";
  out << "# order_enumerated\t" << (t.order_enumerated ? std::to_string(*t.order_enumerated) : "over budget") << "\n";
  std::vector<int> ns;
  for (int m : t.exponents) ns.push_back(m + 1);
  out << "# poincare\t" << format_q_integer_product(ns, g) << "\n";
  return out.str();
}

ScanFilter parse_scan_filter(std::string_view text) {
  if (text == "all") return ScanFilter::All;
  if (text == "pass") return ScanFilter::Pass;
  if (text == "fail") return ScanFilter::Fail;
  if (text == "palindromic") return ScanFilter::Palindromic;
  throw ParseError("unknown filter '" + std::string(text) + "' (expected all, pass, fail or palindromic)");
}

Json scan_to_json(const ScanResult& s) {
  Json j;
  j["type"] = s.type;
  j["filter"] = filter_name(s.filter);
  j["total"] = s.total;
  Json lines = Json::array();
  for (const ScanLine& l : s.lines) {
    Json line = {{"word", l.word},
                 {"length", l.length},
                 {"pass", l.pass},
                 {"palindromic", l.palindromic},
                 {"te_submodule", l.te_submodule},
                 {"euler", l.euler}};
    if (l.oracle_smooth) line["oracle_smooth"] = *l.oracle_smooth;
    if (l.permutation) line["permutation"] = *l.permutation;
    lines.push_back(std::move(line));
  }
  j["lines"] = std::move(lines);
  j["counts"] = {{"palindromic", s.palindromic},
                 {"necessary_pass", s.necessary_pass},
                 {"oracle_smooth", s.oracle_smooth ? Json(*s.oracle_smooth) : Json(nullptr)}};
  j["mismatches"] = s.mismatches;
  j["consistent"] = s.consistent();
  return j;
}

std::string render_scan_tsv(const ScanResult& s) {
  std::ostringstream out;
  const bool oracle = s.oracle_smooth.has_value();
  out << "word\tlength\tnecessary\tpalindromic\tte_submodule\teuler";
  if (oracle) out << "\tpermutation\toracle_smooth";
  out << "\n";
  const int rank = s.type.empty() ? 0 : std::stoi(s.type.substr(1));
  for (const ScanLine& l : s.lines) {
    out << format_word(l.word, rank) << "\t" << l.length << "\t" << (l.pass ? "PASS" : "FAIL") << "\t"
        << yes_no(l.palindromic) << "\t" << yes_no(l.te_submodule) << "\t" << l.euler;
    if (oracle) out << "\t" << l.permutation.value_or("") << "\t" << yes_no(l.oracle_smooth.value_or(false));
    out << "\n";
  }
  return out.str();
}

std::string render_scan_text(const ScanResult& s, const RootSystem& rs) {
  std::ostringstream out;
  out << "# scan of W(" << s.type << "), generators: " << rs.labelling() << ", filter: " << filter_name(s.filter)
      << "\n";
  out << render_scan_tsv(s);
  out << "# total " << s.total << ", necessary PASS " << s.necessary_pass << ", palindromic " << s.palindromic;
  if (s.oracle_smooth) out << ", pattern-avoiding " << *s.oracle_smooth;
  out << "\n";
  if (s.oracle_smooth) out << "# oracle consistency: " << (s.consistent() ? "OK" : "MISMATCH") << "\n";
  for (const std::string& m : s.mismatches) out << "# mismatch: " << m << "\n";
  return out.str();
}

}  // namespace schubert
