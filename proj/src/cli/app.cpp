#include "wps/cli/app.hpp"

#include "wps/cli/parse.hpp"
#include "wps/curves.hpp"
#include "wps/error.hpp"
#include "wps/geometry.hpp"
#include "wps/hilbert.hpp"
#include "wps/oracle.hpp"
#include "wps/truncation.hpp"
#include "wps/weights.hpp"
#include "wps/wpoly.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

namespace wps {

namespace {

using json = nlohmann::json;

// Bad invocations that only the front end can detect.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::InvalidWeight:
    case Errc::ParseError:
    case Errc::UnknownVariable:
    case Errc::InvalidArgument:
      return 2;
    default:
      return 1;
  }
}

json big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

json bigs(const std::vector<BigInt>& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(big(x));
  return arr;
}

json weight_json(const Weight& a) { return a.entries(); }

json step_json(const WellFormStep& s) {
  return {{"case", std::string(case_name(s.kind))},
          {"d", s.d},
          {"spared", s.spared ? json(*s.spared) : json(nullptr)},
          {"before", weight_json(s.before)},
          {"after", weight_json(s.after)},
          {"ideal_note", s.ideal_note}};
}

std::string step_text(std::size_t k, const WellFormStep& s) {
  std::string out = std::to_string(k) + ". case " + std::string(case_name(s.kind)) + ", d=" + std::to_string(s.d);
  if (s.spared) out += ", spare " + std::to_string(*s.spared);
  return out + ": " + s.before.to_string() + " -> " + s.after.to_string() + " [" + s.ideal_note + "]\n";
}

std::string yes(bool b) { return b ? "yes" : "no"; }

Field field_from(const std::string& name, std::uint64_t prime) {
  if (name == "q" || name == "Q") {
    if (prime != 0) throw UsageError("--prime only applies to --field p");
    return Field::rationals();
  }
  if (name == "p" || name == "P") {
    if (prime == 0) throw UsageError("--field p needs --prime");
    return Field::prime(prime);
  }
  throw UsageError("--field must be q or p");
}

std::map<std::int64_t, std::int64_t> parse_overrides(const std::vector<std::string>& items) {
  std::map<std::int64_t, std::int64_t> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
      auto sep = piece.find_first_of(":=");
      if (sep == std::string::npos) throw UsageError("override '" + piece + "' must look like n:value");
      try {
        std::size_t used = 0;
        auto n = std::stoll(piece.substr(0, sep), &used);
        if (used != sep) throw std::invalid_argument(piece);
        auto rest = piece.substr(sep + 1);
        auto v = std::stoll(rest, &used);
        if (used != rest.size()) throw std::invalid_argument(piece);
        out[n] = v;
      } catch (const std::logic_error&) {
        throw UsageError("override '" + piece + "' must look like n:value");
      }
    }
  }
  return out;
}

std::vector<std::string> upper_names(std::size_t n) {
  auto names = default_variable_names(n);
  for (auto& s : names) {
    for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  return names;
}

Weight triple(const std::string& text) {
  Weight a = Weight::parse(text);
  if (a.size() != 3) throw Error(Errc::InvalidWeight, "plane curves need exactly three weights");
  return a;
}

struct Options {
  bool json = false;
  std::string weights;
  std::string poly;
  std::string field = "q";
  std::uint64_t prime = 0;
  bool prime_steps = false;
  std::string plan;
  std::int64_t degree = 0;
  bool sweep = false;
  std::int64_t max_entry = 9;
  std::int64_t max_degree = 60;
  unsigned jobs = 1;
  std::int64_t d = 0;
  std::int64_t bound = 0;
  std::string numerator = "1";
  std::int64_t n = 10;
  std::int64_t genus = 1;
  std::int64_t divisor_degree = 1;
  std::vector<std::string> overrides;
  std::int64_t hilbert_max_degree = 40;
  std::string ks = "1,2,3,4";
  std::int64_t max_n = 12;
  std::vector<std::string> points;
  std::string manifest;
};

struct Result {
  json data;
  std::string text;
  int code = 0;
};

Result cmd_wellform(const Options& o) {
  Weight a = Weight::parse(o.weights);
  WellFormOptions wo;
  wo.prime_steps = o.prime_steps;
  if (!o.plan.empty()) wo.plan = parse_plan(o.plan);
  auto r = well_form(a, wo);
  Result res;
  res.data = {{"command", "wellform"},
              {"input", weight_json(a)},
              {"input_well_formed", is_well_formed(a)},
              {"weight", weight_json(r.weight)},
              {"steps", json::array()}};
  res.text = r.weight.to_string() + "\n";
  for (std::size_t k = 0; k < r.trace.steps.size(); ++k) {
    res.data["steps"].push_back(step_json(r.trace.steps[k]));
    res.text += step_text(k + 1, r.trace.steps[k]);
  }
  return res;
}

Result cmd_genus(const Options& o) {
  Result res;
  if (o.sweep) {
    if (o.max_entry < 1 || o.max_entry > 30 || o.max_degree < 2 || o.max_degree > 1000) {
      throw UsageError("sweep bounds must satisfy 1 <= max-entry <= 30 and 2 <= max-degree <= 1000");
    }
    auto rows = genus_sweep(o.max_entry, o.max_degree, o.jobs);
    std::int64_t nonintegral = 0;
    std::int64_t rh_fail = 0;
    json arr = json::array();
    for (const auto& r : rows) {
      nonintegral += r.integral ? 0 : 1;
      rh_fail += r.rh ? 0 : 1;
      arr.push_back({{"weights", weight_json(r.a)},
                     {"degree", r.d},
                     {"b", r.b},
                     {"genus", r.genus.to_string()},
                     {"integral", r.integral},
                     {"riemann_hurwitz", r.rh}});
      res.text += r.a.to_csv() + " d=" + std::to_string(r.d) + " b=" + std::to_string(r.b) +
                  " genus=" + r.genus.to_string() + " integral=" + yes(r.integral) + " rh=" + yes(r.rh) + "\n";
    }
    res.text += "rows=" + std::to_string(rows.size()) + " nonintegral=" + std::to_string(nonintegral) +
                " rh_failures=" + std::to_string(rh_fail) + "\n";
    res.data = {{"command", "genus-sweep"},
                {"max_entry", o.max_entry},
                {"max_degree", o.max_degree},
                {"rows", arr},
                {"count", rows.size()},
                {"nonintegral", nonintegral},
                {"rh_failures", rh_fail}};
    return res;
  }
  if (o.weights.empty() || o.degree == 0) throw UsageError("genus needs --weights and --degree (or --sweep)");
  Weight a = triple(o.weights);
  auto b = branching_index(o.degree, a);
  auto g = genus(o.degree, a);
  auto sg = straight_genus(o.degree);
  bool rh = riemann_hurwitz_check(Rational(sg), Rational(g), a.product(), b);
  res.data = {{"command", "genus"},          {"weights", weight_json(a)}, {"degree", o.degree},
              {"genus", g},                  {"b", b},                    {"straight_genus", sg},
              {"cover_degree", a.product()}, {"riemann_hurwitz", rh}};
  res.text = "genus=" + std::to_string(g) + " b=" + std::to_string(b) + "\n";
  return res;
}

json clauses_json(const GeneralityReport& r) {
  json arr = json::array();
  for (const auto& c : r.clauses) {
    arr.push_back({{"name", c.name},
                   {"index", c.index ? json(*c.index) : json(nullptr)},
                   {"holds", c.holds},
                   {"detail", c.detail}});
  }
  return arr;
}

Result cmd_check(const Options& o) {
  Weight a = Weight::parse(o.weights);
  Field field = field_from(o.field, o.prime);
  WPolynomial f = parse_polynomial(o.poly, a, field);
  auto d = is_weighted_homogeneous(f);
  Result res;
  res.data = {{"command", "check"},
              {"weights", weight_json(a)},
              {"field", field.to_string()},
              {"poly", f.to_string()},
              {"weighted_degree", weighted_degree(f)},
              {"homogeneous", d.has_value()},
              {"degree", d ? json(*d) : json(nullptr)},
              {"well_formed", is_well_formed(a)},
              {"sufficiently_general", nullptr},
              {"vertices", nullptr}};
  res.text = "poly: " + f.to_string() + "\nweights: " + a.to_string() + "\nhomogeneous: " + yes(d.has_value());
  res.text += d ? " (degree " + std::to_string(*d) + ")\n" : "\n";
  res.text += "well-formed: " + yes(is_well_formed(a)) + "\n";
  if (!d || a.size() != 3 || !is_well_formed(a)) return res;
  PlaneCurve c(f);
  auto rep = sufficiently_general(c);
  res.data["sufficiently_general"] = {{"ok", rep.ok}, {"clauses", clauses_json(rep)}};
  res.text += "sufficiently general: " + yes(rep.ok) + "\n";
  for (const auto& cl : rep.clauses) {
    res.text += std::string("  [") + (cl.holds ? "ok" : "FAILED") + "] " + cl.name +
                (cl.index ? "[" + std::to_string(*cl.index) + "]" : "") + ": " + cl.detail + "\n";
  }
  if (!rep.ok) return res;
  auto vm = vertex_membership(c);
  res.data["vertices"] = {{"by_rule", vm.by_rule}, {"by_evaluation", vm.by_evaluation}};
  for (std::size_t i = 0; i < 3; ++i) {
    res.text += "p" + std::to_string(i) + " on curve: " + yes(vm.by_rule[i]) + " (evaluation " +
                yes(vm.by_evaluation[i]) + ")\n";
  }
  return res;
}

Result cmd_cover(const Options& o) {
  Weight a = Weight::parse(o.weights);
  Field field = field_from(o.field, o.prime);
  WPolynomial f = parse_polynomial(o.poly, a, field);
  WPolynomial cover = power_substitute(f);
  Result res;
  res.data = {{"command", "cover"},   {"weights", weight_json(a)}, {"field", field.to_string()},
              {"poly", f.to_string()}, {"cover", cover.to_string()}, {"degree", weighted_degree(cover)},
              {"edges", nullptr},      {"census", nullptr},           {"census_error", nullptr}};
  res.text = "cover: " + cover.to_string() + "\ndegree: " + std::to_string(weighted_degree(cover)) + "\n";
  if (a.size() != 3) return res;
  try {
    PlaneCurve c(f);
    auto edges = edge_squarefree_check(c);
    auto census = branch_census(c);
    json e = json::array();
    json ce = json::array();
    for (std::size_t k = 0; k < 3; ++k) {
      const auto& ed = edges.edges[k];
      const auto& cd = census.edges[k];
      e.push_back({{"i", ed.i}, {"restriction", ed.restriction.to_string()}, {"squarefree", ed.squarefree}});
      ce.push_back({{"i", cd.i},
                    {"count", cd.count},
                    {"predicted", cd.predicted},
                    {"squarefree", cd.squarefree},
                    {"agrees", cd.agrees}});
      res.text += "edge " + std::to_string(k) + ": " + ed.restriction.to_string() + " squarefree=" +
                  yes(ed.squarefree) + " nonzero_roots=" + std::to_string(cd.count) +
                  " predicted=" + std::to_string(cd.predicted) + (cd.agrees ? "" : " DISAGREES") + "\n";
    }
    res.data["edges"] = e;
    res.data["census"] = {
        {"edges", ce}, {"vertices", census.vertices}, {"d", census.d}, {"weights", weight_json(census.weights)}};
  } catch (const Error& err) {
    res.data["census_error"] = {{"code", std::string(err.code_name())}, {"message", err.what()}};
    res.text += "census unavailable: " + std::string(err.code_name()) + ": " + err.what() + "\n";
  }
  return res;
}

Result cmd_truncate(const Options& o) {
  Weight a = Weight::parse(o.weights);
  if (o.d < 1) throw UsageError("--d must be at least 1");
  std::int64_t bound = o.bound ? o.bound : default_veronese_bound(a, o.d);
  auto gens = veronese_generators(a, o.d, bound);
  auto names = default_variable_names(a.size());
  Result res;
  json g = json::array();
  json regraded = json::array();
  res.text = "generators (bound " + std::to_string(bound) + "):";
  for (const auto& m : gens) {
    auto deg = weighted_degree(m, a);
    g.push_back({{"monomial", monomial_to_string(m, names)},
                 {"exponents", m},
                 {"degree", deg},
                 {"regraded_degree", deg / o.d}});
    regraded.push_back(deg / o.d);
    res.text += " " + monomial_to_string(m, names);
  }
  res.text += "\nregraded degrees: " + regraded.dump() + "\n";
  res.data = {{"command", "truncate"}, {"weights", weight_json(a)},     {"d", o.d},   {"bound", bound},
              {"generators", g},       {"regraded_degrees", regraded}, {"poly", nullptr}};
  if (!o.poly.empty()) {
    WPolynomial f = parse_polynomial(o.poly, a, Field::rationals());
    if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "the zero polynomial generates no graded ideal");
    auto deg = is_weighted_homogeneous(f);
    if (!deg) throw Error(Errc::NotHomogeneous, f.to_string() + " is not weighted-homogeneous");
    std::int64_t k = o.d / std::gcd(o.d, *deg == 0 ? o.d : *deg);
    res.data["poly"] = {
        {"input", f.to_string()}, {"degree", *deg}, {"power", k}, {"truncated_degree", *deg * k / o.d}};
    res.text += "f^" + std::to_string(k) + " lies in the truncation, degree " + std::to_string(*deg * k / o.d) + "\n";
  }
  return res;
}

Result cmd_straighten(const Options& o) {
  Weight a = Weight::parse(o.weights);
  WPolynomial f = parse_polynomial(o.poly, a, field_from(o.field, o.prime));
  WellFormOptions wo;
  wo.prime_steps = o.prime_steps;
  if (!o.plan.empty()) wo.plan = parse_plan(o.plan);
  auto r = straighten_chain(f, wo);
  const auto& p = r.presentation;
  auto names = upper_names(p.weight.size());
  Result res;
  json rel = json::array();
  for (const auto& g : p.relations) rel.push_back(g.to_string(names));
  json steps = json::array();
  for (const auto& s : r.trace.steps) steps.push_back(step_json(s));
  res.data = {{"command", "straighten"},
              {"weights", weight_json(a)},
              {"poly", f.to_string()},
              {"final_weight", weight_json(p.weight)},
              {"generators", p.generator_names},
              {"generator_symbols", names},
              {"relations", rel},
              {"relation_degrees", p.relation_degrees},
              {"steps", steps}};
  res.text = "weight: " + p.weight.to_string() + "\ngenerators:";
  for (std::size_t i = 0; i < names.size(); ++i) res.text += " " + names[i] + "=" + p.generator_names[i];
  res.text += "\nrelation: " + rel[0].get<std::string>() + " (degree " + std::to_string(p.relation_degrees[0]) + ")\n";
  for (std::size_t k = 0; k < r.trace.steps.size(); ++k) res.text += step_text(k + 1, r.trace.steps[k]);
  return res;
}

Result cmd_hilbert_expand(const Options& o) {
  HilbertSeries s{parse_integer_univariate(o.numerator), parse_positive_list(o.weights)};
  auto c = expand(s, o.n);
  Result res;
  res.data = {{"command", "hilbert-expand"},
              {"numerator", bigs(s.numerator)},
              {"denominators", s.denominators},
              {"n", o.n},
              {"series", format_series(s)},
              {"coefficients", bigs(c)}};
  for (std::size_t k = 0; k < c.size(); ++k) res.text += (k ? " " : "") + c[k].str();
  res.text += "\n";
  return res;
}

Result cmd_hilbert_numerator(const Options& o) {
  EllSequence e(o.genus, o.divisor_degree, parse_overrides(o.overrides));
  auto w = parse_positive_list(o.weights);
  auto num = numerator_from_sequence([&](std::int64_t n) { return BigInt(e(n)); }, w, o.hilbert_max_degree);
  Result res;
  res.data = {{"command", "hilbert-numerator"},
              {"genus", o.genus},
              {"divisor_degree", o.divisor_degree},
              {"weights", w},
              {"numerator", bigs(num)},
              {"numerator_text", format_numerator(num)},
              {"relation_degrees", relation_degrees(num)}};
  res.text = format_numerator(num) + "\n";
  return res;
}

Result cmd_hilbert_table(const Options& o) {
  EllSequence e(o.genus, o.divisor_degree, parse_overrides(o.overrides));
  auto ks = parse_positive_list(o.ks);
  auto rows = embedding_report(e, ks, {}, o.hilbert_max_degree);
  Result res;
  json arr = json::array();
  for (const auto& r : rows) {
    arr.push_back({{"k", r.k},
                   {"weights", r.weights},
                   {"numerator", bigs(r.numerator)},
                   {"numerator_text", format_numerator(r.numerator)},
                   {"relation_degrees", r.relation_degrees}});
    std::string w;
    for (auto x : r.weights) w += (w.empty() ? "" : ",") + std::to_string(x);
    std::string rd;
    for (auto x : r.relation_degrees) rd += (rd.empty() ? "" : ",") + std::to_string(x);
    res.text += "k=" + std::to_string(r.k) + " weights=(" + w + ") numerator=" + format_numerator(r.numerator) +
                " relations=" + (rd.empty() ? "-" : rd) + "\n";
  }
  res.data = {{"command", "hilbert-table"}, {"genus", o.genus}, {"divisor_degree", o.divisor_degree}, {"rows", arr}};
  return res;
}

Result cmd_hilbert_discover(const Options& o) {
  EllSequence e(o.genus, o.divisor_degree, parse_overrides(o.overrides));
  auto g = discover_generators([&](std::int64_t n) { return BigInt(e(n)); }, o.max_n);
  Result res;
  json rows = json::array();
  for (const auto& r : g.rows) {
    rows.push_back({{"n", r.n}, {"ell", r.ell}, {"products", r.products}, {"surplus", r.surplus}});
    res.text += "n=" + std::to_string(r.n) + " l=" + std::to_string(r.ell) + " products=" +
                std::to_string(r.products) + " surplus=" + std::to_string(r.surplus) + "\n";
  }
  res.data = {{"command", "hilbert-discover"},
              {"rows", rows},
              {"generator_degrees", g.generator_degrees},
              {"first_relation_degree", g.first_relation_degree ? json(*g.first_relation_degree) : json(nullptr)}};
  std::string w;
  for (auto x : g.generator_degrees) w += (w.empty() ? "" : ",") + std::to_string(x);
  res.text += "generator degrees: (" + w + ")\n";
  if (g.first_relation_degree) res.text += "first relation in degree " + std::to_string(*g.first_relation_degree) + "\n";
  return res;
}

Result cmd_eq(const Options& o) {
  if (o.points.size() != 2) throw UsageError("eq needs exactly two points");
  Weight a = Weight::parse(o.weights);
  Field field = field_from(o.field, o.prime);
  WPoint p = WPoint::parse(o.points[0], a, field);
  WPoint q = WPoint::parse(o.points[1], a, field);
  bool geo = eq_geometric(p, q);
  json rational = nullptr;
  std::string rational_text = "unsupported";
  try {
    bool r = eq_rational(p, q);
    rational = r;
    rational_text = r ? "true" : "false";
  } catch (const Error& e) {
    if (e.code() != Errc::Unsupported) throw;
  }
  json normalized = json::array();
  std::string ntext;
  for (const auto* x : {&p, &q}) {
    auto n = normalize(*x);
    normalized.push_back({{"point", n.point.to_string()}, {"canonical", n.canonical}});
    ntext += " " + n.point.to_string() + (n.canonical ? "" : "*");
  }
  Result res;
  res.data = {{"command", "eq"},
              {"weights", weight_json(a)},
              {"field", field.to_string()},
              {"points", {p.to_string(), q.to_string()}},
              {"geometric", geo},
              {"rational", rational},
              {"normalized", normalized}};
  res.text = "geometric=" + std::string(geo ? "true" : "false") + " rational=" + rational_text + "\nnormalized:" +
             ntext + "\n";
  return res;
}

Result cmd_oracle_run(const Options& o) {
  std::ifstream in(o.manifest);
  if (!in) throw UsageError("cannot read manifest '" + o.manifest + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  auto entries = parse_manifest(buf.str());
  auto outcomes = run_manifest(entries, o.jobs);
  Result res;
  json results = json::array();
  bool all = true;
  for (const auto& oc : outcomes) {
    all = all && oc.pass;
    results.push_back(json::parse(oc.json));
    res.text += std::string(oc.pass ? "PASS" : "FAIL") + " line " + std::to_string(oc.entry.line) + " " +
                oc.entry.verify + " weights=" + oc.entry.weights.to_csv() + " p=" + std::to_string(oc.entry.p) +
                ": " + oc.summary + "\n";
  }
  res.data = {{"command", "oracle-run"}, {"manifest", o.manifest}, {"results", results}, {"all_pass", all}};
  res.code = all ? 0 : 1;
  return res;
}

bool env_json() {
  const char* v = std::getenv("WPS_JSON");
  return v != nullptr && std::string(v) == "1";
}

void emit_error(std::ostream& out, std::ostream& err, bool as_json, const std::string& command,
                const std::string& code, const std::string& message, int exit_code) {
  if (as_json) {
    json j = {{"command", command}, {"error", {{"code", code}, {"message", message}, {"exit", exit_code}}}};
    out << j.dump() << "\n";
  }
  err << "error[" << code << "]: " << message << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact computations on weighted projective spaces", "wps"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Structured JSON output (also WPS_JSON=1)");

  auto* wellform = app.add_subcommand("wellform", "Reduce a weight to a well-formed one, with the step trace");
  wellform->add_option("weights", o.weights, "Comma-separated weights, e.g. 12,20,30")->required();
  wellform->add_flag("--prime-steps", o.prime_steps, "Divide by one prime at a time");
  wellform->add_option("--plan", o.plan, "Explicit steps, e.g. 2,5@0,2@2,3@1 (d@j spares index j)");

  auto* genus_cmd = app.add_subcommand("genus", "Degree-genus formula for a weighted plane curve");
  genus_cmd->add_option("--weights", o.weights, "Three weights");
  genus_cmd->add_option("--degree", o.degree, "Curve degree");
  genus_cmd->add_flag("--sweep", o.sweep, "Tabulate every admissible pairwise-coprime (a, d)");
  genus_cmd->add_option("--max-entry", o.max_entry, "Sweep: largest weight entry")->capture_default_str();
  genus_cmd->add_option("--max-degree", o.max_degree, "Sweep: largest degree")->capture_default_str();
  genus_cmd->add_option("--jobs", o.jobs, "Sweep: worker threads")->capture_default_str();

  auto add_poly_options = [&](CLI::App* sub) {
    sub->add_option("--weights", o.weights, "Comma-separated weights")->required();
    sub->add_option("--poly", o.poly, "Polynomial, e.g. x^5 + y^3 + z^2")->required();
    sub->add_option("--field", o.field, "q (rationals) or p (prime field)")->capture_default_str();
    sub->add_option("--prime", o.prime, "Prime for --field p");
  };
  auto* check = app.add_subcommand("check", "Homogeneity, sufficient generality and vertex membership");
  add_poly_options(check);
  auto* cover = app.add_subcommand("cover", "Straight cover, edge restrictions and branch census");
  add_poly_options(cover);

  auto* truncate = app.add_subcommand("truncate", "Generators of the d-th truncation");
  truncate->add_option("--weights", o.weights, "Comma-separated weights")->required();
  truncate->add_option("--d,-k", o.d, "Truncation degree")->required();
  truncate->add_option("--bound", o.bound, "Degree bound for the generator search");
  truncate->add_option("--poly", o.poly, "Optional relation to carry into the truncation");

  auto* straighten = app.add_subcommand("straighten", "Carry a principal ideal through well-forming");
  add_poly_options(straighten);
  straighten->add_flag("--prime-steps", o.prime_steps, "Divide by one prime at a time");
  straighten->add_option("--plan", o.plan, "Explicit steps, e.g. 2,5@0,2@2,3@1");

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series computations");
  hilbert->require_subcommand(1);
  hilbert->fallthrough();
  auto* h_expand = hilbert->add_subcommand("expand", "Power-series coefficients of N(t)/prod(1-t^a)");
  h_expand->add_option("--weights", o.weights, "Denominator exponents")->required();
  h_expand->add_option("--numerator", o.numerator, "Integer polynomial in t")->capture_default_str();
  h_expand->add_option("-N,--terms", o.n, "Highest power")->capture_default_str();
  auto add_ell_options = [&](CLI::App* sub) {
    sub->add_option("--genus", o.genus, "Curve genus")->capture_default_str();
    sub->add_option("--deg", o.divisor_degree, "Divisor degree")->capture_default_str();
    sub->add_option("--override", o.overrides, "Ambiguous values n:l(nD), repeatable");
  };
  auto* h_num = hilbert->add_subcommand("numerator", "Numerator recovered from the l(nD) sequence");
  add_ell_options(h_num);
  h_num->add_option("--weights", o.weights, "Denominator exponents")->required();
  h_num->add_option("--max-degree", o.hilbert_max_degree, "Largest numerator degree")->capture_default_str();
  auto* h_table = hilbert->add_subcommand("table", "Truncation table over k with discovered weights");
  add_ell_options(h_table);
  h_table->add_option("--k", o.ks, "Truncation indices")->capture_default_str();
  h_table->add_option("--max-degree", o.hilbert_max_degree, "Largest numerator degree")->capture_default_str();
  auto* h_disc = hilbert->add_subcommand("discover", "Generator degrees from l(nD), degree by degree");
  add_ell_options(h_disc);
  h_disc->add_option("--max-n", o.max_n, "Largest degree examined")->capture_default_str();

  auto* eq = app.add_subcommand("eq", "Compare two points of P(a)");
  eq->add_option("--weights", o.weights, "Comma-separated weights")->required();
  eq->add_option("--field", o.field, "q or p")->capture_default_str();
  eq->add_option("--prime", o.prime, "Prime for --field p");
  eq->add_option("points", o.points, "Two points such as 1:0:2")->expected(2)->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force finite-field verifiers");
  oracle_cmd->require_subcommand(1);
  oracle_cmd->fallthrough();
  auto* o_run = oracle_cmd->add_subcommand("run", "Run every instance of a manifest");
  o_run->add_option("--manifest", o.manifest, "Manifest file")->required();
  o_run->add_option("--jobs", o.jobs, "Worker threads")->capture_default_str();

  const bool json_requested =
      env_json() || std::find(args.begin(), args.end(), std::string("--json")) != args.end();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out;
    std::ostringstream help_err;
    int code = app.exit(e, help_out, help_err);
    if (code == 0) {
      out << help_out.str();
      return 0;
    }
    emit_error(out, err, json_requested, "wps", "E_USAGE", e.what(), 2);
    return 2;
  }
  const bool as_json = o.json || env_json();

  std::string command = "wps";
  Result (*handler)(const Options&) = nullptr;
  if (*wellform) {
    command = "wellform", handler = cmd_wellform;
  } else if (*genus_cmd) {
    command = o.sweep ? "genus-sweep" : "genus", handler = cmd_genus;
  } else if (*check) {
    command = "check", handler = cmd_check;
  } else if (*cover) {
    command = "cover", handler = cmd_cover;
  } else if (*truncate) {
    command = "truncate", handler = cmd_truncate;
  } else if (*straighten) {
    command = "straighten", handler = cmd_straighten;
  } else if (*h_expand) {
    command = "hilbert-expand", handler = cmd_hilbert_expand;
  } else if (*h_num) {
    command = "hilbert-numerator", handler = cmd_hilbert_numerator;
  } else if (*h_table) {
    command = "hilbert-table", handler = cmd_hilbert_table;
  } else if (*h_disc) {
    command = "hilbert-discover", handler = cmd_hilbert_discover;
  } else if (*eq) {
    command = "eq", handler = cmd_eq;
  } else if (*o_run) {
    command = "oracle-run", handler = cmd_oracle_run;
  }

  try {
    Result r = handler(o);
    if (as_json) {
      out << r.data.dump() << "\n";
    } else {
      out << r.text;
    }
    return r.code;
  } catch (const UsageError& e) {
    emit_error(out, err, as_json, command, "E_USAGE", e.what(), 2);
    return 2;
  } catch (const Error& e) {
    int code = exit_code_for(e.code());
    emit_error(out, err, as_json, command, std::string(e.code_name()), e.what(), code);
    return code;
  }
}

}  // namespace wps
