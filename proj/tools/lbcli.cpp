#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lambdabuild/axioms.hpp"
#include "lambdabuild/error.hpp"
#include "lambdabuild/lambdaspaces.hpp"
#include "lambdabuild/suites.hpp"
#include "lambdabuild/textio.hpp"

using namespace lambdabuild;
using json = nlohmann::ordered_json;

namespace {

struct Common {
  std::size_t n = 0;
  std::uint64_t seed = 1;
  std::size_t samples = 0;
  std::size_t first = 0;
  std::size_t budget = 20000;
  std::size_t probes = 10;
  std::uint64_t pivot_seed = 0;
  std::string format = "text";
};

// An argument starting with '[' is an inline matrix, anything else a file path.
Mat load_matrix(const std::string& arg, std::size_t n) {
  std::string text = arg;
  if (arg.empty() || arg.front() != '[') {
    std::ifstream in(arg);
    if (!in) throw Error(Errc::ParseError, "cannot read matrix file " + arg);
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  Mat m = parse_matrix(text);
  if (n && m.n() != n)
    throw Error(Errc::DimensionMismatch, "expected a " + std::to_string(n) + " x " + std::to_string(n) + " matrix");
  return m;
}

json point_json(const ApartmentPoint& p) {
  json a = json::array();
  for (const auto& c : p.coords()) a.push_back(to_string(c));
  return a;
}

json matrix_json(const Mat& m) { return json::parse(format_matrix(m)); }

void emit(const Common& c, const std::string& text, const json& j) {
  if (c.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

int cmd_val(const Common& c, const std::string& expr) {
  const PuiseuxSeries f = parse_series(expr);
  const std::string v = f.neg_val().str();
  emit(c, v, json{{"series", f.str()}, {"neg_val", v}});
  return 0;
}

int cmd_dist(const Common& c, const std::string& a, const std::string& b) {
  const Mat ga = load_matrix(a, c.n), gb = load_matrix(b, c.n);
  if (ga.n() != gb.n()) throw Error(Errc::DimensionMismatch, "matrices of different size");
  const std::string d = to_string(distance(BuildingPoint(ga), BuildingPoint(gb)));
  emit(c, d, json{{"distance", d}});
  return 0;
}

int cmd_retract(const Common& c, const std::string& a) {
  const ApartmentPoint mu = iwasawa_retract(BuildingPoint(load_matrix(a, c.n)));
  emit(c, mu.str(), json{{"retraction", point_json(mu)}});
  return 0;
}

int cmd_cartan(const Common& c, const std::string& a) {
  const ApartmentPoint lam = cartan_valuations(load_matrix(a, c.n));
  emit(c, lam.str(), json{{"cartan", point_json(lam)}});
  return 0;
}

int cmd_bruhat(const Common& c, const std::string& a) {
  const Mat g = load_matrix(a, c.n);
  const BruhatDecomposition d = bruhat(g, c.pivot_seed);
  std::ostringstream perm;
  for (std::size_t i = 0; i < d.perm.size(); ++i) perm << (i ? "," : "") << d.perm[i] + 1;
  std::ostringstream text;
  text << "b1: " << d.b1.str() << "\nn: " << d.nperm.str() << "\nb2: " << d.b2.str() << "\nperm: [" << perm.str()
       << "]\nexact: " << (d.exact ? "yes" : "no");
  json j{{"b1", matrix_json(d.b1)}, {"n", matrix_json(d.nperm)}, {"b2", matrix_json(d.b2)},
         {"perm", "[" + perm.str() + "]"}, {"exact", d.exact}};
  emit(c, text.str(), j);
  return 0;
}

json overlap_json(const OverlapDescription& od) {
  json bounds = json::object();
  for (const auto& [key, v] : od.bounds)
    bounds["(" + std::to_string(key.first + 1) + "," + std::to_string(key.second + 1) + ")"] = v.str();
  json probes = json::array();
  for (const auto& p : od.probes)
    probes.push_back({{"kind", p.kind}, {"lambda", point_json(p.lambda)}, {"in_bounds", p.in_bounds}, {"oracle", p.oracle},
                      {"chart_ok", p.chart_ok}});
  return json{{"w", od.w.str()}, {"bounds", bounds}, {"witness", point_json(od.witness)}, {"probes", probes}};
}

std::optional<OverlapDescription> overlap_for(const Common& c, const Mat& g) {
  WitnessBudget budget;
  budget.max_candidates = c.budget;
  auto w = find_overlap_witness(g, budget);
  if (!w) return std::nullopt;
  return chart_overlap(g, *w, c.probes, c.seed);
}

bool probes_agree(const OverlapDescription& od) {
  for (const auto& p : od.probes)
    if (p.in_bounds != p.oracle || (p.in_bounds && !p.chart_ok)) return false;
  return true;
}

int cmd_overlap(const Common& c, const std::string& a) {
  const Mat g = load_matrix(a, c.n);
  auto od = overlap_for(c, g);
  if (!od) {
    const bool empty = !certify_overlap(g);
    const std::string msg = empty ? "overlap is empty" : "no witness within budget";
    emit(c, msg, json{{"witness", nullptr}, {"empty", empty}});
    return empty ? 0 : 1;
  }
  emit(c, od->str(), overlap_json(*od));
  return probes_agree(*od) ? 0 : 1;
}

int cmd_a4(const Common& c, const std::string& a) {
  const Mat g = load_matrix(a, c.n);
  const A4Witness w = a4_witness(g);
  const A4Check chk = verify_a4(g, w);
  std::ostringstream text;
  text << "chart: " << w.chart.str() << "\ns: " << w.s.str() << "\ns': " << w.s_prime_base.str() << "\nprobes: " << chk.probes
       << ", failures: " << chk.failures << (w.exact ? "" : "\n(inexact Bruhat pivots)");
  emit(c, text.str(),
       json{{"chart", matrix_json(w.chart)}, {"s", point_json(w.s)}, {"s_prime", point_json(w.s_prime_base)},
            {"exact", w.exact}, {"probes", chk.probes}, {"failures", chk.failures}});
  return chk.failures ? 1 : 0;
}

int cmd_ec(const Common& c, const std::string& a) {
  const Mat g = load_matrix(a, c.n);
  auto od = overlap_for(c, g);
  if (!od) throw Error(Errc::NotAHalfApartment, "no overlap witness found");
  const ExchangeWitness ec = ec_witness(g, *od);
  const ExchangeCheck chk = verify_ec(g, ec, c.probes, c.seed);
  std::ostringstream text;
  text << "h: " << ec.h.str() << "\nhalf-apartment: lambda_" << ec.i + 1 << " - lambda_" << ec.j + 1
       << " >= " << to_string(ec.level) << "\nprobes: " << chk.probes << ", failures: " << chk.failures;
  for (const auto& f : chk.failure_log) text << "\n  " << f;
  emit(c, text.str(),
       json{{"h", matrix_json(ec.h)}, {"i", ec.i + 1}, {"j", ec.j + 1}, {"level", to_string(ec.level)},
            {"probes", chk.probes}, {"failures", chk.failures}, {"failure_log", chk.failure_log}});
  return chk.failures ? 1 : 0;
}

int cmd_tree_dist(const Common& c, const std::string& p, const std::string& q) {
  const std::string d = to_string(tree_distance(parse_hpoint(p), parse_hpoint(q)));
  emit(c, d, json{{"tree_distance", d}});
  return 0;
}

int cmd_suite(const Common& c, const std::string& name) {
  if (!has_suite(name)) throw Error(Errc::ParseError, "unknown suite " + name);
  SuiteOptions o;
  o.n = c.n;
  o.seed = c.seed;
  o.samples = c.samples;
  o.first = c.first;
  o.budget = c.budget;
  o.probes = c.probes;
  const SuiteReport r = run_suite(name, o);
  std::cout << (c.format == "json" ? format_report_json(r) : format_report_text(r));
  return r.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the affine building of SL(n) over Puiseux series"};
  app.require_subcommand(1);
  Common c;
  app.add_option("--n", c.n, "matrix size (checked against inputs; suite dimension)");
  app.add_option("--seed", c.seed, "64-bit seed");
  app.add_option("--samples", c.samples, "suite sample count (0: suite default)");
  app.add_option("--first", c.first, "index of the first suite sample");
  app.add_option("--budget", c.budget, "witness search candidate budget");
  app.add_option("--probes", c.probes, "extra probes per check");
  app.add_option("--pivot-seed", c.pivot_seed, "Bruhat pivot order (0: column by column)");
  app.add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));
  // Options may also follow the verb.
  app.fallthrough();

  std::string a, b;
  std::function<int()> action;
  auto verb = [&](const std::string& name, const std::string& help, std::vector<std::pair<std::string, std::string*>> args,
                  std::function<int()> fn) {
    auto* sub = app.add_subcommand(name, help);
    for (auto& [label, target] : args) sub->add_option(label, *target)->required();
    sub->callback([&action, fn] { action = fn; });
  };
  verb("val", "leading exponent (-v) of a series", {{"series", &a}}, [&] { return cmd_val(c, a); });
  verb("dist", "building distance between g.o and other.o", {{"g", &a}, {"other", &b}}, [&] { return cmd_dist(c, a, b); });
  verb("retract", "Iwasawa retraction of g.o", {{"g", &a}}, [&] { return cmd_retract(c, a); });
  verb("cartan", "Cartan valuation vector of g", {{"g", &a}}, [&] { return cmd_cartan(c, a); });
  verb("bruhat", "Bruhat decomposition g = b1 n b2", {{"g", &a}}, [&] { return cmd_bruhat(c, a); });
  verb("overlap", "overlap of A and g.A with its chart transition", {{"g", &a}}, [&] { return cmd_overlap(c, a); });
  verb("a4", "common chart for subsectors of s_0 and g.s_0", {{"g", &a}}, [&] { return cmd_a4(c, a); });
  verb("ec", "exchange a half-apartment overlap", {{"g", &a}}, [&] { return cmd_ec(c, a); });
  verb("tree-dist", "distance in the Lambda-tree of the hyperbolic plane", {{"p", &a}, {"q", &b}},
       [&] { return cmd_tree_dist(c, a, b); });
  verb("suite", "run a named property suite", {{"name", &a}}, [&] { return cmd_suite(c, a); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    return action();
  } catch (const ParseError& e) {
    std::cerr << "ParseError at position " << e.position() << ": expected " << e.expected() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << e.name() << ": " << e.what() << "\n";
    return 2;
  }
}
