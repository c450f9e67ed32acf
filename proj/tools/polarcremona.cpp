// Command-line front end: analyze, polar-degree, monodromy, bounds, catalog.
#include <atomic>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "cremona/analysis.hpp"
#include "cremona/catalog.hpp"
#include "cremona/parse.hpp"

using namespace cremona;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kInput = 1, kHypothesis = 2, kInconsistent = 3 };

struct Globals {
  std::string vars = "x,y,z";
  std::string format = "text";
  std::uint64_t seed = 1;
  int trials = 3;
  std::string modp = "off";
  std::size_t max_basis = GroebnerLimits{}.max_basis;
  unsigned max_degree = GroebnerLimits{}.max_degree;
  int jobs = 1;
  std::string singular_data;
  bool timings = false;
  int max_vars = 8;
  int max_poly_degree = 12;

  bool as_json() const { return format == "json"; }

  AnalysisOptions options() const {
    AnalysisOptions o;
    o.seed = seed;
    o.trials = trials;
    o.modp = modp == "dual" ? ModularMode::Dual : ModularMode::Off;
    o.limits.max_basis = max_basis;
    o.limits.max_degree = max_degree;
    o.timings = timings;
    if (!singular_data.empty()) {
      std::ifstream in(singular_data);
      if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open singular data file " + singular_data);
      json doc;
      try {
        doc = json::parse(in);
      } catch (const json::exception& e) {
        throw Error(ErrorKind::InvalidArgument, std::string("singular data is not valid JSON: ") + e.what());
      }
      o.declarations = parse_singular_data(doc);
    }
    return o;
  }

  std::pair<QPoly, std::vector<std::string>> polynomial(const std::string& text) const {
    std::vector<std::string> names = parse_var_list(vars);
    if (static_cast<int>(names.size()) > max_vars)
      throw Error(ErrorKind::InvalidArgument, "at most " + std::to_string(max_vars) + " variables are allowed");
    QPoly f = parse_poly(text, names);
    int d = homogeneous_degree(f, names);
    if (d > max_poly_degree)
      throw Error(ErrorKind::InvalidArgument, "degree " + std::to_string(d) + " exceeds the limit " +
                                                  std::to_string(max_poly_degree));
    return {f, names};
  }
};

void print(const Globals& g, const json& j, const std::string& text) {
  if (g.as_json()) std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

int cmd_analyze(const Globals& g, const std::string& text) {
  auto [f, names] = g.polynomial(text);
  AnalysisReport r = analyze(f, names, text, g.options());
  print(g, to_json(r), to_text(r));
  if (!r.methods_agree || !r.consolidated) {
    std::cerr << "error: the polar degree methods disagree\n";
    return kInconsistent;
  }
  return kOk;
}

int cmd_polar_degree(const Globals& g, const std::string& text, const std::string& method) {
  auto [f, names] = g.polynomial(text);
  AnalysisOptions o = g.options();
  std::vector<PolarDegreeResult> results;
  if (method == "formula" || method == "all") results.push_back(polar_degree_formula(f, o.seed, o.limits));
  if (method == "oracle" || method == "all")
    results.push_back(polar_degree_fiber_oracle(f, {o.trials, o.seed, o.modp, o.limits}));
  if (method == "tame" || method == "all") results.push_back(polar_degree_tame(f, o.seed, o.limits));
  json j{{"input", text}, {"vars", names}};
  json arr = json::array();
  std::string out;
  for (const auto& r : results) {
    arr.push_back(to_json(r));
    out += to_string(r.method) + " " + std::to_string(r.value) + (r.inconsistent ? "  [" + r.note + "]" : "") + "\n";
  }
  j["results"] = arr;
  Consolidated c = consolidate(results);
  std::optional<long> value = results.size() == 1 ? std::optional<long>(results.front().value) : c.value;
  j["consolidated"] = value ? json(*value) : json(nullptr);
  j["methods_agree"] = c.all_agree;
  if (results.size() > 1) out += "consolidated " + (value ? std::to_string(*value) : std::string("-")) + "\n";
  print(g, j, out);
  bool bad = !c.all_agree || (results.size() == 1 && results.front().inconsistent);
  if (bad) std::cerr << "error: inconsistent polar degree results\n";
  return bad ? kInconsistent : kOk;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

long to_long(const std::string& s) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidArgument, "expected an integer, got '" + s + "'");
  }
}

int cmd_monodromy(const Globals& g, const std::string& bp, const std::string& weights, const std::string& fermat) {
  int given = !bp.empty() + !weights.empty() + !fermat.empty();
  if (given != 1) throw Error(ErrorKind::InvalidArgument, "give exactly one of --bp, --weights, --fermat");
  CycDivisor d;
  std::string source;
  if (!bp.empty()) {
    std::vector<long> a;
    for (const auto& s : split(bp)) a.push_back(to_long(s));
    d = bp_charpoly(a);
    source = "bp " + bp;
  } else if (!weights.empty()) {
    std::vector<Rational> w;
    for (const auto& s : split(weights)) {
      Rational q;
      if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0)
        throw Error(ErrorKind::InvalidArgument, "malformed weight '" + s + "'");
      q.canonicalize();
      w.push_back(q);
    }
    d = wh_charpoly(w);
    source = "weights " + weights;
  } else {
    auto parts = split(fermat);
    if (parts.size() != 2) throw Error(ErrorKind::InvalidArgument, "--fermat expects d,n");
    d = fermat_charpoly(to_long(parts[0]), to_long(parts[1]));
    source = "fermat " + fermat;
  }
  json mult = json::object();
  std::string table;
  for (long k : support_orders(d)) {
    long m = mult_at_order(d, k);
    mult[std::to_string(k)] = m;
    table += "  k=" + std::to_string(k) + "  " + std::to_string(m) + "\n";
  }
  json j = divisor_json(d);
  j["source"] = source;
  j["mult"] = mult;
  j["mu0"] = mu0_from_charpoly(d);
  std::string text = "charpoly  " + d.render() + "\ndegree    " + std::to_string(divisor_degree(d)) +
                     "\nmu0       " + std::to_string(mu0_from_charpoly(d)) +
                     "\nmultiplicity of a primitive k-th root of unity\n" + table;
  print(g, j, text);
  return kOk;
}

int cmd_bounds(const Globals& g, long d, long n, std::optional<long> mu0) {
  if (d < 2 || n < 2) throw Error(ErrorKind::InvalidArgument, "bounds need --degree >= 2 and --dim >= 2");
  long b = primitive_betti(d, n - 2);
  json mult0 = json::object();
  std::string text = "primitive betti b0_" + std::to_string(n - 2) + "  " + std::to_string(b) + "\n";
  for (long k : divisors_of(d)) {
    long m = mult0_reference(d, n, k);
    mult0[std::to_string(k)] = m;
    text += "mult_0 k=" + std::to_string(k) + "  " + std::to_string(m) + "\n";
  }
  json j{{"d", d}, {"n", n}, {"primitive_betti", b}, {"mult0", mult0}};
  if (mu0) {
    PropP1 p = check_prop_p1(static_cast<int>(d), static_cast<int>(n), 0, *mu0);
    Cor37 c = check_cor_37(static_cast<int>(d), static_cast<int>(n), *mu0);
    j["mu0"] = *mu0;
    j["prop_p1_rhs"] = p.rhs;
    j["prop_p1_applicable"] = p.applicable;
    j["cor_37"] = {{"applicable", c.applicable}, {"bound", c.bound}, {"certified", c.certified}};
    text += "prop_p1 rhs  " + std::to_string(p.rhs) + (p.applicable ? "" : " (not applicable)") + "\n";
    text += "cor_37       mu0 < " + std::to_string(c.bound) + "  " +
            (c.applicable ? (c.certified ? "certified" : "not certified") : "not applicable") + "\n";
  } else {
    j["mu0"] = nullptr;
    j["prop_p1_rhs"] = nullptr;
    j["cor_37"] = nullptr;
  }
  print(g, j, text);
  return kOk;
}

int cmd_catalog(const Globals& g, const std::string& action, const std::string& name) {
  if (action == "list") {
    json arr = json::array();
    std::string text;
    for (const auto& e : catalog()) {
      arr.push_back({{"name", e.name},
                     {"polynomial", e.polynomial},
                     {"vars", e.vars},
                     {"description", e.description},
                     {"provenance", e.provenance},
                     {"expected_d_f", e.expected_d_f}});
      text += e.name + "  " + e.polynomial + "  (" + e.description + ")\n";
    }
    print(g, arr, text);
    return kOk;
  }
  if (action != "run") throw Error(ErrorKind::InvalidArgument, "catalog action must be list or run");
  std::vector<const CatalogEntry*> todo;
  if (name.empty() || name == "all") {
    for (const auto& e : catalog()) todo.push_back(&e);
  } else {
    const CatalogEntry* e = find_entry(name);
    if (!e) throw Error(ErrorKind::InvalidArgument, "unknown catalog entry '" + name + "'");
    todo.push_back(e);
  }
  AnalysisOptions o = g.options();
  std::vector<CatalogCheck> checks(todo.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < todo.size();) checks[i] = run_entry(*todo[i], o);
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < std::max(1, g.jobs); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  bool all = true;
  json arr = json::array();
  std::string text;
  for (const auto& c : checks) {
    all = all && c.pass;
    json item{{"name", c.name}, {"pass", c.pass}, {"mismatches", c.mismatches}};
    if (c.report) {
      const auto& r = *c.report;
      item["d_f"] = r.consolidated ? json(*r.consolidated) : json(r.fiber_oracle->value);
      item["report"] = to_json(r);
    }
    if (g.timings) item["seconds"] = c.seconds;
    arr.push_back(item);
    text += (c.pass ? "PASS  " : "FAIL  ") + c.name;
    if (c.report) text += "  d(f)=" + std::to_string(c.report->consolidated.value_or(c.report->fiber_oracle->value));
    text += "\n";
    for (const auto& m : c.mismatches) text += "      " + m + "\n";
  }
  print(g, arr, text);
  return all ? kOk : kInconsistent;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polar degree, Milnor numbers and monodromy of projective hypersurfaces"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--vars", g.vars, "Comma-separated variable names, in order x_0, x_1, ...");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", g.seed, "Seed for frames, fiber targets and line probes");
  app.add_option("--trials", g.trials, "Fiber oracle trials")->check(CLI::Range(1, 1000));
  app.add_option("--modp", g.modp, "Modular fast path for the fiber oracle")->check(CLI::IsMember({"off", "dual"}));
  app.add_option("--max-basis", g.max_basis, "Largest Groebner basis allowed");
  app.add_option("--max-degree", g.max_degree, "Largest Groebner basis element degree allowed");
  app.add_option("--jobs", g.jobs, "Catalog entries run in parallel")->check(CLI::Range(1, 256));
  app.add_option("--singular-data", g.singular_data, "JSON file with singular point declarations");
  app.add_option("--max-vars", g.max_vars, "Largest accepted variable count")->check(CLI::Range(1, kMaxVars - 1));
  app.add_option("--max-poly-degree", g.max_poly_degree, "Largest accepted polynomial degree")
      ->check(CLI::Range(1, 100));
  app.add_flag("--timings", g.timings, "Include wall-clock timings in reports");

  std::string poly, method = "all", bp, weights, fermat, action, entry;
  long degree = 0, dim = 0, mu0 = 0;

  auto* analyze_cmd = app.add_subcommand("analyze", "Full analysis report");
  analyze_cmd->add_option("polynomial", poly)->required();
  auto* pd_cmd = app.add_subcommand("polar-degree", "Polar degree by one or all methods");
  pd_cmd->add_option("polynomial", poly)->required();
  pd_cmd->add_option("--method", method)->check(CLI::IsMember({"formula", "oracle", "tame", "all"}));
  auto* mono_cmd = app.add_subcommand("monodromy", "Characteristic polynomial of a weighted homogeneous germ");
  mono_cmd->add_option("--bp", bp, "Brieskorn-Pham exponents a1,a2,...");
  mono_cmd->add_option("--weights", weights, "Weights u1/v1,u2/v2,...");
  mono_cmd->add_option("--fermat", fermat, "Fermat germ d,n");
  auto* bounds_cmd = app.add_subcommand("bounds", "Primitive Betti numbers and reference multiplicities");
  bounds_cmd->add_option("--degree", degree)->required();
  bounds_cmd->add_option("--dim", dim)->required();
  auto* mu0_opt = bounds_cmd->add_option("--mu0", mu0);
  auto* cat_cmd = app.add_subcommand("catalog", "List or run the example catalog");
  cat_cmd->add_option("action", action)->required()->check(CLI::IsMember({"list", "run"}));
  cat_cmd->add_option("name", entry, "Entry name or all");
  cat_cmd->add_option("--entry", entry, "Entry name or all");
  for (auto* sub : {analyze_cmd, pd_cmd, mono_cmd, bounds_cmd, cat_cmd}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(g, poly);
    if (*pd_cmd) return cmd_polar_degree(g, poly, method);
    if (*mono_cmd) return cmd_monodromy(g, bp, weights, fermat);
    if (*bounds_cmd) return cmd_bounds(g, degree, dim, *mu0_opt ? std::optional<long>(mu0) : std::nullopt);
    if (*cat_cmd) return cmd_catalog(g, action, entry);
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.kind()) << "]: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInconsistent;
  }
  return kOk;
}
