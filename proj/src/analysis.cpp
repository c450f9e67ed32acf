#include "cremona/analysis.hpp"

#include <chrono>
#include <sstream>

#include "cremona/parse.hpp"

namespace cremona {

namespace {

using nlohmann::json;

Rational parse_rational(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) throw Error(ErrorKind::InvalidArgument, "expected a rational given as a string");
  const std::string s = v.get<std::string>();
  std::size_t slash = s.find('/');
  auto digits_ok = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!digits_ok(num) || !digits_ok(den) || den[0] == '-' || den[0] == '+')
    throw Error(ErrorKind::InvalidArgument, "malformed rational '" + s + "'");
  Integer n(num[0] == '+' ? num.substr(1) : num), d(den);
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + s + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

json rational_json(const Rational& q) { return q.get_str(); }

json rationals_json(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(rational_json(q));
  return a;
}

class Stopwatch {
 public:
  explicit Stopwatch(std::optional<std::map<std::string, double>>& sink) : sink_(sink) {}
  template <class F>
  auto time(const std::string& name, F&& fn) {
    auto start = std::chrono::steady_clock::now();
    struct Guard {
      Stopwatch* self;
      std::string name;
      std::chrono::steady_clock::time_point start;
      ~Guard() {
        if (self->sink_)
          (*self->sink_)[name] += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      }
    } guard{this, name, start};
    return fn();
  }

 private:
  std::optional<std::map<std::string, double>>& sink_;
};

}  // namespace

std::string rational_list(const std::vector<Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s;
}

std::vector<SingularDeclaration> parse_singular_data(const json& doc) {
  const json& list = doc.is_object() && doc.contains("singularities") ? doc.at("singularities") : doc;
  if (!list.is_array()) throw Error(ErrorKind::InvalidArgument, "singular data must be a list of declarations");
  std::vector<SingularDeclaration> out;
  for (const auto& item : list) {
    if (!item.is_object() || !item.contains("point"))
      throw Error(ErrorKind::InvalidArgument, "each singular declaration needs a point");
    SingularDeclaration d;
    for (const auto& c : item.at("point")) d.point.push_back(parse_rational(c));
    if (item.contains("label")) d.label = item.at("label").get<std::string>();
    if (item.contains("weights")) {
      std::vector<Rational> w;
      for (const auto& c : item.at("weights")) w.push_back(parse_rational(c));
      d.weights = std::move(w);
    }
    if (item.contains("bp_exponents")) {
      std::vector<long> a;
      for (const auto& c : item.at("bp_exponents")) {
        if (!c.is_number_integer()) throw Error(ErrorKind::InvalidArgument, "bp_exponents must be integers");
        a.push_back(c.get<long>());
      }
      d.bp_exponents = std::move(a);
    }
    if (item.contains("charpoly")) {
      CycDivisor div;
      for (const auto& [k, v] : item.at("charpoly").items()) {
        long m = 0;
        try {
          m = std::stol(k);
        } catch (const std::exception&) {
          throw Error(ErrorKind::InvalidArgument, "charpoly keys must be positive integers");
        }
        div = div + CycDivisor::lambda(m, parse_rational(v));
      }
      d.charpoly = std::move(div);
    }
    out.push_back(std::move(d));
  }
  return out;
}

AnalysisReport analyze(const QPoly& f, const std::vector<std::string>& vars, const std::string& input,
                       const AnalysisOptions& opts) {
  AnalysisReport rep;
  rep.input = input;
  rep.vars = vars;
  rep.frame_seed = opts.seed;
  if (opts.timings) rep.timings.emplace();
  Stopwatch clock(rep.timings);

  rep.hypotheses = clock.time("hypotheses", [&] { return check_hypotheses(f, opts.seed, opts.limits); });
  const HypothesisRecord& hyp = rep.hypotheses;
  const bool full = hyp.reduced && hyp.isolated && hyp.d >= 2;
  if (!full && opts.strict) require_reduced_isolated(hyp);

  OracleOptions oracle{opts.trials, opts.seed, opts.modp, opts.limits};
  rep.fiber_oracle = clock.time("fiber_oracle", [&] { return polar_degree_fiber_oracle(f, oracle); });
  if (!full) {
    rep.conjecture = ConjectureStatus::OutOfHypothesis;
    return rep;
  }

  rep.formula = clock.time("formula", [&] { return polar_degree_formula(f, opts.seed, opts.limits); });
  rep.tame = clock.time("tame_split", [&] { return polar_degree_tame(f, opts.seed, opts.limits); });
  rep.mu_v = rep.formula->mu_v;

  clock.time("singular_points", [&] {
    SingularPoints pts = rational_singular_points(f, opts.limits);
    rep.enumeration_complete = pts.complete;
    for (const auto& p : pts.points)
      rep.singular_points.push_back({p, milnor_number_at(f, p, opts.limits), "", {}, {}, {}, {}});
    for (const auto& decl : opts.declarations) {
      if (static_cast<int>(decl.point.size()) != f.nvars())
        throw Error(ErrorKind::InvalidArgument, "declared point has wrong dimension");
      ProjectivePoint p(decl.point);
      SingularityRecord* rec = nullptr;
      for (auto& r : rep.singular_points)
        if (r.point == p) rec = &r;
      if (!rec) {
        rep.singular_points.push_back({p, milnor_number_at(f, p, opts.limits), "", {}, {}, {}, {}});
        rec = &rep.singular_points.back();
      }
      rec->label = decl.label;
      rec->weights = decl.weights;
      rec->bp_exponents = decl.bp_exponents;
      rec->charpoly = decl.charpoly;
    }
    std::sort(rep.singular_points.begin(), rep.singular_points.end(),
              [](const SingularityRecord& a, const SingularityRecord& b) { return a.point < b.point; });
    for (auto& r : rep.singular_points) r.resolve_charpoly();
    return 0;
  });

  long mu_sum = 0;
  bool all_known = true;
  std::vector<CycDivisor> parts;
  for (const auto& r : rep.singular_points) {
    mu_sum += r.mu;
    if (r.charpoly) parts.push_back(*r.charpoly);
    else all_known = false;
  }
  if (mu_sum > *rep.mu_v)
    throw Error(ErrorKind::InconsistentMu, "singular points carry Milnor number " + std::to_string(mu_sum) +
                                               " but the hypersurface has " + std::to_string(*rep.mu_v));
  if (all_known && mu_sum == *rep.mu_v) {
    rep.delta_v = charpoly_product(parts);
    rep.mu0_v = mu0_from_charpoly(*rep.delta_v);
  }

  std::vector<PolarDegreeResult> all{*rep.formula, *rep.fiber_oracle, *rep.tame};
  Consolidated c = consolidate(all);
  rep.consolidated = c.value;
  rep.methods_agree = c.all_agree;
  if (!rep.consolidated) return rep;

  const long d_f = *rep.consolidated;
  if (rep.mu0_v) {
    rep.prop_p1 = check_prop_p1(hyp.d, hyp.n, d_f, *rep.mu0_v);
    rep.cor_37 = check_cor_37(hyp.d, hyp.n, *rep.mu0_v);
  }
  if (rep.delta_v) rep.thm_t4 = check_thm_t4(hyp.d, hyp.n, *rep.delta_v, d_f);
  rep.conjecture = conjecture_verdict(hyp, d_f);
  return rep;
}

AnalysisReport analyze(const std::string& text, const std::vector<std::string>& vars, const AnalysisOptions& opts) {
  QPoly f = parse_poly(text, vars);
  return analyze(f, vars, text, opts);
}

json divisor_json(const CycDivisor& d) {
  json map = json::object();
  for (const auto& [m, e] : d.exponents()) {
    if (e.get_den() == 1) map[std::to_string(m)] = e.get_num().get_si();
    else map[std::to_string(m)] = e.get_str();
  }
  return json{{"divisor", map}, {"rendered", d.render()}, {"degree", divisor_degree(d)}};
}

json to_json(const PolarDegreeResult& r) {
  json j{{"method", to_string(r.method)}, {"value", r.value}, {"inconsistent", r.inconsistent}};
  if (!r.note.empty()) j["note"] = r.note;
  if (r.frame_seed) j["frame_seed"] = *r.frame_seed;
  if (r.mu_v) j["mu_V"] = *r.mu_v;
  if (r.split) j["split"] = {{"total", r.split->total}, {"mu_on", r.split->mu_on}, {"mu_off", r.split->mu_off}};
  if (r.method == Method::FiberOracle) {
    json trials = json::array();
    for (const auto& t : r.trials)
      trials.push_back({{"target", rationals_json(t.target)},
                        {"saturation_exponent", t.saturation_exponent},
                        {"projective_dim", t.projective_dim},
                        {"degree", t.degree},
                        {"redraws", t.redraws},
                        {"domain", t.domain}});
    j["trials"] = trials;
  }
  return j;
}

json to_json(const AnalysisReport& r) {
  json j;
  j["input"] = r.input;
  j["vars"] = r.vars;
  j["d"] = r.hypotheses.d;
  j["n"] = r.hypotheses.n;
  j["reduced"] = r.hypotheses.reduced;
  j["isolated"] = r.hypotheses.isolated;
  j["singular_locus_dim"] = r.hypotheses.singular_dim;
  j["reducedness_probe"] = {{"lines_tried", r.hypotheses.probe.lines_tried},
                            {"degenerate_lines", r.hypotheses.probe.degenerate_lines},
                            {"one_sided", true}};
  j["frame_seed"] = r.frame_seed;
  j["enumeration_complete"] = r.enumeration_complete;
  json pts = json::array();
  for (const auto& s : r.singular_points) {
    json p{{"point", rationals_json(s.point.coords())}, {"mu", s.mu}};
    p["label"] = s.label.empty() ? json(nullptr) : json(s.label);
    p["mu0"] = s.mu0 ? json(*s.mu0) : json(nullptr);
    p["charpoly"] = s.charpoly ? divisor_json(*s.charpoly) : json(nullptr);
    if (s.bp_exponents) p["bp_exponents"] = *s.bp_exponents;
    if (s.weights) p["weights"] = rationals_json(*s.weights);
    pts.push_back(p);
  }
  j["singular_points"] = pts;
  j["mu_V"] = r.mu_v ? json(*r.mu_v) : json(nullptr);
  j["mu0_V"] = r.mu0_v ? json(*r.mu0_v) : json(nullptr);
  j["delta_V"] = r.delta_v ? divisor_json(*r.delta_v) : json(nullptr);
  auto opt = [](const std::optional<PolarDegreeResult>& p) { return p ? to_json(*p) : json(nullptr); };
  j["d_f"] = {{"formula", opt(r.formula)},
              {"fiber_oracle", opt(r.fiber_oracle)},
              {"tame_split", opt(r.tame)},
              {"consolidated", r.consolidated ? json(*r.consolidated) : json(nullptr)},
              {"methods_agree", r.methods_agree}};
  json bounds;
  bounds["prop_p1"] = r.prop_p1 ? json{{"applicable", r.prop_p1->applicable},
                                       {"lhs", r.prop_p1->lhs},
                                       {"rhs", r.prop_p1->rhs},
                                       {"holds", r.prop_p1->holds}}
                                 : json(nullptr);
  bounds["cor_37"] = r.cor_37 ? json{{"applicable", r.cor_37->applicable},
                                     {"bound", r.cor_37->bound},
                                     {"certified", r.cor_37->certified}}
                               : json(nullptr);
  if (r.thm_t4) {
    json rows = json::array();
    for (const auto& row : r.thm_t4->rows)
      rows.push_back({{"k", row.k},
                      {"mult_V", row.mult_v},
                      {"mult_0", row.mult_0},
                      {"required", row.required},
                      {"holds", row.holds}});
    bounds["thm_t4"] = {{"applicable", r.thm_t4->applicable}, {"rows", rows}};
  } else {
    bounds["thm_t4"] = nullptr;
  }
  j["bounds"] = bounds;
  j["conjecture_status"] = to_string(r.conjecture);
  if (r.timings) {
    json t = json::object();
    for (const auto& [k, v] : *r.timings) t[k] = v;
    j["timings"] = t;
  } else {
    j["timings"] = nullptr;
  }
  return j;
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream out;
  auto num = [](const std::optional<long>& v) { return v ? std::to_string(*v) : std::string("-"); };
  out << "input        " << r.input << "\n";
  out << "d, n         " << r.hypotheses.d << ", " << r.hypotheses.n << "\n";
  out << "reduced      " << (r.hypotheses.reduced ? "yes (probabilistic)" : "no") << "\n";
  out << "isolated     " << (r.hypotheses.isolated ? "yes" : "no") << " (singular locus dim "
      << r.hypotheses.singular_dim << ")\n";
  out << "frame seed   " << r.frame_seed << "\n";
  if (!r.singular_points.empty() || r.mu_v) {
    out << "singular points (" << (r.enumeration_complete ? "complete" : "incomplete") << ")\n";
    for (const auto& s : r.singular_points) {
      out << "  " << s.point.to_string() << "  mu=" << s.mu;
      if (!s.label.empty()) out << "  " << s.label;
      if (s.mu0) out << "  mu0=" << *s.mu0;
      if (s.charpoly) out << "  " << s.charpoly->render();
      out << "\n";
    }
  }
  out << "mu(V)        " << num(r.mu_v) << "\n";
  out << "mu0(V)       " << num(r.mu0_v) << "\n";
  out << "Delta_V      " << (r.delta_v ? r.delta_v->render() : "-") << "\n";
  auto method = [&](const char* name, const std::optional<PolarDegreeResult>& p) {
    out << "d(f) " << name << (p ? std::to_string(p->value) : std::string("-"));
    if (p && p->inconsistent) out << "  [" << p->note << "]";
    out << "\n";
  };
  method("formula      ", r.formula);
  method("fiber oracle ", r.fiber_oracle);
  method("tame split   ", r.tame);
  out << "d(f)         " << num(r.consolidated) << (r.methods_agree ? "" : "  METHODS DISAGREE") << "\n";
  if (r.prop_p1)
    out << "prop_p1      " << r.prop_p1->lhs << " >= " << r.prop_p1->rhs << "  "
        << (r.prop_p1->applicable ? (r.prop_p1->holds ? "holds" : "FAILS") : "not applicable") << "\n";
  if (r.cor_37)
    out << "cor_37       mu0 < " << r.cor_37->bound << "  "
        << (r.cor_37->applicable ? (r.cor_37->certified ? "certified" : "not certified") : "not applicable") << "\n";
  if (r.thm_t4) {
    if (!r.thm_t4->applicable) out << "thm_t4       not applicable\n";
    for (const auto& row : r.thm_t4->rows)
      out << "thm_t4 k=" << row.k << "   " << row.mult_v << " >= " << row.required << "  "
          << (row.holds ? "holds" : "FAILS") << "\n";
  }
  out << "conjecture   " << to_string(r.conjecture) << "\n";
  return out.str();
}

}  // namespace cremona
