#include "lauricella/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lauricella/decomposition.hpp"
#include "lauricella/draws.hpp"
#include "lauricella/hyper_core.hpp"
#include "lauricella/identities.hpp"
#include "lauricella/lauricella_direct.hpp"
#include "lauricella/pde_green.hpp"

namespace lauricella::cli {

namespace {

struct VerbInfo {
  std::string name;
  std::string summary;
  std::vector<std::string> keys;
};

const std::vector<VerbInfo>& verb_table() {
  static const std::vector<VerbInfo> table = {
      {"eval-fa", "evaluate F_A: a, b, c, x required; method=decomposed|direct|recurrent",
       {"a", "b", "c", "x", "method", "depth", "max_degree", "max_terms", "rel_tol"}},
      {"eval-fb", "evaluate F_B: a, b, c, x required; method=decomposed|direct|recurrent, form=consistent|printed",
       {"a", "b", "c", "x", "method", "form", "depth", "max_degree", "max_terms", "rel_tol"}},
      {"verify-lemma1",
       "decomposition vs direct vs recurrent: variant=fa|fb with a, b, c, x, or with n and draws (seeded); "
       "variant=expansion with a, b, c (n = 2) and degree",
       {"variant", "a", "b", "c", "x", "n", "draws", "degree", "form", "tol", "max_degree", "max_terms", "rel_tol"}},
      {"verify-lemma2", "summation identities: variant=fa|fb, a, b required",
       {"variant", "a", "b", "form", "tol", "max_degree", "rel_tol"}},
      {"verify-lemma3", "limits as z -> 0: variant=fa|fb, a, b, c required; z list, route=integral|decomposition",
       {"variant", "a", "b", "c", "z", "route", "tol", "max_degree", "rel_tol"}},
      {"solve-holmgren",
       "boundary quadrature solution: case=constant|linear|power and xi (points split by ';'), or config=<json>",
       {"config", "m", "n", "alpha", "radius", "case", "xi", "panels", "levels", "ratio", "tol", "rel_tol"}},
      {"residual", "finite-difference residual of q0 or G0: x, xi required; field=fundamental|green",
       {"m", "n", "alpha", "radius", "x", "xi", "h", "field", "tol", "rel_tol"}},
  };
  return table;
}

const VerbInfo* find_verb(const std::string& verb) {
  for (const auto& v : verb_table())
    if (v.name == verb) return &v;
  return nullptr;
}

// ---- parameter access ----

double parse_real(const std::string& key, const std::string& text) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) throw UsageError("key '" + key + "': '" + text + "' is not a number");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

class Params {
 public:
  explicit Params(const std::map<std::string, std::string>& p) : p_(p) {}

  bool has(const std::string& key) const { return p_.count(key) != 0; }

  const std::string& text(const std::string& key) const {
    auto it = p_.find(key);
    if (it == p_.end()) throw UsageError("missing required key '" + key + "'");
    return it->second;
  }
  std::string text_or(const std::string& key, const std::string& fallback) const {
    return has(key) ? text(key) : fallback;
  }
  double real(const std::string& key) const { return parse_real(key, text(key)); }
  double real_or(const std::string& key, double fallback) const { return has(key) ? real(key) : fallback; }
  int integer_or(const std::string& key, int fallback) const {
    if (!has(key)) return fallback;
    const double v = real(key);
    if (v != std::floor(v) || std::fabs(v) > 1e9) throw UsageError("key '" + key + "' must be an integer");
    return static_cast<int>(v);
  }
  std::vector<double> list(const std::string& key) const {
    std::vector<double> out;
    for (const auto& item : split(text(key), ',')) out.push_back(parse_real(key, item));
    if (out.empty()) throw UsageError("key '" + key + "' is empty");
    return out;
  }
  std::vector<std::vector<double>> points(const std::string& key) const {
    std::vector<std::vector<double>> out;
    for (const auto& chunk : split(text(key), ';')) {
      std::vector<double> pt;
      for (const auto& item : split(chunk, ',')) pt.push_back(parse_real(key, item));
      out.push_back(pt);
    }
    return out;
  }
  std::string choice(const std::string& key, const std::vector<std::string>& allowed, const std::string& fallback) const {
    const std::string v = text_or(key, fallback);
    if (std::find(allowed.begin(), allowed.end(), v) == allowed.end())
      throw UsageError("key '" + key + "': unknown value '" + v + "'");
    return v;
  }

 private:
  const std::map<std::string, std::string>& p_;
};

Truncation truncation_for(const Params& p, const Options& opts) {
  Truncation t;
  if (auto env = rel_tol_from_env()) t.rel_tol = *env;
  if (opts.rel_tol) t.rel_tol = *opts.rel_tol;
  t.rel_tol = p.real_or("rel_tol", t.rel_tol);
  t.max_total_degree = p.integer_or("max_degree", t.max_total_degree);
  if (p.has("max_terms")) t.max_terms = static_cast<std::int64_t>(p.real("max_terms"));
  t.validate();
  return t;
}

double rel_diff(double u, double v) { return std::fabs(u - v) / std::max(1.0, std::max(std::fabs(u), std::fabs(v))); }

std::int64_t as_int(std::int64_t v) { return v; }

void add_eval(Row& row, const std::string& prefix, const EvalResult& r) {
  row.emplace_back(prefix + "value", r.value);
  row.emplace_back(prefix + "tail_estimate", r.tail_estimate);
  row.emplace_back(prefix + "terms_used", as_int(r.terms_used));
  row.emplace_back(prefix + "converged", r.converged);
}

int status_of(bool converged, bool matched) {
  if (!matched) return kMismatch;
  return converged ? kOk : kNonConvergence;
}

// ---- verbs ----

LauricellaAParams fa_params(const Params& p) {
  LauricellaAParams out;
  out.a = p.real("a");
  out.b = p.list("b");
  out.c = p.list("c");
  return out;
}

LauricellaBParams fb_params(const Params& p) {
  LauricellaBParams out;
  out.a = p.list("a");
  out.b = p.list("b");
  out.c = p.real("c");
  return out;
}

FbCoefficientForm form_of(const Params& p) {
  return p.choice("form", {"consistent", "printed"}, "consistent") == "printed" ? FbCoefficientForm::printed
                                                                                 : FbCoefficientForm::consistent;
}

Report eval_fa(const Params& p, const Truncation& t) {
  const auto params = fa_params(p);
  const auto x = p.list("x");
  const std::string method = p.choice("method", {"decomposed", "direct", "recurrent"}, "decomposed");
  // The decomposition alone only needs |x_k| < 1, but outside the l1 ball the
  // defining series diverges and so does the outer matrix sum.
  double l1 = 0.0;
  for (double v : x) l1 += std::fabs(v);
  if (!(l1 < 1.0)) throw DomainError("F_A needs |x_1| + ... + |x_n| < 1, got " + format_real(l1));
  EvalResult r;
  if (method == "direct") r = fa_direct(params, x, t);
  else if (method == "recurrent") r = fa_recurrent(params, x, t, p.integer_or("depth", -1));
  else r = fa_decomposed(params, x, t);
  Report rep;
  rep.summary.emplace_back("method", method);
  rep.summary.emplace_back("n", as_int(static_cast<std::int64_t>(params.n())));
  add_eval(rep.summary, "", r);
  rep.exit_code = r.converged ? kOk : kNonConvergence;
  return rep;
}

Report eval_fb(const Params& p, const Truncation& t) {
  const auto params = fb_params(p);
  const auto x = p.list("x");
  const std::string method = p.choice("method", {"decomposed", "direct", "recurrent"}, "decomposed");
  EvalResult r;
  if (method == "direct") r = fb_direct(params, x, t);
  else if (method == "recurrent") r = fb_recurrent(params, x, t, p.integer_or("depth", -1));
  else r = fb_decomposed(params, x, t, form_of(p));
  Report rep;
  rep.summary.emplace_back("method", method);
  rep.summary.emplace_back("n", as_int(static_cast<std::int64_t>(params.n())));
  add_eval(rep.summary, "", r);
  rep.exit_code = r.converged ? kOk : kNonConvergence;
  return rep;
}

struct Triangle {
  EvalResult direct, decomposed, recurrent;
  double max_rel_err() const {
    return std::max({rel_diff(direct.value, decomposed.value), rel_diff(direct.value, recurrent.value),
                     rel_diff(decomposed.value, recurrent.value)});
  }
  bool converged() const { return direct.converged && decomposed.converged && recurrent.converged; }
};

Triangle fa_triangle(const LauricellaAParams& params, const std::vector<double>& x, const Truncation& t) {
  return {fa_direct(params, x, t), fa_decomposed(params, x, t), fa_recurrent(params, x, t)};
}

Triangle fb_triangle(const LauricellaBParams& params, const std::vector<double>& x, const Truncation& t,
                     FbCoefficientForm form) {
  return {fb_direct(params, x, t), fb_decomposed(params, x, t, form), fb_recurrent(params, x, t)};
}

Row triangle_row(const Triangle& tri) {
  Row row;
  row.emplace_back("direct", tri.direct.value);
  row.emplace_back("decomposed", tri.decomposed.value);
  row.emplace_back("recurrent", tri.recurrent.value);
  row.emplace_back("max_rel_err", tri.max_rel_err());
  row.emplace_back("converged", tri.converged());
  return row;
}

Report verify_expansion(const Params& p) {
  const auto params = fa_params(p);
  if (params.n() != 2) throw ParameterError("variant=expansion needs n = 2");
  const int degree = p.integer_or("degree", 4);
  const double tol = p.real_or("tol", 1e-13);
  const auto decomposed = fa_decomposed_taylor(params, degree);
  const auto expansion = appell_f2_expansion_taylor(params, degree);
  Report rep;
  double worst = 0.0;
  for (const auto& [e, value] : expansion) {
    const double series = fa_series_coefficient(params, e);
    auto it = decomposed.find(e);
    const double dec = it == decomposed.end() ? 0.0 : it->second;
    const double err = std::max(std::fabs(dec - value), std::fabs(series - value)) / std::fabs(value);
    worst = std::max(worst, err);
    Row row;
    row.emplace_back("exponents", std::vector<double>{double(e[0]), double(e[1])});
    row.emplace_back("decomposed", dec);
    row.emplace_back("expansion", value);
    row.emplace_back("series", series);
    row.emplace_back("rel_err", err);
    rep.rows.push_back(std::move(row));
  }
  rep.summary.emplace_back("variant", std::string("expansion"));
  rep.summary.emplace_back("degree", as_int(degree));
  rep.summary.emplace_back("coefficients", as_int(static_cast<std::int64_t>(expansion.size())));
  rep.summary.emplace_back("max_rel_err", worst);
  rep.summary.emplace_back("tol", tol);
  rep.summary.emplace_back("passed", worst <= tol);
  rep.exit_code = worst <= tol ? kOk : kMismatch;
  return rep;
}

Report verify_lemma1(const Params& p, const Truncation& t, const Options& opts) {
  const std::string variant = p.choice("variant", {"fa", "fb", "expansion"}, "");
  if (variant == "expansion") return verify_expansion(p);
  const double tol = p.real_or("tol", 1e-8);
  const FbCoefficientForm form = form_of(p);
  Report rep;
  rep.summary.emplace_back("variant", variant);
  if (p.has("draws")) {
    const int n = p.integer_or("n", 0);
    const int draws = p.integer_or("draws", 0);
    if (n < 1 || draws < 1) throw UsageError("sweep mode needs n >= 1 and draws >= 1");
    Rng rng(opts.seed);
    double worst = 0.0;
    bool converged = true;
    for (int i = 0; i < draws; ++i) {
      Triangle tri;
      std::vector<double> x;
      if (variant == "fa") {
        const FaDraw d = random_fa_draw(rng, n);
        tri = fa_triangle(d.params, d.x, t);
        x = d.x;
      } else {
        const FbDraw d = random_fb_draw(rng, n);
        tri = fb_triangle(d.params, d.x, t, form);
        x = d.x;
      }
      Row row;
      row.emplace_back("draw", as_int(i));
      row.emplace_back("x", x);
      for (auto& f : triangle_row(tri)) row.push_back(std::move(f));
      rep.rows.push_back(std::move(row));
      worst = std::max(worst, tri.max_rel_err());
      converged = converged && tri.converged();
    }
    rep.summary.emplace_back("n", as_int(n));
    rep.summary.emplace_back("draws", as_int(draws));
    rep.summary.emplace_back("seed", as_int(static_cast<std::int64_t>(opts.seed)));
    rep.summary.emplace_back("max_rel_err", worst);
    rep.summary.emplace_back("converged", converged);
    rep.summary.emplace_back("tol", tol);
    rep.summary.emplace_back("passed", converged && worst <= tol);
    rep.exit_code = status_of(converged, worst <= tol);
    return rep;
  }
  const auto x = p.list("x");
  const Triangle tri = variant == "fa" ? fa_triangle(fa_params(p), x, t) : fb_triangle(fb_params(p), x, t, form);
  rep.summary.emplace_back("n", as_int(static_cast<std::int64_t>(x.size())));
  for (auto& f : triangle_row(tri)) rep.summary.push_back(std::move(f));
  rep.summary.emplace_back("tol", tol);
  rep.summary.emplace_back("passed", tri.converged() && tri.max_rel_err() <= tol);
  rep.exit_code = status_of(tri.converged(), tri.max_rel_err() <= tol);
  return rep;
}

void add_identity(Row& row, const IdentityReport& r) {
  row.emplace_back("lhs", r.lhs);
  row.emplace_back("rhs", r.rhs);
  row.emplace_back("rel_err", r.rel_err);
  row.emplace_back("error_estimate", r.error_estimate);
  row.emplace_back("terms_used", as_int(r.terms_used));
  row.emplace_back("converged", r.converged);
}

Report verify_lemma2(const Params& p, const Truncation& base) {
  const std::string variant = p.choice("variant", {"fa", "fb"}, "");
  Truncation t = base;
  if (!p.has("max_degree")) t.max_total_degree = 60;
  const double tol = p.real_or("tol", 1e-7);
  const double a = p.real("a");
  const auto b = p.list("b");
  const IdentityReport r = variant == "fa" ? lemma2_fa(a, b, t) : lemma2_fb(a, b, t, form_of(p));
  Report rep;
  rep.summary.emplace_back("variant", variant);
  rep.summary.emplace_back("n", as_int(static_cast<std::int64_t>(b.size())));
  rep.summary.emplace_back("max_degree", as_int(t.max_total_degree));
  add_identity(rep.summary, r);
  rep.summary.emplace_back("tol", tol);
  rep.summary.emplace_back("passed", r.converged && r.rel_err <= tol);
  rep.exit_code = status_of(r.converged, r.rel_err <= tol);
  return rep;
}

Report verify_lemma3(const Params& p, const Truncation& t) {
  const std::string variant = p.choice("variant", {"fa", "fb"}, "");
  const Lemma3Route route =
      p.choice("route", {"integral", "decomposition"}, "integral") == "integral" ? Lemma3Route::integral
                                                                                  : Lemma3Route::decomposition;
  const auto z = p.has("z") ? p.list("z") : default_lemma3_z();
  const double tol = p.real_or("tol", 1e-3);
  const IdentityReport r = variant == "fa" ? lemma3_fa(fa_params(p), z, t, route) : lemma3_fb(fb_params(p), z, t, route);
  Report rep;
  rep.summary.emplace_back("variant", variant);
  rep.summary.emplace_back("route", std::string(route == Lemma3Route::integral ? "integral" : "decomposition"));
  add_identity(rep.summary, r);
  rep.summary.emplace_back("monotone", r.monotone);
  rep.summary.emplace_back("tol", tol);
  rep.summary.emplace_back("passed", r.converged && r.rel_err <= tol);
  for (std::size_t i = 0; i < r.z_values.size(); ++i) {
    Row row;
    row.emplace_back("z", r.z_values[i]);
    row.emplace_back("lhs", r.lhs_values[i]);
    row.emplace_back("rel_err", r.errors[i]);
    rep.rows.push_back(std::move(row));
  }
  // a non-monotone error sequence is a failed check, not a convergence failure
  const bool evaluations_converged = r.converged || !r.monotone;
  rep.exit_code = status_of(evaluations_converged, r.monotone && r.rel_err <= tol);
  return rep;
}

PDEConfig pde_config(const Params& p, const nlohmann::json& doc) {
  PDEConfig cfg;
  cfg.m = doc.value("m", cfg.m);
  cfg.n = doc.value("n", cfg.n);
  if (doc.contains("alpha")) cfg.alpha = doc["alpha"].get<std::vector<double>>();
  cfg.radius = doc.value("radius", cfg.radius);
  cfg.m = p.integer_or("m", cfg.m);
  cfg.n = p.integer_or("n", cfg.n);
  if (p.has("alpha")) cfg.alpha = p.list("alpha");
  cfg.radius = p.real_or("radius", cfg.radius);
  cfg.validate();
  return cfg;
}

nlohmann::json load_config(const Params& p) {
  if (!p.has("config")) return nlohmann::json::object();
  std::ifstream in(p.text("config"));
  if (!in) throw ParameterError("cannot open config '" + p.text("config") + "'");
  nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) throw ParameterError("config is not a JSON object");
  return doc;
}

Report solve_holmgren(const Params& p, const Truncation& t) {
  const nlohmann::json doc = load_config(p);
  const PDEConfig cfg = pde_config(p, doc);
  const std::string name = p.has("case") ? p.choice("case", exact_case_names(), "") : doc.value("case", std::string());
  if (name.empty()) throw UsageError("missing required key 'case'");
  const ExactCase ec = exact_case(cfg, name);

  GridSpec spec;
  if (cfg.m == 3) spec.panels = 4;
  if (doc.contains("grid")) {
    const auto& g = doc["grid"];
    spec.panels = g.value("panels", spec.panels);
    spec.levels = g.value("levels", spec.levels);
    spec.ratio = g.value("ratio", spec.ratio);
  }
  spec.panels = p.integer_or("panels", spec.panels);
  spec.levels = p.integer_or("levels", spec.levels);
  spec.ratio = p.real_or("ratio", spec.ratio);

  std::vector<Point> sources;
  if (p.has("xi")) sources = p.points("xi");
  else if (doc.contains("xi")) sources = doc["xi"].get<std::vector<Point>>();
  else throw UsageError("missing required key 'xi'");
  const double tol = p.real_or("tol", doc.value("tol", 1e-3));

  const QuadratureGrid grid = make_grid(cfg, spec);
  std::size_t min_nodes = grid.pieces.front().nodes.size();
  for (const auto& piece : grid.pieces) min_nodes = std::min(min_nodes, piece.nodes.size());

  Report rep;
  double worst = 0.0;
  for (const auto& xi : sources) {
    const double u = holmgren_solve(cfg, ec.data, grid, xi, t);
    const double exact = ec.exact(xi);
    const double err = std::fabs(u - exact) / std::max(std::fabs(exact), 1e-300);
    worst = std::max(worst, err);
    Row row;
    row.emplace_back("xi", xi);
    row.emplace_back("u", u);
    row.emplace_back("exact", exact);
    row.emplace_back("rel_err", err);
    rep.rows.push_back(std::move(row));
  }
  rep.summary.emplace_back("m", as_int(cfg.m));
  rep.summary.emplace_back("n", as_int(cfg.n));
  rep.summary.emplace_back("alpha", cfg.alpha);
  rep.summary.emplace_back("radius", cfg.radius);
  rep.summary.emplace_back("case", name);
  rep.summary.emplace_back("pieces", as_int(static_cast<std::int64_t>(grid.pieces.size())));
  rep.summary.emplace_back("min_nodes_per_piece", as_int(static_cast<std::int64_t>(min_nodes)));
  rep.summary.emplace_back("max_rel_err", worst);
  rep.summary.emplace_back("tol", tol);
  rep.summary.emplace_back("passed", worst <= tol);
  rep.exit_code = worst <= tol ? kOk : kMismatch;
  return rep;
}

Report residual(const Params& p, const Truncation& t) {
  const PDEConfig cfg = pde_config(p, nlohmann::json::object());
  const Point x = p.list("x");
  const Point xi = p.list("xi");
  const double h = p.real_or("h", 1e-3);
  const double tol = p.real_or("tol", 1e-4);
  const std::string field = p.choice("field", {"fundamental", "green"}, "fundamental");
  ScalarField u;
  if (field == "green") u = [&](const Point& y) { return green_function(cfg, y, xi, t); };
  else u = [&](const Point& y) { return fundamental_solution(cfg, y, xi, t); };
  const double res = pde_residual(cfg, u, x, h);
  const double value = u(x);
  Report rep;
  rep.summary.emplace_back("field", field);
  rep.summary.emplace_back("value", value);
  rep.summary.emplace_back("residual", res);
  rep.summary.emplace_back("h", h);
  rep.summary.emplace_back("tol", tol);
  rep.summary.emplace_back("passed", std::fabs(res) <= tol);
  rep.exit_code = std::fabs(res) <= tol ? kOk : kMismatch;
  return rep;
}

Report dispatch(const Command& cmd, const Options& opts) {
  const VerbInfo* info = find_verb(cmd.verb);
  if (!info) throw UsageError("unknown verb '" + cmd.verb + "'");
  for (const auto& [key, value] : cmd.params)
    if (std::find(info->keys.begin(), info->keys.end(), key) == info->keys.end())
      throw UsageError("verb '" + cmd.verb + "' does not take key '" + key + "'");
  const Params p(cmd.params);
  const Truncation t = truncation_for(p, opts);
  if (cmd.verb == "eval-fa") return eval_fa(p, t);
  if (cmd.verb == "eval-fb") return eval_fb(p, t);
  if (cmd.verb == "verify-lemma1") return verify_lemma1(p, t, opts);
  if (cmd.verb == "verify-lemma2") return verify_lemma2(p, t);
  if (cmd.verb == "verify-lemma3") return verify_lemma3(p, t);
  if (cmd.verb == "solve-holmgren") return solve_holmgren(p, t);
  return residual(p, t);
}

Report failure(int code, const std::string& type, const std::string& message) {
  Report rep;
  rep.exit_code = code;
  rep.summary.emplace_back("error_type", type);
  rep.summary.emplace_back("message", message);
  return rep;
}

// ---- serialization ----

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out + "\"";
}

std::string json_real(double v) { return std::isfinite(v) ? format_real(v) : json_string(format_real(v)); }

std::string json_field(const Field& f) {
  struct Visitor {
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(double d) const { return json_real(d); }
    std::string operator()(const std::string& s) const { return json_string(s); }
    std::string operator()(const std::vector<double>& v) const {
      std::string out = "[";
      for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + json_real(v[i]);
      return out + "]";
    }
  };
  return std::visit(Visitor{}, f);
}

std::string json_object(const std::vector<std::pair<std::string, std::string>>& entries, const std::string& indent) {
  if (entries.empty()) return "{}";
  std::string out = "{";
  for (std::size_t i = 0; i < entries.size(); ++i)
    out += (i ? ",\n" : "\n") + indent + "  " + json_string(entries[i].first) + ": " + entries[i].second;
  return out + "\n" + indent + "}";
}

std::string json_row(const Row& row, const std::string& indent) {
  std::vector<std::pair<std::string, std::string>> entries;
  for (const auto& [k, v] : row) entries.emplace_back(k, json_field(v));
  return json_object(entries, indent);
}

template <class Item, class Render>
std::string json_array(const std::vector<Item>& items, const std::string& indent, Render render) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i)
    out += (i ? ",\n" : "\n") + indent + "    " + render(items[i], indent + "    ");
  return out + "\n" + indent + "  ]";
}

std::string json_report(const Report& r, const std::string& indent) {
  std::vector<std::pair<std::string, std::string>> entries;
  for (const auto& [k, v] : r.summary) entries.emplace_back(k, json_field(v));
  if (!r.rows.empty()) entries.emplace_back("rows", json_array(r.rows, indent, json_row));
  if (!r.children.empty()) entries.emplace_back("commands", json_array(r.children, indent, json_report));
  entries.emplace_back("exit_code", std::to_string(r.exit_code));
  return json_object(entries, indent);
}

std::string csv_cell(const Field& f) {
  struct Visitor {
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(double d) const { return format_real(d); }
    std::string operator()(const std::string& s) const {
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string out = "\"";
      for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      return out + "\"";
    }
    std::string operator()(const std::vector<double>& v) const {
      std::string out;
      for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ";" : "") + format_real(v[i]);
      return out;
    }
  };
  return std::visit(Visitor{}, f);
}

void csv_table(std::string& out, const std::vector<Row>& rows) {
  if (rows.empty()) return;
  for (std::size_t i = 0; i < rows.front().size(); ++i) out += (i ? "," : "") + rows.front()[i].first;
  out += "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_cell(row[i].second);
    out += "\n";
  }
}

}  // namespace

const Field* Report::find(const std::string& key) const {
  for (const auto& [k, v] : summary)
    if (k == key) return &v;
  return nullptr;
}

const std::vector<std::string>& verbs() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& info : verb_table()) v.push_back(info.name);
    return v;
  }();
  return names;
}

std::string verb_schema(const std::string& verb) {
  const VerbInfo* info = find_verb(verb);
  if (!info) return full_schema();
  std::string out = "lauricella " + info->name + " key=value ...\n  " + info->summary + "\n  keys:";
  for (const auto& k : info->keys) out += " " + k;
  return out + "\n";
}

std::string full_schema() {
  std::string out = "usage: lauricella [--format json|csv] [--out PATH] [--seed N] [--rel-tol R] <verb> key=value ...\n"
                    "       lauricella batch MANIFEST\n";
  for (const auto& info : verb_table()) out += verb_schema(info.name);
  return out;
}

Command make_command(const std::string& verb, const std::vector<std::string>& tokens) {
  Command cmd;
  cmd.verb = verb;
  for (const auto& tok : tokens) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("expected key=value, got '" + tok + "'");
    const std::string key = tok.substr(0, eq);
    if (!cmd.params.emplace(key, tok.substr(eq + 1)).second) throw UsageError("key '" + key + "' given twice");
  }
  return cmd;
}

Command parse_command(const std::string& line) {
  std::istringstream in(line);
  std::string verb;
  if (!(in >> verb)) throw UsageError("empty command");
  if (!find_verb(verb)) throw UsageError("unknown verb '" + verb + "'");
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  return make_command(verb, tokens);
}

Report run(const Command& cmd, const Options& opts) {
  Report rep;
  try {
    rep = dispatch(cmd, opts);
  } catch (const UsageError& e) {
    rep = failure(kUsage, "UsageError", e.what());
  } catch (const DomainError& e) {
    rep = failure(kDomainError, "DomainError", e.what());
  } catch (const ParameterError& e) {
    rep = failure(kDomainError, "ParameterError", e.what());
  } catch (const SingularityError& e) {
    rep = failure(kDomainError, "SingularityError", e.what());
  } catch (const QuadratureError& e) {
    rep = failure(kDomainError, "QuadratureError", e.what());
  } catch (const NonConvergenceError& e) {
    rep = failure(kNonConvergence, "NonConvergenceError", e.what());
  } catch (const nlohmann::json::exception& e) {
    rep = failure(kDomainError, "ParameterError", std::string("config: ") + e.what());
  } catch (const std::exception& e) {
    rep = failure(kDomainError, "Error", e.what());
  }
  rep.summary.insert(rep.summary.begin(), {"verb", cmd.verb});
  return rep;
}

Report run_batch(std::istream& manifest, const Options& opts) {
  Report rep;
  std::int64_t total = 0, passed = 0, failed = 0, malformed = 0;
  int line_no = 0;
  for (std::string line; std::getline(manifest, line);) {
    ++line_no;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    Row row;
    row.emplace_back("line", as_int(line_no));
    try {
      const Command cmd = parse_command(line);
      Report child = run(cmd, opts);
      ++total;
      const bool ok = child.exit_code == kOk;
      ok ? ++passed : ++failed;
      const Field* msg = child.find("message");
      row.emplace_back("verb", cmd.verb);
      row.emplace_back("status", std::string(ok ? "pass" : "fail"));
      row.emplace_back("exit_code", as_int(child.exit_code));
      row.emplace_back("message", msg ? std::get<std::string>(*msg) : std::string());
      if (!ok && rep.exit_code == kOk) rep.exit_code = child.exit_code;
      child.summary.insert(child.summary.begin(), {"line", as_int(line_no)});
      rep.children.push_back(std::move(child));
    } catch (const UsageError& e) {
      ++malformed;
      row.emplace_back("verb", std::string());
      row.emplace_back("status", std::string("malformed"));
      row.emplace_back("exit_code", as_int(kUsage));
      row.emplace_back("message", std::string(e.what()));
      if (rep.exit_code == kOk) rep.exit_code = kUsage;
    }
    rep.rows.push_back(std::move(row));
  }
  rep.summary.emplace_back("verb", std::string("batch"));
  rep.summary.emplace_back("commands", total);
  rep.summary.emplace_back("passed", passed);
  rep.summary.emplace_back("failed", failed);
  rep.summary.emplace_back("malformed", malformed);
  return rep;
}

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_json(const Report& r) { return json_report(r, "") + "\n"; }

std::string to_csv(const Report& r) {
  std::string out;
  if (!r.rows.empty()) {
    csv_table(out, r.rows);
    out += "\n";
  }
  Row summary = r.summary;
  summary.emplace_back("exit_code", as_int(r.exit_code));
  csv_table(out, {summary});
  return out;
}

std::string serialize(const Report& r, Format f) { return f == Format::csv ? to_csv(r) : to_json(r); }

std::optional<double> rel_tol_from_env() {
  const char* env = std::getenv("LAURICELLA_REL_TOL");
  if (!env || !*env) return std::nullopt;
  const double v = parse_real("LAURICELLA_REL_TOL", env);
  if (!(v > 0.0)) throw UsageError("LAURICELLA_REL_TOL must be positive");
  return v;
}

int main(int argc, char** argv) {
  CLI::App app{"Lauricella F_A / F_B evaluation, identity checks and Holmgren solver"};
  app.require_subcommand(1);
  std::string format = "json";
  std::string out_path;
  std::string config_path;
  std::uint64_t seed = 0;
  double rel_tol = 0.0;
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", out_path, "write the report here instead of stdout");
  app.add_option("--config", config_path, "JSON problem document for solve-holmgren");
  app.add_option("--seed", seed, "seed for randomized sweeps");
  auto* tol_opt = app.add_option("--rel-tol", rel_tol, "series truncation tolerance");

  std::map<std::string, std::vector<std::string>> tokens;
  for (const auto& info : verb_table()) {
    auto* sub = app.add_subcommand(info.name, info.summary);
    sub->add_option("params", tokens[info.name], "key=value pairs");
    sub->fallthrough();
  }
  std::string manifest;
  auto* batch = app.add_subcommand("batch", "run a manifest, one command per line");
  batch->add_option("manifest", manifest, "manifest path")->required();
  batch->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << full_schema();
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << full_schema();
    return kUsage;
  }

  Options opts;
  opts.seed = seed;
  if (*tol_opt) opts.rel_tol = rel_tol;
  try {
    rel_tol_from_env();
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }

  Report rep;
  std::string verb;
  if (batch->parsed()) {
    std::ifstream in(manifest);
    if (!in) {
      std::cerr << "cannot open manifest '" << manifest << "'\n";
      return kUsage;
    }
    rep = run_batch(in, opts);
  } else {
    for (const auto* sub : app.get_subcommands()) verb = sub->get_name();
    Command cmd;
    try {
      cmd = make_command(verb, tokens[verb]);
      if (!config_path.empty() && !cmd.params.emplace("config", config_path).second)
        throw UsageError("config given both as --config and config=");
    } catch (const UsageError& e) {
      std::cerr << e.what() << "\n" << verb_schema(verb);
      return kUsage;
    }
    rep = run(cmd, opts);
    if (rep.exit_code == kUsage) std::cerr << verb_schema(verb);
  }

  const std::string text = serialize(rep, format == "csv" ? Format::csv : Format::json);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write '" << out_path << "'\n";
      return kUsage;
    }
    out << text;
  }
  return rep.exit_code;
}

}  // namespace lauricella::cli
