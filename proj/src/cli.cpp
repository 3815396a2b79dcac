#include "symspec/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <ostream>
#include <map>

#include "CLI11.hpp"
#include "symspec/cayley.hpp"
#include "symspec/families.hpp"
#include "symspec/io.hpp"
#include "symspec/numeric.hpp"
#include "symspec/repr.hpp"
#include "symspec/structure.hpp"
#include "symspec/verify.hpp"

namespace symspec::cli {
namespace {

using nlohmann::json;

const std::vector<std::string> kCommands = {"decompose", "linear",   "spectrum", "global",
                                            "structure", "families", "maxpf",    "verify"};

[[noreturn]] void usage(const std::string& message) { throw UsageError(message); }

void need(bool ok, const std::string& message) {
  if (!ok) usage(message);
}

int input_count(const RunConfig& c) {
  return static_cast<int>(c.specs.size() + c.set_files.size() + c.function_files.size());
}

// Collects named invariants for the report.
struct Checks {
  std::vector<Check> list;

  void error(const std::string& name, double value, double tolerance, const std::string& detail = {}) {
    Check c;
    c.name = name;
    c.value = value;
    c.tolerance = tolerance;
    c.cases = 1;
    c.passed = std::isfinite(value) && value <= tolerance;
    c.detail = detail;
    list.push_back(std::move(c));
  }
  void truth(const std::string& name, bool holds, const std::string& detail = {}) {
    error(name, holds ? 0.0 : 1.0, 0.0, detail);
  }
  json to_json() const {
    json out = json::array();
    for (const auto& c : list) out.push_back(symspec::to_json(c));
    return out;
  }
  std::vector<std::string> failures() const {
    std::vector<std::string> out;
    for (const auto& c : list)
      if (!c.passed) out.push_back(c.name);
    return out;
  }
};

struct Input {
  std::string label;
  std::optional<SetFamily> set;
  std::optional<FamilySpec> spec;
  GroupFunction function;
};

int resolve_degree(const RunConfig& c) {
  if (c.degree) return *c.degree;
  // A set or function file carries its own degree.
  if (!c.set_files.empty()) return read_set_file(c.set_files.front()).degree();
  if (!c.function_files.empty()) return read_function_file(c.function_files.front()).degree();
  usage("--n is required for this input");
}

std::vector<Input> load_inputs(const RunConfig& c, int n) {
  std::vector<Input> out;
  for (const auto& path : c.set_files) {
    Input in;
    in.label = path;
    in.set = read_set_file(path);
    need(in.set->degree() == n, path + ": degree " + std::to_string(in.set->degree()) + " differs from --n " +
                                    std::to_string(n));
    in.function = in.set->indicator();
    out.push_back(std::move(in));
  }
  for (const auto& text : c.specs) {
    Input in;
    in.spec = parse_family_spec(text, n);
    in.label = in.spec->to_string();
    in.set = build_family(*in.spec);
    in.function = in.set->indicator();
    out.push_back(std::move(in));
  }
  for (const auto& path : c.function_files) {
    Input in;
    in.label = path;
    in.function = read_function_file(path);
    need(in.function.degree() == n, path + ": degree differs from --n");
    out.push_back(std::move(in));
  }
  return out;
}

std::vector<std::string> labels(const std::vector<Input>& in) {
  std::vector<std::string> out;
  for (const auto& i : in) out.push_back(i.label);
  return out;
}

const SetFamily& require_set(const Input& in, const std::string& command) {
  if (!in.set) usage(command + " needs a set (--set-file or --spec), not a function file");
  return *in.set;
}

// E f(σ) g(τ) h(στ) by the double loop.
double triple_expectation_oracle(const GroupFunction& f, const GroupFunction& g, const GroupFunction& h) {
  const int n = f.degree();
  std::vector<Permutation> perms;
  for (const auto& p : enumerate(n)) perms.push_back(p);
  double s = 0.0;
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b)
      s += f[a] * g[b] * h[compose_rank(perms[a].images().data(), perms[b].images().data(), n)];
  return s / (static_cast<double>(perms.size()) * static_cast<double>(perms.size()));
}

// ---------------------------------------------------------------------------

json cmd_decompose(const RunConfig& c, int n, Checks& checks) {
  const auto in = load_inputs(c, n);
  const auto& f = in.front().function;
  const auto rows = isotypic_report(f, c.slow);
  json table = json::array();
  std::vector<double> by_level(n, 0.0);
  double total = 0.0;
  for (const auto& row : rows) {
    table.push_back({{"lambda", row.lambda.parts},
                     {"transpose", row.transpose.parts},
                     {"level", row.level},
                     {"reduced_level", row.reduced_level},
                     {"dim", row.dim},
                     {"weight", row.weight}});
    by_level[row.level] += row.weight;
    total += row.weight;
  }
  const double norm_sq = inner_product(f, f);
  const double scale = std::max(1.0, norm_sq);
  checks.error("repr.isotypic_completeness", std::abs(total - norm_sq), 1e-8 * scale);

  const int dmax = std::min(c.d.value_or(1), n - 1);
  json levels = json::array();
  for (int d = 0; d < n; ++d) {
    json row = {{"d", d}, {"weight", by_level[d]}};
    if (d <= dmax) {
      const auto proj = level_project(f, d, LevelPath::automatic, c.slow);
      const double w = inner_product(proj, proj);
      row["weight_from_level_projection"] = w;
      checks.error("repr.level_matches_isotypic[d=" + std::to_string(d) + "]", std::abs(w - by_level[d]), 1e-8 * scale);
    }
    levels.push_back(row);
  }
  return {{"input", in.front().label}, {"norm_sq", norm_sq}, {"isotypic", table}, {"levels", levels}};
}

json cmd_linear(const RunConfig& c, int n, Checks& checks) {
  const auto in = load_inputs(c, n);
  need(in.size() == 1 || in.size() == 3, "linear takes one input, or three for the convolution formula");
  json result;
  std::vector<CoeffMatrix> mats;
  json per_input = json::array();
  for (const auto& i : in) {
    const auto m = normalized_form(i.function);
    const auto lin = evaluate_linear(m);
    const double direct = inner_product(lin, lin);
    const double parseval = m.sum_squares() / (n - 1);
    const double margin = std::max(m.a.rowwise().sum().cwiseAbs().maxCoeff(), m.a.colwise().sum().cwiseAbs().maxCoeff());
    checks.error("linear.normalized_margins", margin, kNormalizedTolerance);
    checks.error("linear.parseval", std::abs(direct - parseval), 1e-9 * std::max(1.0, direct));
    json entry = {{"input", i.label}, {"matrix", to_json(m)}, {"mean", expectation(i.function)},
                  {"level_one_norm_sq", direct}, {"parseval", parseval}};
    if (n <= kMaxTripleDegree) {
      const double err = max_abs_diff(lin, level_project(i.function, 1));
      checks.error("linear.evaluate_equals_level_one", err, 1e-9);
    }
    const auto one_sided = one_sided_parseval(m);
    checks.truth("linear.one_sided_parseval", one_sided.holds);
    entry["one_sided_parseval"] = to_json(one_sided);
    const double eps = c.eps.value_or(1.0 / n);
    const auto ratio = level_one_ratio(i.function, eps);
    entry["level_one_ratio"] = {{"eps", eps}, {"x2", ratio.x2}, {"mean", ratio.mean}, {"eps2", ratio.eps2},
                                {"ratio", ratio.ratio}};
    per_input.push_back(entry);
    mats.push_back(m);
  }
  result["inputs"] = per_input;
  if (mats.size() == 3) {
    const double term = triple_linear_term(mats[0], mats[1], mats[2]);
    json conv = {{"term", term}};
    const auto bound = matrix_triple_bound(mats[1], mats[0], mats[2]);
    conv["matrix_triple_bound"] = to_json(bound);
    checks.truth("linear.matrix_triple_bound", bound.holds);
    if (n <= 6) {
      const auto f = evaluate_linear(mats[0]), g = evaluate_linear(mats[1]), h = evaluate_linear(mats[2]);
      const auto t = triple_expectation_oracle(f, g, h);
      conv["enumeration"] = t;
      checks.error("linear.convolution_formula", std::abs(term - t), 1e-9);
    }
    result["convolution"] = conv;
  }
  return result;
}

json cmd_spectrum(const RunConfig& c, int n, Checks& checks) {
  const auto in = load_inputs(c, n);
  const auto& f = in.front().function;
  const int d = c.d.value_or(1);
  need(d >= 0 && d <= n - 1, "--d must lie in [0, n-1]");
  const auto report = spectral_report(f, d, RadiusMethod::automatic, c.slow);
  checks.error("cayley.trace_identity", std::abs(report.trace - report.norm_sq), 1e-9 * std::max(1.0, report.norm_sq));
  bool mult = true;
  for (const auto& p : report.partitions) mult = mult && p.multiplicity_ok;
  checks.truth("cayley.eigen_multiplicity", mult);
  double worst = 0.0;
  for (const auto& l : report.levels) worst = std::max(worst, std::abs(l.r - l.r_from_projection));
  checks.error("cayley.radius_from_projection", worst, 1e-9);
  json out = to_json(report);
  out["input"] = in.front().label;
  return out;
}

json cmd_global(const RunConfig& c, int n, Checks& checks) {
  const auto in = load_inputs(c, n);
  const auto& a = require_set(in.front(), "global");
  const int t = c.t.value_or(1);
  const auto g = globalness(a, t);
  bool monotone = true;
  for (std::size_t s = 1; s < g.max_density_by_size.size(); ++s)
    monotone = monotone && g.max_density_by_size[s] >= g.max_density_by_size[s - 1] - 1e-12;
  checks.truth("structure.globalness_monotone", monotone);
  json out = {{"input", in.front().label}, {"globalness", to_json(g)}};
  if (!a.empty() && n >= 2) out["bump_search"] = to_json(density_bump_search(a, c.r.value_or(1)));
  return out;
}

json cmd_structure(const RunConfig& c, int n, Checks& checks) {
  const auto in = load_inputs(c, n);
  need(in.size() == 1 || in.size() == 3, "structure takes one set (A = B = C) or three sets A, B, C");
  const SetFamily& a = require_set(in[0], "structure");
  const SetFamily& b = in.size() == 3 ? require_set(in[1], "structure") : a;
  const SetFamily& cc = in.size() == 3 ? require_set(in[2], "structure") : a;
  const auto sn = DensityConvention::over_Sn;
  const double delta = c.delta.value_or(kDefaultDelta);
  const Parameters p = c.R ? literal_parameters(n, *c.R, a.measure(sn), b.measure(sn), cc.measure(sn))
                           : parameters_for(a, b, cc, delta);
  json out = {{"inputs", labels(in)}, {"parameters", to_json(p)}};
  const SetFamily* sets[3] = {&a, &b, &cc};
  const char* names[3] = {"A", "B", "C"};
  const Role roles[3] = {Role::a, Role::b, Role::c};
  json roles_json = json::object();
  for (int k = 0; k < 3; ++k) {
    const auto& s = *sets[k];
    const double eps = c.eps.value_or(role_eps(p, roles[k]));
    const auto sys = c.eps ? star_system(s, eps, p.delta) : star_system(s, p, roles[k]);
    const auto stars = large_stars(sys);
    json star_list = json::array();
    for (const auto& st : stars) star_list.push_back(st.to_string());
    const auto l1 = l1_bound(s, sys, p, roles[k]);
    checks.truth(std::string("structure.star_sum_bound[") + names[k] + "]", l1.star_sum_holds);
    if (l1.gate_holds) checks.truth(std::string("structure.l1_bound[") + names[k] + "]", l1.holds);
    json role = {{"eps", eps},
                 {"split", to_json(decompose_coeffs(sys.matrix, eps))},
                 {"stars", to_json(sys)},
                 {"large_stars", star_list},
                 {"l1_bound", to_json(l1)}};
    if (stars.size() <= 64 && eps > 0.0) {
      const auto dj = star_disjointness_check(s, stars, eps, p.delta);
      checks.truth(std::string("structure.star_bonferroni[") + names[k] + "]", dj.bonferroni_holds);
      checks.truth(std::string("structure.star_pair_bound[") + names[k] + "]", dj.pair_bound_holds);
      if (dj.hypotheses_hold)
        checks.truth(std::string("structure.star_disjointness_lemma[") + names[k] + "]", dj.conclusion_holds);
      role["disjointness"] = to_json(dj);
    }
    roles_json[names[k]] = role;
    if (in.size() == 1) break;  // B and C repeat A
  }
  out["roles"] = roles_json;
  const auto terms = counting_terms(a, b, cc, p);
  checks.error("structure.counting_reassembly", terms.reassembly_error, 1e-9);
  checks.truth("structure.counting_signs", terms.signs_ok);
  for (const auto& lb : terms.lower_bounds) checks.truth("structure.simple_lower_bound[" + lb.name + "]", lb.holds);
  out["counting"] = to_json(terms);
  return out;
}

// (avoid I→J̄, star x→I, star x→J): product-free by construction.
bool is_avoid_star_triple(const std::vector<Input>& in) {
  if (in.size() != 3 || !in[0].spec || !in[1].spec || !in[2].spec) return false;
  const auto &a = *in[0].spec, &b = *in[1].spec, &c = *in[2].spec;
  auto same = [](std::vector<int> u, std::vector<int> v) {
    std::sort(u.begin(), u.end());
    std::sort(v.begin(), v.end());
    return u == v;
  };
  return a.kind == FamilyKind::avoid && b.kind == FamilyKind::star && c.kind == FamilyKind::star && b.x == c.x &&
         same(a.I, b.I) && same(a.J, c.I) && a.ambient == b.ambient && b.ambient == c.ambient;
}

json cmd_families(const RunConfig& c, int n, Checks& checks) {
  const auto in = load_inputs(c, n);
  need(in.size() == 1 || in.size() == 3, "families takes one family, or three for a triple (A, B, C)");
  json out;
  json members = json::array();
  for (const auto& i : in) {
    const auto& s = require_set(i, "families");
    json m;
    if (i.spec) {
      m = to_json(measure_family(*i.spec));
    } else {
      m = {{"size", s.size()},
           {"mu", s.measure()},
           {"mu_Sn", s.measure(DensityConvention::over_Sn)},
           {"mu_An", s.measure(DensityConvention::over_An)}};
    }
    m["family"] = i.label;
    members.push_back(m);
  }
  if (in.size() == 1) {
    out = members.front();
  } else {
    out["members"] = members;
  }
  if (c.certify) {
    const auto& a = *in[0].set;
    const auto& b = in.size() == 3 ? *in[1].set : a;
    const auto& cc = in.size() == 3 ? *in[2].set : a;
    const auto cert = is_product_free(a, b, cc);
    out["product_free"] = cert.product_free;
    out["checked_pairs"] = cert.checked_pairs;
    out["witness"] = cert.witness ? to_json(*cert.witness) : json(nullptr);
    out["product_count"] = count_products(a, b, cc).count;
    if (in.size() == 1 && in[0].spec && in[0].spec->kind == FamilyKind::extremal)
      checks.truth("families.extremal_product_free", cert.product_free);
    if (is_avoid_star_triple(in)) checks.truth("families.avoid_star_product_free", cert.product_free);
    if (in.size() == 3) {
      json forms = json::array();
      bool agree = true;
      for (const auto& t : equivalent_triples(a, b, cc)) {
        const bool pf = is_product_free(t.a, t.b, t.c).product_free;
        agree = agree && pf == cert.product_free;
        forms.push_back({{"form", t.form}, {"product_free", pf}});
      }
      out["equivalent_triples"] = forms;
      checks.truth("families.equivalent_triples_agree", agree);
    }
  }
  return out;
}

json cmd_maxpf(const RunConfig& c, int n, Checks& checks) {
  MaxPFOptions opt;
  opt.seed = c.seed;
  opt.budget = c.budget;
  if (c.mode == "exact") opt.mode = SearchMode::exact;
  else if (c.mode == "heuristic") opt.mode = SearchMode::heuristic;
  else opt.mode = n <= kMaxExactPFDegree ? SearchMode::exact : SearchMode::heuristic;
  const auto r = max_product_free(n, opt);
  const auto recheck = is_product_free(r.best);
  checks.truth("families.maxpf_certificate", recheck.product_free && r.best.within_An());
  if (opt.mode == SearchMode::exact) checks.truth("families.maxpf_optimal", r.optimal, "exact search within budget");
  return to_json(r);
}

json cmd_verify(const RunConfig& c, int n, Checks& checks) {
  VerifyOptions opt;
  opt.degree = n;
  opt.suite = c.suite;
  opt.seed = c.seed;
  opt.slow = c.slow;
  auto report = run_verify(opt);
  for (auto& ch : report.checks) checks.list.push_back(ch);
  json out = to_json(report);
  out.erase("checks");  // the envelope carries them
  return out;
}

std::string timestamp_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void flatten(const json& j, const std::string& prefix, std::string& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
  } else {
    std::string value = j.is_string() ? j.get<std::string>() : j.dump();
    if (value.find_first_of(",\"\n") != std::string::npos) {
      std::string quoted = "\"";
      for (char ch : value) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      value = quoted + "\"";
    }
    out += prefix + "," + value + "\n";
  }
}

}  // namespace

void validate(const RunConfig& c) {
  need(std::find(kCommands.begin(), kCommands.end(), c.command) != kCommands.end(),
       "unknown subcommand '" + c.command + "'");
  need(c.format == "json" || c.format == "csv", "--format must be json or csv");
  if (c.threads) need(*c.threads >= 1 && *c.threads <= 256, "--threads must lie in [1, 256]");
  if (c.degree) need(*c.degree >= 1 && *c.degree <= kMaxDenseDegree, "--n must lie in [1, 10]");
  if (c.delta) need(*c.delta > 0.0 && *c.delta < 1.0, "--delta must lie in (0, 1)");
  if (c.R) need(*c.R > 0.0, "--R must be positive");
  if (c.eps) need(*c.eps > 0.0, "--eps must be positive");
  if (c.t) need(*c.t >= 1 && *c.t <= kMaxGlobalnessSize, "--t must lie in [1, 4]");
  if (c.r) need(*c.r == 1, "--r: only r = 1 is supported (restrictions of size <= 4)");
  if (c.d) need(*c.d >= 0, "--d must be nonnegative");

  const int inputs = input_count(c);
  const std::string& cmd = c.command;
  const bool takes_input = cmd != "maxpf" && cmd != "verify";
  if (takes_input) {
    need(inputs >= 1, cmd + " needs an input: --set-file, --spec or --function-file");
    need(c.specs.empty() || c.degree, "--spec needs --n");
  } else {
    need(inputs == 0, cmd + " takes no input files or specs");
  }
  if (cmd == "decompose" || cmd == "spectrum" || cmd == "global") need(inputs == 1, cmd + " takes exactly one input");
  if (cmd == "global" || cmd == "structure" || cmd == "families")
    need(c.function_files.empty(), cmd + " works on sets; use --set-file or --spec");

  const auto n = c.degree;
  if (cmd == "decompose" && n) {
    need(*n <= kMaxTripleDegree || (c.slow && *n <= kSlowIsotypicDegree),
         "decompose needs n <= 7 (n = 8 with --slow)");
  }
  if (cmd == "spectrum" && n) need(*n >= 2 && *n <= kMaxDenseKernelDegree, "spectrum needs 2 <= n <= 8");
  if (cmd == "linear" && n) need(*n >= 2, "linear needs n >= 2");
  if (cmd == "global" && n) need(*n >= 2 && (!c.t || *c.t < *n), "global needs n >= 2 and t < n");
  if (cmd == "structure" && n) need(*n >= 3, "structure needs n >= 3");
  if (cmd == "maxpf") {
    need(n.has_value(), "maxpf needs --n");
    need(c.mode == "auto" || c.mode == "exact" || c.mode == "heuristic", "--mode must be auto, exact or heuristic");
    const bool exact = c.mode == "exact" || (c.mode == "auto" && *n <= kMaxExactPFDegree);
    need(*n >= 3 && *n <= (exact ? kMaxExactPFDegree : kMaxHeuristicPFDegree),
         exact ? "exact maxpf needs 3 <= n <= 5" : "heuristic maxpf needs 3 <= n <= 7");
  }
  if (cmd == "verify") {
    need(c.suite == "core" || c.suite == "all", "--suite must be core or all");
    if (n) need(*n >= kMinVerifyDegree && *n <= kMaxVerifyDegree, "verify needs 3 <= n <= 7");
  }
}

RunResult execute(const RunConfig& config) {
  validate(config);
  if (config.threads) set_thread_budget(*config.threads);
  RunResult result;
  try {
    const int n = config.command == "verify" ? config.degree.value_or(5) : resolve_degree(config);
    Checks checks;
    json body;
    const auto& cmd = config.command;
    if (cmd == "decompose") body = cmd_decompose(config, n, checks);
    else if (cmd == "linear") body = cmd_linear(config, n, checks);
    else if (cmd == "spectrum") body = cmd_spectrum(config, n, checks);
    else if (cmd == "global") body = cmd_global(config, n, checks);
    else if (cmd == "structure") body = cmd_structure(config, n, checks);
    else if (cmd == "families") body = cmd_families(config, n, checks);
    else if (cmd == "maxpf") body = cmd_maxpf(config, n, checks);
    else body = cmd_verify(config, n, checks);

    json report = body;
    report["command"] = cmd;
    report["n"] = n;
    report["seed"] = config.seed;
    report["checks"] = checks.to_json();
    result.failures = checks.failures();
    report["failures"] = result.failures;
    report["passed"] = result.failures.empty();
    result.report = std::move(report);
    result.exit_code = result.failures.empty() ? kExitOk : kExitAssertion;
  } catch (const Error& e) {
    throw UsageError(e.what());
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed input: ") + e.what());
  }
  return result;
}

std::string to_csv(const nlohmann::json& report) {
  std::string out = "key,value\n";
  flatten(report, "", out);
  return out;
}

std::string render(const RunConfig& config, const nlohmann::json& report) {
  json r = report;
  if (config.timestamp) r["timestamp"] = timestamp_now();
  return config.format == "csv" ? to_csv(r) : r.dump(2) + "\n";
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  RunResult result;
  try {
    result = execute(config);
    const auto text = render(config, result.report);
    if (config.output.empty()) out << text;
    else write_text_file(config.output, text);
  } catch (const UsageError& e) {
    err << "symspec " << config.command << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "symspec " << config.command << ": " << e.what() << "\n";
    return kExitUsage;
  }
  if (result.exit_code == kExitAssertion) {
    err << "symspec " << config.command << ": assertion failed:";
    for (const auto& name : result.failures) err << " " << name;
    err << "\n";
  }
  return result.exit_code;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  if (argc >= 2 && argv[1][0] != '-' &&
      std::find(kCommands.begin(), kCommands.end(), std::string(argv[1])) == kCommands.end()) {
    err << "symspec: unknown subcommand '" << argv[1]
        << "' (expected decompose, linear, spectrum, global, structure, families, maxpf or verify)\n";
    return kExitUsage;
  }
  CLI::App app{"Spectral and combinatorial diagnostics for product-free sets in S_n and A_n", "symspec"};
  app.require_subcommand(1);
  RunConfig config;
  int n = 0, d = 0, t = 0, r = 0, threads = 0;
  double delta = 0, R = 0, eps = 0;
  std::string seed_text;

  struct Bound {
    CLI::Option *n, *d, *t, *r, *threads, *delta, *R, *eps, *seed;
  };
  std::map<std::string, Bound> bound;
  for (const auto& name : kCommands) {
    auto* sub = app.add_subcommand(name);
    Bound b{};
    b.n = sub->add_option("--n", n, "Degree of S_n");
    sub->add_option("--spec", config.specs, "Family spec, e.g. \"F:x=1,I=2,3\" (repeatable)");
    sub->add_option("--set-file", config.set_files, "Set file (repeatable)")->check(CLI::ExistingFile);
    sub->add_option("--function-file", config.function_files, "Function file (repeatable)")->check(CLI::ExistingFile);
    b.d = sub->add_option("--d", d, "Level");
    b.t = sub->add_option("--t", t, "Restriction size for globalness");
    b.r = sub->add_option("--r", r, "Bump search order");
    b.delta = sub->add_option("--delta", delta, "Star threshold delta (default 0.25)");
    b.R = sub->add_option("--R", R, "Use delta = (ln n)^-R");
    b.eps = sub->add_option("--eps", eps, "Override the structure threshold eps");
    b.seed = sub->add_option("--seed", seed_text, "Seed (default 0xC0FFEE)");
    b.threads = sub->add_option("--threads", threads, "Worker budget (default $SYMSPEC_THREADS or 1)");
    sub->add_option("--format", config.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--output", config.output, "Write the report here instead of stdout");
    sub->add_flag("!--no-timestamp", config.timestamp, "Omit the timestamp field");
    sub->add_flag("--slow", config.slow, "Allow slow paths (isotypic projections at n = 8)");
    sub->add_flag("--certify", config.certify, "Certify product-freeness");
    if (name == "verify") sub->add_option("--suite", config.suite, "core or all");
    if (name == "maxpf") {
      sub->add_option("--mode", config.mode, "auto, exact or heuristic");
      sub->add_option("--budget", config.budget, "Search nodes (exact) or moves (heuristic); 0 for the default");
    }
    bound[name] = b;
  }
  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "symspec: " << e.what() << "\n";
    return kExitUsage;
  }
  const auto* sub = app.get_subcommands().front();
  config.command = sub->get_name();
  const auto& b = bound[config.command];
  if (b.n->count()) config.degree = n;
  if (b.d->count()) config.d = d;
  if (b.t->count()) config.t = t;
  if (b.r->count()) config.r = r;
  if (b.delta->count()) config.delta = delta;
  if (b.R->count()) config.R = R;
  if (b.eps->count()) config.eps = eps;
  if (b.threads->count()) config.threads = threads;
  if (b.seed->count()) {
    try {
      std::size_t used = 0;
      config.seed = std::stoull(seed_text, &used, 0);
      if (used != seed_text.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      err << "symspec: --seed must be an unsigned integer (decimal or 0x hex), got '" << seed_text << "'\n";
      return kExitUsage;
    }
  }
  return run(config, out, err);
}

}  // namespace symspec::cli
