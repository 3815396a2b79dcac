// One PASS/FAIL line per acceptance criterion; indented lines carry the evidence.
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "symspec/cli.hpp"
#include "symspec/families.hpp"
#include "symspec/verify.hpp"

using namespace symspec;

namespace {

struct Criterion {
  int id;
  std::string title;
  double limit_s;  // wall-clock budget
  std::function<std::vector<Check>()> body;
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

void append(std::vector<Check>& out, Check c) { out.push_back(std::move(c)); }
void append(std::vector<Check>& out, std::vector<Check> cs) {
  for (auto& c : cs) out.push_back(std::move(c));
}

std::vector<Check> exact_identities() {
  std::vector<Check> out;
  CheckRng rng(101);
  for (int n = 4; n <= 5; ++n) {
    append(out, checks::parseval(n, rng, 10));
    append(out, checks::convolution_formula(n, rng, n == 4 ? 6 : 3));
    append(out, checks::normalized_margins(n, rng, 10));
    append(out, checks::linear_is_level_one(n, rng, 6));
  }
  return out;
}

std::vector<Check> representation_suite() {
  std::vector<Check> out;
  CheckRng rng(102);
  for (int n = 1; n <= 7; ++n) {
    append(out, checks::dimension_squares(n));
    append(out, checks::hook_characters(n));
  }
  for (int n = 2; n <= 7; ++n) {
    append(out, checks::projector_identities(n, rng));
    append(out, checks::sign_transpose_duality(n, rng));
  }
  return out;
}

std::vector<Check> operator_suite() {
  std::vector<Check> out;
  CheckRng rng(103);
  for (int n = 3; n <= 6; ++n) {
    append(out, checks::trace_identity(n, rng, 3));
    append(out, checks::radius_from_projection(n, rng, 1));
    if (n >= 5) append(out, checks::radius_from_projection(n, rng, 2));
    append(out, checks::eigen_multiplicity(n, rng));
    append(out, checks::class_function_scalars(n));
  }
  for (int n = 5; n <= 6; ++n) append(out, checks::triple_reassembly(n, rng, 3));
  append(out, checks::an_triple_bounds(6, rng, 100));
  return out;
}

std::vector<Check> structure_suite() {
  std::vector<Check> out;
  CheckRng rng(104);
  append(out, checks::globalness_oracle(6, rng, 50, 3));
  append(out, checks::globalness_oracle(7, rng, 4, 2));
  append(out, checks::globalness_oracle(8, rng, 2, 1));
  for (int n = 6; n <= 8; ++n) append(out, checks::star_correlation(n, rng, n == 8 ? 2 : 4));
  append(out, checks::star_claim_samples(rng, 100000));
  for (int n = 6; n <= 8; ++n) {
    append(out, checks::disjointness_core(n, rng, 10));
    append(out, checks::disjointness_conditional(n, rng, 10));
  }
  append(out, checks::matrix_triple_bound(6, rng, 4000));
  append(out, checks::matrix_triple_bound(7, rng, 3000));
  append(out, checks::matrix_triple_bound(8, rng, 3000));
  return out;
}

std::vector<Check> families_suite() {
  std::vector<Check> out;
  CheckRng rng(105);
  for (int n = 3; n <= 7; ++n) append(out, checks::extremal_families(n, 3));
  append(out, checks::avoid_star_triples(6, rng, 40));
  append(out, checks::factoring(5, rng, 100));
  append(out, checks::equivalent_triples(4, rng, 60));
  append(out, checks::equivalent_triples(5, rng, 20));
  return out;
}

std::vector<Check> numeric_reproduction() {
  // Independent count: walk A_10 and test the defining predicate.
  const int n = 10, x = 0;
  const std::vector<int> I = {1, 2, 3};
  auto in = [&](int v) { return v == 1 || v == 2 || v == 3; };
  std::uint64_t count = 0, total = 0;
  for (auto it = enumerate(n, Parity::even).begin(); it != std::default_sentinel; ++it) {
    ++total;
    const auto& p = *it;
    if (!in(p[x])) continue;
    bool ok = true;
    for (int i : I) ok = ok && !in(p[i]);
    count += ok;
  }
  const double exact = static_cast<double>(count) / static_cast<double>(total);
  const auto m = measure_family(parse_family_spec("F:x=1,I=2,3,4", n));
  const double t = 3.0 / std::sqrt(10.0);
  const double estimate = t * std::exp(-t * t) / std::sqrt(10.0);

  Check agree;
  agree.name = "families.measure_matches_enumeration[n=10]";
  agree.value = std::abs(m.mu_an - exact);
  agree.cases = total;
  agree.passed = agree.value == 0.0 && total == 1814400;
  agree.detail = "enumerated " + std::to_string(total) + " elements, |F| = " + std::to_string(count);

  Check ratio;
  ratio.name = "families.estimate_within_factor_two[n=10]";
  ratio.value = exact / estimate;
  ratio.tolerance = 2.0;
  ratio.cases = 1;
  ratio.passed = ratio.value <= 2.0 && ratio.value >= 0.5 && m.ratio && std::abs(*m.ratio - ratio.value) < 1e-12;
  ratio.detail = "mu = " + fmt(exact) + ", t e^{-t^2}/sqrt(n) = " + fmt(estimate) + ", ratio = " +
                 std::to_string(ratio.value);
  return {agree, ratio};
}

std::vector<Check> extremal_search() {
  std::vector<Check> out;
  out.push_back(checks::maxpf_oracle(4, 0xC0FFEE));
  out.push_back(checks::maxpf_oracle(4, 2024));
  for (std::uint64_t seed : {std::uint64_t{0xC0FFEE}, std::uint64_t{99}}) out.push_back(checks::maxpf_reproducible(5, seed));
  return out;
}

std::string run_cli(const std::vector<std::string>& args, int& code) {
  std::vector<const char*> argv{"symspec"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str();
}

std::vector<Check> determinism() {
  int c1 = 0, c2 = 0, c3 = 0;
  const auto a = run_cli({"verify", "--suite", "all", "--seed", "0"}, c1);
  const auto b = run_cli({"verify", "--suite", "all", "--seed", "0", "--threads", "4"}, c2);
  auto strip = [](const std::string& text) {
    auto j = nlohmann::json::parse(text);
    j.erase("timestamp");
    return j.dump(2) + "\n";
  };
  Check same;
  same.name = "cli.verify_all_byte_identical";
  same.cases = 2;
  same.passed = c1 == 0 && c2 == 0 && strip(a) == strip(b);
  same.detail = "two runs, " + std::to_string(a.size()) + " bytes, exit codes " + std::to_string(c1) + "/" +
                std::to_string(c2);
  const auto c = run_cli({"verify", "--suite", "all", "--seed", "0", "--no-timestamp"}, c3);
  Check raw;
  raw.name = "cli.no_timestamp_matches";
  raw.cases = 1;
  raw.passed = c3 == 0 && c == strip(a) && c.find("\"timestamp\"") == std::string::npos;
  return {same, raw};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "exact-identity suite (S4-S5)", 10, exact_identities},
      {2, "representation suite (n <= 7)", 60, representation_suite},
      {3, "operator suite (S3-S6)", 120, operator_suite},
      {4, "structure suite (S6-S8)", 300, structure_suite},
      {5, "families suite", 600, families_suite},
      {6, "desk-scale numeric reproduction (A10, |I| = 3)", 60, numeric_reproduction},
      {7, "extremal search", 600, extremal_search},
      {8, "determinism of verify --suite all --seed 0", 600, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<Check> results;
    std::string error;
    try {
      results = c.body();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = error.empty() && secs <= c.limit_s;
    for (const auto& r : results) ok = ok && r.passed;
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " [" << fmt(secs) << " s, limit "
              << c.limit_s << " s]\n";
    if (!error.empty()) std::cout << "    error: " << error << "\n";
    for (const auto& r : results) {
      std::cout << "    " << (r.skipped ? "skip" : (r.passed ? "ok  " : "FAIL")) << " " << r.name;
      if (!r.skipped) std::cout << "  value=" << fmt(r.value) << " tol=" << fmt(r.tolerance) << " cases=" << r.cases;
      if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
      std::cout << "\n";
    }
    std::cout.flush();
  }
  return failed == 0 ? 0 : 1;
}
