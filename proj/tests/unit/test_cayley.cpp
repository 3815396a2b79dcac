#include <cmath>
#include <random>

#include "doctest.h"
#include "symspec/cayley.hpp"

using namespace symspec;

namespace {

GroupFunction random_function(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> dist;
  GroupFunction f(n);
  for (auto& v : f.values()) v = dist(rng);
  return f;
}

GroupFunction random_indicator(int n, std::mt19937_64& rng, double p, bool even_only = false) {
  std::bernoulli_distribution coin(p);
  GroupFunction f(n);
  for_each_permutation(n, [&](const Permutation&, Rank r, int s) {
    const bool in = coin(rng);
    f[r] = (in && (!even_only || s > 0)) ? 1.0 : 0.0;
  });
  return f;
}

double max_abs(const GroupFunction& f) { return max_abs_diff(f, GroupFunction(f.degree())); }

double triple_by_enumeration(const GroupFunction& f, const GroupFunction& g, const GroupFunction& h) {
  const int n = f.degree();
  std::vector<Permutation> perms;
  for (const auto& p : enumerate(n)) perms.push_back(p);
  double s = 0.0;
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b) s += f[a] * g[b] * h.at(compose(perms[a], perms[b]));
  return s / (static_cast<double>(perms.size()) * perms.size());
}

// Indicator of the conjugacy class of the given cycle type, scaled to mean 1.
GroupFunction class_kernel(int n, const std::vector<int>& cycle_type) {
  auto f = GroupFunction::from_fn(n, [&](const Permutation& p) { return p.cycle_type() == cycle_type ? 1.0 : 0.0; });
  f *= 1.0 / expectation(f);
  return f;
}

}  // namespace

TEST_CASE("applying Cayley operators") {
  std::mt19937_64 rng(1);
  const auto g = random_function(4, rng);
  CHECK(max_abs_diff(apply_left(GroupFunction::constant(4, 1.0), g), GroupFunction::constant(4, expectation(g))) <=
        1e-12);

  const auto pi0 = parse_permutation("2 4 1 3");
  GroupFunction point(4);
  point[rank(pi0)] = 24.0;
  const auto shifted = apply_left(point, g);
  for (const auto& s : enumerate(4)) CHECK(std::abs(shifted.at(s) - g.at(compose(pi0, s))) <= 1e-12);

  const auto f = random_function(4, rng);
  for (const auto& rho : {parse_permutation("2 1 3 4"), parse_permutation("3 4 2 1")}) {
    CHECK(max_abs_diff(apply_left(f, right_translate(g, rho)), right_translate(apply_left(f, g), rho)) <= 1e-12);
  }
  const auto cf = class_kernel(5, {3, 1, 1});
  const auto g5 = random_function(5, rng);
  CHECK(max_abs_diff(apply_left(cf, g5), apply_right(cf, g5)) <= 1e-12);
  CHECK_THROWS_AS(apply_left(GroupFunction(4), GroupFunction(5)), Error);
}

TEST_CASE("trace identity") {
  GroupFunction delta(3);
  delta[0] = 1.0;
  auto t = trace_check(delta);
  CHECK(t.trace == doctest::Approx(1.0 / 6));
  CHECK(t.norm_sq == doctest::Approx(1.0 / 6));
  t = trace_check(GroupFunction::constant(3, 2.0));
  CHECK(t.trace == doctest::Approx(4.0));
  std::mt19937_64 rng(2);
  for (int n = 3; n <= 4; ++n) {
    const auto f = random_function(n, rng);
    for (Side side : {Side::left, Side::right}) {
      const auto c = trace_check(f, side);
      CHECK(std::abs(c.trace - c.norm_sq) <= 1e-10);
    }
  }
  // The explicit matrix applies the same operator as the convolution.
  const auto f = random_function(4, rng), g = random_function(4, rng);
  const auto k = operator_matrix({f, Side::right});
  const Eigen::VectorXd kg = k * Eigen::Map<const Eigen::VectorXd>(g.values().data(), 24);
  const auto rg = apply_right(f, g);
  for (int i = 0; i < 24; ++i) CHECK(std::abs(kg[i] - rg[i]) <= 1e-12);
}

TEST_CASE("L_f preserves isotypic components") {
  std::mt19937_64 rng(3);
  const auto f = random_function(5, rng), g = random_function(5, rng);
  for (const auto& lam : partitions_of(5)) {
    const auto w = apply_left(f, isotypic_project(g, lam));
    CHECK(max_abs_diff(w, isotypic_project(w, lam)) <= 1e-9);
  }
}

TEST_CASE("level radii") {
  std::mt19937_64 rng(4);
  const auto f = random_indicator(5, rng, 0.3);
  CHECK(std::abs(level_radius(f, 0).r - std::abs(expectation(f))) <= 1e-10);
  for (int d = 1; d <= 3; ++d) CHECK(level_radius(GroupFunction::constant(5, 1.0), d).r <= 1e-10);
  const auto r1 = level_radius(f, 1);
  CHECK(std::abs(r1.r - r1.r_from_projection) <= 1e-9);
  CHECK(r1.dim == 16);
  CHECK(r1.eps > 0.0);
  const auto r1m = level_radius(f, 1, RadiusMethod::permutation_module);
  CHECK(std::abs(r1.r - r1m.r) <= 1e-9);
  const auto f7 = random_indicator(7, rng, 0.2);
  const auto r2 = level_radius(f7, 2);
  CHECK(std::abs(r2.r - r2.r_from_projection) <= 1e-9);
}

TEST_CASE("explicit and permutation-module spectra agree") {
  std::mt19937_64 rng(5);
  for (int n = 5; n <= 6; ++n) {
    const auto f = random_function(n, rng);
    double trace = 0.0;
    for (const auto& lam : partitions_of(n)) {
      const auto a = isotypic_radius(f, lam, RadiusMethod::explicit_matrix);
      const auto b = isotypic_radius(f, lam, RadiusMethod::permutation_module);
      CHECK(std::abs(a.r - b.r) <= 1e-9);
      CHECK(a.multiplicity_ok);
      CHECK(b.multiplicity_ok);
      REQUIRE(a.eigs.size() == b.eigs.size());
      for (std::size_t i = 0; i < a.eigs.size(); ++i) {
        CHECK(std::abs(a.eigs[i].value - b.eigs[i].value) <= 1e-9);
        CHECK(a.eigs[i].mult == b.eigs[i].mult);
        CHECK(a.eigs[i].mult >= a.dim);
        trace += a.eigs[i].value * a.eigs[i].mult;
      }
    }
    CHECK(std::abs(trace - inner_product(f, f)) <= 1e-9);
  }
}

TEST_CASE("class-function kernels act as scalars on each isotypic component") {
  const auto f = class_kernel(5, {2, 2, 1});
  for (const auto& lam : partitions_of(5)) {
    const auto s = isotypic_radius(f, lam, RadiusMethod::explicit_matrix);
    REQUIRE(s.eigs.size() == 1);
    CHECK(s.eigs[0].mult == s.dim * s.dim);
  }
  const auto report = spectral_report(f, 2);
  CHECK(std::abs(report.trace - report.norm_sq) <= 1e-9);
  CHECK(to_json(report)["partitions"].size() == 7);
}

TEST_CASE("triple decomposition") {
  const auto one = GroupFunction::constant(5, 1.0);
  auto t = triple_expectation(one, one, one, 1);
  CHECK(t.total == doctest::Approx(1.0));
  CHECK(t.level_terms[0] == doctest::Approx(1.0));
  CHECK(std::abs(t.twisted_terms[0]) <= 1e-12);

  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 3; ++trial) {
    const auto f = random_indicator(5, rng, 0.4), g = random_indicator(5, rng, 0.4), h = random_indicator(5, rng, 0.4);
    t = triple_expectation(f, g, h, 1);
    CHECK(std::abs(t.total - triple_by_enumeration(f, g, h)) <= 1e-10);
    CHECK(t.reassembly_error <= 1e-10);
  }
  CHECK_THROWS_AS(triple_expectation(GroupFunction(4), GroupFunction(4), GroupFunction(4), 1), Error);

  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = random_indicator(6, rng, 0.5, true);
    const auto g = random_indicator(6, rng, 0.5, true);
    const auto h = random_indicator(6, rng, 0.5, true);
    t = triple_expectation(f, g, h, 1);
    REQUIRE(t.an_indicators);
    CHECK(t.high_degree_holds);
    CHECK(t.residual_holds);
    CHECK(t.reassembly_error <= 1e-10);
    ++checked;
  }
  CHECK(checked == 100);
}
