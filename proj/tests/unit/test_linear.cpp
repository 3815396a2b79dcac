#include <cmath>
#include <random>

#include "doctest.h"
#include "symspec/linear.hpp"
#include "symspec/repr.hpp"

using namespace symspec;

namespace {

GroupFunction random_indicator(int n, std::mt19937_64& rng, double p = 0.3) {
  std::bernoulli_distribution coin(p);
  GroupFunction f(n);
  for (auto& v : f.values()) v = coin(rng) ? 1.0 : 0.0;
  return f;
}

CoeffMatrix random_matrix(int n, std::mt19937_64& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  CoeffMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = u(rng);
  return m;
}

// E_{σ,τ} f(σ) g(τ) h(στ) by the double loop.
double triple_by_enumeration(const GroupFunction& f, const GroupFunction& g, const GroupFunction& h) {
  const int n = f.degree();
  const auto perms = [&] {
    std::vector<Permutation> v;
    for (const auto& p : enumerate(n)) v.push_back(p);
    return v;
  }();
  double s = 0.0;
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b) s += f[a] * g[b] * h.at(compose(perms[a], perms[b]));
  return s / (static_cast<double>(perms.size()) * perms.size());
}

}  // namespace

TEST_CASE("normalized form of a dictator") {
  const int n = 4;
  const auto m = normalized_form(GroupFunction::dictator(n, 0, 0));
  CHECK(m.normalized);
  CHECK(has_zero_margins(m));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double expect = 1.0 / (n * n);
      if (i == 0 && j == 0) expect = (n - 1.0) * (n - 1.0) / (n * n);
      else if (i == 0 || j == 0) expect = -(n - 1.0) / (n * n);
      CHECK(std::abs(m(i, j) - expect) <= 1e-12);
    }
  CHECK(normalized_form(GroupFunction::constant(4, 3.0)).a.cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("evaluate_linear") {
  CHECK(max_abs_diff(evaluate_linear(CoeffMatrix(4)), GroupFunction(4)) == 0.0);
  CoeffMatrix e(4);
  e(0, 0) = 1.0;
  CHECK(max_abs_diff(evaluate_linear(e), GroupFunction::dictator(4, 0, 0)) == 0.0);
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 3; ++trial) {
    const auto f = random_indicator(5, rng);
    const auto m = normalized_form(f);
    CHECK(has_zero_margins(m));
    CHECK(max_abs_diff(evaluate_linear(m), level_project(f, 1)) <= 1e-9);
  }
}

TEST_CASE("Parseval") {
  const auto m = normalized_form(GroupFunction::dictator(3, 0, 0));
  CHECK(m.sum_squares() == doctest::Approx(4.0 / 9));
  CHECK(parseval_inner(m, m) == doctest::Approx(2.0 / 9));
  const auto centred = GroupFunction::dictator(3, 0, 0) - GroupFunction::constant(3, 1.0 / 3);
  CHECK(inner_product(centred, centred) == doctest::Approx(2.0 / 9));
  CHECK(parseval_inner(m, CoeffMatrix(3)) == 0.0);

  std::mt19937_64 rng(2);
  for (int n = 4; n <= 5; ++n) {
    const auto f = random_indicator(n, rng), g = random_indicator(n, rng);
    const auto mf = normalized_form(f), mg = normalized_form(g);
    CHECK(std::abs(parseval_inner(mf, mg) - inner_product(evaluate_linear(mf), evaluate_linear(mg))) <= 1e-9);
    const auto f1 = level_project(f, 1);
    CHECK(std::abs(parseval_inner(mf, mf) * (n - 1) - mf.sum_squares()) <= 1e-12);
    CHECK(std::abs(parseval_inner(mf, mf) - inner_product(f1, f1)) <= 1e-9);
  }
  CoeffMatrix raw(4);
  raw(1, 2) = 1.0;
  CHECK_THROWS_WITH_AS(parseval_inner(raw, raw), "coefficient matrix is not in normalized form", Error);
}

TEST_CASE("convolution formula against the double loop") {
  std::mt19937_64 rng(3);
  for (int n = 4; n <= 5; ++n) {
    for (int trial = 0; trial < (n == 4 ? 4 : 1); ++trial) {
      const auto mf = normalized_form(random_indicator(n, rng));
      const auto mg = normalized_form(random_indicator(n, rng));
      const auto mh = normalized_form(random_indicator(n, rng));
      const double oracle = triple_by_enumeration(evaluate_linear(mf), evaluate_linear(mg), evaluate_linear(mh));
      CHECK(std::abs(triple_linear_term(mf, mg, mh) - oracle) <= 1e-10);
    }
  }
  const auto x = normalized_form(GroupFunction::dictator(5, 0, 0));
  const auto lx = evaluate_linear(x);
  CHECK(std::abs(triple_linear_term(x, x, x) - triple_by_enumeration(lx, lx, lx)) <= 1e-10);
  CHECK(triple_linear_term(x, CoeffMatrix(CoeffMatrix(5).a, true), x) == 0.0);
}

TEST_CASE("matrix triple bound") {
  CoeffMatrix id(Eigen::MatrixXd::Identity(2, 2));
  const auto r = matrix_triple_bound(id, id, id);
  CHECK(r.value == 2.0);
  CHECK(r.bound == doctest::Approx(std::pow(std::sqrt(2.0), 3)));
  CHECK(r.holds);
  const auto z = matrix_triple_bound(CoeffMatrix(3), CoeffMatrix(3), CoeffMatrix(3));
  CHECK(z.value == 0.0);
  CHECK(z.bound == 0.0);
  std::mt19937_64 rng(4);
  int violations = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const auto c = matrix_triple_bound(random_matrix(6, rng), random_matrix(6, rng), random_matrix(6, rng));
    violations += !c.holds;
  }
  CHECK(violations == 0);
}

TEST_CASE("interval slices") {
  std::mt19937_64 rng(8);
  const auto m = random_matrix(5, rng);
  const auto neg = interval_slice(m, Interval::open(-INFINITY, 0.0));
  const auto mid = interval_slice(m, Interval::open(0.0, 0.5));
  const auto top = interval_slice(m, Interval::closed_open(0.5, INFINITY));
  CHECK((neg.a + mid.a + top.a - m.a).cwiseAbs().maxCoeff() == 0.0);
  CHECK(neg.a.maxCoeff() <= 0.0);
  CHECK(top.a.minCoeff() >= 0.0);
}

TEST_CASE("one-sided Parseval") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const auto c = one_sided_parseval(random_matrix(5, rng));
    CHECK(c.holds);
    CHECK(c.value <= c.bound);
  }
}

TEST_CASE("small coefficients give a global function") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 5; ++trial) {
    const double eps = 0.2;
    const auto m = random_matrix(6, rng, 0.199);
    const auto c = small_coefficient_globalness(m, eps);
    CHECK(c.holds);
    CHECK(c.worst_norm <= c.eps_prime + 1e-9);
    // Direct check of the reported restriction.
    const auto stats = restriction_stats(evaluate_centered(m), c.worst);
    CHECK(std::abs(stats.norm - c.worst_norm) <= 1e-12);
  }
  CHECK_THROWS_AS(small_coefficient_globalness(random_matrix(6, rng, 1.0), 0.1), Error);
}

TEST_CASE("level-one ratio and serialization") {
  std::mt19937_64 rng(10);
  const auto f = random_indicator(5, rng, 0.2);
  const auto r = level_one_ratio(f, 0.05);
  CHECK(r.mean == doctest::Approx(expectation(f)));
  CHECK(r.eps2 == std::max(0.05, r.mean));
  const auto m = normalized_form(f);
  const auto back = coeff_matrix_from_json(to_json(m));
  CHECK((back.a - m.a).cwiseAbs().maxCoeff() == 0.0);
  CHECK(back.normalized);
  CHECK(to_csv(CoeffMatrix(2)) == "0,0\n0,0\n");
}
