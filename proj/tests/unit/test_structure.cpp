#include <cmath>
#include <random>

#include "doctest.h"
#include "symspec/cayley.hpp"
#include "symspec/structure.hpp"

using namespace symspec;

namespace {

SetFamily random_set(int n, std::mt19937_64& rng, double p, Parity parity = Parity::all,
                     DensityConvention c = DensityConvention::over_Sn) {
  std::bernoulli_distribution coin(p);
  return SetFamily::from_predicate(n, [&](const Permutation&) { return coin(rng); }, parity, c);
}

// F_I^x = {π : π(x) ∈ I, π(I) ∩ I = ∅}, 0-based points.
SetFamily extremal(int n, int x, std::vector<int> I) {
  return SetFamily::from_predicate(n, [&](const Permutation& p) {
    auto in = [&](int v) { return std::find(I.begin(), I.end(), v) != I.end(); };
    if (!in(p[x])) return false;
    for (int i : I)
      if (in(p[i])) return false;
    return true;
  });
}

std::vector<Restriction> all_restrictions(int n, int t) {
  std::vector<Restriction> out;
  std::vector<int> src, dst;
  std::function<void(int)> pick_src = [&](int start) {
    if (static_cast<int>(src.size()) == t) {
      std::function<void()> pick_dst = [&] {
        if (dst.size() == src.size()) {
          out.push_back({src, dst});
          return;
        }
        for (int y = 0; y < n; ++y) {
          if (std::find(dst.begin(), dst.end(), y) != dst.end()) continue;
          dst.push_back(y);
          pick_dst();
          dst.pop_back();
        }
      };
      pick_dst();
      return;
    }
    for (int x = start; x < n; ++x) {
      src.push_back(x);
      pick_src(x + 1);
      src.pop_back();
    }
  };
  pick_src(0);
  return out;
}

}  // namespace

TEST_CASE("globalness of trivial sets") {
  const auto dict = SetFamily::umvirate(5, {{0}, {0}});
  auto g = globalness(dict, 2);
  CHECK(g.worst_density == 1.0);
  CHECK(g.relative_k == doctest::Approx(5.0));
  CHECK(g.eps == 1.0);
  g = globalness(SetFamily::full(6), 3);
  for (double d : g.max_density_by_size) CHECK(d == 1.0);
  CHECK(g.relative_k == 1.0);
  CHECK_THROWS_AS(globalness(dict, 5), Error);
  CHECK_THROWS_AS(globalness(dict, 0), Error);
}

TEST_CASE("globalness of an extremal family at n = 8") {
  const auto f = extremal(8, 0, {1, 2, 3});
  const auto g = globalness(f, 1);
  double brute = 0.0;
  for (const auto& r : all_restrictions(8, 1)) brute = std::max(brute, density(f, r));
  CHECK(g.worst_density == brute);
  CHECK(density(f, g.worst) == g.worst_density);
  // Inside 1 -> i the density is the direct count over 7! permutations.
  for (int i : {1, 2, 3}) {
    std::size_t count = 0;
    for (const auto& p : f.permutations()) count += p[0] == i;
    CHECK(density(f, Restriction{{0}, {i}}) == static_cast<double>(count) / 5040.0);
    CHECK(density(f, Restriction{{0}, {i}}) <= g.worst_density);
  }
}

TEST_CASE("globalness scan agrees with per-umvirate enumeration") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const bool an = trial % 2 == 1;
    const auto a = random_set(6, rng, 0.05 + 0.01 * trial, an ? Parity::even : Parity::all,
                              an ? DensityConvention::over_An : DensityConvention::over_Sn);
    const auto g = globalness(a, 2);
    for (int t = 1; t <= 2; ++t) {
      double brute = 0.0;
      for (const auto& r : all_restrictions(6, t)) brute = std::max(brute, density(a, r, a.convention()));
      CHECK(g.max_density_by_size[t - 1] == brute);
    }
  }
}

TEST_CASE("globalness is monotone in the restriction size") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = globalness(random_set(6, rng, 0.2), 3);
    CHECK(g.max_density_by_size[1] >= g.max_density_by_size[0]);
    CHECK(g.max_density_by_size[2] >= g.max_density_by_size[1]);
  }
}

TEST_CASE("density bump search") {
  const auto planted = SetFamily::umvirate(8, {{0, 1}, {0, 1}});
  auto b = density_bump_search(planted, 1);
  CHECK(b.found);
  CHECK(b.best.t == 2);
  CHECK(b.best.density == 1.0);
  CHECK(b.best.density >= std::sqrt(8.0) * planted.measure());
  CHECK(b.levels.size() == 4);

  const auto um = SetFamily::umvirate(6, {{0, 1, 2}, {3, 4, 5}});
  b = density_bump_search(um, 1);
  CHECK(b.best.t == 3);
  CHECK(b.best.density == 1.0);

  CHECK_FALSE(density_bump_search(SetFamily::full(8, Parity::even), 1).found);
  auto an_in_sn = SetFamily::full(8, Parity::even);
  an_in_sn.set_convention(DensityConvention::over_Sn);
  CHECK_FALSE(density_bump_search(an_in_sn, 1).found);
  CHECK_THROWS_AS(density_bump_search(SetFamily(5), 1), Error);
  CHECK_THROWS_AS(density_bump_search(planted, 2), Error);
}

TEST_CASE("coefficient decomposition") {
  CoeffMatrix small(3);
  small.a.setConstant(0.01);
  auto d = decompose_coeffs(small, 0.1);
  CHECK(d.structured.a.isZero(0.0));
  CHECK(d.negative.a.isZero(0.0));
  CHECK(d.random.a == small.a);

  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int trial = 0; trial < 20; ++trial) {
    CoeffMatrix m(6);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) m(i, j) = u(rng);
    d = decompose_coeffs(m, 0.3);
    CHECK((d.negative.a + d.random.a + d.structured.a).cwiseEqual(m.a).all());
  }

  // Dictator 1 -> 1 at n = 5: a_11 = 16/25, the rest of row and column 1 is −4/25, the bulk 1/25.
  const int n = 5;
  const auto dict = normalized_form(GroupFunction::dictator(n, 0, 0));
  d = decompose_coeffs(dict, 2.0 / (n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == 0 && j == 0) CHECK(d.structured(i, j) == dict(i, j));
      else if (i == 0 || j == 0) CHECK(d.negative(i, j) == dict(i, j));
      else CHECK(d.random(i, j) == dict(i, j));
    }
  // At ε = 1/n² the bulk sits on the closed end of [ε, ∞).
  d = decompose_coeffs(dict, 1.0 / (n * n));
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) {
      const bool upper = dict(i, j) >= 1.0 / (n * n);
      CHECK((upper ? d.structured(i, j) : d.random(i, j)) == dict(i, j));
    }
  CHECK_THROWS_AS(decompose_coeffs(dict, 0.0), Error);
}

TEST_CASE("parameters") {
  const auto p = make_parameters(10, 0.2, 0.1, 0.3, 0.25);
  CHECK(p.eps_a == doctest::Approx(10 * 0.25 * 0.2 * 0.1));
  CHECK(p.eps_b == doctest::Approx(10 * 0.25 * 0.1 * 0.2));
  CHECK(p.eps_c == doctest::Approx(10 * 0.25 * 0.3 * 0.1));
  const auto q = literal_parameters(10, 2.0, 0.2, 0.1, 0.3);
  CHECK(q.delta == doctest::Approx(std::pow(std::log(10.0), -2.0)));
  CHECK(q.R == 2.0);
  CHECK_THROWS_AS(make_parameters(10, 0.2, 0.1, 0.3, 1.0), Error);
  CHECK_THROWS_AS(make_parameters(10, 1.2, 0.1, 0.3), Error);
}

TEST_CASE("associated stars of an extremal family") {
  const auto f = extremal(8, 0, {1, 2, 3});
  const auto p = parameters_for(f, f, f);
  const auto s = star_system(f, p, Role::a);
  for (int i : {1, 2, 3}) CHECK(std::find(s.rows[0].begin(), s.rows[0].end(), i) != s.rows[0].end());
  CHECK(s.large[0]);
  const auto stars = large_stars(s);
  REQUIRE_FALSE(stars.empty());
  CHECK(stars[0].to_string() == "1->{2,3,4}");
}

TEST_CASE("star correlation identity") {
  std::mt19937_64 rng(14);
  const int n = 6;
  for (int trial = 0; trial < 5; ++trial) {
    const auto a = random_set(n, rng, 0.1 + 0.05 * trial);
    const auto s = star_system(a, 0.002, 0.25);
    CHECK(has_zero_margins(s.matrix));
    for (int i = 0; i < n; ++i) {
      for (bool inv : {false, true}) {
        const Star star{inv, i, inv ? s.cols[i] : s.rows[i]};
        std::size_t both = 0;
        for (const auto& q : a.permutations()) both += star.contains(q);
        const double corr = both / 720.0 - s.measure * star.measure(n);
        CHECK(std::abs((inv ? s.s_inv[i] : s.s[i]) - corr) <= 1e-12);
      }
      // Star matrices keep whole rows of the structured part or nothing.
      if (s.large[i]) CHECK(s.star.a.row(i) == s.structured.a.row(i));
      else {
        CHECK(s.star.a.row(i).isZero(0.0));
        CHECK(s.s[i] <= s.threshold());
      }
      if (s.large_inv[i]) CHECK(s.star_inv.a.row(i) == s.structured.a.col(i).transpose());
      else CHECK(s.star_inv.a.row(i).isZero(0.0));
    }
  }
  const auto empty = star_system(SetFamily(6), 0.01, 0.25);
  for (int i = 0; i < n; ++i) {
    CHECK(empty.s[i] == 0.0);
    CHECK(empty.s_inv[i] == 0.0);
  }
  CHECK(large_stars(empty).empty());
}

TEST_CASE("inequality for stars") {
  auto c = star_claim({0.5, 0, 0}, {0.5, 0, 0}, 0.5);
  CHECK(c.lhs == doctest::Approx(0.75));
  CHECK(c.rhs == doctest::Approx(0.75));
  CHECK(c.holds);
  c = star_claim({1, 0}, {0, 0}, 0.0);
  CHECK(c.lhs == 1.0);
  CHECK(c.rhs == 1.0);
  CHECK(c.holds);
  CHECK_THROWS_AS(star_claim({-1, 2}, {0, 0}, 0.0), Error);
  CHECK_THROWS_AS(star_claim({1, 0}, {0, 0}, 0.5), Error);

  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> u(0, 1);
  std::uniform_int_distribution<int> len(1, 6);
  int violations = 0;
  double worst = -1.0;
  for (int trial = 0; trial < 100000; ++trial) {
    const int k = len(rng);
    std::vector<double> v(k), w(k);
    double total = 0.0;
    for (int i = 0; i < k; ++i) {
      v[i] = u(rng) < 0.3 ? 0.0 : std::pow(u(rng), 3);
      w[i] = u(rng) < 0.3 ? 0.0 : std::pow(u(rng), 3);
      total += v[i] + w[i];
    }
    if (total == 0.0) continue;
    double top = 0.0;
    for (int i = 0; i < k; ++i) top = std::max({top, v[i] / total, w[i] / total});
    const double zeta = u(rng) * (1.0 - top);
    const auto r = star_claim(v, w, zeta);
    violations += !r.holds;
    worst = std::max(worst, r.lhs - r.rhs);
  }
  CHECK(violations == 0);
  CHECK(worst <= 1e-12);
}

TEST_CASE("ones-vector triple sum identity") {
  std::mt19937_64 rng(16);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::MatrixXd x(5, 5), y(5, 5);
    for (int i = 0; i < 25; ++i) x.data()[i] = g(rng), y.data()[i] = g(rng);
    const auto id = ones_identity(x, y);
    CHECK(std::abs(id.inner - id.triple_sum) <= 1e-10);
  }
}

TEST_CASE("stars are nearly disjoint") {
  const int n = 6;
  const Star s{false, 0, {0, 1}};
  const auto e = SetFamily::from_predicate(n, [](const Permutation& p) { return p[0] == 0 && p[1] == 1; });
  auto r = star_disjointness_check(e, {s}, 0.2, 0.3);
  CHECK(r.lhs == doctest::Approx(e.measure()));
  CHECK(r.lhs <= r.rhs);
  CHECK_FALSE(r.hypotheses_hold);

  // Two stars on S_8 with δ = 0.3, ε = 0.2: the density window is empty at this size.
  const auto e8 = SetFamily::from_predicate(8, [](const Permutation& p) { return p[0] == 0 && p[1] == 1; });
  r = star_disjointness_check(e8, {{false, 0, {0}}, {true, 1, {1}}}, 0.2, 0.3);
  CHECK_FALSE(r.hypotheses_hold);
  CHECK(std::find(r.failed_hypotheses.begin(), r.failed_hypotheses.end(), "mu(E) < 100/(delta^2 n)") !=
        r.failed_hypotheses.end());
  CHECK(r.bonferroni_holds);
  CHECK(r.pair_bound_holds);
  if (r.hypotheses_hold) CHECK(r.conclusion_holds);

  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> pt(0, n - 1), sz(1, 3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Star> stars;
    for (int k = 0; k < 4; ++k) {
      Star st{k % 2 == 1, k / 2 + trial % 3, {}};
      while (static_cast<int>(st.points.size()) < sz(rng)) {
        const int x = pt(rng);
        if (std::find(st.points.begin(), st.points.end(), x) == st.points.end()) st.points.push_back(x);
      }
      stars.push_back(st);
    }
    r = star_disjointness_check(random_set(n, rng, 0.1), stars, 0.2, 0.3);
    CHECK(r.bonferroni_holds);
    CHECK(r.pair_bound_holds);
    if (r.hypotheses_hold) CHECK(r.conclusion_holds);
  }
  CHECK_THROWS_AS(star_disjointness_check(e, {{false, 9, {0}}}, 0.2, 0.3), Error);
}

TEST_CASE("dyadic overlap bound") {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(4, 4), k = Eigen::MatrixXd::Zero(4, 4);
  auto z = dyadic_overlap_bound(m, k);
  CHECK(z.value == 0.0);
  CHECK(z.holds);
  m.diagonal() << 1, 2, 3, 4;
  k.diagonal() << 4, 3, 2, 1;
  z = dyadic_overlap_bound(m, k, 1, 1);
  CHECK(z.value == 20.0);
  CHECK(z.bound == doctest::Approx(30.0));
  CHECK_THROWS_AS(dyadic_overlap_bound(Eigen::MatrixXd::Ones(3, 3), Eigen::MatrixXd::Ones(3, 3), 2, 3), Error);

  std::mt19937_64 rng(18);
  std::uniform_real_distribution<double> u(-1, 1), coin(0, 1);
  int violations = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(6, 6), b = Eigen::MatrixXd::Zero(6, 6);
    for (int i = 0; i < 36; ++i) {
      if (coin(rng) < 0.3) a.data()[i] = u(rng);
      if (coin(rng) < 0.3) b.data()[i] = u(rng);
    }
    violations += !dyadic_overlap_bound(a, b).holds;
  }
  CHECK(violations == 0);
}

TEST_CASE("l1 bound for star matrices") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 5; ++trial) {
    const auto a = random_set(6, rng, 0.2), b = random_set(6, rng, 0.2), c = random_set(6, rng, 0.2);
    const auto p = parameters_for(a, b, c);
    const auto s = star_system(a, p, Role::a);
    const auto r = l1_bound(a, s, p, Role::a);
    CHECK_FALSE(r.gate_holds);
    CHECK(r.star_sum_holds);
    if (r.gate_holds) CHECK(r.holds);
  }
  const auto f = extremal(7, 0, {1, 2});
  const auto p = parameters_for(f, f, f);
  const auto r = l1_bound(f, star_system(f, p, Role::a), p, Role::a);
  CHECK(r.value > 0.0);
  CHECK(r.star_sum_holds);
}

TEST_CASE("counting terms") {
  std::mt19937_64 rng(20);
  for (int trial = 0; trial < 4; ++trial) {
    const auto a = random_set(6, rng, 0.3, Parity::even), b = random_set(6, rng, 0.3, Parity::even),
               c = random_set(6, rng, 0.3, Parity::even);
    const auto t = counting_terms(a, b, c, parameters_for(a, b, c));
    CHECK(t.reassembly_error <= 1e-12);
    CHECK(t.signs_ok);
    REQUIRE(t.lower_bounds.size() == 3);
    for (const auto& lb : t.lower_bounds) {
      CHECK(lb.holds);
      CHECK(std::abs(lb.rhs - lb.star_form) <= 1e-12);
    }
    REQUIRE(t.probability.has_value());
    const auto tri = triple_expectation(a.indicator(), b.indicator(), c.indicator(), 1);
    CHECK(std::abs(*t.probability - tri.total) <= 1e-12);
    CHECK(std::abs(t.linear_estimate - 2 * tri.alpha * tri.beta * tri.gamma - 2 * tri.linear_term) <= 1e-12);
    const auto j = to_json(t);
    CHECK(j["terms"].size() == 27);
  }
  const auto a = random_set(5, rng, 0.3);
  CHECK_THROWS_AS(counting_terms(a, a, a, make_parameters(5, 0.5, 0.5, 0.5)), Error);
}
