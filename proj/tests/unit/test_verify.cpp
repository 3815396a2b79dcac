#include "doctest.h"
#include "symspec/verify.hpp"

using namespace symspec;

TEST_CASE("check rng is reproducible and in range") {
  CheckRng a(1), b(1);
  for (int i = 0; i < 1000; ++i) {
    const double x = a.uniform();
    CHECK(x == b.uniform());
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
  const auto s = a.subset(7, 3);
  CHECK(s.size() == 3);
  CHECK(std::is_sorted(s.begin(), s.end()));
  CHECK(std::adjacent_find(s.begin(), s.end()) == s.end());
  const auto e = a.set(5, 0.5, DensityConvention::over_An);
  CHECK(e.within_An());
}

TEST_CASE("core suite passes and is deterministic") {
  for (int n : {3, 4, 5}) {
    VerifyOptions opt;
    opt.degree = n;
    opt.seed = 42;
    const auto r = run_verify(opt);
    CHECK(r.passed());
    CHECK(r.failures().empty());
    CHECK(to_json(r).dump() == to_json(run_verify(opt)).dump());
    for (const auto& c : r.checks) CHECK_MESSAGE(c.passed, c.name);
  }
}

TEST_CASE("individual checks catch what they should") {
  CheckRng rng(3);
  const auto d = checks::disjointness_conditional(6, rng, 5);
  CHECK(d.passed);
  CHECK(d.detail.find("vacuous") != std::string::npos);
  CHECK(checks::avoid_star_triples(4, rng, 1).skipped);
  CHECK(checks::convolution_formula(7, rng, 1).skipped);
  const auto names = [] {
    VerifyOptions opt;
    opt.degree = 4;
    std::vector<std::string> v;
    for (const auto& c : run_verify(opt).checks) v.push_back(c.name);
    return v;
  }();
  auto sorted = names;
  std::sort(sorted.begin(), sorted.end());
  CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
}

TEST_CASE("verify guards") {
  VerifyOptions opt;
  opt.degree = 2;
  CHECK_THROWS_AS(run_verify(opt), Error);
  opt.degree = 8;
  CHECK_THROWS_AS(run_verify(opt), Error);
  opt.degree = 5;
  opt.suite = "most";
  CHECK_THROWS_AS(run_verify(opt), Error);
}
