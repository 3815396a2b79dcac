#include <set>

#include "doctest.h"
#include "symspec/perm.hpp"

using namespace symspec;

namespace {

// Permutation matrix with P[p(x)][x] = 1, so P_a P_b is the matrix of a∘b.
std::vector<std::vector<int>> matrix_of(const Permutation& p) {
  std::vector<std::vector<int>> m(p.degree(), std::vector<int>(p.degree(), 0));
  for (int x = 0; x < p.degree(); ++x) m[p[x]][x] = 1;
  return m;
}

std::vector<std::vector<int>> matmul(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b) {
  const size_t n = a.size();
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k)
      for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// Sign by counting inversions, independent of the cycle-count route.
int inversion_sign(const Permutation& p) {
  int inv = 0;
  for (int i = 0; i < p.degree(); ++i)
    for (int j = i + 1; j < p.degree(); ++j) inv += p[i] > p[j];
  return inv % 2 ? -1 : 1;
}

}  // namespace

TEST_CASE("compose follows a(b(x))") {
  const auto a = parse_permutation("(1 2)", 3);
  const auto b = parse_permutation("(2 3)", 3);
  const auto c = compose(a, b);
  CHECK(to_string(c) == "2 3 1");
  CHECK(c == parse_permutation("(1 2 3)", 3));

  for (const auto& p : enumerate(3)) {
    CHECK(compose(Permutation::identity(3), p) == p);
    CHECK(compose(p, p.inverse()).is_identity());
    for (const auto& q : enumerate(3)) CHECK(matrix_of(compose(p, q)) == matmul(matrix_of(p), matrix_of(q)));
  }
  CHECK_THROWS_WITH_AS(compose(Permutation::identity(3), Permutation::identity(4)), "degree mismatch", Error);
}

TEST_CASE("sign") {
  CHECK(sign(Permutation::identity(5)) == 1);
  CHECK(sign(Permutation::transposition(5, 1, 3)) == -1);
  CHECK(sign(parse_permutation("(1 2 3)", 3)) == 1);
  for (const auto& p : enumerate(5)) CHECK(sign(p) == inversion_sign(p));
}

TEST_CASE("rank and unrank") {
  CHECK(rank(Permutation::identity(4)) == 0);
  CHECK(rank(parse_permutation("3 2 1")) == 5);
  CHECK_THROWS_AS(unrank(6, 3), Error);
  Rank expected = 0;
  for (const auto& p : enumerate(5)) {
    CHECK(rank(p) == expected);
    CHECK(unrank(expected, 5) == p);
    ++expected;
  }
  CHECK(expected == 120);
}

TEST_CASE("enumerate with parity filter") {
  CHECK(enumerate(3).size() == 6);
  int count = 0;
  for (auto it = enumerate(4, Parity::even).begin(); it != std::default_sentinel; ++it) {
    CHECK(sign(*it) == 1);
    CHECK(it.sign() == 1);
    CHECK(rank(*it) == it.rank());
    ++count;
  }
  CHECK(count == 12);
  count = 0;
  for (const auto& p : enumerate(5, Parity::odd)) {
    CHECK(sign(p) == -1);
    ++count;
  }
  CHECK(count == 60);
  CHECK_THROWS_WITH_AS(enumerate(13), "degree too large", Error);
}

TEST_CASE("group laws on S4 and S5") {
  std::vector<Permutation> s4;
  for (const auto& p : enumerate(4)) s4.push_back(p);
  for (const auto& a : s4)
    for (const auto& b : s4) {
      CHECK(sign(compose(a, b)) == sign(a) * sign(b));
      for (size_t k = 0; k < s4.size(); k += 5) {
        const auto& c = s4[k];
        CHECK(compose(a, compose(b, c)) == compose(compose(a, b), c));
      }
    }
  for (const auto& p : enumerate(5)) {
    CHECK(p.inverse().inverse() == p);
    CHECK(compose(p, p.inverse()).is_identity());
  }
}

TEST_CASE("text formats") {
  CHECK(to_string(parse_permutation("(1 3 2)", 3)) == "3 1 2");
  CHECK(parse_permutation("(1 2)(3 4)", 5) == Permutation::from_images(std::vector<int>{1, 0, 3, 2, 4}));
  CHECK(parse_permutation("()", 4).is_identity());
  CHECK_THROWS_AS(parse_permutation("1 1 2"), Error);
  CHECK_THROWS_AS(parse_permutation("1 2 x"), Error);
  std::set<std::string> seen;
  for (const auto& p : enumerate(4)) {
    CHECK(parse_permutation(to_string(p)) == p);
    seen.insert(to_string(p));
  }
  CHECK(seen.size() == 24);
}

TEST_CASE("cycle type") {
  CHECK(parse_permutation("(1 2)(3 4 5)", 6).cycle_type() == std::vector<int>{3, 2, 1});
  CHECK(Permutation::identity(3).cycle_type() == std::vector<int>{1, 1, 1});
}
