#include "symspec/perm.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace symspec {

std::uint64_t factorial(int n) {
  require(n >= 0 && n <= 20, "factorial argument out of range");
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

Permutation Permutation::identity(int degree) {
  require(degree >= 1, "degree must be positive");
  require(degree <= kMaxDegree, "degree too large");
  Permutation p;
  p.degree_ = degree;
  for (int i = 0; i < degree; ++i) p.images_[i] = static_cast<std::uint8_t>(i);
  return p;
}

Permutation Permutation::from_images(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  require(n >= 1, "degree must be positive");
  require(n <= kMaxDegree, "degree too large");
  Permutation p;
  p.degree_ = n;
  unsigned seen = 0;
  for (int i = 0; i < n; ++i) {
    const int v = images[i];
    require(v >= 0 && v < n, "image out of range");
    require(!(seen & (1u << v)), "images are not a bijection");
    seen |= 1u << v;
    p.images_[i] = static_cast<std::uint8_t>(v);
  }
  return p;
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Permutation result = identity(degree);
  // Rightmost cycle acts first.
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    const auto& cyc = *it;
    Permutation c = identity(degree);
    unsigned seen = 0;
    for (size_t k = 0; k < cyc.size(); ++k) {
      const int from = cyc[k];
      const int to = cyc[(k + 1) % cyc.size()];
      require(from >= 0 && from < degree, "cycle point out of range");
      require(!(seen & (1u << from)), "repeated point in cycle");
      seen |= 1u << from;
      c.images_[from] = static_cast<std::uint8_t>(to);
    }
    result = compose(c, result);
  }
  return result;
}

Permutation Permutation::transposition(int degree, int a, int b) {
  Permutation p = identity(degree);
  require(a >= 0 && a < degree && b >= 0 && b < degree, "transposition point out of range");
  std::swap(p.images_[a], p.images_[b]);
  return p;
}

Permutation Permutation::inverse() const {
  Permutation q;
  q.degree_ = degree_;
  for (int i = 0; i < degree_; ++i) q.images_[images_[i]] = static_cast<std::uint8_t>(i);
  return q;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree_; ++i)
    if (images_[i] != i) return false;
  return true;
}

int Permutation::cycle_count() const {
  unsigned seen = 0;
  int cycles = 0;
  for (int i = 0; i < degree_; ++i) {
    if (seen & (1u << i)) continue;
    ++cycles;
    for (int j = i; !(seen & (1u << j)); j = images_[j]) seen |= 1u << j;
  }
  return cycles;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  unsigned seen = 0;
  for (int i = 0; i < degree_; ++i) {
    if (seen & (1u << i)) continue;
    int len = 0;
    for (int j = i; !(seen & (1u << j)); j = images_[j]) {
      seen |= 1u << j;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

Permutation Permutation::extended(int m) const {
  require(m >= degree_ && m <= kMaxDegree, "invalid extension degree");
  Permutation p = *this;
  for (int i = degree_; i < m; ++i) p.images_[i] = static_cast<std::uint8_t>(i);
  p.degree_ = m;
  return p;
}

std::strong_ordering Permutation::operator<=>(const Permutation& o) const {
  if (auto c = degree_ <=> o.degree_; c != 0) return c;
  for (int i = 0; i < degree_; ++i) {
    if (auto c = images_[i] <=> o.images_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  require(a.degree_ == b.degree_, "degree mismatch");
  Permutation c;
  c.degree_ = a.degree_;
  for (int i = 0; i < a.degree_; ++i) c.images_[i] = a.images_[b.images_[i]];
  return c;
}

int sign(const Permutation& p) { return ((p.degree() - p.cycle_count()) % 2 == 0) ? 1 : -1; }

Rank rank(const Permutation& p) {
  const int n = p.degree();
  Rank r = 0;
  unsigned used = 0;
  for (int i = 0; i < n; ++i) {
    const unsigned v = p[i];
    const unsigned below = std::popcount(used & ((1u << v) - 1u));
    r = r * static_cast<Rank>(n - i) + (v - below);
    used |= 1u << v;
  }
  return r;
}

Permutation unrank(Rank r, int degree) {
  require(degree >= 1 && degree <= kMaxDegree, "degree too large");
  require(r < factorial(degree), "rank out of range");
  std::array<int, kMaxDegree> digits{};
  for (int i = degree - 1; i >= 0; --i) {
    const int base = degree - i;
    digits[i] = static_cast<int>(r % static_cast<Rank>(base));
    r /= static_cast<Rank>(base);
  }
  std::array<int, kMaxDegree> images{};
  unsigned used = 0;
  for (int i = 0; i < degree; ++i) {
    int count = digits[i];
    for (int v = 0; v < degree; ++v) {
      if (used & (1u << v)) continue;
      if (count-- == 0) {
        images[i] = v;
        used |= 1u << v;
        break;
      }
    }
  }
  return Permutation::from_images(std::span<const int>(images.data(), degree));
}

std::string to_string(const Permutation& p) {
  std::string out;
  for (int i = 0; i < p.degree(); ++i) {
    if (i) out += ' ';
    out += std::to_string(p[i] + 1);
  }
  return out;
}

namespace {

std::vector<int> parse_ints(std::string_view text) {
  std::vector<int> values;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
    if (i >= text.size()) break;
    size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    require(j > i, "unexpected character in permutation: '" + std::string(1, text[i]) + "'");
    values.push_back(std::stoi(std::string(text.substr(i, j - i))));
    i = j;
  }
  return values;
}

}  // namespace

Permutation parse_permutation(std::string_view text, int degree) {
  const auto first = text.find_first_not_of(" \t");
  require(first != std::string_view::npos, "empty permutation");
  if (text[first] != '(') {
    auto values = parse_ints(text);
    require(degree == 0 || static_cast<int>(values.size()) == degree, "permutation length does not match degree");
    for (int& v : values) --v;
    return Permutation::from_images(values);
  }
  std::vector<std::vector<int>> cycles;
  int max_point = 0;
  size_t pos = first;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    require(text[pos] == '(', "malformed cycle notation");
    const auto close = text.find(')', pos);
    require(close != std::string_view::npos, "unterminated cycle");
    auto values = parse_ints(text.substr(pos + 1, close - pos - 1));
    for (int& v : values) {
      require(v >= 1, "cycle points are 1-based");
      max_point = std::max(max_point, v);
      --v;
    }
    if (!values.empty()) cycles.push_back(std::move(values));
    pos = close + 1;
  }
  const int n = degree == 0 ? std::max(max_point, 1) : degree;
  require(max_point <= n, "cycle point exceeds degree");
  return Permutation::from_cycles(n, cycles);
}

PermutationRange::PermutationRange(int degree, Parity parity) : degree_(degree), parity_(parity) {
  require(degree >= 1, "degree must be positive");
  require(degree <= kMaxDegree, "degree too large");
}

std::uint64_t PermutationRange::size() const {
  const auto total = factorial(degree_);
  if (parity_ == Parity::all) return total;
  if (degree_ == 1) return parity_ == Parity::even ? 1 : 0;
  return total / 2;
}

PermutationRange::iterator PermutationRange::begin() const {
  iterator it;
  it.current_ = Permutation::identity(degree_);
  it.parity_ = parity_;
  it.rank_ = 0;
  it.sign_ = 1;
  if (!it.accept()) ++it;
  return it;
}

bool PermutationRange::iterator::accept() const {
  return parity_ == Parity::all || (parity_ == Parity::even ? sign_ == 1 : sign_ == -1);
}

bool PermutationRange::iterator::advance() {
  auto& a = current_.images_;
  const int n = current_.degree_;
  int k = n - 2;
  while (k >= 0 && a[k] >= a[k + 1]) --k;
  if (k < 0) return false;
  int l = n - 1;
  while (a[k] >= a[l]) --l;
  std::swap(a[k], a[l]);
  std::reverse(a.begin() + k + 1, a.begin() + n);
  const int reversed = n - k - 1;
  const int swaps = 1 + reversed / 2;
  if (swaps % 2) sign_ = -sign_;
  ++rank_;
  return true;
}

PermutationRange::iterator& PermutationRange::iterator::operator++() {
  do {
    if (!advance()) {
      done_ = true;
      return *this;
    }
  } while (!accept());
  return *this;
}

}  // namespace symspec
