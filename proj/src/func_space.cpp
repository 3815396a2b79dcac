#include "symspec/func_space.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "symspec/numeric.hpp"

namespace symspec {

GroupFunction::GroupFunction(int degree, double fill) : degree_(degree) {
  require(degree >= 1, "degree must be positive");
  require(degree <= kMaxDenseDegree, "degree too large for a dense function");
  values_.assign(factorial(degree), fill);
}

GroupFunction::GroupFunction(int degree, std::vector<double> values) : degree_(degree), values_(std::move(values)) {
  require(degree >= 1, "degree must be positive");
  require(degree <= kMaxDenseDegree, "degree too large for a dense function");
  require(values_.size() == factorial(degree), "function length must equal n!");
  for (double v : values_) require(std::isfinite(v), "function values must be finite");
}

GroupFunction GroupFunction::dictator(int degree, int i, int j) {
  require(i >= 0 && i < degree && j >= 0 && j < degree, "dictator index out of range");
  GroupFunction f(degree);
  for_each_permutation(degree, [&](const Permutation& p, Rank r, int) {
    if (p[i] == j) f.values_[r] = 1.0;
  });
  return f;
}

GroupFunction GroupFunction::sign_character(int degree) {
  GroupFunction f(degree);
  for_each_permutation(degree, [&](const Permutation&, Rank r, int s) { f.values_[r] = s; });
  return f;
}

GroupFunction GroupFunction::from_fn(int degree, const std::function<double(const Permutation&)>& fn) {
  GroupFunction f(degree);
  for_each_permutation(degree, [&](const Permutation& p, Rank r, int) { f.values_[r] = fn(p); });
  return f;
}

GroupFunction& GroupFunction::operator+=(const GroupFunction& o) {
  require(degree_ == o.degree_, "degree mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

GroupFunction& GroupFunction::operator-=(const GroupFunction& o) {
  require(degree_ == o.degree_, "degree mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

GroupFunction& GroupFunction::operator*=(double s) {
  for (double& v : values_) v *= s;
  return *this;
}

std::vector<Rank> GroupFunction::support() const {
  std::vector<Rank> out;
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] != 0.0) out.push_back(i);
  return out;
}

double inner_product(const GroupFunction& f, const GroupFunction& g) {
  require(f.degree() == g.degree(), "degree mismatch");
  const auto a = f.values();
  const auto b = g.values();
  return pairwise_sum_of(0, a.size(), [&](std::size_t i) { return a[i] * b[i]; }) / static_cast<double>(a.size());
}

double expectation(const GroupFunction& f) {
  const auto a = f.values();
  return pairwise_sum_of(0, a.size(), [&](std::size_t i) { return a[i]; }) / static_cast<double>(a.size());
}

double norm(const GroupFunction& f, double p) {
  require(p >= 1.0, "norm exponent must be at least 1");
  if (p == 2.0) return std::sqrt(inner_product(f, f));
  const auto a = f.values();
  const double s = pairwise_sum_of(0, a.size(), [&](std::size_t i) { return std::pow(std::abs(a[i]), p); });
  return std::pow(s / static_cast<double>(a.size()), 1.0 / p);
}

double max_abs_diff(const GroupFunction& f, const GroupFunction& g) {
  require(f.degree() == g.degree(), "degree mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) m = std::max(m, std::abs(f[i] - g[i]));
  return m;
}

GroupFunction sign_twist(const GroupFunction& f) {
  GroupFunction out = f;
  for_each_permutation(f.degree(), [&](const Permutation&, Rank r, int s) {
    if (s < 0) out[r] = -out[r];
  });
  return out;
}

void Restriction::validate(int degree) const {
  require(sources.size() == targets.size(), "restriction sources and targets differ in size");
  unsigned seen_i = 0, seen_j = 0;
  for (std::size_t l = 0; l < sources.size(); ++l) {
    const int i = sources[l], j = targets[l];
    require(i >= 0 && i < degree && j >= 0 && j < degree, "restriction index out of range");
    require(!(seen_i & (1u << i)), "restriction sources must be distinct");
    require(!(seen_j & (1u << j)), "restriction targets must be distinct");
    seen_i |= 1u << i;
    seen_j |= 1u << j;
  }
}

bool Restriction::contains(const Permutation& p) const {
  for (std::size_t l = 0; l < sources.size(); ++l)
    if (p[sources[l]] != targets[l]) return false;
  return true;
}

std::string Restriction::to_string() const {
  std::string out;
  for (std::size_t l = 0; l < sources.size(); ++l) {
    if (l) out += ',';
    out += std::to_string(sources[l] + 1) + "->" + std::to_string(targets[l] + 1);
  }
  return out;
}

RestrictionStats restriction_stats(const GroupFunction& f, const Restriction& r) {
  r.validate(f.degree());
  std::vector<double> vals;
  for_each_permutation(f.degree(), [&](const Permutation& p, Rank rk, int) {
    if (r.contains(p)) vals.push_back(f[rk]);
  });
  const double m = static_cast<double>(vals.size());
  RestrictionStats s;
  s.mean = pairwise_sum(vals) / m;
  s.norm = std::sqrt(pairwise_sum_of(0, vals.size(), [&](std::size_t i) { return vals[i] * vals[i]; }) / m);
  return s;
}

namespace {

/// Sends the listed points to the top slots n-t..n-1 in order, the rest to
/// 0..n-t-1 in increasing order. Returns the map as an image array.
std::vector<int> top_slot_map(int n, const std::vector<int>& points) {
  const int t = static_cast<int>(points.size());
  std::vector<int> images(n, -1);
  for (int l = 0; l < t; ++l) images[points[l]] = n - t + l;
  int next = 0;
  for (int x = 0; x < n; ++x)
    if (images[x] < 0) images[x] = next++;
  return images;
}

}  // namespace

RestrictedFunction restrict(const GroupFunction& f, const Restriction& r) {
  r.validate(f.degree());
  const int n = f.degree();
  // σ⁻¹ sends i_l to n-t+l; π sends j_l to n-t+l.
  const auto sigma_inv = top_slot_map(n, r.sources);
  const auto pi = top_slot_map(n, r.targets);
  return restrict(f, r, Permutation::from_images(sigma_inv).inverse(), Permutation::from_images(pi));
}

RestrictedFunction restrict(const GroupFunction& f, const Restriction& r, const Permutation& sigma,
                            const Permutation& pi) {
  r.validate(f.degree());
  const int n = f.degree();
  const int t = r.size();
  require(t < n, "restriction size must be below the degree");
  require(sigma.degree() == n && pi.degree() == n, "degree mismatch");
  for (int l = 0; l < t; ++l) {
    require(sigma[n - t + l] == r.sources[l], "sigma must send n-t+l to i_l");
    require(pi[r.targets[l]] == n - t + l, "pi must send j_l to n-t+l");
  }
  const Permutation pi_inv = pi.inverse();
  const Permutation sigma_inv = sigma.inverse();
  RestrictedFunction out{GroupFunction(n - t), restriction_stats(f, r)};
  for_each_permutation(n - t, [&](const Permutation& rho, Rank rk, int) {
    const Permutation u = compose(pi_inv, compose(rho.extended(n), sigma_inv));
    out.function[rk] = f.at(u);
  });
  return out;
}

void scan_restrictions(int degree, int t, std::span<const Rank> ranks, std::span<const double> weights,
                       const std::function<void(const RestrictionTotal&)>& visit) {
  require(t >= 1 && t < degree, "restriction size out of range");
  require(weights.empty() || weights.size() == ranks.size(), "weights must match the member list");
  std::vector<std::vector<int>> combos;
  std::vector<int> pick(t);
  std::function<void(int, int)> choose = [&](int start, int depth) {
    if (depth == t) {
      combos.push_back(pick);
      return;
    }
    for (int x = start; x < degree; ++x) {
      pick[depth] = x;
      choose(x + 1, depth + 1);
    }
  };
  choose(0, 0);
  std::size_t base = 1;
  for (int l = 0; l < t; ++l) base *= degree;
  require(combos.size() * base <= 100'000'000, "too many restrictions to scan");
  std::vector<double> sum(combos.size() * base, 0.0), sum_sq(combos.size() * base, 0.0);
  std::vector<std::uint64_t> count(combos.size() * base, 0);
  for (std::size_t m = 0; m < ranks.size(); ++m) {
    const Permutation p = unrank(ranks[m], degree);
    const double w = weights.empty() ? 1.0 : weights[m];
    for (std::size_t c = 0; c < combos.size(); ++c) {
      std::size_t code = 0;
      for (int l = 0; l < t; ++l) code = code * degree + p[combos[c][l]];
      const std::size_t key = c * base + code;
      sum[key] += w;
      sum_sq[key] += w * w;
      ++count[key];
    }
  }
  RestrictionTotal total;
  total.restriction.targets.resize(t);
  for (std::size_t c = 0; c < combos.size(); ++c) {
    total.restriction.sources = combos[c];
    for (std::size_t code = 0; code < base; ++code) {
      std::size_t rest = code;
      unsigned used = 0;
      bool ok = true;
      for (int l = t - 1; l >= 0; --l) {
        const int y = static_cast<int>(rest % degree);
        rest /= degree;
        ok = ok && !(used & (1u << y));
        used |= 1u << y;
        total.restriction.targets[l] = y;
      }
      if (!ok) continue;
      const std::size_t key = c * base + code;
      total.sum = sum[key];
      total.sum_sq = sum_sq[key];
      total.count = count[key];
      visit(total);
    }
  }
}

std::pair<Restriction, double> max_restricted_norm(const GroupFunction& f, int t) {
  const int n = f.degree();
  std::vector<Rank> ranks(f.size());
  std::iota(ranks.begin(), ranks.end(), Rank{0});
  const double cell = static_cast<double>(factorial(n - t));
  std::pair<Restriction, double> best{{}, -1.0};
  scan_restrictions(n, t, ranks, f.values(), [&](const RestrictionTotal& tot) {
    const double v = std::sqrt(tot.sum_sq / cell);
    if (v > best.second) best = {tot.restriction, v};
  });
  return best;
}

std::string to_string(DensityConvention c) { return c == DensityConvention::over_Sn ? "Sn" : "An"; }

DensityConvention parse_convention(std::string_view text) {
  if (text == "Sn" || text == "over_Sn") return DensityConvention::over_Sn;
  if (text == "An" || text == "over_An") return DensityConvention::over_An;
  throw Error("unknown density convention '" + std::string(text) + "' (expected Sn or An)");
}

SetFamily::SetFamily(int degree, DensityConvention convention) : degree_(degree), convention_(convention) {
  require(degree >= 1 && degree <= kMaxDenseDegree, "degree too large");
  rebuild();
}

SetFamily::SetFamily(int degree, std::vector<Rank> ranks, DensityConvention convention)
    : degree_(degree), convention_(convention), members_(std::move(ranks)) {
  require(degree >= 1 && degree <= kMaxDenseDegree, "degree too large");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  const Rank total = factorial(degree);
  require(members_.empty() || members_.back() < total, "rank out of range");
  rebuild();
}

void SetFamily::rebuild() {
  bits_.assign((factorial(degree_) + 63) / 64, 0);
  even_ = 0;
  for (Rank r : members_) {
    bits_[r >> 6] |= std::uint64_t{1} << (r & 63);
    if (sign(unrank(r, degree_)) > 0) ++even_;
  }
}

SetFamily SetFamily::from_permutations(int degree, const std::vector<Permutation>& perms, DensityConvention c) {
  std::vector<Rank> ranks;
  ranks.reserve(perms.size());
  for (const auto& p : perms) {
    require(p.degree() == degree, "degree mismatch");
    ranks.push_back(rank(p));
  }
  return SetFamily(degree, std::move(ranks), c);
}

SetFamily SetFamily::from_predicate(int degree, const std::function<bool(const Permutation&)>& pred, Parity parity,
                                    DensityConvention c) {
  std::vector<Rank> ranks;
  for (auto it = enumerate(degree, parity).begin(); it != std::default_sentinel; ++it)
    if (pred(*it)) ranks.push_back(it.rank());
  return SetFamily(degree, std::move(ranks), c);
}

SetFamily SetFamily::full(int degree, Parity parity) {
  return from_predicate(degree, [](const Permutation&) { return true; }, parity,
                        parity == Parity::even ? DensityConvention::over_An : DensityConvention::over_Sn);
}

SetFamily SetFamily::umvirate(int degree, const Restriction& r) {
  r.validate(degree);
  return from_predicate(degree, [&](const Permutation& p) { return r.contains(p); });
}

std::vector<Permutation> SetFamily::permutations() const {
  std::vector<Permutation> out;
  out.reserve(members_.size());
  for (Rank r : members_) out.push_back(unrank(r, degree_));
  return out;
}

double SetFamily::measure(DensityConvention c) const {
  const double total = static_cast<double>(factorial(degree_));
  if (c == DensityConvention::over_Sn) return static_cast<double>(members_.size()) / total;
  require(degree_ >= 2, "A_n density needs degree at least 2");
  return static_cast<double>(even_) / (total / 2.0);
}

SetFamily SetFamily::inverse() const {
  std::vector<Rank> ranks;
  ranks.reserve(members_.size());
  for (Rank r : members_) ranks.push_back(rank(unrank(r, degree_).inverse()));
  return SetFamily(degree_, std::move(ranks), convention_);
}

GroupFunction SetFamily::indicator() const {
  GroupFunction f(degree_);
  for (Rank r : members_) f[r] = 1.0;
  return f;
}

SetFamily set_intersection(const SetFamily& a, const SetFamily& b) {
  require(a.degree() == b.degree(), "degree mismatch");
  std::vector<Rank> out;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                        std::back_inserter(out));
  return SetFamily(a.degree(), std::move(out), a.convention());
}

double density(const SetFamily& a, const SetFamily& b) {
  require(a.degree() == b.degree(), "degree mismatch");
  require(!b.empty(), "empty reference set");
  std::size_t common = 0;
  for (Rank r : b.members())
    if (a.contains(r)) ++common;
  return static_cast<double>(common) / static_cast<double>(b.size());
}

std::uint64_t umvirate_size(int degree, const Restriction& r, DensityConvention c) {
  r.validate(degree);
  const int free = degree - r.size();
  if (c == DensityConvention::over_Sn) return factorial(free);
  if (free >= 2) return factorial(free) / 2;
  // U_{I→J} is a single permutation; count it iff it is even.
  std::vector<int> images(degree, -1);
  unsigned used = 0;
  for (int l = 0; l < r.size(); ++l) {
    images[r.sources[l]] = r.targets[l];
    used |= 1u << r.targets[l];
  }
  for (int x = 0; x < degree; ++x) {
    if (images[x] >= 0) continue;
    for (int v = 0; v < degree; ++v)
      if (!(used & (1u << v))) {
        images[x] = v;
        used |= 1u << v;
        break;
      }
  }
  return sign(Permutation::from_images(images)) > 0 ? 1 : 0;
}

double density(const SetFamily& a, const Restriction& r, DensityConvention c) {
  r.validate(a.degree());
  const auto total = umvirate_size(a.degree(), r, c);
  require(total > 0, "empty reference set");
  std::size_t inside = 0;
  for (Rank rk : a.members()) {
    const Permutation p = unrank(rk, a.degree());
    if (r.contains(p) && (c == DensityConvention::over_Sn || sign(p) > 0)) ++inside;
  }
  return static_cast<double>(inside) / static_cast<double>(total);
}

}  // namespace symspec
