#include "symspec/repr.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>

#include "symspec/numeric.hpp"

namespace symspec {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    require(parts[i] > 0, "partition parts must be positive");
    require(i == 0 || parts[i] <= parts[i - 1], "partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition Partition::transpose() const {
  std::vector<int> t(first_row(), 0);
  for (int p : parts)
    for (int c = 0; c < p; ++c) ++t[c];
  return Partition(std::move(t));
}

int Partition::reduced_level() const { return std::min(level(), transpose().level()); }

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts[i]);
  }
  return s + "]";
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '[' || c == ']' || c == ',' || c == ' ') {
      ++i;
      continue;
    }
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    require(ec == std::errc(), "malformed partition: " + std::string(text));
    parts.push_back(v);
    i = ptr - text.data();
  }
  require(!parts.empty(), "empty partition");
  return Partition(std::move(parts));
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  require(n >= 1, "partition size must be positive");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::uint64_t partition_dim(const Partition& lambda) {
  const auto t = lambda.transpose();
  std::uint64_t hooks = 1;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda.parts[i]; ++j) hooks *= lambda.parts[i] - j + t.parts[j] - i - 1;
  return factorial(lambda.size()) / hooks;
}

namespace {

// Characters via beta-sets: a rim hook of length k is a bead moved from b to b−k.
struct MnSolver {
  const std::vector<int>& mu;
  std::map<std::pair<std::uint64_t, std::size_t>, std::int64_t> memo;

  std::int64_t eval(std::uint64_t beads, std::size_t idx) {
    if (idx == mu.size()) return 1;
    const auto key = std::make_pair(beads, idx);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int k = mu[idx];
    std::int64_t total = 0;
    for (std::uint64_t rest = beads; rest; rest &= rest - 1) {
      const int b = std::countr_zero(rest);
      if (b < k || ((beads >> (b - k)) & 1u)) continue;
      const std::uint64_t between = beads & (((std::uint64_t{1} << b) - 1) & ~((std::uint64_t{1} << (b - k + 1)) - 1));
      const int height = std::popcount(between);
      const std::uint64_t next = (beads & ~(std::uint64_t{1} << b)) | (std::uint64_t{1} << (b - k));
      const std::int64_t v = eval(next, idx + 1);
      total += (height % 2) ? -v : v;
    }
    memo.emplace(key, total);
    return total;
  }
};

}  // namespace

std::int64_t mn_character(const Partition& lambda, const Partition& cycle_type) {
  require(lambda.size() == cycle_type.size(), "partition sizes differ");
  std::uint64_t beads = 0;
  const int len = lambda.length();
  for (int i = 0; i < len; ++i) beads |= std::uint64_t{1} << (lambda.parts[i] + len - 1 - i);
  MnSolver solver{cycle_type.parts, {}};
  return solver.eval(beads, 0);
}

std::uint64_t class_size(const Partition& cycle_type) {
  std::uint64_t denom = 1;
  std::map<int, int> mult;
  for (int p : cycle_type.parts) ++mult[p];
  for (auto [k, m] : mult) {
    for (int i = 0; i < m; ++i) denom *= k;
    denom *= factorial(m);
  }
  return factorial(cycle_type.size()) / denom;
}

CharacterTable::CharacterTable(int degree) : degree_(degree) {
  require(degree >= 1 && degree <= kMaxDegree, "degree too large");
  irreps_ = partitions_of(degree);
  classes_ = irreps_;
  for (std::size_t i = 0; i < irreps_.size(); ++i) {
    irrep_pos_[irreps_[i]] = i;
    class_pos_[classes_[i]] = i;
    sizes_.push_back(symspec::class_size(classes_[i]));
  }
  table_.assign(irreps_.size(), std::vector<std::int64_t>(classes_.size()));
  for (std::size_t i = 0; i < irreps_.size(); ++i)
    for (std::size_t c = 0; c < classes_.size(); ++c) table_[i][c] = mn_character(irreps_[i], classes_[c]);
}

std::size_t CharacterTable::irrep_index(const Partition& lambda) const {
  auto it = irrep_pos_.find(lambda);
  require(it != irrep_pos_.end(), "not a partition of " + std::to_string(degree_) + ": " + lambda.to_string());
  return it->second;
}

std::size_t CharacterTable::class_index(const Partition& cycle_type) const {
  auto it = class_pos_.find(cycle_type);
  require(it != class_pos_.end(), "not a cycle type of degree " + std::to_string(degree_));
  return it->second;
}

const std::vector<std::uint8_t>& CharacterTable::class_of_rank() const {
  static std::mutex mu;
  std::lock_guard lock(mu);
  if (class_of_rank_.empty()) {
    require(degree_ <= kMaxDenseDegree, "degree too large for a dense class table");
    class_of_rank_.resize(factorial(degree_));
    for_each_permutation(degree_, [&](const Permutation& p, Rank r, int) {
      class_of_rank_[r] = static_cast<std::uint8_t>(class_index(Partition(p.cycle_type())));
    });
  }
  return class_of_rank_;
}

const CharacterTable& character_table(int degree) {
  static std::mutex mu;
  static std::array<std::unique_ptr<CharacterTable>, kMaxDegree + 1> cache;
  require(degree >= 1 && degree <= kMaxDegree, "degree too large");
  std::lock_guard lock(mu);
  if (!cache[degree]) cache[degree] = std::make_unique<CharacterTable>(degree);
  return *cache[degree];
}

namespace {

void check_isotypic_guard(int n, bool allow_slow) {
  require(n < kSlowIsotypicDegree || (n == kSlowIsotypicDegree && allow_slow),
          n == kSlowIsotypicDegree ? "isotypic projection at degree 8 needs the slow opt-in"
                                   : "degree too large for isotypic projection");
}

}  // namespace

std::vector<std::vector<double>> class_sums(const GroupFunction& f, bool allow_slow) {
  const int n = f.degree();
  check_isotypic_guard(n, allow_slow);
  const auto& table = character_table(n);
  const auto& cls = table.class_of_rank();
  const std::size_t total = f.size();
  std::vector<std::uint8_t> images(total * n);
  for_each_permutation(n, [&](const Permutation& p, Rank r, int) {
    std::copy(p.images().begin(), p.images().end(), images.begin() + r * n);
  });
  const std::size_t nc = table.classes().size();
  std::vector<std::vector<double>> sums(nc, std::vector<double>(total, 0.0));
  const auto values = f.values();
  parallel_blocks(total, 256, [&](std::size_t begin, std::size_t end) {
    std::vector<double> acc(nc);
    for (std::size_t g = begin; g < end; ++g) {
      std::fill(acc.begin(), acc.end(), 0.0);
      const std::uint8_t* gi = images.data() + g * n;
      // Classes are closed under inversion, so Σ_{h∈C} f(h⁻¹g) = Σ_{k∈C} f(kg).
      for (std::size_t k = 0; k < total; ++k) acc[cls[k]] += values[compose_rank(images.data() + k * n, gi, n)];
      for (std::size_t c = 0; c < nc; ++c) sums[c][g] = acc[c];
    }
  });
  return sums;
}

namespace {

GroupFunction combine_class_sums(const std::vector<std::vector<double>>& sums, int n, std::size_t irrep) {
  const auto& table = character_table(n);
  const double scale = static_cast<double>(partition_dim(table.irreps()[irrep])) / static_cast<double>(factorial(n));
  GroupFunction out(n);
  auto vals = out.values();
  for (std::size_t c = 0; c < sums.size(); ++c) {
    const double w = scale * static_cast<double>(table.value(irrep, c));
    if (w == 0.0) continue;
    for (std::size_t g = 0; g < vals.size(); ++g) vals[g] += w * sums[c][g];
  }
  return out;
}

}  // namespace

GroupFunction isotypic_project(const GroupFunction& f, const Partition& lambda, bool allow_slow) {
  const auto& table = character_table(f.degree());
  const std::size_t idx = table.irrep_index(lambda);
  return combine_class_sums(class_sums(f, allow_slow), f.degree(), idx);
}

std::vector<GroupFunction> isotypic_decomposition(const GroupFunction& f, bool allow_slow) {
  const auto sums = class_sums(f, allow_slow);
  const auto& table = character_table(f.degree());
  std::vector<GroupFunction> out;
  for (std::size_t i = 0; i < table.irreps().size(); ++i) out.push_back(combine_class_sums(sums, f.degree(), i));
  return out;
}

namespace {

constexpr std::size_t kMaxUmvirates = 6000;
constexpr std::size_t kDenseGramLimit = 1500;

struct UmvirateIndex {
  int n = 0;
  int d = 0;
  std::vector<std::vector<int>> combos;  // sorted source sets
  std::size_t code_base = 1;             // n^d
  std::vector<std::int32_t> slot;        // combo * code_base + code -> basis index or -1
  std::vector<std::pair<std::size_t, std::vector<int>>> basis;  // (combo, targets)

  UmvirateIndex(int degree, int level) : n(degree), d(level) {
    std::vector<int> pick(d);
    std::function<void(int, int)> rec = [&](int start, int depth) {
      if (depth == d) {
        combos.push_back(pick);
        return;
      }
      for (int x = start; x < n; ++x) {
        pick[depth] = x;
        rec(x + 1, depth + 1);
      }
    };
    rec(0, 0);
    for (int i = 0; i < d; ++i) code_base *= n;
    require(combos.size() * code_base <= 50'000'000, "too many umvirates for the least-squares path");
    slot.assign(combos.size() * code_base, -1);
    std::vector<int> targets(d);
    for (std::size_t c = 0; c < combos.size(); ++c) {
      std::function<void(int, std::uint32_t)> inj = [&](int depth, std::uint32_t used) {
        if (depth == d) {
          slot[c * code_base + code(targets.data())] = static_cast<std::int32_t>(basis.size());
          basis.emplace_back(c, targets);
          return;
        }
        for (int y = 0; y < n; ++y) {
          if (used & (1u << y)) continue;
          targets[depth] = y;
          inj(depth + 1, used | (1u << y));
        }
      };
      inj(0, 0);
    }
    require(basis.size() <= kMaxUmvirates, "too many umvirates for the least-squares path");
  }

  std::size_t code(const int* t) const {
    std::size_t c = 0;
    for (int i = 0; i < d; ++i) c = c * n + t[i];
    return c;
  }

  template <class Fn>
  void for_each_member(const Permutation& p, Fn&& fn) const {
    int t[kMaxDegree];
    for (std::size_t c = 0; c < combos.size(); ++c) {
      for (int i = 0; i < d; ++i) t[i] = p[combos[c][i]];
      fn(static_cast<std::size_t>(slot[c * code_base + code(t)]));
    }
  }

  // <x_a, x_b> = (n−t)!/n! when the constraints merge into t consistent pairs, else 0.
  double gram(std::size_t a, std::size_t b) const {
    int img[kMaxDegree];
    int pre[kMaxDegree];
    std::fill(img, img + n, -1);
    std::fill(pre, pre + n, -1);
    int t = 0;
    auto add = [&](int s, int y) {
      if (img[s] == y) return true;
      if (img[s] != -1 || pre[y] != -1) return false;
      img[s] = y;
      pre[y] = s;
      ++t;
      return true;
    };
    const auto& ca = combos[basis[a].first];
    const auto& cb = combos[basis[b].first];
    for (int i = 0; i < d; ++i)
      if (!add(ca[i], basis[a].second[i])) return 0.0;
    for (int i = 0; i < d; ++i)
      if (!add(cb[i], basis[b].second[i])) return 0.0;
    return static_cast<double>(factorial(n - t)) / static_cast<double>(factorial(n));
  }
};

Eigen::VectorXd solve_min_norm(const Eigen::MatrixXd& g, const Eigen::VectorXd& b) {
  if (b.norm() == 0.0) return Eigen::VectorXd::Zero(b.size());
  if (g.rows() <= static_cast<Eigen::Index>(kDenseGramLimit)) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g);
    const auto& ev = es.eigenvalues();
    const double tol = 1e-10 * ev.maxCoeff();
    Eigen::VectorXd coord = es.eigenvectors().transpose() * b;
    for (Eigen::Index i = 0; i < coord.size(); ++i) coord[i] = ev[i] > tol ? coord[i] / ev[i] : 0.0;
    return es.eigenvectors() * coord;
  }
  // Conjugate gradients from zero stays in the range of g, so it converges to the
  // minimum-norm solution of the consistent singular system.
  Eigen::VectorXd x = Eigen::VectorXd::Zero(b.size());
  Eigen::VectorXd r = b;
  Eigen::VectorXd p = r;
  double rr = r.squaredNorm();
  const double stop = 1e-28 * b.squaredNorm();
  for (Eigen::Index it = 0; it < 10 * b.size() && rr > stop; ++it) {
    const Eigen::VectorXd gp = g * p;
    const double alpha = rr / p.dot(gp);
    x += alpha * p;
    r -= alpha * gp;
    const double next = r.squaredNorm();
    p = r + (next / rr) * p;
    rr = next;
  }
  return x;
}

}  // namespace

GroupFunction umvirate_span_project(const GroupFunction& f, int d) {
  const int n = f.degree();
  require(d >= 0 && d <= n - 1, "level out of range");
  if (d == 0) return GroupFunction::constant(n, expectation(f));
  const UmvirateIndex index(n, d);
  const std::size_t m = index.basis.size();
  Eigen::VectorXd b = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(m));
  const auto values = f.values();
  for_each_permutation(n, [&](const Permutation& p, Rank r, int) {
    index.for_each_member(p, [&](std::size_t k) { b[k] += values[r]; });
  });
  b /= static_cast<double>(f.size());
  Eigen::MatrixXd g(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t c = a; c < m; ++c) g(a, c) = g(c, a) = index.gram(a, c);
  const Eigen::VectorXd coef = solve_min_norm(g, b);
  GroupFunction out(n);
  auto vals = out.values();
  for_each_permutation(n, [&](const Permutation& p, Rank r, int) {
    double s = 0.0;
    index.for_each_member(p, [&](std::size_t k) { s += coef[k]; });
    vals[r] = s;
  });
  return out;
}

GroupFunction level_project(const GroupFunction& f, int d, LevelPath path, bool allow_slow) {
  const int n = f.degree();
  require(d >= 0 && d <= n - 1, "level out of range");
  if (path == LevelPath::automatic)
    path = (n < kSlowIsotypicDegree || (n == kSlowIsotypicDegree && allow_slow)) ? LevelPath::isotypic
                                                                                 : LevelPath::least_squares;
  if (path == LevelPath::isotypic) {
    const auto parts = isotypic_decomposition(f, allow_slow);
    const auto& irreps = character_table(n).irreps();
    GroupFunction out(n);
    for (std::size_t i = 0; i < irreps.size(); ++i)
      if (irreps[i].level() == d) out += parts[i];
    return out;
  }
  if (d == 0) return GroupFunction::constant(n, expectation(f));
  return umvirate_span_project(f, d) - umvirate_span_project(f, d - 1);
}

std::vector<IsotypicRow> isotypic_report(const GroupFunction& f, bool allow_slow) {
  const auto parts = isotypic_decomposition(f, allow_slow);
  const auto& irreps = character_table(f.degree()).irreps();
  std::vector<IsotypicRow> rows;
  for (std::size_t i = 0; i < irreps.size(); ++i) {
    const auto& lam = irreps[i];
    rows.push_back({lam, lam.transpose(), lam.level(), lam.reduced_level(), partition_dim(lam),
                    inner_product(parts[i], parts[i])});
  }
  return rows;
}

std::vector<DimensionBoundRow> dimension_bound_diagnostic(int degree) {
  const auto lams = partitions_of(degree);
  std::vector<DimensionBoundRow> rows;
  for (int d = 1; d <= degree - 1; ++d) {
    DimensionBoundRow row;
    row.degree = degree;
    row.d = d;
    row.bound = std::pow(degree / (std::numbers::e * d), d);
    bool any = false;
    for (const auto& lam : lams) {
      if (lam.reduced_level() <= d) continue;
      const auto dim = partition_dim(lam);
      if (!any || dim < row.min_dim) {
        row.min_dim = dim;
        row.witness = lam;
      }
      any = true;
    }
    if (!any) break;
    row.holds = static_cast<double>(row.min_dim) > row.bound;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace symspec
