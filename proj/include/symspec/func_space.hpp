#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symspec/perm.hpp"

namespace symspec {

/// Dense GroupFunction storage is capped here (10! doubles is about 29 MB).
inline constexpr int kMaxDenseDegree = 10;

/// Real-valued function on S_n, indexed by lexicographic rank, with the
/// expectation inner product <f, g> = E_σ f(σ) g(σ).
class GroupFunction {
 public:
  GroupFunction() = default;
  explicit GroupFunction(int degree, double fill = 0.0);
  GroupFunction(int degree, std::vector<double> values);

  static GroupFunction constant(int degree, double c) { return GroupFunction(degree, c); }
  /// x_{i→j}(σ) = 1 if σ(i) = j (0-based points).
  static GroupFunction dictator(int degree, int i, int j);
  static GroupFunction sign_character(int degree);
  static GroupFunction from_fn(int degree, const std::function<double(const Permutation&)>& fn);

  int degree() const { return degree_; }
  std::size_t size() const { return values_.size(); }
  double operator[](Rank r) const { return values_[r]; }
  double& operator[](Rank r) { return values_[r]; }
  double at(const Permutation& p) const { return values_[rank(p)]; }
  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }

  GroupFunction& operator+=(const GroupFunction& o);
  GroupFunction& operator-=(const GroupFunction& o);
  GroupFunction& operator*=(double s);
  friend GroupFunction operator+(GroupFunction a, const GroupFunction& b) { return a += b; }
  friend GroupFunction operator-(GroupFunction a, const GroupFunction& b) { return a -= b; }
  friend GroupFunction operator*(double s, GroupFunction a) { return a *= s; }

  /// Ranks where the value is nonzero.
  std::vector<Rank> support() const;

 private:
  int degree_ = 0;
  std::vector<double> values_;
};

double inner_product(const GroupFunction& f, const GroupFunction& g);
double expectation(const GroupFunction& f);
/// (E|f|^p)^{1/p}; p = 2 uses the inner product.
double norm(const GroupFunction& f, double p = 2.0);
double max_abs_diff(const GroupFunction& f, const GroupFunction& g);
/// f · sign.
GroupFunction sign_twist(const GroupFunction& f);

/// Ordered restriction I → J: the t-umvirate U_{I→J} of permutations sending
/// sources[l] to targets[l]. Points are 0-based.
struct Restriction {
  std::vector<int> sources;
  std::vector<int> targets;

  int size() const { return static_cast<int>(sources.size()); }
  /// Checks distinctness, equal sizes and range against degree n.
  void validate(int degree) const;
  bool contains(const Permutation& p) const;
  std::string to_string() const;  // 1-based, e.g. "1→2,3→1"
};

struct RestrictionStats {
  double mean = 0.0;  // E[f_{I→J}]
  double norm = 0.0;  // ||f_{I→J}||_2
};

struct RestrictedFunction {
  GroupFunction function;  // on S_{n-t}
  RestrictionStats stats;
};

/// Conditional mean and L2 norm of f over U_{I→J}, by direct scan.
RestrictionStats restriction_stats(const GroupFunction& f, const Restriction& r);

/// Transports f restricted to U_{I→J} onto S_{n-t}.
///
/// Uses σ with σ(n-t+l) = i_l and π with π(j_l) = n-t+l, both completed
/// minimally in lexicographic order; ρ ∈ S_{n-t} maps to π⁻¹ ρ σ⁻¹ ∈ U_{I→J}.
RestrictedFunction restrict(const GroupFunction& f, const Restriction& r);
/// Same transport with caller-chosen σ and π (they must satisfy the constraints above).
RestrictedFunction restrict(const GroupFunction& f, const Restriction& r, const Permutation& sigma,
                            const Permutation& pi);

/// Totals of a weighted member list over one t-restriction I→J.
struct RestrictionTotal {
  Restriction restriction;  // sources ascending
  double sum = 0.0;         // Σ w over members in U_{I→J}
  double sum_sq = 0.0;      // Σ w²
  std::uint64_t count = 0;  // members in U_{I→J}
};

/// One pass over `ranks` (weights default to 1) accumulating per-restriction
/// totals, then visits every t-restriction with ascending sources, including
/// those no member hits.
void scan_restrictions(int degree, int t, std::span<const Rank> ranks, std::span<const double> weights,
                       const std::function<void(const RestrictionTotal&)>& visit);

/// Largest ||f_{I→J}||₂ over all restrictions of size exactly t.
std::pair<Restriction, double> max_restricted_norm(const GroupFunction& f, int t);

/// Which ambient group densities are measured against.
enum class DensityConvention { over_Sn, over_An };

std::string to_string(DensityConvention c);
DensityConvention parse_convention(std::string_view text);

/// A subset of S_n: sorted ranks plus a membership bitset.
class SetFamily {
 public:
  SetFamily() = default;
  explicit SetFamily(int degree, DensityConvention convention = DensityConvention::over_Sn);
  SetFamily(int degree, std::vector<Rank> ranks, DensityConvention convention = DensityConvention::over_Sn);

  static SetFamily from_permutations(int degree, const std::vector<Permutation>& perms,
                                     DensityConvention convention = DensityConvention::over_Sn);
  static SetFamily from_predicate(int degree, const std::function<bool(const Permutation&)>& pred,
                                  Parity parity = Parity::all,
                                  DensityConvention convention = DensityConvention::over_Sn);
  static SetFamily full(int degree, Parity parity = Parity::all);
  static SetFamily umvirate(int degree, const Restriction& r);

  int degree() const { return degree_; }
  DensityConvention convention() const { return convention_; }
  void set_convention(DensityConvention c) { convention_ = c; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Rank r) const { return (bits_[r >> 6] >> (r & 63)) & 1u; }
  bool contains(const Permutation& p) const { return contains(rank(p)); }
  const std::vector<Rank>& members() const { return members_; }
  std::vector<Permutation> permutations() const;
  std::size_t even_count() const { return even_; }
  std::size_t odd_count() const { return members_.size() - even_; }
  bool within_An() const { return even_ == members_.size(); }

  /// Density in the family's own convention.
  double measure() const { return measure(convention_); }
  double measure(DensityConvention c) const;

  SetFamily inverse() const;
  GroupFunction indicator() const;

  friend bool operator==(const SetFamily& a, const SetFamily& b) {
    return a.degree_ == b.degree_ && a.members_ == b.members_;
  }

 private:
  void rebuild();
  int degree_ = 0;
  DensityConvention convention_ = DensityConvention::over_Sn;
  std::vector<Rank> members_;
  std::vector<std::uint64_t> bits_;
  std::size_t even_ = 0;
};

SetFamily set_intersection(const SetFamily& a, const SetFamily& b);

/// μ_B(A) = |A ∩ B| / |B|.
double density(const SetFamily& a, const SetFamily& b);
/// Density of A inside U_{I→J} (or inside U_{I→J} ∩ A_n for over_An).
double density(const SetFamily& a, const Restriction& r, DensityConvention c = DensityConvention::over_Sn);

/// Number of elements of U_{I→J} (t = |I|) in the given ambient group.
std::uint64_t umvirate_size(int degree, const Restriction& r, DensityConvention c);

}  // namespace symspec
