#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "symspec/func_space.hpp"

namespace symspec {

/// Weakly decreasing positive parts. Also used for cycle types.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int size() const;  // n = sum of parts
  int length() const { return static_cast<int>(parts.size()); }
  int first_row() const { return parts.empty() ? 0 : parts.front(); }
  Partition transpose() const;
  /// d_λ = n − λ₁.
  int level() const { return size() - first_row(); }
  /// min(d_λ, d_{λᵗ}).
  int reduced_level() const;

  std::string to_string() const;  // "[3,1]"
  auto operator<=>(const Partition&) const = default;
};

Partition parse_partition(std::string_view text);

/// All partitions of n, starting from [n] in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);

/// Hook length formula.
std::uint64_t partition_dim(const Partition& lambda);

/// χ_λ on the class with the given cycle type (Murnaghan–Nakayama).
std::int64_t mn_character(const Partition& lambda, const Partition& cycle_type);

/// Number of permutations with the given cycle type.
std::uint64_t class_size(const Partition& cycle_type);

class CharacterTable {
 public:
  explicit CharacterTable(int degree);

  int degree() const { return degree_; }
  const std::vector<Partition>& irreps() const { return irreps_; }
  const std::vector<Partition>& classes() const { return classes_; }
  std::uint64_t class_size(std::size_t c) const { return sizes_[c]; }
  std::int64_t value(std::size_t irrep, std::size_t cls) const { return table_[irrep][cls]; }
  std::size_t irrep_index(const Partition& lambda) const;
  std::size_t class_index(const Partition& cycle_type) const;
  /// Class index of every element of S_n, by rank.
  const std::vector<std::uint8_t>& class_of_rank() const;

 private:
  int degree_;
  std::vector<Partition> irreps_;
  std::vector<Partition> classes_;
  std::vector<std::uint64_t> sizes_;
  std::vector<std::vector<std::int64_t>> table_;
  std::map<Partition, std::size_t> irrep_pos_;
  std::map<Partition, std::size_t> class_pos_;
  mutable std::vector<std::uint8_t> class_of_rank_;
};

const CharacterTable& character_table(int degree);

/// Degree at which the class-sum path needs an explicit opt-in.
inline constexpr int kSlowIsotypicDegree = 8;

/// F_C(g) = Σ_{h∈C} f(h⁻¹g) for every class C; row c is a function on S_n.
std::vector<std::vector<double>> class_sums(const GroupFunction& f, bool allow_slow = false);

/// f^{=λ} = (dim λ / n!) Σ_h χ_λ(h) f(h⁻¹ ·).
GroupFunction isotypic_project(const GroupFunction& f, const Partition& lambda, bool allow_slow = false);

/// Every isotypic component, in the order of character_table(n).irreps().
std::vector<GroupFunction> isotypic_decomposition(const GroupFunction& f, bool allow_slow = false);

enum class LevelPath { automatic, isotypic, least_squares };

/// Orthogonal projection onto the span of the d-umvirate indicators.
GroupFunction umvirate_span_project(const GroupFunction& f, int d);

/// f^{=d}: component in W_d ∩ W_{d−1}^⊥.
GroupFunction level_project(const GroupFunction& f, int d, LevelPath path = LevelPath::automatic,
                            bool allow_slow = false);

struct IsotypicRow {
  Partition lambda;
  Partition transpose;
  int level = 0;
  int reduced_level = 0;
  std::uint64_t dim = 0;
  double weight = 0.0;  // ||f^{=λ}||²
};

std::vector<IsotypicRow> isotypic_report(const GroupFunction& f, bool allow_slow = false);

struct DimensionBoundRow {
  int degree = 0;
  int d = 0;
  double bound = 0.0;         // (n/(e d))^d
  std::uint64_t min_dim = 0;  // over λ with reduced level > d
  Partition witness;
  bool holds = true;
};

/// For each d in [1, n−1] with some λ of reduced level > d, whether every such
/// λ has dim(λ) > (n/(e d))^d.
std::vector<DimensionBoundRow> dimension_bound_diagnostic(int degree);

}  // namespace symspec
