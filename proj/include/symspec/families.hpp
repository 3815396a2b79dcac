#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "symspec/func_space.hpp"

namespace symspec {

enum class FamilyKind {
  extremal,      // F_I^x = {π : π(x) ∈ I, π(I) ∩ I = ∅}
  star,          // 1_{x→I} = {π : π(x) ∈ I}
  inverse_star,  // 1_{I→x} = {π : π⁻¹(x) ∈ I}
  avoid,         // 1_{I→J̄} = {π : π(I) ∩ J = ∅}
  umvirate,      // U_{I→J}
};

/// Points are 0-based; the text form uses 1-based points.
struct FamilySpec {
  FamilyKind kind = FamilyKind::extremal;
  int degree = 0;
  int x = -1;
  std::vector<int> I, J;
  DensityConvention ambient = DensityConvention::over_An;

  void validate() const;
  std::string to_string() const;
};

/// Mini-language: "F:x=1,I=2,3", "star:x=1,I=2,3", "istar:x=1,I=2,3",
/// "avoid:I=1,2;J=3,4", "umv:I=1;J=2". An optional "ambient=Sn" key overrides
/// the default ambient group.
FamilySpec parse_family_spec(std::string_view text, int degree,
                             DensityConvention ambient = DensityConvention::over_An);

/// Materializes the family inside the ambient group (A_n keeps even permutations only).
SetFamily build_family(const FamilySpec& spec);

/// a ∘ b = c with a ∈ A, b ∈ B, c ∈ C.
struct PFWitness {
  Permutation a, b, c;
};

struct PFResult {
  bool product_free = true;
  std::optional<PFWitness> witness;  // smallest (rank a, rank b) pair
  std::uint64_t checked_pairs = 0;   // pairs examined in (a, b) order up to the verdict
};

PFResult is_product_free(const SetFamily& a, const SetFamily& b, const SetFamily& c);
inline PFResult is_product_free(const SetFamily& a) { return is_product_free(a, a, a); }

struct ProductCount {
  std::uint64_t count = 0;  // #{(a, b) ∈ A×B : ab ∈ C}
  double normalized = 0.0;  // count / (n!)²
};

ProductCount count_products(const SetFamily& a, const SetFamily& b, const SetFamily& c);

struct FamilyMeasure {
  std::size_t size = 0;              // elements in the ambient group
  double mu_sn = 0.0;                // |F| / n!, family built inside S_n
  double mu_an = 0.0;                // |F ∩ A_n| / |A_n|
  double mu = 0.0;                   // in the ambient convention
  std::optional<double> t;           // |I| / sqrt(n), extremal families only
  std::optional<double> estimate;    // t e^{−t²} / sqrt(n)
  std::optional<double> ratio;       // mu / estimate
};

FamilyMeasure measure_family(const FamilySpec& spec);

/// A′ = (i′ n)A(n i), B′ = (i n)B(n x), C′ = (i′ n)C(x n), each restricted to n → n
/// and read as subsets of S_{n−1}. Products among (A_{i→i′}, B_{x→i}, C_{x→i′}) map
/// bijectively onto products among the outputs.
struct FactoredTriple {
  SetFamily a, b, c;
};

FactoredTriple factor_restriction(const SetFamily& a, const SetFamily& b, const SetFamily& c, int i, int i_prime,
                                  int x);

/// One rewriting of ab = c.
struct EquivalentTriple {
  std::string form;  // e.g. "(B, C^-1, A^-1)"
  SetFamily a, b, c;
};

/// The six rewritings, starting with the input itself.
std::array<EquivalentTriple, 6> equivalent_triples(const SetFamily& a, const SetFamily& b, const SetFamily& c);
/// Image of a witness of the input under rewriting `form` (0..5).
PFWitness map_witness(const PFWitness& w, int form);

enum class SearchMode { exact, heuristic };

struct MaxPFOptions {
  SearchMode mode = SearchMode::exact;
  std::uint64_t budget = 0;      // nodes (exact) or moves (heuristic); 0 picks a default
  std::uint64_t seed = 0xC0FFEE;
  int restarts = 4;
};

struct MaxPFResult {
  int degree = 0;
  SearchMode mode = SearchMode::exact;
  SetFamily best;                 // product-free subset of A_n
  bool optimal = false;           // exact search finished within budget
  bool budget_exhausted = false;
  std::uint64_t work = 0;         // nodes or moves used
  PFResult certificate;           // is_product_free(best), recomputed
  std::size_t family_best = 0;    // largest F_I^x (or inverse) in A_n
  std::string family_best_spec;
  std::uint64_t seed = 0;
};

inline constexpr int kMaxExactPFDegree = 5;
inline constexpr int kMaxHeuristicPFDegree = 7;

MaxPFResult max_product_free(int degree, const MaxPFOptions& options = {});

/// Independent oracle: largest product-free subset of A_n by trying every subset (n ≤ 4).
std::size_t exhaustive_max_product_free(int degree);

nlohmann::json to_json(const PFWitness& w);
nlohmann::json to_json(const PFResult& r);
nlohmann::json to_json(const FamilyMeasure& m);
nlohmann::json to_json(const MaxPFResult& r);

}  // namespace symspec
