#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "symspec/func_space.hpp"

namespace symspec {

/// Outcome of one named invariant. `value` is the measured error or quantity,
/// `tolerance` the limit it was held to.
struct Check {
  std::string name;  // "module.invariant"
  bool passed = true;
  bool skipped = false;
  double value = 0.0;
  double tolerance = 0.0;
  std::uint64_t cases = 0;
  std::string detail;
};

/// Deterministic random source for the property checks. Draws are built from raw
/// 64-bit outputs, so they do not depend on the standard library's distributions.
class CheckRng {
 public:
  explicit CheckRng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
  bool coin(double p) { return uniform() < p; }

  GroupFunction function(int n);  // entries uniform in [−1, 1)
  GroupFunction indicator(int n, double p, bool even_only = false);
  SetFamily set(int n, double p, DensityConvention c = DensityConvention::over_Sn);
  std::vector<int> subset(int n, int size);  // distinct points, ascending

 private:
  std::mt19937_64 engine_;
};

namespace checks {

// Permutations.
Check rank_roundtrip(int n);
Check sign_homomorphism(int n, CheckRng& rng, int trials);

// Representations.
Check dimension_squares(int n);
Check hook_characters(int n);
std::vector<Check> projector_identities(int n, CheckRng& rng);  // idempotence, orthogonality, completeness
Check sign_transpose_duality(int n, CheckRng& rng);

// Linear functions.
Check normalized_margins(int n, CheckRng& rng, int trials);
Check parseval(int n, CheckRng& rng, int trials);
Check convolution_formula(int n, CheckRng& rng, int trials);
Check linear_is_level_one(int n, CheckRng& rng, int trials);
Check matrix_triple_bound(int n, CheckRng& rng, int trials);
Check one_sided_parseval(int n, CheckRng& rng, int trials);

// Cayley operators.
Check trace_identity(int n, CheckRng& rng, int trials);
Check radius_from_projection(int n, CheckRng& rng, int d);
Check eigen_multiplicity(int n, CheckRng& rng);
Check class_function_scalars(int n);
Check triple_reassembly(int n, CheckRng& rng, int trials);
std::vector<Check> an_triple_bounds(int n, CheckRng& rng, int trials);  // high degree, residual

// Structure.
Check globalness_oracle(int n, CheckRng& rng, int trials, int t);
Check star_correlation(int n, CheckRng& rng, int trials);
Check star_claim_samples(CheckRng& rng, int samples);
Check disjointness_core(int n, CheckRng& rng, int trials);
Check disjointness_conditional(int n, CheckRng& rng, int trials);
Check dyadic_bound(CheckRng& rng, int trials);

// Families.
Check extremal_families(int n, int max_i);
Check avoid_star_triples(int n, CheckRng& rng, int samples);
Check factoring(int n, CheckRng& rng, int trials);
Check equivalent_triples(int n, CheckRng& rng, int trials);
Check maxpf_oracle(int n, std::uint64_t seed);    // exact search vs exhaustive (n ≤ 4)
Check maxpf_reproducible(int n, std::uint64_t seed);

}  // namespace checks

struct VerifyOptions {
  int degree = 5;
  std::string suite = "core";  // "core" or "all"
  std::uint64_t seed = 0xC0FFEE;
  bool slow = false;
};

inline constexpr int kMinVerifyDegree = 3;
inline constexpr int kMaxVerifyDegree = 7;

struct VerifyReport {
  VerifyOptions options;
  std::vector<Check> checks;

  bool passed() const;
  std::vector<std::string> failures() const;
};

VerifyReport run_verify(const VerifyOptions& options);

nlohmann::json to_json(const Check& c);
nlohmann::json to_json(const VerifyReport& r);

}  // namespace symspec
