#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "json.hpp"
#include "symspec/repr.hpp"

namespace symspec {

enum class Side { left, right };

/// L_f g(σ) = E_π f(π) g(πσ);  R_f g(σ) = E_π g(σπ) f(π).
struct CayleyOperator {
  GroupFunction kernel;
  Side side = Side::left;
};

/// Dense kernels up to this degree; sparse kernels up to kMaxDenseDegree.
inline constexpr int kMaxDenseKernelDegree = 8;
inline constexpr std::size_t kMaxSparseSupport = 100'000;

/// Exact convolution, summing over the kernel's support.
GroupFunction apply(const CayleyOperator& op, const GroupFunction& g);
inline GroupFunction apply_left(const GroupFunction& f, const GroupFunction& g) { return apply({f, Side::left}, g); }
inline GroupFunction apply_right(const GroupFunction& f, const GroupFunction& g) { return apply({f, Side::right}, g); }

/// g ↦ g(· ρ).
GroupFunction right_translate(const GroupFunction& g, const Permutation& rho);

inline constexpr int kMaxExplicitDegree = 6;

/// n!×n! matrix K with (op g)(σ) = Σ_τ K[σ][τ] g(τ).
Eigen::MatrixXd operator_matrix(const CayleyOperator& op);

struct TraceCheck {
  double trace = 0.0;    // tr(K* K)
  double norm_sq = 0.0;  // ||f||²
};

TraceCheck trace_check(const GroupFunction& f, Side side = Side::left);

enum class RadiusMethod {
  automatic,
  explicit_matrix,      // dense projector and compression on all of V_λ (n ≤ 6)
  permutation_module,   // compression to V_λ ∩ M^λ, one copy of each eigenvalue
};

struct EigenCluster {
  double value = 0.0;
  std::size_t mult = 0;
};

struct PartitionSpectrum {
  Partition lambda;
  std::uint64_t dim = 0;
  double r = 0.0;
  std::vector<EigenCluster> eigs;  // of L*L on V_λ, descending
  bool multiplicity_ok = true;     // every cluster has multiplicity ≥ dim λ
  std::string method;
};

/// Relative tolerance for grouping eigenvalues into clusters.
inline constexpr double kClusterTolerance = 1e-8;

/// Spectrum of L_f* L_f restricted to V_λ.
PartitionSpectrum isotypic_radius(const GroupFunction& f, const Partition& lambda,
                                  RadiusMethod method = RadiusMethod::automatic, bool allow_slow = false);

struct LevelRadius {
  int d = 0;
  double r = 0.0;                  // from kernel f
  double r_from_projection = 0.0;  // from kernel f^{=d}
  std::uint64_t dim = 0;           // dim V_{=d}
  double eps = 0.0;                // max ||f_{I→J}|| over t = min(2d, n−1) restrictions
  double diagnostic_ratio = 0.0;   // r n^{d/2} / (||f|| ε)
};

/// Operator norm of L_f on V_{=d}, also recomputed with kernel f^{=d}.
LevelRadius level_radius(const GroupFunction& f, int d, RadiusMethod method = RadiusMethod::automatic,
                         bool allow_slow = false);

struct SpectralReport {
  int degree = 0;
  std::vector<LevelRadius> levels;
  std::vector<PartitionSpectrum> partitions;
  double trace = 0.0;
  double norm_sq = 0.0;
  double cluster_tolerance = kClusterTolerance;
};

SpectralReport spectral_report(const GroupFunction& f, int max_level, RadiusMethod method = RadiusMethod::automatic,
                               bool allow_slow = false);

struct TripleDecomposition {
  int d = 0;
  double total = 0.0;                 // E f(σ) g(τ) h(στ) = <g, L_f h>
  std::vector<double> level_terms;    // <g^{=i}, L_f h^{=i}>, i ≤ d
  std::vector<double> twisted_terms;  // <g̃^{=i}, L_f̃ h̃^{=i}>, i ≤ d
  double remainder = 0.0;             // Σ over reduced level > d
  double reassembly_error = 0.0;
  double high_degree_bound = 0.0;     // (n/(e(d+1)))^{-(d+1)/2} ||f|| ||g|| ||h||
  bool high_degree_holds = true;
  // Filled when f, g, h are indicators of subsets of A_n and d == 1.
  bool an_indicators = false;
  double alpha = 0.0, beta = 0.0, gamma = 0.0;  // densities in S_n
  double linear_term = 0.0;                     // E f^{=1}(σ) g^{=1}(τ) h^{=1}(στ)
  double residual = 0.0;                        // |total − 2αβγ − 2 linear|
  double residual_bound = 0.0;                  // (e/n) sqrt(αβγ)
  bool residual_holds = true;
};

inline constexpr int kMaxTripleDegree = 7;

/// Requires d < n/2 − 1 so that low degrees and low dual degrees do not overlap.
TripleDecomposition triple_expectation(const GroupFunction& f, const GroupFunction& g, const GroupFunction& h,
                                       int d = 1);

nlohmann::json to_json(const SpectralReport& r);
nlohmann::json to_json(const TripleDecomposition& t);

}  // namespace symspec
