#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "symspec/linear.hpp"

namespace symspec {

inline constexpr int kMaxGlobalnessSize = 4;

struct GlobalnessReport {
  int t = 0;
  DensityConvention convention = DensityConvention::over_Sn;
  double measure = 0.0;                     // μ(A) in the convention
  Restriction worst;                        // maximizing restriction, sizes 1..t
  double worst_density = 0.0;
  double eps = 0.0;                         // worst_density = ε²
  double relative_k = 0.0;                  // worst_density / μ(A); 0 for empty A
  std::vector<double> max_density_by_size;  // entry s−1 for restrictions of size s
  std::vector<Restriction> argmax_by_size;
};

/// Largest density of A inside any umvirate U_{I→J} with 1 ≤ |I| ≤ t.
/// Densities are relative to U_{I→J} ∩ A_n when A uses the A_n convention.
GlobalnessReport globalness(const SetFamily& a, int t);

struct BumpLevel {
  int t = 0;
  Restriction restriction;
  double density = 0.0;
  double threshold = 0.0;  // n^{t/4} μ(A)
  double ratio = 0.0;      // density / threshold
};

struct BumpSearch {
  int r = 0;
  double measure = 0.0;
  std::vector<BumpLevel> levels;  // t = 1..min(4r, n−1)
  BumpLevel best;                 // largest ratio
  bool found = false;             // best.ratio ≥ 1
};

/// Looks for a t-umvirate (t ≤ 4r) where A has density ≥ n^{t/4} μ(A). Reports only.
BumpSearch density_bump_search(const SetFamily& a, int r = 1);

struct StructureDecomposition {
  CoeffMatrix source;
  double eps = 0.0;
  CoeffMatrix negative;    // entries in (−∞, 0)
  CoeffMatrix random;      // entries in (0, ε)
  CoeffMatrix structured;  // entries in [ε, ∞)
};

StructureDecomposition decompose_coeffs(const CoeffMatrix& m, double eps);

/// Thresholds for a triple (A, B, C) of densities (α, β, γ) in S_n.
struct Parameters {
  int degree = 0;
  double R = 0.0;  // 0 unless δ came from log^{−R} n
  double delta = 0.25;
  double alpha = 0.0, beta = 0.0, gamma = 0.0;
  double eps_a = 0.0, eps_b = 0.0, eps_c = 0.0;  // ε_A = nδα min(β, γ), cyclically
};

inline constexpr double kDefaultDelta = 0.25;

Parameters make_parameters(int degree, double alpha, double beta, double gamma, double delta = kDefaultDelta);
/// δ = (ln n)^{−R}.
Parameters literal_parameters(int degree, double R, double alpha, double beta, double gamma);
/// Parameters whose densities are μ(A), μ(B), μ(C) in S_n.
Parameters parameters_for(const SetFamily& a, const SetFamily& b, const SetFamily& c, double delta = kDefaultDelta);

enum class Role { a, b, c };
double role_eps(const Parameters& p, Role role);

/// Associated stars of A. Stars are read from the normalized coefficient matrix
/// (a_ij): L(i) = {j : a_ij > ε}, L′(i) = {j : a_ji > ε}, s(i) = Σ_{j∈L(i)} a_ij/(n−1).
/// A star is large when s(i) > δ μ(A), with μ over S_n.
struct StarSystem {
  int degree = 0;
  double measure = 0.0;
  double eps = 0.0;
  double delta = 0.0;
  CoeffMatrix matrix;
  std::vector<std::vector<int>> rows;  // L(i)
  std::vector<std::vector<int>> cols;  // L′(i)
  std::vector<double> s, s_inv;
  std::vector<bool> large, large_inv;
  CoeffMatrix structured;  // M_[ε,∞)
  CoeffMatrix star;        // structured with small-star rows zeroed
  CoeffMatrix star_inv;    // structuredᵗ with small inverse-star rows zeroed

  double threshold() const { return delta * measure; }
};

StarSystem star_system(const SetFamily& a, double eps, double delta);
StarSystem star_system(const SetFamily& a, const Parameters& p, Role role);

/// {σ : σ(centre) ∈ points}, or {σ : σ⁻¹(centre) ∈ points} for an inverse star.
struct Star {
  bool inverse = false;
  int centre = 0;
  std::vector<int> points;

  bool contains(const Permutation& p) const;
  double measure(int degree) const;  // |points| / n
  std::string to_string() const;
};

/// Large stars and inverse stars of the system.
std::vector<Star> large_stars(const StarSystem& s);

struct StarClaimCheck {
  double zeta = 0.0;
  double lhs = 0.0;  // ||v||² + ||u||² + <v,u> after scaling to ||v||₁ + ||u||₁ = 1
  double rhs = 0.0;  // 1 − ζ(1 − ζ)
  bool holds = true;
};

/// Requires nonnegative v, u of equal length, not both zero, and every scaled entry ≤ 1 − ζ.
StarClaimCheck star_claim(std::vector<double> v, std::vector<double> u, double zeta);

/// <X·1, Y·1> and the literal Σ_{i,j,k} x_ij y_ik.
struct OnesIdentity {
  double inner = 0.0;
  double triple_sum = 0.0;
};
OnesIdentity ones_identity(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y);

struct DisjointnessReport {
  double measure = 0.0;                // μ(E)
  double eps = 0.0, delta = 0.0;
  std::vector<double> overlaps;        // μ(E ∩ S)
  std::vector<double> star_measures;   // μ(S)
  std::vector<std::string> failed_hypotheses;
  bool hypotheses_hold = false;
  double lhs = 0.0;                    // Σ μ(E ∩ S)
  double rhs = 0.0;                    // μ(E) + 20μ(E)²/(δ²ε²) + 4/(δ²n)
  bool conclusion_holds = true;        // meaningful only when hypotheses_hold
  // Hypothesis-free steps of the argument.
  double pair_sum = 0.0;               // Σ_{pairs} μ(S₁ ∩ S₂)
  bool bonferroni_holds = true;        // lhs − pair_sum ≤ μ(E)
  double worst_pair_excess = 0.0;      // max μ(S₁∩S₂) − (n/(n−1)μ(S₁)μ(S₂) + 1/n) over pairs
  bool pair_bound_holds = true;        // pairs at distinct (kind, centre)
};

DisjointnessReport star_disjointness_check(const SetFamily& e, const std::vector<Star>& stars, double eps,
                                           double delta);

/// |<M·1, N·1>| ≤ sqrt(m′n′) ||M|| ||N||; rows of M (N) must have at most m′ (n′) nonzeros.
BoundCheck dyadic_overlap_bound(const Eigen::MatrixXd& m, const Eigen::MatrixXd& n, int m_limit, int n_limit);
/// Limits taken from the matrices themselves.
BoundCheck dyadic_overlap_bound(const Eigen::MatrixXd& m, const Eigen::MatrixXd& n);

struct L1BoundReport {
  double gate_lhs = 0.0;  // 1000/(δ⁵n²)
  double gate_rhs = 0.0;  // α min(β, γ)²
  bool gate_holds = false;
  double value = 0.0;      // (||A_⋆||₁ + ||A′_⋆||₁)/(n−1)
  double star_sum = 0.0;   // Σ over large stars and inverse stars of μ(A ∩ S)
  bool star_sum_holds = true;  // value ≤ star_sum, unconditional
  double bound = 0.0;      // α(1 + δ)
  double explicit_bound = 0.0;  // α + 20α²/(δ²ε²) + 4/(δ²n)
  bool holds = true;       // value ≤ explicit_bound, asserted only behind the gate
};

L1BoundReport l1_bound(const SetFamily& a, const StarSystem& s, const Parameters& p, Role role);

/// Lower bounds on the three significant negative terms, each in the form
/// lhs ≥ rhs after dividing by (n−1)².
struct SimpleLowerBound {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double star_form = 0.0;  // −β Σ s′_A s′_C and analogues
  bool holds = true;
};

/// All ingredients of <BA, C> for the split of each matrix into (−, rand, struc).
struct CountingTerms {
  Parameters params;
  double total = 0.0;                 // <BA, C>
  double terms[3][3][3] = {};         // <B_x A_y, C_z>, index 0 = −, 1 = rand, 2 = struc
  double reassembly_error = 0.0;
  bool signs_ok = true;               // terms with an even number of − parts are ≥ 0, odd ≤ 0
  double b_struc_a_neg_c_struc = 0.0;
  double b_neg_a_struc_c_struc = 0.0;
  double b_struc_a_struc_c_neg = 0.0;
  double residual = 0.0;              // total minus the three named terms
  std::vector<SimpleLowerBound> lower_bounds;
  double star_a_inv_c_inv = 0.0;      // <A′_⋆ 1, C′_⋆ 1>
  double star_a_b_inv = 0.0;          // <A_⋆ 1, B′_⋆ 1>
  double star_b_c = 0.0;              // <B_⋆ 1, C_⋆ 1>
  double star_penalty = 0.0;          // 2/(n−1)² |β·… + γ·… + α·…|
  double linear_estimate = 0.0;       // 2αβγ + 2<BA, C>/(n−1)²
  std::optional<double> probability;  // Pr[σ∈A, τ∈B, στ∈C], when |A||B| is small enough
};

CountingTerms counting_terms(const SetFamily& a, const SetFamily& b, const SetFamily& c, const Parameters& p);

/// 1-based sources and targets plus the "1->2" text form.
nlohmann::json to_json(const Restriction& r);
nlohmann::json to_json(const GlobalnessReport& r);
nlohmann::json to_json(const BumpSearch& r);
nlohmann::json to_json(const StructureDecomposition& d);
nlohmann::json to_json(const Parameters& p);
nlohmann::json to_json(const StarSystem& s);
nlohmann::json to_json(const StarClaimCheck& c);
nlohmann::json to_json(const DisjointnessReport& r);
nlohmann::json to_json(const L1BoundReport& r);
nlohmann::json to_json(const CountingTerms& t);
nlohmann::json to_json(const BoundCheck& b);

}  // namespace symspec
