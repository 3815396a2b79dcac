#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "json.hpp"
#include "symspec/func_space.hpp"

namespace symspec {

/// n×n coefficient matrix (a_ij) of a linear function Σ a_ij x_{i→j}.
struct CoeffMatrix {
  int degree = 0;
  Eigen::MatrixXd a;
  bool normalized = false;

  CoeffMatrix() = default;
  explicit CoeffMatrix(int n) : degree(n), a(Eigen::MatrixXd::Zero(n, n)) {}
  CoeffMatrix(Eigen::MatrixXd m, bool is_normalized = false);

  double operator()(int i, int j) const { return a(i, j); }
  double& operator()(int i, int j) { return a(i, j); }
  double frobenius() const { return a.norm(); }
  double sum_squares() const { return a.squaredNorm(); }
};

inline constexpr double kNormalizedTolerance = 1e-10;

/// Zero row and column sums within `tol`.
bool has_zero_margins(const CoeffMatrix& m, double tol = kNormalizedTolerance);

/// a_ij = (n−1)/n · (E[f_{i→j}] − E[f]).
CoeffMatrix normalized_form(const GroupFunction& f);

/// π ↦ Σ_i a_{i,π(i)}.
GroupFunction evaluate_linear(const CoeffMatrix& m);
/// π ↦ Σ_ij a_ij (x_{i→j}(π) − 1/n).
GroupFunction evaluate_centered(const CoeffMatrix& m);

/// Σ m_ij n_ij.
double matrix_inner(const CoeffMatrix& m, const CoeffMatrix& n);

/// Σ m_ij n_ij / (n−1); requires m to be normalized.
double parseval_inner(const CoeffMatrix& m, const CoeffMatrix& n);

/// E_{σ,τ} f(σ) g(τ) h(στ) for linear f, g, h in normalized form.
double triple_linear_term(const CoeffMatrix& mf, const CoeffMatrix& mg, const CoeffMatrix& mh);

struct BoundCheck {
  double value = 0.0;
  double bound = 0.0;
  bool holds = true;
};

/// |<MN, S>| against ||M|| ||N|| ||S|| (Frobenius).
BoundCheck matrix_triple_bound(const CoeffMatrix& m, const CoeffMatrix& n, const CoeffMatrix& s);

/// Real interval with open or closed ends; infinite ends are allowed.
struct Interval {
  double lo = -INFINITY;
  double hi = INFINITY;
  bool lo_closed = false;
  bool hi_closed = false;

  bool contains(double x) const {
    return (lo_closed ? x >= lo : x > lo) && (hi_closed ? x <= hi : x < hi);
  }
  static Interval open(double lo, double hi) { return {lo, hi, false, false}; }
  static Interval closed_open(double lo, double hi) { return {lo, hi, true, false}; }
};

/// M_I: keeps entries lying in I, zeroes the rest.
CoeffMatrix interval_slice(const CoeffMatrix& m, const Interval& in);

/// ||Σ a_ij (x_{i→j} − 1/n)||² (by enumeration) against (8/n) Σ a_ij².
BoundCheck one_sided_parseval(const CoeffMatrix& m);

struct SmallCoefficientCheck {
  double eps = 0.0;
  double eps_prime = 0.0;    // 9ε + sqrt(8/(n−2) Σ a²)
  double worst_norm = 0.0;   // max over 2-restrictions of ||g_{i→j,k→l}||
  Restriction worst;
  bool holds = true;
};

/// Restricted norms of Σ a_ij (x_{i→j} − 1/n) over every 2-umvirate, compared with ε′.
/// Requires max |a_ij| < eps.
SmallCoefficientCheck small_coefficient_globalness(const CoeffMatrix& m, double eps);

struct LevelOneRatio {
  double x2 = 0.0;     // Σ a_ij² 1{|a_ij| < ε} / (n−1)
  double mean = 0.0;   // E[f]
  double eps2 = 0.0;   // max(ε, E[f])
  double ratio = 0.0;  // x2 / (mean · eps2)
};

/// Diagnostic only: the polylog factor in the bound is not pinned down.
LevelOneRatio level_one_ratio(const GroupFunction& f, double eps);

nlohmann::json to_json(const CoeffMatrix& m);
CoeffMatrix coeff_matrix_from_json(const nlohmann::json& j);
std::string to_csv(const CoeffMatrix& m);

}  // namespace symspec
