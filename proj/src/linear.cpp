#include "symspec/linear.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "symspec/numeric.hpp"

namespace symspec {

CoeffMatrix::CoeffMatrix(Eigen::MatrixXd m, bool is_normalized)
    : degree(static_cast<int>(m.rows())), a(std::move(m)), normalized(is_normalized) {
  require(a.rows() == a.cols(), "coefficient matrix must be square");
  require(a.allFinite(), "coefficient matrix entries must be finite");
}

bool has_zero_margins(const CoeffMatrix& m, double tol) {
  return m.a.rowwise().sum().cwiseAbs().maxCoeff() <= tol && m.a.colwise().sum().cwiseAbs().maxCoeff() <= tol;
}

CoeffMatrix normalized_form(const GroupFunction& f) {
  const int n = f.degree();
  Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(n, n);
  const auto values = f.values();
  for_each_permutation(n, [&](const Permutation& p, Rank r, int) {
    for (int i = 0; i < n; ++i) sums(i, p[i]) += values[r];
  });
  const double mean = expectation(f);
  const double cond = static_cast<double>(factorial(n - 1));
  CoeffMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = (n - 1.0) / n * (sums(i, j) / cond - mean);
  // Entries are differences of conditional means whose averages over i or j equal E[f],
  // so margins vanish up to rounding; re-centre to make that exact to working precision.
  const Eigen::VectorXd rows = m.a.rowwise().mean();
  m.a.colwise() -= rows;
  const Eigen::RowVectorXd cols = m.a.colwise().mean();
  m.a.rowwise() -= cols;
  m.normalized = true;
  return m;
}

GroupFunction evaluate_linear(const CoeffMatrix& m) {
  const int n = m.degree;
  GroupFunction out(n);
  auto vals = out.values();
  for_each_permutation(n, [&](const Permutation& p, Rank r, int) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += m(i, p[i]);
    vals[r] = s;
  });
  return out;
}

GroupFunction evaluate_centered(const CoeffMatrix& m) {
  GroupFunction out = evaluate_linear(m);
  const double shift = m.a.sum() / m.degree;
  for (double& v : out.values()) v -= shift;
  return out;
}

double matrix_inner(const CoeffMatrix& m, const CoeffMatrix& n) {
  require(m.degree == n.degree, "degree mismatch");
  return (m.a.array() * n.a.array()).sum();
}

double parseval_inner(const CoeffMatrix& m, const CoeffMatrix& n) {
  require(m.normalized || has_zero_margins(m), "coefficient matrix is not in normalized form");
  require(m.degree >= 2, "degree must be at least 2");
  return matrix_inner(m, n) / (m.degree - 1);
}

double triple_linear_term(const CoeffMatrix& mf, const CoeffMatrix& mg, const CoeffMatrix& mh) {
  for (const auto* m : {&mf, &mg, &mh})
    require(m->normalized || has_zero_margins(*m), "coefficient matrix is not in normalized form");
  require(mf.degree == mg.degree && mg.degree == mh.degree, "degree mismatch");
  const double k = mf.degree - 1.0;
  return ((mg.a * mf.a).array() * mh.a.array()).sum() / (k * k);
}

BoundCheck matrix_triple_bound(const CoeffMatrix& m, const CoeffMatrix& n, const CoeffMatrix& s) {
  require(m.degree == n.degree && n.degree == s.degree, "degree mismatch");
  BoundCheck out;
  out.value = ((m.a * n.a).array() * s.a.array()).sum();
  out.bound = m.frobenius() * n.frobenius() * s.frobenius();
  out.holds = std::abs(out.value) <= out.bound + 1e-12;
  return out;
}

CoeffMatrix interval_slice(const CoeffMatrix& m, const Interval& in) {
  CoeffMatrix out(m.degree);
  for (int i = 0; i < m.degree; ++i)
    for (int j = 0; j < m.degree; ++j)
      if (in.contains(m(i, j))) out(i, j) = m(i, j);
  return out;
}

BoundCheck one_sided_parseval(const CoeffMatrix& m) {
  const auto g = evaluate_centered(m);
  BoundCheck out;
  out.value = inner_product(g, g);
  out.bound = 8.0 / m.degree * m.sum_squares();
  out.holds = out.value <= out.bound + 1e-12;
  return out;
}

SmallCoefficientCheck small_coefficient_globalness(const CoeffMatrix& m, double eps) {
  const int n = m.degree;
  require(n >= 4, "degree must be at least 4");
  require(m.a.cwiseAbs().maxCoeff() < eps, "coefficients must be smaller than eps in absolute value");
  const auto g = evaluate_centered(m);
  // One pass: squared values accumulated per (i, k, σ(i), σ(k)) with i < k.
  const std::size_t n2 = static_cast<std::size_t>(n) * n;
  std::vector<double> acc(n2 * n2, 0.0);
  const auto values = g.values();
  for_each_permutation(n, [&](const Permutation& p, Rank r, int) {
    const double v = values[r] * values[r];
    for (int i = 0; i < n; ++i)
      for (int k = i + 1; k < n; ++k) acc[(i * n + k) * n2 + p[i] * n + p[k]] += v;
  });
  SmallCoefficientCheck out;
  out.eps = eps;
  out.eps_prime = 9.0 * eps + std::sqrt(8.0 / (n - 2) * m.sum_squares());
  const double cell = static_cast<double>(factorial(n - 2));
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) {
          if (j == l) continue;
          const double norm = std::sqrt(acc[(i * n + k) * n2 + j * n + l] / cell);
          if (norm > out.worst_norm) {
            out.worst_norm = norm;
            out.worst = Restriction{{i, k}, {j, l}};
          }
        }
  out.holds = out.worst_norm <= out.eps_prime + 1e-9;
  return out;
}

LevelOneRatio level_one_ratio(const GroupFunction& f, double eps) {
  require(eps > 0.0, "eps must be positive");
  const auto m = normalized_form(f);
  LevelOneRatio out;
  double s = 0.0;
  for (int i = 0; i < m.degree; ++i)
    for (int j = 0; j < m.degree; ++j)
      if (std::abs(m(i, j)) < eps) s += m(i, j) * m(i, j);
  out.x2 = s / (m.degree - 1);
  out.mean = expectation(f);
  out.eps2 = std::max(eps, out.mean);
  out.ratio = out.mean > 0 ? out.x2 / (out.mean * out.eps2) : 0.0;
  return out;
}

nlohmann::json to_json(const CoeffMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.degree; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.degree; ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return {{"degree", m.degree}, {"normalized", m.normalized}, {"rows", rows}};
}

CoeffMatrix coeff_matrix_from_json(const nlohmann::json& j) {
  require(j.contains("degree") && j.contains("rows"), "matrix JSON needs \"degree\" and \"rows\"");
  const int n = j.at("degree").get<int>();
  require(n >= 1 && n <= kMaxDegree, "matrix degree out of range");
  const auto& rows = j.at("rows");
  require(rows.is_array() && static_cast<int>(rows.size()) == n, "matrix JSON must have n rows");
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i) {
    require(rows[i].is_array() && static_cast<int>(rows[i].size()) == n, "matrix JSON rows must have n entries");
    for (int k = 0; k < n; ++k) a(i, k) = rows[i][k].get<double>();
  }
  CoeffMatrix m(std::move(a));
  m.normalized = has_zero_margins(m);
  return m;
}

std::string to_csv(const CoeffMatrix& m) {
  std::ostringstream os;
  os << std::setprecision(17);
  for (int i = 0; i < m.degree; ++i) {
    for (int j = 0; j < m.degree; ++j) os << (j ? "," : "") << m(i, j);
    os << '\n';
  }
  return os.str();
}

}  // namespace symspec
