#include "symspec/structure.hpp"

#include <algorithm>
#include <cmath>

namespace symspec {

namespace {

constexpr double kTol = 1e-12;

std::vector<Rank> ambient_members(const SetFamily& a) {
  if (a.convention() == DensityConvention::over_Sn) return a.members();
  std::vector<Rank> even;
  even.reserve(a.even_count());
  for (Rank r : a.members())
    if (sign(unrank(r, a.degree())) > 0) even.push_back(r);
  return even;
}

double ones_inner(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
  return x.rowwise().sum().dot(y.rowwise().sum());
}

nlohmann::json points_json(const std::vector<int>& pts) {
  auto out = nlohmann::json::array();
  for (int p : pts) out.push_back(p + 1);
  return out;
}

}  // namespace

GlobalnessReport globalness(const SetFamily& a, int t) {
  const int n = a.degree();
  require(t >= 1 && t <= kMaxGlobalnessSize, "globalness order t must be between 1 and 4");
  require(n <= kMaxDenseDegree, "globalness scans need degree <= 10");
  require(t < n, "globalness order t must be smaller than the degree");

  GlobalnessReport rep;
  rep.t = t;
  rep.convention = a.convention();
  rep.measure = a.measure();
  const auto ranks = ambient_members(a);
  rep.worst_density = -1.0;
  for (int s = 1; s <= t; ++s) {
    const bool fixed_size = rep.convention == DensityConvention::over_Sn || n - s >= 2;
    double cell = static_cast<double>(factorial(n - s));
    if (rep.convention == DensityConvention::over_An) cell /= 2;
    double best = -1.0;
    Restriction arg;
    scan_restrictions(n, s, ranks, {}, [&](const RestrictionTotal& tot) {
      const double size = fixed_size ? cell : static_cast<double>(umvirate_size(n, tot.restriction, rep.convention));
      if (size == 0.0) return;
      const double d = static_cast<double>(tot.count) / size;
      if (d > best) {
        best = d;
        arg = tot.restriction;
      }
    });
    rep.max_density_by_size.push_back(best);
    rep.argmax_by_size.push_back(arg);
    if (best > rep.worst_density) {
      rep.worst_density = best;
      rep.worst = arg;
    }
  }
  rep.eps = std::sqrt(rep.worst_density);
  rep.relative_k = rep.measure > 0.0 ? rep.worst_density / rep.measure : 0.0;
  return rep;
}

BumpSearch density_bump_search(const SetFamily& a, int r) {
  require(!a.empty(), "density bump search needs a nonempty set");
  require(r >= 1 && 4 * r <= kMaxGlobalnessSize, "bump search supports r = 1 (t <= 4)");
  const int n = a.degree();
  const int tmax = std::min(4 * r, n - 1);
  require(tmax >= 1, "degree too small for a bump search");
  const auto g = globalness(a, tmax);
  BumpSearch out;
  out.r = r;
  out.measure = g.measure;
  for (int t = 1; t <= tmax; ++t) {
    BumpLevel lvl;
    lvl.t = t;
    lvl.restriction = g.argmax_by_size[t - 1];
    lvl.density = g.max_density_by_size[t - 1];
    lvl.threshold = std::pow(static_cast<double>(n), t / 4.0) * g.measure;
    lvl.ratio = lvl.density / lvl.threshold;
    if (out.levels.empty() || lvl.ratio > out.best.ratio) out.best = lvl;
    out.levels.push_back(lvl);
  }
  out.found = out.best.ratio >= 1.0;
  return out;
}

StructureDecomposition decompose_coeffs(const CoeffMatrix& m, double eps) {
  require(eps > 0.0, "structure threshold must be positive");
  StructureDecomposition d;
  d.source = m;
  d.eps = eps;
  d.negative = interval_slice(m, Interval::open(-INFINITY, 0.0));
  d.random = interval_slice(m, Interval::open(0.0, eps));
  d.structured = interval_slice(m, Interval::closed_open(eps, INFINITY));
  return d;
}

Parameters make_parameters(int degree, double alpha, double beta, double gamma, double delta) {
  require(degree >= 2, "degree must be at least 2");
  require(delta > 0.0 && delta < 1.0, "delta must lie in (0, 1)");
  for (double x : {alpha, beta, gamma}) require(x >= 0.0 && x <= 1.0, "densities must lie in [0, 1]");
  Parameters p;
  p.degree = degree;
  p.delta = delta;
  p.alpha = alpha;
  p.beta = beta;
  p.gamma = gamma;
  const double nd = degree * delta;
  p.eps_a = nd * alpha * std::min(beta, gamma);
  p.eps_b = nd * beta * std::min(gamma, alpha);
  p.eps_c = nd * gamma * std::min(alpha, beta);
  return p;
}

Parameters literal_parameters(int degree, double R, double alpha, double beta, double gamma) {
  require(R > 0.0, "R must be positive");
  require(degree >= 3, "log^{-R} n needs n >= 3");
  auto p = make_parameters(degree, alpha, beta, gamma, std::pow(std::log(static_cast<double>(degree)), -R));
  p.R = R;
  return p;
}

Parameters parameters_for(const SetFamily& a, const SetFamily& b, const SetFamily& c, double delta) {
  require(a.degree() == b.degree() && b.degree() == c.degree(), "degree mismatch");
  const auto sn = DensityConvention::over_Sn;
  return make_parameters(a.degree(), a.measure(sn), b.measure(sn), c.measure(sn), delta);
}

double role_eps(const Parameters& p, Role role) {
  switch (role) {
    case Role::a: return p.eps_a;
    case Role::b: return p.eps_b;
    case Role::c: return p.eps_c;
  }
  return 0.0;
}

StarSystem star_system(const SetFamily& a, double eps, double delta) {
  const int n = a.degree();
  require(n >= 2 && n <= kMaxDenseDegree, "star systems need 2 <= degree <= 10");
  require(eps >= 0.0, "star threshold must be nonnegative");
  require(delta > 0.0 && delta < 1.0, "delta must lie in (0, 1)");
  StarSystem s;
  s.degree = n;
  s.measure = a.measure(DensityConvention::over_Sn);
  s.eps = eps;
  s.delta = delta;
  s.matrix = normalized_form(a.indicator());
  s.rows.resize(n);
  s.cols.resize(n);
  s.s.assign(n, 0.0);
  s.s_inv.assign(n, 0.0);
  s.large.assign(n, false);
  s.large_inv.assign(n, false);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (s.matrix(i, j) > eps) {
        s.rows[i].push_back(j);
        s.s[i] += s.matrix(i, j);
      }
      if (s.matrix(j, i) > eps) {
        s.cols[i].push_back(j);
        s.s_inv[i] += s.matrix(j, i);
      }
    }
    s.s[i] /= n - 1;
    s.s_inv[i] /= n - 1;
    s.large[i] = s.s[i] > s.threshold();
    s.large_inv[i] = s.s_inv[i] > s.threshold();
  }
  s.structured = interval_slice(s.matrix, Interval::closed_open(eps, INFINITY));
  s.star = s.structured;
  s.star_inv = CoeffMatrix(Eigen::MatrixXd(s.structured.a.transpose()));
  for (int i = 0; i < n; ++i) {
    if (!s.large[i]) s.star.a.row(i).setZero();
    if (!s.large_inv[i]) s.star_inv.a.row(i).setZero();
  }
  return s;
}

StarSystem star_system(const SetFamily& a, const Parameters& p, Role role) {
  require(p.degree == a.degree(), "parameters are for a different degree");
  return star_system(a, role_eps(p, role), p.delta);
}

bool Star::contains(const Permutation& p) const {
  if (!inverse) return std::find(points.begin(), points.end(), p[centre]) != points.end();
  return std::any_of(points.begin(), points.end(), [&](int j) { return p[j] == centre; });
}

double Star::measure(int degree) const { return static_cast<double>(points.size()) / degree; }

std::string Star::to_string() const {
  std::string set = "{";
  for (std::size_t k = 0; k < points.size(); ++k) set += (k ? "," : "") + std::to_string(points[k] + 1);
  set += "}";
  const auto c = std::to_string(centre + 1);
  return inverse ? set + "->" + c : c + "->" + set;
}

std::vector<Star> large_stars(const StarSystem& s) {
  std::vector<Star> out;
  for (int i = 0; i < s.degree; ++i)
    if (s.large[i] && !s.rows[i].empty()) out.push_back({false, i, s.rows[i]});
  for (int i = 0; i < s.degree; ++i)
    if (s.large_inv[i] && !s.cols[i].empty()) out.push_back({true, i, s.cols[i]});
  return out;
}

StarClaimCheck star_claim(std::vector<double> v, std::vector<double> u, double zeta) {
  require(v.size() == u.size() && !v.empty(), "v and u must have the same nonzero length");
  require(zeta >= 0.0 && zeta <= 1.0, "zeta must lie in [0, 1]");
  double total = 0.0;
  for (const auto* w : {&v, &u})
    for (double x : *w) {
      require(std::isfinite(x) && x >= 0.0, "v and u must be nonnegative");
      total += x;
    }
  require(total > 0.0, "v and u cannot both be zero");
  for (auto* w : {&v, &u})
    for (double& x : *w) {
      x /= total;
      require(x <= 1.0 - zeta + kTol, "entries must lie in [0, 1 - zeta] after normalization");
    }
  StarClaimCheck c;
  c.zeta = zeta;
  for (std::size_t i = 0; i < v.size(); ++i) c.lhs += v[i] * v[i] + u[i] * u[i] + v[i] * u[i];
  c.rhs = 1.0 - zeta * (1.0 - zeta);
  c.holds = c.lhs <= c.rhs + kTol;
  return c;
}

OnesIdentity ones_identity(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
  require(x.rows() == y.rows(), "row count mismatch");
  OnesIdentity out;
  out.inner = ones_inner(x, y);
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j)
      for (Eigen::Index k = 0; k < y.cols(); ++k) out.triple_sum += x(i, j) * y(i, k);
  return out;
}

DisjointnessReport star_disjointness_check(const SetFamily& e, const std::vector<Star>& stars, double eps,
                                           double delta) {
  const int n = e.degree();
  require(eps > 0.0 && delta > 0.0, "eps and delta must be positive");
  require(stars.size() <= 64, "at most 64 stars");
  for (const auto& s : stars) {
    require(s.centre >= 0 && s.centre < n, "star centre out of range");
    unsigned seen = 0;
    for (int x : s.points) {
      require(x >= 0 && x < n && !((seen >> x) & 1u), "star points must be distinct and in range");
      seen |= 1u << x;
    }
  }
  DisjointnessReport rep;
  rep.eps = eps;
  rep.delta = delta;
  rep.measure = e.measure(DensityConvention::over_Sn);
  const std::size_t k = stars.size();
  std::vector<std::uint64_t> inside(k, 0);
  std::vector<std::uint64_t> pair_count(k * k, 0);
  for_each_permutation(n, [&](const Permutation& p, Rank r, int) {
    std::uint64_t mask = 0;
    for (std::size_t a = 0; a < k; ++a)
      if (stars[a].contains(p)) mask |= std::uint64_t{1} << a;
    if (!mask) return;
    const bool in_e = e.contains(r);
    for (std::size_t a = 0; a < k; ++a) {
      if (!((mask >> a) & 1u)) continue;
      inside[a] += in_e;
      for (std::size_t b = a + 1; b < k; ++b) pair_count[a * k + b] += (mask >> b) & 1u;
    }
  });
  const double total = static_cast<double>(factorial(n));
  for (std::size_t a = 0; a < k; ++a) {
    rep.overlaps.push_back(inside[a] / total);
    rep.star_measures.push_back(stars[a].measure(n));
    rep.lhs += rep.overlaps.back();
  }

  for (std::size_t a = 0; a < k; ++a) {
    const auto name = "star " + stars[a].to_string();
    if (rep.overlaps[a] < delta * rep.measure) rep.failed_hypotheses.push_back(name + ": mu(E&S) < delta*mu(E)");
    if (rep.overlaps[a] < eps / 2 * rep.star_measures[a])
      rep.failed_hypotheses.push_back(name + ": mu(E&S) < (eps/2)*mu(S)");
  }
  const double lo = 100.0 / (delta * delta * n), hi = delta * delta * eps * eps / 100.0;
  if (rep.measure < lo) rep.failed_hypotheses.push_back("mu(E) < 100/(delta^2 n)");
  if (rep.measure > hi) rep.failed_hypotheses.push_back("mu(E) > delta^2 eps^2 / 100");
  rep.hypotheses_hold = rep.failed_hypotheses.empty();
  rep.rhs = rep.measure + 20.0 * rep.measure * rep.measure / (delta * delta * eps * eps) + 4.0 / (delta * delta * n);
  rep.conclusion_holds = rep.lhs <= rep.rhs + kTol;

  rep.worst_pair_excess = -INFINITY;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      const double both = pair_count[a * k + b] / total;
      rep.pair_sum += both;
      if (stars[a].inverse == stars[b].inverse && stars[a].centre == stars[b].centre) continue;
      const double cap = n / (n - 1.0) * rep.star_measures[a] * rep.star_measures[b] + 1.0 / n;
      rep.worst_pair_excess = std::max(rep.worst_pair_excess, both - cap);
    }
  if (!std::isfinite(rep.worst_pair_excess)) rep.worst_pair_excess = 0.0;
  rep.pair_bound_holds = rep.worst_pair_excess <= kTol;
  rep.bonferroni_holds = rep.lhs - rep.pair_sum <= rep.measure + kTol;
  return rep;
}

BoundCheck dyadic_overlap_bound(const Eigen::MatrixXd& m, const Eigen::MatrixXd& n, int m_limit, int n_limit) {
  require(m.rows() == n.rows(), "row count mismatch");
  require(m_limit >= 0 && n_limit >= 0, "row support limits must be nonnegative");
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    require((m.row(i).array() != 0.0).count() <= m_limit, "row support limit violated for M");
    require((n.row(i).array() != 0.0).count() <= n_limit, "row support limit violated for N");
  }
  BoundCheck c;
  c.value = std::abs(ones_inner(m, n));
  c.bound = std::sqrt(static_cast<double>(m_limit) * n_limit) * m.norm() * n.norm();
  c.holds = c.value <= c.bound * (1.0 + 1e-12) + 1e-300;
  return c;
}

BoundCheck dyadic_overlap_bound(const Eigen::MatrixXd& m, const Eigen::MatrixXd& n) {
  int ml = 0, nl = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) ml = std::max<int>(ml, (m.row(i).array() != 0.0).count());
  for (Eigen::Index i = 0; i < n.rows(); ++i) nl = std::max<int>(nl, (n.row(i).array() != 0.0).count());
  return dyadic_overlap_bound(m, n, ml, nl);
}

L1BoundReport l1_bound(const SetFamily& a, const StarSystem& s, const Parameters& p, Role role) {
  const int n = a.degree();
  require(s.degree == n && p.degree == n, "degree mismatch");
  double own = p.alpha, x = p.beta, y = p.gamma;
  if (role == Role::b) own = p.beta, x = p.gamma, y = p.alpha;
  if (role == Role::c) own = p.gamma, x = p.alpha, y = p.beta;
  const double eps = role_eps(p, role), d = p.delta;
  L1BoundReport r;
  r.gate_lhs = 1000.0 / (std::pow(d, 5) * n * n);
  r.gate_rhs = own * std::pow(std::min(x, y), 2);
  r.gate_holds = r.gate_lhs <= r.gate_rhs;
  r.value = (s.star.a.cwiseAbs().sum() + s.star_inv.a.cwiseAbs().sum()) / (n - 1);
  const auto stars = large_stars(s);
  std::vector<std::uint64_t> inside(stars.size(), 0);
  for (Rank rk : a.members()) {
    const auto perm = unrank(rk, n);
    for (std::size_t k = 0; k < stars.size(); ++k) inside[k] += stars[k].contains(perm);
  }
  for (auto c : inside) r.star_sum += c / static_cast<double>(factorial(n));
  r.star_sum_holds = r.value <= r.star_sum + kTol;
  r.bound = own * (1.0 + d);
  r.explicit_bound = eps > 0.0 ? own + 20.0 * own * own / (d * d * eps * eps) + 4.0 / (d * d * n) : INFINITY;
  r.holds = r.value <= r.explicit_bound + kTol;
  return r;
}

CountingTerms counting_terms(const SetFamily& a, const SetFamily& b, const SetFamily& c, const Parameters& p) {
  const int n = a.degree();
  require(b.degree() == n && c.degree() == n && p.degree == n, "degree mismatch");
  const auto sn = DensityConvention::over_Sn;
  require(std::abs(p.alpha - a.measure(sn)) <= kTol && std::abs(p.beta - b.measure(sn)) <= kTol &&
              std::abs(p.gamma - c.measure(sn)) <= kTol,
          "parameters do not match the set densities");
  CountingTerms out;
  out.params = p;
  const auto sa = star_system(a, p, Role::a), sb = star_system(b, p, Role::b), sc = star_system(c, p, Role::c);
  auto split = [](const StarSystem& s) {
    return std::array<Eigen::MatrixXd, 3>{interval_slice(s.matrix, Interval::open(-INFINITY, 0.0)).a,
                                          interval_slice(s.matrix, Interval::open(0.0, s.eps)).a, s.structured.a};
  };
  const auto pa = split(sa), pb = split(sb), pc = split(sc);
  out.total = (sb.matrix.a * sa.matrix.a).cwiseProduct(sc.matrix.a).sum();
  double sum = 0.0;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      for (int z = 0; z < 3; ++z) {
        const double v = (pb[x] * pa[y]).cwiseProduct(pc[z]).sum();
        out.terms[x][y][z] = v;
        sum += v;
        const int negatives = (x == 0) + (y == 0) + (z == 0);
        if (negatives % 2 == 0 ? v < 0.0 : v > 0.0) out.signs_ok = false;
      }
  out.reassembly_error = std::abs(sum - out.total);
  out.b_struc_a_neg_c_struc = out.terms[2][0][2];
  out.b_neg_a_struc_c_struc = out.terms[0][2][2];
  out.b_struc_a_struc_c_neg = out.terms[2][2][0];
  out.residual = out.total - out.b_struc_a_neg_c_struc - out.b_neg_a_struc_c_struc - out.b_struc_a_struc_c_neg;

  const double scale = 1.0 / ((n - 1.0) * (n - 1.0));
  auto dot = [](const std::vector<double>& u, const std::vector<double>& v) {
    double s = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
  };
  const Eigen::MatrixXd at = pa[2].transpose(), bt = pb[2].transpose(), ct = pc[2].transpose();
  out.lower_bounds.push_back({"B_neg A_struc, C_struc", out.b_neg_a_struc_c_struc * scale,
                              -p.beta * ones_inner(at, ct) * scale, -p.beta * dot(sa.s_inv, sc.s_inv)});
  out.lower_bounds.push_back({"B_struc A_struc, C_neg", out.b_struc_a_struc_c_neg * scale,
                              -p.gamma * ones_inner(pa[2], bt) * scale, -p.gamma * dot(sa.s, sb.s_inv)});
  out.lower_bounds.push_back({"B_struc A_neg, C_struc", out.b_struc_a_neg_c_struc * scale,
                              -p.alpha * ones_inner(pb[2], pc[2]) * scale, -p.alpha * dot(sb.s, sc.s)});
  for (auto& lb : out.lower_bounds) lb.holds = lb.lhs >= lb.rhs - kTol;

  out.star_a_inv_c_inv = ones_inner(sa.star_inv.a, sc.star_inv.a);
  out.star_a_b_inv = ones_inner(sa.star.a, sb.star_inv.a);
  out.star_b_c = ones_inner(sb.star.a, sc.star.a);
  out.star_penalty =
      2.0 * scale * std::abs(p.beta * out.star_a_inv_c_inv + p.gamma * out.star_a_b_inv + p.alpha * out.star_b_c);
  out.linear_estimate = 2.0 * p.alpha * p.beta * p.gamma + 2.0 * scale * out.total;

  if (static_cast<double>(a.size()) * static_cast<double>(b.size()) <= 5e7) {
    std::vector<std::array<std::uint8_t, kMaxDegree>> bimg;
    bimg.reserve(b.size());
    for (Rank r : b.members()) {
      std::array<std::uint8_t, kMaxDegree> img{};
      const auto perm = unrank(r, n);
      std::copy(perm.images().begin(), perm.images().end(), img.begin());
      bimg.push_back(img);
    }
    std::uint64_t hits = 0;
    for (Rank r : a.members()) {
      const auto perm = unrank(r, n);
      for (const auto& img : bimg) hits += c.contains(compose_rank(perm.images().data(), img.data(), n));
    }
    const double nf = static_cast<double>(factorial(n));
    out.probability = hits / (nf * nf);
  }
  return out;
}

nlohmann::json to_json(const Restriction& r) {
  return {{"sources", points_json(r.sources)}, {"targets", points_json(r.targets)}, {"text", r.to_string()}};
}

nlohmann::json to_json(const GlobalnessReport& r) {
  auto sizes = nlohmann::json::array();
  for (std::size_t s = 0; s < r.max_density_by_size.size(); ++s)
    sizes.push_back({{"t", s + 1}, {"max_density", r.max_density_by_size[s]}, {"restriction", to_json(r.argmax_by_size[s])}});
  return {{"t", r.t},
          {"convention", to_string(r.convention)},
          {"measure", r.measure},
          {"worst", to_json(r.worst)},
          {"worst_density", r.worst_density},
          {"eps", r.eps},
          {"relative_K", r.relative_k},
          {"by_size", sizes}};
}

nlohmann::json to_json(const BumpSearch& r) {
  auto lv = nlohmann::json::array();
  auto one = [](const BumpLevel& l) {
    return nlohmann::json{{"t", l.t},
                          {"restriction", to_json(l.restriction)},
                          {"density", l.density},
                          {"threshold", l.threshold},
                          {"ratio", l.ratio}};
  };
  for (const auto& l : r.levels) lv.push_back(one(l));
  return {{"r", r.r}, {"measure", r.measure}, {"levels", lv}, {"best", one(r.best)}, {"found", r.found}};
}

nlohmann::json to_json(const StructureDecomposition& d) {
  return {{"eps", d.eps},
          {"source", to_json(d.source)},
          {"negative", to_json(d.negative)},
          {"random", to_json(d.random)},
          {"structured", to_json(d.structured)}};
}

nlohmann::json to_json(const Parameters& p) {
  return {{"n", p.degree}, {"R", p.R},         {"delta", p.delta}, {"alpha", p.alpha}, {"beta", p.beta},
          {"gamma", p.gamma}, {"eps_A", p.eps_a}, {"eps_B", p.eps_b}, {"eps_C", p.eps_c}};
}

nlohmann::json to_json(const StarSystem& s) {
  auto rows = nlohmann::json::array();
  for (int i = 0; i < s.degree; ++i)
    rows.push_back({{"i", i + 1},
                    {"L", points_json(s.rows[i])},
                    {"L_inv", points_json(s.cols[i])},
                    {"s", s.s[i]},
                    {"s_inv", s.s_inv[i]},
                    {"large", static_cast<bool>(s.large[i])},
                    {"large_inv", static_cast<bool>(s.large_inv[i])}});
  return {{"n", s.degree},
          {"measure", s.measure},
          {"eps", s.eps},
          {"delta", s.delta},
          {"threshold", s.threshold()},
          {"stars", rows},
          {"star_matrix", to_json(s.star)},
          {"inverse_star_matrix", to_json(s.star_inv)}};
}

nlohmann::json to_json(const StarClaimCheck& c) {
  return {{"zeta", c.zeta}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"holds", c.holds}};
}

nlohmann::json to_json(const DisjointnessReport& r) {
  return {{"measure", r.measure},
          {"eps", r.eps},
          {"delta", r.delta},
          {"overlaps", r.overlaps},
          {"star_measures", r.star_measures},
          {"hypotheses_hold", r.hypotheses_hold},
          {"failed_hypotheses", r.failed_hypotheses},
          {"lhs", r.lhs},
          {"rhs", r.rhs},
          {"conclusion_holds", r.conclusion_holds},
          {"conclusion_asserted", r.hypotheses_hold},
          {"pair_sum", r.pair_sum},
          {"bonferroni_holds", r.bonferroni_holds},
          {"worst_pair_excess", r.worst_pair_excess},
          {"pair_bound_holds", r.pair_bound_holds}};
}

nlohmann::json to_json(const L1BoundReport& r) {
  return {{"gate_lhs", r.gate_lhs},       {"gate_rhs", r.gate_rhs},
          {"gate_holds", r.gate_holds},   {"value", r.value},
          {"star_sum", r.star_sum},       {"star_sum_holds", r.star_sum_holds},
          {"bound", r.bound},             {"explicit_bound", r.explicit_bound},
          {"holds", r.holds},             {"asserted", r.gate_holds}};
}

nlohmann::json to_json(const BoundCheck& b) { return {{"value", b.value}, {"bound", b.bound}, {"holds", b.holds}}; }

nlohmann::json to_json(const CountingTerms& t) {
  static const char* part[3] = {"neg", "rand", "struc"};
  auto terms = nlohmann::json::array();
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      for (int z = 0; z < 3; ++z)
        terms.push_back({{"B", part[x]}, {"A", part[y]}, {"C", part[z]}, {"value", t.terms[x][y][z]}});
  auto lbs = nlohmann::json::array();
  for (const auto& lb : t.lower_bounds)
    lbs.push_back({{"term", lb.name}, {"lhs", lb.lhs}, {"rhs", lb.rhs}, {"star_form", lb.star_form}, {"holds", lb.holds}});
  nlohmann::json j{{"params", to_json(t.params)},
                   {"total", t.total},
                   {"terms", terms},
                   {"reassembly_error", t.reassembly_error},
                   {"signs_ok", t.signs_ok},
                   {"B_struc_A_neg_C_struc", t.b_struc_a_neg_c_struc},
                   {"B_neg_A_struc_C_struc", t.b_neg_a_struc_c_struc},
                   {"B_struc_A_struc_C_neg", t.b_struc_a_struc_c_neg},
                   {"residual", t.residual},
                   {"lower_bounds", lbs},
                   {"star_Ainv_Cinv", t.star_a_inv_c_inv},
                   {"star_A_Binv", t.star_a_b_inv},
                   {"star_B_C", t.star_b_c},
                   {"star_penalty", t.star_penalty},
                   {"linear_estimate", t.linear_estimate}};
  j["probability"] = t.probability ? nlohmann::json(*t.probability) : nlohmann::json(nullptr);
  return j;
}

}  // namespace symspec
