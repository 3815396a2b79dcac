#include "symspec/cayley.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <unordered_map>

#include "symspec/numeric.hpp"

namespace symspec {

namespace {

struct SupportEntry {
  std::array<std::uint8_t, kMaxDegree> images;
  double value;
};

std::vector<SupportEntry> support_of(const GroupFunction& f) {
  std::vector<SupportEntry> out;
  for_each_permutation(f.degree(), [&](const Permutation& p, Rank r, int) {
    if (f[r] == 0.0) return;
    SupportEntry e{};
    std::copy(p.images().begin(), p.images().end(), e.images.begin());
    e.value = f[r];
    out.push_back(e);
  });
  return out;
}

}  // namespace

GroupFunction apply(const CayleyOperator& op, const GroupFunction& g) {
  const auto& f = op.kernel;
  const int n = f.degree();
  require(n == g.degree(), "degree mismatch");
  const auto support = support_of(f);
  require(n <= kMaxDenseKernelDegree || support.size() <= kMaxSparseSupport,
          "kernel too large: dense kernels need degree <= 8, sparse kernels at most 100000 nonzeros");
  GroupFunction out(n);
  auto vals = out.values();
  const auto gv = g.values();
  const double scale = 1.0 / static_cast<double>(f.size());
  parallel_blocks(f.size(), 512, [&](std::size_t begin, std::size_t end) {
    Permutation sigma = unrank(begin, n);
    for (std::size_t s = begin; s < end; ++s) {
      if (s != begin) sigma = unrank(s, n);
      const std::uint8_t* si = sigma.images().data();
      double acc = 0.0;
      if (op.side == Side::left) {
        for (const auto& e : support) acc += e.value * gv[compose_rank(e.images.data(), si, n)];
      } else {
        for (const auto& e : support) acc += e.value * gv[compose_rank(si, e.images.data(), n)];
      }
      vals[s] = acc * scale;
    }
  });
  return out;
}

GroupFunction right_translate(const GroupFunction& g, const Permutation& rho) {
  GroupFunction out(g.degree());
  for_each_permutation(g.degree(), [&](const Permutation& p, Rank r, int) { out[r] = g.at(compose(p, rho)); });
  return out;
}

Eigen::MatrixXd operator_matrix(const CayleyOperator& op) {
  const int n = op.kernel.degree();
  require(n <= kMaxExplicitDegree, "degree too large for an explicit operator matrix");
  const std::size_t m = op.kernel.size();
  std::vector<Permutation> perms;
  for (const auto& p : enumerate(n)) perms.push_back(p);
  Eigen::MatrixXd k(m, m);
  const double scale = 1.0 / static_cast<double>(m);
  for (std::size_t s = 0; s < m; ++s) {
    const Permutation inv = perms[s].inverse();
    for (std::size_t t = 0; t < m; ++t) {
      // Left: τ = πσ, so π = τσ⁻¹. Right: τ = σπ, so π = σ⁻¹τ.
      const Permutation pi = op.side == Side::left ? compose(perms[t], inv) : compose(inv, perms[t]);
      k(s, t) = op.kernel.at(pi) * scale;
    }
  }
  return k;
}

TraceCheck trace_check(const GroupFunction& f, Side side) {
  const Eigen::MatrixXd k = operator_matrix({f, side});
  return {(k.transpose() * k).trace(), inner_product(f, f)};
}

namespace {

std::vector<EigenCluster> cluster(std::vector<double> eigs, std::size_t weight, double scale) {
  std::sort(eigs.begin(), eigs.end(), std::greater<>());
  std::vector<EigenCluster> out;
  const double tol = kClusterTolerance * std::max(scale, 1e-300);
  std::size_t i = 0;
  while (i < eigs.size()) {
    std::size_t j = i + 1;
    double sum = eigs[i];
    while (j < eigs.size() && eigs[j - 1] - eigs[j] <= tol) sum += eigs[j++];
    out.push_back({std::max(0.0, sum / static_cast<double>(j - i)), (j - i) * weight});
    i = j;
  }
  return out;
}

PartitionSpectrum finish(const Partition& lambda, std::uint64_t dim, const std::vector<double>& eigs, std::size_t weight,
                         double norm_sq, const char* method) {
  PartitionSpectrum out;
  out.lambda = lambda;
  out.dim = dim;
  out.method = method;
  const double top = eigs.empty() ? 0.0 : *std::max_element(eigs.begin(), eigs.end());
  out.eigs = cluster(eigs, weight, std::max(top, norm_sq));
  out.r = std::sqrt(std::max(0.0, top));
  for (const auto& c : out.eigs) out.multiplicity_ok = out.multiplicity_ok && c.mult >= dim;
  return out;
}

PartitionSpectrum explicit_spectrum(const GroupFunction& f, const Partition& lambda) {
  const int n = f.degree();
  require(n <= kMaxExplicitDegree, "degree too large for the explicit spectral path");
  const auto& table = character_table(n);
  const std::size_t irrep = table.irrep_index(lambda);
  const std::uint64_t dim = partition_dim(lambda);
  const std::size_t m = f.size();
  std::vector<Permutation> perms;
  for (const auto& p : enumerate(n)) perms.push_back(p);
  const auto& cls = table.class_of_rank();
  Eigen::MatrixXd proj(m, m);
  const double scale = static_cast<double>(dim) / static_cast<double>(m);
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = 0; t < m; ++t)
      proj(s, t) = scale * static_cast<double>(table.value(irrep, cls[rank(compose(perms[s], perms[t].inverse()))]));
  // Orthonormal basis of the range of the projector from a seeded random sketch.
  const std::size_t rank_expected = dim * dim;
  const std::size_t cols = std::min<std::size_t>(m, rank_expected + 8);
  std::mt19937_64 rng(0xC0FFEE);
  std::normal_distribution<double> normal;
  Eigen::MatrixXd omega(m, cols);
  for (Eigen::Index i = 0; i < omega.size(); ++i) omega.data()[i] = normal(rng);
  const Eigen::MatrixXd y = proj * omega;
  Eigen::BDCSVD<Eigen::MatrixXd> svd(y, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  std::size_t kept = 0;
  while (kept < static_cast<std::size_t>(sv.size()) && sv[kept] > 1e-8 * sv[0]) ++kept;
  require(kept == rank_expected, "isotypic subspace has unexpected dimension");
  const Eigen::MatrixXd q = svd.matrixU().leftCols(kept);
  const Eigen::MatrixXd k = operator_matrix({f, Side::left});
  const Eigen::MatrixXd c = q.transpose() * k * q;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(c.transpose() * c, Eigen::EigenvaluesOnly);
  std::vector<double> eigs(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  return finish(lambda, dim, eigs, 1, inner_product(f, f), "explicit_matrix");
}

std::uint64_t coset_count(const Partition& mu) {
  std::uint64_t d = 1;
  for (int p : mu.parts) d *= factorial(p);
  return factorial(mu.size()) / d;
}

// Compression of L_f to V_λ ∩ M^λ, where M^λ holds functions invariant under
// the Young subgroup acting on the right. A coset σS_λ is encoded by the label
// of each value: label[σ(x)] = block of x.
PartitionSpectrum module_spectrum(const GroupFunction& f_in, const Partition& lambda) {
  const int n = f_in.degree();
  const auto t = lambda.transpose();
  // Multiplying by the sign maps V_λ isometrically onto V_λᵗ and intertwines L_f with L_f̃.
  const bool use_transpose = coset_count(t) < coset_count(lambda);
  const Partition mu = use_transpose ? t : lambda;
  const GroupFunction f = use_transpose ? sign_twist(f_in) : f_in;
  const auto& table = character_table(n);
  const std::size_t irrep = table.irrep_index(mu);
  const std::uint64_t dim = partition_dim(mu);

  std::vector<std::uint8_t> start;
  for (int b = 0; b < mu.length(); ++b) start.insert(start.end(), mu.parts[b], static_cast<std::uint8_t>(b));
  std::vector<std::vector<std::uint8_t>> labels;
  std::unordered_map<std::uint64_t, int> index;
  auto encode = [n](const std::uint8_t* l) {
    std::uint64_t c = 0;
    for (int v = 0; v < n; ++v) c = (c << 4) | l[v];
    return c;
  };
  auto cur = start;
  do {
    index.emplace(encode(cur.data()), static_cast<int>(labels.size()));
    labels.push_back(cur);
  } while (std::next_permutation(cur.begin(), cur.end()));
  const auto m = static_cast<Eigen::Index>(labels.size());

  Eigen::MatrixXd op = Eigen::MatrixXd::Zero(m, m);
  Eigen::MatrixXd proj = Eigen::MatrixXd::Zero(m, m);
  const double inv_total = 1.0 / static_cast<double>(f.size());
  const double pscale = static_cast<double>(dim) * inv_total;
  const auto& cls = table.class_of_rank();
  std::vector<std::uint8_t> moved(n);
  for_each_permutation(n, [&](const Permutation& pi, Rank r, int) {
    const double fv = f[r] * inv_total;
    const double pv = pscale * static_cast<double>(table.value(irrep, cls[r]));
    if (fv == 0.0 && pv == 0.0) return;
    // (T_π φ)(ℓ) = φ(ℓ ∘ π⁻¹), and (ℓ ∘ π⁻¹)(π(v)) = ℓ(v).
    for (Eigen::Index row = 0; row < m; ++row) {
      const auto& l = labels[row];
      for (int v = 0; v < n; ++v) moved[pi[v]] = l[v];
      const int col = index.at(encode(moved.data()));
      op(row, col) += fv;
      proj(row, col) += pv;
    }
  });
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ps(proj);
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < m; ++i)
    if (ps.eigenvalues()[i] > 0.5) keep.push_back(i);
  require(keep.size() == dim, "isotypic part of the permutation module has unexpected dimension");
  Eigen::MatrixXd q(m, static_cast<Eigen::Index>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) q.col(static_cast<Eigen::Index>(i)) = ps.eigenvectors().col(keep[i]);
  const Eigen::MatrixXd c = q.transpose() * op * q;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(c.transpose() * c, Eigen::EigenvaluesOnly);
  std::vector<double> eigs(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  auto out = finish(lambda, dim, eigs, dim, inner_product(f, f), "permutation_module");
  return out;
}

void check_spectral_guard(int n, bool allow_slow) {
  require(n < kSlowIsotypicDegree || (n == kSlowIsotypicDegree && allow_slow),
          n == kSlowIsotypicDegree ? "spectral computations at degree 8 need the slow opt-in"
                                   : "degree too large for spectral computations");
}

}  // namespace

PartitionSpectrum isotypic_radius(const GroupFunction& f, const Partition& lambda, RadiusMethod method,
                                  bool allow_slow) {
  const int n = f.degree();
  require(lambda.size() == n, "partition size must equal the degree");
  if (method == RadiusMethod::automatic)
    method = n <= kMaxExplicitDegree ? RadiusMethod::explicit_matrix : RadiusMethod::permutation_module;
  if (method == RadiusMethod::explicit_matrix) return explicit_spectrum(f, lambda);
  check_spectral_guard(n, allow_slow);
  return module_spectrum(f, lambda);
}

namespace {

double diagnostic_eps(const GroupFunction& f, int d) {
  const int n = f.degree();
  const int t = std::min(2 * d, n - 1);
  if (t == 0) return norm(f);
  return max_restricted_norm(f, t).second;
}

LevelRadius level_from(const GroupFunction& f, int d, const std::vector<PartitionSpectrum>& spectra,
                       RadiusMethod method, bool allow_slow) {
  const int n = f.degree();
  LevelRadius out;
  out.d = d;
  const auto fd = level_project(f, d, LevelPath::automatic, allow_slow);
  for (const auto& s : spectra) {
    if (s.lambda.level() != d) continue;
    out.r = std::max(out.r, s.r);
    out.dim += s.dim * s.dim;
    out.r_from_projection = std::max(out.r_from_projection, isotypic_radius(fd, s.lambda, method, allow_slow).r);
  }
  out.eps = diagnostic_eps(f, d);
  const double denom = norm(f) * out.eps;
  out.diagnostic_ratio = denom > 0 ? out.r * std::pow(n, d / 2.0) / denom : 0.0;
  return out;
}

}  // namespace

LevelRadius level_radius(const GroupFunction& f, int d, RadiusMethod method, bool allow_slow) {
  const int n = f.degree();
  require(d >= 0 && d <= n - 1, "level out of range");
  check_spectral_guard(n, allow_slow);
  std::vector<PartitionSpectrum> spectra;
  for (const auto& lam : partitions_of(n))
    if (lam.level() == d) spectra.push_back(isotypic_radius(f, lam, method, allow_slow));
  return level_from(f, d, spectra, method, allow_slow);
}

SpectralReport spectral_report(const GroupFunction& f, int max_level, RadiusMethod method, bool allow_slow) {
  const int n = f.degree();
  check_spectral_guard(n, allow_slow);
  require(max_level >= 0 && max_level <= n - 1, "level out of range");
  SpectralReport rep;
  rep.degree = n;
  rep.norm_sq = inner_product(f, f);
  for (const auto& lam : partitions_of(n)) rep.partitions.push_back(isotypic_radius(f, lam, method, allow_slow));
  for (const auto& p : rep.partitions)
    for (const auto& c : p.eigs) rep.trace += c.value * static_cast<double>(c.mult);
  for (int d = 0; d <= max_level; ++d) rep.levels.push_back(level_from(f, d, rep.partitions, method, allow_slow));
  return rep;
}

namespace {

bool is_an_indicator(const GroupFunction& f) {
  bool ok = true;
  for_each_permutation(f.degree(), [&](const Permutation&, Rank r, int s) {
    const double v = f[r];
    ok = ok && (v == 0.0 || (v == 1.0 && s > 0));
  });
  return ok;
}

}  // namespace

TripleDecomposition triple_expectation(const GroupFunction& f, const GroupFunction& g, const GroupFunction& h, int d) {
  const int n = f.degree();
  require(g.degree() == n && h.degree() == n, "degree mismatch");
  require(n <= kMaxTripleDegree, "degree too large for the triple decomposition");
  require(d >= 0 && 2 * d + 2 < n, "the decomposition needs d < n/2 - 1");
  TripleDecomposition out;
  out.d = d;
  const auto u = apply_left(f, h);
  out.total = inner_product(g, u);

  const auto& irreps = character_table(n).irreps();
  const auto gparts = isotypic_decomposition(g);
  const auto hparts = isotypic_decomposition(h);
  const auto ft = sign_twist(f);
  const auto gtparts = isotypic_decomposition(sign_twist(g));
  const auto htparts = isotypic_decomposition(sign_twist(h));
  auto level_sum = [&](const std::vector<GroupFunction>& parts, int i) {
    GroupFunction s(n);
    for (std::size_t k = 0; k < irreps.size(); ++k)
      if (irreps[k].level() == i) s += parts[k];
    return s;
  };
  for (int i = 0; i <= d; ++i) {
    out.level_terms.push_back(inner_product(level_sum(gparts, i), apply_left(f, level_sum(hparts, i))));
    out.twisted_terms.push_back(inner_product(level_sum(gtparts, i), apply_left(ft, level_sum(htparts, i))));
  }
  for (std::size_t k = 0; k < irreps.size(); ++k)
    if (irreps[k].reduced_level() > d) out.remainder += inner_product(gparts[k], apply_left(f, hparts[k]));
  double sum = out.remainder;
  for (int i = 0; i <= d; ++i) sum += out.level_terms[i] + out.twisted_terms[i];
  out.reassembly_error = std::abs(out.total - sum);

  out.high_degree_bound = std::pow(n / (std::numbers::e * (d + 1)), -(d + 1) / 2.0) * norm(f) * norm(g) * norm(h);
  out.high_degree_holds = std::abs(out.remainder) <= out.high_degree_bound + 1e-12;

  out.an_indicators = is_an_indicator(f) && is_an_indicator(g) && is_an_indicator(h);
  if (out.an_indicators) {
    out.alpha = expectation(f);
    out.beta = expectation(g);
    out.gamma = expectation(h);
    out.linear_term = inner_product(level_sum(gparts, 1), apply_left(f, level_sum(hparts, 1)));
    const double abc = out.alpha * out.beta * out.gamma;
    out.residual = std::abs(out.total - 2 * abc - 2 * out.linear_term);
    out.residual_bound = std::numbers::e / n * std::sqrt(abc);
    out.residual_holds = out.residual <= out.residual_bound + 1e-12;
  }
  return out;
}

nlohmann::json to_json(const SpectralReport& r) {
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& l : r.levels)
    levels.push_back({{"d", l.d},
                      {"r", l.r},
                      {"r_from_projection", l.r_from_projection},
                      {"dim", l.dim},
                      {"eps", l.eps},
                      {"diagnostic_ratio", l.diagnostic_ratio}});
  nlohmann::json parts = nlohmann::json::array();
  for (const auto& p : r.partitions) {
    nlohmann::json eigs = nlohmann::json::array();
    for (const auto& c : p.eigs) eigs.push_back({{"value", c.value}, {"mult", c.mult}});
    parts.push_back({{"lambda", p.lambda.parts},
                     {"r", p.r},
                     {"dim", p.dim},
                     {"eigs", eigs},
                     {"multiplicity_ok", p.multiplicity_ok},
                     {"method", p.method}});
  }
  return {{"degree", r.degree},         {"levels", levels},   {"partitions", parts},
          {"trace", r.trace},           {"norm_sq", r.norm_sq}, {"cluster_tolerance", r.cluster_tolerance}};
}

nlohmann::json to_json(const TripleDecomposition& t) {
  nlohmann::json j = {{"d", t.d},
                      {"total", t.total},
                      {"level_terms", t.level_terms},
                      {"twisted_terms", t.twisted_terms},
                      {"remainder", t.remainder},
                      {"reassembly_error", t.reassembly_error},
                      {"high_degree_bound", t.high_degree_bound},
                      {"high_degree_holds", t.high_degree_holds},
                      {"an_indicators", t.an_indicators}};
  if (t.an_indicators)
    j["residual"] = {{"alpha", t.alpha},       {"beta", t.beta},
                     {"gamma", t.gamma},       {"linear_term", t.linear_term},
                     {"value", t.residual},    {"bound", t.residual_bound},
                     {"holds", t.residual_holds}};
  return j;
}

}  // namespace symspec
