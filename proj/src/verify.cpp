#include "symspec/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>

#include "symspec/cayley.hpp"
#include "symspec/families.hpp"
#include "symspec/linear.hpp"
#include "symspec/numeric.hpp"
#include "symspec/repr.hpp"
#include "symspec/structure.hpp"

namespace symspec {

GroupFunction CheckRng::function(int n) {
  GroupFunction f(n);
  for (auto& v : f.values()) v = uniform(-1.0, 1.0);
  return f;
}

GroupFunction CheckRng::indicator(int n, double p, bool even_only) {
  GroupFunction f(n);
  for_each_permutation(n, [&](const Permutation&, Rank r, int s) {
    const bool in = coin(p);
    f[r] = (in && (!even_only || s > 0)) ? 1.0 : 0.0;
  });
  return f;
}

SetFamily CheckRng::set(int n, double p, DensityConvention c) {
  const Parity parity = c == DensityConvention::over_An ? Parity::even : Parity::all;
  return SetFamily::from_predicate(n, [&](const Permutation&) { return coin(p); }, parity, c);
}

std::vector<int> CheckRng::subset(int n, int size) {
  std::vector<int> pts(n);
  for (int i = 0; i < n; ++i) pts[i] = i;
  for (int i = 0; i < size; ++i) std::swap(pts[i], pts[i + below(n - i)]);
  pts.resize(size);
  std::sort(pts.begin(), pts.end());
  return pts;
}

namespace checks {
namespace {

std::string tag(const std::string& name, int n) { return name + "[n=" + std::to_string(n) + "]"; }

Check start(const std::string& name, int n, double tolerance) {
  Check c;
  c.name = tag(name, n);
  c.tolerance = tolerance;
  return c;
}

// Error-type check: passes when the worst error stays within tolerance.
Check& settle(Check& c) {
  c.passed = std::isfinite(c.value) && c.value <= c.tolerance;
  return c;
}

// Count-type check: value is the number of violations.
Check& settle_count(Check& c) {
  c.tolerance = 0.0;
  c.passed = c.value == 0.0;
  return c;
}

Check skip(const std::string& name, int n, const std::string& why) {
  Check c;
  c.name = tag(name, n);
  c.skipped = true;
  c.detail = why;
  return c;
}


std::vector<Permutation> all_perms(int n) {
  std::vector<Permutation> v;
  v.reserve(factorial(n));
  for (const auto& p : enumerate(n)) v.push_back(p);
  return v;
}

// E_{σ,τ} f(σ) g(τ) h(στ) by the double loop.
double triple_by_enumeration(const GroupFunction& f, const GroupFunction& g, const GroupFunction& h) {
  const int n = f.degree();
  const auto perms = all_perms(n);
  double s = 0.0;
  for (std::size_t a = 0; a < perms.size(); ++a) {
    if (f[a] == 0.0) continue;
    for (std::size_t b = 0; b < perms.size(); ++b) {
      if (g[b] == 0.0) continue;
      s += f[a] * g[b] * h[compose_rank(perms[a].images().data(), perms[b].images().data(), n)];
    }
  }
  return s / (static_cast<double>(perms.size()) * static_cast<double>(perms.size()));
}

std::uint64_t count_by_loop(const SetFamily& a, const SetFamily& b, const SetFamily& c) {
  std::uint64_t k = 0;
  const auto pb = b.permutations();
  for (const auto& x : a.permutations())
    for (const auto& y : pb) k += c.contains(compose(x, y));
  return k;
}

SetFamily restricted(const SetFamily& s, int src, int dst) {
  return SetFamily::from_predicate(s.degree(), [&](const Permutation& p) { return p[src] == dst && s.contains(p); });
}

Partition one_column(int n) { return Partition(std::vector<int>(n, 1)); }

// Every restriction I → J with |I| = t, sources ascending.
std::vector<Restriction> all_restrictions(int n, int t) {
  std::vector<Restriction> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != t) continue;
    std::vector<int> src;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1u) src.push_back(i);
    std::vector<int> dst;
    std::function<void()> pick = [&] {
      if (dst.size() == src.size()) {
        out.push_back({src, dst});
        return;
      }
      for (int y = 0; y < n; ++y) {
        if (std::find(dst.begin(), dst.end(), y) != dst.end()) continue;
        dst.push_back(y);
        pick();
        dst.pop_back();
      }
    };
    pick();
  }
  return out;
}

std::vector<Star> random_stars(int n, CheckRng& rng, int count, int shift) {
  std::vector<Star> stars;
  for (int k = 0; k < count; ++k) {
    Star st{k % 2 == 1, (k / 2 + shift) % n, {}};
    st.points = rng.subset(n, 1 + static_cast<int>(rng.below(std::min(3, n))));
    stars.push_back(st);
  }
  return stars;
}

}  // namespace

Check rank_roundtrip(int n) {
  Check c = start("perm.rank_roundtrip", n, 0.0);
  const auto total = factorial(n);
  Rank expect = 0;
  for (const auto& p : enumerate(n)) {
    c.value += (rank(p) != expect) + (unrank(expect, n) != p);
    ++expect;
  }
  c.value += expect != total;
  c.cases = total;
  return settle_count(c);
}

Check sign_homomorphism(int n, CheckRng& rng, int trials) {
  Check c = start("perm.sign_homomorphism", n, 0.0);
  const auto total = factorial(n);
  for (int k = 0; k < trials; ++k) {
    const auto a = unrank(rng.below(total), n), b = unrank(rng.below(total), n);
    c.value += sign(compose(a, b)) != sign(a) * sign(b);
    c.value += compose(a, a.inverse()) != Permutation::identity(n);
  }
  c.cases = trials;
  return settle_count(c);
}

Check dimension_squares(int n) {
  Check c = start("repr.dimension_squares", n, 0.0);
  std::uint64_t sum = 0;
  for (const auto& lam : partitions_of(n)) {
    const auto d = partition_dim(lam);
    sum += d * d;
    ++c.cases;
  }
  c.value = static_cast<double>(sum > factorial(n) ? sum - factorial(n) : factorial(n) - sum);
  c.detail = "sum dim^2 = " + std::to_string(sum) + ", n! = " + std::to_string(factorial(n));
  return settle(c);
}

Check hook_characters(int n) {
  Check c = start("repr.hook_equals_character", n, 0.0);
  for (const auto& lam : partitions_of(n)) {
    c.value += static_cast<std::int64_t>(partition_dim(lam)) != mn_character(lam, one_column(n));
    ++c.cases;
  }
  return settle_count(c);
}

std::vector<Check> projector_identities(int n, CheckRng& rng) {
  Check idem = start("repr.projector_idempotence", n, 1e-8);
  Check orth = start("repr.projector_orthogonality", n, 1e-8);
  Check comp = start("repr.projector_completeness", n, 1e-8);
  const auto f = rng.function(n), g = rng.function(n);
  const auto& lams = character_table(n).irreps();
  const auto pf = isotypic_decomposition(f), pg = isotypic_decomposition(g);
  GroupFunction sum(n), mixed(n);
  std::vector<double> weight(lams.size());
  for (std::size_t i = 0; i < lams.size(); ++i) {
    for (std::size_t j = 0; j < lams.size(); ++j)
      if (i != j) orth.value = std::max(orth.value, std::abs(inner_product(pf[i], pg[j])));
    sum += pf[i];
    weight[i] = rng.uniform(0.5, 2.0);
    mixed += weight[i] * pf[i];
  }
  comp.value = max_abs_diff(sum, f);
  // P_μ(Σ c_λ P_λ f) = c_μ P_μ f covers P² = P and P_μ P_λ = 0 at once.
  const auto again = isotypic_decomposition(mixed);
  for (std::size_t i = 0; i < lams.size(); ++i)
    idem.value = std::max(idem.value, max_abs_diff(again[i], weight[i] * pf[i]));
  idem.cases = orth.cases = comp.cases = lams.size();
  return {settle(idem), settle(orth), settle(comp)};
}

Check sign_transpose_duality(int n, CheckRng& rng) {
  Check c = start("repr.sign_transpose_duality", n, 1e-8);
  const auto& table = character_table(n);
  const auto f = rng.function(n);
  const auto plain = isotypic_decomposition(f);
  const auto twisted = isotypic_decomposition(sign_twist(f));
  for (std::size_t i = 0; i < table.irreps().size(); ++i) {
    const auto t = table.irrep_index(table.irreps()[i].transpose());
    c.value = std::max(c.value, max_abs_diff(twisted[t], sign_twist(plain[i])));
    ++c.cases;
  }
  return settle(c);
}

Check normalized_margins(int n, CheckRng& rng, int trials) {
  Check c = start("linear.normalized_margins", n, kNormalizedTolerance);
  for (int k = 0; k < trials; ++k) {
    const auto m = normalized_form(rng.indicator(n, 0.3));
    c.value = std::max({c.value, m.a.rowwise().sum().cwiseAbs().maxCoeff(), m.a.colwise().sum().cwiseAbs().maxCoeff()});
    ++c.cases;
  }
  return settle(c);
}

Check parseval(int n, CheckRng& rng, int trials) {
  Check c = start("linear.parseval", n, 1e-9);
  for (int k = 0; k < trials; ++k) {
    const auto f = rng.indicator(n, 0.3), g = rng.function(n);
    const auto mf = normalized_form(f), mg = normalized_form(g);
    // Oracle: the expectation inner product of the two linear parts, summed over S_n.
    const double oracle = inner_product(evaluate_linear(mf), evaluate_linear(mg));
    c.value = std::max(c.value, std::abs(parseval_inner(mf, mg) - oracle));
    ++c.cases;
  }
  return settle(c);
}

Check convolution_formula(int n, CheckRng& rng, int trials) {
  if (n > 6) return skip("linear.convolution_formula", n, "double-loop oracle limited to n <= 6");
  Check c = start("linear.convolution_formula", n, 1e-9);
  for (int k = 0; k < trials; ++k) {
    const auto mf = normalized_form(rng.indicator(n, 0.3));
    const auto mg = normalized_form(rng.indicator(n, 0.3));
    const auto mh = normalized_form(rng.indicator(n, 0.3));
    const double oracle = triple_by_enumeration(evaluate_linear(mf), evaluate_linear(mg), evaluate_linear(mh));
    c.value = std::max(c.value, std::abs(triple_linear_term(mf, mg, mh) - oracle));
    ++c.cases;
  }
  return settle(c);
}

Check linear_is_level_one(int n, CheckRng& rng, int trials) {
  Check c = start("linear.evaluate_equals_level_one", n, 1e-9);
  for (int k = 0; k < trials; ++k) {
    const auto f = k % 2 ? rng.function(n) : rng.indicator(n, 0.4);
    c.value = std::max(c.value, max_abs_diff(evaluate_linear(normalized_form(f)), level_project(f, 1)));
    ++c.cases;
  }
  return settle(c);
}

Check matrix_triple_bound(int n, CheckRng& rng, int trials) {
  Check c = start("linear.matrix_triple_bound", n, 0.0);
  auto random_matrix = [&] {
    CoeffMatrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = rng.uniform(-1.0, 1.0);
    return m;
  };
  for (int k = 0; k < trials; ++k) {
    const auto a = random_matrix(), b = random_matrix(), s = random_matrix();
    c.value += !symspec::matrix_triple_bound(a, b, s).holds;
    ++c.cases;
  }
  return settle_count(c);
}

Check one_sided_parseval(int n, CheckRng& rng, int trials) {
  Check c = start("linear.one_sided_parseval", n, 0.0);
  for (int k = 0; k < trials; ++k) {
    CoeffMatrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = rng.uniform(-1.0, 1.0);
    c.value += !symspec::one_sided_parseval(m).holds;
    ++c.cases;
  }
  return settle_count(c);
}

Check trace_identity(int n, CheckRng& rng, int trials) {
  Check c = start("cayley.trace_identity", n, 1e-10);
  for (int k = 0; k < trials; ++k) {
    const auto f = rng.function(n);
    const double norm_sq = inner_product(f, f);
    // Spectral side: eigenvalues of L*L on every V_λ with multiplicity.
    double spectral = 0.0;
    for (const auto& lam : partitions_of(n))
      for (const auto& e : isotypic_radius(f, lam).eigs) spectral += e.value * static_cast<double>(e.mult);
    c.value = std::max(c.value, std::abs(spectral - norm_sq) / std::max(1.0, norm_sq));
    if (n <= kMaxExplicitDegree) {
      // Explicit n!×n! operator matrices for both sides.
      for (Side side : {Side::left, Side::right}) {
        const auto t = trace_check(f, side);
        c.value = std::max(c.value, std::abs(t.trace - norm_sq) / std::max(1.0, norm_sq));
      }
    }
    ++c.cases;
  }
  c.detail = n <= kMaxExplicitDegree ? "spectral sum and explicit operator matrix" : "spectral sum";
  return settle(c);
}

Check radius_from_projection(int n, CheckRng& rng, int d) {
  if (d > n - 1) return skip("cayley.radius_from_projection", n, "level beyond n - 1");
  Check c = start("cayley.radius_from_projection", n, 1e-9);
  for (const bool indicator : {true, false}) {
    const auto f = indicator ? rng.indicator(n, 0.3) : rng.function(n);
    const auto r = level_radius(f, d);
    c.value = std::max(c.value, std::abs(r.r - r.r_from_projection));
    ++c.cases;
  }
  c.detail = "d = " + std::to_string(d);
  return settle(c);
}

Check eigen_multiplicity(int n, CheckRng& rng) {
  Check c = start("cayley.eigen_multiplicity", n, 0.0);
  const auto f = rng.function(n);
  for (const auto& lam : partitions_of(n)) {
    const auto s = isotypic_radius(f, lam);
    for (const auto& e : s.eigs) c.value += e.mult < s.dim;
    c.value += !s.multiplicity_ok;
    ++c.cases;
  }
  return settle_count(c);
}

Check class_function_scalars(int n) {
  Check c = start("cayley.class_function_scalars", n, 1e-8);
  const auto& table = character_table(n);
  const auto& cls = table.class_of_rank();
  for (std::size_t k = 0; k < table.classes().size(); ++k) {
    GroupFunction f(n);
    for (Rank r = 0; r < f.size(); ++r) f[r] = cls[r] == k ? 1.0 : 0.0;
    f *= 1.0 / expectation(f);
    for (const auto& lam : table.irreps()) {
      const auto s = isotypic_radius(f, lam);
      const double spread = s.eigs.empty() ? 0.0 : s.eigs.front().value - s.eigs.back().value;
      const double scale = std::max(1.0, s.eigs.empty() ? 0.0 : s.eigs.front().value);
      c.value = std::max(c.value, spread / scale);
      ++c.cases;
    }
  }
  return settle(c);
}

Check triple_reassembly(int n, CheckRng& rng, int trials) {
  if (n < 5) return skip("cayley.decomposition_identity", n, "d = 1 needs n >= 5");
  Check c = start("cayley.decomposition_identity", n, 1e-10);
  for (int k = 0; k < trials; ++k) {
    const auto f = rng.indicator(n, 0.4), g = rng.indicator(n, 0.4), h = rng.indicator(n, 0.4);
    const auto t = triple_expectation(f, g, h, 1);
    c.value = std::max(c.value, t.reassembly_error);
    if (n <= 6) c.value = std::max(c.value, std::abs(t.total - triple_by_enumeration(f, g, h)));
    ++c.cases;
  }
  return settle(c);
}

std::vector<Check> an_triple_bounds(int n, CheckRng& rng, int trials) {
  if (n < 5 || n > kMaxTripleDegree)
    return {skip("cayley.high_degree_bound", n, "needs 5 <= n <= 7"),
            skip("cayley.most_weight_residual", n, "needs 5 <= n <= 7")};
  Check high = start("cayley.high_degree_bound", n, 0.0);
  Check resid = start("cayley.most_weight_residual", n, 0.0);
  double worst_ratio = 0.0;
  for (int k = 0; k < trials; ++k) {
    const auto f = rng.indicator(n, 0.5, true), g = rng.indicator(n, 0.5, true), h = rng.indicator(n, 0.5, true);
    const auto t = triple_expectation(f, g, h, 1);
    high.value += !t.high_degree_holds;
    resid.value += !(t.an_indicators && t.residual_holds);
    if (t.residual_bound > 0) worst_ratio = std::max(worst_ratio, t.residual / t.residual_bound);
    ++high.cases;
    ++resid.cases;
  }
  resid.detail = "worst residual / (e/n)sqrt(abc) = " + std::to_string(worst_ratio);
  return {settle_count(high), settle_count(resid)};
}

Check globalness_oracle(int n, CheckRng& rng, int trials, int t) {
  t = std::min({t, n - 1, kMaxGlobalnessSize});
  Check c = start("structure.globalness_oracle", n, 1e-12);
  const auto perms = all_perms(n);
  for (int k = 0; k < trials; ++k) {
    const auto conv = k % 2 ? DensityConvention::over_An : DensityConvention::over_Sn;
    const auto a = rng.set(n, 0.05 + 0.3 * rng.uniform(), conv);
    const auto report = globalness(a, t);
    for (int s = 1; s <= t; ++s) {
      double best = 0.0;
      for (const auto& r : all_restrictions(n, s)) {
        std::uint64_t cell = 0, hit = 0;
        for (const auto& p : perms) {
          if (!r.contains(p)) continue;
          if (conv == DensityConvention::over_An && sign(p) < 0) continue;
          ++cell;
          hit += a.contains(p);
        }
        if (cell > 0) best = std::max(best, static_cast<double>(hit) / static_cast<double>(cell));
      }
      c.value = std::max(c.value, std::abs(report.max_density_by_size[s - 1] - best));
    }
    ++c.cases;
  }
  c.detail = "restriction sizes 1.." + std::to_string(t);
  return settle(c);
}

Check star_correlation(int n, CheckRng& rng, int trials) {
  Check c = start("structure.star_correlation_identity", n, 1e-12);
  const double total = static_cast<double>(factorial(n));
  for (int k = 0; k < trials; ++k) {
    const auto a = rng.set(n, 0.1 + 0.05 * k);
    const auto s = star_system(a, 0.002, 0.25);
    const auto members = a.permutations();
    for (int i = 0; i < n; ++i) {
      for (bool inv : {false, true}) {
        const Star star{inv, i, inv ? s.cols[i] : s.rows[i]};
        std::size_t both = 0;
        for (const auto& q : members) both += star.contains(q);
        const double corr = static_cast<double>(both) / total - s.measure * star.measure(n);
        c.value = std::max(c.value, std::abs((inv ? s.s_inv[i] : s.s[i]) - corr));
      }
    }
    ++c.cases;
  }
  return settle(c);
}

Check star_claim_samples(CheckRng& rng, int samples) {
  Check c;
  c.name = "structure.zeta_inequality";
  for (int k = 0; k < samples; ++k) {
    const int len = 1 + static_cast<int>(rng.below(6));
    std::vector<double> v(len), u(len);
    double total = 0.0;
    for (int i = 0; i < len; ++i) {
      v[i] = rng.coin(0.3) ? 0.0 : std::pow(rng.uniform(), 3);
      u[i] = rng.coin(0.3) ? 0.0 : std::pow(rng.uniform(), 3);
      total += v[i] + u[i];
    }
    if (total == 0.0) continue;
    double top = 0.0;
    for (int i = 0; i < len; ++i) top = std::max({top, v[i] / total, u[i] / total});
    const auto r = star_claim(v, u, rng.uniform() * (1.0 - top));
    c.value += !r.holds;
    ++c.cases;
  }
  return settle_count(c);
}

Check disjointness_core(int n, CheckRng& rng, int trials) {
  Check c = start("structure.star_disjointness_core", n, 0.0);
  for (int k = 0; k < trials; ++k) {
    const auto r = star_disjointness_check(rng.set(n, 0.1), random_stars(n, rng, 4, k), 0.2, 0.3);
    c.value += !r.bonferroni_holds + !r.pair_bound_holds;
    ++c.cases;
  }
  c.detail = "Bonferroni step and pairwise star intersection bound";
  return settle_count(c);
}

Check disjointness_conditional(int n, CheckRng& rng, int trials) {
  Check c = start("structure.star_disjointness_lemma", n, 0.0);
  std::uint64_t applicable = 0;
  for (int k = 0; k < trials; ++k) {
    const auto r = star_disjointness_check(rng.set(n, 0.1), random_stars(n, rng, 4, k), 0.2, 0.3);
    if (r.hypotheses_hold) {
      ++applicable;
      c.value += !r.conclusion_holds;
    }
    ++c.cases;
  }
  c.detail = "hypotheses held on " + std::to_string(applicable) + " of " + std::to_string(trials) + " instances";
  if (applicable == 0) c.detail += " (vacuous at this degree)";
  return settle_count(c);
}

Check dyadic_bound(CheckRng& rng, int trials) {
  Check c;
  c.name = "structure.dyadic_overlap_bound";
  for (int k = 0; k < trials; ++k) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(6, 6), b = Eigen::MatrixXd::Zero(6, 6);
    for (int i = 0; i < 36; ++i) {
      if (rng.coin(0.3)) a.data()[i] = rng.uniform(-1.0, 1.0);
      if (rng.coin(0.3)) b.data()[i] = rng.uniform(-1.0, 1.0);
    }
    c.value += !dyadic_overlap_bound(a, b).holds;
    ++c.cases;
  }
  return settle_count(c);
}

Check extremal_families(int n, int max_i) {
  Check c = start("families.extremal_product_free", n, 0.0);
  for (int x = 0; x < n; ++x) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) > max_i) continue;
      FamilySpec s;
      s.degree = n;
      s.x = x;
      for (int p = 0; p < n; ++p)
        if ((mask >> p) & 1u) s.I.push_back(p);
      const auto r = is_product_free(build_family(s));
      c.value += !r.product_free || r.witness.has_value();
      ++c.cases;
    }
  }
  c.detail = "all x, all |I| <= " + std::to_string(max_i) + ", inside A_n";
  return settle_count(c);
}

Check avoid_star_triples(int n, CheckRng& rng, int samples) {
  if (n < 5) return skip("families.avoid_star_triples", n, "needs n >= 5");
  Check c = start("families.avoid_star_triples", n, 0.0);
  for (int k = 0; k < samples; ++k) {
    auto pts = rng.subset(n, n);
    for (int i = n - 1; i > 0; --i) std::swap(pts[i], pts[rng.below(i + 1)]);
    const int x = pts[0];
    const int ki = 1 + static_cast<int>(rng.below(2)), kj = 1 + static_cast<int>(rng.below(2));
    const std::vector<int> I(pts.begin() + 1, pts.begin() + 1 + ki);
    // J may share points with I.
    const int off = rng.coin(0.5) ? 1 : 1 + ki;
    const std::vector<int> J(pts.begin() + off, pts.begin() + off + kj);
    const FamilySpec a{FamilyKind::avoid, n, -1, I, J, DensityConvention::over_Sn};
    const FamilySpec b{FamilyKind::star, n, x, I, {}, DensityConvention::over_Sn};
    const FamilySpec d{FamilyKind::star, n, x, J, {}, DensityConvention::over_Sn};
    c.value += !is_product_free(build_family(a), build_family(b), build_family(d)).product_free;
    ++c.cases;
  }
  return settle_count(c);
}

Check factoring(int n, CheckRng& rng, int trials) {
  Check c = start("families.factor_restriction_counts", n, 0.0);
  for (int k = 0; k < trials; ++k) {
    const auto a = rng.set(n, 0.3), b = rng.set(n, 0.3), d = rng.set(n, 0.3);
    const int i = static_cast<int>(rng.below(n)), ip = static_cast<int>(rng.below(n)),
              x = static_cast<int>(rng.below(n));
    const auto f = factor_restriction(a, b, d, i, ip, x);
    const auto original = count_by_loop(restricted(a, i, ip), restricted(b, x, i), restricted(d, x, ip));
    c.value += count_products(f.a, f.b, f.c).count != original;
    ++c.cases;
  }
  return settle_count(c);
}

Check equivalent_triples(int n, CheckRng& rng, int trials) {
  Check c = start("families.equivalent_triples_agree", n, 0.0);
  std::uint64_t free_seen = 0;
  const double p = n <= 4 ? 0.15 : 0.02;
  for (int k = 0; k < trials; ++k) {
    const auto a = rng.set(n, p), b = rng.set(n, p), d = rng.set(n, p);
    const auto base = is_product_free(a, b, d);
    free_seen += base.product_free;
    const auto forms = symspec::equivalent_triples(a, b, d);
    for (int f = 0; f < 6; ++f) {
      const auto& t = forms[f];
      c.value += is_product_free(t.a, t.b, t.c).product_free != base.product_free;
      if (base.witness) {
        const auto w = map_witness(*base.witness, f);
        c.value += !(t.a.contains(w.a) && t.b.contains(w.b) && t.c.contains(w.c) && compose(w.a, w.b) == w.c);
      }
    }
    ++c.cases;
  }
  c.detail = std::to_string(free_seen) + " of " + std::to_string(trials) + " sampled triples were product-free";
  return settle_count(c);
}

Check maxpf_oracle(int n, std::uint64_t seed) {
  Check c = start("families.maxpf_matches_exhaustive", n, 0.0);
  const auto oracle = exhaustive_max_product_free(n);
  const int saved = thread_budget();
  std::vector<std::size_t> sizes;
  for (int threads : {1, 2, 4}) {
    for (std::uint64_t s : {seed, seed + 1, std::uint64_t{7}}) {
      set_thread_budget(threads);
      MaxPFOptions opt;
      opt.seed = s;
      const auto r = max_product_free(n, opt);
      c.value += !r.optimal || r.best.size() != oracle || !is_product_free(r.best).product_free;
      sizes.push_back(r.best.size());
      ++c.cases;
    }
  }
  set_thread_budget(saved);
  c.detail = "exhaustive optimum " + std::to_string(oracle) + ", search optimum " + std::to_string(sizes.front());
  return settle_count(c);
}

Check maxpf_reproducible(int n, std::uint64_t seed) {
  Check c = start("families.maxpf_reproducible", n, 0.0);
  MaxPFOptions opt;
  opt.seed = seed;
  const auto first = max_product_free(n, opt);
  const auto again = max_product_free(n, opt);
  opt.seed = seed + 1;
  const auto other = max_product_free(n, opt);
  c.value += !first.optimal || !other.optimal;
  c.value += !(first.best == again.best);
  c.value += first.best.size() != other.best.size();
  c.value += !is_product_free(first.best).product_free || !first.best.within_An();
  c.cases = 3;
  c.detail = "optimum " + std::to_string(first.best.size()) + ", best F_I^x " + std::to_string(first.family_best);
  return settle_count(c);
}

}  // namespace checks

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::vector<std::string> VerifyReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.passed) out.push_back(c.name);
  return out;
}

VerifyReport run_verify(const VerifyOptions& options) {
  const int n = options.degree;
  require(n >= kMinVerifyDegree && n <= kMaxVerifyDegree,
          "verify needs " + std::to_string(kMinVerifyDegree) + " <= n <= " + std::to_string(kMaxVerifyDegree));
  require(options.suite == "core" || options.suite == "all", "unknown suite '" + options.suite + "' (core|all)");
  VerifyReport report;
  report.options = options;
  auto& out = report.checks;
  auto add = [&](Check c) { out.push_back(std::move(c)); };
  auto add_all = [&](std::vector<Check> cs) {
    for (auto& c : cs) out.push_back(std::move(c));
  };
  CheckRng rng(options.seed);
  using namespace checks;

  add(rank_roundtrip(n));
  add(sign_homomorphism(n, rng, 200));
  add(dimension_squares(n));
  add(hook_characters(n));
  add_all(projector_identities(n, rng));
  add(sign_transpose_duality(n, rng));
  add(normalized_margins(n, rng, 5));
  add(parseval(n, rng, 5));
  add(convolution_formula(n, rng, 2));
  add(linear_is_level_one(n, rng, 3));
  add(matrix_triple_bound(n, rng, 1000));
  add(trace_identity(n, rng, 2));
  add(radius_from_projection(n, rng, 1));
  add(eigen_multiplicity(n, rng));
  add(class_function_scalars(n));
  add(triple_reassembly(n, rng, n < 7 ? 2 : 1));
  add_all(an_triple_bounds(n, rng, n < 7 ? 10 : 2));
  add(globalness_oracle(n, rng, 4, 2));
  add(star_correlation(n, rng, 3));
  const bool all = options.suite == "all";
  add(star_claim_samples(rng, all ? 100000 : 1000));
  add(disjointness_core(n, rng, 10));
  add(disjointness_conditional(n, rng, 10));
  add(dyadic_bound(rng, all ? 10000 : 1000));
  add(extremal_families(n, 3));
  add(avoid_star_triples(n, rng, 10));
  add(factoring(n, rng, 20));
  add(equivalent_triples(n, rng, 10));

  if (all) {
    add(one_sided_parseval(5, rng, 20));
    add(convolution_formula(4, rng, 4));
    add(trace_identity(4, rng, 2));
    add(radius_from_projection(6, rng, 2));
    add_all(an_triple_bounds(6, rng, 100));
    add(globalness_oracle(6, rng, 20, 3));
    add(factoring(5, rng, 100));
    add(equivalent_triples(4, rng, 40));
    add(maxpf_oracle(4, options.seed));
    add(maxpf_reproducible(5, options.seed));
  }
  return report;
}

nlohmann::json to_json(const Check& c) {
  nlohmann::json j = {{"name", c.name},
                      {"status", c.skipped ? "skip" : (c.passed ? "pass" : "fail")},
                      {"value", c.value},
                      {"tolerance", c.tolerance},
                      {"cases", c.cases}};
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

nlohmann::json to_json(const VerifyReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  std::size_t passed = 0, skipped = 0;
  for (const auto& c : r.checks) {
    checks.push_back(to_json(c));
    passed += c.passed && !c.skipped;
    skipped += c.skipped;
  }
  return {{"n", r.options.degree},
          {"suite", r.options.suite},
          {"seed", r.options.seed},
          {"passed", r.passed()},
          {"summary", {{"total", r.checks.size()}, {"pass", passed}, {"skip", skipped},
                       {"fail", r.checks.size() - passed - skipped}}},
          {"failures", r.failures()},
          {"checks", checks}};
}

}  // namespace symspec
