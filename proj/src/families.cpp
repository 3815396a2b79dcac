#include "symspec/families.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <cmath>
#include <map>
#include <random>

#include "symspec/numeric.hpp"

namespace symspec {

namespace {

using Images = std::array<std::uint8_t, kMaxDegree>;

Images images_of(const Permutation& p) {
  Images img{};
  std::copy(p.images().begin(), p.images().end(), img.begin());
  return img;
}

std::vector<Images> images_of(const SetFamily& s) {
  std::vector<Images> out;
  out.reserve(s.size());
  for (Rank r : s.members()) out.push_back(images_of(unrank(r, s.degree())));
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

int parse_point(std::string_view tok, int degree) {
  int v = 0;
  const auto* end = tok.data() + tok.size();
  const auto res = std::from_chars(tok.data(), end, v);
  require(res.ec == std::errc() && res.ptr == end, "bad point '" + std::string(tok) + "' in family spec");
  require(v >= 1 && v <= degree, "point " + std::string(tok) + " is outside 1.." + std::to_string(degree));
  return v - 1;
}

std::string join_points(const std::vector<int>& pts) {
  std::string out;
  for (std::size_t k = 0; k < pts.size(); ++k) out += (k ? "," : "") + std::to_string(pts[k] + 1);
  return out;
}

bool member(const std::vector<int>& set, int v) { return std::find(set.begin(), set.end(), v) != set.end(); }

std::uint64_t an_order(int n) { return n >= 2 ? factorial(n) / 2 : 1; }

Permutation truncate_last(const Permutation& p) {
  std::vector<int> img(p.images().begin(), p.images().end() - 1);
  return Permutation::from_images(img);
}

}  // namespace

void FamilySpec::validate() const {
  require(degree >= 1 && degree <= kMaxDenseDegree, "family degree must be between 1 and 10");
  auto check = [&](const std::vector<int>& pts, const char* name) {
    unsigned seen = 0;
    for (int p : pts) {
      require(p >= 0 && p < degree, std::string("point out of range in ") + name);
      require(!((seen >> p) & 1u), std::string("repeated point in ") + name);
      seen |= 1u << p;
    }
  };
  check(I, "I");
  check(J, "J");
  const bool needs_x = kind == FamilyKind::extremal || kind == FamilyKind::star || kind == FamilyKind::inverse_star;
  if (needs_x) require(x >= 0 && x < degree, "this family needs a point x in 1..n");
  if (kind == FamilyKind::umvirate) require(I.size() == J.size(), "umvirate needs |I| == |J|");
}

std::string FamilySpec::to_string() const {
  std::string out;
  switch (kind) {
    case FamilyKind::extremal: out = "F:x=" + std::to_string(x + 1) + ",I=" + join_points(I); break;
    case FamilyKind::star: out = "star:x=" + std::to_string(x + 1) + ",I=" + join_points(I); break;
    case FamilyKind::inverse_star: out = "istar:x=" + std::to_string(x + 1) + ",I=" + join_points(I); break;
    case FamilyKind::avoid: out = "avoid:I=" + join_points(I) + ";J=" + join_points(J); break;
    case FamilyKind::umvirate: out = "umv:I=" + join_points(I) + ";J=" + join_points(J); break;
  }
  if (ambient == DensityConvention::over_Sn) out += ";ambient=Sn";
  return out;
}

FamilySpec parse_family_spec(std::string_view text, int degree, DensityConvention ambient) {
  const auto colon = text.find(':');
  require(colon != std::string_view::npos, "family spec '" + std::string(text) +
                                               "' needs a kind prefix: F:, star:, istar:, avoid: or umv:");
  const auto kind = trim(text.substr(0, colon));
  FamilySpec spec;
  spec.degree = degree;
  spec.ambient = ambient;
  if (kind == "F" || kind == "extremal") spec.kind = FamilyKind::extremal;
  else if (kind == "star") spec.kind = FamilyKind::star;
  else if (kind == "istar" || kind == "inverse_star") spec.kind = FamilyKind::inverse_star;
  else if (kind == "avoid") spec.kind = FamilyKind::avoid;
  else if (kind == "umv" || kind == "umvirate") spec.kind = FamilyKind::umvirate;
  else throw Error("unknown family kind '" + std::string(kind) + "' (expected F, star, istar, avoid or umv)");

  std::map<std::string, std::vector<std::string>> values;
  std::string key;
  std::string_view body = text.substr(colon + 1);
  while (!body.empty()) {
    const auto cut = body.find_first_of(",;");
    const auto tok = trim(body.substr(0, cut));
    body = cut == std::string_view::npos ? std::string_view{} : body.substr(cut + 1);
    if (const auto eq = tok.find('='); eq != std::string_view::npos) {
      key = std::string(trim(tok.substr(0, eq)));
      require(!values.count(key), "key '" + key + "' given twice in family spec");
      auto& list = values[key];
      if (const auto v = trim(tok.substr(eq + 1)); !v.empty()) list.emplace_back(v);
    } else if (!tok.empty()) {
      require(!key.empty(), "value '" + std::string(tok) + "' before any key in family spec");
      values[key].emplace_back(tok);
    }
  }
  for (const auto& [k, list] : values) {
    if (k == "x") {
      require(list.size() == 1, "x takes exactly one point");
      spec.x = parse_point(list[0], degree);
    } else if (k == "I" || k == "J") {
      auto& dst = k == "I" ? spec.I : spec.J;
      for (const auto& v : list) dst.push_back(parse_point(v, degree));
    } else if (k == "ambient") {
      require(list.size() == 1, "ambient takes one value (Sn or An)");
      spec.ambient = parse_convention(list[0]);
    } else {
      throw Error("unknown key '" + k + "' in family spec (expected x, I, J or ambient)");
    }
  }
  require(values.count("I"), "family spec needs I=...");
  if (spec.kind == FamilyKind::avoid || spec.kind == FamilyKind::umvirate)
    require(values.count("J"), "family spec needs J=...");
  spec.validate();
  return spec;
}

SetFamily build_family(const FamilySpec& spec) {
  spec.validate();
  const auto& I = spec.I;
  const auto& J = spec.J;
  std::function<bool(const Permutation&)> pred;
  switch (spec.kind) {
    case FamilyKind::extremal:
      pred = [&](const Permutation& p) {
        if (!member(I, p[spec.x])) return false;
        for (int i : I)
          if (member(I, p[i])) return false;
        return true;
      };
      break;
    case FamilyKind::star: pred = [&](const Permutation& p) { return member(I, p[spec.x]); }; break;
    case FamilyKind::inverse_star:
      pred = [&](const Permutation& p) {
        return std::any_of(I.begin(), I.end(), [&](int i) { return p[i] == spec.x; });
      };
      break;
    case FamilyKind::avoid:
      pred = [&](const Permutation& p) {
        return std::none_of(I.begin(), I.end(), [&](int i) { return member(J, p[i]); });
      };
      break;
    case FamilyKind::umvirate:
      pred = [&](const Permutation& p) {
        for (std::size_t k = 0; k < I.size(); ++k)
          if (p[I[k]] != J[k]) return false;
        return true;
      };
      break;
  }
  const auto parity = spec.ambient == DensityConvention::over_An ? Parity::even : Parity::all;
  return SetFamily::from_predicate(spec.degree, pred, parity, spec.ambient);
}

PFResult is_product_free(const SetFamily& a, const SetFamily& b, const SetFamily& c) {
  const int n = a.degree();
  require(b.degree() == n && c.degree() == n, "degree mismatch");
  const auto bimg = images_of(b);
  const auto& am = a.members();
  constexpr std::size_t kBlock = 64;
  const std::size_t blocks = (am.size() + kBlock - 1) / kBlock;
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> found(blocks);
  std::atomic<std::size_t> first_hit{blocks};
  parallel_blocks(am.size(), kBlock, [&](std::size_t begin, std::size_t end) {
    const std::size_t blk = begin / kBlock;
    if (blk > first_hit.load()) return;
    for (std::size_t ia = begin; ia < end; ++ia) {
      const auto pa = images_of(unrank(am[ia], n));
      for (std::size_t ib = 0; ib < bimg.size(); ++ib) {
        if (c.contains(compose_rank(pa.data(), bimg[ib].data(), n))) {
          found[blk] = {ia, ib};
          std::size_t cur = first_hit.load();
          while (blk < cur && !first_hit.compare_exchange_weak(cur, blk)) {
          }
          return;
        }
      }
    }
  });
  PFResult r;
  for (const auto& f : found) {
    if (!f) continue;
    const auto [ia, ib] = *f;
    const auto pa = unrank(am[ia], n), pb = unrank(b.members()[ib], n);
    r.product_free = false;
    r.witness = PFWitness{pa, pb, compose(pa, pb)};
    r.checked_pairs = ia * bimg.size() + ib + 1;
    return r;
  }
  r.checked_pairs = am.size() * bimg.size();
  return r;
}

ProductCount count_products(const SetFamily& a, const SetFamily& b, const SetFamily& c) {
  const int n = a.degree();
  require(b.degree() == n && c.degree() == n, "degree mismatch");
  const auto bimg = images_of(b);
  const auto& am = a.members();
  constexpr std::size_t kBlock = 64;
  std::vector<std::uint64_t> partial((am.size() + kBlock - 1) / kBlock, 0);
  parallel_blocks(am.size(), kBlock, [&](std::size_t begin, std::size_t end) {
    std::uint64_t hits = 0;
    for (std::size_t ia = begin; ia < end; ++ia) {
      const auto pa = images_of(unrank(am[ia], n));
      for (const auto& pb : bimg) hits += c.contains(compose_rank(pa.data(), pb.data(), n));
    }
    partial[begin / kBlock] = hits;
  });
  ProductCount out;
  for (auto h : partial) out.count += h;
  const double nf = static_cast<double>(factorial(n));
  out.normalized = static_cast<double>(out.count) / nf / nf;
  return out;
}

FamilyMeasure measure_family(const FamilySpec& spec) {
  auto in_sn = spec;
  in_sn.ambient = DensityConvention::over_Sn;
  const auto fam = build_family(in_sn);
  const int n = spec.degree;
  FamilyMeasure m;
  m.mu_sn = static_cast<double>(fam.size()) / static_cast<double>(factorial(n));
  m.mu_an = static_cast<double>(fam.even_count()) / static_cast<double>(an_order(n));
  const bool an = spec.ambient == DensityConvention::over_An;
  m.size = an ? fam.even_count() : fam.size();
  m.mu = an ? m.mu_an : m.mu_sn;
  if (spec.kind == FamilyKind::extremal) {
    const double t = spec.I.size() / std::sqrt(static_cast<double>(n));
    m.t = t;
    m.estimate = t * std::exp(-t * t) / std::sqrt(static_cast<double>(n));
    if (*m.estimate > 0.0) m.ratio = m.mu / *m.estimate;
  }
  return m;
}

FactoredTriple factor_restriction(const SetFamily& a, const SetFamily& b, const SetFamily& c, int i, int i_prime,
                                  int x) {
  const int n = a.degree();
  require(b.degree() == n && c.degree() == n, "degree mismatch");
  require(n >= 2, "factoring needs degree >= 2");
  for (int p : {i, i_prime, x}) require(p >= 0 && p < n, "factoring index out of range");
  const int last = n - 1;
  const auto t = [&](int u, int v) { return Permutation::transposition(n, u, v); };
  auto transform = [&](const SetFamily& s, int src, int dst, const Permutation& left, const Permutation& right) {
    std::vector<Permutation> out;
    for (const auto& p : s.permutations()) {
      if (p[src] != dst) continue;
      const auto q = compose(compose(left, p), right);
      out.push_back(truncate_last(q));
    }
    return SetFamily::from_permutations(n - 1, out, s.convention());
  };
  FactoredTriple f;
  f.a = transform(a, i, i_prime, t(i_prime, last), t(last, i));
  f.b = transform(b, x, i, t(i, last), t(last, x));
  f.c = transform(c, x, i_prime, t(i_prime, last), t(x, last));
  return f;
}

std::array<EquivalentTriple, 6> equivalent_triples(const SetFamily& a, const SetFamily& b, const SetFamily& c) {
  const auto ai = a.inverse(), bi = b.inverse(), ci = c.inverse();
  return {EquivalentTriple{"(A, B, C)", a, b, c},       EquivalentTriple{"(B, C^-1, A^-1)", b, ci, ai},
          EquivalentTriple{"(C^-1, A, B^-1)", ci, a, bi}, EquivalentTriple{"(C, B^-1, A)", c, bi, a},
          EquivalentTriple{"(B^-1, A^-1, C^-1)", bi, ai, ci}, EquivalentTriple{"(A^-1, C, B)", ai, c, b}};
}

PFWitness map_witness(const PFWitness& w, int form) {
  switch (form) {
    case 0: return w;
    case 1: return {w.b, w.c.inverse(), w.a.inverse()};
    case 2: return {w.c.inverse(), w.a, w.b.inverse()};
    case 3: return {w.c, w.b.inverse(), w.a};
    case 4: return {w.b.inverse(), w.a.inverse(), w.c.inverse()};
    case 5: return {w.a.inverse(), w.c, w.b};
  }
  throw Error("rewriting index must be 0..5");
}

namespace {

// A_n with a multiplication table on indices 0..N−1.
struct AlternatingGroup {
  int n = 0;
  std::vector<Rank> ranks;
  std::vector<std::uint16_t> mul;  // mul[u * N + v] = index of u ∘ v
  std::vector<std::uint16_t> inv;
  int identity = 0;

  explicit AlternatingGroup(int degree) : n(degree) {
    for (auto it = enumerate(n, Parity::even).begin(); it != std::default_sentinel; ++it) ranks.push_back(it.rank());
    const std::size_t N = ranks.size();
    std::vector<Images> img;
    for (Rank r : ranks) img.push_back(images_of(unrank(r, n)));
    auto index = [&](Rank r) { return static_cast<std::uint16_t>(std::lower_bound(ranks.begin(), ranks.end(), r) - ranks.begin()); };
    mul.resize(N * N);
    inv.resize(N);
    for (std::size_t u = 0; u < N; ++u) {
      for (std::size_t v = 0; v < N; ++v) mul[u * N + v] = index(compose_rank(img[u].data(), img[v].data(), n));
      inv[u] = index(rank(unrank(ranks[u], n).inverse()));
    }
    identity = index(rank(Permutation::identity(n)));
  }
  std::size_t size() const { return ranks.size(); }
  int operator()(int u, int v) const { return mul[u * ranks.size() + v]; }
};

// Largest F_I^x in A_n over all x and I.
std::pair<SetFamily, std::string> best_extremal_family(int n) {
  SetFamily best(n, DensityConvention::over_An);
  std::string spec;
  for (int x = 0; x < n; ++x)
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      if ((mask >> x) & 1u) continue;
      FamilySpec fs;
      fs.kind = FamilyKind::extremal;
      fs.degree = n;
      fs.x = x;
      for (int p = 0; p < n; ++p)
        if ((mask >> p) & 1u) fs.I.push_back(p);
      auto fam = build_family(fs);
      if (fam.size() > best.size() || spec.empty()) {
        best = std::move(fam);
        spec = fs.to_string();
      }
    }
  return {best, spec};
}

class ExactSearch {
 public:
  ExactSearch(const AlternatingGroup& g, std::uint64_t budget) : g_(g), budget_(budget) {
    const int N = static_cast<int>(g.size());
    sqrt_.assign(N, 0);
    for (int w = 0; w < N; ++w) sqrt_[g(w, w)] |= bit(w);
    std::vector<std::uint64_t> degree(N, 0);
    for (int u = 0; u < N; ++u)
      for (int v = 0; v < N; ++v) {
        const int w = g(u, v);
        std::uint64_t seen = 0;
        for (int z : {u, v, w})
          if (!(seen & bit(z))) ++degree[z], seen |= bit(z);
      }
    order_.resize(N);
    for (int v = 0; v < N; ++v) order_[v] = v;
    std::stable_sort(order_.begin(), order_.end(), [&](int p, int q) { return degree[p] > degree[q]; });
  }

  void seed(std::uint64_t mask) { best_ = mask, best_size_ = std::popcount(mask); }

  void run() {
    std::uint64_t all = g_.size() == 64 ? ~0ull : (bit(static_cast<int>(g_.size())) - 1);
    all &= ~bit(g_.identity);
    search(0, all, 0);
  }

  std::uint64_t best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }
  bool exhausted() const { return exhausted_; }

 private:
  static std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

  // Elements that would complete a product with v and members of s (v included in s).
  std::uint64_t conflicts(int v, std::uint64_t s) const {
    std::uint64_t out = sqrt_[v];
    const int vi = g_.inv[v];
    for (std::uint64_t rest = s; rest; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      const int ui = g_.inv[u];
      out |= bit(g_(v, u)) | bit(g_(u, v)) | bit(g_(u, vi)) | bit(g_(v, ui)) | bit(g_(vi, u)) | bit(g_(ui, v));
    }
    return out;
  }

  // Greedy clique cover of the pairwise conflict graph on the candidates.
  int bound(std::uint64_t s, std::uint64_t cand) const {
    std::uint64_t adj[64] = {};
    for (std::uint64_t rest = cand; rest; rest &= rest - 1) {
      const int w = std::countr_zero(rest);
      adj[w] = conflicts(w, s | bit(w)) & cand & ~bit(w);
    }
    int cliques = 0;
    std::uint64_t left = cand;
    while (left) {
      const int v = std::countr_zero(left);
      std::uint64_t common = adj[v] & left;
      left &= ~bit(v);
      while (common) {
        const int w = std::countr_zero(common);
        left &= ~bit(w);
        common &= adj[w] & ~bit(w);
      }
      ++cliques;
    }
    return cliques;
  }

  void search(std::uint64_t s, std::uint64_t cand, std::size_t pos) {
    if (exhausted_) return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    const int size = std::popcount(s);
    if (size > best_size_) best_ = s, best_size_ = size;
    while (pos < order_.size() && !(cand & bit(order_[pos]))) ++pos;
    if (pos == order_.size()) return;
    if (size + std::popcount(cand) <= best_size_) return;
    if (size + bound(s, cand) <= best_size_) return;
    const int v = order_[pos];
    const std::uint64_t with = s | bit(v);
    search(with, cand & ~bit(v) & ~conflicts(v, with), pos + 1);
    search(s, cand & ~bit(v), pos + 1);
  }

  const AlternatingGroup& g_;
  std::uint64_t budget_;
  std::vector<std::uint64_t> sqrt_;
  std::vector<int> order_;
  std::uint64_t best_ = 0;
  int best_size_ = 0;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

// Product-free set in A_n with counters that make membership tests O(1).
class LocalState {
 public:
  explicit LocalState(const AlternatingGroup& g)
      : g_(&g), in_(g.size(), 0), prod_(g.size(), 0), right_(g.size(), 0), left_(g.size(), 0) {}

  bool contains(int w) const { return in_[w]; }
  std::size_t size() const { return members_.size(); }
  const std::vector<int>& members() const { return members_; }

  bool addable(int w) const {
    const auto& g = *g_;
    return !in_[w] && w != g.identity && !in_[g(w, w)] && prod_[w] == 0 && right_[w] == 0 && left_[w] == 0;
  }

  void add(int s) {
    for (int t : members_) pair(s, t, 1), pair(t, s, 1);
    pair(s, s, 1);
    in_[s] = 1;
    members_.push_back(s);
  }

  void remove(int s) {
    members_.erase(std::find(members_.begin(), members_.end(), s));
    in_[s] = 0;
    for (int t : members_) pair(s, t, -1), pair(t, s, -1);
    pair(s, s, -1);
  }

 private:
  void pair(int s1, int s2, int d) {
    const auto& g = *g_;
    prod_[g(s1, s2)] += d;            // w = s1 s2
    right_[g(s2, g.inv[s1])] += d;    // w s1 = s2
    left_[g(g.inv[s1], s2)] += d;     // s1 w = s2
  }

  const AlternatingGroup* g_;
  std::vector<char> in_;
  std::vector<int> prod_, right_, left_;
  std::vector<int> members_;
};

SetFamily family_from_indices(const AlternatingGroup& g, const std::vector<int>& idx) {
  std::vector<Rank> ranks;
  for (int v : idx) ranks.push_back(g.ranks[v]);
  return SetFamily(g.n, std::move(ranks), DensityConvention::over_An);
}

std::vector<int> indices_of(const AlternatingGroup& g, const SetFamily& s) {
  std::vector<int> out;
  for (Rank r : s.members()) {
    const auto it = std::lower_bound(g.ranks.begin(), g.ranks.end(), r);
    if (it != g.ranks.end() && *it == r) out.push_back(static_cast<int>(it - g.ranks.begin()));
  }
  return out;
}

}  // namespace

MaxPFResult max_product_free(int degree, const MaxPFOptions& options) {
  require(degree >= 1, "degree must be positive");
  if (options.mode == SearchMode::exact)
    require(degree <= kMaxExactPFDegree, "exact search supports n <= 5 (|A_n| <= 60); use heuristic mode");
  else
    require(degree <= kMaxHeuristicPFDegree, "heuristic search supports n <= 7");
  const AlternatingGroup g(degree);
  MaxPFResult out;
  out.degree = degree;
  out.mode = options.mode;
  out.seed = options.seed;
  auto [fam, fam_spec] = best_extremal_family(degree);
  out.family_best = fam.size();
  out.family_best_spec = fam_spec;
  const auto warm = indices_of(g, fam);

  std::vector<int> best_idx;
  if (options.mode == SearchMode::exact) {
    ExactSearch search(g, options.budget ? options.budget : 50'000'000);
    std::uint64_t mask = 0;
    for (int v : warm) mask |= std::uint64_t{1} << v;
    search.seed(mask);
    search.run();
    for (std::uint64_t rest = search.best(); rest; rest &= rest - 1) best_idx.push_back(std::countr_zero(rest));
    out.work = search.nodes();
    out.budget_exhausted = search.exhausted();
    out.optimal = !search.exhausted();
  } else {
    const std::uint64_t moves = options.budget ? options.budget : 5'000;
    std::mt19937_64 rng(options.seed);
    const int N = static_cast<int>(g.size());
    std::vector<int> order(N);
    for (int v = 0; v < N; ++v) order[v] = v;
    auto fill = [&](LocalState& st) {
      std::shuffle(order.begin(), order.end(), rng);
      for (int v : order)
        if (st.addable(v)) st.add(v);
    };
    best_idx = warm;
    const int restarts = std::max(1, options.restarts);
    for (int rs = 0; rs < restarts; ++rs) {
      LocalState cur(g);
      if (rs == 0)
        for (int v : warm) cur.add(v);
      fill(cur);
      for (std::uint64_t mv = 0; mv < moves; ++mv, ++out.work) {
        LocalState next = cur;
        const int drop = 1 + static_cast<int>(rng() % 3);
        for (int k = 0; k < drop && next.size() > 0; ++k) next.remove(next.members()[rng() % next.size()]);
        fill(next);
        if (next.size() >= cur.size()) cur = std::move(next);
        if (cur.size() > best_idx.size()) best_idx = cur.members();
      }
    }
    out.budget_exhausted = true;
  }
  std::sort(best_idx.begin(), best_idx.end());
  out.best = family_from_indices(g, best_idx);
  out.certificate = is_product_free(out.best);
  return out;
}

std::size_t exhaustive_max_product_free(int degree) {
  require(degree >= 1 && degree <= 4, "exhaustive oracle supports n <= 4");
  std::vector<Permutation> elems;
  for (const auto& p : enumerate(degree, Parity::even)) elems.push_back(p);
  const std::size_t N = elems.size();
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << N); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size <= best) continue;
    bool ok = true;
    for (std::size_t u = 0; u < N && ok; ++u) {
      if (!((mask >> u) & 1u)) continue;
      for (std::size_t v = 0; v < N && ok; ++v) {
        if (!((mask >> v) & 1u)) continue;
        const auto w = compose(elems[u], elems[v]);
        for (std::size_t z = 0; z < N; ++z)
          if (((mask >> z) & 1u) && elems[z] == w) ok = false;
      }
    }
    if (ok) best = size;
  }
  return best;
}

nlohmann::json to_json(const PFWitness& w) {
  return {{"a", to_string(w.a)}, {"b", to_string(w.b)}, {"c", to_string(w.c)}};
}

nlohmann::json to_json(const PFResult& r) {
  return {{"product_free", r.product_free},
          {"checked_pairs", r.checked_pairs},
          {"witness", r.witness ? to_json(*r.witness) : nlohmann::json(nullptr)}};
}

nlohmann::json to_json(const FamilyMeasure& m) {
  auto opt = [](const std::optional<double>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
  return {{"size", m.size},        {"mu", m.mu},       {"mu_Sn", m.mu_sn},           {"mu_An", m.mu_an},
          {"t", opt(m.t)},         {"estimate", opt(m.estimate)}, {"ratio", opt(m.ratio)}};
}

nlohmann::json to_json(const MaxPFResult& r) {
  auto set = nlohmann::json::array();
  for (const auto& p : r.best.permutations()) set.push_back(to_string(p));
  return {{"n", r.degree},
          {"mode", r.mode == SearchMode::exact ? "exact" : "heuristic"},
          {"size", r.best.size()},
          {"optimal", r.optimal},
          {"budget_exhausted", r.budget_exhausted},
          {"work", r.work},
          {"seed", r.seed},
          {"certificate", to_json(r.certificate)},
          {"family_best", r.family_best},
          {"family_best_spec", r.family_best_spec},
          {"matches_family", r.best.size() == r.family_best},
          {"set", set}};
}

}  // namespace symspec
