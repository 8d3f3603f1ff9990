#include "witt/repcheck.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace witt {

namespace {

std::vector<const LinearMap*> generators_of(const ModuleRealization& M) {
  std::vector<const LinearMap*> g;
  for (auto z : M.acting()) g.push_back(&M.action[z]);
  return g;
}

// Projective points of span(basis): coefficient vectors whose first nonzero
// entry is 1, in a fixed order. Calls f(v) until it returns false.
template <class Fn>
std::size_t for_each_point(const Field& F, const std::vector<SparseVector>& basis, std::size_t ambient, Fn&& f) {
  const std::size_t d = basis.size();
  const std::uint32_t q = F.size();
  std::size_t seen = 0;
  std::vector<Elem> coef(d, 0);
  Accumulator acc(ambient);
  for (std::size_t lead = 0; lead < d; ++lead) {
    std::fill(coef.begin(), coef.end(), 0);
    coef[lead] = 1;
    const std::size_t tail = d - lead - 1;
    while (true) {
      for (std::size_t i = lead; i < d; ++i)
        if (coef[i]) acc.add_scaled(F, basis[i], coef[i]);
      ++seen;
      if (!f(acc.take())) return seen;
      std::size_t k = 0;
      while (k < tail) {
        auto& c = coef[lead + 1 + k];
        if (++c < q) break;
        c = 0;
        ++k;
      }
      if (k == tail) break;
    }
  }
  return seen;
}

std::size_t point_count(const Field& F, std::size_t d, std::size_t cap) {
  // (q^d - 1)/(q - 1), saturating at cap + 1
  std::size_t total = 0, pw = 1;
  for (std::size_t i = 0; i < d; ++i) {
    total += pw;
    if (total > cap) return cap + 1;
    pw *= F.size();
    if (pw > cap) pw = cap + 1;
  }
  return total;
}

bool chi_vanishes_on(const ModuleRealization& M, const std::vector<std::uint32_t>& idx) {
  return std::all_of(idx.begin(), idx.end(), [&](std::uint32_t z) { return M.chi(z) == 0; });
}

std::string sign_label(const std::vector<int>& s) {
  std::string out = "S[";
  for (int v : s) out += v > 0 ? '+' : '-';
  return out + "]";
}

// Chain Borels first, then every sign vector.
std::optional<Borel> choose_borel(const ModuleRealization& M) {
  const WittAlgebra& W = *M.W;
  const auto chain = W.borel_chain();
  for (const auto& B : chain.borels)
    if (chi_vanishes_on(M, positive_acting(M, B))) return B;
  const std::uint32_t rk = W.rank();
  for (std::uint32_t mask = 0; mask < (1u << rk); ++mask) {
    std::vector<int> s(rk);
    for (std::uint32_t k = 0; k < rk; ++k) s[k] = (mask >> k) & 1u ? -1 : 1;
    auto B = W.borel(sign_label(s), s);
    if (chi_vanishes_on(M, positive_acting(M, B))) return B;
  }
  return std::nullopt;
}

Borel borel_by_label(const WittAlgebra& W, const std::string& label) {
  for (const auto& B : W.borel_chain().borels)
    if (B.label == label) return B;
  require(label.size() == W.rank() + 3 && label.rfind("S[", 0) == 0, "unknown Borel label '" + label + "'");
  std::vector<int> s;
  for (std::size_t k = 0; k < W.rank(); ++k) s.push_back(label[2 + k] == '-' ? -1 : 1);
  return W.borel(label, s);
}

Subspace annihilator(const Field& F, const Subspace& dual, std::size_t dim) {
  // {x : <u, x> = 0 for u in dual}; column i holds the i-th coordinates of the u's.
  std::vector<SparseVector> cols(dim);
  const auto& rows = dual.basis();
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (auto [i, c] : rows[r].entries) cols[i].entries.emplace_back(static_cast<std::uint32_t>(r), c);
  return column_kernel(F, cols, rows.size());
}

struct Analysis {
  SimplicityVerdict verdict;
  std::optional<Subspace> sub;
};

Analysis norton(const ModuleRealization& M, std::uint64_t seed, bool want_sub) {
  Analysis out;
  auto& v = out.verdict;
  v.method = "norton";
  v.probabilistic = true;
  v.rng_seed = seed;
  const Field& F = M.F;
  const std::size_t n = M.dim();
  std::vector<LinearMap> gens;
  for (auto z : M.acting()) gens.push_back(M.action[z]);
  gens.push_back(M.parity_operator());
  std::vector<const LinearMap*> gp;
  for (const auto& g : gens) gp.push_back(&g);
  std::vector<LinearMap> gt;
  for (const auto& g : gens) gt.push_back(g.transpose());
  std::vector<const LinearMap*> gtp;
  for (const auto& g : gt) gtp.push_back(&g);

  std::mt19937_64 rng(seed);
  auto rand_elem = [&]() { return static_cast<Elem>(rng() % F.size()); };
  auto rand_comb = [&]() {
    LinearMap X = LinearMap::zero(n);
    for (const auto& g : gens) X = X.add(F, g, rand_elem());
    return X;
  };

  for (int attempt = 0; attempt < 64; ++attempt) {
    const LinearMap X = rand_comb(), Y = rand_comb(), Z = rand_comb();
    const LinearMap A = X.compose(F, Y).add(F, Z);
    // Minimal polynomial of a random vector gives eigenvalue candidates.
    SparseVector x0;
    for (std::uint32_t i = 0; i < n; ++i)
      if (Elem c = rand_elem()) x0.entries.emplace_back(i, c);
    if (x0.empty()) continue;
    std::vector<SparseVector> kry{x0};
    Subspace span(F, n);
    span.insert(x0);
    while (true) {
      auto nx = A.apply(F, kry.back());
      kry.push_back(nx);
      if (span.insert(nx).empty()) break;
    }
    const auto rel = column_kernel(F, kry, n);
    require(rel.dim() >= 1, "norton: Krylov relation missing");
    const auto poly = rel.basis().front().to_dense(kry.size());
    std::vector<Elem> roots;
    for (Elem c = 0; c < F.size(); ++c) {
      Elem val = 0;
      for (std::size_t i = poly.size(); i-- > 0;) val = F.add(F.mul(val, c), poly[i]);
      if (val == 0) roots.push_back(c);
    }
    if (roots.empty()) continue;
    // Smallest nullity among the roots.
    Subspace best;
    Elem best_c = 0;
    for (Elem c : roots) {
      const auto B = A.add(F, LinearMap::identity(n), F.neg(c));
      std::vector<SparseVector> cols;
      for (std::size_t j = 0; j < n; ++j) cols.push_back(B.column(j));
      auto ker = column_kernel(F, cols, n);
      if (best.ambient() == 0 || ker.dim() < best.dim()) {
        best = std::move(ker);
        best_c = c;
      }
    }
    if (point_count(F, best.dim(), 4096) > 4096) continue;

    const auto B = A.add(F, LinearMap::identity(n), F.neg(best_c));
    bool proper = false;
    for_each_point(F, best.basis(), n, [&](const SparseVector& u) {
      std::vector<SparseVector> s{u};
      auto sp = spin(F, n, s, gp);
      if (!sp.is_full()) {
        proper = true;
        v.seed = u;
        v.submodule_dim = sp.dim();
        if (want_sub) out.sub = std::move(sp);
        return false;
      }
      return true;
    });
    if (proper) {
      v.simple = false;
      v.note = "kernel vector of a singular algebra element spins to a proper submodule";
      return out;
    }
    const auto Bt = B.transpose();
    std::vector<SparseVector> tcols;
    for (std::size_t j = 0; j < n; ++j) tcols.push_back(Bt.column(j));
    const auto kt = column_kernel(F, tcols, n);
    std::vector<SparseVector> w{kt.basis().front()};
    auto sp = spin(F, n, w, gtp);
    if (!sp.is_full()) {
      v.simple = false;
      v.seed = w.front();
      v.dual_seed = true;
      v.submodule_dim = n - sp.dim();
      v.note = "dual kernel vector spins to a proper submodule of the dual";
      if (want_sub) out.sub = annihilator(F, sp, n);
      return out;
    }
    v.simple = true;
    v.note = "nullity " + std::to_string(best.dim()) + " singular element; kernel and dual kernel generate";
    return out;
  }
  fail(ErrorCode::Internal, "norton: no usable singular element found");
}

Analysis analyze(const ModuleRealization& M, const SimplicityOptions& opt, std::uint64_t shuffle, bool want_sub) {
  Analysis out;
  auto& v = out.verdict;
  v.rng_seed = opt.seed;
  if (M.dim() == 0) {
    v.method = "trivial";
    v.note = "zero module";
    return out;
  }
  if (M.dim() == 1) {
    v.simple = true;
    v.method = "trivial";
    v.note = "one-dimensional";
    return out;
  }
  if (opt.force_norton) return norton(M, opt.seed, want_sub);
  std::optional<Borel> B = opt.borel;
  if (!B) B = choose_borel(M);
  if (!B || !chi_vanishes_on(M, positive_acting(M, *B))) {
    auto a = norton(M, opt.seed, want_sub);
    a.verdict.note = "no Borel with chi(N+) = 0; " + a.verdict.note;
    return a;
  }
  std::vector<WeightSpace> maxs;
  try {
    maxs = maximal_vectors(M, *B);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ExtendField) throw;
    auto a = norton(M, opt.seed, want_sub);
    a.verdict.note = "torus not diagonalizable; " + a.verdict.note;
    return a;
  }
  if (maxs.empty()) fail(ErrorCode::Internal, "no maximal vectors found");
  for (const auto& ws : maxs)
    if (point_count(M.F, ws.space.dim(), opt.max_points) > opt.max_points) {
      auto a = norton(M, opt.seed, want_sub);
      a.verdict.note = "maximal space too large to enumerate; " + a.verdict.note;
      return a;
    }
  v.method = "maximal-vector";
  v.borel = B->label;
  const auto gens = generators_of(M);
  std::vector<std::size_t> order(maxs.size());
  std::iota(order.begin(), order.end(), 0);
  if (shuffle) std::shuffle(order.begin(), order.end(), std::mt19937_64(shuffle));
  for (auto k : order) {
    const auto& ws = maxs[k];
    MaximalWitness w{ws.weight, ws.parity, ws.space.dim(), 0, M.dim() + 1, {}};
    std::optional<Subspace> found;
    w.checked = for_each_point(M.F, ws.space.basis(), M.dim(), [&](const SparseVector& u) {
      std::vector<SparseVector> s{u};
      auto sp = spin(M.F, M.dim(), s, gens);
      if (sp.dim() < w.spin_dim) {
        w.spin_dim = sp.dim();
        w.vector = u;
      }
      if (!sp.is_full()) {
        found = std::move(sp);
        return false;
      }
      return true;
    });
    v.maximal.push_back(w);
    if (found) {
      v.simple = false;
      v.seed = w.vector;
      v.submodule_dim = found->dim();
      v.note = "maximal vector generates a proper submodule";
      if (want_sub) out.sub = std::move(found);
      return out;
    }
  }
  v.simple = true;
  v.note = "every maximal vector generates";
  return out;
}

SparseVector remap_to_quotient(const Subspace& U, const SparseVector& x, std::size_t dim) {
  std::vector<int> slot(dim, -1);
  std::vector<std::uint8_t> piv(dim, 0);
  for (auto p : U.pivots()) piv[p] = 1;
  int next = 0;
  for (std::size_t i = 0; i < dim; ++i)
    if (!piv[i]) slot[i] = next++;
  SparseVector out;
  for (auto [i, c] : U.reduce(x).entries) out.entries.emplace_back(static_cast<std::uint32_t>(slot[i]), c);
  return out;
}

Elem determinant(const Field& F, std::vector<std::vector<Elem>> a) {
  const std::size_t n = a.size();
  Elem det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && a[r][c] == 0) ++r;
    if (r == n) return 0;
    if (r != c) {
      std::swap(a[r], a[c]);
      det = F.neg(det);
    }
    det = F.mul(det, a[c][c]);
    const Elem inv = F.inv(a[c][c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      const Elem f = F.mul(a[i][c], inv);
      if (!f) continue;
      for (std::size_t j = c; j < n; ++j) a[i][j] = F.sub(a[i][j], F.mul(f, a[c][j]));
    }
  }
  return det;
}

PairingWitness pairing_rank(const WittAlgebra& W, const Field& F, const Character& chi,
                            const std::vector<std::uint32_t>& rows, const std::vector<std::uint32_t>& cols) {
  PairingWitness out;
  out.cols = cols;
  out.required = cols.size();
  Subspace span(F, cols.size());
  std::vector<std::vector<Elem>> chosen;
  for (auto e : rows) {
    std::vector<Elem> row;
    for (auto b : cols) row.push_back(chi.eval(F, W.bracket_basis(e, b)));
    if (!span.insert(SparseVector::from_dense(row)).empty()) {
      out.rows.push_back(e);
      chosen.push_back(row);
    }
    if (span.is_full()) break;
  }
  out.rank = span.dim();
  out.nonsingular = out.rank == out.required && out.required > 0;
  if (out.nonsingular) out.determinant = determinant(F, chosen);
  if (!out.nonsingular) out.note = "pairing rank " + std::to_string(out.rank) + " < " + std::to_string(out.required);
  return out;
}

}  // namespace

std::vector<WeightSpace> weight_spaces(const ModuleRealization& M) {
  const WittAlgebra& W = *M.W;
  std::vector<WeightSpace> out;
  if (M.has_weights()) {
    std::map<std::pair<Weight, std::uint32_t>, std::vector<std::uint32_t>> groups;
    for (std::uint32_t j = 0; j < M.dim(); ++j) groups[{M.weights[j], M.parity[j]}].push_back(j);
    for (auto& [key, idx] : groups) {
      WeightSpace ws{key.first, key.second, Subspace(M.F, M.dim())};
      for (auto j : idx) ws.space.insert(SparseVector::unit(j));
      out.push_back(std::move(ws));
    }
    return out;
  }
  for (auto h : W.toral()) require(M.acts[h], "torus does not act on this module");
  const auto P = M.parity_operator();
  std::vector<WeightSpace> cur;
  for (std::uint32_t par = 0; par < 2; ++par) {
    EigenConstraint ec{&P, par ? M.F.neg(1) : M.F.one()};
    auto S = solve_null(M.F, M.dim(), {}, std::span<const EigenConstraint>(&ec, 1));
    if (S.dim()) cur.push_back({{}, par, std::move(S)});
  }
  for (auto h : W.toral()) {
    std::vector<WeightSpace> next;
    for (auto& ws : cur) {
      std::size_t total = 0;
      for (Elem c = 0; c < M.F.size() && total < ws.space.dim(); ++c) {
        EigenConstraint ec{&M.action[h], c};
        auto S = solve_null(M.F, M.dim(), {}, std::span<const EigenConstraint>(&ec, 1), &ws.space);
        if (!S.dim()) continue;
        total += S.dim();
        Weight w = ws.weight;
        w.push_back(c);
        next.push_back({w, ws.parity, std::move(S)});
      }
      if (total != ws.space.dim())
        fail(ErrorCode::ExtendField, "torus is not diagonalizable over F_" + std::to_string(M.F.size()) +
                                         "; extend the field");
    }
    cur = std::move(next);
  }
  std::sort(cur.begin(), cur.end(), [](const WeightSpace& a, const WeightSpace& b) {
    return std::tie(a.weight, a.parity) < std::tie(b.weight, b.parity);
  });
  return cur;
}

std::vector<std::uint32_t> positive_acting(const ModuleRealization& M, const Borel& B) {
  std::vector<std::uint32_t> out;
  for (auto z : B.positive)
    if (M.acts[z]) out.push_back(z);
  return out;
}

std::vector<WeightSpace> maximal_vectors(const ModuleRealization& M, const Borel& B) {
  std::vector<const LinearMap*> ops;
  for (auto z : positive_acting(M, B)) ops.push_back(&M.action[z]);
  std::vector<WeightSpace> out;
  for (auto& ws : weight_spaces(M)) {
    auto S = solve_null(M.F, M.dim(), ops, {}, &ws.space);
    if (S.dim()) out.push_back({ws.weight, ws.parity, std::move(S)});
  }
  return out;
}

Subspace spin_in(const ModuleRealization& M, const std::vector<SparseVector>& seed, bool graded) {
  auto gens = generators_of(M);
  LinearMap P;
  if (graded) {
    P = M.parity_operator();
    gens.push_back(&P);
  }
  return spin(M.F, M.dim(), seed, gens);
}

SimplicityVerdict is_simple(const ModuleRealization& M, const SimplicityOptions& opt) {
  return analyze(M, opt, 0, false).verdict;
}

SimplicityVerdict norton_test(const ModuleRealization& M, std::uint64_t seed) {
  if (M.dim() <= 1) {
    SimplicityOptions o;
    o.seed = seed;
    return analyze(M, o, 0, false).verdict;
  }
  return norton(M, seed, false).verdict;
}

std::optional<bool> exhaustive_simple(const ModuleRealization& M, std::size_t limit) {
  if (M.dim() <= 1) return M.dim() == 1;
  const std::size_t n = M.dim();
  auto proper_spin = [&](const SparseVector& u) { return spin_in(M, {u}, true).dim() < n; };
  std::vector<SparseVector> units;
  for (std::uint32_t j = 0; j < n; ++j) units.push_back(SparseVector::unit(j));
  if (point_count(M.F, n, limit) <= limit) {
    bool simple = true;
    for_each_point(M.F, units, n, [&](const SparseVector& u) {
      simple = !proper_spin(u);
      return simple;
    });
    return simple;
  }
  std::vector<WeightSpace> ws;
  try {
    ws = weight_spaces(M);
  } catch (const Error&) {
    return std::nullopt;
  }
  std::size_t total = 0;
  for (const auto& w : ws) total += point_count(M.F, w.space.dim(), limit);
  if (total > limit) return std::nullopt;
  for (const auto& w : ws) {
    bool simple = true;
    for_each_point(M.F, w.space.basis(), n, [&](const SparseVector& u) {
      simple = !proper_spin(u);
      return simple;
    });
    if (!simple) return false;
  }
  return true;
}

bool verdict_consistent(const SimplicityVerdict& v, std::size_t dim) {
  if (!v.simple) return v.submodule_dim > 0 && v.submodule_dim < dim && !v.seed.empty();
  if (v.submodule_dim != 0) return false;
  if (v.method == "trivial") return dim == 1;
  if (v.method == "maximal-vector") {
    if (v.maximal.empty()) return false;
    for (const auto& w : v.maximal)
      if (w.spin_dim != dim || w.checked == 0 || w.vector.empty()) return false;
    return true;
  }
  return v.method == "norton";
}

bool revalidate(const ModuleRealization& M, const SimplicityVerdict& v) {
  if (!verdict_consistent(v, M.dim())) return false;
  const std::size_t n = M.dim();
  if (!v.simple) {
    if (v.dual_seed) {
      std::vector<LinearMap> gt;
      for (auto z : M.acting()) gt.push_back(M.action[z].transpose());
      gt.push_back(M.parity_operator());
      std::vector<const LinearMap*> gp;
      for (const auto& g : gt) gp.push_back(&g);
      std::vector<SparseVector> s{v.seed};
      return n - spin(M.F, n, s, gp).dim() == v.submodule_dim;
    }
    return spin_in(M, {v.seed}, true).dim() == v.submodule_dim;
  }
  if (v.method == "trivial") return true;
  if (v.method == "norton") return norton(M, v.rng_seed, false).verdict.simple;
  const auto B = borel_by_label(*M.W, v.borel);
  for (const auto& w : v.maximal) {
    for (auto z : positive_acting(M, B))
      if (!M.action[z].apply(M.F, w.vector).empty()) return false;
    if (spin_in(M, {w.vector}).dim() != n) return false;
  }
  SimplicityOptions o;
  o.borel = B;
  o.seed = v.rng_seed;
  return is_simple(M, o).simple;
}

std::optional<Subspace> proper_submodule(const ModuleRealization& M, const SimplicityOptions& opt,
                                         std::uint64_t shuffle) {
  auto a = analyze(M, opt, shuffle, true);
  if (a.verdict.simple || M.dim() == 0) return std::nullopt;
  return a.sub;
}

QuotientResult simple_quotient(const ModuleRealization& M, const SparseVector& top, const SimplicityOptions& opt,
                               std::uint64_t shuffle) {
  if (spin_in(M, {top}).dim() != M.dim()) fail(ErrorCode::Usage, "simple_quotient: top does not generate");
  QuotientResult r{M, top, 0};
  while (true) {
    auto U = proper_submodule(r.module, opt, shuffle ? shuffle + r.steps : 0);
    if (!U) break;
    auto t = remap_to_quotient(*U, r.top, r.module.dim());
    if (t.empty()) fail(ErrorCode::Internal, "simple_quotient: top fell into a proper submodule");
    r.module = quotient_by(r.module, *U, "simple-quotient");
    r.top = std::move(t);
    ++r.steps;
  }
  r.module.provenance = "simple-quotient";
  return r;
}

ModuleRealization find_simple_submodule(const ModuleRealization& M, const SimplicityOptions& opt) {
  ModuleRealization cur = M;
  while (auto U = proper_submodule(cur, opt)) cur = restrict_to(cur, *U, "sub");
  cur.provenance = "sub";
  return cur;
}

namespace {

std::pair<Weight, SparseVector> unique_line(const ModuleRealization& L, const Borel& B) {
  auto maxs = maximal_vectors(L, B);
  std::size_t total = 0;
  for (const auto& ws : maxs) total += ws.space.dim();
  if (total != 1)
    fail(ErrorCode::Domain, "expected a unique maximal line for " + B.label + ", found dimension " +
                                std::to_string(total));
  return {maxs.front().weight, maxs.front().space.basis().front()};
}

}  // namespace

Weight minimal_weight(const ModuleRealization& L) { return unique_line(L, L.W->borel_chain().min()).first; }

std::vector<WalkStep> reflection_walk(const ModuleRealization& L, const BorelChain& chain) {
  const WittAlgebra& W = *L.W;
  const Field& F = L.F;
  std::vector<WalkStep> out;
  Weight prev_w;
  SparseVector prev_v;
  std::vector<int> prev_s;
  for (const auto& B : chain.borels) {
    auto [w, v] = unique_line(L, B);
    WalkStep st;
    st.borel = B.label;
    st.weight = w;
    if (out.empty()) {
      st.kind = "start";
    } else {
      std::size_t k = 0;
      while (k < B.signs.size() && B.signs[k] == prev_s[k]) ++k;
      require(k < B.signs.size(), "consecutive Borels coincide");
      const Elem diff = F.sub(prev_w[k], w[k]);
      const std::uint32_t mono1 = W.lambda().one_index();
      if (k >= W.n()) {
        st.kind = "eps";
        st.coord = static_cast<std::uint32_t>(k - W.n() + 1);
        st.r = diff;
        const auto d = W.index_of(mono1, false, st.coord);
        SparseVector u = prev_v;
        while (true) {
          u = L.action[d].apply(F, u);
          if (u.empty()) break;
          ++st.d_order;
        }
      } else {
        st.kind = "eta";
        st.coord = static_cast<std::uint32_t>(k + 1);
        st.delta = diff;
        const auto D = W.index_of(mono1, true, st.coord);
        st.D_kills = L.action[D].apply(F, prev_v).empty();
      }
    }
    out.push_back(st);
    prev_w = w;
    prev_v = v;
    prev_s = B.signs;
  }
  return out;
}

HeightReport height(const WittAlgebra& W, const Character& chi, Gradation g) {
  HeightReport r{g, -1};
  for (std::uint32_t i = 0; i < W.dim(); ++i) {
    if (chi(i) == 0) continue;
    const int d = g == Gradation::I ? W.degree_I(i) : W.degree_II(i);
    r.height = std::max(r.height, d + 1);
  }
  return r;
}

PairingWitness nonsingular_type1(const WittAlgebra& W, const Field& F, const Character& chi) {
  const int h = height(W, chi, Gradation::I).height;
  if (h <= 1) fail(ErrorCode::Usage, "nonsingular_type1 needs ht_I(chi) > 1 (got " + std::to_string(h) + ")");
  const std::uint32_t mono1 = W.lambda().one_index();
  std::vector<std::uint32_t> cols;
  for (std::uint32_t i = 1; i <= W.n(); ++i) cols.push_back(W.index_of(mono1, true, i));
  for (std::uint32_t j = 1; j <= W.m(); ++j) cols.push_back(W.index_of(mono1, false, j));
  auto w = pairing_rank(W, F, chi, W.graded_I(h), cols);
  if (W.graded_I(h).empty()) w.note = "W_[" + std::to_string(h) + "] = 0";
  return w;
}

std::vector<std::uint32_t> type2_ordering(const WittAlgebra& W) {
  std::vector<std::uint32_t> out;
  const auto& L = W.lambda();
  for (std::uint32_t u = 0; u < L.dim(); ++u) {
    if (L.monomial(u).I.mask) continue;
    for (std::uint32_t i = 1; i <= W.n(); ++i) out.push_back(W.index_of(u, true, i));
  }
  return out;
}

PairingWitness nonsingular_type2(const WittAlgebra& W, const Field& F, const Character& chi) {
  const int h = height(W, chi, Gradation::II).height;
  if (h <= 1) fail(ErrorCode::Usage, "nonsingular_type2 needs ht_II(chi) > 1 (got " + std::to_string(h) + ")");
  auto w = pairing_rank(W, F, chi, W.graded_II(h), type2_ordering(W));
  if (W.graded_II(h).empty()) w.note = "W_" + std::to_string(h) + " = 0";
  return w;
}

InducibleWitness inducible(const ModuleRealization& K, std::size_t base_dim, const std::vector<std::uint32_t>& ordering,
                           const std::vector<WittElement>* candidates, bool proof_order) {
  const WittAlgebra& W = *K.W;
  const Field& F = K.F;
  require(K.is_full(), "inducible: K must be a W-module");
  require(base_dim > 0 && base_dim <= K.dim(), "inducible: base module missing");
  const int ht = height(W, K.chi, Gradation::II).height;
  require(ht == 1 || K.chi.is_zero(), "inducible needs ht_II(chi) = 1");
  const std::size_t s = ordering.size();
  for (auto f : ordering) require(W.degree_II(f) == -1, "ordering must be a basis of W_{-1}");
  require(s == W.graded_II(-1).size(), "ordering must list all of W_{-1}");

  // flag[j] spans f_{j+1} ... f_s (x) M (0-based: f_{j+1..s-1}).
  std::vector<std::vector<SparseVector>> flag(s);
  for (std::uint32_t b = 0; b < base_dim; ++b) flag[s - 1].push_back(SparseVector::unit(b));
  for (std::size_t j = s - 1; j-- > 0;)
    for (const auto& u : flag[j + 1]) flag[j].push_back(K.action[ordering[j + 1]].apply(F, u));

  const auto W1 = W.graded_II(1);
  const std::size_t D = K.dim();
  // Column for e in W_1: images of [e, f_j] (j != i) and [[e, f_j], f_k]
  // (k > j) on the flag f_{j+1} ... f_s (x) M; e qualifies iff it is zero.
  std::size_t rows_used = 0;
  auto constraint = [&](const WittElement& e, std::size_t i) {
    SparseVector col;
    std::size_t off = 0;
    auto push = [&](const WittElement& x, const std::vector<SparseVector>& vs) {
      const auto A = K.action_of(x);
      for (const auto& u : vs) {
        for (auto [r, c] : A.apply(F, u).entries) col.entries.emplace_back(static_cast<std::uint32_t>(off + r), c);
        off += D;
      }
    };
    for (std::size_t j = proof_order ? i : 0; j < s; ++j) {
      const auto ef = W.bracket(F, e, SparseVector::unit(ordering[j]));
      if (j != i) push(ef, flag[j]);
      for (std::size_t k = j + 1; k < s; ++k) push(W.bracket(F, ef, SparseVector::unit(ordering[k])), flag[j]);
    }
    rows_used = off;
    std::sort(col.entries.begin(), col.entries.end());
    return col;
  };

  InducibleWitness out;
  out.ordering = ordering;
  out.inducible = true;
  for (std::size_t i = 0; i < s; ++i) {
    const auto fi = SparseVector::unit(ordering[i]);
    if (candidates) {
      require(candidates->size() == s, "inducible: need one candidate per f_i");
      const auto& e = (*candidates)[i];
      const Elem val = K.chi.eval(F, W.bracket(F, e, fi));
      const bool ok = val != 0 && constraint(e, i).empty();
      out.e.push_back(e);
      out.pairing.push_back(val);
      out.solution_dim.push_back(ok ? 1 : 0);
      if (!ok) {
        out.inducible = false;
        if (out.note.empty())
          out.note = "candidate e_" + std::to_string(i + 1) + (val == 0 ? " has chi([e, f]) = 0" : " does not annihilate the flags");
      }
      continue;
    }
    std::vector<SparseVector> cols;
    for (auto e : W1) cols.push_back(constraint(SparseVector::unit(e), i));
    const auto E = column_kernel(F, cols, rows_used);
    out.solution_dim.push_back(E.dim());
    bool found = false;
    for (const auto& y : E.basis()) {
      WittElement e;
      for (auto [k, c] : y.entries) e.entries.emplace_back(W1[k], c);
      const Elem val = K.chi.eval(F, W.bracket(F, e, fi));
      if (val) {
        out.e.push_back(e);
        out.pairing.push_back(val);
        found = true;
        break;
      }
    }
    if (!found) {
      out.inducible = false;
      out.e.push_back({});
      out.pairing.push_back(0);
      if (out.note.empty()) out.note = "no e_" + std::to_string(i + 1) + " in W_1 pairs with f and annihilates the flags";
    }
  }
  return out;
}

}  // namespace witt
