#include "witt/axioms.hpp"

#include <random>

namespace witt {

namespace {

std::string tuple_label(const WittAlgebra& W, std::initializer_list<std::uint32_t> idx) {
  std::string s = "(";
  bool first = true;
  for (auto i : idx) {
    s += (first ? "" : ", ") + W.label(i);
    first = false;
  }
  return s + ")";
}

void record(SuiteResult& r, bool ok, const std::string& where) {
  ++r.checked;
  if (!ok && r.pass) {
    r.pass = false;
    r.counterexample = where;
  }
}

Elem sign_of(const Field& F, bool negative) { return negative ? F.neg(1) : 1; }

}  // namespace

SuiteResult check_skew(const WittAlgebra& W) {
  SuiteResult r{"skew", true, 0, {}};
  const Field& F = W.field();
  for (std::uint32_t i = 0; i < W.dim(); ++i)
    for (std::uint32_t j = 0; j < W.dim(); ++j) {
      const Elem s = sign_of(F, !(W.parity(i) & W.parity(j)));  // -(-1)^{ij}
      record(r, W.bracket_basis(i, j) == scale(F, s, W.bracket_basis(j, i)), tuple_label(W, {i, j}));
    }
  return r;
}

SuiteResult check_jacobi(const WittAlgebra& W, const AxiomOptions& opt) {
  SuiteResult r{"jacobi", true, 0, {}};
  const Field& F = W.field();
  std::mt19937_64 rng(opt.seed);
  std::bernoulli_distribution keep(std::min(1.0, std::max(0.0, opt.jacobi_fraction)));
  const auto N = static_cast<std::uint32_t>(W.dim());
  for (std::uint32_t x = 0; x < N; ++x)
    for (std::uint32_t y = 0; y < N; ++y)
      for (std::uint32_t z = 0; z < N; ++z) {
        if (opt.jacobi_fraction < 1.0 && !keep(rng)) continue;
        // [x,[y,z]] = [[x,y],z] + (-1)^{xy} [y,[x,z]]
        const auto ex = SparseVector::unit(x), ey = SparseVector::unit(y), ez = SparseVector::unit(z);
        const auto lhs = W.bracket(F, ex, W.bracket_basis(y, z));
        auto rhs = W.bracket(F, W.bracket_basis(x, y), ez);
        rhs = axpy(F, rhs, sign_of(F, W.parity(x) & W.parity(y)), W.bracket(F, ey, W.bracket_basis(x, z)));
        record(r, lhs == rhs, tuple_label(W, {x, y, z}));
      }
  return r;
}

SuiteResult check_derivation_law(const WittAlgebra& W) {
  SuiteResult r{"derivation", true, 0, {}};
  const Field& F = W.field();
  const auto& L = W.lambda();
  for (std::uint32_t e = 0; e < W.dim(); ++e) {
    const auto& op = W.lambda_operator(e);
    for (std::uint32_t u = 0; u < L.dim(); ++u)
      for (std::uint32_t v = 0; v < L.dim(); ++v) {
        const auto eu = SparseVector::unit(u), ev = SparseVector::unit(v);
        const auto lhs = op.apply(F, L.multiply(F, eu, ev));
        auto rhs = L.multiply(F, op.apply(F, eu), ev);
        rhs = axpy(F, rhs, sign_of(F, W.parity(e) & L.monomial(u).parity()), L.multiply(F, eu, op.apply(F, ev)));
        record(r, lhs == rhs, W.label(e) + " on (" + L.label(u) + ", " + L.label(v) + ")");
      }
  }
  return r;
}

SuiteResult check_operator_bracket(const WittAlgebra& W) {
  SuiteResult r{"operator-bracket", true, 0, {}};
  const Field& F = W.field();
  for (std::uint32_t i = 0; i < W.dim(); ++i)
    for (std::uint32_t j = 0; j < W.dim(); ++j) {
      const auto& A = W.lambda_operator(i);
      const auto& B = W.lambda_operator(j);
      const auto sc = A.compose(F, B).add(F, B.compose(F, A), sign_of(F, !(W.parity(i) & W.parity(j))));
      record(r, W.lambda_operator(F, W.bracket_basis(i, j)) == sc, tuple_label(W, {i, j}));
    }
  return r;
}

SuiteResult check_grading(const WittAlgebra& W) {
  SuiteResult r{"grading", true, 0, {}};
  for (std::uint32_t i = 0; i < W.dim(); ++i)
    for (std::uint32_t j = 0; j < W.dim(); ++j) {
      bool ok = true;
      for (auto [k, c] : W.bracket_basis(i, j).entries) {
        (void)c;
        ok = ok && W.degree_I(k) == W.degree_I(i) + W.degree_I(j) && W.degree_II(k) == W.degree_II(i) + W.degree_II(j) &&
             W.parity(k) == (W.parity(i) ^ W.parity(j));
      }
      record(r, ok, tuple_label(W, {i, j}));
    }
  return r;
}

SuiteResult check_restricted(const WittAlgebra& W, std::uint64_t seed) {
  SuiteResult r{"restricted", true, 0, {}};
  const Field& F = W.field();
  const auto even = W.even_basis();
  for (auto x : even) {
    const auto xp = W.p_power(x);
    record(r, W.ad(F, xp) == W.ad(x).power(F, W.p()), "ad p-power at " + W.label(x));
    record(r, W.p_power(F, SparseVector::unit(x)) == xp, "closed-form p-map at " + W.label(x));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, even.size() - 1);
  std::uniform_int_distribution<Elem> coef(1, W.p() - 1);
  for (int t = 0; t < 8; ++t) {
    Accumulator acc(W.dim());
    for (int k = 0; k < 3; ++k) acc.add(F, even[pick(rng)], coef(rng));
    const auto x = acc.take();
    const auto xp = W.p_power(F, x);
    record(r, W.ad(F, xp) == W.ad(F, x).power(F, W.p()), "ad p-power at " + W.label(F, x));
  }
  return r;
}

SuiteResult check_gl_table(const WittAlgebra& W) {
  SuiteResult r{"gl-table", true, 0, {}};
  const Field& F = W.field();
  const auto basis = W.gl_basis();
  const std::uint32_t m = W.m();
  auto par = [m](std::uint32_t k) { return k >= m ? 1u : 0u; };
  std::vector<std::int64_t> slot(W.dim(), -1);
  for (auto b : basis) {
    auto [row, col] = W.gl_iso(b);
    slot[b] = row * W.rank() + col;
  }
  record(r, basis.size() == W.rank() * W.rank(), "dim W_[0] != (m+n)^2");
  for (auto x : basis)
    for (auto y : basis) {
      // [E_rs, E_tu] = d_st E_ru - (-1)^{|rs||tu|} d_ur E_ts
      auto [rr, ss] = W.gl_iso(x);
      auto [tt, uu] = W.gl_iso(y);
      const bool odd = ((par(rr) ^ par(ss)) & (par(tt) ^ par(uu))) != 0;
      std::vector<Elem> expect(W.rank() * W.rank(), 0);
      if (ss == tt) expect[rr * W.rank() + uu] = F.add(expect[rr * W.rank() + uu], 1);
      if (uu == rr) expect[tt * W.rank() + ss] = F.add(expect[tt * W.rank() + ss], odd ? 1 : F.neg(1));
      std::vector<Elem> got(W.rank() * W.rank(), 0);
      bool inside = true;
      for (auto [k, c] : W.bracket_basis(x, y).entries) {
        if (slot[k] < 0) inside = false;
        else got[static_cast<std::size_t>(slot[k])] = c;
      }
      record(r, inside && got == expect, tuple_label(W, {x, y}));
    }
  return r;
}

std::vector<SuiteResult> run_axiom_suites(const WittAlgebra& W, const AxiomOptions& opt) {
  return {check_skew(W),      check_jacobi(W, opt),         check_derivation_law(W), check_operator_bracket(W),
          check_grading(W),   check_restricted(W, opt.seed), check_gl_table(W)};
}

}  // namespace witt
