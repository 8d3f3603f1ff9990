#include "witt/module.hpp"

#include <algorithm>
#include <sstream>

namespace witt {

bool ModuleRealization::is_full() const {
  return std::all_of(acts.begin(), acts.end(), [](std::uint8_t a) { return a != 0; });
}

std::vector<std::uint32_t> ModuleRealization::acting() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < acts.size(); ++i)
    if (acts[i]) out.push_back(i);
  return out;
}

SparseVector ModuleRealization::apply(const WittElement& x, const SparseVector& v) const {
  Accumulator acc(dim());
  for (auto [i, c] : x.entries) {
    require(acts[i], "element " + W->label(i) + " does not act on this module");
    acc.add_scaled(F, action[i].apply(F, v), c);
  }
  return acc.take();
}

LinearMap ModuleRealization::action_of(const WittElement& x) const {
  LinearMap out = LinearMap::zero(dim());
  for (auto [i, c] : x.entries) {
    require(acts[i], "element " + W->label(i) + " does not act on this module");
    out = out.add(F, action[i], c);
  }
  return out;
}

LinearMap ModuleRealization::parity_operator() const {
  std::vector<SparseVector> cols(dim());
  for (std::uint32_t j = 0; j < dim(); ++j) cols[j].entries.emplace_back(j, parity[j] ? F.neg(1) : 1);
  return LinearMap::from_columns(dim(), std::move(cols));
}

Character zero_character(const WittAlgebra& W) { return Character{std::vector<Elem>(W.dim(), 0)}; }

ModuleRealization one_dim(std::shared_ptr<const WittAlgebra> W, const Field& F,
                          const std::vector<std::uint32_t>& support, const std::vector<Elem>& scalar,
                          const Character& chi, const Weight& weight, std::uint32_t parity,
                          const std::string& label) {
  ModuleRealization M;
  M.F = F;
  M.acts.assign(W->dim(), 0);
  M.action.resize(W->dim());
  for (auto z : support) {
    M.acts[z] = 1;
    M.action[z] = LinearMap::scalar(1, scalar[z]);
  }
  M.labels = {label};
  M.parity = {parity};
  if (!weight.empty()) M.weights = {weight};
  M.chi = chi;
  M.provenance = "base";
  M.W = std::move(W);
  return M;
}

std::vector<std::uint32_t> pbw_order(const WittAlgebra& W, std::vector<std::uint32_t> complement) {
  std::sort(complement.begin(), complement.end(), [&](std::uint32_t a, std::uint32_t b) {
    const auto ka = std::make_tuple(1 - static_cast<int>(W.parity(a)), W.degree_I(a), a);
    const auto kb = std::make_tuple(1 - static_cast<int>(W.parity(b)), W.degree_I(b), b);
    return ka < kb;
  });
  return complement;
}

namespace {

// Realizes u(G) (x)_{u(G0)} base by straightening PBW words in the
// complement C. Column (pbw, b) holds z . (c_1^{e_1} ... c_k^{e_k} (x) v_b).
class Straightener {
 public:
  Straightener(const ModuleRealization& base, std::vector<std::uint32_t> C)
      : base_(base), W_(*base.W), F_(base.F), C_(std::move(C)) {
    pos_.assign(W_.dim(), -1);
    for (std::size_t k = 0; k < C_.size(); ++k) {
      require(!base_.acts[C_[k]], "complement meets the base subalgebra");
      pos_[C_[k]] = static_cast<int>(k);
      limit_.push_back(W_.parity(C_[k]) ? 2 : W_.p());
    }
    radix_.resize(C_.size());
    std::uint64_t r = 1;
    for (std::size_t k = C_.size(); k-- > 0;) {
      radix_[k] = r;
      r *= limit_[k];
      if (r * base_.dim() > (1ull << 26)) fail(ErrorCode::Sizing, "induced module too large");
    }
    npbw_ = r;
    dimB_ = base_.dim();
    dim_ = npbw_ * dimB_;
    memo_.resize(W_.dim());
    state_.resize(W_.dim());
    inv2_ = F_.inv(2);
  }

  std::size_t dim() const { return dim_; }
  std::uint64_t npbw() const { return npbw_; }
  const std::vector<std::uint32_t>& order() const { return C_; }
  std::uint32_t digit(std::uint64_t u, std::size_t k) const {
    return static_cast<std::uint32_t>((u / radix_[k]) % limit_[k]);
  }

  bool in_G(std::uint32_t z) const { return base_.acts[z] || pos_[z] >= 0; }

  const SparseVector& act(std::uint32_t z, std::uint64_t col) {
    auto& st = state_[z];
    if (st.empty()) {
      st.assign(dim_, 0);
      memo_[z].resize(dim_);
    }
    if (st[col] == 2) return memo_[z][col];
    if (st[col] == 1) fail(ErrorCode::Internal, "straightening did not terminate");
    st[col] = 1;
    SparseVector r = compute(z, col);
    memo_[z][col] = std::move(r);
    st[col] = 2;
    return memo_[z][col];
  }

 private:
  SparseVector act_elem(const WittElement& x, std::uint64_t col) {
    Accumulator acc(dim_);
    for (auto [i, c] : x.entries) {
      if (!in_G(i)) fail(ErrorCode::Usage, "acting set is not closed: " + W_.label(i) + " needed");
      acc.add_scaled(F_, act(i, col), c);
    }
    return acc.take();
  }

  SparseVector act_vec(std::uint32_t z, const SparseVector& v) {
    Accumulator acc(dim_);
    for (auto [j, c] : v.entries) acc.add_scaled(F_, act(z, j), c);
    return acc.take();
  }

  SparseVector compute(std::uint32_t z, std::uint64_t col) {
    const std::uint64_t u = col / dimB_, b = col % dimB_;
    if (u == 0) {
      if (base_.acts[z]) return base_.action[z].column(b);  // pbw index 0 keeps base indices
      return SparseVector::unit(static_cast<std::uint32_t>(radix_[pos_[z]] * dimB_ + b));
    }
    std::size_t c0 = 0;
    while (digit(u, c0) == 0) ++c0;
    const int pz = pos_[z];
    if (pz >= 0 && static_cast<std::size_t>(pz) < c0)
      return SparseVector::unit(static_cast<std::uint32_t>((u + radix_[pz]) * dimB_ + b));
    const std::uint32_t c = C_[c0];
    if (pz >= 0 && static_cast<std::size_t>(pz) == c0) {
      const std::uint32_t e = digit(u, c0);
      if (e + 1 < limit_[c0]) return SparseVector::unit(static_cast<std::uint32_t>((u + radix_[c0]) * dimB_ + b));
      const std::uint64_t rest = (u - e * radix_[c0]) * dimB_ + b;
      if (W_.parity(c)) {
        // c^2 = [c,c]/2
        return scale(F_, inv2_, act_elem(W_.bracket_basis(c, c), rest));
      }
      // c^p = c^[p] + chi(c)^p
      SparseVector out = act_elem(W_.p_power(c), rest);
      return axpy(F_, out, F_.pow(base_.chi(c), W_.p()),
                  SparseVector::unit(static_cast<std::uint32_t>(rest)));
    }
    // z c R = [z,c] R + (-1)^{|z||c|} c (z R)
    const std::uint64_t R = (u - radix_[c0]) * dimB_ + b;
    SparseVector t1 = act_elem(W_.bracket_basis(z, c), R);
    SparseVector zR = act(z, R);
    SparseVector t2 = act_vec(c, zR);
    const Elem sgn = (W_.parity(z) & W_.parity(c)) ? F_.neg(1) : 1;
    return axpy(F_, t1, sgn, t2);
  }

  const ModuleRealization& base_;
  const WittAlgebra& W_;
  Field F_;
  std::vector<std::uint32_t> C_;
  std::vector<int> pos_;
  std::vector<std::uint32_t> limit_;
  std::vector<std::uint64_t> radix_;
  std::uint64_t npbw_ = 1;
  std::size_t dimB_ = 0, dim_ = 0;
  std::vector<std::vector<SparseVector>> memo_;
  std::vector<std::vector<std::uint8_t>> state_;
  Elem inv2_ = 0;
};

}  // namespace

ModuleRealization induce(const ModuleRealization& base, std::vector<std::uint32_t> complement) {
  const WittAlgebra& W = *base.W;
  Straightener S(base, pbw_order(W, std::move(complement)));
  const auto& C = S.order();

  ModuleRealization M;
  M.W = base.W;
  M.F = base.F;
  M.chi = base.chi;
  M.provenance = "induced";
  M.acts = base.acts;
  for (auto c : C) M.acts[c] = 1;
  const std::size_t D = S.dim();

  bool cartan_free = true;
  for (auto c : C) cartan_free = cartan_free && !W.is_cartan(c);
  const bool weighted = base.has_weights() && cartan_free;
  std::vector<Weight> croot;
  for (auto c : C) croot.push_back(W.root_of(M.F, c));

  M.labels.reserve(D);
  M.parity.reserve(D);
  for (std::uint64_t u = 0; u < S.npbw(); ++u) {
    std::ostringstream os;
    std::uint32_t par = 0;
    Weight shift(W.rank(), 0);
    bool any = false;
    for (std::size_t k = 0; k < C.size(); ++k) {
      const auto e = S.digit(u, k);
      if (!e) continue;
      os << (any ? " " : "") << W.label(C[k]);
      if (e > 1) os << "^" << e;
      any = true;
      if (W.parity(C[k])) par ^= e & 1u;
      for (std::uint32_t t = 0; t < e; ++t) shift = weight_add(M.F, shift, croot[k]);
    }
    const std::string word = any ? os.str() : "1";
    for (std::size_t b = 0; b < base.dim(); ++b) {
      M.labels.push_back(word + " (x) " + base.labels[b]);
      M.parity.push_back(par ^ base.parity[b]);
      if (weighted) M.weights.push_back(weight_add(M.F, shift, base.weights[b]));
    }
  }

  M.action.resize(W.dim());
  for (std::uint32_t z = 0; z < W.dim(); ++z) {
    if (!M.acts[z]) continue;
    std::vector<SparseVector> cols(D);
    for (std::uint64_t j = 0; j < D; ++j) cols[j] = S.act(z, j);
    M.action[z] = LinearMap::from_columns(D, std::move(cols));
  }
  return M;
}

ModuleRealization inflate(const ModuleRealization& base, const std::vector<std::uint32_t>& extra) {
  ModuleRealization M = base;
  for (auto z : extra) {
    require(!M.acts[z], "inflate: element already acts");
    M.acts[z] = 1;
    M.action[z] = LinearMap::zero(M.dim());
  }
  return M;
}

namespace {

void check_toral_weight(const WittAlgebra& W, const Field& F, const Weight& lambda, const Character& chi) {
  require(lambda.size() == W.rank(), "weight has wrong length");
  for (std::size_t k = 0; k < W.rank(); ++k) {
    const Elem l = lambda[k];
    const Elem lhs = F.sub(F.pow(l, W.p()), l);
    if (lhs != F.pow(chi(W.toral()[k]), W.p()))
      fail(ErrorCode::Domain, "weight is inconsistent with chi on the torus (lambda^p - lambda != chi(h)^p)");
  }
}

ModuleRealization borel_induced(std::shared_ptr<const WittAlgebra> W, const Field& F, const Weight& lambda,
                                const std::vector<std::uint32_t>& cartan, const std::vector<std::uint32_t>& positive,
                                const std::vector<std::uint32_t>& negative, const Character& chi) {
  check_toral_weight(*W, F, lambda, chi);
  for (auto z : positive)
    if (chi(z) != 0) fail(ErrorCode::Usage, "chi must vanish on the positive part (" + W->label(z) + ")");
  std::vector<Elem> scalar(W->dim(), 0);
  for (std::size_t k = 0; k < W->rank(); ++k) scalar[W->toral()[k]] = lambda[k];
  std::vector<std::uint32_t> support = cartan;
  support.insert(support.end(), positive.begin(), positive.end());
  auto top = one_dim(W, F, support, scalar, chi, lambda, 0, "v");
  return induce(top, negative);
}

}  // namespace

ModuleRealization verma(std::shared_ptr<const WittAlgebra> W, const Field& F, const Weight& lambda,
                        const Borel& B, const Character& chi) {
  auto M = borel_induced(W, F, lambda, B.cartan, B.positive, B.negative, chi);
  M.provenance = "verma";
  return M;
}

ModuleRealization levi_verma(std::shared_ptr<const WittAlgebra> W, const Field& F, const Weight& lambda,
                             const Character& chi) {
  const auto bmax = W->borel_chain().max();
  std::vector<std::uint32_t> pos, neg;
  for (auto z : bmax.positive)
    if (W->degree_I(z) == 0) pos.push_back(z);
  for (auto z : bmax.negative)
    if (W->degree_I(z) == 0) neg.push_back(z);
  auto M = borel_induced(W, F, lambda, bmax.cartan, pos, neg, chi);
  M.provenance = "verma";
  return M;
}

ModuleRealization restrict_to(const ModuleRealization& M, const Subspace& U, const std::string& provenance) {
  require(U.ambient() == M.dim(), "subspace does not live in this module");
  const auto& rows = U.basis();
  const auto piv = U.pivots();
  std::vector<int> row_of(M.dim(), -1);
  for (std::size_t i = 0; i < piv.size(); ++i) row_of[piv[i]] = static_cast<int>(i);

  ModuleRealization S;
  S.W = M.W;
  S.F = M.F;
  S.acts = M.acts;
  S.chi = M.chi;
  S.provenance = provenance;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    S.labels.push_back(M.labels[piv[i]]);
    std::uint32_t par = M.parity[piv[i]];
    for (auto [k, c] : rows[i].entries) {
      (void)c;
      if (M.parity[k] != par) fail(ErrorCode::Internal, "submodule basis is not parity-homogeneous");
    }
    S.parity.push_back(par);
  }
  bool weighted = M.has_weights();
  for (std::size_t i = 0; weighted && i < rows.size(); ++i)
    for (auto [k, c] : rows[i].entries) {
      (void)c;
      if (M.weights[k] != M.weights[piv[i]]) weighted = false;
    }
  if (weighted)
    for (auto pv : piv) S.weights.push_back(M.weights[pv]);

  S.action.resize(M.action.size());
  for (std::uint32_t z = 0; z < M.action.size(); ++z) {
    if (!M.acts[z]) continue;
    std::vector<SparseVector> cols(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto img = M.action[z].apply(M.F, rows[i]);
      SparseVector coef;
      for (auto [k, c] : img.entries)
        if (row_of[k] >= 0) coef.entries.emplace_back(static_cast<std::uint32_t>(row_of[k]), c);
      std::sort(coef.entries.begin(), coef.entries.end());
      cols[i] = std::move(coef);
    }
    S.action[z] = LinearMap::from_columns(rows.size(), std::move(cols));
  }
  return S;
}

ModuleRealization quotient_by(const ModuleRealization& M, const Subspace& U, const std::string& provenance) {
  require(U.ambient() == M.dim(), "subspace does not live in this module");
  std::vector<int> is_piv(M.dim(), 0);
  for (auto pv : U.pivots()) is_piv[pv] = 1;
  std::vector<std::uint32_t> keep;
  std::vector<int> slot(M.dim(), -1);
  for (std::uint32_t i = 0; i < M.dim(); ++i)
    if (!is_piv[i]) {
      slot[i] = static_cast<int>(keep.size());
      keep.push_back(i);
    }

  ModuleRealization Q;
  Q.W = M.W;
  Q.F = M.F;
  Q.acts = M.acts;
  Q.chi = M.chi;
  Q.provenance = provenance;
  for (auto k : keep) {
    Q.labels.push_back(M.labels[k]);
    Q.parity.push_back(M.parity[k]);
    if (M.has_weights()) Q.weights.push_back(M.weights[k]);
  }
  Q.action.resize(M.action.size());
  for (std::uint32_t z = 0; z < M.action.size(); ++z) {
    if (!M.acts[z]) continue;
    std::vector<SparseVector> cols(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
      const auto img = U.reduce(M.action[z].column(keep[i]));
      SparseVector v;
      for (auto [k, c] : img.entries) v.entries.emplace_back(static_cast<std::uint32_t>(slot[k]), c);
      cols[i] = std::move(v);
    }
    Q.action[z] = LinearMap::from_columns(keep.size(), std::move(cols));
  }
  return Q;
}

bool weights_consistent(const ModuleRealization& M) {
  if (!M.has_weights()) return true;
  const WittAlgebra& W = *M.W;
  for (std::size_t k = 0; k < W.rank(); ++k) {
    const auto h = W.toral()[k];
    if (!M.acts[h]) continue;
    for (std::uint32_t j = 0; j < M.dim(); ++j) {
      const auto& col = M.action[h].column(j);
      const Elem w = M.weights[j][k];
      if (w == 0 ? !col.empty() : !(col == SparseVector{{{j, w}}})) return false;
    }
  }
  return true;
}

InvariantReport check_invariants(const ModuleRealization& M) {
  InvariantReport r;
  const WittAlgebra& W = *M.W;
  const Field& F = M.F;
  const auto acting = M.acting();
  auto note = [&](bool& flag, bool ok, const std::string& what) {
    ++r.checked;
    if (!ok && flag) {
      flag = false;
      if (r.counterexample.empty()) r.counterexample = what;
    }
  };
  for (auto z : acting) {
    bool ok = true;
    for (std::uint32_t j = 0; j < M.dim() && ok; ++j)
      for (auto [i, c] : M.action[z].column(j).entries) {
        (void)c;
        if (M.parity[i] != (M.parity[j] ^ W.parity(z))) ok = false;
      }
    note(r.parity, ok, "parity at " + W.label(z));
  }
  for (auto z : acting) {
    if (W.parity(z)) continue;
    const auto zp = W.p_power(z);
    bool inside = true;
    for (auto [k, c] : zp.entries) {
      (void)c;
      inside = inside && M.acts[k];
    }
    if (!inside) {
      note(r.chi_reduction, false, "p-power of " + W.label(z) + " does not act");
      continue;
    }
    const auto lhs = M.action[z].power(F, W.p()).add(F, M.action_of(zp), F.neg(1));
    note(r.chi_reduction, lhs == LinearMap::scalar(M.dim(), F.pow(M.chi(z), W.p())),
         "chi-reduction at " + W.label(z));
  }
  for (std::size_t a = 0; a < acting.size(); ++a)
    for (std::size_t b = a; b < acting.size(); ++b) {
      const auto x = acting[a], y = acting[b];
      const auto& bxy = W.bracket_basis(x, y);
      bool inside = true;
      for (auto [k, c] : bxy.entries) {
        (void)c;
        inside = inside && M.acts[k];
      }
      if (!inside) {
        note(r.bracket, false, "bracket leaves acting set at (" + W.label(x) + ", " + W.label(y) + ")");
        continue;
      }
      const auto& A = M.action[x];
      const auto& B = M.action[y];
      const Elem sgn = (W.parity(x) & W.parity(y)) ? 1 : F.neg(1);
      const auto rhs = A.compose(F, B).add(F, B.compose(F, A), sgn);
      note(r.bracket, M.action_of(bxy) == rhs, "bracket at (" + W.label(x) + ", " + W.label(y) + ")");
    }
  return r;
}

std::uint64_t action_hash(const LinearMap& A) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(A.rows());
  mix(A.cols());
  for (std::size_t j = 0; j < A.cols(); ++j)
    for (auto [i, c] : A.column(j).entries) {
      mix(j);
      mix(i);
      mix(c);
    }
  return h;
}

}  // namespace witt
