#include "witt/kac.hpp"

#include <algorithm>

namespace witt {

namespace {

std::vector<std::uint32_t> nonnegative(const WittAlgebra& W, Gradation g) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < W.dim(); ++i)
    if ((g == Gradation::I ? W.degree_I(i) : W.degree_II(i)) >= 0) out.push_back(i);
  return out;
}

std::size_t pbw_count(const WittAlgebra& W, const std::vector<std::uint32_t>& gens) {
  std::size_t c = 1;
  for (auto z : gens) c *= W.parity(z) ? 2 : W.p();
  return c;
}

void check_size(std::size_t dim, std::size_t cap, const std::string& what) {
  if (cap && dim > cap)
    fail(ErrorCode::Sizing, what + " would have dimension " + std::to_string(dim) + " > cap " + std::to_string(cap));
}

ModuleRealization induce_checked(const ModuleRealization& M, Gradation g, const std::string& provenance,
                                 std::size_t max_dim) {
  const WittAlgebra& W = *M.W;
  for (std::uint32_t i = 0; i < W.dim(); ++i) {
    const int d = g == Gradation::I ? W.degree_I(i) : W.degree_II(i);
    require((d >= 0) == (M.acts[i] != 0), "base module must be a module of the nonnegative part");
  }
  const auto gens = g == Gradation::I ? W.graded_I(-1) : W.graded_II(-1);
  check_size(pbw_count(W, gens) * M.dim(), max_dim, "induced module");
  auto K = induce(M, gens);
  K.provenance = provenance;
  return K;
}

}  // namespace

Field field_for(const WittAlgebra& W, const Character& chi, std::uint32_t cap) {
  std::vector<Elem> vals;
  for (auto h : W.toral()) {
    require(chi(h) < W.p(), "character values must lie in the prime field");
    vals.push_back(chi(h));
  }
  const auto k = splitting_degree(W.p(), vals, cap);
  if (k == 0) fail(ErrorCode::ExtendField, "toral eigenvalues need a field extension beyond k = " + std::to_string(cap));
  return Field(W.p(), k);
}

Weight toral_weight(const WittAlgebra& W, const Field& F, const Character& chi, const std::vector<long>& offsets) {
  require(offsets.empty() || offsets.size() == W.rank(), "weight offsets have wrong length");
  Weight w;
  for (std::size_t k = 0; k < W.rank(); ++k) {
    // chi(h) is in F_p, so chi(h)^p = chi(h).
    auto roots = F.artin_schreier_roots(chi(W.toral()[k]));
    if (roots.empty()) fail(ErrorCode::ExtendField, "t^p - t = chi(h)^p has no root in F_" + std::to_string(F.size()));
    Elem r = *std::min_element(roots.begin(), roots.end());
    if (!offsets.empty()) r = F.add(r, F.from_int(offsets[k]));
    w.push_back(r);
  }
  return w;
}

BaseModule simple_base(std::shared_ptr<const WittAlgebra> W, const Field& F, const Character& chi, Gradation g,
                       const Weight& lambda, std::size_t max_dim) {
  const auto G0 = nonnegative(*W, g);
  std::vector<std::uint8_t> inG0(W->dim(), 0);
  for (auto z : G0) inG0[z] = 1;
  auto fits = [&](const Borel& B) {
    for (auto z : B.positive)
      if (inG0[z] && chi(z) != 0) return false;
    return true;
  };
  std::optional<Borel> chosen;
  for (const auto& B : W->borel_chain().borels)
    if (!chosen && fits(B)) chosen = B;
  for (std::uint32_t mask = 1; !chosen && mask < (1u << W->rank()); ++mask) {
    std::vector<int> s(W->rank());
    std::string label = "S[";
    for (std::uint32_t k = 0; k < W->rank(); ++k) {
      s[k] = (mask >> k) & 1u ? -1 : 1;
      label += s[k] > 0 ? '+' : '-';
    }
    auto B = W->borel(label + "]", s);
    if (fits(B)) chosen = B;
  }
  if (!chosen) fail(ErrorCode::Domain, "no Borel of the nonnegative part has chi(N+) = 0");

  std::vector<Elem> scalar(W->dim(), 0);
  for (std::size_t k = 0; k < W->rank(); ++k) scalar[W->toral()[k]] = lambda[k];
  std::vector<std::uint32_t> support = chosen->cartan, neg;
  for (auto z : chosen->positive)
    if (inG0[z]) support.push_back(z);
  for (auto z : chosen->negative)
    if (inG0[z]) neg.push_back(z);
  for (std::size_t k = 0; k < W->rank(); ++k) {
    const Elem l = lambda[k];
    if (F.sub(F.pow(l, W->p()), l) != F.pow(chi(W->toral()[k]), W->p()))
      fail(ErrorCode::Domain, "weight is inconsistent with chi on the torus");
  }
  check_size(pbw_count(*W, neg), max_dim, "baby Verma module");
  auto top = one_dim(W, F, support, scalar, chi, lambda);
  auto Z = induce(top, neg);
  Z.provenance = "verma";
  SimplicityOptions opt;
  opt.borel = *chosen;
  auto q = simple_quotient(Z, SparseVector::unit(0), opt);
  BaseModule out{std::move(q.module), std::move(q.top), *chosen, Z.dim()};
  out.module.provenance = "base";
  return out;
}

ModuleRealization kac_type1(const ModuleRealization& M, std::size_t max_dim) {
  return induce_checked(M, Gradation::I, M.chi.is_zero() ? "kac" : "kac1", max_dim);
}

ModuleRealization kac_type2(const ModuleRealization& M, std::size_t max_dim) {
  return induce_checked(M, Gradation::II, "kac2", max_dim);
}

KacModule kac_restricted(std::shared_ptr<const WittAlgebra> W, const Weight& lambda, std::size_t max_dim) {
  const Field F(W->p());
  for (auto c : lambda) require(c < W->p(), "restricted weights lie in F_p");
  auto base = simple_base(W, F, zero_character(*W), Gradation::I, lambda, max_dim);
  KacModule out;
  out.V = std::move(base.module);
  out.top = std::move(base.top);
  out.K = kac_type1(out.V, max_dim);
  return out;
}

QuotientResult simple_head(const KacModule& kac) {
  SimplicityOptions opt;
  opt.borel = kac.K.W->borel_chain().max();
  return simple_quotient(kac.K, kac.top, opt);
}

}  // namespace witt
