#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "witt/module.hpp"

using namespace witt;

namespace {

std::shared_ptr<const WittAlgebra> algebra(std::uint32_t p, std::uint32_t m, std::uint32_t n) {
  return std::make_shared<const WittAlgebra>(p, m, n);
}

std::uint32_t find_label(const ModuleRealization& M, const std::string& s) {
  for (std::uint32_t i = 0; i < M.dim(); ++i)
    if (M.labels[i] == s) return i;
  FAIL("label not found: " << s);
  return 0;
}

}  // namespace

TEST_CASE("baby Verma over B_max at (3,1,1)") {
  auto W = algebra(3, 1, 1);
  const Field F(3);
  const auto chain = W->borel_chain();
  for (Elem a = 0; a < 3; ++a)
    for (Elem b = 0; b < 3; ++b) {
      auto Z = verma(W, F, {a, b}, chain.max(), zero_character(*W));
      CHECK(Z.dim() == 12);
      CHECK(weights_consistent(Z));
      const auto inv = check_invariants(Z);
      CHECK_MESSAGE(inv.ok(), inv.counterexample);
      // h . (1 (x) v) = lambda(h) (1 (x) v)
      for (std::size_t k = 0; k < 2; ++k)
        CHECK(Z.action[W->toral()[k]].column(0) == scale(F, Weight{a, b}[k], SparseVector::unit(0)));
    }
}

TEST_CASE("baby Verma of W(1,1) at lambda = 0 has dimension p") {
  auto W = algebra(3, 1, 0);
  auto Z = verma(W, Field(3), {0}, W->borel_chain().max(), zero_character(*W));
  CHECK(Z.dim() == 3);
  CHECK(check_invariants(Z).ok());
}

TEST_CASE("straightening with a nonzero character on d_1") {
  auto W = algebra(3, 1, 0);
  const Field F(3);
  const auto d1 = W->parse("x[0].d{1}");
  const auto bmax = W->borel_chain().max();
  for (Elem c = 1; c < 3; ++c) {
    auto chi = zero_character(*W);
    chi.values[d1] = c;
    auto Z = verma(W, F, {0}, bmax, chi);
    REQUIRE(Z.dim() == 3);
    const auto top = find_label(Z, "x[0].d{1}^2 (x) v");
    // d_1 . (d_1^{p-1} (x) v) = chi(d_1)^p (1 (x) v)
    CHECK(Z.action[d1].column(top) == scale(F, F.pow(c, 3), SparseVector::unit(0)));
    // direct p-fold application
    CHECK(Z.action[d1].power(F, 3) == LinearMap::scalar(3, F.pow(c, 3)));
    CHECK(check_invariants(Z).ok());
  }
}

TEST_CASE("odd squares reduce through half the self-bracket") {
  auto W = algebra(3, 1, 1);
  const Field F(3);
  // Type-II style induction from the 1-dim module of W^0 (chi = 0).
  std::vector<std::uint32_t> supp, comp;
  for (std::uint32_t z = 0; z < W->dim(); ++z) (W->degree_II(z) >= 0 ? supp : comp).push_back(z);
  CHECK(comp.size() == 3);
  auto base = one_dim(W, F, supp, std::vector<Elem>(W->dim(), 0), zero_character(*W), {0, 0});
  auto K = induce(base, comp);
  CHECK(K.dim() == 8);
  for (auto y : comp) {
    const auto half = scale(F, F.inv(2), W->bracket_basis(y, y));
    CHECK(K.action[y].compose(F, K.action[y]) == K.action_of(half));
  }
  CHECK(check_invariants(K).ok());
  // the product of all W_{-1} generators on the top vector is nonzero
  SparseVector v = SparseVector::unit(0);
  for (auto y : comp) v = K.action[y].apply(F, v);
  CHECK(!v.empty());
}

TEST_CASE("sub and quotient realizations") {
  auto W = algebra(3, 1, 0);
  const Field F(3);
  auto Z = verma(W, F, {0}, W->borel_chain().max(), zero_character(*W));
  // d_1 . (1 (x) v) spans a proper submodule of Z(0)
  std::vector<const LinearMap*> gens;
  for (auto z : Z.acting()) gens.push_back(&Z.action[z]);
  std::vector<SparseVector> seed{Z.action[W->parse("x[0].d{1}")].column(0)};
  auto U = spin(F, Z.dim(), seed, gens);
  CHECK(U.dim() == 2);
  auto S = restrict_to(Z, U);
  auto Q = quotient_by(Z, U);
  CHECK(S.dim() == 2);
  CHECK(Q.dim() == 1);
  CHECK(check_invariants(S).ok());
  CHECK(check_invariants(Q).ok());
  CHECK(weights_consistent(S));
  CHECK(weights_consistent(Q));
}
