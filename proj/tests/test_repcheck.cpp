#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "witt/kac.hpp"

using namespace witt;

namespace {

std::shared_ptr<const WittAlgebra> algebra(std::uint32_t p, std::uint32_t m, std::uint32_t n) {
  return std::make_shared<const WittAlgebra>(p, m, n);
}

Character chi_of(const WittAlgebra& W, std::vector<std::pair<std::string, long>> vals) {
  auto c = zero_character(W);
  for (auto& [l, v] : vals) c.values[W.parse(l)] = W.field().from_int(v);
  return c;
}

// All of F_p^rank in increasing lexicographic order.
std::vector<Weight> all_weights(const WittAlgebra& W) {
  std::vector<Weight> out{Weight{}};
  for (std::size_t k = 0; k < W.rank(); ++k) {
    std::vector<Weight> next;
    for (const auto& w : out)
      for (Elem a = 0; a < W.p(); ++a) {
        auto v = w;
        v.push_back(a);
        next.push_back(v);
      }
    out = std::move(next);
  }
  return out;
}

bool has_weight(const std::vector<WeightSpace>& ws, const Weight& w) {
  for (const auto& s : ws)
    if (s.weight == w) return true;
  return false;
}

}  // namespace

TEST_CASE("maximal vectors of K(lambda) and L(lambda) over B_max") {
  auto W = algebra(3, 1, 1);
  const auto bmax = W->borel_chain().max();
  for (const auto& lam : all_weights(*W)) {
    auto kac = kac_restricted(W, lam);
    auto mk = maximal_vectors(kac.K, bmax);
    bool found = false;
    for (const auto& s : mk)
      if (s.weight == lam && s.space.contains(kac.top)) found = true;
    CHECK(found);

    auto L = simple_head(kac).module;
    auto ml = maximal_vectors(L, bmax);
    std::size_t total = 0;
    for (const auto& s : ml) total += s.space.dim();
    CHECK(total == 1);
    CHECK(has_weight(ml, lam));
  }
  auto K0 = kac_restricted(W, {0, 0}).K;
  CHECK(maximal_vectors(K0, bmax).size() > 1);
}

TEST_CASE("simplicity at (3,1,0)") {
  auto W = algebra(3, 1, 0);
  auto k1 = kac_restricted(W, {1});
  auto v1 = is_simple(k1.K);
  CHECK(v1.simple);
  CHECK(v1.method == "maximal-vector");
  CHECK(revalidate(k1.K, v1));

  auto k0 = kac_restricted(W, {0});
  auto v0 = is_simple(k0.K);
  CHECK_FALSE(v0.simple);
  CHECK(v0.submodule_dim > 0);
  CHECK(v0.submodule_dim < k0.K.dim());
  CHECK(verdict_consistent(v0, k0.K.dim()));
  CHECK(revalidate(k0.K, v0));
  auto sub = spin_in(k0.K, {v0.seed});
  CHECK(sub.dim() == v0.submodule_dim);

  // one-dimensional modules
  auto L0 = simple_head(k0).module;
  REQUIRE(L0.dim() == 1);
  auto vt = is_simple(L0);
  CHECK(vt.simple);
  CHECK(vt.method == "trivial");
}

TEST_CASE("restricted sweep: simplicity matches typicality and the exhaustive oracle") {
  for (auto [m, n] : {std::pair{1u, 0u}, {1u, 1u}, {0u, 2u}}) {
    auto W = algebra(3, m, n);
    for (const auto& lam : all_weights(*W)) {
      CAPTURE(weight_string(W->field(), lam));
      auto kac = kac_restricted(W, lam);
      auto v = is_simple(kac.K);
      CHECK(v.simple == W->is_typical(lam));
      auto ex = exhaustive_simple(kac.K);
      REQUIRE(ex.has_value());
      CHECK(*ex == v.simple);
      CHECK(norton_test(kac.K, 11).simple == v.simple);
      CHECK(revalidate(kac.K, v));
    }
  }
}

TEST_CASE("simple heads at (3,1,0)") {
  auto W = algebra(3, 1, 0);
  const std::vector<std::size_t> dims{1, 3, 2};
  for (Elem a = 0; a < 3; ++a) {
    auto L = simple_head(kac_restricted(W, {a})).module;
    CHECK(L.dim() == dims[a]);
    auto ex = exhaustive_simple(L);
    REQUIRE(ex.has_value());
    CHECK(*ex);
  }
}

TEST_CASE("simple_quotient") {
  auto W = algebra(3, 1, 0);
  const Field F(3);
  auto Z = verma(W, F, {0}, W->borel_chain().max(), zero_character(*W));
  auto q = simple_quotient(Z, SparseVector::unit(0));
  CHECK(q.module.dim() == 1);
  CHECK(q.steps > 0);

  auto W11 = algebra(3, 1, 1);
  auto typ = kac_restricted(W11, {1, 1});
  REQUIRE(W11->is_typical({1, 1}));
  auto same = simple_quotient(typ.K, typ.top);
  CHECK(same.module.dim() == typ.K.dim());
  CHECK(same.steps == 0);

  SUBCASE("order independence") {
    auto kac = kac_restricted(W11, {0, 0});
    auto ref = simple_quotient(kac.K, kac.top);
    for (std::uint64_t s = 1; s <= 6; ++s) {
      auto alt = simple_quotient(kac.K, kac.top, {}, s);
      REQUIRE(alt.module.dim() == ref.module.dim());
      CHECK(alt.top == ref.top);
      for (auto z : W11->graded_I(-1)) CHECK(action_hash(alt.module.action[z]) == action_hash(ref.module.action[z]));
    }
  }
}

TEST_CASE("find_simple_submodule returns a simple proper piece") {
  auto W = algebra(3, 1, 1);
  auto K = kac_restricted(W, {0, 0}).K;
  auto S = find_simple_submodule(K);
  CHECK(S.dim() < K.dim());
  CHECK(is_simple(S).simple);
  CHECK(check_invariants(S).ok());
}

TEST_CASE("minimal weights and typicality") {
  auto W = algebra(3, 1, 1);
  const Field& F = W->field();
  // toral order: eta_1, eps_1
  const Weight drop{1, 2};
  std::size_t typical = 0;
  for (const auto& lam : all_weights(*W)) {
    auto L = simple_head(kac_restricted(W, lam)).module;
    Weight expect(2);
    for (std::size_t k = 0; k < 2; ++k) expect[k] = F.sub(lam[k], drop[k]);
    const bool hit = minimal_weight(L) == expect;
    CHECK(hit == W->is_typical(lam));
    typical += W->is_typical(lam);
  }
  CHECK(typical == 5);

  auto W10 = algebra(3, 1, 0);
  CHECK(W10->is_typical({1}));
  CHECK(minimal_weight(simple_head(kac_restricted(W10, {1})).module) == Weight{2});
  CHECK(minimal_weight(simple_head(kac_restricted(W10, {0})).module) == Weight{0});
}

TEST_CASE("reflection walk") {
  auto W = algebra(3, 1, 1);
  const auto chain = W->borel_chain();
  const Field& F = W->field();
  for (const auto& lam : all_weights(*W)) {
    if (!W->is_typical(lam)) continue;
    auto L = simple_head(kac_restricted(W, lam)).module;
    auto walk = reflection_walk(L, chain);
    REQUIRE(walk.size() == 3);
    CHECK(walk[0].kind == "start");
    CHECK(walk[0].weight == lam);
    CHECK(walk[1].kind == "eps");
    CHECK(walk[1].r == 2);
    CHECK(walk[2].kind == "eta");
    CHECK(walk[2].delta == 1);
    CHECK_FALSE(walk[2].D_kills);
    CHECK(walk.back().weight == minimal_weight(L));
    CHECK(walk[1].weight == Weight{lam[0], F.sub(lam[1], 2)});
  }

  auto W10 = algebra(3, 1, 0);
  auto walk = reflection_walk(simple_head(kac_restricted(W10, {2})).module, W10->borel_chain());
  REQUIRE(walk.size() == 2);
  CHECK(walk[1].r > 0);
  CHECK(walk[1].r < 2);

  auto trivial = reflection_walk(simple_head(kac_restricted(W, {0, 0})).module, chain);
  for (const auto& s : trivial) CHECK(s.weight == Weight{0, 0});
}

TEST_CASE("heights") {
  auto W = algebra(3, 1, 1);
  auto zero = zero_character(*W);
  CHECK(height(*W, zero, Gradation::I).height == -1);
  CHECK(height(*W, zero, Gradation::II).height == -1);
  CHECK(height(*W, chi_of(*W, {{"x[2].d{1}", 1}}), Gradation::I).height == 2);

  std::mt19937_64 rng(5);
  for (auto [m, n] : {std::pair{1u, 1u}, {1u, 2u}, {2u, 1u}, {0u, 3u}}) {
    auto A = algebra(3, m, n);
    const int s = int(m) * 2 + int(n) - 1;
    for (int t = 0; t < 40; ++t) {
      auto chi = zero_character(*A);
      for (auto z : A->even_basis())
        if (rng() % 4 == 0) chi.values[z] = rng() % 3;
      const int h1 = height(*A, chi, Gradation::I).height;
      const int h2 = height(*A, chi, Gradation::II).height;
      CHECK(h1 >= -1);
      CHECK(h1 <= s + 1);
      if (!chi.is_zero()) CHECK(h2 % 2 != 0);
    }
  }
}

TEST_CASE("type-I nonsingularity") {
  auto W = algebra(3, 1, 1);
  const Field& F = W->field();
  auto chi = chi_of(*W, {{"x[2].d{1}", 1}, {"x[1].xi[1].D{1}", 1}});
  REQUIRE(height(*W, chi, Gradation::I).height == 2);
  auto w = nonsingular_type1(*W, F, chi);
  CHECK(w.nonsingular);
  CHECK(w.rank == 2);
  CHECK(w.determinant != 0);

  // pairing matrix has a zero row
  auto flat = chi_of(*W, {{"x[2].d{1}", 1}});
  const int ht = height(*W, flat, Gradation::I).height;
  REQUIRE(ht == 2);
  CHECK_FALSE(nonsingular_type1(*W, F, flat).nonsingular);

  CHECK_THROWS_AS(nonsingular_type1(*W, F, zero_character(*W)), Error);

  // W(1,1) = sl_2 at p = 3: W_[2] = 0, so no height-2 character is
  // nonsingular, and K (dim 9 > p) cannot be simple either
  auto W10 = algebra(3, 1, 0);
  auto c10 = chi_of(*W10, {{"x[2].d{1}", 1}});
  REQUIRE(height(*W10, c10, Gradation::I).height == 2);
  CHECK_FALSE(nonsingular_type1(*W10, W10->field(), c10).nonsingular);
  const Field F10 = field_for(*W10, c10);
  auto base = simple_base(W10, F10, c10, Gradation::I, toral_weight(*W10, F10, c10, {}));
  auto K = kac_type1(base.module);
  auto ex = exhaustive_simple(K);
  REQUIRE(ex.has_value());
  CHECK(K.dim() == 9);
  CHECK_FALSE(*ex);
}

TEST_CASE("type-II nonsingularity at (3,0,4)") {
  auto W = algebra(3, 0, 4);
  const Field& F = W->field();
  auto chi = zero_character(*W);
  for (int i = 1; i <= 4; ++i) {
    std::string xi = "xi[";
    bool first = true;
    for (int j = 1; j <= 4; ++j)
      if (j != i) {
        xi += (first ? "" : ",") + std::to_string(j);
        first = false;
      }
    chi.values[W->parse(xi + "].D{" + std::to_string(i) + "}")] = 1;
  }
  REQUIRE(height(*W, chi, Gradation::II).height == 3);
  auto w = nonsingular_type2(*W, F, chi);
  CHECK(w.nonsingular);
  CHECK(w.rank == 4);

  auto single = zero_character(*W);
  single.values[W->parse("xi[1,2,3].D{4}")] = 1;
  CHECK_FALSE(nonsingular_type2(*W, F, single).nonsingular);
}

TEST_CASE("inducible characters") {
  auto W = algebra(3, 1, 1);
  auto chi = chi_of(*W, {{"x[2].d{1}", 1}});
  REQUIRE(height(*W, chi, Gradation::II).height == 1);
  const Field F = field_for(*W, chi);
  auto base = simple_base(W, F, chi, Gradation::II, toral_weight(*W, F, chi, {}));
  auto K = kac_type2(base.module);
  const auto ord = type2_ordering(*W);
  CHECK_FALSE(inducible(K, base.module.dim(), ord).inducible);

  std::vector<WittElement> cand;
  for (auto f : ord) {
    const auto a = W->lambda().monomial(W->element(f).mono).a.a[0];
    cand.push_back(SparseVector::unit(W->parse("x[" + std::to_string(2 - a) + "].xi[1].d{1}")));
  }
  auto iw = inducible(K, base.module.dim(), ord, &cand, true);
  CHECK(iw.inducible);
  CHECK(is_simple(K).simple);

  auto Z = kac_type2(simple_base(W, Field(3), zero_character(*W), Gradation::II, {0, 0}).module);
  CHECK_FALSE(inducible(Z, Z.dim() / 8, ord).inducible);
}
