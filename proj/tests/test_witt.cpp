#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "witt/axioms.hpp"

using namespace witt;

namespace {

WittElement e(const WittAlgebra& W, const std::string& s) { return SparseVector::unit(W.parse(s)); }

std::size_t pow_u(std::size_t b, std::size_t k) {
  std::size_t r = 1;
  while (k--) r *= b;
  return r;
}

std::map<IntRoot, std::size_t> root_multiplicities(const WittAlgebra& W) {
  std::map<IntRoot, std::size_t> out;
  for (std::uint32_t i = 0; i < W.dim(); ++i) ++out[W.integer_root(i)];
  return out;
}

}  // namespace

TEST_CASE("bracket examples") {
  WittAlgebra W(3, 1, 1);
  const Field& F = W.field();
  CHECK(W.bracket(F, e(W, "x[0].d{1}"), e(W, "x[1].d{1}")) == e(W, "x[0].d{1}"));
  CHECK(W.bracket(F, e(W, "x[0].D{1}"), e(W, "x[0].d{1}")).empty());
  CHECK(W.bracket(F, e(W, "x[1].d{1}"), e(W, "x[1].D{1}")) == e(W, "x[1].D{1}"));
  CHECK(W.bracket(F, e(W, "x[1].d{1}"), e(W, "xi[1].D{1}")).empty());
}

TEST_CASE("labels round-trip") {
  for (auto [p, m, n] : {std::tuple{3u, 1u, 1u}, std::tuple{3u, 0u, 2u}, std::tuple{5u, 1u, 0u}}) {
    WittAlgebra W(p, m, n);
    for (std::uint32_t i = 0; i < W.dim(); ++i) CHECK(W.parse(W.label(i)) == i);
  }
  WittAlgebra W(3, 0, 2);
  CHECK(W.label(W.parse("D{1}")) == "D{1}");
  CHECK(W.label(W.parse("xi[1,2].D{2}")) == "xi[1,2].D{2}");
  CHECK_THROWS_AS(W.parse("d{1}"), Error);
  CHECK_THROWS_AS(W.parse("xi[1].D{3}"), Error);
}

TEST_CASE("p-map examples") {
  WittAlgebra W(3, 1, 1);
  CHECK(W.p_power(W.parse("xi[1].D{1}")) == e(W, "xi[1].D{1}"));
  CHECK(W.p_power(W.parse("x[1].d{1}")) == e(W, "x[1].d{1}"));
  CHECK(W.p_power(W.parse("x[0].d{1}")).empty());
  CHECK_THROWS_AS(W.p_power(W.parse("x[0].D{1}")), Error);
  WittAlgebra W2(3, 1, 2);
  CHECK(W2.p_power(W2.parse("x[1].xi[1,2].d{1}")).empty());
  WittAlgebra W3(3, 1, 0);
  CHECK(W3.p_power(W3.parse("x[1].d{1}")) == e(W3, "x[1].d{1}"));
  // Independent oracle: cube the 3x3 matrix of x d on A(1,1) directly.
  const Field& F = W3.field();
  const auto& op = W3.lambda_operator(W3.parse("x[1].d{1}"));
  CHECK(op.power(F, 3) == op);
}

TEST_CASE("roots") {
  WittAlgebra W(3, 1, 1);
  const Field& F = W.field();
  CHECK(W.root_of(F, W.parse("x[1].xi[1].d{1}")) == Weight{1, 0});
  CHECK(W.root_of(F, W.parse("x[0].D{1}")) == Weight{2, 0});
  CHECK(W.root_of(F, W.parse("x[0].d{1}")) == Weight{0, 2});
  CHECK(W.is_cartan(W.parse("xi[1].D{1}")));
  CHECK(W.is_cartan(W.parse("x[1].d{1}")));
  CHECK(W.root_of(F, W.parse("x[1].d{1}")) == Weight{0, 0});
  CHECK(W.toral() == std::vector<std::uint32_t>{W.parse("xi[1].D{1}"), W.parse("x[1].d{1}")});
  // Toral elements act on root vectors by their root.
  for (std::uint32_t i = 0; i < W.dim(); ++i) {
    const auto r = W.root_of(F, i);
    for (std::size_t k = 0; k < W.toral().size(); ++k)
      CHECK(W.bracket_basis(W.toral()[k], i) == scale(F, r[k], SparseVector::unit(i)));
  }
}

TEST_CASE("dimensions") {
  for (auto [p, m, n] : {std::tuple{3u, 1u, 1u}, std::tuple{3u, 2u, 1u}, std::tuple{3u, 0u, 2u}, std::tuple{5u, 1u, 0u}}) {
    WittAlgebra W(p, m, n);
    CHECK(W.dim() == (m + n) * pow_u(p, m) * pow_u(2, n));
    CHECK(W.graded_I(-1).size() == m + n);
    CHECK(W.graded_II(-1).size() == n * pow_u(p, m));
    CHECK(W.gl_basis().size() == (m + n) * (m + n));
    CHECK(W.graded_I(W.s() + 1).empty());
    CHECK(!W.graded_I(W.s()).empty());
  }
  CHECK(WittAlgebra(3, 0, 2).dim() == 8);
}

TEST_CASE("root-space dimensions") {
  for (auto [p, m, n] : {std::tuple{3u, 1u, 1u}, std::tuple{3u, 2u, 1u}}) {
    WittAlgebra W(p, m, n);
    const auto mult = root_multiplicities(W);
    auto neg = [](IntRoot r) {
      for (auto& v : r) v = -v;
      return r;
    };
    auto count = [&](const IntRoot& r) { auto it = mult.find(r); return it == mult.end() ? 0u : it->second; };
    for (auto i : W.gl_basis()) {
      if (W.is_cartan(i)) continue;
      CHECK(count(W.integer_root(i)) == 1);
      CHECK(count(neg(W.integer_root(i))) == 1);
    }
    for (auto i : W.graded_I(-1)) {
      CHECK(count(W.integer_root(i)) == 1);
      // W_{eta_1} is spanned by xi_1 x_1 d_1 alone when (m,n) = (1,1).
      if (m == 1 && n == 1 && W.element(i).is_D) CHECK(count(neg(W.integer_root(i))) == 1);
      else CHECK(count(neg(W.integer_root(i))) > 1);
    }
  }
}

TEST_CASE("gl(m|n) isomorphism") {
  WittAlgebra W(3, 1, 1);
  const Field& F = W.field();
  CHECK(W.gl_basis().size() == 4);
  CHECK(W.bracket(F, e(W, "x[1].d{1}"), e(W, "xi[1].D{1}")).empty());
  for (auto [m, n] : {std::pair{1u, 1u}, std::pair{2u, 1u}, std::pair{1u, 2u}}) {
    auto r = check_gl_table(WittAlgebra(3, m, n));
    CHECK_MESSAGE(r.pass, r.counterexample);
    CHECK(r.checked == (m + n) * (m + n) * (m + n) * (m + n) + 1);
  }
}

TEST_CASE("atypical sets") {
  WittAlgebra W(3, 1, 1);
  const auto at = W.atypical_set();
  CHECK(std::set<Weight>(at.begin(), at.end()) == std::set<Weight>{{0, 0}, {0, 2}, {1, 2}, {2, 2}});
  CHECK(W.is_typical({0, 1}));
  CHECK(!W.is_typical({1, 2}));
  WittAlgebra W0(3, 1, 0);
  CHECK(W0.atypical_set() == std::vector<Weight>{{0}, {2}});
  WittAlgebra W2(3, 0, 2);
  // a eta_1 + eta_2 and a eta_2.
  std::set<Weight> expect;
  for (Elem a = 0; a < 3; ++a) {
    expect.insert({a, 1});
    expect.insert({0, a});
  }
  const auto at2 = W2.atypical_set();
  CHECK(std::set<Weight>(at2.begin(), at2.end()) == expect);
  CHECK(at2.size() == 5);
}

TEST_CASE("Borel chain") {
  for (auto [p, m, n] : {std::tuple{3u, 1u, 1u}, std::tuple{3u, 2u, 1u}, std::tuple{3u, 0u, 2u}, std::tuple{3u, 1u, 2u}}) {
    WittAlgebra W(p, m, n);
    const Field& F = W.field();
    const auto chain = W.borel_chain();
    REQUIRE(chain.borels.size() == m + n + 1);
    // gl(m|n) order: xi_1..xi_n above x_1..x_m.
    auto rank_of = [&](std::uint32_t k) { return k >= m ? k - m : n + k; };
    std::set<std::uint32_t> npos, nneg, wneg;
    for (auto i : W.gl_basis()) {
      if (W.is_cartan(i)) continue;
      auto [r, c] = W.gl_iso(i);
      (rank_of(r) < rank_of(c) ? npos : nneg).insert(i);
    }
    std::set<std::uint32_t> top = npos, bottom = npos;
    for (std::uint32_t i = 0; i < W.dim(); ++i) {
      if (W.degree_I(i) >= 1) top.insert(i);
      if (W.degree_I(i) == -1) bottom.insert(i);
    }
    const auto& bmax = chain.max().positive;
    CHECK(std::set<std::uint32_t>(bmax.begin(), bmax.end()) == top);
    const auto& bmin = chain.min().positive;
    CHECK(std::set<std::uint32_t>(bmin.begin(), bmin.end()) == bottom);
    for (auto i : W.graded_I(-1)) CHECK(chain.min().is_positive(i));
    for (const auto& b : chain.borels) {
      CHECK(b.positive.size() + b.negative.size() + b.cartan.size() == W.dim());
      CHECK(b.cartan.size() == m + n);
      for (auto x : b.positive)
        for (auto y : b.positive)
          for (auto [k, c] : W.bracket_basis(x, y).entries) {
            (void)c;
            CHECK(b.is_positive(k));
          }
      for (auto x : b.positive) CHECK(W.ad(x).power(F, W.dim()).is_zero());
    }
  }
}

TEST_CASE("axiom suites pass on small algebras") {
  for (auto [p, m, n] : {std::tuple{3u, 1u, 1u}, std::tuple{3u, 0u, 2u}, std::tuple{5u, 1u, 0u}}) {
    WittAlgebra W(p, m, n);
    for (const auto& r : run_axiom_suites(W)) CHECK_MESSAGE(r.pass, r.name << ": " << r.counterexample);
  }
}

TEST_CASE("corrupted structure constant breaks Jacobi") {
  WittAlgebra W(3, 1, 1);
  const auto bad = W.with_corrupted_constant();
  CHECK(check_skew(bad).pass);
  const auto j = check_jacobi(bad);
  CHECK(!j.pass);
  CHECK(!j.counterexample.empty());
}
