#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "witt/linalg.hpp"

using namespace witt;

namespace {

SparseVector dv(std::initializer_list<Elem> d) {
  std::vector<Elem> v(d);
  return SparseVector::from_dense(v);
}

LinearMap shift(std::size_t n) {
  std::vector<SparseVector> cols(n);
  for (std::size_t i = 0; i + 1 < n; ++i) cols[i] = SparseVector::unit(static_cast<std::uint32_t>(i + 1));
  return LinearMap::from_columns(n, cols);
}

}  // namespace

TEST_CASE("rref examples") {
  Field F(3);
  std::vector<SparseVector> a{dv({1, 0, 0}), dv({1, 1, 0})};
  auto s = rref(F, 3, a);
  CHECK(s.dim() == 2);
  CHECK(s.basis()[0] == dv({1, 0, 0}));
  CHECK(s.basis()[1] == dv({0, 1, 0}));
  CHECK(rref(F, 3, {}).dim() == 0);
  std::vector<SparseVector> b{dv({1, 2, 1}), dv({2, 1, 2})};
  CHECK(rref(F, 3, b).dim() == 1);
  std::vector<SparseVector> bad{dv({0, 0, 0, 1})};
  CHECK_THROWS_AS(rref(F, 3, bad), Error);
}

TEST_CASE("rref is canonical") {
  Field F(5);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Elem> pick(0, 4);
  for (int t = 0; t < 50; ++t) {
    std::vector<SparseVector> gens;
    for (int i = 0; i < 3; ++i) {
      std::vector<Elem> d(6);
      for (auto& x : d) x = pick(rng);
      gens.push_back(SparseVector::from_dense(d));
    }
    // A different spanning set of the same span.
    std::vector<SparseVector> other{axpy(F, gens[0], 2, gens[1]), gens[1], axpy(F, gens[2], 3, gens[0]), gens[0]};
    CHECK(rref(F, 6, gens) == rref(F, 6, other));
  }
}

TEST_CASE("solve_null examples") {
  Field F(3);
  auto id = LinearMap::identity(3);
  auto zero = LinearMap::zero(3);
  const LinearMap* ops1[] = {&id};
  CHECK(solve_null(F, 3, ops1).dim() == 0);
  const LinearMap* ops0[] = {&zero};
  CHECK(solve_null(F, 3, ops0).dim() == 3);
  auto j2 = shift(2);
  const LinearMap* opsj[] = {&j2};
  auto ker = solve_null(F, 2, opsj);
  REQUIRE(ker.dim() == 1);
  CHECK(j2.apply(F, ker.basis()[0]).empty());

  // Eigen-constraint: diag(1,2,1), eigenvalue 1.
  auto h = LinearMap::from_columns(3, {dv({1, 0, 0}), dv({0, 2, 0}), dv({0, 0, 1})});
  EigenConstraint ec[] = {{&h, 1}};
  auto e1 = solve_null(F, 3, {}, ec);
  CHECK(e1.dim() == 2);
  for (const auto& v : e1.basis()) CHECK(h.apply(F, v) == v);
}

TEST_CASE("spin examples and properties") {
  Field F(3);
  auto sh = shift(3);
  const LinearMap* gens[] = {&sh};
  std::vector<SparseVector> seed{SparseVector::unit(0)};
  auto s = spin(F, 3, seed, gens);
  CHECK(s.is_full());
  std::vector<SparseVector> last{SparseVector::unit(2)};
  auto t = spin(F, 3, last, gens);
  CHECK(t.dim() == 1);
  // idempotent, stable, contains seed
  auto tt = spin(F, 3, t.basis(), gens);
  CHECK(tt == t);
  for (const auto& v : t.basis()) CHECK(t.contains(sh.apply(F, v)));
  CHECK(t.contains(last[0]));
}

TEST_CASE("column kernel and map algebra") {
  Field F(3);
  std::vector<SparseVector> cols{dv({1, 1}), dv({2, 2}), dv({0, 1})};
  auto k = column_kernel(F, cols, 2);
  REQUIRE(k.dim() == 1);
  CHECK(k.basis()[0] == dv({1, 1, 0}));
  auto sh = shift(3);
  CHECK(sh.power(F, 3).is_zero());
  CHECK(!sh.power(F, 2).is_zero());
  CHECK(sh.transpose().transpose() == sh);
  CHECK(sh.add(F, sh, 2).is_zero());
}
