// Acceptance run: one PASS/FAIL line per criterion. All comparisons are
// exact (finite-field arithmetic); the only tolerances are wall-clock limits.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "witt/axioms.hpp"
#include "witt/kac.hpp"

using namespace witt;

namespace {

using Clock = std::chrono::steady_clock;

std::shared_ptr<const WittAlgebra> algebra(std::uint32_t p, std::uint32_t m, std::uint32_t n) {
  return std::make_shared<const WittAlgebra>(p, m, n);
}

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

Character chi_of(const WittAlgebra& W, std::vector<std::pair<std::string, long>> vals) {
  auto c = zero_character(W);
  for (auto& [l, v] : vals) c.values[W.parse(l)] = W.field().from_int(v);
  return c;
}

// Every module built for criteria 3-8, for criterion 9.
struct Registry {
  std::size_t modules = 0, failed = 0;
  std::string first;
  void add(const ModuleRealization& M, const std::string& what) {
    ++modules;
    const auto r = check_invariants(M);
    if (!r.ok() && failed++ == 0) first = what + ": " + r.counterexample;
  }
} registry;

struct Line {
  bool pass = true;
  std::ostringstream detail;
  void expect(bool c, const std::string& why) {
    if (!c && pass) {
      pass = false;
      detail << " first failure: " << why << ";";
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<void(Line&)>& body) {
  Line line;
  const auto t0 = Clock::now();
  try {
    body(line);
  } catch (const std::exception& e) {
    line.expect(false, std::string("exception: ") + e.what());
  }
  const double t = std::chrono::duration<double>(Clock::now() - t0).count();
  if (limit_s > 0) line.expect(t < limit_s, "runtime over limit");
  failures += !line.pass;
  std::printf("%s %d %s:%s [exact; %.2f s", line.pass ? "PASS" : "FAIL", id, name.c_str(), line.detail.str().c_str(), t);
  if (limit_s > 0) std::printf(" < %.0f s", limit_s);
  std::printf("]\n");
  std::fflush(stdout);
}

std::string ws(const WittAlgebra& W, const Weight& w) { return "(" + weight_string(W.field(), w) + ")"; }

// Restricted K(lambda), its verdicts and head, registered for criterion 9.
struct Restricted {
  KacModule kac;
  SimplicityVerdict verdict;
  std::optional<bool> oracle;
  QuotientResult head;
};

Restricted restricted(const std::shared_ptr<const WittAlgebra>& W, const Weight& lam) {
  Restricted r;
  r.kac = kac_restricted(W, lam);
  r.verdict = is_simple(r.kac.K);
  r.oracle = exhaustive_simple(r.kac.K);
  r.head = simple_head(r.kac);
  const auto tag = "K" + ws(*W, lam);
  registry.add(r.kac.V, "V" + ws(*W, lam));
  registry.add(r.kac.K, tag);
  registry.add(r.head.module, "L" + ws(*W, lam));
  return r;
}

}  // namespace

int main() {
  criterion(1, "axiom suites at (3,1,1), (3,0,2), (5,1,0); 10% Jacobi sample at (3,2,1)", 60, [](Line& L) {
    std::size_t checked = 0;
    for (auto [p, m, n, frac] : {std::tuple{3u, 1u, 1u, 1.0}, {3u, 0u, 2u, 1.0}, {5u, 1u, 0u, 1.0}, {3u, 2u, 1u, 0.1}}) {
      const WittAlgebra W(p, m, n);
      AxiomOptions opt;
      opt.jacobi_fraction = frac;
      opt.seed = 2024;
      for (const auto& r : run_axiom_suites(W, opt)) {
        checked += r.checked;
        L.expect(r.pass, r.name + " at (" + std::to_string(p) + "," + std::to_string(m) + "," + std::to_string(n) +
                             "): " + r.counterexample);
      }
    }
    L.detail << " " << checked << " checks";
  });

  criterion(2, "W_[0] bracket table equals gl(m|n) for (m,n) = (1,1), (2,1), (1,2)", 0, [](Line& L) {
    std::size_t checked = 0;
    for (auto [m, n] : {std::pair{1u, 1u}, {2u, 1u}, {1u, 2u}}) {
      const WittAlgebra W(3, m, n);
      const auto r = check_gl_table(W);
      checked += r.checked;
      L.expect(r.pass, r.counterexample);
    }
    L.detail << " " << checked << " bracket entries";
  });

  criterion(3, "K(lambda) simple iff typical at (3,1,1) and (3,0,2), two oracles", 300, [](Line& L) {
    for (auto [m, n] : {std::pair{1u, 1u}, {0u, 2u}}) {
      auto W = algebra(3, m, n);
      std::size_t atyp = 0;
      for (const auto& lam : all_weights(*W)) {
        auto r = restricted(W, lam);
        const bool typ = W->is_typical(lam);
        atyp += !typ;
        L.expect(r.verdict.simple == typ, "maximal-vector verdict at " + ws(*W, lam));
        L.expect(r.oracle.has_value() && *r.oracle == typ, "exhaustive oracle at " + ws(*W, lam));
        L.expect(revalidate(r.kac.K, r.verdict), "witness at " + ws(*W, lam));
        if (m == 0) {
          // toral order eta_1, eta_2: atypical = {a eta_1 + eta_2} u {a eta_2}
          const bool family = lam[1] == 1 || lam[0] == 0;
          L.expect(typ == !family, "atypical family at " + ws(*W, lam));
        }
      }
      L.expect(m == 0 || atyp == 4, "(3,1,1) has 4 atypical weights");
      L.detail << " (3," << m << "," << n << "): " << atyp << " atypical of 9;";
    }
  });

  criterion(4, "n = 0: K(lambda) simple iff lambda not in {0, (p-1)eps_1}; dim L = 1, p-1, p", 60, [](Line& L) {
    for (std::uint32_t p : {3u, 5u}) {
      auto W = algebra(p, 1, 0);
      std::vector<std::size_t> dims;
      for (Elem a = 0; a < p; ++a) {
        auto r = restricted(W, {a});
        const bool exceptional = a == 0 || a == p - 1;
        L.expect(r.verdict.simple == !exceptional, "simplicity at a = " + std::to_string(a));
        L.expect(r.oracle.has_value() && *r.oracle == r.verdict.simple, "oracle at a = " + std::to_string(a));
        const std::size_t want = a == 0 ? 1 : a == p - 1 ? p - 1 : p;
        L.expect(r.head.module.dim() == want, "dim L at a = " + std::to_string(a));
        const auto ex = exhaustive_simple(r.head.module);
        L.expect(ex.has_value() && *ex, "head not simple at a = " + std::to_string(a));
        dims.push_back(r.head.module.dim());
      }
      L.detail << " p=" << p << " dim L:";
      for (auto d : dims) L.detail << " " << d;
      L.detail << ";";
    }
  });

  criterion(5, "at (3,1,1) typical iff minimal weight = lambda - eta_1 - 2eps_1", 0, [](Line& L) {
    auto W = algebra(3, 1, 1);
    const Field& F = W->field();
    std::size_t hits = 0;
    for (const auto& lam : all_weights(*W)) {
      auto r = restricted(W, lam);
      const Weight expect{F.sub(lam[0], 1), F.sub(lam[1], 2)};
      const bool hit = minimal_weight(r.head.module) == expect;
      hits += hit;
      L.expect(hit == W->is_typical(lam), "at " + ws(*W, lam));
    }
    L.detail << " equality holds for " << hits << " of 9, all typical";
  });

  criterion(6, "(3,1,1) sweep gives p^{m+n} = 9 pairwise non-isomorphic simples", 0, [](Line& L) {
    auto W = algebra(3, 1, 1);
    const auto bmax = W->borel_chain().max();
    std::set<Weight> highest;
    for (const auto& lam : all_weights(*W)) {
      auto r = restricted(W, lam);
      const auto mv = maximal_vectors(r.head.module, bmax);
      L.expect(mv.size() == 1 && mv[0].space.dim() == 1 && mv[0].weight == lam, "unique maximal line at " + ws(*W, lam));
      const auto ex = exhaustive_simple(r.head.module);
      L.expect(ex.has_value() && *ex, "L not simple at " + ws(*W, lam));
      if (!mv.empty()) highest.insert(mv[0].weight);
    }
    L.expect(highest.size() == 9, "distinct highest weights");
    L.detail << " " << highest.size() << " distinct B_max highest weights";
  });

  criterion(7, "reflection walk at (3,1,1): typical drops (p-1)eps and eta; atypical degenerates", 0, [](Line& L) {
    auto W = algebra(3, 1, 1);
    const auto chain = W->borel_chain();
    std::size_t typ = 0, degen = 0;
    for (const auto& lam : all_weights(*W)) {
      auto r = restricted(W, lam);
      const auto walk = reflection_walk(r.head.module, chain);
      if (W->is_typical(lam)) {
        ++typ;
        for (const auto& s : walk) {
          if (s.kind == "eps") L.expect(s.r == 2, "eps-step r at " + ws(*W, lam));
          if (s.kind == "eta") L.expect(s.delta == 1 && !s.D_kills, "eta-step at " + ws(*W, lam));
        }
        L.expect(walk.back().weight == minimal_weight(r.head.module), "walk end at " + ws(*W, lam));
      } else {
        bool seen = false;
        for (const auto& s : walk)
          seen = seen || (s.kind == "eps" && s.r > 0 && s.r < 2) || (s.kind == "eta" && s.D_kills);
        degen += seen;
        L.expect(seen, "no degenerate step at " + ws(*W, lam));
      }
    }
    L.detail << " " << typ << " typical walks exact, " << degen << " of 4 atypical walks degenerate";
  });

  criterion(8, "nonrestricted sufficiency (a) nonsingular, (b) height one, (c) inducible; Norton too", 300, [](Line& L) {
    auto build = [&](std::shared_ptr<const WittAlgebra> W, const Character& chi, Gradation g, const std::string& tag) {
      const Field F = field_for(*W, chi);
      auto base = simple_base(W, F, chi, g, toral_weight(*W, F, chi, {}));
      registry.add(base.module, tag + " base");
      auto K = g == Gradation::I ? kac_type1(base.module) : kac_type2(base.module);
      registry.add(K, tag);
      const auto v = is_simple(K);
      const auto nt = norton_test(K, 7);
      L.expect(v.simple, tag + " maximal-vector verdict");
      L.expect(nt.simple, tag + " Norton verdict");
      L.detail << " " << tag << " dim " << K.dim() << " simple=" << v.simple << "/" << nt.simple << ";";
      return std::pair{std::move(K), base.module.dim()};
    };

    auto W = algebra(3, 1, 1);
    auto a = chi_of(*W, {{"x[2].d{1}", 1}, {"x[1].xi[1].D{1}", 1}});
    const auto ns = nonsingular_type1(*W, W->field(), a);
    L.expect(ns.nonsingular, "(a) chi is nonsingular");
    L.detail << " (a) ht_I=" << height(*W, a, Gradation::I).height << " det=" << ns.determinant << ";";
    build(W, a, Gradation::I, "(a)");

    auto W321 = algebra(3, 2, 1);
    build(W321, chi_of(*W321, {{"x[0,1].d{1}", 1}}), Gradation::I, "(b) lower");
    build(W, chi_of(*W, {{"x[1].d{1}", 1}}), Gradation::I, "(b) torus-eps");
    build(W, chi_of(*W, {{"xi[1].D{1}", 1}}), Gradation::I, "(b) torus-eta");

    auto c = chi_of(*W, {{"x[2].d{1}", 1}});
    L.expect(height(*W, c, Gradation::II).height == 1, "(c) ht_II = 1");
    auto [K, base_dim] = build(W, c, Gradation::II, "(c)");
    const auto ord = type2_ordering(*W);
    std::vector<WittElement> cand;
    for (auto f : ord) {
      const auto a0 = W->lambda().monomial(W->element(f).mono).a.a[0];
      cand.push_back(SparseVector::unit(W->parse("x[" + std::to_string(2 - a0) + "].xi[1].d{1}")));
    }
    const auto lit = inducible(K, base_dim, ord, &cand);
    const auto pro = inducible(K, base_dim, ord, &cand, true);
    L.expect(pro.inducible, "(c) inducible (application-order reading)");
    L.detail << " (c) inducible: application-order=" << pro.inducible << ", all-pairs=" << lit.inducible;
  });

  criterion(9, "chi-reduction, bracket and parity invariants on every module of 3-8", 0, [](Line& L) {
    L.expect(registry.failed == 0, registry.first);
    L.detail << " " << registry.modules << " modules, " << registry.failed << " failing";
  });

  return failures ? 1 : 0;
}
