#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "witt/algebra.hpp"

namespace witt {

struct SuiteResult {
  std::string name;
  bool pass = true;
  std::uint64_t checked = 0;
  std::string counterexample;  // first failure, empty on success
};

struct AxiomOptions {
  double jacobi_fraction = 1.0;  // fraction of ordered triples sampled
  std::uint64_t seed = 1;
};

SuiteResult check_skew(const WittAlgebra& W);
SuiteResult check_jacobi(const WittAlgebra& W, const AxiomOptions& opt = {});
/// e(uv) = e(u)v + (-1)^{|e||u|} u e(v) for every basis e and monomials u, v.
SuiteResult check_derivation_law(const WittAlgebra& W);
/// The Lambda operator of [x, y] is the supercommutator of the operators.
SuiteResult check_operator_bracket(const WittAlgebra& W);
SuiteResult check_grading(const WittAlgebra& W);
/// ad(x^[p]) = ad(x)^p on even basis elements and random even combinations;
/// closed-form p-map agrees with the numeric one.
SuiteResult check_restricted(const WittAlgebra& W, std::uint64_t seed = 1);
/// W_[0] bracket table against gl(m|n) matrix supercommutators.
SuiteResult check_gl_table(const WittAlgebra& W);

std::vector<SuiteResult> run_axiom_suites(const WittAlgebra& W, const AxiomOptions& opt = {});

}  // namespace witt
