#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "witt/module.hpp"

namespace witt {

/// Homogeneous (weight, parity) component of a module.
struct WeightSpace {
  Weight weight;
  std::uint32_t parity = 0;
  Subspace space;
};

/// Joint eigenspaces of the torus, split by parity. Uses the stored
/// per-basis weights when present; otherwise decomposes numerically and
/// throws ExtendField if the torus is not diagonalizable over M.F.
std::vector<WeightSpace> weight_spaces(const ModuleRealization& M);

/// N+ of B inside the acting set of M.
std::vector<std::uint32_t> positive_acting(const ModuleRealization& M, const Borel& B);

/// For each weight/parity component, the vectors killed by N+ (nonzero ones only).
std::vector<WeightSpace> maximal_vectors(const ModuleRealization& M, const Borel& B);

/// Smallest submodule containing the seed (parity-graded when `graded`).
Subspace spin_in(const ModuleRealization& M, const std::vector<SparseVector>& seed, bool graded = false);

struct MaximalWitness {
  Weight weight;
  std::uint32_t parity = 0;
  std::size_t dim = 0;          // dimension of the maximal-vector space
  std::size_t checked = 0;      // vectors spun
  std::size_t spin_dim = 0;     // smallest spin found
  SparseVector vector;          // the vector realizing spin_dim
};

struct SimplicityVerdict {
  bool simple = false;
  std::string method;  // trivial | maximal-vector | norton
  bool probabilistic = false;
  std::string borel;
  std::vector<MaximalWitness> maximal;
  SparseVector seed;            // proper-submodule seed (non-simple)
  bool dual_seed = false;       // seed lives in M* (submodule = its annihilator)
  std::size_t submodule_dim = 0;
  std::uint64_t rng_seed = 0;
  std::string note;
};

struct SimplicityOptions {
  std::uint64_t seed = 1;
  /// Largest number of projective points enumerated in a maximal space.
  std::size_t max_points = 4096;
  /// Borel to use; when absent the chain is searched for one with chi(N+) = 0.
  std::optional<Borel> borel;
  bool force_norton = false;
};

/// Maximal-vector criterion (Norton fallback when no Borel applies).
SimplicityVerdict is_simple(const ModuleRealization& M, const SimplicityOptions& opt = {});

/// Randomized Norton irreducibility test on the acting operators plus the
/// parity operator.
SimplicityVerdict norton_test(const ModuleRealization& M, std::uint64_t seed = 1);

/// Exhaustive oracle: spins every projective point of every weight/parity
/// component (or every nonzero vector when the module is tiny). nullopt
/// when the enumeration exceeds `limit` spins.
std::optional<bool> exhaustive_simple(const ModuleRealization& M, std::size_t limit = 20000);

/// Structural check of a verdict without touching M's matrices.
bool verdict_consistent(const SimplicityVerdict& v, std::size_t dim);
/// Recompute the witness spins against M.
bool revalidate(const ModuleRealization& M, const SimplicityVerdict& v);

/// Proper nonzero submodule of M, if one exists.
std::optional<Subspace> proper_submodule(const ModuleRealization& M, const SimplicityOptions& opt = {},
                                         std::uint64_t shuffle = 0);

struct QuotientResult {
  ModuleRealization module;
  SparseVector top;
  std::size_t steps = 0;
};

/// Unique simple quotient of a module generated by `top`. A nonzero
/// `shuffle` permutes the order in which proper spins are quotiented.
QuotientResult simple_quotient(const ModuleRealization& M, const SparseVector& top, const SimplicityOptions& opt = {},
                               std::uint64_t shuffle = 0);

/// A simple submodule (repeated restriction to proper submodules).
ModuleRealization find_simple_submodule(const ModuleRealization& M, const SimplicityOptions& opt = {});

/// Weight of the unique maximal line with respect to B_min.
Weight minimal_weight(const ModuleRealization& L);

struct WalkStep {
  std::string borel;
  Weight weight;
  std::string kind;   // start | eps | eta
  std::uint32_t coord = 0;  // 1-based eps_k or eta_i
  std::uint32_t r = 0;      // eps-steps: mu_new = mu_prev - r eps_k
  std::uint32_t delta = 0;  // eta-steps: mu_new = mu_prev - delta eta_i
  bool D_kills = false;     // eta-steps: D_i v = 0 for the previous maximal vector
  std::uint32_t d_order = 0;  // eps-steps: largest r with d_k^r v != 0
};

/// Highest weights of L(lambda) along the Borel chain.
std::vector<WalkStep> reflection_walk(const ModuleRealization& L, const BorelChain& chain);

enum class Gradation { I, II };

struct HeightReport {
  Gradation gradation = Gradation::I;
  int height = -1;
};

HeightReport height(const WittAlgebra& W, const Character& chi, Gradation g);

struct PairingWitness {
  bool nonsingular = false;
  std::vector<std::uint32_t> rows;  // chosen W basis elements
  std::vector<std::uint32_t> cols;  // the fixed pairing basis
  Elem determinant = 0;
  std::size_t rank = 0;
  std::size_t required = 0;
  std::string note;
};

/// Type-I pairing test for ht_I(chi) = l+1 > 1: rank of chi([e, b]) for e
/// in W_[l+1] against b in D_1..D_n, d_1..d_m.
PairingWitness nonsingular_type1(const WittAlgebra& W, const Field& F, const Character& chi);
/// Type-II analogue with e in W_{2s+1}, f over the W_{-1} basis.
PairingWitness nonsingular_type2(const WittAlgebra& W, const Field& F, const Character& chi);

/// Default ordered basis of W_{-1}: x^a D_1..x^a D_n with a by increasing |a|.
std::vector<std::uint32_t> type2_ordering(const WittAlgebra& W);

struct InducibleWitness {
  bool inducible = false;
  std::vector<std::uint32_t> ordering;
  std::vector<WittElement> e;          // one per f_i (empty when none)
  std::vector<Elem> pairing;           // chi([e_i, f_i])
  std::vector<std::size_t> solution_dim;  // dim of the e_i annihilating the flags
  std::string note;
};

/// Looks for e_1..e_s in W_1 with chi([e_i, f_i]) != 0 such that, inside the
/// type-II carrier K (1 (x) M in the first `base_dim` coordinates),
/// [e_i, f_j] for j != i and [[e_i, f_j], f_k] for k > j kill
/// f_{j+1} ... f_s (x) M. Given candidates are verified; otherwise the
/// solution subspace for each e_i is computed exactly.
/// `proof_order` keeps only the pairs met when e_1, e_2, ... are applied in
/// turn to f_1 ... f_s (x) m: single brackets with j > i, double with j >= i.
InducibleWitness inducible(const ModuleRealization& K, std::size_t base_dim, const std::vector<std::uint32_t>& ordering,
                           const std::vector<WittElement>* candidates = nullptr, bool proof_order = false);

}  // namespace witt
