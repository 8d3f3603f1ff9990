#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "witt/algebra.hpp"

namespace witt {

/// A finite-dimensional module over a basis-spanned subalgebra G of W
/// (G = W for full W-modules). `acts[z]` marks the W basis elements in G.
struct ModuleRealization {
  std::shared_ptr<const WittAlgebra> W;
  Field F;
  std::vector<std::uint8_t> acts;
  std::vector<LinearMap> action;  // per W basis index; empty map when !acts
  std::vector<std::string> labels;
  std::vector<std::uint32_t> parity;
  std::vector<Weight> weights;  // per basis vector; empty when unknown
  Character chi;
  std::string provenance;  // verma | kac | kac1 | kac2 | simple-quotient | sub | base | induced

  std::size_t dim() const { return labels.size(); }
  bool has_weights() const { return !weights.empty(); }
  bool is_full() const;
  std::vector<std::uint32_t> acting() const;
  /// Action of an arbitrary element of G.
  SparseVector apply(const WittElement& x, const SparseVector& v) const;
  LinearMap action_of(const WittElement& x) const;
  /// Parity operator (+1 on even, -1 on odd basis vectors).
  LinearMap parity_operator() const;
};

/// One-dimensional module of the subalgebra spanned by `support` where each
/// basis element z acts by `scalar[z]` (indexed by W basis index).
ModuleRealization one_dim(std::shared_ptr<const WittAlgebra> W, const Field& F,
                          const std::vector<std::uint32_t>& support, const std::vector<Elem>& scalar,
                          const Character& chi, const Weight& weight, std::uint32_t parity = 0,
                          const std::string& label = "v");

/// Induce `base` (a module over G0) to G0 + span(complement). The complement
/// is reordered odd-first, then by (type-I degree, index).
ModuleRealization induce(const ModuleRealization& base, std::vector<std::uint32_t> complement);

/// Extend a module over G0 by letting the extra basis elements act as zero.
ModuleRealization inflate(const ModuleRealization& base, const std::vector<std::uint32_t>& extra);

/// Basis order used by induce for a complement.
std::vector<std::uint32_t> pbw_order(const WittAlgebra& W, std::vector<std::uint32_t> complement);

/// Baby Verma module M^B(lambda). lambda must satisfy lambda^p - lambda =
/// chi(h)^p on the torus and chi must vanish on the positive part.
ModuleRealization verma(std::shared_ptr<const WittAlgebra> W, const Field& F, const Weight& lambda,
                        const Borel& B, const Character& chi);

/// Baby Verma of W_[0] relative to H + N+_[0] (acting set W_[0] only).
ModuleRealization levi_verma(std::shared_ptr<const WittAlgebra> W, const Field& F, const Weight& lambda,
                             const Character& chi);

/// Submodule on an action-stable subspace (basis = its echelon rows).
ModuleRealization restrict_to(const ModuleRealization& M, const Subspace& U, const std::string& provenance = "sub");
/// Quotient by an action-stable subspace (basis = non-pivot coordinates).
ModuleRealization quotient_by(const ModuleRealization& M, const Subspace& U,
                              const std::string& provenance = "simple-quotient");

Character zero_character(const WittAlgebra& W);

/// Toral weight of a vector if all its coordinates share one weight.
bool weights_consistent(const ModuleRealization& M);

struct InvariantReport {
  bool parity = true, chi_reduction = true, bracket = true;
  std::uint64_t checked = 0;
  std::string counterexample;
  bool ok() const { return parity && chi_reduction && bracket; }
};

/// Parity, chi-reduction and bracket compatibility over all acting basis
/// elements (pairs for the bracket).
InvariantReport check_invariants(const ModuleRealization& M);

/// Stable FNV-1a hash of an action matrix.
std::uint64_t action_hash(const LinearMap& A);

}  // namespace witt
