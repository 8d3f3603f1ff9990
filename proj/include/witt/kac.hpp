#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "witt/repcheck.hpp"

namespace witt {

/// A nonzero `max_dim` makes construction throw Sizing before any carrier
/// larger than it is built.

/// Smallest field F_{p^k} (k <= cap) in which every toral eigenvalue
/// equation t^p - t = chi(h)^p is solvable. Throws ExtendField past the cap.
Field field_for(const WittAlgebra& W, const Character& chi, std::uint32_t cap = 6);

/// lambda(h_k) = (least root of t^p - t - chi(h_k)^p) + offset_k.
Weight toral_weight(const WittAlgebra& W, const Field& F, const Character& chi, const std::vector<long>& offsets);

/// Simple module of the nonnegative part G0 (type-I W^[0] or type-II W^0):
/// the G0 baby Verma for the first Borel with chi(N+ cap G0) = 0, reduced
/// to its simple quotient.
struct BaseModule {
  ModuleRealization module;
  SparseVector top;  // image of the highest vector
  Borel borel;
  std::size_t verma_dim = 0;
};
BaseModule simple_base(std::shared_ptr<const WittAlgebra> W, const Field& F, const Character& chi, Gradation g,
                       const Weight& lambda, std::size_t max_dim = 0);

/// u(W, chi) (x)_{u(W^[0], chi)} M, induced along W_[-1].
ModuleRealization kac_type1(const ModuleRealization& M, std::size_t max_dim = 0);
/// u(W, chi) (x)_{u(W^0, chi)} M, induced along W_{-1}.
ModuleRealization kac_type2(const ModuleRealization& M, std::size_t max_dim = 0);

struct KacModule {
  ModuleRealization V;  // simple module of W^[0] (W_[1] and up act as zero)
  ModuleRealization K;
  SparseVector top;  // 1 (x) v_lambda; the first dim V coordinates of K are 1 (x) V
};
/// Restricted Kac module K(lambda), lambda over F_p.
KacModule kac_restricted(std::shared_ptr<const WittAlgebra> W, const Weight& lambda, std::size_t max_dim = 0);

/// Simple quotient L(lambda) of K(lambda) with the image of 1 (x) v.
QuotientResult simple_head(const KacModule& kac);

}  // namespace witt
