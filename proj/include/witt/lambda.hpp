#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "witt/field.hpp"
#include "witt/linalg.hpp"

namespace witt {

/// Strictly increasing I = i_1 < ... < i_s in {1..n}, stored as a bitmask
/// (bit i-1 set iff i in I).
struct OddIndexSet {
  std::uint32_t mask = 0;

  std::uint32_t size() const { return static_cast<std::uint32_t>(__builtin_popcount(mask)); }
  bool contains(std::uint32_t i) const { return (mask >> (i - 1)) & 1u; }
  std::vector<std::uint32_t> indices() const;
  static OddIndexSet from_indices(const std::vector<std::uint32_t>& idx);
  bool operator==(const OddIndexSet&) const = default;
};

struct LambdaMonomial {
  MultiIndex a;
  OddIndexSet I;

  std::uint32_t parity() const { return I.size() % 2; }
  std::uint32_t degree() const { return a.total() + I.size(); }
  bool operator==(const LambdaMonomial&) const = default;
};

/// Elements of Lambda(m,n) are sparse vectors over the monomial basis.
using LambdaElement = SparseVector;

/// Lambda(m,n) = A(m,1) (x) exterior(n) over F_p. Monomials are indexed in
/// degree-lexicographic order on (|a|+|I|, a, I).
class LambdaAlgebra {
 public:
  LambdaAlgebra(std::uint32_t p, std::uint32_t m, std::uint32_t n);

  std::uint32_t p() const { return p_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t n() const { return n_; }
  std::size_t dim() const { return monos_.size(); }

  const LambdaMonomial& monomial(std::size_t idx) const { return monos_[idx]; }
  std::uint32_t index_of(const LambdaMonomial& mono) const;
  std::uint32_t index_of(const MultiIndex& a, OddIndexSet I) const { return index_of({a, I}); }
  std::uint32_t one_index() const { return 0; }

  /// Product of basis monomials: (coefficient, index); coefficient 0 if it vanishes.
  std::pair<Elem, std::uint32_t> mul_basis(std::uint32_t u, std::uint32_t v) const;
  /// D_i / d_j on a basis monomial.
  std::pair<Elem, std::uint32_t> D_basis(std::uint32_t i, std::uint32_t u) const;
  std::pair<Elem, std::uint32_t> d_basis(std::uint32_t j, std::uint32_t u) const;

  LambdaElement multiply(const Field& F, const LambdaElement& u, const LambdaElement& v) const;
  LambdaElement apply_D(const Field& F, std::uint32_t i, const LambdaElement& u) const;
  LambdaElement apply_d(const Field& F, std::uint32_t j, const LambdaElement& u) const;
  /// Common parity of all terms, or nullopt for a mixed element.
  std::optional<std::uint32_t> parity(const LambdaElement& u) const;

  /// Text format x[a1,..,am].xi[i1,..,is]; the x part is dropped when m = 0,
  /// the xi part when I is empty, and the empty monomial prints as "1".
  std::string label(std::uint32_t idx) const;
  std::uint32_t parse(const std::string& text) const;

 private:
  std::uint32_t code(const LambdaMonomial& mono) const;

  std::uint32_t p_, m_, n_;
  std::vector<LambdaMonomial> monos_;
  std::vector<std::uint32_t> index_by_code_;
};

}  // namespace witt
