#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "witt/field.hpp"
#include "witt/lambda.hpp"
#include "witt/linalg.hpp"

namespace witt {

/// x^a xi_I D_j (is_D) or x^a xi_I d_j; `dir` is 1-based.
struct WittBasisElement {
  std::uint32_t mono = 0;  // index into the Lambda basis
  bool is_D = false;
  std::uint32_t dir = 1;
};

/// Sparse combination over the W basis.
using WittElement = SparseVector;

/// Toral coordinates (eta_1..eta_n, eps_1..eps_m) over the working field.
using Weight = std::vector<Elem>;
/// Integer root in the same coordinate order.
using IntRoot = std::vector<int>;

/// Value of chi on every W basis element (zero on odd ones).
struct Character {
  std::vector<Elem> values;

  bool is_zero() const;
  Elem operator()(std::uint32_t idx) const { return values[idx]; }
  Elem eval(const Field& F, const WittElement& x) const;
};

struct Borel {
  std::string label;
  std::vector<int> signs;  // functional signs, eta's then eps's
  std::vector<std::uint32_t> positive, negative, cartan;

  bool is_positive(std::uint32_t idx) const;
};

/// B_max, B_m, ..., B_1 = B'_{n+1}, B'_n, ..., B'_1 = B_min.
struct BorelChain {
  std::vector<Borel> borels;

  const Borel& max() const { return borels.front(); }
  const Borel& min() const { return borels.back(); }
};

/// The restricted Witt superalgebra W(m,n,1) over F_p. Basis index is
/// dirIndex * dim(Lambda) + monomial index with D_1..D_n before d_1..d_m.
class WittAlgebra {
 public:
  WittAlgebra(std::uint32_t p, std::uint32_t m, std::uint32_t n);

  std::uint32_t p() const { return p_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t n() const { return n_; }
  std::uint32_t rank() const { return m_ + n_; }
  std::size_t dim() const { return basis_.size(); }
  const Field& field() const { return F_; }
  const LambdaAlgebra& lambda() const { return L_; }

  const WittBasisElement& element(std::uint32_t idx) const { return basis_[idx]; }
  std::uint32_t index_of(std::uint32_t mono, bool is_D, std::uint32_t dir) const;
  std::uint32_t parity(std::uint32_t idx) const { return parity_[idx]; }
  /// Parity of a combination, or 2 when mixed (0 for the zero element).
  std::uint32_t parity(const WittElement& x) const;
  int degree_I(std::uint32_t idx) const { return degI_[idx]; }
  int degree_II(std::uint32_t idx) const { return degII_[idx]; }
  int max_degree_I() const;
  int max_degree_II() const;
  /// s = m(p-1) + n - 1, the top type-I degree.
  int s() const { return static_cast<int>(m_ * (p_ - 1) + n_) - 1; }
  std::vector<std::uint32_t> graded_I(int k) const;
  std::vector<std::uint32_t> graded_II(int k) const;
  std::vector<std::uint32_t> even_basis() const;

  std::string label(std::uint32_t idx) const;
  std::string label(const Field& F, const WittElement& x) const;
  std::uint32_t parse(const std::string& text) const;

  const WittElement& bracket_basis(std::uint32_t i, std::uint32_t j) const { return table_[i * dim() + j]; }
  WittElement bracket(const Field& F, const WittElement& x, const WittElement& y) const;

  /// h_1..h_n = xi_i D_i, h_{n+1}..h_{n+m} = x_j d_j.
  const std::vector<std::uint32_t>& toral() const { return toral_; }
  bool is_cartan(std::uint32_t idx) const { return cartan_[idx]; }
  IntRoot integer_root(std::uint32_t idx) const;
  /// Root reduced mod p; Cartan elements give the zero weight (see is_cartan).
  Weight root_of(const Field& F, std::uint32_t idx) const;

  /// Action of a W element on Lambda(m,n) as a linear map.
  LinearMap lambda_operator(const Field& F, const WittElement& x) const;
  const LinearMap& lambda_operator(std::uint32_t idx) const { return ops_[idx]; }
  /// Recover the derivation whose Lambda operator is `op`; Internal error if
  /// `op` is not of that form.
  WittElement derivation_from_operator(const Field& F, const LinearMap& op) const;

  /// Closed-form p-map on even basis elements; x^a d_j is computed
  /// numerically from its p-th power on Lambda.
  WittElement p_power(std::uint32_t idx) const;
  /// p-map of an arbitrary even element via its p-th power on Lambda.
  WittElement p_power(const Field& F, const WittElement& x) const;

  LinearMap ad(const Field& F, const WittElement& x) const;
  LinearMap ad(std::uint32_t idx) const;

  /// W_[0] basis and its gl(m|n) matrix unit (row, col); rows/cols
  /// 0..m-1 are even (x's), m..m+n-1 odd (xi's).
  std::vector<std::uint32_t> gl_basis() const { return graded_I(0); }
  std::pair<std::uint32_t, std::uint32_t> gl_iso(std::uint32_t idx) const;

  /// Atypical weights over F_p (coordinates < p).
  std::vector<Weight> atypical_set() const;
  bool is_typical(const Weight& w) const;
  BorelChain borel_chain() const;
  /// Borel whose positive part is the cone of the signed functional.
  Borel borel(const std::string& label, const std::vector<int>& signs) const;

  /// Copy with one structure constant altered (kept skew), for negative controls.
  WittAlgebra with_corrupted_constant() const;

 private:
  std::uint32_t p_, m_, n_;
  Field F_;
  LambdaAlgebra L_;
  std::vector<WittBasisElement> basis_;
  std::vector<std::uint32_t> parity_;
  std::vector<int> degI_, degII_;
  std::vector<std::uint8_t> cartan_;
  std::vector<std::uint32_t> toral_;
  std::vector<LinearMap> ops_;
  std::vector<WittElement> table_;
  std::vector<WittElement> ppow_;
};

/// Weight arithmetic helpers.
Weight weight_from_ints(const Field& F, const std::vector<long>& c);
Weight weight_add(const Field& F, const Weight& a, const Weight& b);
Weight weight_sub(const Field& F, const Weight& a, const Weight& b);
std::string weight_string(const Field& F, const Weight& w);
/// Parse "a,b,c" (prime-field integers, toral order).
Weight parse_weight(const Field& F, const std::string& csv, std::size_t rank);

}  // namespace witt
