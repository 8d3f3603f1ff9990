#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "witt/error.hpp"

namespace witt {

/// Field element encoded by its coordinates over the prime subfield:
/// code = c_0 + c_1 p + ... + c_{k-1} p^{k-1}, where the element is
/// c_0 + c_1 x + ... in F_p[x]/(modulus). Prime-field values keep their
/// integer code in every extension.
using Elem = std::uint32_t;

bool is_prime(std::uint64_t n);

/// The finite field F_{p^k}, p > 2. Cheap to copy (shared immutable tables).
class Field {
 public:
  Field() = default;
  Field(std::uint32_t p, std::uint32_t k = 1);

  std::uint32_t p() const { return d_->p; }
  std::uint32_t k() const { return d_->k; }
  std::uint32_t size() const { return d_->q; }
  /// Monic modulus coefficients c_0..c_k (c_k = 1); {0, 1} for k = 1.
  const std::vector<std::uint32_t>& modulus() const { return d_->modulus; }
  std::string modulus_string() const;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(std::int64_t v) const;

  Elem add(Elem a, Elem b) const {
    if (d_->k == 1) {
      Elem s = a + b;
      return s >= d_->p ? s - d_->p : s;
    }
    return add_ext(a, b);
  }
  Elem neg(Elem a) const {
    if (d_->k == 1) return a == 0 ? 0 : d_->p - a;
    return neg_ext(a);
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (d_->k == 1) return static_cast<Elem>((std::uint64_t(a) * b) % d_->p);
    std::uint32_t e = d_->log[a] + d_->log[b];
    if (e >= d_->q - 1) e -= d_->q - 1;
    return d_->exp[e];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  Elem frobenius(Elem a) const { return pow(a, d_->p); }

  /// Coordinates (length k) over F_p.
  std::vector<std::uint32_t> coords(Elem a) const;
  Elem from_coords(const std::vector<std::uint32_t>& c) const;
  bool in_prime_field(Elem a) const { return a < d_->p; }

  /// All roots in this field of t^p - t - c. Empty when none exist.
  std::vector<Elem> artin_schreier_roots(Elem c) const;

  bool operator==(const Field& o) const {
    return d_ == o.d_ || (p() == o.p() && k() == o.k());
  }

 private:
  struct Data {
    std::uint32_t p = 0, k = 0, q = 0;
    std::vector<std::uint32_t> modulus;
    std::vector<std::uint32_t> exp, log;  // only for k > 1
  };
  Elem add_ext(Elem a, Elem b) const;
  Elem neg_ext(Elem a) const;

  std::shared_ptr<const Data> d_;
};

/// Smallest k >= 1 such that t^p - t - c splits over F_{p^k} for every
/// c in `values` (values given in the prime field). Returns 0 when the
/// answer exceeds `cap`.
std::uint32_t splitting_degree(std::uint32_t p, const std::vector<Elem>& prime_values,
                               std::uint32_t cap);

/// Exponent tuple a in A(m,1): 0 <= a_i <= p-1.
struct MultiIndex {
  std::vector<std::uint32_t> a;

  std::uint32_t total() const;
  bool operator==(const MultiIndex&) const = default;
  auto operator<=>(const MultiIndex&) const = default;
};

/// prod_i C(a_i, b_i) mod p with C(a_i, b_i) = 0 unless b_i <= a_i.
Elem binom(const MultiIndex& a, const MultiIndex& b, std::uint32_t p);
/// Single-digit binomial C(a, b) mod p for 0 <= b, a < p.
Elem binom_digit(std::uint32_t a, std::uint32_t b, std::uint32_t p);

}  // namespace witt
