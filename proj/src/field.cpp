#include "witt/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace witt {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients c_0..c_{deg}

// a * b mod f over F_p, with a, b of degree < k and f monic of degree k.
Poly mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  const std::size_t k = f.size() - 1;
  std::vector<std::uint64_t> prod(2 * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) prod[i + j] += std::uint64_t(a[i]) * b[j];
  for (auto& c : prod) c %= p;
  for (std::size_t d = 2 * k - 1; d >= k; --d) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (std::size_t i = 0; i < k; ++i)
      prod[d - k + i] = (prod[d - k + i] + (p - f[i]) * c) % p;
  }
  Poly out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return out;
}

Poly powmod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
  const std::size_t k = f.size() - 1;
  Poly r(k, 0);
  r[0] = 1;
  while (e) {
    if (e & 1) r = mulmod(r, base, f, p);
    base = mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Lexicographically least (by c_0, c_1, ... read as a base-p number with c_0
// least significant) monic primitive polynomial of degree k.
Poly primitive_modulus(std::uint32_t p, std::uint32_t k) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) q *= p;
  const auto factors = prime_factors(q - 1);
  Poly x(k, 0);
  x[1] = 1;
  for (std::uint64_t code = 1; code < q; ++code) {
    Poly f(k + 1);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < k; ++i) {
      f[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    f[k] = 1;
    if (f[0] == 0) continue;
    Poly one(k, 0);
    one[0] = 1;
    if (powmod(x, q - 1, f, p) != one) continue;
    bool primitive = true;
    for (auto r : factors) {
      if (powmod(x, (q - 1) / r, f, p) == one) {
        primitive = false;
        break;
      }
    }
    if (primitive) return f;
  }
  fail(ErrorCode::Internal, "no primitive polynomial found");
}

}  // namespace

Field::Field(std::uint32_t p, std::uint32_t k) {
  require(is_prime(p) && p > 2, "field characteristic must be an odd prime");
  require(k >= 1 && k <= 12, "extension degree must lie in [1, 12]");
  // Tables are shared between all Field values with the same (p, k).
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const Data>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({p, k});
  if (it != cache.end()) {
    d_ = it->second;
    return;
  }
  auto d = std::make_shared<Data>();
  d->p = p;
  d->k = k;
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) q *= p;
  require(q < (1u << 24), "field too large");
  d->q = static_cast<std::uint32_t>(q);
  if (k == 1) {
    d->modulus = {0, 1};
  } else {
    d->modulus = primitive_modulus(p, k);
    d->exp.resize(q - 1);
    d->log.assign(q, 0);
    Poly cur(k, 0);
    cur[0] = 1;
    Poly x(k, 0);
    x[1] = 1;
    for (std::uint64_t e = 0; e + 1 < q; ++e) {
      std::uint32_t code = 0;
      for (std::uint32_t i = k; i-- > 0;) code = code * p + cur[i];
      d->exp[e] = code;
      d->log[code] = static_cast<std::uint32_t>(e);
      cur = mulmod(cur, x, d->modulus, p);
    }
  }
  d_ = d;
  cache[{p, k}] = d_;
}

std::string Field::modulus_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = d_->modulus.size(); i-- > 0;) {
    const auto c = d_->modulus[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c;
    } else {
      if (c != 1) os << c << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Elem Field::from_int(std::int64_t v) const {
  const std::int64_t p = d_->p;
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return static_cast<Elem>(r);
}

Elem Field::add_ext(Elem a, Elem b) const {
  const std::uint32_t p = d_->p;
  Elem out = 0, scale = 1;
  for (std::uint32_t i = 0; i < d_->k; ++i) {
    const std::uint32_t s = (a % p + b % p) % p;
    out += s * scale;
    scale *= p;
    a /= p;
    b /= p;
  }
  return out;
}

Elem Field::neg_ext(Elem a) const {
  const std::uint32_t p = d_->p;
  Elem out = 0, scale = 1;
  for (std::uint32_t i = 0; i < d_->k; ++i) {
    const std::uint32_t c = a % p;
    out += (c == 0 ? 0 : p - c) * scale;
    scale *= p;
    a /= p;
  }
  return out;
}

Elem Field::inv(Elem a) const {
  if (a == 0) fail(ErrorCode::Domain, "inverse of zero");
  if (d_->k == 1) return pow(a, d_->p - 2);
  const std::uint32_t l = d_->log[a];
  return d_->exp[l == 0 ? 0 : d_->q - 1 - l];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint32_t> Field::coords(Elem a) const {
  std::vector<std::uint32_t> out(d_->k);
  for (auto& c : out) {
    c = a % d_->p;
    a /= d_->p;
  }
  return out;
}

Elem Field::from_coords(const std::vector<std::uint32_t>& c) const {
  require(c.size() <= d_->k, "too many field coordinates");
  Elem out = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    require(c[i] < d_->p, "field coordinate out of range");
    out = out * d_->p + c[i];
  }
  return out;
}

std::vector<Elem> Field::artin_schreier_roots(Elem c) const {
  // Roots form a coset r + F_p, so one root determines all of them.
  for (Elem t = 0; t < d_->q; ++t) {
    if (sub(sub(pow(t, d_->p), t), c) == 0) {
      std::vector<Elem> roots;
      for (Elem s = 0; s < d_->p; ++s) roots.push_back(add(t, s));
      std::sort(roots.begin(), roots.end());
      return roots;
    }
  }
  return {};
}

std::uint32_t splitting_degree(std::uint32_t p, const std::vector<Elem>& prime_values,
                               std::uint32_t cap) {
  // t^p - t - c is irreducible over F_p for c != 0, and splits over F_{p^k}
  // exactly when p | k.
  const bool any_nonzero =
      std::any_of(prime_values.begin(), prime_values.end(), [](Elem v) { return v != 0; });
  const std::uint32_t k = any_nonzero ? p : 1;
  return k <= cap ? k : 0;
}

std::uint32_t MultiIndex::total() const {
  std::uint32_t s = 0;
  for (auto v : a) s += v;
  return s;
}

Elem binom_digit(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  if (b > a) return 0;
  if (a >= p) {
    // Lucas: split off the lowest base-p digit.
    const Elem low = binom_digit(a % p, b % p, p);
    if (low == 0) return 0;
    return static_cast<Elem>(std::uint64_t(low) * binom_digit(a / p, b / p, p) % p);
  }
  std::uint64_t num = 1, den = 1;
  for (std::uint32_t i = 0; i < b; ++i) {
    num = num * ((a - i) % p) % p;
    den = den * ((i + 1) % p) % p;
  }
  // den is a product of 1..b < p, hence invertible.
  std::uint64_t inv = 1, base = den, e = p - 2;
  while (e) {
    if (e & 1) inv = inv * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<Elem>(num * inv % p);
}

Elem binom(const MultiIndex& a, const MultiIndex& b, std::uint32_t p) {
  require(a.a.size() == b.a.size(), "binom: multi-index length mismatch");
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < a.a.size(); ++i) {
    if (b.a[i] > a.a[i]) return 0;
    r = r * binom_digit(a.a[i], b.a[i], p) % p;
  }
  return static_cast<Elem>(r);
}

}  // namespace witt
