#include "witt/lambda.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace witt {

std::vector<std::uint32_t> OddIndexSet::indices() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < 32; ++i)
    if ((mask >> i) & 1u) out.push_back(i + 1);
  return out;
}

OddIndexSet OddIndexSet::from_indices(const std::vector<std::uint32_t>& idx) {
  OddIndexSet s;
  std::uint32_t prev = 0;
  for (auto i : idx) {
    require(i >= 1 && i <= 31, "odd index out of range");
    require(i > prev, "odd index set must be strictly increasing");
    s.mask |= 1u << (i - 1);
    prev = i;
  }
  return s;
}

LambdaAlgebra::LambdaAlgebra(std::uint32_t p, std::uint32_t m, std::uint32_t n) : p_(p), m_(m), n_(n) {
  require(is_prime(p) && p > 2, "p must be an odd prime");
  require(m + n >= 1, "m + n must be positive");
  require(n <= 16, "n too large");
  std::uint64_t pm = 1;
  for (std::uint32_t i = 0; i < m; ++i) pm *= p;
  require(pm << n <= (1u << 22), "Lambda(m,n) too large");
  for (std::uint64_t c = 0; c < pm; ++c) {
    MultiIndex a;
    a.a.resize(m);
    std::uint64_t r = c;
    for (std::uint32_t i = 0; i < m; ++i) {
      a.a[i] = static_cast<std::uint32_t>(r % p);
      r /= p;
    }
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) monos_.push_back({a, OddIndexSet{mask}});
  }
  auto key = [](const LambdaMonomial& u) {
    return std::make_tuple(u.degree(), u.a, u.I.indices());
  };
  std::stable_sort(monos_.begin(), monos_.end(),
                   [&](const LambdaMonomial& x, const LambdaMonomial& y) { return key(x) < key(y); });
  index_by_code_.assign(monos_.size(), 0);
  for (std::size_t i = 0; i < monos_.size(); ++i) index_by_code_[code(monos_[i])] = static_cast<std::uint32_t>(i);
}

std::uint32_t LambdaAlgebra::code(const LambdaMonomial& mono) const {
  std::uint32_t c = 0;
  for (std::uint32_t i = m_; i-- > 0;) c = c * p_ + mono.a.a[i];
  return (c << n_) | mono.I.mask;
}

std::uint32_t LambdaAlgebra::index_of(const LambdaMonomial& mono) const {
  require(mono.a.a.size() == m_, "monomial has wrong number of even variables");
  for (auto v : mono.a.a) require(v < p_, "exponent exceeds p-1");
  require(mono.I.mask < (1u << n_), "odd index exceeds n");
  return index_by_code_[code(mono)];
}

std::pair<Elem, std::uint32_t> LambdaAlgebra::mul_basis(std::uint32_t u, std::uint32_t v) const {
  const auto& x = monos_[u];
  const auto& y = monos_[v];
  if (x.I.mask & y.I.mask) return {0, 0};
  MultiIndex s;
  s.a.resize(m_);
  for (std::uint32_t i = 0; i < m_; ++i) {
    s.a[i] = x.a.a[i] + y.a.a[i];
    if (s.a[i] >= p_) return {0, 0};
  }
  Elem c = binom(s, x.a, p_);
  if (c == 0) return {0, 0};
  // Merge sign: pairs i in I, j in J with i > j.
  std::uint32_t inv = 0;
  for (auto j : y.I.indices()) inv += static_cast<std::uint32_t>(__builtin_popcount(x.I.mask >> j));
  if (inv % 2) c = (p_ - c) % p_;
  return {c, index_of(s, OddIndexSet{x.I.mask | y.I.mask})};
}

std::pair<Elem, std::uint32_t> LambdaAlgebra::D_basis(std::uint32_t i, std::uint32_t u) const {
  require(i >= 1 && i <= n_, "D index out of range");
  const auto& x = monos_[u];
  if (!x.I.contains(i)) return {0, 0};
  const std::uint32_t below = static_cast<std::uint32_t>(__builtin_popcount(x.I.mask & ((1u << (i - 1)) - 1)));
  const Elem c = below % 2 ? p_ - 1 : 1;
  return {c, index_of(x.a, OddIndexSet{x.I.mask & ~(1u << (i - 1))})};
}

std::pair<Elem, std::uint32_t> LambdaAlgebra::d_basis(std::uint32_t j, std::uint32_t u) const {
  require(j >= 1 && j <= m_, "d index out of range");
  const auto& x = monos_[u];
  if (x.a.a[j - 1] == 0) return {0, 0};
  MultiIndex a = x.a;
  --a.a[j - 1];
  return {1, index_of(a, x.I)};
}

LambdaElement LambdaAlgebra::multiply(const Field& F, const LambdaElement& u, const LambdaElement& v) const {
  require(F.p() == p_, "field characteristic mismatch");
  Accumulator acc(dim());
  for (auto [i, ci] : u.entries)
    for (auto [j, cj] : v.entries) {
      auto [c, k] = mul_basis(i, j);
      if (c) acc.add(F, k, F.mul(c, F.mul(ci, cj)));
    }
  return acc.take();
}

LambdaElement LambdaAlgebra::apply_D(const Field& F, std::uint32_t i, const LambdaElement& u) const {
  Accumulator acc(dim());
  for (auto [k, c] : u.entries) {
    auto [s, t] = D_basis(i, k);
    if (s) acc.add(F, t, F.mul(s, c));
  }
  return acc.take();
}

LambdaElement LambdaAlgebra::apply_d(const Field& F, std::uint32_t j, const LambdaElement& u) const {
  Accumulator acc(dim());
  for (auto [k, c] : u.entries) {
    auto [s, t] = d_basis(j, k);
    if (s) acc.add(F, t, F.mul(s, c));
  }
  return acc.take();
}

std::optional<std::uint32_t> LambdaAlgebra::parity(const LambdaElement& u) const {
  std::optional<std::uint32_t> par;
  for (auto [k, c] : u.entries) {
    (void)c;
    const auto q = monos_[k].parity();
    if (par && *par != q) return std::nullopt;
    par = q;
  }
  return par.value_or(0);
}

std::string LambdaAlgebra::label(std::uint32_t idx) const {
  const auto& x = monos_[idx];
  std::ostringstream os;
  if (m_ > 0) {
    os << "x[";
    for (std::uint32_t i = 0; i < m_; ++i) os << (i ? "," : "") << x.a.a[i];
    os << "]";
  }
  if (x.I.mask) {
    if (m_ > 0) os << ".";
    os << "xi[";
    bool first = true;
    for (auto i : x.I.indices()) {
      os << (first ? "" : ",") << i;
      first = false;
    }
    os << "]";
  }
  const auto s = os.str();
  return s.empty() ? "1" : s;
}

namespace {

std::vector<std::uint32_t> parse_list(const std::string& body) {
  std::vector<std::uint32_t> out;
  if (body.empty()) return out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    require(!item.empty() && item.find_first_not_of("0123456789") == std::string::npos,
            "malformed index list '" + body + "'");
    out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
  }
  return out;
}

}  // namespace

std::uint32_t LambdaAlgebra::parse(const std::string& text) const {
  MultiIndex a;
  a.a.assign(m_, 0);
  OddIndexSet I;
  if (text == "1") return index_of(a, I);
  std::size_t pos = 0;
  bool saw_x = false, saw_xi = false;
  while (pos < text.size()) {
    if (pos > 0) {
      require(text[pos] == '.', "malformed monomial '" + text + "'");
      ++pos;
    }
    std::string head;
    if (text.compare(pos, 3, "xi[") == 0) {
      head = "xi";
      pos += 3;
    } else if (text.compare(pos, 2, "x[") == 0) {
      head = "x";
      pos += 2;
    } else {
      fail(ErrorCode::Usage, "malformed monomial '" + text + "'");
    }
    const auto close = text.find(']', pos);
    require(close != std::string::npos, "malformed monomial '" + text + "'");
    auto vals = parse_list(text.substr(pos, close - pos));
    pos = close + 1;
    if (head == "x") {
      require(!saw_x && !saw_xi, "malformed monomial '" + text + "'");
      saw_x = true;
      require(vals.size() == m_, "monomial '" + text + "' has wrong number of exponents");
      a.a = vals;
    } else {
      require(!saw_xi, "malformed monomial '" + text + "'");
      saw_xi = true;
      for (auto i : vals) require(i >= 1 && i <= n_, "odd index out of range in '" + text + "'");
      I = OddIndexSet::from_indices(vals);
    }
  }
  for (auto v : a.a) require(v < p_, "exponent exceeds p-1 in '" + text + "'");
  return index_of(a, I);
}

}  // namespace witt
