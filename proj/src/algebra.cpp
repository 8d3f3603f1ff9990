#include "witt/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace witt {

bool Character::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](Elem v) { return v == 0; });
}

Elem Character::eval(const Field& F, const WittElement& x) const {
  Elem s = 0;
  for (auto [i, c] : x.entries) s = F.add(s, F.mul(c, values[i]));
  return s;
}

bool Borel::is_positive(std::uint32_t idx) const {
  return std::binary_search(positive.begin(), positive.end(), idx);
}

WittAlgebra::WittAlgebra(std::uint32_t p, std::uint32_t m, std::uint32_t n)
    : p_(p), m_(m), n_(n), F_(p), L_(p, m, n) {
  const std::uint32_t dl = static_cast<std::uint32_t>(L_.dim());
  require(static_cast<std::uint64_t>(dl) * (m + n) <= 4096, "W(m,n,1) too large for this workbench");
  for (std::uint32_t dir = 0; dir < m + n; ++dir)
    for (std::uint32_t k = 0; k < dl; ++k) {
      WittBasisElement e{k, dir < n, dir < n ? dir + 1 : dir - n + 1};
      const auto& mono = L_.monomial(k);
      basis_.push_back(e);
      parity_.push_back((mono.I.size() + (e.is_D ? 1 : 0)) % 2);
      degI_.push_back(static_cast<int>(mono.degree()) - 1);
      degII_.push_back(static_cast<int>(mono.I.size()) - (e.is_D ? 1 : 0));
    }
  const std::size_t N = basis_.size();
  cartan_.assign(N, 0);
  for (std::uint32_t i = 1; i <= n; ++i) {
    MultiIndex z;
    z.a.assign(m, 0);
    toral_.push_back(index_of(L_.index_of(z, OddIndexSet{1u << (i - 1)}), true, i));
  }
  for (std::uint32_t j = 1; j <= m; ++j) {
    MultiIndex e;
    e.a.assign(m, 0);
    e.a[j - 1] = 1;
    toral_.push_back(index_of(L_.index_of(e, OddIndexSet{}), false, j));
  }
  for (auto t : toral_) cartan_[t] = 1;

  // Lambda operators: (f E)(g) = f * E(g).
  ops_.reserve(N);
  for (std::uint32_t idx = 0; idx < N; ++idx) {
    const auto& e = basis_[idx];
    std::vector<SparseVector> cols(dl);
    for (std::uint32_t g = 0; g < dl; ++g) {
      auto [c, h] = e.is_D ? L_.D_basis(e.dir, g) : L_.d_basis(e.dir, g);
      if (!c) continue;
      auto [c2, r] = L_.mul_basis(e.mono, h);
      if (!c2) continue;
      cols[g].entries.emplace_back(r, F_.mul(c, c2));
    }
    ops_.push_back(LinearMap::from_columns(dl, std::move(cols)));
  }

  // [fD, gE] = f D(g) E - (-1)^{|fD||gE|} g E(f) D.
  table_.resize(N * N);
  Accumulator acc(N);
  for (std::uint32_t i = 0; i < N; ++i)
    for (std::uint32_t j = 0; j < N; ++j) {
      const auto& x = basis_[i];
      const auto& y = basis_[j];
      for (auto [r, c] : ops_[i].column(y.mono).entries) acc.add(F_, index_of(r, y.is_D, y.dir), c);
      const Elem sign = (parity_[i] & parity_[j]) ? 1 : F_.neg(1);
      for (auto [r, c] : ops_[j].column(x.mono).entries) acc.add(F_, index_of(r, x.is_D, x.dir), F_.mul(sign, c));
      table_[i * N + j] = acc.take();
    }

  ppow_.resize(N);
  for (std::uint32_t idx = 0; idx < N; ++idx) {
    if (parity_[idx]) continue;
    const auto& e = basis_[idx];
    const auto& mono = L_.monomial(e.mono);
    if (e.is_D) {
      if (mono.a.total() == 0 && mono.I.mask == (1u << (e.dir - 1))) ppow_[idx] = SparseVector::unit(idx);
    } else if (mono.I.mask == 0) {
      ppow_[idx] = derivation_from_operator(F_, ops_[idx].power(F_, p_));
    }
  }
}

std::uint32_t WittAlgebra::index_of(std::uint32_t mono, bool is_D, std::uint32_t dir) const {
  require(dir >= 1 && dir <= (is_D ? n_ : m_), "direction index out of range");
  const std::uint32_t d = is_D ? dir - 1 : n_ + dir - 1;
  return static_cast<std::uint32_t>(d * L_.dim() + mono);
}

std::uint32_t WittAlgebra::parity(const WittElement& x) const {
  std::uint32_t par = 3;
  for (auto [i, c] : x.entries) {
    (void)c;
    if (par == 3) par = parity_[i];
    else if (par != parity_[i]) return 2;
  }
  return par == 3 ? 0 : par;
}

int WittAlgebra::max_degree_I() const { return s(); }

int WittAlgebra::max_degree_II() const { return m_ > 0 ? static_cast<int>(n_) : static_cast<int>(n_) - 1; }

std::vector<std::uint32_t> WittAlgebra::graded_I(int k) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < dim(); ++i)
    if (degI_[i] == k) out.push_back(i);
  return out;
}

std::vector<std::uint32_t> WittAlgebra::graded_II(int k) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < dim(); ++i)
    if (degII_[i] == k) out.push_back(i);
  return out;
}

std::vector<std::uint32_t> WittAlgebra::even_basis() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < dim(); ++i)
    if (!parity_[i]) out.push_back(i);
  return out;
}

std::string WittAlgebra::label(std::uint32_t idx) const {
  const auto& e = basis_[idx];
  std::string mono = L_.label(e.mono);
  std::string dir = std::string(e.is_D ? "D{" : "d{") + std::to_string(e.dir) + "}";
  return mono == "1" ? dir : mono + "." + dir;
}

std::string WittAlgebra::label(const Field& F, const WittElement& x) const {
  if (x.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto [i, c] : x.entries) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << (F.in_prime_field(c) ? std::to_string(c) : "<" + std::to_string(c) + ">") << "*";
    os << label(i);
  }
  return os.str();
}

std::uint32_t WittAlgebra::parse(const std::string& text) const {
  const auto dot = text.rfind('.');
  const std::string tail = dot == std::string::npos ? text : text.substr(dot + 1);
  const std::string head = dot == std::string::npos ? "1" : text.substr(0, dot);
  require(tail.size() >= 4 && (tail[0] == 'D' || tail[0] == 'd') && tail[1] == '{' && tail.back() == '}',
          "malformed W basis label '" + text + "'");
  const std::string num = tail.substr(2, tail.size() - 3);
  require(!num.empty() && num.find_first_not_of("0123456789") == std::string::npos,
          "malformed W basis label '" + text + "'");
  const bool is_D = tail[0] == 'D';
  const auto dir = static_cast<std::uint32_t>(std::stoul(num));
  require(dir >= 1 && dir <= (is_D ? n_ : m_), "direction out of range in '" + text + "'");
  return index_of(L_.parse(head), is_D, dir);
}

WittElement WittAlgebra::bracket(const Field& F, const WittElement& x, const WittElement& y) const {
  require(F.p() == p_, "field characteristic mismatch");
  Accumulator acc(dim());
  for (auto [i, a] : x.entries)
    for (auto [j, b] : y.entries) acc.add_scaled(F, bracket_basis(i, j), F.mul(a, b));
  return acc.take();
}

IntRoot WittAlgebra::integer_root(std::uint32_t idx) const {
  const auto& e = basis_[idx];
  const auto& mono = L_.monomial(e.mono);
  IntRoot r(m_ + n_, 0);
  for (std::uint32_t i = 1; i <= n_; ++i) r[i - 1] = mono.I.contains(i) ? 1 : 0;
  for (std::uint32_t j = 0; j < m_; ++j) r[n_ + j] = static_cast<int>(mono.a.a[j]);
  if (e.is_D) r[e.dir - 1] -= 1;
  else r[n_ + e.dir - 1] -= 1;
  return r;
}

Weight WittAlgebra::root_of(const Field& F, std::uint32_t idx) const {
  Weight w;
  for (int c : integer_root(idx)) w.push_back(F.from_int(c));
  return w;
}

LinearMap WittAlgebra::lambda_operator(const Field& F, const WittElement& x) const {
  LinearMap out = LinearMap::zero(L_.dim());
  for (auto [i, c] : x.entries) out = out.add(F, ops_[i], c);
  return out;
}

WittElement WittAlgebra::derivation_from_operator(const Field& F, const LinearMap& op) const {
  Accumulator acc(dim());
  MultiIndex z;
  z.a.assign(m_, 0);
  for (std::uint32_t j = 1; j <= m_; ++j) {
    MultiIndex e = z;
    e.a[j - 1] = 1;
    for (auto [r, c] : op.column(L_.index_of(e, OddIndexSet{})).entries) acc.add(F, index_of(r, false, j), c);
  }
  for (std::uint32_t i = 1; i <= n_; ++i)
    for (auto [r, c] : op.column(L_.index_of(z, OddIndexSet{1u << (i - 1)})).entries)
      acc.add(F, index_of(r, true, i), c);
  WittElement y = acc.take();
  if (!(lambda_operator(F, y) == op)) fail(ErrorCode::Internal, "operator is not a derivation of Lambda(m,n)");
  return y;
}

WittElement WittAlgebra::p_power(std::uint32_t idx) const {
  require(!parity_[idx], "p-map is defined on even elements only");
  return ppow_[idx];
}

WittElement WittAlgebra::p_power(const Field& F, const WittElement& x) const {
  require(parity(x) == 0, "p-map is defined on even elements only");
  return derivation_from_operator(F, lambda_operator(F, x).power(F, p_));
}

LinearMap WittAlgebra::ad(const Field& F, const WittElement& x) const {
  std::vector<SparseVector> cols(dim());
  for (std::uint32_t j = 0; j < dim(); ++j) {
    Accumulator acc(dim());
    for (auto [i, c] : x.entries) acc.add_scaled(F, bracket_basis(i, j), c);
    cols[j] = acc.take();
  }
  return LinearMap::from_columns(dim(), std::move(cols));
}

LinearMap WittAlgebra::ad(std::uint32_t idx) const {
  std::vector<SparseVector> cols(dim());
  for (std::uint32_t j = 0; j < dim(); ++j) cols[j] = bracket_basis(idx, j);
  return LinearMap::from_columns(dim(), std::move(cols));
}

std::pair<std::uint32_t, std::uint32_t> WittAlgebra::gl_iso(std::uint32_t idx) const {
  require(degI_[idx] == 0, "gl_iso: element is not in W_[0]");
  const auto& e = basis_[idx];
  const auto& mono = L_.monomial(e.mono);
  std::uint32_t row = 0;
  if (mono.I.mask) {
    row = m_ + mono.I.indices().front() - 1;
  } else {
    for (std::uint32_t j = 0; j < m_; ++j)
      if (mono.a.a[j]) row = j;
  }
  const std::uint32_t col = e.is_D ? m_ + e.dir - 1 : e.dir - 1;
  return {row, col};
}

std::vector<Weight> WittAlgebra::atypical_set() const {
  std::set<Weight> out;
  const Elem top = p_ - 1;
  for (std::uint32_t i = 1; i <= n_; ++i)
    for (Elem a = 0; a < p_; ++a) {
      Weight w(m_ + n_, 0);
      w[i - 1] = a;
      for (std::uint32_t k = i + 1; k <= n_; ++k) w[k - 1] = 1;
      for (std::uint32_t j = 0; j < m_; ++j) w[n_ + j] = top;
      out.insert(w);
    }
  for (std::uint32_t j = 0; j <= m_; ++j) {
    Weight w(m_ + n_, 0);
    for (std::uint32_t k = j + 1; k <= m_; ++k) w[n_ + k - 1] = top;
    out.insert(w);
  }
  return {out.begin(), out.end()};
}

bool WittAlgebra::is_typical(const Weight& w) const {
  require(w.size() == m_ + n_, "weight has wrong length");
  const auto at = atypical_set();
  return std::find(at.begin(), at.end(), w) == at.end();
}

Borel WittAlgebra::borel(const std::string& label, const std::vector<int>& signs) const {
  // Positive cone of the functional
  //   phi(alpha) = sum_k (s_k N + r_k) alpha_k
  // on integer roots. N dominates so the sign follows the signed degree;
  // the r_k (powers of B, eta_1 largest) break ties, so N+_[0] stays
  // positive along the whole chain.
  const std::uint32_t rk = m_ + n_;
  require(signs.size() == rk, "sign vector has wrong length");
  const std::int64_t B = 2 * static_cast<std::int64_t>(p_) + 1;
  std::vector<std::int64_t> r(rk);
  std::int64_t pw = 1;
  for (std::uint32_t k = rk; k-- > 0;) {
    r[k] = pw;
    pw *= B;
  }
  const std::int64_t N = pw * B * B;
  Borel b;
  b.label = label;
  b.signs = signs;
  for (std::uint32_t i = 0; i < dim(); ++i) {
    if (cartan_[i]) {
      b.cartan.push_back(i);
      continue;
    }
    const auto root = integer_root(i);
    std::int64_t phi = 0;
    for (std::uint32_t k = 0; k < rk; ++k) phi += (signs[k] * N + r[k]) * root[k];
    if (phi == 0) fail(ErrorCode::Internal, "Borel functional vanishes on a root");
    (phi > 0 ? b.positive : b.negative).push_back(i);
  }
  return b;
}

BorelChain WittAlgebra::borel_chain() const {
  const std::uint32_t rk = m_ + n_;
  BorelChain chain;
  std::vector<int> signs(rk, 1);
  chain.borels.push_back(borel("B_max", signs));
  for (std::uint32_t j = m_; j >= 1; --j) {
    signs[n_ + j - 1] = -1;
    chain.borels.push_back(borel("B_" + std::to_string(j), signs));
  }
  for (std::uint32_t i = n_; i >= 1; --i) {
    signs[i - 1] = -1;
    chain.borels.push_back(borel("B'_" + std::to_string(i), signs));
  }
  return chain;
}

WittAlgebra WittAlgebra::with_corrupted_constant() const {
  WittAlgebra w = *this;
  const auto neg = graded_I(-1);
  const std::uint32_t e = neg.front(), h = toral_.front();
  const std::size_t N = dim();
  w.table_[e * N + h] = scale(F_, 2, table_[e * N + h]);
  w.table_[h * N + e] = scale(F_, 2, table_[h * N + e]);
  return w;
}

Weight weight_from_ints(const Field& F, const std::vector<long>& c) {
  Weight w;
  for (long v : c) w.push_back(F.from_int(v));
  return w;
}

Weight weight_add(const Field& F, const Weight& a, const Weight& b) {
  Weight w(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) w[i] = F.add(a[i], b[i]);
  return w;
}

Weight weight_sub(const Field& F, const Weight& a, const Weight& b) {
  Weight w(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) w[i] = F.sub(a[i], b[i]);
  return w;
}

std::string weight_string(const Field& F, const Weight& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ",";
    if (F.in_prime_field(w[i])) {
      os << w[i];
    } else {
      os << "(";
      const auto c = F.coords(w[i]);
      for (std::size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k];
      os << ")";
    }
  }
  return os.str();
}

Weight parse_weight(const Field& F, const std::string& csv, std::size_t rank) {
  Weight w;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    require(!item.empty() && item.find_first_not_of("-0123456789") == std::string::npos,
            "malformed weight '" + csv + "'");
    w.push_back(F.from_int(std::stol(item)));
  }
  require(w.size() == rank, "weight '" + csv + "' must have " + std::to_string(rank) + " coordinates");
  return w;
}

}  // namespace witt
