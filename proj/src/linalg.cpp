#include "witt/linalg.hpp"

#include <algorithm>

namespace witt {

Elem SparseVector::at(std::uint32_t i) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), i,
                             [](const Entry& e, std::uint32_t k) { return e.first < k; });
  return (it != entries.end() && it->first == i) ? it->second : 0;
}

SparseVector SparseVector::from_dense(std::span<const Elem> dense) {
  SparseVector v;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) v.entries.emplace_back(static_cast<std::uint32_t>(i), dense[i]);
  return v;
}

std::vector<Elem> SparseVector::to_dense(std::size_t dim) const {
  std::vector<Elem> out(dim, 0);
  for (auto [i, c] : entries) out[i] = c;
  return out;
}

SparseVector axpy(const Field& F, const SparseVector& x, Elem a, const SparseVector& y) {
  if (a == 0) return x;
  SparseVector out;
  out.entries.reserve(x.nnz() + y.nnz());
  auto i = x.entries.begin(), ie = x.entries.end();
  auto j = y.entries.begin(), je = y.entries.end();
  while (i != ie || j != je) {
    if (j == je || (i != ie && i->first < j->first)) {
      out.entries.push_back(*i++);
    } else if (i == ie || j->first < i->first) {
      out.entries.emplace_back(j->first, F.mul(a, j->second));
      ++j;
    } else {
      const Elem s = F.add(i->second, F.mul(a, j->second));
      if (s != 0) out.entries.emplace_back(i->first, s);
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVector scale(const Field& F, Elem a, const SparseVector& x) {
  if (a == 0) return {};
  SparseVector out = x;
  for (auto& e : out.entries) e.second = F.mul(a, e.second);
  return out;
}

void Accumulator::add(const Field& F, std::uint32_t i, Elem v) {
  if (v == 0) return;
  if (!seen_[i]) {
    seen_[i] = 1;
    touched_.push_back(i);
  }
  val_[i] = F.add(val_[i], v);
}

void Accumulator::add_scaled(const Field& F, const SparseVector& x, Elem a) {
  if (a == 0) return;
  for (auto [i, c] : x.entries) add(F, i, F.mul(a, c));
}

SparseVector Accumulator::take() {
  std::sort(touched_.begin(), touched_.end());
  SparseVector out;
  for (auto i : touched_) {
    if (val_[i] != 0) out.entries.emplace_back(i, val_[i]);
    val_[i] = 0;
    seen_[i] = 0;
  }
  touched_.clear();
  return out;
}

LinearMap LinearMap::identity(std::size_t n) { return scalar(n, 1); }

LinearMap LinearMap::scalar(std::size_t n, Elem c) {
  LinearMap m(n, n);
  m.col_.resize(n);
  if (c != 0)
    for (std::size_t i = 0; i < n; ++i) m.col_[i].entries.emplace_back(static_cast<std::uint32_t>(i), c);
  return m;
}

LinearMap LinearMap::from_columns(std::size_t rows, std::vector<SparseVector> cols) {
  LinearMap m(rows, cols.size());
  m.col_ = std::move(cols);
  return m;
}

std::size_t LinearMap::nnz() const {
  std::size_t n = 0;
  for (const auto& c : col_) n += c.nnz();
  return n;
}

SparseVector LinearMap::apply(const Field& F, const SparseVector& v) const {
  if (v.nnz() == 1) return scale(F, v.entries[0].second, col_[v.entries[0].first]);
  Accumulator acc(rows_);
  for (auto [j, c] : v.entries) acc.add_scaled(F, col_[j], c);
  return acc.take();
}

LinearMap LinearMap::compose(const Field& F, const LinearMap& rhs) const {
  require(cols_ == rhs.rows_, "compose: dimension mismatch");
  LinearMap out(rows_, rhs.cols_);
  out.col_.resize(rhs.cols_);
  Accumulator acc(rows_);
  for (std::size_t j = 0; j < rhs.cols_; ++j) {
    for (auto [k, c] : rhs.col_[j].entries) acc.add_scaled(F, col_[k], c);
    out.col_[j] = acc.take();
  }
  return out;
}

LinearMap LinearMap::add(const Field& F, const LinearMap& rhs, Elem a) const {
  require(rows_ == rhs.rows_ && cols_ == rhs.cols_, "add: dimension mismatch");
  LinearMap out(rows_, cols_);
  out.col_.resize(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.col_[j] = axpy(F, col_[j], a, rhs.col_[j]);
  return out;
}

LinearMap LinearMap::transpose() const {
  std::vector<SparseVector> cols(rows_);
  for (std::size_t j = 0; j < cols_; ++j)
    for (auto [i, c] : col_[j].entries) cols[i].entries.emplace_back(static_cast<std::uint32_t>(j), c);
  return from_columns(cols_, std::move(cols));
}

LinearMap LinearMap::power(const Field& F, std::uint64_t e) const {
  require(rows_ == cols_, "power: map must be square");
  LinearMap r = identity(rows_), base = *this;
  while (e) {
    if (e & 1) r = r.compose(F, base);
    e >>= 1;
    if (e) base = base.compose(F, base);
  }
  return r;
}

bool LinearMap::is_zero() const {
  return std::all_of(col_.begin(), col_.end(), [](const SparseVector& c) { return c.empty(); });
}

std::vector<std::uint32_t> Subspace::pivots() const {
  std::vector<std::uint32_t> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.entries.front().first);
  return out;
}

SparseVector Subspace::reduce(const SparseVector& v) const {
  if (rows_.empty() || v.empty()) return v;
  SparseVector out = v;
  // Rows only have support at columns >= their pivot, so entries before idx
  // never change once passed.
  for (std::size_t idx = 0; idx < out.entries.size();) {
    const auto [i, c] = out.entries[idx];
    const int r = pivot_row_[i];
    if (r < 0) {
      ++idx;
      continue;
    }
    out = axpy(F_, out, F_.neg(c), rows_[static_cast<std::size_t>(r)]);
  }
  return out;
}

SparseVector Subspace::insert(const SparseVector& v) {
  SparseVector r = reduce(v);
  if (r.empty()) return r;
  const std::uint32_t piv = r.entries.front().first;
  SparseVector row = scale(F_, F_.inv(r.entries.front().second), r);
  for (auto& other : rows_) {
    const Elem c = other.at(piv);
    if (c != 0) other = axpy(F_, other, F_.neg(c), row);
  }
  auto pos = std::lower_bound(rows_.begin(), rows_.end(), piv,
                              [](const SparseVector& s, std::uint32_t p) { return s.entries.front().first < p; });
  rows_.insert(pos, std::move(row));
  for (std::size_t i = 0; i < rows_.size(); ++i) pivot_row_[rows_[i].entries.front().first] = static_cast<int>(i);
  return r;
}

Subspace rref(const Field& F, std::size_t ambient, std::span<const SparseVector> vectors) {
  Subspace s(F, ambient);
  for (const auto& v : vectors) {
    require(v.empty() || v.entries.back().first < ambient, "rref: vector exceeds ambient dimension");
    s.insert(v);
  }
  return s;
}

Subspace column_kernel(const Field& F, std::span<const SparseVector> cols, std::size_t rows) {
  const std::size_t n = cols.size();
  Subspace work(F, rows + n);
  for (std::size_t i = 0; i < n; ++i) {
    SparseVector aug = cols[i];
    aug.entries.emplace_back(static_cast<std::uint32_t>(rows + i), 1);
    work.insert(aug);
  }
  Subspace ker(F, n);
  for (const auto& r : work.basis()) {
    if (r.entries.front().first < rows) continue;
    SparseVector y;
    for (auto [i, c] : r.entries) y.entries.emplace_back(static_cast<std::uint32_t>(i - rows), c);
    ker.insert(y);
  }
  return ker;
}

Subspace solve_null(const Field& F, std::size_t ambient, std::span<const LinearMap* const> ops,
                    std::span<const EigenConstraint> constraints, const Subspace* within) {
  std::vector<SparseVector> trial;
  if (within) {
    trial = within->basis();
  } else {
    for (std::size_t j = 0; j < ambient; ++j) trial.push_back(SparseVector::unit(static_cast<std::uint32_t>(j)));
  }
  // Column for each trial vector: concatenation of all constraint images.
  std::vector<SparseVector> cols;
  cols.reserve(trial.size());
  for (const auto& v : trial) {
    SparseVector col;
    std::size_t off = 0;
    for (const auto* op : ops) {
      require(op->cols() == ambient, "solve_null: operator dimension mismatch");
      for (auto [i, c] : op->apply(F, v).entries) col.entries.emplace_back(static_cast<std::uint32_t>(off + i), c);
      off += op->rows();
    }
    for (const auto& ec : constraints) {
      SparseVector img = axpy(F, ec.op->apply(F, v), F.neg(ec.value), v);
      for (auto [i, c] : img.entries) col.entries.emplace_back(static_cast<std::uint32_t>(off + i), c);
      off += ambient;
    }
    cols.push_back(std::move(col));
  }
  std::size_t total_rows = 0;
  for (const auto* op : ops) total_rows += op->rows();
  total_rows += constraints.size() * ambient;
  Subspace ker = column_kernel(F, cols, total_rows);
  Subspace out(F, ambient);
  Accumulator acc(ambient);
  for (const auto& y : ker.basis()) {
    for (auto [i, c] : y.entries) acc.add_scaled(F, trial[i], c);
    out.insert(acc.take());
  }
  return out;
}

Subspace spin(const Field& F, std::size_t ambient, std::span<const SparseVector> seed,
              std::span<const LinearMap* const> generators) {
  Subspace s(F, ambient);
  std::vector<SparseVector> added;
  for (const auto& v : seed) {
    auto r = s.insert(v);
    if (!r.empty()) added.push_back(std::move(r));
  }
  for (std::size_t next = 0; next < added.size() && !s.is_full(); ++next) {
    for (const auto* g : generators) {
      auto r = s.insert(g->apply(F, added[next]));
      if (!r.empty()) added.push_back(std::move(r));
      if (s.is_full()) break;
    }
  }
  return s;
}

}  // namespace witt
