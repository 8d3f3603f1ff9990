#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "witt/field.hpp"

namespace witt {

/// Sparse vector: strictly increasing indices, no stored zeros.
struct SparseVector {
  using Entry = std::pair<std::uint32_t, Elem>;
  std::vector<Entry> entries;

  bool empty() const { return entries.empty(); }
  std::size_t nnz() const { return entries.size(); }
  Elem at(std::uint32_t i) const;
  bool operator==(const SparseVector&) const = default;

  static SparseVector unit(std::uint32_t i) { return SparseVector{{{i, 1}}}; }
  static SparseVector from_dense(std::span<const Elem> dense);
  std::vector<Elem> to_dense(std::size_t dim) const;
};

SparseVector axpy(const Field& F, const SparseVector& x, Elem a, const SparseVector& y);  // x + a*y
SparseVector scale(const Field& F, Elem a, const SparseVector& x);

/// Dense scratch accumulator that remembers its touched indices.
class Accumulator {
 public:
  explicit Accumulator(std::size_t dim) : val_(dim, 0), seen_(dim, 0) {}
  void add(const Field& F, std::uint32_t i, Elem v);
  void add_scaled(const Field& F, const SparseVector& x, Elem a);
  SparseVector take();  // returns contents and clears

 private:
  std::vector<Elem> val_;
  std::vector<std::uint8_t> seen_;
  std::vector<std::uint32_t> touched_;
};

/// Linear map stored column-sparse: column j is the image of basis vector j.
class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  static LinearMap zero(std::size_t n) { LinearMap m(n, n); m.col_.resize(n); return m; }
  static LinearMap identity(std::size_t n);
  static LinearMap scalar(std::size_t n, Elem c);
  static LinearMap from_columns(std::size_t rows, std::vector<SparseVector> cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const SparseVector& column(std::size_t j) const { return col_[j]; }
  std::size_t nnz() const;

  SparseVector apply(const Field& F, const SparseVector& v) const;
  LinearMap compose(const Field& F, const LinearMap& rhs) const;  // this * rhs
  LinearMap add(const Field& F, const LinearMap& rhs, Elem a = 1) const;  // this + a*rhs
  LinearMap transpose() const;
  LinearMap power(const Field& F, std::uint64_t e) const;
  bool is_zero() const;
  bool operator==(const LinearMap& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && col_ == o.col_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<SparseVector> col_;
};

/// Subspace kept in reduced row-echelon form with lowest-index pivots.
class Subspace {
 public:
  Subspace() = default;
  Subspace(Field F, std::size_t ambient) : F_(std::move(F)), ambient_(ambient), pivot_row_(ambient, -1) {}

  const Field& field() const { return F_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  bool is_full() const { return rows_.size() == ambient_; }
  const std::vector<SparseVector>& basis() const { return rows_; }
  std::vector<std::uint32_t> pivots() const;

  /// v reduced modulo the subspace (zero iff v is a member).
  SparseVector reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }
  /// Inserts v; returns the reduced (pre-normalisation) vector if the
  /// dimension grew, empty otherwise.
  SparseVector insert(const SparseVector& v);

  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && rows_ == o.rows_; }

 private:
  Field F_;
  std::size_t ambient_ = 0;
  std::vector<SparseVector> rows_;  // sorted by pivot
  std::vector<int> pivot_row_;
};

Subspace rref(const Field& F, std::size_t ambient, std::span<const SparseVector> vectors);

/// {y : sum_i y_i cols[i] = 0}, a subspace of F^{cols.size()}.
Subspace column_kernel(const Field& F, std::span<const SparseVector> cols, std::size_t rows);

/// Eigen-constraint h v = value v used by solve_null.
struct EigenConstraint {
  const LinearMap* op;
  Elem value;
};

/// {v : N v = 0 for every N in ops, h v = c v for every constraint}.
/// When `within` is given the search is restricted to that subspace.
Subspace solve_null(const Field& F, std::size_t ambient, std::span<const LinearMap* const> ops,
                    std::span<const EigenConstraint> constraints = {},
                    const Subspace* within = nullptr);

/// Smallest subspace containing the seed and stable under every generator.
Subspace spin(const Field& F, std::size_t ambient, std::span<const SparseVector> seed,
              std::span<const LinearMap* const> generators);

}  // namespace witt
