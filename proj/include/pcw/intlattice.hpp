#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace pcw {

using BigInt = mpz_class;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows,
                             std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::vector<BigInt> row(std::size_t i) const;
  void append_row(std::span<const BigInt> r);
  bool row_is_zero(std::size_t i) const;
  bool is_zero() const;

  // Elementary operations. All are invertible over Z.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);
  // row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k);
  // col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k);

  IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Exact determinant (fraction-free Bareiss elimination).
BigInt determinant(const IntMatrix& m);

struct HermiteForm {
  IntMatrix H;  // row HNF, zero rows at the bottom
  IntMatrix U;  // unimodular, U * M = H
  std::size_t rank = 0;
};

/// Row Hermite normal form: positive pivots, entries above each pivot
/// reduced into [0, pivot).
HermiteForm hnf(const IntMatrix& m);

struct SmithForm {
  IntMatrix S;     // diagonal, d1 | d2 | ..., nonnegative
  IntMatrix U;     // rows x rows, unimodular
  IntMatrix V;     // cols x cols, unimodular, U * M * V = S
  IntMatrix Vinv;  // inverse of V
  std::size_t rank = 0;

  std::vector<BigInt> diagonal() const;
};

/// Smith normal form with smallest-magnitude pivoting.
SmithForm snf(const IntMatrix& m);

/// Elementary divisors d1 | d2 | ... of a finite abelian group, all >= 2.
class InvariantList {
 public:
  InvariantList() = default;
  explicit InvariantList(std::vector<BigInt> divisors);
  // Drops unit entries; rejects zero entries and broken divisibility chains.
  static InvariantList from_diagonal(const std::vector<BigInt>& diag);

  const std::vector<BigInt>& divisors() const { return divisors_; }
  bool trivial() const { return divisors_.empty(); }
  BigInt order() const;
  std::string str() const;  // "[3,3]"

  bool operator==(const InvariantList& rhs) const = default;

 private:
  std::vector<BigInt> divisors_;
};

std::ostream& operator<<(std::ostream& os, const InvariantList& inv);

/// A subgroup of Z^m stored by its canonical row-HNF basis.
class IntegerLattice {
 public:
  explicit IntegerLattice(std::size_t dim = 0) : dim_(dim), basis_(0, dim) {}
  // Lattice spanned by the rows of `generators` (need not be independent).
  static IntegerLattice span(const IntMatrix& generators);
  static IntegerLattice span(const std::vector<std::vector<BigInt>>& generators,
                             std::size_t dim);
  static IntegerLattice full(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }

  bool contains(std::span<const BigInt> v) const;
  bool contains(const IntegerLattice& sub) const;
  // Canonical representative of v + L.
  std::vector<BigInt> reduce(std::span<const BigInt> v) const;

  // Coordinates of v in the basis, or nullopt if v is not in the lattice.
  std::optional<std::vector<BigInt>> coordinates(std::span<const BigInt> v) const;

  bool operator==(const IntegerLattice& rhs) const = default;

 private:
  std::size_t dim_;
  IntMatrix basis_;
};

IntegerLattice lattice_sum(const IntegerLattice& a, const IntegerLattice& b);
bool member(const IntegerLattice& l, std::span<const BigInt> v);

/// [A : B] for B a sublattice of A; nullopt when the index is infinite.
std::optional<BigInt> index(const IntegerLattice& a, const IntegerLattice& b);

/// Smallest S containing L with Z^m / S torsion-free.
IntegerLattice saturation(const IntegerLattice& l);

/// Elementary divisors of A / B for B a finite-index sublattice of A.
InvariantList quotient_invariants(const IntegerLattice& a, const IntegerLattice& b);

}  // namespace pcw
