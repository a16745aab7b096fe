#include "pcw/intlattice.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "pcw/errors.hpp"

namespace pcw {

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

std::size_t pivot_col(const IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (m(r, j) != 0) return j;
  return m.cols();
}

}  // namespace

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<BigInt>>& rows,
                               std::size_t cols) {
  IntMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

std::vector<BigInt> IntMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

void IntMatrix::append_row(std::span<const BigInt> r) {
  if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

bool IntMatrix::row_is_zero(std::size_t i) const {
  for (std::size_t j = 0; j < cols_; ++j)
    if ((*this)(i, j) != 0) return false;
  return true;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& x) { return x == 0; });
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

HermiteForm hnf(const IntMatrix& m) {
  HermiteForm out{m, IntMatrix::identity(m.rows()), 0};
  IntMatrix& h = out.H;
  IntMatrix& u = out.U;
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    while (true) {
      // smallest nonzero |entry| in column c at or below row r
      std::size_t best = h.rows();
      for (std::size_t i = r; i < h.rows(); ++i)
        if (h(i, c) != 0 && (best == h.rows() || abs(h(i, c)) < abs(h(best, c)))) best = i;
      if (best == h.rows()) break;
      h.swap_rows(r, best);
      u.swap_rows(r, best);
      bool clear = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        BigInt q = -floor_div(h(i, c), h(r, c));
        h.add_row_multiple(i, r, q);
        u.add_row_multiple(i, r, q);
        if (h(i, c) != 0) clear = false;
      }
      if (clear) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      BigInt q = -floor_div(h(i, c), h(r, c));
      h.add_row_multiple(i, r, q);
      u.add_row_multiple(i, r, q);
    }
    ++r;
  }
  out.rank = r;
  return out;
}

std::vector<BigInt> SmithForm::diagonal() const {
  std::vector<BigInt> d;
  for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
  return d;
}

SmithForm snf(const IntMatrix& m) {
  SmithForm out{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()),
                IntMatrix::identity(m.cols()), 0};
  IntMatrix& s = out.S;
  const std::size_t rows = s.rows();
  const std::size_t cols = s.cols();

  // Column operations are mirrored on V and, inversely, on Vinv.
  auto col_add = [&](std::size_t dst, std::size_t src, const BigInt& k) {
    s.add_col_multiple(dst, src, k);
    out.V.add_col_multiple(dst, src, k);
    out.Vinv.add_row_multiple(src, dst, -k);
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    s.swap_cols(a, b);
    out.V.swap_cols(a, b);
    out.Vinv.swap_rows(a, b);
  };
  auto row_add = [&](std::size_t dst, std::size_t src, const BigInt& k) {
    s.add_row_multiple(dst, src, k);
    out.U.add_row_multiple(dst, src, k);
  };
  auto row_swap = [&](std::size_t a, std::size_t b) {
    s.swap_rows(a, b);
    out.U.swap_rows(a, b);
  };

  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    // smallest nonzero entry of the trailing block becomes the pivot
    std::size_t bi = rows, bj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (s(i, j) != 0 && (bi == rows || abs(s(i, j)) < abs(s(bi, bj)))) {
          bi = i;
          bj = j;
        }
    if (bi == rows) break;
    row_swap(t, bi);
    col_swap(t, bj);

    while (true) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s(i, t) == 0) continue;
        row_add(i, t, -floor_div(s(i, t), s(t, t)));
        if (s(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s(t, j) == 0) continue;
        col_add(j, t, -floor_div(s(t, j), s(t, t)));
        if (s(t, j) != 0) dirty = true;
      }
      if (dirty) {
        // a remainder is smaller than the pivot: move it in and repeat
        std::size_t bi2 = t, bj2 = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (s(i, t) != 0 && abs(s(i, t)) < abs(s(bi2, bj2))) { bi2 = i; bj2 = t; }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (s(t, j) != 0 && abs(s(t, j)) < abs(s(bi2, bj2))) { bi2 = t; bj2 = j; }
        row_swap(t, bi2);
        col_swap(t, bj2);
        continue;
      }
      // divisibility: the pivot must divide the whole trailing block
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      row_add(t, bad, 1);
    }
    if (s(t, t) < 0) {
      s.negate_row(t);
      out.U.negate_row(t);
    }
  }
  out.rank = t;
  return out;
}

InvariantList::InvariantList(std::vector<BigInt> divisors) : divisors_(std::move(divisors)) {
  for (std::size_t i = 0; i < divisors_.size(); ++i) {
    if (divisors_[i] < 2) throw std::invalid_argument("elementary divisor below 2");
    if (i && !mpz_divisible_p(divisors_[i].get_mpz_t(), divisors_[i - 1].get_mpz_t()))
      throw std::invalid_argument("elementary divisors do not form a chain");
  }
}

InvariantList InvariantList::from_diagonal(const std::vector<BigInt>& diag) {
  std::vector<BigInt> d;
  for (const auto& x : diag) {
    BigInt a = abs(x);
    if (a == 0) throw std::invalid_argument("infinite cyclic factor in invariant list");
    if (a != 1) d.push_back(a);
  }
  return InvariantList(std::move(d));
}

BigInt InvariantList::order() const {
  BigInt p = 1;
  for (const auto& d : divisors_) p *= d;
  return p;
}

std::string InvariantList::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const InvariantList& inv) {
  os << '[';
  for (std::size_t i = 0; i < inv.divisors().size(); ++i)
    os << (i ? "," : "") << inv.divisors()[i];
  return os << ']';
}

IntegerLattice IntegerLattice::span(const IntMatrix& generators) {
  IntegerLattice l(generators.cols());
  HermiteForm h = hnf(generators);
  for (std::size_t i = 0; i < h.rank; ++i) l.basis_.append_row(h.H.row(i));
  return l;
}

IntegerLattice IntegerLattice::span(const std::vector<std::vector<BigInt>>& generators,
                                    std::size_t dim) {
  return span(IntMatrix::from_rows(generators, dim));
}

IntegerLattice IntegerLattice::full(std::size_t dim) {
  return span(IntMatrix::identity(dim));
}

std::optional<std::vector<BigInt>> IntegerLattice::coordinates(
    std::span<const BigInt> v) const {
  if (v.size() != dim_) throw std::invalid_argument("lattice dimension mismatch");
  std::vector<BigInt> rest(v.begin(), v.end());
  std::vector<BigInt> coords(rank());
  for (std::size_t k = 0; k < rank(); ++k) {
    std::size_t p = pivot_col(basis_, k);
    // columns left of this pivot are already cleared
    for (std::size_t j = k == 0 ? 0 : pivot_col(basis_, k - 1) + 1; j < p; ++j)
      if (rest[j] != 0) return std::nullopt;
    if (!mpz_divisible_p(rest[p].get_mpz_t(), basis_(k, p).get_mpz_t())) return std::nullopt;
    BigInt c = rest[p] / basis_(k, p);
    if (c != 0)
      for (std::size_t j = p; j < dim_; ++j) rest[j] -= c * basis_(k, j);
    coords[k] = c;
  }
  for (const auto& x : rest)
    if (x != 0) return std::nullopt;
  return coords;
}

bool IntegerLattice::contains(std::span<const BigInt> v) const {
  return coordinates(v).has_value();
}

bool IntegerLattice::contains(const IntegerLattice& sub) const {
  if (sub.dim_ != dim_) throw std::invalid_argument("lattice dimension mismatch");
  for (std::size_t i = 0; i < sub.rank(); ++i)
    if (!contains(sub.basis_.row(i))) return false;
  return true;
}

std::vector<BigInt> IntegerLattice::reduce(std::span<const BigInt> v) const {
  if (v.size() != dim_) throw std::invalid_argument("lattice dimension mismatch");
  std::vector<BigInt> out(v.begin(), v.end());
  for (std::size_t k = 0; k < rank(); ++k) {
    std::size_t p = pivot_col(basis_, k);
    BigInt q = floor_div(out[p], basis_(k, p));
    if (q != 0)
      for (std::size_t j = p; j < dim_; ++j) out[j] -= q * basis_(k, j);
  }
  return out;
}

IntegerLattice lattice_sum(const IntegerLattice& a, const IntegerLattice& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("lattice dimension mismatch");
  IntMatrix stacked = a.basis();
  for (std::size_t i = 0; i < b.rank(); ++i) stacked.append_row(b.basis().row(i));
  return IntegerLattice::span(stacked);
}

bool member(const IntegerLattice& l, std::span<const BigInt> v) { return l.contains(v); }

namespace {

// Rows of b's basis written in a's basis coordinates.
IntMatrix relative_coordinates(const IntegerLattice& a, const IntegerLattice& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("lattice dimension mismatch");
  IntMatrix x(0, a.rank());
  for (std::size_t i = 0; i < b.rank(); ++i) {
    auto c = a.coordinates(b.basis().row(i));
    if (!c) throw InvalidInput("sublattice is not contained in the ambient lattice");
    x.append_row(*c);
  }
  return x;
}

}  // namespace

std::optional<BigInt> index(const IntegerLattice& a, const IntegerLattice& b) {
  IntMatrix x = relative_coordinates(a, b);
  SmithForm s = snf(x);
  if (s.rank < a.rank()) return std::nullopt;
  BigInt p = 1;
  for (std::size_t i = 0; i < s.rank; ++i) p *= s.S(i, i);
  return p;
}

IntegerLattice saturation(const IntegerLattice& l) {
  if (l.rank() == 0) return l;
  SmithForm s = snf(l.basis());
  IntMatrix rows(0, l.dim());
  for (std::size_t i = 0; i < s.rank; ++i) rows.append_row(s.Vinv.row(i));
  return IntegerLattice::span(rows);
}

InvariantList quotient_invariants(const IntegerLattice& a, const IntegerLattice& b) {
  IntMatrix x = relative_coordinates(a, b);
  SmithForm s = snf(x);
  if (s.rank < a.rank()) throw InvalidInput("quotient of lattices has infinite order");
  std::vector<BigInt> diag(s.rank);
  for (std::size_t i = 0; i < s.rank; ++i) diag[i] = s.S(i, i);
  return InvariantList::from_diagonal(diag);
}

}  // namespace pcw
