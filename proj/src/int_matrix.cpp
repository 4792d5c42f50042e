#include "logcy/int_matrix.hpp"

#include "logcy/error.hpp"

#include <utility>

namespace logcy {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DomainError("IntMatrix: ragged initializer");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DomainError("IntMatrix::from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols, std::size_t rows) {
  IntMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DomainError("IntMatrix::from_columns: ragged columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

IntVector IntMatrix::apply(const IntVector& x) const {
  if (x.size() != cols_) throw DomainError("IntMatrix::apply: dimension mismatch");
  IntVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn(x[c]) != 0) y[r] += (*this)(r, c) * x[c];
  return y;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("IntMatrix product: dimension mismatch");
  IntMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += x * b(k, j);
    }
  return p;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, const BigInt& k) {
  if (sgn(k) == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, const BigInt& k) {
  if (sgn(k) == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
    os << ']';
  }
  return os << ']';
}

BigInt dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DomainError("dot: dimension mismatch");
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

BigInt gcd_of(const IntVector& v) {
  BigInt g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of non-square matrix");
  // Bareiss fraction-free elimination.
  std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a(p, k)) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<BigInt> SnfDecomposition::diagonal() const {
  std::vector<BigInt> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

namespace {

// Truncating division; the elimination only needs |remainder| < |pivot|.
BigInt quotient(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SnfDecomposition snf(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  IntMatrix d = a, u = IntMatrix::identity(m), v = IntMatrix::identity(n);
  std::size_t t = 0;

  while (t < m && t < n) {
    // Pick the nonzero entry of least magnitude in the trailing block.
    std::size_t pr = m, pc = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (sgn(d(i, j)) != 0 && (pr == m || abs(d(i, j)) < abs(d(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr == m) break;
    d.swap_rows(t, pr);
    u.swap_rows(t, pr);
    d.swap_cols(t, pc);
    v.swap_cols(t, pc);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(d(i, t)) == 0) continue;
        BigInt q = quotient(d(i, t), d(t, t));
        d.add_row(i, t, -q);
        u.add_row(i, t, -q);
        if (sgn(d(i, t)) != 0) {
          d.swap_rows(t, i);
          u.swap_rows(t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(d(t, j)) == 0) continue;
        BigInt q = quotient(d(t, j), d(t, t));
        d.add_col(j, t, -q);
        v.add_col(j, t, -q);
        if (sgn(d(t, j)) != 0) {
          d.swap_cols(t, j);
          v.swap_cols(t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // Divisibility: the pivot must divide the whole trailing block.
      for (std::size_t i = t + 1; i < m && clean; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            d.add_row(t, i, 1);
            u.add_row(t, i, 1);
            clean = false;
            break;
          }
        }
    }
    if (sgn(d(t, t)) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
    ++t;
  }
  return {std::move(u), std::move(d), std::move(v), t};
}

std::size_t rank(const IntMatrix& a) { return snf(a).rank; }

std::vector<IntVector> kernel_basis(const IntMatrix& a) {
  // A V = U^{-1} D, so the columns of V past the rank span ker A; V unimodular
  // makes that span saturated.
  SnfDecomposition s = snf(a);
  std::vector<IntVector> basis;
  for (std::size_t j = s.rank; j < a.cols(); ++j) basis.push_back(s.V.column(j));
  return basis;
}

CokernelStructure cokernel_structure(const IntMatrix& a) {
  SnfDecomposition s = snf(a);
  CokernelStructure c;
  c.free_rank = a.rows() - s.rank;
  for (std::size_t i = 0; i < s.rank; ++i)
    if (s.D(i, i) != 1) c.torsion.push_back(s.D(i, i));
  return c;
}

std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows()) throw DomainError("solve_integer: dimension mismatch");
  // U A V = D: solve D y = U b, x = V y.
  SnfDecomposition s = snf(a);
  IntVector ub = s.U.apply(b);
  IntVector y(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i < s.rank) {
      if (!mpz_divisible_p(ub[i].get_mpz_t(), s.D(i, i).get_mpz_t())) return std::nullopt;
      mpz_divexact(y[i].get_mpz_t(), ub[i].get_mpz_t(), s.D(i, i).get_mpz_t());
    } else if (sgn(ub[i]) != 0) {
      return std::nullopt;
    }
  }
  return s.V.apply(y);
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
  if (u.rows() != u.cols()) throw DomainError("unimodular_inverse: matrix not square");
  std::vector<IntVector> cols;
  for (std::size_t i = 0; i < u.rows(); ++i) {
    IntVector e(u.rows());
    e[i] = 1;
    auto x = solve_integer(u, e);
    if (!x) throw DomainError("unimodular_inverse: matrix not unimodular");
    cols.push_back(std::move(*x));
  }
  return IntMatrix::from_columns(cols, u.rows());
}

GaussianRational evaluate_monomial(const std::vector<GaussianRational>& values, const IntVector& exponents) {
  if (values.size() != exponents.size()) throw DomainError("evaluate_monomial: dimension mismatch");
  GaussianRational r(1);
  for (std::size_t j = 0; j < values.size(); ++j)
    if (sgn(exponents[j]) != 0) r *= pow(values[j], exponents[j]);
  return r;
}

TorusSolvability solvable_over_torus(const IntMatrix& a, const std::vector<GaussianRational>& targets) {
  if (targets.size() != a.rows()) throw DomainError("solvable_over_torus: one target per row expected");
  for (const auto& t : targets)
    if (t.is_zero()) throw DomainError("solvable_over_torus: target 0 is not in C^x");
  for (const auto& rel : kernel_basis(a.transpose()))
    if (!evaluate_monomial(targets, rel).is_one()) return {false, rel};
  return {true, {}};
}

TorusSolution solve_over_torus(const IntMatrix& a, const std::vector<GaussianRational>& targets) {
  TorusSolution out;
  out.solvability = solvable_over_torus(a, targets);
  if (!out.solvability.solvable) return out;

  // Multiplicatively: with x = V.y, A x = U^{-1} D y, so y_i^{d_i} = (U t)_i.
  SnfDecomposition s = snf(a);
  std::vector<GaussianRational> y(a.cols(), GaussianRational(1));
  for (std::size_t i = 0; i < s.rank; ++i) {
    GaussianRational rhs = evaluate_monomial(targets, s.U.row(i));
    auto root = nth_root(rhs, s.D(i, i).get_ui());
    if (!root) return out;
    y[i] = *root;
  }
  std::vector<GaussianRational> x(a.cols());
  for (std::size_t e = 0; e < a.cols(); ++e) x[e] = evaluate_monomial(y, s.V.row(e));
  out.values = std::move(x);
  return out;
}

}  // namespace logcy
