#include "sympair/matrix.hpp"

namespace sympair {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!is_integral(m(i, j))) throw std::invalid_argument("to_integer: non-integral entry " + to_string(m(i, j)));
      r(i, j) = boost::multiprecision::numerator(m(i, j));
    }
  return r;
}

RatMatrix hstack(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row count mismatch");
  RatMatrix c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

RatMatrix rref(RatMatrix m, std::vector<std::size_t>* pivots) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  if (pivots) *pivots = std::move(piv);
  return m;
}

std::size_t rank(const RatMatrix& m) {
  std::vector<std::size_t> piv;
  rref(m, &piv);
  return piv.size();
}

Rational determinant(RatMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      m.swap_rows(p, c);
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      const Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

Integer determinant(const IntMatrix& m) {
  const Rational d = determinant(to_rational(m));
  return boost::multiprecision::numerator(d);
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = m.rows();
  std::vector<std::size_t> piv;
  RatMatrix aug = rref(hstack(m, RatMatrix::identity(n)), &piv);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: size mismatch");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  std::vector<std::size_t> piv;
  aug = rref(std::move(aug), &piv);
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
  RatVector x(a.cols(), Rational(0));
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, a.cols());
  return x;
}

RatMatrix kernel(const RatMatrix& m) {
  std::vector<std::size_t> piv;
  const RatMatrix r = rref(m, &piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(m.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t row = 0; row < piv.size(); ++row) v[piv[row]] = -r(row, f);
    basis.push_back(std::move(v));
  }
  return RatMatrix::from_columns(m.cols(), basis);
}

RatMatrix column_basis(const RatMatrix& m) {
  std::vector<std::size_t> piv;
  rref(m, &piv);
  std::vector<RatVector> cols;
  for (auto p : piv) cols.push_back(m.col(p));
  return RatMatrix::from_columns(m.rows(), cols);
}

namespace {

template <class T>
std::string matrix_text(const Matrix<T>& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += ", ";
    out += "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += to_string(m(i, j));
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace

std::string to_string(const RatMatrix& m) { return matrix_text(m); }
std::string to_string(const IntMatrix& m) { return matrix_text(m); }

}  // namespace sympair
