#include "sympair/smith.hpp"

#include <utility>

namespace sympair {

namespace {

void add_row_multiple(IntMatrix& a, std::size_t dst, std::size_t src, const Integer& f) {
  for (std::size_t j = 0; j < a.cols(); ++j) a(dst, j) += f * a(src, j);
}

void add_col_multiple(IntMatrix& a, std::size_t dst, std::size_t src, const Integer& f) {
  for (std::size_t i = 0; i < a.rows(); ++i) a(i, dst) += f * a(i, src);
}

Integer abs_of(const Integer& x) { return x < 0 ? Integer(-x) : x; }

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SmithForm s{IntMatrix::identity(rows), m, IntMatrix::identity(cols)};
  IntMatrix& D = s.D;
  const std::size_t steps = std::min(rows, cols);

  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // column-major scan gives leftmost, then uppermost, among equal magnitudes
      bool found = false;
      std::size_t pr = 0, pc = 0;
      Integer best;
      for (std::size_t j = t; j < cols; ++j)
        for (std::size_t i = t; i < rows; ++i) {
          if (D(i, j) == 0) continue;
          Integer a = abs_of(D(i, j));
          if (!found || a < best) {
            found = true;
            best = a;
            pr = i;
            pc = j;
          }
        }
      if (!found) return s;

      D.swap_rows(t, pr);
      s.U.swap_rows(t, pr);
      D.swap_cols(t, pc);
      s.V.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (D(i, t) == 0) continue;
        Integer q = D(i, t) / D(t, t);
        add_row_multiple(D, i, t, -q);
        add_row_multiple(s.U, i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (D(t, j) == 0) continue;
        Integer q = D(t, j) / D(t, t);
        add_col_multiple(D, j, t, -q);
        add_col_multiple(s.V, j, t, -q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divides_all = true;
      for (std::size_t i = t + 1; i < rows && divides_all; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (D(i, j) % D(t, t) != 0) {
            add_row_multiple(D, t, i, Integer(1));
            add_row_multiple(s.U, t, i, Integer(1));
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    if (D(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) D(t, j) = -D(t, j);
      for (std::size_t j = 0; j < rows; ++j) s.U(t, j) = -s.U(t, j);
    }
  }
  return s;
}

std::vector<Integer> smith_diagonal(const IntMatrix& m) {
  const SmithForm s = smith_normal_form(m);
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) d.push_back(s.D(i, i));
  return d;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  const SmithForm s = smith_normal_form(m);
  std::size_t r = 0;
  while (r < std::min(m.rows(), m.cols()) && s.D(r, r) != 0) ++r;
  IntMatrix k(m.cols(), m.cols() - r);
  for (std::size_t j = r; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.cols(); ++i) k(i, j - r) = s.V(i, j);
  return k;
}

IntMatrix clear_row_denominators(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(m(i, j)));
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational v = m(i, j) * l;
      out(i, j) = boost::multiprecision::numerator(v);
    }
  }
  return out;
}

}  // namespace sympair
