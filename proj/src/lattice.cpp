#include "sympair/lattice.hpp"

#include "sympair/smith.hpp"

#include <algorithm>
#include <stdexcept>

namespace sympair {

IntLattice::IntLattice(RatMatrix basis) : basis_(std::move(basis)) {
  if (sympair::rank(basis_) != basis_.cols()) throw std::invalid_argument("IntLattice: basis columns are linearly dependent");
}

IntLattice IntLattice::standard(std::size_t n) { return IntLattice(RatMatrix::identity(n)); }

std::optional<RatVector> IntLattice::coordinates(const RatVector& v) const { return solve(basis_, v); }

bool IntLattice::contains(const RatVector& v) const {
  const auto c = coordinates(v);
  if (!c) return false;
  for (const auto& x : *c)
    if (!is_integral(x)) return false;
  return true;
}

IntLattice IntLattice::refined(const Integer& k) const {
  if (k <= 0) throw std::invalid_argument("refined: k must be positive");
  RatMatrix b = basis_;
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) /= Rational(k);
  return IntLattice(std::move(b));
}

Rational IntLattice::covolume() const {
  if (rank() != ambient_dim()) throw std::invalid_argument("covolume: lattice is not full rank");
  const Rational d = determinant(basis_);
  return d < 0 ? Rational(-d) : d;
}

FiniteAbelianGroup FiniteAbelianGroup::from_orders(const std::vector<Integer>& orders) {
  IntMatrix diag(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] <= 0) throw std::invalid_argument("FiniteAbelianGroup: orders must be positive");
    diag(i, i) = orders[i];
  }
  FiniteAbelianGroup g;
  for (const auto& d : smith_diagonal(diag))
    if (d > 1) g.factors_.push_back(d);
  return g;
}

Integer FiniteAbelianGroup::order() const {
  Integer o = 1;
  for (const auto& d : factors_) o *= d;
  return o;
}

std::string FiniteAbelianGroup::to_string() const {
  if (factors_.empty()) return "trivial";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += " x ";
    out += "Z/" + factors_[i].str();
  }
  return out;
}

FiniteAbelianGroup direct_sum(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
  std::vector<Integer> all = a.invariant_factors();
  all.insert(all.end(), b.invariant_factors().begin(), b.invariant_factors().end());
  return FiniteAbelianGroup::from_orders(all);
}

FiniteAbelianGroup cokernel(const IntMatrix& gens) {
  const auto d = smith_diagonal(gens);
  std::size_t nonzero = 0;
  std::vector<Integer> orders;
  for (const auto& x : d)
    if (x != 0) {
      ++nonzero;
      orders.push_back(x);
    }
  if (nonzero < gens.rows()) throw std::invalid_argument("cokernel: quotient is infinite");
  return FiniteAbelianGroup::from_orders(orders);
}

FiniteAbelianGroup quotient_group(const IntLattice& sup, const IntLattice& sub) {
  if (sup.ambient_dim() != sub.ambient_dim()) throw std::invalid_argument("quotient_group: ambient dimension mismatch");
  if (sup.rank() != sub.rank()) throw std::invalid_argument("quotient_group: infinite index (rank mismatch)");
  IntMatrix coords(sup.rank(), sub.rank());
  for (std::size_t j = 0; j < sub.rank(); ++j) {
    const auto c = sup.coordinates(sub.basis().col(j));
    if (!c) throw std::invalid_argument("quotient_group: sub is not inside the span of sup");
    for (std::size_t i = 0; i < sup.rank(); ++i) {
      if (!is_integral((*c)[i])) throw std::invalid_argument("quotient_group: sub is not contained in sup");
      coords(i, j) = boost::multiprecision::numerator((*c)[i]);
    }
  }
  return cokernel(coords);
}

IntLattice integer_points_of_subspace(const RatMatrix& span) {
  const std::size_t n = span.rows();
  // equations of the subspace: rows of a basis of the left kernel
  const RatMatrix eq = kernel(span.transpose()).transpose();
  if (eq.rows() == 0) return IntLattice::standard(n);
  return IntLattice::from_integer(integer_kernel(clear_row_denominators(eq)));
}

}  // namespace sympair
