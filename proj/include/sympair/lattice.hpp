#pragma once

#include "sympair/matrix.hpp"

#include <string>
#include <vector>

namespace sympair {

// A full-rank Z-span of the columns of `basis` inside Q^ambient_dim.
class IntLattice {
 public:
  IntLattice() = default;
  explicit IntLattice(RatMatrix basis);

  static IntLattice standard(std::size_t n);
  static IntLattice from_integer(const IntMatrix& basis) { return IntLattice(to_rational(basis)); }

  std::size_t ambient_dim() const { return basis_.rows(); }
  std::size_t rank() const { return basis_.cols(); }
  const RatMatrix& basis() const { return basis_; }

  // Coordinates of v in the lattice basis; nullopt if v is outside the rational span.
  std::optional<RatVector> coordinates(const RatVector& v) const;
  bool contains(const RatVector& v) const;

  // (1/k) * this lattice.
  IntLattice refined(const Integer& k) const;

  // Volume of a fundamental domain w.r.t. the ambient coordinates; needs rank == ambient_dim.
  Rational covolume() const;

 private:
  RatMatrix basis_;
};

class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  // Any list of positive orders; normalized to the invariant-factor chain.
  static FiniteAbelianGroup from_orders(const std::vector<Integer>& orders);

  const std::vector<Integer>& invariant_factors() const { return factors_; }
  Integer order() const;
  bool is_trivial() const { return factors_.empty(); }
  std::string to_string() const;  // "trivial" or "Z/2 x Z/4"

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

 private:
  std::vector<Integer> factors_;
};

FiniteAbelianGroup direct_sum(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b);

// sup / sub. Throws if sub is not contained in sup or has smaller rank.
FiniteAbelianGroup quotient_group(const IntLattice& sup, const IntLattice& sub);

// Z^n / (column span of gens); throws if the quotient is infinite.
FiniteAbelianGroup cokernel(const IntMatrix& gens);

// Z^n intersected with the rational span of the columns of `span`.
IntLattice integer_points_of_subspace(const RatMatrix& span);

}  // namespace sympair
