#pragma once

#include "sympair/gamma.hpp"
#include "sympair/polytope.hpp"

#include <optional>

namespace sympair {

// Coordinates of a point of V_M in a basis of a lattice of V_M.
RatVector lattice_coordinates(const IntLattice& lattice, const RatVector& v);

// The lattice of V_M declared to have covolume one: the override if given, else the
// normalization lattice intersected with V_M.
const IntLattice& measure_lattice(const OrthogonalSet& y, const std::optional<IntLattice>& lattice);

Polytope hull_polytope(const OrthogonalSet& y, const std::optional<IntLattice>& lattice = std::nullopt);

// Volume of the convex hull of the Y_P; rejects non-positive sets.
Rational volume_polytope(const OrthogonalSet& y, const std::optional<IntLattice>& lattice = std::nullopt);

struct AnalyticVolume {
  Rational value;
  std::vector<RatVector> directions;  // generic directions used
  std::vector<Rational> values;       // one limit per direction
  std::size_t skipped = 0;            // non-generic directions passed over
  bool consistent = true;             // all directions agree
  bool lower_terms_vanish = true;     // the negative powers of t cancel
};

// The k-th direction of the fixed sequence (1, k+2, (k+2)^2, ...).
RatVector analytic_direction(std::size_t dim, std::size_t k);

// Limit at 0 of sum_P e^{<l, Y_P>} c_P / prod <l, a^vee> along l = t * mu, read off exactly
// as the t^0 coefficient; c_P is the covolume of the coroot lattice of P.
AnalyticVolume volume_analytic(const OrthogonalSet& y, std::size_t directions = 3,
                               const std::optional<IntLattice>& lattice = std::nullopt);

struct HullCoherenceReport {
  std::size_t agree = 0, disagree = 0, boundary = 0;
  std::vector<RatVector> witnesses;
  bool ok() const { return disagree == 0; }
};
// gamma^G_M(H, Y) against exact hull membership, skipping points on the hull boundary.
HullCoherenceReport hull_coherence_check(const OrthogonalSet& y, const std::vector<RatVector>& points);

}  // namespace sympair
