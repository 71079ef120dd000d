#pragma once

#include "sympair/volume.hpp"

#include <cstdint>
#include <optional>

namespace sympair {

// rho^vee if it lies in the normalization lattice, otherwise 2 rho^vee.
RatVector default_dilation_direction(const Fan& fan);

// Number of H in (1/refine) L with gamma^G_M(H, Y) = 1, L the measure lattice of V_M.
std::int64_t count_gamma_points(const OrthogonalSet& y, std::int64_t refine = 1,
                                const std::optional<IntLattice>& lattice = std::nullopt);

// The count for Y + Y[j X0]; Y must be positive and X0 in the closed positive chamber.
std::int64_t v_tilde_lattice(const OrthogonalSet& y, std::int64_t j, const RatVector& x0, std::int64_t refine = 1,
                             const std::optional<IntLattice>& lattice = std::nullopt);

// q(j) = coeffs[j mod period] evaluated at j; one polynomial per residue class.
struct QuasiPolynomial {
  std::size_t period = 1;
  std::size_t degree = 0;
  std::vector<std::vector<Rational>> coeffs;  // ascending powers

  Rational operator()(std::int64_t j) const;
  // Constant term of the purely polynomial part: the mean of the q_r(0).
  Rational constant_term() const;
};

// Fits samples[j] (j = 0, 1, ...) by a quasi-polynomial of the given degree, trying periods
// 1..max_period in turn; each residue class is interpolated on degree+1 values and must match
// every further sample. Throws when some period lacks a verifying sample; nullopt if none fits.
std::optional<QuasiPolynomial> fit_quasi_polynomial(const std::vector<Integer>& samples, std::size_t degree,
                                                    std::size_t max_period);

// Constant term of the fitted quasi-polynomial; throws if no fit exists.
Rational exp_poly_constant_term(const std::vector<Integer>& samples, std::size_t degree, std::size_t max_period = 2);

struct ApproximationRow {
  std::int64_t refine = 1;
  std::vector<Integer> counts;  // v_tilde for j = 0, 1, ...
  std::optional<QuasiPolynomial> fit;
  Rational normalized;          // constant term / refine^d
  Rational error;               // |normalized - volume|
};

struct ApproximationReport {
  Rational volume;
  std::size_t degree = 0;
  std::vector<ApproximationRow> rows;
  Rational c_fit;    // max over rows of refine * error
  Rational c_bound;  // sum over facets F of vol(F + [-1,1]^d), or vol(K + [-1,1]^d) if K is degenerate
  bool fits_exact() const;
  bool ok() const { return fits_exact() && c_fit <= c_bound; }
};

// Refinements 1..kmax of the measure lattice; per refinement, samples j = 0..period*(d+2)-1.
ApproximationReport approximation_check(const OrthogonalSet& y, std::int64_t kmax, const RatVector& x0,
                                        std::size_t max_period = 2);

}  // namespace sympair
