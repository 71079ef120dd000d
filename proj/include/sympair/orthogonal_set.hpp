#pragma once

#include "sympair/fan.hpp"

#include <json.hpp>

#include <memory>
#include <random>
#include <vector>

namespace sympair {

struct Adjacency {
  std::size_t p = 0, q = 0;  // positions in Levi::chambers
  std::size_t wall = 0;      // the common codimension-one cone
  RatVector coroot;          // coroot of the simple root of P vanishing on the wall
};

// Adjacent pairs of chambers of the Levi (each unordered pair once, p < q).
std::vector<Adjacency> chamber_adjacencies(const Fan& fan, std::size_t levi);

// A family (Y_P) indexed by the chambers of a Levi, with Y_P - Y_P' a multiple of the
// separating coroot for adjacent P, P'. Points are stored in the order of Levi::chambers.
class OrthogonalSet {
 public:
  OrthogonalSet(std::shared_ptr<const Fan> fan, std::size_t levi, std::vector<RatVector> points);

  const Fan& fan() const { return *fan_; }
  std::shared_ptr<const Fan> fan_ptr() const { return fan_; }
  std::size_t levi() const { return levi_; }
  const std::vector<RatVector>& points() const { return points_; }
  const RatVector& point(std::size_t i) const { return points_[i]; }
  std::size_t chamber_cone(std::size_t i) const { return fan_->levi(levi_).chambers[i]; }

  // r with Y_p - Y_q = r * coroot, one per adjacency.
  const std::vector<Rational>& multipliers() const { return r_; }
  bool is_positive() const;

  // Y_R for a cone R of F(M): the projection of Y_P for any chamber P of M inside R.
  RatVector point_for(std::size_t cone) const;
  // sup over P of the max-abs norm (normalization lattice coordinates) of Y_P, or of
  // its component off V_Q when q is given.
  Rational sup_norm(std::optional<std::size_t> q = std::nullopt) const;

  OrthogonalSet translated(const RatVector& t) const;
  OrthogonalSet scaled(const Rational& t) const;
  friend OrthogonalSet operator+(const OrthogonalSet& a, const OrthogonalSet& b);

 private:
  std::shared_ptr<const Fan> fan_;
  std::size_t levi_;
  std::vector<RatVector> points_;
  std::vector<Rational> r_;
};

// Y[X]_P = w_P X over the chambers of the minimal Levi, projected to the requested Levi.
OrthogonalSet special_orthogonal_set(std::shared_ptr<const Fan> fan, const RatVector& x, std::size_t levi = 0);

// The induced family (Y_Q) for Q in P(L), for a Levi L containing M.
OrthogonalSet project_to_levi(const OrthogonalSet& y, std::size_t levi);

// Max-abs norm of coordinates in the normalization lattice of the system.
Rational lattice_norm(const Fan& fan, const RatVector& v);
// The dual (l1) norm of a covector for lattice_norm.
Rational dual_lattice_norm(const Fan& fan, const RatVector& covector);

// A rational basis of the space of all orthogonal sets for the Levi (each basis element
// is a list of points in Levi::chambers order).
std::vector<std::vector<RatVector>> orthogonal_set_basis(const Fan& fan, std::size_t levi);

// Seeded generators used by the checks. `degenerate` lets some coordinates of X vanish.
OrthogonalSet random_positive_set(std::shared_ptr<const Fan> fan, std::size_t levi, std::mt19937_64& rng,
                                  bool degenerate = false);
OrthogonalSet random_nonpositive_set(std::shared_ptr<const Fan> fan, std::size_t levi, std::mt19937_64& rng);

// Uniform integer in [lo, hi] by rejection sampling on the raw 64-bit output, so the
// stream is identical on every platform.
long uniform_int(std::mt19937_64& rng, long lo, long hi);
Rational random_rational(std::mt19937_64& rng, long num_bound, long max_den);

// {"system": name or inline root system object, "levi": [zero wall indices] (optional),
//  "points": [[..], ..] in chamber order, or {"<sign string>": [..], ..}}
OrthogonalSet orthogonal_set_from_json(const nlohmann::json& j);
nlohmann::json orthogonal_set_to_json(const OrthogonalSet& y);

std::string sign_string(const SignVector& s);

}  // namespace sympair
