#pragma once

#include "sympair/root_system.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace sympair {

using SignVector = std::vector<std::int8_t>;

// A face of the Weyl fan. Faces correspond to parabolic subgroups containing
// a minimal one; the span of a face is the Levi subspace of its Levi.
struct Cone {
  SignVector signs;  // one entry per wall
  RatVector point;   // a point of the relative interior
  std::size_t dim = 0;
  std::size_t levi = 0;  // index into Fan::levis()
  long weyl = -1;        // chambers only: this chamber is weyl_group()[weyl] applied to the base chamber
  // Simple roots of the cone as covectors on V (restriction composed with the projection onto the span),
  // and their coroots, in the same order.
  std::vector<RatVector> simple_roots;
  std::vector<RatVector> simple_coroots;
};

// A flat of the arrangement, i.e. the Levi subspace V_M of a Levi M.
struct Levi {
  std::vector<std::size_t> zero_walls;  // walls vanishing on V_M
  std::size_t dim = 0;
  RatMatrix span;                       // columns: a basis of V_M
  RatMatrix proj;                       // projection onto V_M along the coroots of M
  std::vector<std::size_t> roots;       // roots vanishing on V_M
  IntLattice lattice;                   // normalization lattice intersected with V_M
  std::vector<std::size_t> chambers;    // cones spanning V_M
  std::vector<std::size_t> cones;       // cones contained in V_M
};

class Fan {
 public:
  explicit Fan(RootSystem sys);

  const RootSystem& system() const { return sys_; }
  std::size_t dim() const { return sys_.dim(); }
  const std::vector<std::size_t>& walls() const { return walls_; }
  const std::vector<Cone>& cones() const { return cones_; }
  const Cone& cone(std::size_t i) const { return cones_.at(i); }
  const std::vector<Levi>& levis() const { return levis_; }
  const Levi& levi(std::size_t i) const { return levis_.at(i); }
  const Levi& levi_of(std::size_t cone) const { return levis_.at(cones_.at(cone).levi); }
  const std::vector<RatMatrix>& weyl_group() const { return weyl_; }

  std::size_t minimal_levi() const { return 0; }
  std::size_t full_levi() const { return levis_.size() - 1; }
  std::size_t base_chamber() const { return 0; }
  std::size_t origin() const { return cones_.size() - 1; }
  std::vector<std::size_t> chambers() const { return levis_.front().chambers; }

  SignVector sign_vector(const RatVector& h) const;
  std::size_t facet_of(const RatVector& h) const;
  std::optional<std::size_t> find_cone(const SignVector& s) const;

  // P is contained in Q as parabolic subgroups, i.e. Q is a face of the closure of P.
  bool parabolic_le(std::size_t p, std::size_t q) const;
  // Levis L with M contained in L (V_L inside V_M).
  std::vector<std::size_t> levis_containing(std::size_t m) const;

  RatVector project(std::size_t cone, const RatVector& x) const;
  // Distinct nonzero restrictions of roots to the span of the cone.
  std::vector<RatVector> restricted_roots(std::size_t cone) const;
  // Roots of the cone's positive system (restricted roots positive on its interior).
  std::vector<RatVector> positive_restricted_roots(std::size_t cone) const;
  // Coroot attached to a restricted root of the cone's Levi; throws if alpha is not one, or if
  // the lifting recipe depends on the chamber used.
  RatVector restricted_coroot(std::size_t cone, const RatVector& alpha) const;

  // Simple roots of P vanishing on the span of Q (P contained in Q), and the dual weights
  // (vanishing on V_Q and on the coroots of the Levi of P, dual to the coroots of the former).
  std::vector<std::size_t> relative_simple(std::size_t p, std::size_t q) const;
  std::vector<RatVector> relative_dual_basis(std::size_t p, std::size_t q) const;

 private:
  RootSystem sys_;
  std::vector<std::size_t> walls_;
  std::vector<RatMatrix> weyl_;
  std::vector<Cone> cones_;
  std::vector<Levi> levis_;
  std::map<SignVector, std::size_t> index_;
  std::vector<std::vector<std::size_t>> chamber_simple_;  // chamber -> root indices of its simple roots
};

// Fans of named built-in systems, built once and shared.
std::shared_ptr<const Fan> builtin_fan(const std::string& name);

struct DescentSupport {
  bool supported = false;
  bool coefficient_is_one = false;  // fixed part zero and Levi part everything
};

// Whether V = S1 (+) S2 as a direct sum, with S1, S2 given by spanning columns in Q^ambient_dim.
DescentSupport descent_support(std::size_t ambient_dim, const RatMatrix& theta_fixed, const RatMatrix& levi_part);

}  // namespace sympair
