#pragma once

#include "sympair/lattice.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace sympair {

// A lattice Z^r (coordinates w.r.t. `lattice`'s basis) with a finite group of
// integer matrices acting on it. The group is checked to contain the identity
// and to be closed under products at construction.
class LatticeWithAction {
 public:
  LatticeWithAction(IntLattice lattice, std::vector<IntMatrix> group_elements);

  // Closes the generators under multiplication first.
  static LatticeWithAction from_generators(IntLattice lattice, const std::vector<IntMatrix>& generators);

  static LatticeWithAction trivial(std::size_t rank);
  // Z with the group {1, -1}: cocharacters of the norm-one torus of a quadratic extension.
  static LatticeWithAction norm_one_torus();
  // Z^2 with the coordinate swap: cocharacters of the induced torus R_{E/F} G_m.
  static LatticeWithAction induced_torus();
  // Z[G] for G = Z/n acting by cyclic shift.
  static LatticeWithAction cyclic_regular(std::size_t n);
  // Z[G] for any finite group given by a multiplication table (table[a][b] = a*b).
  static LatticeWithAction regular(const std::vector<std::vector<std::size_t>>& table);

  const IntLattice& lattice() const { return lattice_; }
  std::size_t rank() const { return lattice_.rank(); }
  const std::vector<IntMatrix>& group_elements() const { return elements_; }

 private:
  IntLattice lattice_;
  std::vector<IntMatrix> elements_;
};

// Block-diagonal action of G1 x G2 on X1 + X2.
LatticeWithAction direct_sum(const LatticeWithAction& a, const LatticeWithAction& b);

// ker(N) / I_G X with N the norm element.
FiniteAbelianGroup tate_h_minus1(const LatticeWithAction& x);
// X^G / N X.
FiniteAbelianGroup tate_h0(const LatticeWithAction& x);

// First Galois cohomology of the torus whose cocharacter lattice is x
// (Tate-Nakayama: equal to H^-1 of the splitting group on x).
inline FiniteAbelianGroup torus_h1(const LatticeWithAction& x) { return tate_h_minus1(x); }

// Schema: {"ambient_rank": r, "basis": [[..]..] (optional, basis vectors),
//          "action": [matrix, ...]} or "generators" instead of "action".
// Matrices are lists of rows in lattice coordinates.
LatticeWithAction lattice_from_json(const nlohmann::json& j);
nlohmann::json lattice_to_json(const LatticeWithAction& x);

}  // namespace sympair
