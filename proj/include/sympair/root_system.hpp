#pragma once

#include "sympair/lattice.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace sympair {

// A (possibly non-reduced) root system in a rational space V of dimension dim.
// Roots are covectors, coroots are vectors; <a, x> is the dot product of
// coordinates. Built-ins use the simple coroots as the basis of V and the
// coroot lattice as the normalization lattice.
class RootSystem {
 public:
  // Validates every axiom; throws std::invalid_argument naming the offending roots.
  RootSystem(std::string name, std::size_t dim, std::vector<RatVector> roots, std::vector<RatVector> coroots,
             std::vector<std::size_t> simple, IntLattice lattice);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  std::size_t size() const { return roots_.size(); }
  const std::vector<RatVector>& roots() const { return roots_; }
  const std::vector<RatVector>& coroots() const { return coroots_; }
  const RatVector& root(std::size_t i) const { return roots_[i]; }
  const RatVector& coroot(std::size_t i) const { return coroots_[i]; }
  const std::vector<std::size_t>& simple() const { return simple_; }
  const IntLattice& lattice() const { return lattice_; }

  bool is_positive(std::size_t i) const { return positive_[i]; }
  bool is_reduced(std::size_t i) const { return reduced_[i]; }
  // Coefficients of root i in the simple roots.
  const std::vector<Integer>& simple_coordinates(std::size_t i) const { return coords_[i]; }
  // Index of the root equal to the covector, or -1.
  long find_root(const RatVector& covector) const;

  // x -> x - <a_i, x> a_i^vee as a matrix on V.
  RatMatrix reflection_matrix(std::size_t i) const;
  // Columns are the fundamental coweights (dual to the simple roots).
  RatMatrix fundamental_coweights() const;
  // Sum of the coroots of the positive reduced roots (dominant, in the coroot lattice).
  RatVector sum_positive_coroots() const;

 private:
  std::string name_;
  std::size_t dim_;
  std::vector<RatVector> roots_, coroots_;
  std::vector<std::size_t> simple_;
  IntLattice lattice_;
  std::vector<std::vector<Integer>> coords_;
  std::vector<bool> positive_, reduced_;
};

// "A<n>" (n>=1), "B<n>", "C<n>" (n>=2), "D<n>" (n>=4), "G2", "BC<n>" (n>=1).
RootSystem build_root_system(const std::string& name);
RootSystem root_system_from_cartan(const std::string& name, const std::vector<std::vector<long>>& cartan,
                                   long doubled_orbit = -1);
// {"name", "dim", "roots": [[..]], "coroots": [[..]], "simple": [i..], "lattice": [[..]] (optional)}
RootSystem root_system_from_json(const nlohmann::json& j);
nlohmann::json root_system_to_json(const RootSystem& sys);

}  // namespace sympair
