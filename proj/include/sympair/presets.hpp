#pragma once

#include "sympair/f2.hpp"
#include "sympair/lattice.hpp"
#include "sympair/tate.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace sympair {

// Finite data of a Galois pair: the simple roots Delta_min of the minimal theta-split torus,
// the involution iota = -theta on them, its fixed set Delta_-, a half S of the moved roots,
// and the image B of H_ab in (Z/2)^{Delta_-}. Bit i of a mask in (Z/2)^{Delta_-} stands for
// delta_minus[i].
struct ThetaPreset {
  std::string name;
  std::string family;  // "GL", "U", or free text for fixtures
  int n = 0;
  std::size_t delta_min_size = 0;
  std::vector<std::size_t> iota;
  std::vector<std::size_t> delta_minus;
  std::vector<std::size_t> s_choice;
  F2Subgroup b;
  std::optional<std::int64_t> h1_h_order;  // |H^1(F, H)| when known
  bool validated = false;                  // GL and U, whose counts have closed forms
  std::string note;

  std::size_t m() const { return delta_minus.size(); }
  // Throws std::invalid_argument naming the first broken invariant.
  void validate() const;
};

ThetaPreset builtin_preset(const std::string& family, int n);
// "GL:4", "U:3"
ThetaPreset preset_from_selector(const std::string& selector);

// {"name", "family", "n", "delta_min": size, "iota": [..], "delta_minus": [..],
//  "s_choice": [..] (optional), "B": ["0101", ..] generators, "h1_h": int (optional)}
ThetaPreset preset_from_json(const nlohmann::json& j);
nlohmann::json preset_to_json(const ThetaPreset& p);

struct EllipticLeviDatum {
  Mask i = 0;                       // I as a subset of Delta_- (positions)
  std::size_t size = 0;             // |I|
  int sign = 1;                     // (-1)^{|Delta_- \ I|}
  F2Subgroup h1;                    // (Z/2)^I
  F2Subgroup a_i;                   // vectors supported on Delta_- \ I
  std::uint64_t mab_index = 1;      // |proj_I(B)|
  std::uint64_t ker1_size = 1;      // 2^{|I|} / mab_index
  std::vector<int> composition;     // family U only: the parts cut at I
};

// One datum per I subset of Delta_-, in increasing mask order.
std::vector<EllipticLeviDatum> enumerate_elliptic_levis(const ThetaPreset& p);

// Parts of n obtained by cutting 1..n at the positions in `cuts` (bit i = cut after i+1).
std::vector<int> composition_from_cuts(int n, Mask cuts);

struct SubgroupLatticeReport {
  std::size_t pairs = 0;
  std::vector<std::pair<Mask, Mask>> failures;
  bool ok() const { return failures.empty(); }
};
// A_I + A_J = A_{I cap J} for all I, J.
SubgroupLatticeReport a_subgroup_lattice_check(const ThetaPreset& p);

struct FiberCount {
  FiniteAbelianGroup h1_t;
  std::int64_t h1_g = 1;
  Rational count;  // |H^1(F,T)| / |H^1(F,G)|
  bool integral() const { return is_integral(count); }
};
FiberCount inner_form_fiber_count(const LatticeWithAction& torus, std::int64_t h1_g_order);

}  // namespace sympair
