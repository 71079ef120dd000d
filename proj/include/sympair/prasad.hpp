#pragma once

#include "sympair/characters.hpp"
#include "sympair/presets.hpp"

namespace sympair {

// The product character e -> (-1)^{sum e} of (Z/2)^{Delta_-} and its restriction to B.
struct ReducedOmega {
  std::size_t m = 0;
  Mask character = 0;
  VirtualCharacter full;
  VirtualCharacter effective;
  bool effective_trivial() const { return effective == VirtualCharacter::trivial(effective.group()); }
};
ReducedOmega prasad_omega(const ThetaPreset& p);

struct PrasadTerm {
  Mask i = 0;
  int sign = 1;
  std::size_t characters = 0;  // number of chi trivial on A_I
};
struct PrasadCoefficient {
  Mask chi = 0;
  std::int64_t coefficient = 0;
  std::int64_t expected = 0;
};
struct PrasadCertificate {
  std::size_t m = 0;
  std::vector<PrasadTerm> terms;
  std::vector<PrasadCoefficient> coefficients;  // every character, ascending
  bool holds = false;
};
// sum over I of (-1)^{m-|I|} Ind_{A_I}^{(Z/2)^m} 1, compared with the product character.
PrasadCertificate verify_prasad_identity(std::size_t m);

struct SteinbergTerm {
  Mask i = 0;
  int sign = 1;
  std::uint64_t ker1 = 1;
  bool trivial = false;  // chi restricted to B cap A_I is trivial
  std::int64_t contribution = 0;
};
struct SteinbergResult {
  Mask chi = 0;  // canonical label of the character of B
  std::int64_t multiplicity = 0;
  std::int64_t expected = 0;  // 1 if chi = omega on B, else 0
  std::vector<SteinbergTerm> terms;
  bool matches() const { return multiplicity == expected; }
};
// sum over I of sign(I) |ker^1(I)| [chi trivial on B cap A_I]. The indicator stands for the
// multiplicity of the trivial character in chi restricted to M_I, which the reduced model
// takes as given.
SteinbergResult steinberg_multiplicity(const ThetaPreset& p, Mask chi_b);
std::vector<SteinbergResult> steinberg_all(const ThetaPreset& p);

struct SteinbergProbe {
  std::size_t m = 0;
  std::uint64_t subgroups = 0, characters = 0;
  std::vector<std::pair<F2Subgroup, Mask>> counterexamples;
};
// The same sum for every subgroup B of (Z/2)^m with iota = id, evaluated in coordinates of
// a basis of B. Counterexamples are collected, not thrown.
SteinbergProbe steinberg_probe(std::size_t m);

struct CompositionSum {
  int n = 0;
  std::uint64_t compositions = 0;
  std::int64_t sum = 0;
};
// sum over compositions (n_1..n_k) of n of (-1)^{n-k} 2^{k-1}.
CompositionSum composition_identity(int n);

struct InductionIdentity {
  std::int64_t at_identity = 0, at_generator = 0;  // values of Ind 1 - 1
  std::int64_t eta_identity = 0, eta_generator = 0;
  bool holds = false;
};
// Ind from the trivial subgroup of Z/2, minus the trivial character, against eta.
InductionIdentity gln_induction_identity();

struct FrobeniusReport {
  std::size_t m = 0;
  std::uint64_t subgroups = 0, checks = 0, failures = 0;
};
// (chi, Ind_H 1) = [chi trivial on H] for every subgroup H and character chi.
FrobeniusReport frobenius_reciprocity_check(std::size_t m);

}  // namespace sympair
