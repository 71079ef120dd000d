#include "sympair/prasad.hpp"

#include <doctest.h>

using namespace sympair;

namespace {

// Character values of sum_I (-1)^{m-|I|} Ind_{A_I} 1, using Ind_A 1 (e) = [e in A] [G : A].
bool identity_by_values(std::size_t m) {
  const Mask all = full_mask(m);
  for (Mask e = 0;; ++e) {
    std::int64_t v = 0;
    for (Mask i = 0;; ++i) {
      const int size = __builtin_popcount(i);
      const int sgn = (m - size) % 2 ? -1 : 1;
      // A_I: vectors supported off I, index 2^{|I|}
      if ((e & i) == 0) v += sgn * (std::int64_t{1} << size);
      if (i == all) break;
    }
    if (v != (parity(e) ? -1 : 1)) return false;
    if (e == all) break;
  }
  return true;
}

}  // namespace

TEST_CASE("alternating sum of induced characters: m = 1 by hand") {
  const auto c = verify_prasad_identity(1);
  CHECK(c.holds);
  REQUIRE(c.terms.size() == 2);
  CHECK(c.terms[0].sign == -1);  // I empty: A = everything, only the trivial character
  CHECK(c.terms[0].characters == 1);
  CHECK(c.terms[1].sign == 1);   // I = {0}: A = 0, the regular representation
  CHECK(c.terms[1].characters == 2);
  REQUIRE(c.coefficients.size() == 2);
  CHECK(c.coefficients[0].coefficient == 0);
  CHECK(c.coefficients[1].coefficient == 1);
}

TEST_CASE("alternating sum of induced characters equals the product character") {
  for (std::size_t m = 0; m <= 10; ++m) {
    const auto c = verify_prasad_identity(m);
    CHECK_MESSAGE(c.holds, "m = ", m);
    CHECK(c.coefficients.size() == (std::size_t{1} << m));
    for (const auto& k : c.coefficients) CHECK(k.coefficient == k.expected);
    CHECK(identity_by_values(m));
  }
}

TEST_CASE("virtual characters") {
  const auto g = F2Subgroup::full(3);
  const auto h = F2Subgroup::span(3, {0b011});
  const auto one = VirtualCharacter::trivial(h);
  const auto ind = one.induce_to(g);
  // Ind_H 1 = sum of the characters trivial on H
  for (Mask chi = 0; chi < 8; ++chi) CHECK(ind.coefficient(chi) == (parity(chi & 0b011) == 0 ? 1 : 0));
  for (Mask e = 0; e < 8; ++e) CHECK(ind.value(e) == (h.contains(e) ? 4 : 0));
  CHECK(ind.restrict_to(h) == 4 * one);
  const auto chi = VirtualCharacter::character(g, 0b101);
  CHECK((chi * chi) == VirtualCharacter::trivial(g));
  CHECK(inner_product(chi, ind) == 0);  // nontrivial on 011
  CHECK(inner_product(VirtualCharacter::character(g, 0b100), ind) == 1);
  CHECK(inner_product(VirtualCharacter::character(g, 0b001), ind) == 0);
  CHECK((ind - ind).terms().empty());
  // labels on H only see chi modulo the annihilator of H
  CHECK(one.label(0b011) == one.label(0));
  CHECK_THROWS_AS(one.value(0b100), std::invalid_argument);
  CHECK_THROWS_AS(ind.induce_to(h), std::invalid_argument);
  CHECK_THROWS(checked_add(INT64_MAX, 1));
  CHECK_THROWS(checked_mul(INT64_MAX / 2 + 1, 2));
}

TEST_CASE("Frobenius reciprocity") {
  for (std::size_t m = 0; m <= 5; ++m) {
    const auto r = frobenius_reciprocity_check(m);
    CHECK(r.failures == 0);
    CHECK(r.checks > 0);
  }
}

TEST_CASE("Steinberg multiplicities for the built-in families") {
  for (int n = 1; n <= 12; ++n)
    for (const auto& fam : {"GL", "U"}) {
      const auto p = builtin_preset(fam, n);
      for (const auto& r : steinberg_all(p)) CHECK_MESSAGE(r.matches(), fam, ":", n);
    }
  // U(n): B is trivial, the sum is sum_I (-1)^{m-|I|} 2^{|I|} = 1
  for (int n = 1; n <= 12; ++n) {
    const auto r = steinberg_all(builtin_preset("U", n));
    REQUIRE(r.size() == 1);
    CHECK(r[0].multiplicity == 1);
    std::int64_t sum = 0;
    for (const auto& t : r[0].terms) sum += t.contribution;
    CHECK(sum == 1);
  }
  // GL(2k): only the character equal to omega on B gets multiplicity one
  const auto gl4 = steinberg_all(builtin_preset("GL", 4));
  REQUIRE(gl4.size() == 2);
  CHECK(gl4[0].multiplicity == 0);
  CHECK(gl4[1].multiplicity == 1);
}

TEST_CASE("Steinberg sum over all subgroups") {
  for (std::size_t m = 1; m <= 6; ++m) {
    const auto p = steinberg_probe(m);
    CHECK(p.counterexamples.empty());
  }
}

TEST_CASE("omega") {
  CHECK(prasad_omega(builtin_preset("U", 5)).effective_trivial());
  CHECK_FALSE(prasad_omega(builtin_preset("GL", 4)).effective_trivial());
  CHECK(prasad_omega(builtin_preset("GL", 3)).effective_trivial());
}

TEST_CASE("composition identity") {
  for (int n = 1; n <= 12; ++n) {
    const auto c = composition_identity(n);
    CHECK(c.compositions == std::uint64_t{1} << (n - 1));
    CHECK(c.sum == 1);
    const auto st = steinberg_all(builtin_preset("U", n));
    CHECK(st[0].multiplicity == c.sum);
  }
}

TEST_CASE("induction identity for GL") {
  const auto r = gln_induction_identity();
  CHECK(r.holds);
  CHECK(r.at_identity == 1);
  CHECK(r.at_generator == -1);
  CHECK(r.eta_identity == 1);
  CHECK(r.eta_generator == -1);
}
