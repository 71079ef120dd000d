#pragma once

#include "sympair/f2.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace sympair {

// Integer combination of characters of a subgroup G of (Z/2)^m. Characters of G are the
// restrictions of characters of (Z/2)^m, labelled by their reduction modulo the annihilator
// of G. Coefficients are 64-bit with overflow checks.
class VirtualCharacter {
 public:
  explicit VirtualCharacter(F2Subgroup group);
  static VirtualCharacter trivial(const F2Subgroup& group) { return character(group, 0); }
  static VirtualCharacter character(const F2Subgroup& group, Mask chi);
  // All characters of the group, as canonical labels in ascending order.
  static std::vector<Mask> irreducibles(const F2Subgroup& group);

  const F2Subgroup& group() const { return group_; }
  Mask label(Mask chi) const { return perp_.reduce(chi); }
  std::int64_t coefficient(Mask chi) const;
  const std::map<Mask, std::int64_t>& terms() const { return terms_; }
  void add(Mask chi, std::int64_t c);

  // Value at an element of the group.
  std::int64_t value(Mask e) const;
  VirtualCharacter restrict_to(const F2Subgroup& sub) const;
  VirtualCharacter induce_to(const F2Subgroup& super) const;

  friend VirtualCharacter operator+(const VirtualCharacter& a, const VirtualCharacter& b);
  friend VirtualCharacter operator-(const VirtualCharacter& a, const VirtualCharacter& b);
  friend VirtualCharacter operator*(const VirtualCharacter& a, const VirtualCharacter& b);
  friend VirtualCharacter operator*(std::int64_t s, const VirtualCharacter& a);
  friend bool operator==(const VirtualCharacter& a, const VirtualCharacter& b);

  std::string to_string() const;

 private:
  F2Subgroup group_, perp_;
  std::map<Mask, std::int64_t> terms_;  // nonzero coefficients only
};

// Multiplicity pairing sum_chi a_chi b_chi.
std::int64_t inner_product(const VirtualCharacter& a, const VirtualCharacter& b);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace sympair
