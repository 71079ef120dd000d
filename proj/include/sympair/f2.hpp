#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace sympair {

// Elements of (Z/2)^m and characters of it, as bit vectors; chi(e) = (-1)^{popcount(chi & e)}.
using Mask = std::uint32_t;
inline constexpr std::size_t kMaxF2Rank = 20;

inline int parity(Mask x) { return __builtin_popcount(x) & 1; }
inline Mask full_mask(std::size_t m) { return m == 0 ? 0 : (m >= 32 ? ~Mask{0} : (Mask{1} << m) - 1); }
// "0110": position i of the string is bit i.
std::string mask_string(Mask x, std::size_t m);
Mask parse_mask(const std::string& bits, std::size_t m);

// A subgroup of (Z/2)^m, stored by its reduced echelon basis (each basis vector owns a
// leading bit that no other basis vector has), so equal subgroups have equal bases.
class F2Subgroup {
 public:
  F2Subgroup() = default;
  explicit F2Subgroup(std::size_t m) : m_(m) { check_rank(m); }
  static F2Subgroup span(std::size_t m, const std::vector<Mask>& generators);
  static F2Subgroup full(std::size_t m);
  // Vectors supported on `support`.
  static F2Subgroup coordinate(std::size_t m, Mask support);

  std::size_t ambient_rank() const { return m_; }
  std::size_t dim() const { return basis_.size(); }
  std::uint64_t order() const { return std::uint64_t{1} << basis_.size(); }
  const std::vector<Mask>& basis() const { return basis_; }

  bool contains(Mask x) const { return reduce(x) == 0; }
  // Canonical representative of x modulo the subgroup.
  Mask reduce(Mask x) const;
  std::vector<Mask> elements() const;  // ascending
  bool is_subgroup_of(const F2Subgroup& other) const;

  // {chi : chi(x) = 1 for all x in the subgroup}.
  F2Subgroup annihilator() const;
  // Image under x -> x & support.
  F2Subgroup projection(Mask support) const;

  friend bool operator==(const F2Subgroup&, const F2Subgroup&) = default;
  friend F2Subgroup operator+(const F2Subgroup& a, const F2Subgroup& b);
  friend F2Subgroup intersection(const F2Subgroup& a, const F2Subgroup& b);

  std::string to_string() const;

 private:
  static void check_rank(std::size_t m);
  void insert(Mask x);

  std::size_t m_ = 0;
  std::vector<Mask> basis_;  // sorted by leading bit, descending
};

// Calls f once for every subgroup of (Z/2)^m (there are 417199 for m = 8).
void for_each_subgroup(std::size_t m, const std::function<void(const F2Subgroup&)>& f);

}  // namespace sympair
