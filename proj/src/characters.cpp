#include "sympair/characters.hpp"

#include <stdexcept>

namespace sympair {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("character coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("character coefficient overflow");
  return r;
}

VirtualCharacter::VirtualCharacter(F2Subgroup group) : group_(std::move(group)), perp_(group_.annihilator()) {}

VirtualCharacter VirtualCharacter::character(const F2Subgroup& group, Mask chi) {
  VirtualCharacter v(group);
  v.add(chi, 1);
  return v;
}

std::vector<Mask> VirtualCharacter::irreducibles(const F2Subgroup& group) {
  // labels are the reductions modulo the annihilator: span the non-pivot directions of it
  const F2Subgroup perp = group.annihilator();
  std::vector<Mask> out;
  for (Mask chi = 0; chi <= full_mask(group.ambient_rank()); ++chi) {
    if (perp.reduce(chi) == chi) out.push_back(chi);
    if (chi == full_mask(group.ambient_rank())) break;
  }
  return out;
}

std::int64_t VirtualCharacter::coefficient(Mask chi) const {
  const auto it = terms_.find(label(chi));
  return it == terms_.end() ? 0 : it->second;
}

void VirtualCharacter::add(Mask chi, std::int64_t c) {
  if (chi & ~full_mask(group_.ambient_rank())) throw std::invalid_argument("VirtualCharacter: character outside the group");
  if (c == 0) return;
  const Mask l = label(chi);
  auto& slot = terms_[l];
  slot = checked_add(slot, c);
  if (slot == 0) terms_.erase(l);
}

std::int64_t VirtualCharacter::value(Mask e) const {
  if (!group_.contains(e)) throw std::invalid_argument("VirtualCharacter::value: element outside the group");
  std::int64_t v = 0;
  for (const auto& [chi, c] : terms_) v = checked_add(v, parity(chi & e) ? -c : c);
  return v;
}

VirtualCharacter VirtualCharacter::restrict_to(const F2Subgroup& sub) const {
  if (!sub.is_subgroup_of(group_)) throw std::invalid_argument("restrict_to: not a subgroup");
  VirtualCharacter out(sub);
  for (const auto& [chi, c] : terms_) out.add(chi, c);
  return out;
}

VirtualCharacter VirtualCharacter::induce_to(const F2Subgroup& super) const {
  if (!group_.is_subgroup_of(super)) throw std::invalid_argument("induce_to: not a supergroup");
  // Ind psi = sum of the characters of the supergroup restricting to psi
  VirtualCharacter out(super);
  for (Mask chi : irreducibles(super)) {
    const std::int64_t c = coefficient(chi);
    if (c) out.add(chi, c);
  }
  return out;
}

namespace {

void same_group(const VirtualCharacter& a, const VirtualCharacter& b) {
  if (!(a.group() == b.group())) throw std::invalid_argument("virtual characters of different groups");
}

}  // namespace

VirtualCharacter operator+(const VirtualCharacter& a, const VirtualCharacter& b) {
  same_group(a, b);
  VirtualCharacter out = a;
  for (const auto& [chi, c] : b.terms_) out.add(chi, c);
  return out;
}

VirtualCharacter operator-(const VirtualCharacter& a, const VirtualCharacter& b) {
  same_group(a, b);
  VirtualCharacter out = a;
  for (const auto& [chi, c] : b.terms_) out.add(chi, checked_mul(c, -1));
  return out;
}

VirtualCharacter operator*(const VirtualCharacter& a, const VirtualCharacter& b) {
  same_group(a, b);
  VirtualCharacter out(a.group());
  for (const auto& [x, c] : a.terms_)
    for (const auto& [y, d] : b.terms_) out.add(x ^ y, checked_mul(c, d));
  return out;
}

VirtualCharacter operator*(std::int64_t s, const VirtualCharacter& a) {
  VirtualCharacter out(a.group());
  for (const auto& [chi, c] : a.terms_) out.add(chi, checked_mul(s, c));
  return out;
}

bool operator==(const VirtualCharacter& a, const VirtualCharacter& b) {
  return a.group() == b.group() && a.terms_ == b.terms_;
}

std::int64_t inner_product(const VirtualCharacter& a, const VirtualCharacter& b) {
  same_group(a, b);
  std::int64_t s = 0;
  for (const auto& [chi, c] : a.terms()) s = checked_add(s, checked_mul(c, b.coefficient(chi)));
  return s;
}

std::string VirtualCharacter::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [chi, c] : terms_) {
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    const std::int64_t a = c < 0 ? -c : c;
    if (a != 1) s += std::to_string(a) + "*";
    s += "chi[" + mask_string(chi, group_.ambient_rank()) + "]";
  }
  return s;
}

}  // namespace sympair
