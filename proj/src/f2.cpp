#include "sympair/f2.hpp"

#include <algorithm>
#include <stdexcept>

namespace sympair {

namespace {

int leading_bit(Mask x) { return 31 - __builtin_clz(x); }

}  // namespace

std::string mask_string(Mask x, std::size_t m) {
  std::string s(m, '0');
  for (std::size_t i = 0; i < m; ++i)
    if ((x >> i) & 1) s[i] = '1';
  return s;
}

Mask parse_mask(const std::string& bits, std::size_t m) {
  if (bits.size() != m) throw std::invalid_argument("bit string '" + bits + "' must have length " + std::to_string(m));
  Mask x = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (bits[i] == '1') x |= Mask{1} << i;
    else if (bits[i] != '0') throw std::invalid_argument("bit string '" + bits + "' has a character other than 0/1");
  }
  return x;
}

void F2Subgroup::check_rank(std::size_t m) {
  if (m > kMaxF2Rank) throw std::invalid_argument("F2Subgroup: rank " + std::to_string(m) + " exceeds the supported maximum");
}

Mask F2Subgroup::reduce(Mask x) const {
  for (Mask b : basis_)
    if ((x >> leading_bit(b)) & 1) x ^= b;
  return x;
}

void F2Subgroup::insert(Mask x) {
  if (x & ~full_mask(m_)) throw std::invalid_argument("F2Subgroup: vector outside (Z/2)^" + std::to_string(m_));
  x = reduce(x);
  if (!x) return;
  const int lb = leading_bit(x);
  for (Mask& b : basis_)
    if ((b >> lb) & 1) b ^= x;
  basis_.push_back(x);
  std::sort(basis_.begin(), basis_.end(), [](Mask a, Mask b) { return leading_bit(a) > leading_bit(b); });
}

F2Subgroup F2Subgroup::span(std::size_t m, const std::vector<Mask>& generators) {
  F2Subgroup g(m);
  for (Mask x : generators) g.insert(x);
  return g;
}

F2Subgroup F2Subgroup::full(std::size_t m) { return coordinate(m, full_mask(m)); }

F2Subgroup F2Subgroup::coordinate(std::size_t m, Mask support) {
  std::vector<Mask> gens;
  for (std::size_t i = 0; i < m; ++i)
    if ((support >> i) & 1) gens.push_back(Mask{1} << i);
  return span(m, gens);
}

std::vector<Mask> F2Subgroup::elements() const {
  std::vector<Mask> out{0};
  for (Mask b : basis_) {
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] ^ b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool F2Subgroup::is_subgroup_of(const F2Subgroup& other) const {
  if (m_ != other.m_) return false;
  for (Mask b : basis_)
    if (!other.contains(b)) return false;
  return true;
}

F2Subgroup F2Subgroup::annihilator() const {
  Mask pivots = 0;
  for (Mask b : basis_) pivots |= Mask{1} << leading_bit(b);
  F2Subgroup out(m_);
  // basis vectors are fully reduced: e_f + sum of the pivots whose row has bit f
  for (std::size_t f = 0; f < m_; ++f) {
    if ((pivots >> f) & 1) continue;
    Mask v = Mask{1} << f;
    for (Mask b : basis_)
      if ((b >> f) & 1) v |= Mask{1} << leading_bit(b);
    out.insert(v);
  }
  return out;
}

F2Subgroup F2Subgroup::projection(Mask support) const {
  F2Subgroup out(m_);
  for (Mask b : basis_) out.insert(b & support);
  return out;
}

F2Subgroup operator+(const F2Subgroup& a, const F2Subgroup& b) {
  if (a.m_ != b.m_) throw std::invalid_argument("F2Subgroup sum: rank mismatch");
  F2Subgroup out = a;
  for (Mask x : b.basis_) out.insert(x);
  return out;
}

F2Subgroup intersection(const F2Subgroup& a, const F2Subgroup& b) {
  if (a.m_ != b.m_) throw std::invalid_argument("F2Subgroup intersection: rank mismatch");
  return (a.annihilator() + b.annihilator()).annihilator();
}

std::string F2Subgroup::to_string() const {
  std::string s = "<";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) s += ", ";
    s += mask_string(basis_[i], m_);
  }
  return s + ">";
}

namespace {

void enumerate(std::size_t m, std::size_t k, std::size_t next, std::vector<int>& pivots,
               const std::function<void(const F2Subgroup&)>& f) {
  if (pivots.size() == k) {
    // free bits of row r: columns below its pivot that are not pivots themselves
    std::vector<std::vector<int>> free(k);
    std::size_t nfree = 0;
    for (std::size_t r = 0; r < k; ++r) {
      for (int c = 0; c < pivots[r]; ++c)
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free[r].push_back(c);
      nfree += free[r].size();
    }
    for (std::uint64_t fill = 0; fill < (std::uint64_t{1} << nfree); ++fill) {
      std::vector<Mask> rows(k);
      std::size_t bit = 0;
      for (std::size_t r = 0; r < k; ++r) {
        rows[r] = Mask{1} << pivots[r];
        for (int c : free[r])
          if ((fill >> bit++) & 1) rows[r] |= Mask{1} << c;
      }
      f(F2Subgroup::span(m, rows));
    }
    return;
  }
  for (std::size_t c = next; c < m; ++c) {
    pivots.push_back(static_cast<int>(c));
    enumerate(m, k, c + 1, pivots, f);
    pivots.pop_back();
  }
}

}  // namespace

void for_each_subgroup(std::size_t m, const std::function<void(const F2Subgroup&)>& f) {
  if (m > kMaxF2Rank) throw std::invalid_argument("for_each_subgroup: rank too large");
  std::vector<int> pivots;
  for (std::size_t k = 0; k <= m; ++k) enumerate(m, k, 0, pivots, f);
}

}  // namespace sympair
