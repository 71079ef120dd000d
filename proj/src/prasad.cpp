#include "sympair/prasad.hpp"

#include <stdexcept>

namespace sympair {

ReducedOmega prasad_omega(const ThetaPreset& p) {
  const std::size_t m = p.m();
  const F2Subgroup g = F2Subgroup::full(m);
  ReducedOmega w{m, full_mask(m), VirtualCharacter::character(g, full_mask(m)), VirtualCharacter(p.b)};
  w.effective = w.full.restrict_to(p.b);
  return w;
}

PrasadCertificate verify_prasad_identity(std::size_t m) {
  if (m > 16) throw std::invalid_argument("verify_prasad_identity: m too large for brute force");
  const F2Subgroup g = F2Subgroup::full(m);
  const Mask all = full_mask(m);
  PrasadCertificate cert;
  cert.m = m;
  VirtualCharacter sum(g);
  for (Mask i = 0;; ++i) {
    const F2Subgroup a = F2Subgroup::coordinate(m, all & ~i);
    const VirtualCharacter ind = VirtualCharacter::trivial(a).induce_to(g);
    const int sign = (m - __builtin_popcount(i)) % 2 ? -1 : 1;
    cert.terms.push_back({i, sign, ind.terms().size()});
    sum = sum + sign * ind;
    if (i == all) break;
  }
  const VirtualCharacter omega = VirtualCharacter::character(g, all);
  for (Mask chi : VirtualCharacter::irreducibles(g))
    cert.coefficients.push_back({chi, sum.coefficient(chi), omega.coefficient(chi)});
  cert.holds = sum == omega;
  return cert;
}

SteinbergResult steinberg_multiplicity(const ThetaPreset& p, Mask chi_b) {
  const std::size_t m = p.m();
  if (chi_b & ~full_mask(m)) throw std::invalid_argument("steinberg_multiplicity: not a character of B");
  const VirtualCharacter chi = VirtualCharacter::character(p.b, chi_b);
  const ReducedOmega omega = prasad_omega(p);
  SteinbergResult res;
  res.chi = chi.terms().begin()->first;
  res.expected = chi == omega.effective ? 1 : 0;
  for (const auto& d : enumerate_elliptic_levis(p)) {
    SteinbergTerm t{d.i, d.sign, d.ker1_size};
    const F2Subgroup k = intersection(p.b, d.a_i);
    const VirtualCharacter r = chi.restrict_to(k);
    t.trivial = r == VirtualCharacter::trivial(k);
    if (t.trivial) t.contribution = checked_mul(d.sign, static_cast<std::int64_t>(d.ker1_size));
    res.multiplicity = checked_add(res.multiplicity, t.contribution);
    res.terms.push_back(t);
  }
  return res;
}

std::vector<SteinbergResult> steinberg_all(const ThetaPreset& p) {
  std::vector<SteinbergResult> out;
  for (Mask chi : VirtualCharacter::irreducibles(p.b)) out.push_back(steinberg_multiplicity(p, chi));
  return out;
}

SteinbergProbe steinberg_probe(std::size_t m) {
  if (m > 10) throw std::invalid_argument("steinberg_probe: m too large for exhaustive enumeration");
  SteinbergProbe probe;
  probe.m = m;
  const Mask all = full_mask(m);
  std::vector<std::int64_t> mult;
  for_each_subgroup(m, [&](const F2Subgroup& b) {
    ++probe.subgroups;
    const auto& basis = b.basis();
    const std::size_t k = basis.size();
    // a character of B is its vector of values on the basis, as a k-bit mask
    mult.assign(std::size_t{1} << k, 0);
    Mask omega = 0;
    for (std::size_t j = 0; j < k; ++j)
      if (parity(basis[j])) omega |= Mask{1} << j;
    for (Mask i = 0;; ++i) {
      // kernel of b -> b & I on B, as combinations of the basis
      Mask row_img[32], row_comb[32], kernel[32];
      std::size_t rank = 0, nker = 0;
      for (std::size_t j = 0; j < k; ++j) {
        Mask img = basis[j] & i, comb = Mask{1} << j;
        for (std::size_t t = 0; t < rank; ++t)
          if (img & (row_img[t] & -row_img[t])) img ^= row_img[t], comb ^= row_comb[t];
        if (img) {
          for (std::size_t t = 0; t < rank; ++t)
            if (row_img[t] & (img & -img)) row_img[t] ^= img, row_comb[t] ^= comb;
          row_img[rank] = img;
          row_comb[rank++] = comb;
        } else {
          kernel[nker++] = comb;
        }
      }
      const std::int64_t ker1 = std::int64_t{1} << (__builtin_popcount(i) - static_cast<int>(rank));
      const std::int64_t term = (m - __builtin_popcount(i)) % 2 ? -ker1 : ker1;
      // add the term on the annihilator of the kernel: reduce the kernel to echelon form
      // (pivot = highest bit, fully reduced), then walk the span of e_f + sum of pivots
      Mask piv[32], vec[32];
      std::size_t nk = 0;
      for (std::size_t e = 0; e < nker; ++e) {
        Mask c = kernel[e];
        for (std::size_t t = 0; t < nk; ++t)
          if (c & piv[t]) c ^= vec[t];
        if (!c) continue;
        const Mask top = Mask{1} << (31 - __builtin_clz(c));
        for (std::size_t t = 0; t < nk; ++t)
          if (vec[t] & top) vec[t] ^= c;
        piv[nk] = top;
        vec[nk++] = c;
      }
      Mask pivots = 0;
      for (std::size_t t = 0; t < nk; ++t) pivots |= piv[t];
      Mask perp[32];
      std::size_t np = 0;
      for (std::size_t f = 0; f < k; ++f) {
        if ((pivots >> f) & 1) continue;
        Mask v = Mask{1} << f;
        for (std::size_t t = 0; t < nk; ++t)
          if ((vec[t] >> f) & 1) v |= piv[t];
        perp[np++] = v;
      }
      Mask chi = 0;
      mult[0] += term;
      for (Mask g = 1; g < (Mask{1} << np); ++g) {
        chi ^= perp[__builtin_ctz(g)];
        mult[chi] += term;
      }
      if (i == all) break;
    }
    for (Mask chi = 0; chi < (Mask{1} << k); ++chi) {
      ++probe.characters;
      if (mult[chi] != (chi == omega ? 1 : 0)) {
        Mask label = 0;  // a character of (Z/2)^m with these values on the basis
        F2Subgroup perp = b.annihilator();
        for (Mask x = 0; x <= all; ++x) {
          bool ok = true;
          for (std::size_t j = 0; j < k && ok; ++j) ok = parity(x & basis[j]) == static_cast<int>((chi >> j) & 1);
          if (ok) {
            label = perp.reduce(x);
            break;
          }
          if (x == all) break;
        }
        probe.counterexamples.emplace_back(b, label);
      }
    }
  });
  return probe;
}

CompositionSum composition_identity(int n) {
  if (n < 1 || n > 30) throw std::invalid_argument("composition_identity: n must lie in 1..30");
  CompositionSum s;
  s.n = n;
  for (Mask cuts = 0; cuts < (Mask{1} << (n - 1)); ++cuts) {
    const auto parts = composition_from_cuts(n, cuts);
    const int k = static_cast<int>(parts.size());
    const std::int64_t term = std::int64_t{1} << (k - 1);
    s.sum = checked_add(s.sum, (n - k) % 2 ? -term : term);
    ++s.compositions;
  }
  return s;
}

InductionIdentity gln_induction_identity() {
  const F2Subgroup b = F2Subgroup::full(1);
  const VirtualCharacter lhs = VirtualCharacter::trivial(F2Subgroup(1)).induce_to(b) - VirtualCharacter::trivial(b);
  const VirtualCharacter eta = VirtualCharacter::character(b, 1);
  InductionIdentity r;
  r.at_identity = lhs.value(0);
  r.at_generator = lhs.value(1);
  r.eta_identity = eta.value(0);
  r.eta_generator = eta.value(1);
  r.holds = lhs == eta && r.at_identity == r.eta_identity && r.at_generator == r.eta_generator;
  return r;
}

FrobeniusReport frobenius_reciprocity_check(std::size_t m) {
  FrobeniusReport rep;
  rep.m = m;
  const F2Subgroup g = F2Subgroup::full(m);
  const auto irr = VirtualCharacter::irreducibles(g);
  for_each_subgroup(m, [&](const F2Subgroup& h) {
    ++rep.subgroups;
    const VirtualCharacter ind = VirtualCharacter::trivial(h).induce_to(g);
    for (Mask chi : irr) {
      ++rep.checks;
      const VirtualCharacter c = VirtualCharacter::character(g, chi);
      bool trivial = true;
      for (Mask x : h.basis()) trivial = trivial && !parity(chi & x);
      if (inner_product(c, ind) != (trivial ? 1 : 0)) ++rep.failures;
    }
  });
  return rep;
}

}  // namespace sympair
