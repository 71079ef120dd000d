#include "sympair/volume.hpp"

#include <stdexcept>

namespace sympair {

RatVector lattice_coordinates(const IntLattice& lattice, const RatVector& v) {
  const auto c = lattice.coordinates(v);
  if (!c) throw std::invalid_argument("lattice_coordinates: point " + to_string(v) + " is outside the lattice span");
  return *c;
}

const IntLattice& measure_lattice(const OrthogonalSet& y, const std::optional<IntLattice>& lattice) {
  const IntLattice& l = lattice ? *lattice : y.fan().levi(y.levi()).lattice;
  if (l.rank() != y.fan().levi(y.levi()).dim) throw std::invalid_argument("measure lattice must have full rank in V_M");
  return l;
}

Polytope hull_polytope(const OrthogonalSet& y, const std::optional<IntLattice>& lattice) {
  const IntLattice& l = measure_lattice(y, lattice);
  std::vector<RatVector> pts;
  for (const auto& p : y.points()) pts.push_back(lattice_coordinates(l, p));
  return Polytope(std::move(pts));
}

Rational volume_polytope(const OrthogonalSet& y, const std::optional<IntLattice>& lattice) {
  if (!y.is_positive()) throw std::invalid_argument("volume_polytope: orthogonal set is not positive");
  return hull_polytope(y, lattice).volume();
}

RatVector analytic_direction(std::size_t dim, std::size_t k) {
  RatVector mu(dim);
  Rational p = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    mu[i] = p;
    p *= static_cast<long>(k + 2);
  }
  return mu;
}

AnalyticVolume volume_analytic(const OrthogonalSet& y, std::size_t directions, const std::optional<IntLattice>& lattice) {
  const Fan& fan = y.fan();
  const IntLattice& l = measure_lattice(y, lattice);
  const std::size_t d = l.rank();
  const std::size_t count = y.points().size();
  std::vector<Rational> cov(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto& cor = fan.cone(y.chamber_cone(i)).simple_coroots;
    RatMatrix m(d, d);
    for (std::size_t j = 0; j < d; ++j) {
      const RatVector c = lattice_coordinates(l, cor[j]);
      for (std::size_t r = 0; r < d; ++r) m(r, j) = c[r];
    }
    const Rational det = determinant(m);
    cov[i] = det < 0 ? Rational(-det) : det;
  }
  Rational fact = 1;
  for (std::size_t i = 2; i <= d; ++i) fact *= static_cast<long>(i);

  AnalyticVolume out;
  for (std::size_t k = 0; out.directions.size() < directions; ++k) {
    if (k > 1000) throw std::logic_error("volume_analytic: no generic direction found");
    const RatVector mu = analytic_direction(fan.dim(), k);
    std::vector<Rational> denom(count, Rational(1));
    bool generic = true;
    for (std::size_t i = 0; i < count && generic; ++i)
      for (const auto& c : fan.cone(y.chamber_cone(i)).simple_coroots) {
        const Rational v = dot(mu, c);
        if (v == 0) {
          generic = false;
          break;
        }
        denom[i] *= v;
      }
    if (!generic) {
      ++out.skipped;
      continue;
    }
    // coefficient of t^(j-d) is sum_P c_P <mu,Y_P>^j / (j! prod); need j < d to vanish
    std::vector<Rational> lower(d, Rational(0));
    Rational top = 0;
    for (std::size_t i = 0; i < count; ++i) {
      const Rational m = dot(mu, y.point(i));
      Rational pw = 1;
      for (std::size_t j = 0; j < d; ++j) {
        lower[j] += cov[i] * pw / denom[i];
        pw *= m;
      }
      top += cov[i] * pw / denom[i];
    }
    for (const auto& v : lower)
      if (v != 0) out.lower_terms_vanish = false;
    const Rational value = top / fact;
    if (!out.values.empty() && value != out.values.front()) out.consistent = false;
    out.values.push_back(value);
    out.directions.push_back(mu);
  }
  out.value = out.values.front();
  return out;
}

HullCoherenceReport hull_coherence_check(const OrthogonalSet& y, const std::vector<RatVector>& points) {
  const IndicatorSum g = compile_gamma(y, y.fan().origin());
  const IntLattice& l = measure_lattice(y, std::nullopt);
  const Polytope hull = hull_polytope(y);
  HullCoherenceReport rep;
  for (const auto& h : points) {
    const Membership m = hull.locate(lattice_coordinates(l, h));
    if (m == Membership::Boundary) {
      ++rep.boundary;
      continue;
    }
    const long expected = m == Membership::Interior ? 1 : 0;
    if (g.evaluate(h) == expected) {
      ++rep.agree;
    } else {
      ++rep.disagree;
      rep.witnesses.push_back(h);
    }
  }
  return rep;
}

}  // namespace sympair
