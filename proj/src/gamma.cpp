#include "sympair/gamma.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace sympair {

int tau(const Fan& fan, std::size_t p, std::size_t q, const RatVector& h) {
  for (auto i : fan.relative_simple(p, q))
    if (dot(fan.cone(p).simple_roots[i], h) <= 0) return 0;
  return 1;
}

int tau_hat(const Fan& fan, std::size_t p, std::size_t q, const RatVector& h) {
  for (const auto& w : fan.relative_dual_basis(p, q))
    if (dot(w, h) <= 0) return 0;
  return 1;
}

int delta(const Fan& fan, std::size_t r, const RatVector& h) {
  for (auto w : fan.levi_of(r).zero_walls)
    if (dot(fan.system().root(fan.walls()[w]), h) != 0) return 0;
  return 1;
}

long gamma_pq(const Fan& fan, std::size_t p, std::size_t q, const RatVector& h, const RatVector& x) {
  if (!fan.parabolic_le(p, q)) throw std::invalid_argument("gamma_pq: P is not contained in Q");
  const RatVector hx = sub(h, x);
  long total = 0;
  for (std::size_t s = 0; s < fan.cones().size(); ++s) {
    if (!fan.parabolic_le(p, s) || !fan.parabolic_le(s, q)) continue;
    const long sgn = (fan.cone(s).dim - fan.cone(q).dim) % 2 == 0 ? 1 : -1;
    total += sgn * tau(fan, p, s, h) * tau_hat(fan, s, q, hx);
  }
  return total;
}

long gamma_mq(const OrthogonalSet& y, std::size_t q, const RatVector& h) {
  const Fan& fan = y.fan();
  const auto& cones = fan.levi(y.levi()).cones;
  if (std::find(cones.begin(), cones.end(), q) == cones.end()) throw std::invalid_argument("gamma_mq: Q is not in F(M)");
  long total = 0;
  for (auto r : cones) {
    if (!fan.parabolic_le(r, q) || !delta(fan, r, h)) continue;
    total += gamma_pq(fan, r, q, h, y.point_for(r));
  }
  return total;
}

std::size_t IndicatorSum::add_form(const RatVector& a, const Rational& b) {
  auto key = std::make_pair(a, b);
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  index_.emplace(std::move(key), forms_.size());
  forms_.push_back({a, b});
  return forms_.size() - 1;
}

long IndicatorSum::evaluate_signs(const std::vector<std::int8_t>& signs) const {
  long total = 0;
  for (const auto& t : terms_) {
    bool on = true;
    for (auto z : t.zero)
      if (signs[z] != 0) {
        on = false;
        break;
      }
    if (!on) continue;
    for (auto p : t.positive)
      if (signs[p] <= 0) {
        on = false;
        break;
      }
    if (on) total += t.coeff;
  }
  return total;
}

long IndicatorSum::evaluate(const RatVector& h) const {
  std::vector<std::int8_t> signs(forms_.size());
  for (std::size_t i = 0; i < forms_.size(); ++i) signs[i] = static_cast<std::int8_t>(sign(dot(forms_[i].a, h) - forms_[i].b));
  return evaluate_signs(signs);
}

GridEvaluator::GridEvaluator(const IndicatorSum& sum, const RatMatrix& basis, const Integer& k, std::int64_t coord_bound)
    : sum_(&sum), d_(basis.cols()), signs_(sum.forms().size()) {
  const Integer limit = Integer(1) << 62;
  for (const auto& f : sum.forms()) {
    const RatVector row = basis.apply_left(f.a);
    const Rational off = f.b * Rational(k);
    Integer den = boost::multiprecision::denominator(off);
    for (const auto& x : row) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(x));
    Integer total = 0;
    for (const auto& x : row) {
      const Integer c = boost::multiprecision::numerator(x * Rational(den));
      total += (c < 0 ? Integer(-c) : c) * coord_bound;
      coeffs_.push_back(c.convert_to<std::int64_t>());
    }
    const Integer o = boost::multiprecision::numerator(off * Rational(den));
    total += o < 0 ? Integer(-o) : o;
    if (total >= limit) throw std::overflow_error("GridEvaluator: form values exceed 64-bit range");
    offsets_.push_back(o.convert_to<std::int64_t>());
  }
}

long GridEvaluator::evaluate(const std::vector<std::int64_t>& c) const {
  const std::size_t nf = offsets_.size();
  for (std::size_t f = 0; f < nf; ++f) {
    std::int64_t v = -offsets_[f];
    const std::int64_t* row = &coeffs_[f * d_];
    for (std::size_t i = 0; i < d_; ++i) v += row[i] * c[i];
    signs_[f] = static_cast<std::int8_t>((v > 0) - (v < 0));
  }
  return sum_->evaluate_signs(signs_);
}

GammaSkeleton::GammaSkeleton(std::shared_ptr<const Fan> fan, std::size_t levi, std::size_t q)
    : fan_(std::move(fan)), levi_(levi), q_(q) {
  const Fan& f = *fan_;
  const Levi& m = f.levi(levi_);
  if (std::find(m.cones.begin(), m.cones.end(), q_) == m.cones.end())
    throw std::invalid_argument("GammaSkeleton: Q is not in F(M)");
  std::map<std::size_t, std::vector<RatVector>> dual;  // S -> dual weights of S in Q
  for (auto r : m.cones) {
    if (!f.parabolic_le(r, q_)) continue;
    std::vector<std::size_t> zero;
    for (auto w : f.levi_of(r).zero_walls)
      if (!std::binary_search(m.zero_walls.begin(), m.zero_walls.end(), w)) zero.push_back(w);
    for (std::size_t s = 0; s < f.cones().size(); ++s) {
      if (!f.parabolic_le(r, s) || !f.parabolic_le(s, q_)) continue;
      auto it = dual.find(s);
      if (it == dual.end()) it = dual.emplace(s, f.relative_dual_basis(s, q_)).first;
      Term t;
      t.coeff = (f.cone(s).dim - f.cone(q_).dim) % 2 == 0 ? 1 : -1;
      t.r = r;
      t.zero_walls = zero;
      for (auto i : f.relative_simple(r, s)) t.roots.push_back(f.cone(r).simple_roots[i]);
      t.weights = it->second;
      terms_.push_back(std::move(t));
    }
  }
}

void GammaSkeleton::bind_into(const OrthogonalSet& y, IndicatorSum& out, const std::vector<std::size_t>& extra_positive) const {
  if (y.fan_ptr() != fan_ || y.levi() != levi_) throw std::invalid_argument("GammaSkeleton: orthogonal set of another Levi");
  std::map<std::size_t, RatVector> yr;
  for (const auto& t : terms_) {
    auto it = yr.find(t.r);
    if (it == yr.end()) it = yr.emplace(t.r, y.point_for(t.r)).first;
    IndicatorSum::Term b;
    b.coeff = t.coeff;
    for (auto w : t.zero_walls) b.zero.push_back(out.add_form(fan_->system().root(fan_->walls()[w]), 0));
    for (const auto& a : t.roots) b.positive.push_back(out.add_form(a, 0));
    for (const auto& w : t.weights) b.positive.push_back(out.add_form(w, dot(w, it->second)));
    b.positive.insert(b.positive.end(), extra_positive.begin(), extra_positive.end());
    out.add_term(std::move(b));
  }
}

IndicatorSum GammaSkeleton::bind(const OrthogonalSet& y) const {
  IndicatorSum out;
  bind_into(y, out, {});
  return out;
}

IndicatorSum compile_gamma(const OrthogonalSet& y, std::size_t q) {
  return GammaSkeleton(y.fan_ptr(), y.levi(), q).bind(y);
}

IndicatorSum compile_partition_of_unity(const OrthogonalSet& y) {
  const Fan& fan = y.fan();
  IndicatorSum out;
  for (auto q : fan.levi(y.levi()).cones) {
    const RatVector yq = y.point_for(q);
    std::vector<std::size_t> extra;
    for (const auto& a : fan.cone(q).simple_roots) extra.push_back(out.add_form(a, dot(a, yq)));
    GammaSkeleton(y.fan_ptr(), y.levi(), q).bind_into(y, out, extra);
  }
  return out;
}

PartitionReport partition_of_unity_check(const OrthogonalSet& y, const std::vector<RatVector>& points) {
  const IndicatorSum sum = compile_partition_of_unity(y);
  PartitionReport rep;
  for (const auto& h : points) {
    ++rep.evaluated;
    const long v = sum.evaluate(h);
    if (v != 1) rep.violations.emplace_back(h, v);
  }
  return rep;
}

Rational support_constant(const Fan& fan, std::size_t levi, std::size_t q) {
  Rational best = 0;
  for (auto r : fan.levi(levi).cones) {
    if (!fan.parabolic_le(r, q)) continue;
    const auto idx = fan.relative_simple(r, q);
    const auto weights = fan.relative_dual_basis(r, q);
    Rational s = 0;
    for (std::size_t i = 0; i < idx.size(); ++i)
      s += lattice_norm(fan, fan.cone(r).simple_coroots[idx[i]]) * dual_lattice_norm(fan, weights[i]);
    best = std::max(best, s);
  }
  return best;
}

SupportReport support_bound_check(const OrthogonalSet& y, std::size_t q, const std::vector<RatVector>& points) {
  const Fan& fan = y.fan();
  const IndicatorSum g = compile_gamma(y, q);
  const IndicatorSum g2 = compile_gamma(y.scaled(2), q);
  SupportReport rep;
  rep.q = q;
  rep.sup_y = y.sup_norm(q);
  rep.bound = support_constant(fan, y.levi(), q);
  rep.empirical_c = 0;
  for (const auto& h : points) {
    ++rep.evaluated;
    const long v = g.evaluate(h);
    if (g2.evaluate(scale(Rational(2), h)) != v) ++rep.homogeneity_violations;
    if (v == 0) continue;
    ++rep.nonzero;
    const Rational hq = lattice_norm(fan, sub(h, fan.project(q, h)));
    if (rep.sup_y == 0) {
      if (hq != 0) {
        rep.unbounded = true;
        rep.witness = h;
      }
      continue;
    }
    const Rational ratio = hq / rep.sup_y;
    if (ratio > rep.empirical_c || rep.witness.empty()) {
      rep.empirical_c = std::max(rep.empirical_c, ratio);
      rep.witness = h;
    }
  }
  return rep;
}

std::vector<RatVector> sample_points(const OrthogonalSet& y, std::size_t count, std::mt19937_64& rng) {
  const Fan& fan = y.fan();
  const Levi& m = fan.levi(y.levi());
  std::vector<RatVector> out;
  for (std::size_t i = 0; i < y.points().size() && out.size() < count / 4; ++i) {
    out.push_back(y.point(i));
    const RatVector& next = y.point((i + 1) % y.points().size());
    out.push_back(scale(Rational(1, 2), add(y.point(i), next)));
  }
  if (out.size() < count / 4 + 1 && out.size() < count) out.push_back(zero_vector(fan.dim()));
  const Rational sup = y.sup_norm();
  const long radius = static_cast<long>(ceil_of(2 * sup).convert_to<long>()) + 1;
  const RatMatrix& lb = fan.system().lattice().basis();
  while (out.size() < count) {
    RatVector c(fan.dim());
    for (auto& x : c) x = random_rational(rng, radius, 6);
    out.push_back(m.proj.apply(lb.apply(c)));
  }
  return out;
}

}  // namespace sympair
