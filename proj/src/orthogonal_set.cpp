#include "sympair/orthogonal_set.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace sympair {

std::vector<Adjacency> chamber_adjacencies(const Fan& fan, std::size_t levi) {
  const Levi& l = fan.levi(levi);
  std::vector<Adjacency> out;
  for (auto f : l.cones) {
    if (fan.cone(f).dim + 1 != l.dim) continue;
    std::vector<std::size_t> sides;
    for (std::size_t i = 0; i < l.chambers.size(); ++i)
      if (fan.parabolic_le(l.chambers[i], f)) sides.push_back(i);
    if (sides.size() != 2) throw std::logic_error("chamber_adjacencies: a wall must border exactly two chambers");
    const std::size_t p = l.chambers[sides[0]], q = l.chambers[sides[1]];
    const auto rp = fan.relative_simple(p, f);
    const auto rq = fan.relative_simple(q, f);
    if (rp.size() != 1 || rq.size() != 1) throw std::logic_error("chamber_adjacencies: wall is not of codimension one");
    const RatVector& a = fan.cone(p).simple_roots[rp[0]];
    const RatVector& av = fan.cone(p).simple_coroots[rp[0]];
    if (fan.cone(q).simple_roots[rq[0]] != scale(Rational(-1), a) ||
        fan.cone(q).simple_coroots[rq[0]] != scale(Rational(-1), av))
      throw std::logic_error("chamber_adjacencies: opposite chambers disagree on the separating coroot");
    out.push_back({sides[0], sides[1], f, av});
  }
  return out;
}

OrthogonalSet::OrthogonalSet(std::shared_ptr<const Fan> fan, std::size_t levi, std::vector<RatVector> points)
    : fan_(std::move(fan)), levi_(levi), points_(std::move(points)) {
  const Levi& l = fan_->levi(levi_);
  if (points_.size() != l.chambers.size())
    throw std::invalid_argument("OrthogonalSet: expected " + std::to_string(l.chambers.size()) + " points, got " +
                                std::to_string(points_.size()));
  for (const auto& y : points_) {
    if (y.size() != fan_->dim()) throw std::invalid_argument("OrthogonalSet: point has wrong dimension");
    if (l.proj.apply(y) != y) throw std::invalid_argument("OrthogonalSet: point " + to_string(y) + " is not in the Levi subspace");
  }
  for (const auto& adj : chamber_adjacencies(*fan_, levi_)) {
    const RatVector d = sub(points_[adj.p], points_[adj.q]);
    Rational r = 0;
    if (!is_zero(d) && !proportional(adj.coroot, d, &r))
      throw std::invalid_argument("OrthogonalSet: Y_P - Y_P' = " + to_string(d) + " is not a multiple of the coroot " +
                                  to_string(adj.coroot) + " (chambers " + std::to_string(adj.p) + ", " +
                                  std::to_string(adj.q) + ")");
    r_.push_back(r);
  }
}

bool OrthogonalSet::is_positive() const {
  return std::all_of(r_.begin(), r_.end(), [](const Rational& r) { return r >= 0; });
}

RatVector OrthogonalSet::point_for(std::size_t cone) const {
  const Levi& l = fan_->levi(levi_);
  for (std::size_t i = 0; i < l.chambers.size(); ++i)
    if (fan_->parabolic_le(l.chambers[i], cone)) return fan_->project(cone, points_[i]);
  throw std::invalid_argument("point_for: cone is not in F(M)");
}

Rational OrthogonalSet::sup_norm(std::optional<std::size_t> q) const {
  Rational best = 0;
  for (const auto& y : points_) {
    const RatVector v = q ? sub(y, fan_->project(*q, y)) : y;
    best = std::max(best, lattice_norm(*fan_, v));
  }
  return best;
}

OrthogonalSet OrthogonalSet::translated(const RatVector& t) const {
  std::vector<RatVector> p;
  for (const auto& y : points_) p.push_back(add(y, t));
  return OrthogonalSet(fan_, levi_, std::move(p));
}

OrthogonalSet OrthogonalSet::scaled(const Rational& t) const {
  std::vector<RatVector> p;
  for (const auto& y : points_) p.push_back(scale(t, y));
  return OrthogonalSet(fan_, levi_, std::move(p));
}

OrthogonalSet operator+(const OrthogonalSet& a, const OrthogonalSet& b) {
  if (a.fan_ != b.fan_ || a.levi_ != b.levi_) throw std::invalid_argument("OrthogonalSet sum: different Levis");
  std::vector<RatVector> p;
  for (std::size_t i = 0; i < a.points_.size(); ++i) p.push_back(add(a.points_[i], b.points_[i]));
  return OrthogonalSet(a.fan_, a.levi_, std::move(p));
}

OrthogonalSet special_orthogonal_set(std::shared_ptr<const Fan> fan, const RatVector& x, std::size_t levi) {
  std::vector<RatVector> pts;
  for (auto c : fan->levi(0).chambers) pts.push_back(fan->weyl_group()[static_cast<std::size_t>(fan->cone(c).weyl)].apply(x));
  OrthogonalSet base(fan, 0, std::move(pts));
  return levi == 0 ? base : project_to_levi(base, levi);
}

OrthogonalSet project_to_levi(const OrthogonalSet& y, std::size_t levi) {
  const Fan& fan = y.fan();
  const auto& z = fan.levi(levi).zero_walls;
  const auto& zm = fan.levi(y.levi()).zero_walls;
  if (!std::includes(z.begin(), z.end(), zm.begin(), zm.end()))
    throw std::invalid_argument("project_to_levi: target Levi does not contain M");
  std::vector<RatVector> pts;
  for (auto q : fan.levi(levi).chambers) pts.push_back(y.point_for(q));
  return OrthogonalSet(y.fan_ptr(), levi, std::move(pts));
}

Rational lattice_norm(const Fan& fan, const RatVector& v) {
  const auto c = fan.system().lattice().coordinates(v);
  Rational best = 0;
  for (const auto& x : *c) best = std::max(best, x < 0 ? Rational(-x) : x);
  return best;
}

Rational dual_lattice_norm(const Fan& fan, const RatVector& covector) {
  const RatVector v = fan.system().lattice().basis().apply_left(covector);
  Rational s = 0;
  for (const auto& x : v) s += x < 0 ? Rational(-x) : x;
  return s;
}

std::vector<std::vector<RatVector>> orthogonal_set_basis(const Fan& fan, std::size_t levi) {
  const Levi& l = fan.levi(levi);
  const std::size_t n = fan.dim(), count = l.chambers.size();
  std::vector<RatVector> rows;
  const auto unknown_row = [&](std::size_t chamber, const RatVector& covector, const Rational& s) {
    RatVector row = zero_vector(n * count);
    for (std::size_t k = 0; k < n; ++k) row[chamber * n + k] = s * covector[k];
    return row;
  };
  for (std::size_t c = 0; c < count; ++c)
    for (auto w : l.zero_walls) rows.push_back(unknown_row(c, fan.system().root(fan.walls()[w]), 1));
  for (const auto& adj : chamber_adjacencies(fan, levi)) {
    // covectors killing the coroot
    const RatMatrix annihilators = kernel(RatMatrix::from_rows(n, {adj.coroot}));
    for (std::size_t j = 0; j < annihilators.cols(); ++j) {
      const RatVector c = annihilators.col(j);
      RatVector row = add(unknown_row(adj.p, c, 1), unknown_row(adj.q, c, -1));
      rows.push_back(std::move(row));
    }
  }
  const RatMatrix k = rows.empty() ? RatMatrix::identity(n * count) : kernel(RatMatrix::from_rows(n * count, rows));
  std::vector<std::vector<RatVector>> out;
  for (std::size_t j = 0; j < k.cols(); ++j) {
    std::vector<RatVector> pts(count, zero_vector(n));
    for (std::size_t c = 0; c < count; ++c)
      for (std::size_t i = 0; i < n; ++i) pts[c][i] = k(c * n + i, j);
    out.push_back(std::move(pts));
  }
  return out;
}

long uniform_int(std::mt19937_64& rng, long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return lo + static_cast<long>(x % range);
}

Rational random_rational(std::mt19937_64& rng, long num_bound, long max_den) {
  const long den = uniform_int(rng, 1, max_den);
  return Rational(uniform_int(rng, -num_bound * den, num_bound * den), den);
}

namespace {

std::vector<RatVector> random_combination(const std::vector<std::vector<RatVector>>& basis, std::size_t count,
                                          std::size_t n, std::mt19937_64& rng) {
  std::vector<RatVector> pts(count, zero_vector(n));
  for (const auto& b : basis) {
    const Rational c(uniform_int(rng, -2, 2));
    if (c == 0) continue;
    for (std::size_t i = 0; i < count; ++i) pts[i] = add(pts[i], scale(c, b[i]));
  }
  return pts;
}

}  // namespace

OrthogonalSet random_positive_set(std::shared_ptr<const Fan> fan, std::size_t levi, std::mt19937_64& rng,
                                  bool degenerate) {
  const std::size_t n = fan->dim();
  const RatMatrix cow = fan->system().fundamental_coweights();
  RatVector x = zero_vector(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (degenerate && uniform_int(rng, 0, 2) == 0) continue;
    const long den = uniform_int(rng, 1, 3);
    x = add(x, scale(Rational(uniform_int(rng, den, 4 * den), den), cow.col(i)));
  }
  const OrthogonalSet base = special_orthogonal_set(fan, x, levi);
  const auto basis = orthogonal_set_basis(*fan, levi);
  const OrthogonalSet z(fan, levi, random_combination(basis, base.points().size(), n, rng));
  // largest t keeping every multiplier of base + t z nonnegative, capped at 1
  Rational t = 1;
  for (std::size_t i = 0; i < base.multipliers().size(); ++i)
    if (z.multipliers()[i] < 0) t = std::min(t, base.multipliers()[i] / -z.multipliers()[i]);
  t *= Rational(uniform_int(rng, 0, 4), 4);
  OrthogonalSet y = base + z.scaled(t);
  if (!y.is_positive()) throw std::logic_error("random_positive_set: generated set is not positive");
  return y;
}

OrthogonalSet random_nonpositive_set(std::shared_ptr<const Fan> fan, std::size_t levi, std::mt19937_64& rng) {
  const auto basis = orthogonal_set_basis(*fan, levi);
  const std::size_t count = fan->levi(levi).chambers.size();
  for (int attempt = 0; attempt < 1000; ++attempt) {
    OrthogonalSet z(fan, levi, random_combination(basis, count, fan->dim(), rng));
    if (!z.is_positive()) return z;
    z = z.scaled(-1);
    if (!z.is_positive()) return z;
  }
  throw std::logic_error("random_nonpositive_set: this Levi has no non-positive orthogonal sets");
}

std::string sign_string(const SignVector& s) {
  std::string out;
  for (auto x : s) out += x > 0 ? '+' : (x < 0 ? '-' : '0');
  return out;
}

namespace {

RatVector point_from_json(const nlohmann::json& v, std::size_t n) {
  if (!v.is_array() || v.size() != n) throw std::invalid_argument("fixture: point has wrong length");
  RatVector out;
  for (const auto& e : v) {
    if (e.is_number_integer()) out.emplace_back(e.get<long long>());
    else if (e.is_string()) out.push_back(parse_rational(e.get<std::string>()));
    else throw std::invalid_argument("fixture: coordinates must be integers or \"p/q\" strings");
  }
  return out;
}

}  // namespace

OrthogonalSet orthogonal_set_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("system") || !j.contains("points"))
    throw std::invalid_argument("fixture: orthogonal set needs \"system\" and \"points\"");
  std::shared_ptr<const Fan> fan = j.at("system").is_string()
                                       ? builtin_fan(j.at("system").get<std::string>())
                                       : std::make_shared<const Fan>(root_system_from_json(j.at("system")));
  std::size_t levi = 0;
  if (j.contains("levi")) {
    auto z = j.at("levi").get<std::vector<std::size_t>>();
    std::sort(z.begin(), z.end());
    bool found = false;
    for (std::size_t m = 0; m < fan->levis().size(); ++m)
      if (fan->levi(m).zero_walls == z) {
        levi = m;
        found = true;
      }
    if (!found) throw std::invalid_argument("fixture: \"levi\" is not the zero-wall set of a flat");
  }
  const auto& chambers = fan->levi(levi).chambers;
  std::vector<RatVector> pts;
  const auto& p = j.at("points");
  if (p.is_array()) {
    for (const auto& v : p) pts.push_back(point_from_json(v, fan->dim()));
  } else if (p.is_object()) {
    for (auto c : chambers) {
      const std::string key = sign_string(fan->cone(c).signs);
      if (!p.contains(key)) throw std::invalid_argument("fixture: missing point for chamber " + key);
      pts.push_back(point_from_json(p.at(key), fan->dim()));
    }
  } else {
    throw std::invalid_argument("fixture: \"points\" must be a list or an object");
  }
  return OrthogonalSet(fan, levi, std::move(pts));
}

nlohmann::json orthogonal_set_to_json(const OrthogonalSet& y) {
  nlohmann::json j;
  j["system"] = y.fan().system().name();
  j["levi"] = y.fan().levi(y.levi()).zero_walls;
  nlohmann::json pts = nlohmann::json::object();
  for (std::size_t i = 0; i < y.points().size(); ++i) {
    nlohmann::json v = nlohmann::json::array();
    for (const auto& x : y.point(i)) v.push_back(to_string(x));
    pts[sign_string(y.fan().cone(y.chamber_cone(i)).signs)] = v;
  }
  j["points"] = pts;
  return j;
}

}  // namespace sympair
