#include "sympair/lattice_count.hpp"

#include <stdexcept>

namespace sympair {

RatVector default_dilation_direction(const Fan& fan) {
  const RatVector two_rho = fan.system().sum_positive_coroots();
  const RatVector rho = scale(Rational(1, 2), two_rho);
  return fan.system().lattice().contains(rho) ? rho : two_rho;
}

std::int64_t count_gamma_points(const OrthogonalSet& y, std::int64_t refine, const std::optional<IntLattice>& lattice) {
  if (refine < 1) throw std::invalid_argument("count_gamma_points: refinement must be >= 1");
  const IntLattice& l = measure_lattice(y, lattice);
  const std::size_t d = l.rank();
  // box of lattice coordinates (scaled by refine) around the points, one step of slack
  std::vector<std::int64_t> lo(d), hi(d);
  std::int64_t bound = 1;
  for (std::size_t i = 0; i < d; ++i) {
    Rational mn, mx;
    bool first = true;
    for (const auto& p : y.points()) {
      const Rational c = lattice_coordinates(l, p)[i] * refine;
      if (first || c < mn) mn = c;
      if (first || c > mx) mx = c;
      first = false;
    }
    lo[i] = floor_of(mn).convert_to<std::int64_t>() - 1;
    hi[i] = ceil_of(mx).convert_to<std::int64_t>() + 1;
    bound = std::max({bound, lo[i] < 0 ? -lo[i] : lo[i], hi[i] < 0 ? -hi[i] : hi[i]});
  }
  const IndicatorSum g = compile_gamma(y, y.fan().origin());
  const GridEvaluator eval(g, l.basis(), Integer(refine), bound);
  std::vector<std::int64_t> c = lo;
  std::int64_t count = 0;
  while (true) {
    const long v = eval.evaluate(c);
    if (v == 1) ++count;
    std::size_t i = 0;
    while (i < d && c[i] == hi[i]) c[i] = lo[i], ++i;
    if (i == d) break;
    ++c[i];
  }
  return count;
}

std::int64_t v_tilde_lattice(const OrthogonalSet& y, std::int64_t j, const RatVector& x0, std::int64_t refine,
                             const std::optional<IntLattice>& lattice) {
  if (!y.is_positive()) throw std::invalid_argument("v_tilde_lattice: orthogonal set is not positive");
  if (j < 0) throw std::invalid_argument("v_tilde_lattice: dilation must be >= 0");
  const Fan& fan = y.fan();
  for (auto s : fan.system().simple())
    if (dot(fan.system().root(s), x0) < 0) throw std::invalid_argument("v_tilde_lattice: X0 is not dominant");
  const OrthogonalSet shift = special_orthogonal_set(y.fan_ptr(), scale(Rational(j), x0), y.levi());
  return count_gamma_points(y + shift, refine, lattice);
}

Rational QuasiPolynomial::operator()(std::int64_t j) const {
  const auto& c = coeffs[static_cast<std::size_t>(((j % static_cast<std::int64_t>(period)) + period) % period)];
  Rational v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * j + c[i];
  return v;
}

Rational QuasiPolynomial::constant_term() const {
  Rational s = 0;
  for (const auto& c : coeffs) s += c[0];
  return s / static_cast<long>(period);
}

namespace {

// Coefficients of the polynomial through (x_i, y_i), by solving the Vandermonde system.
std::vector<Rational> interpolate(const std::vector<std::int64_t>& x, const std::vector<Rational>& y) {
  const std::size_t n = x.size();
  RatMatrix v(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational p = 1;
    for (std::size_t j = 0; j < n; ++j) {
      v(i, j) = p;
      p *= x[i];
    }
  }
  const auto c = solve(v, y);
  if (!c) throw std::logic_error("interpolate: singular Vandermonde system");
  return *c;
}

}  // namespace

std::optional<QuasiPolynomial> fit_quasi_polynomial(const std::vector<Integer>& samples, std::size_t degree,
                                                    std::size_t max_period) {
  for (std::size_t p = 1; p <= max_period; ++p) {
    if (samples.size() < p * (degree + 2))
      throw std::invalid_argument("fit_quasi_polynomial: " + std::to_string(samples.size()) +
                                  " samples cannot determine and verify period " + std::to_string(p) + ", degree " +
                                  std::to_string(degree));
    QuasiPolynomial q{p, degree, {}};
    bool fits = true;
    for (std::size_t r = 0; r < p && fits; ++r) {
      std::vector<std::int64_t> xs;
      std::vector<Rational> ys;
      for (std::size_t j = r; xs.size() <= degree; j += p) {
        xs.push_back(static_cast<std::int64_t>(j));
        ys.emplace_back(samples[j]);
      }
      q.coeffs.push_back(interpolate(xs, ys));
    }
    for (std::size_t j = 0; j < samples.size() && fits; ++j)
      if (q(static_cast<std::int64_t>(j)) != Rational(samples[j])) fits = false;
    if (fits) return q;
  }
  return std::nullopt;
}

Rational exp_poly_constant_term(const std::vector<Integer>& samples, std::size_t degree, std::size_t max_period) {
  const auto q = fit_quasi_polynomial(samples, degree, max_period);
  if (!q) throw std::runtime_error("exp_poly_constant_term: no quasi-polynomial of the given degree and period fits");
  return q->constant_term();
}

bool ApproximationReport::fits_exact() const {
  for (const auto& r : rows)
    if (!r.fit) return false;
  return true;
}

namespace {

std::vector<RatVector> unit_box(std::size_t d) {
  std::vector<RatVector> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    RatVector v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = (mask >> i) & 1 ? 1 : -1;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

ApproximationReport approximation_check(const OrthogonalSet& y, std::int64_t kmax, const RatVector& x0,
                                        std::size_t max_period) {
  ApproximationReport rep;
  rep.volume = volume_polytope(y);
  const Polytope hull = hull_polytope(y);
  const std::size_t d = hull.ambient_dim();
  rep.degree = d;
  const Polytope box(unit_box(d));
  if (hull.dim() < d) {
    rep.c_bound = minkowski_sum(hull, box).volume();
  } else {
    for (const auto& f : hull.facet_polytopes()) rep.c_bound += minkowski_sum(f, box).volume();
  }
  Rational kd = 1;
  for (std::int64_t k = 1; k <= kmax; ++k) {
    ApproximationRow row;
    row.refine = k;
    const std::size_t n = max_period * (d + 2);
    for (std::size_t j = 0; j < n; ++j)
      row.counts.emplace_back(v_tilde_lattice(y, static_cast<std::int64_t>(j), x0, k));
    row.fit = fit_quasi_polynomial(row.counts, d, max_period);
    kd = 1;
    for (std::size_t i = 0; i < d; ++i) kd *= k;
    if (row.fit) {
      row.normalized = row.fit->constant_term() / kd;
      row.error = row.normalized - rep.volume;
      if (row.error < 0) row.error = -row.error;
      if (row.error * k > rep.c_fit) rep.c_fit = row.error * k;
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace sympair
