#include "oracles.hpp"
#include "sympair/lattice_count.hpp"

#include <doctest.h>

using namespace sympair;

namespace {

RatVector rv(std::vector<long> v) { return RatVector(v.begin(), v.end()); }

OrthogonalSet seg() {
  return orthogonal_set_from_json(nlohmann::json::parse(R"({"system":"A1","points":[[3],[-1]]})"));
}

// Partition of unity summed straight from the indicator definitions.
long direct_partition(const OrthogonalSet& y, const RatVector& h) {
  const Fan& fan = y.fan();
  long total = 0;
  for (auto q : fan.levi(y.levi()).cones)
    total += gamma_mq(y, q, h) * tau(fan, q, fan.origin(), sub(h, y.point_for(q)));
  return total;
}

std::vector<RatVector> hull_vertices_2d(const OrthogonalSet& y) { return oracle::hull2d(y.points()); }

}  // namespace

TEST_CASE("indicators on A1") {
  const auto fan = builtin_fan("A1");
  const std::size_t plus = fan->facet_of(rv({1})), minus = fan->facet_of(rv({-1})), o = fan->origin();
  CHECK(tau(*fan, plus, o, rv({1})) == 1);
  CHECK(tau(*fan, plus, o, rv({0})) == 0);
  CHECK(tau(*fan, plus, o, rv({-1})) == 0);
  CHECK(tau(*fan, minus, o, rv({-1})) == 1);
  CHECK(tau(*fan, plus, plus, rv({-5})) == 1);
  CHECK(tau_hat(*fan, plus, o, rv({2})) == 1);
  CHECK_THROWS_AS(gamma_pq(*fan, o, plus, rv({0}), rv({0})), std::invalid_argument);
  // gamma^G_P(H, X) = [H > 0] - [H > X]
  for (long x = -3; x <= 3; ++x)
    for (long h = -5; h <= 5; ++h) {
      const long expected = (h > 0) - (h > x);
      CHECK(gamma_pq(*fan, plus, o, rv({h}), rv({x})) == expected);
    }
}

TEST_CASE("gamma of a segment is its indicator") {
  const auto y = seg();
  const std::size_t o = y.fan().origin();
  for (long num = -12; num <= 16; ++num) {
    const RatVector h{Rational(num, 4)};
    const long expected = (num >= -4 && num <= 12) ? 1 : 0;
    CHECK(gamma_mq(y, o, h) == expected);
    CHECK(compile_gamma(y, o).evaluate(h) == expected);
  }
}

TEST_CASE("compiled and direct gamma agree") {
  std::mt19937_64 rng(11);
  for (const auto& name : {"A2", "B2", "G2"}) {
    const auto fan = builtin_fan(name);
    for (std::size_t l = 0; l < fan->levis().size(); ++l) {
      const auto y = random_positive_set(fan, l, rng);
      const auto pts = sample_points(y, 60, rng);
      for (auto q : fan->levi(l).cones) {
        const IndicatorSum s = compile_gamma(y, q);
        for (const auto& h : pts) CHECK(s.evaluate(h) == gamma_mq(y, q, h));
      }
    }
  }
}

TEST_CASE("partition of unity") {
  std::mt19937_64 rng(12);
  for (const auto& name : {"A1", "A2", "A3", "B2", "G2"}) {
    const auto fan = builtin_fan(name);
    for (std::size_t l = 0; l + 1 < fan->levis().size(); ++l) {
      for (bool positive : {true, false}) {
        const auto y = positive ? random_positive_set(fan, l, rng) : random_nonpositive_set(fan, l, rng);
        const auto pts = sample_points(y, 40, rng);
        const auto report = partition_of_unity_check(y, pts);
        CHECK_MESSAGE(report.ok(), name, " levi ", l);
        CHECK(report.evaluated == pts.size());
        if (fan->dim() <= 2)
          for (std::size_t i = 0; i < 10 && i < pts.size(); ++i) CHECK(direct_partition(y, pts[i]) == 1);
      }
    }
  }
}

TEST_CASE("gamma of a positive set is the hull indicator (planar oracle)") {
  std::mt19937_64 rng(13);
  for (const auto& name : {"A2", "B2", "G2", "C2", "BC2"}) {
    const auto fan = builtin_fan(name);
    for (int rep = 0; rep < 4; ++rep) {
      const auto y = random_positive_set(fan, 0, rng);
      const auto poly = hull_vertices_2d(y);
      if (poly.size() < 3) continue;
      const IndicatorSum g = compile_gamma(y, fan->origin());
      std::size_t interior = 0;
      for (const auto& h : sample_points(y, 150, rng)) {
        const int side = oracle::polygon_side(poly, h);
        if (side == 0) continue;
        interior += side == 1;
        CHECK(g.evaluate(h) == (side == 1 ? 1 : 0));
      }
      CHECK(interior > 0);
      const auto coh = hull_coherence_check(y, sample_points(y, 50, rng));
      CHECK(coh.ok());
    }
  }
}

TEST_CASE("volumes: examples") {
  CHECK(volume_polytope(seg()) == 4);
  const auto a2 = builtin_fan("A2");
  const auto zero = OrthogonalSet(a2, 0, std::vector<RatVector>(6, rv({0, 0})));
  CHECK(volume_polytope(zero) == 0);
  CHECK(volume_analytic(zero).value == 0);
  // Y[2 rho^vee] on A2: the hexagon with vertices w(2, 2)
  const auto hex = special_orthogonal_set(a2, a2->system().sum_positive_coroots());
  const Rational area = oracle::shoelace(oracle::hull2d(hex.points()));
  CHECK(volume_polytope(hex) == area);
  CHECK(area == 12);
  CHECK(volume_analytic(hex).value == 12);
  std::mt19937_64 rng(3);
  CHECK_THROWS_AS(volume_polytope(random_nonpositive_set(a2, 0, rng)), std::invalid_argument);
}

TEST_CASE("volumes: shoelace oracle in rank 2") {
  std::mt19937_64 rng(14);
  for (const auto& name : {"A2", "B2", "G2", "BC2"}) {
    const auto fan = builtin_fan(name);
    // the coroot lattice is Z^2 in these coordinates
    REQUIRE(fan->levi(0).lattice.basis() == RatMatrix::identity(2));
    for (int rep = 0; rep < 10; ++rep) {
      const auto y = random_positive_set(fan, 0, rng, rep % 3 == 0);
      CHECK(volume_polytope(y) == oracle::shoelace(oracle::hull2d(y.points())));
    }
  }
}

TEST_CASE("volumes: analytic formula equals the polytope volume") {
  std::mt19937_64 rng(15);
  for (const auto& name : {"A1", "A2", "B2", "G2", "BC2", "A3", "B3"}) {
    const auto fan = builtin_fan(name);
    for (std::size_t l = 0; l + 1 < fan->levis().size(); ++l) {
      const auto y = random_positive_set(fan, l, rng);
      const auto a = volume_analytic(y);
      CHECK(a.consistent);
      CHECK(a.lower_terms_vanish);
      CHECK(a.values.size() == 3);
      CHECK_MESSAGE(a.value == volume_polytope(y), name, " levi ", l);
    }
  }
}

TEST_CASE("volumes: translation and dilation") {
  std::mt19937_64 rng(16);
  for (const auto& name : {"A2", "B2", "A3"}) {
    const auto fan = builtin_fan(name);
    for (std::size_t l = 0; l + 1 < fan->levis().size(); ++l) {
      const auto y = random_positive_set(fan, l, rng);
      const std::size_t d = fan->levi(l).dim;
      const Rational v = volume_polytope(y);
      RatVector t(fan->dim());
      for (auto& x : t) x = random_rational(rng, 7, 3);
      t = fan->levi(l).proj.apply(t);
      CHECK(volume_polytope(y.translated(t)) == v);
      CHECK(volume_analytic(y.translated(t)).value == v);
      const Rational s(5, 2);
      Rational sd = 1;
      for (std::size_t i = 0; i < d; ++i) sd *= s;
      CHECK(volume_polytope(y.scaled(s)) == sd * v);
      CHECK(volume_analytic(y.scaled(s)).value == sd * v);
    }
  }
}

TEST_CASE("volumes: a finer measure lattice scales the volume by the index") {
  const auto fan = builtin_fan("A2");
  const auto y = special_orthogonal_set(fan, rv({2, 2}));
  const IntLattice half = fan->levi(0).lattice.refined(2);
  CHECK(volume_polytope(y, half) == 4 * volume_polytope(y));
  CHECK(volume_analytic(y, 3, half).value == 4 * volume_polytope(y));
}

TEST_CASE("volumes: projection to a Levi keeps positivity") {
  std::mt19937_64 rng(17);
  const auto fan = builtin_fan("A3");
  const auto y = random_positive_set(fan, 0, rng);
  for (std::size_t l = 1; l + 1 < fan->levis().size(); ++l) {
    const auto p = project_to_levi(y, l);
    CHECK(p.is_positive());
    CHECK(volume_analytic(p).value == volume_polytope(p));
    CHECK(volume_polytope(p) >= 0);
  }
}

TEST_CASE("lattice counts: segment examples") {
  const auto y = seg();
  const RatVector x0 = default_dilation_direction(y.fan());
  CHECK(x0 == rv({1}));
  CHECK(count_gamma_points(y) == 5);
  CHECK(count_gamma_points(y, 2) == 9);
  for (std::int64_t j = 0; j < 6; ++j) CHECK(v_tilde_lattice(y, j, x0) == 5 + 2 * j);
  const auto zero = OrthogonalSet(builtin_fan("A1"), 0, {rv({0}), rv({0})});
  for (std::int64_t j = 0; j < 6; ++j) CHECK(v_tilde_lattice(zero, j, x0) == 2 * j + 1);
  CHECK_THROWS_AS(v_tilde_lattice(y, -1, x0), std::invalid_argument);
  CHECK_THROWS_AS(v_tilde_lattice(y, 0, rv({-1})), std::invalid_argument);
}

TEST_CASE("lattice counts: planar oracle") {
  // direct count of integer points of the closed hull
  std::mt19937_64 rng(18);
  for (const auto& name : {"A2", "B2"}) {
    const auto fan = builtin_fan(name);
    for (int rep = 0; rep < 3; ++rep) {
      const auto y = random_positive_set(fan, 0, rng);
      const auto poly = oracle::hull2d(y.points());
      Rational lo = 0, hi = 0;
      for (const auto& p : y.points())
        for (const auto& c : p) lo = std::min(lo, c), hi = std::max(hi, c);
      std::int64_t n = 0;
      for (Integer a = floor_of(lo); a <= ceil_of(hi); ++a)
        for (Integer b = floor_of(lo); b <= ceil_of(hi); ++b)
          n += poly.size() >= 3 && oracle::polygon_side(poly, {Rational(a), Rational(b)}) >= 0;
      if (poly.size() >= 3) CHECK(count_gamma_points(y) == n);
    }
  }
}

TEST_CASE("quasi-polynomial fits") {
  std::vector<Integer> lin;
  for (int j = 0; j < 6; ++j) lin.push_back(2 * j + 5);
  CHECK(exp_poly_constant_term(lin, 1) == 5);
  std::vector<Integer> quasi;
  for (int j = 0; j < 8; ++j) quasi.push_back(j * j + (j % 2));
  const auto q = fit_quasi_polynomial(quasi, 2, 2);
  REQUIRE(q);
  CHECK(q->period == 2);
  CHECK(q->constant_term() == Rational(1, 2));
  for (int j = 0; j < 12; ++j) CHECK((*q)(j) == j * j + (j % 2));
  std::vector<Integer> expo;
  for (int j = 0; j < 8; ++j) expo.push_back(Integer(1) << j);
  CHECK_FALSE(fit_quasi_polynomial(expo, 2, 2));
  CHECK_THROWS(exp_poly_constant_term(expo, 2));
  CHECK_THROWS(fit_quasi_polynomial({1, 2, 3}, 2, 2));
}

TEST_CASE("approximation by lattice counts on A2") {
  const auto fan = builtin_fan("A2");
  const auto y = special_orthogonal_set(fan, rv({1, 1}));
  const auto rep = approximation_check(y, 4, default_dilation_direction(*fan));
  CHECK(rep.volume == volume_polytope(y));
  CHECK(rep.fits_exact());
  CHECK(rep.ok());
  CHECK(rep.rows.size() == 4);
  for (const auto& row : rep.rows) CHECK(row.error * row.refine <= rep.c_fit);
}

TEST_CASE("support bounds") {
  std::mt19937_64 rng(19);
  for (const auto& name : {"A2", "B2", "G2"}) {
    const auto fan = builtin_fan(name);
    for (bool positive : {true, false}) {
      const auto y = positive ? random_positive_set(fan, 0, rng) : random_nonpositive_set(fan, 0, rng);
      const auto pts = sample_points(y, 80, rng);
      for (auto q : fan->levi(0).cones) {
        const auto r = support_bound_check(y, q, pts);
        CHECK_MESSAGE(r.ok(), name, " q ", q);
        CHECK(r.bound == support_constant(*fan, 0, q));
      }
    }
  }
}
