#pragma once

#include "sympair/orthogonal_set.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace sympair {

// Direct evaluation of the indicator functions. Cones are fan indices; P must be
// contained in Q (parabolic_le(P, Q)), otherwise std::invalid_argument.
int tau(const Fan& fan, std::size_t p, std::size_t q, const RatVector& h);
int tau_hat(const Fan& fan, std::size_t p, std::size_t q, const RatVector& h);
// Indicator of the span of R.
int delta(const Fan& fan, std::size_t r, const RatVector& h);
// Alternating sum over P <= S <= Q of (-1)^(dim S - dim Q) tau^S_P(H) tau_hat^Q_S(H - X).
long gamma_pq(const Fan& fan, std::size_t p, std::size_t q, const RatVector& h, const RatVector& x);
// Sum over R in F(M), R <= Q, of delta^R(H) gamma^Q_R(H, Y_R).
long gamma_mq(const OrthogonalSet& y, std::size_t q, const RatVector& h);

// A finite integer combination of products of sign conditions on affine forms a.H - b.
class IndicatorSum {
 public:
  struct Form {
    RatVector a;
    Rational b;
  };
  struct Term {
    long coeff = 0;
    std::vector<std::size_t> zero;      // forms that must vanish
    std::vector<std::size_t> positive;  // forms that must be > 0
  };

  std::size_t add_form(const RatVector& a, const Rational& b);
  void add_term(Term t) { terms_.push_back(std::move(t)); }
  long evaluate(const RatVector& h) const;
  long evaluate_signs(const std::vector<std::int8_t>& signs) const;

  const std::vector<Form>& forms() const { return forms_; }
  const std::vector<Term>& terms() const { return terms_; }

 private:
  std::vector<Form> forms_;
  std::vector<Term> terms_;
  std::map<std::pair<RatVector, Rational>, std::size_t> index_;
};

// Exact integer evaluation of an IndicatorSum on the points basis * c / k, c in Z^d.
class GridEvaluator {
 public:
  // |c_i| <= coord_bound is required of every evaluated point (checked against overflow).
  GridEvaluator(const IndicatorSum& sum, const RatMatrix& basis, const Integer& k, std::int64_t coord_bound);
  long evaluate(const std::vector<std::int64_t>& c) const;

 private:
  const IndicatorSum* sum_;
  std::size_t d_;
  std::vector<std::int64_t> coeffs_;  // forms x d
  std::vector<std::int64_t> offsets_;
  mutable std::vector<std::int8_t> signs_;
};

// Y-independent part of gamma^Q_M: the terms and which point Y_R each dual-weight form shifts by.
class GammaSkeleton {
 public:
  GammaSkeleton(std::shared_ptr<const Fan> fan, std::size_t levi, std::size_t q);
  IndicatorSum bind(const OrthogonalSet& y) const;
  // Appends the bound terms, each multiplied by the extra positive forms.
  void bind_into(const OrthogonalSet& y, IndicatorSum& out, const std::vector<std::size_t>& extra_positive) const;

  std::size_t q() const { return q_; }

 private:
  struct Term {
    long coeff;
    std::size_t r;                       // cone R, whose point Y_R shifts the dual weights
    std::vector<std::size_t> zero_walls;
    std::vector<RatVector> roots;        // tau^S_R
    std::vector<RatVector> weights;      // tau_hat^Q_S, evaluated at H - Y_R
  };
  std::shared_ptr<const Fan> fan_;
  std::size_t levi_, q_;
  std::vector<Term> terms_;
};

// gamma^G_M(., Y) as a compiled indicator sum.
IndicatorSum compile_gamma(const OrthogonalSet& y, std::size_t q);
// sum over Q in F(M) of gamma^Q_M(H, Y) tau^G_Q(H - Y_Q); identically 1.
IndicatorSum compile_partition_of_unity(const OrthogonalSet& y);

struct PartitionReport {
  std::size_t evaluated = 0;
  std::vector<std::pair<RatVector, long>> violations;  // (H, value != 1)
  bool ok() const { return violations.empty(); }
};
PartitionReport partition_of_unity_check(const OrthogonalSet& y, const std::vector<RatVector>& points);

struct SupportReport {
  std::size_t q = 0;
  std::size_t evaluated = 0, nonzero = 0;
  Rational sup_y;            // sup_P |Y^Q_P|
  Rational empirical_c;      // max |H^Q| / sup_P |Y^Q_P| over points with gamma != 0
  Rational bound;            // a priori constant from the dual weights
  bool unbounded = false;    // some H^Q != 0 had gamma != 0 while sup_y = 0
  std::size_t homogeneity_violations = 0;  // gamma(2H, 2Y) != gamma(H, Y)
  RatVector witness;         // point realising empirical_c
  bool ok() const { return !unbounded && empirical_c <= bound && homogeneity_violations == 0; }
};
SupportReport support_bound_check(const OrthogonalSet& y, std::size_t q, const std::vector<RatVector>& points);
// max over R in F(M), R <= Q, of sum over Delta^Q_R of |alpha^vee| * |varpi_alpha|_*.
Rational support_constant(const Fan& fan, std::size_t levi, std::size_t q);

// Seeded sample points of V_M around the set: random rationals in a box of radius
// 2 * sup|Y_P| + 1 projected to V_M, plus the points Y_P and their midpoints.
std::vector<RatVector> sample_points(const OrthogonalSet& y, std::size_t count, std::mt19937_64& rng);

}  // namespace sympair
