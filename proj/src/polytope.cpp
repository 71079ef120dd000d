#include "sympair/polytope.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sympair {

const char* to_string(Membership m) {
  switch (m) {
    case Membership::Exterior: return "exterior";
    case Membership::Boundary: return "boundary";
    case Membership::Interior: return "interior";
  }
  return "?";
}

namespace {

// Generalized cross product: a vector orthogonal to the k-1 rows of `rows` (k columns).
RatVector cofactor_normal(const RatMatrix& rows) {
  const std::size_t k = rows.cols();
  RatVector n(k);
  for (std::size_t j = 0; j < k; ++j) {
    RatMatrix minor(k - 1, k - 1);
    for (std::size_t i = 0; i + 1 < k; ++i)
      for (std::size_t c = 0, cc = 0; c < k; ++c) {
        if (c == j) continue;
        minor(i, cc++) = rows(i, c);
      }
    const Rational det = k == 1 ? Rational(1) : determinant(minor);
    n[j] = (j % 2 == 0) ? det : Rational(-det);
  }
  return n;
}

Rational factorial(std::size_t n) {
  Rational f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

Polytope::Polytope(std::vector<RatVector> points) {
  if (points.empty()) throw std::invalid_argument("Polytope: no points");
  d_ = points.front().size();
  std::set<RatVector> seen;
  for (auto& p : points) {
    if (p.size() != d_) throw std::invalid_argument("Polytope: points of different dimensions");
    if (seen.insert(p).second) points_.push_back(std::move(p));
  }
  origin_ = points_.front();
  std::vector<RatVector> diffs;
  for (const auto& p : points_) diffs.push_back(sub(p, origin_));
  basis_ = column_basis(RatMatrix::from_columns(d_, diffs));
  const std::size_t k = basis_.cols();
  for (const auto& p : points_) local_.push_back(*solve(basis_, sub(p, origin_)));
  if (k == 0) return;

  const std::size_t npts = local_.size();
  if (k == 1) {
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 0; i < npts; ++i) {
      if (local_[i][0] < local_[lo][0]) lo = i;
      if (local_[i][0] > local_[hi][0]) hi = i;
    }
    facets_.push_back({RatVector{Rational(-1)}, Rational(-local_[lo][0]), {lo}});
    facets_.push_back({RatVector{Rational(1)}, local_[hi][0], {hi}});
    return;
  }

  std::set<std::vector<std::size_t>> found;
  std::vector<std::size_t> pick(k);
  // enumerate k-subsets in lexicographic order
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  std::vector<Rational> vals(npts);
  while (true) {
    bool covered = false;
    for (const auto& f : facets_)
      if (std::all_of(pick.begin(), pick.end(), [&](std::size_t x) { return std::binary_search(f.points.begin(), f.points.end(), x); })) {
        covered = true;
        break;
      }
    if (!covered) {
      RatMatrix rows(k - 1, k);
      for (std::size_t i = 1; i < k; ++i)
        for (std::size_t c = 0; c < k; ++c) rows(i - 1, c) = local_[pick[i]][c] - local_[pick[0]][c];
      RatVector n = cofactor_normal(rows);
      if (!is_zero(n)) {
        const Rational off = dot(n, local_[pick[0]]);
        bool pos = false, neg = false;
        for (std::size_t i = 0; i < npts && !(pos && neg); ++i) {
          vals[i] = dot(n, local_[i]) - off;
          if (vals[i] > 0) pos = true;
          if (vals[i] < 0) neg = true;
        }
        if (!(pos && neg)) {
          Facet f;
          f.normal = pos ? scale(Rational(-1), n) : n;
          f.offset = pos ? Rational(-off) : off;
          for (std::size_t i = 0; i < npts; ++i)
            if (vals[i] == 0) f.points.push_back(i);
          if (found.insert(f.points).second) facets_.push_back(std::move(f));
        }
      }
    }
    // next combination
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == npts - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

Membership Polytope::locate(const RatVector& x) const {
  if (x.size() != d_) throw std::invalid_argument("Polytope::locate: wrong dimension");
  const auto y = solve(basis_, sub(x, origin_));
  if (!y) return Membership::Exterior;
  if (basis_.cols() == 0) return d_ == 0 ? Membership::Interior : Membership::Boundary;
  bool on_face = false;
  for (const auto& f : facets_) {
    const Rational v = dot(f.normal, *y) - f.offset;
    if (v > 0) return Membership::Exterior;
    if (v == 0) on_face = true;
  }
  if (on_face || basis_.cols() < d_) return Membership::Boundary;
  return Membership::Interior;
}

std::vector<std::vector<RatVector>> Polytope::local_triangulation() const {
  const std::size_t k = dim();
  if (k == 0) return {{RatVector{}}};
  if (k == 1) return {{local_[facets_[0].points[0]], local_[facets_[1].points[0]]}};
  RatVector center = zero_vector(k);
  for (const auto& p : local_) center = add(center, p);
  center = scale(Rational(1, static_cast<long>(local_.size())), center);
  std::vector<std::vector<RatVector>> out;
  for (const auto& f : facets_) {
    std::vector<RatVector> pts;
    for (auto i : f.points) pts.push_back(local_[i]);
    for (auto s : Polytope(std::move(pts)).triangulation()) {
      s.push_back(center);
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<std::vector<RatVector>> Polytope::triangulation() const {
  auto simplices = local_triangulation();
  for (auto& s : simplices)
    for (auto& p : s) p = add(origin_, basis_.apply(p));
  return simplices;
}

Rational Polytope::volume() const {
  if (dim() < d_) return 0;
  if (d_ == 0) return 1;
  Rational total = 0;
  for (const auto& s : local_triangulation()) {
    RatMatrix m(d_, d_);
    for (std::size_t i = 1; i <= d_; ++i)
      for (std::size_t c = 0; c < d_; ++c) m(c, i - 1) = s[i][c] - s[0][c];
    const Rational det = determinant(m);
    total += det < 0 ? Rational(-det) : det;
  }
  // the local frame may not be unimodular: rescale by |det basis|
  const Rational b = determinant(basis_);
  return total * (b < 0 ? Rational(-b) : b) / factorial(d_);
}

std::vector<RatVector> Polytope::vertices() const {
  const std::size_t k = dim();
  if (k == 0) return {points_.front()};
  std::vector<RatVector> out;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    std::vector<RatVector> normals;
    for (const auto& f : facets_)
      if (std::binary_search(f.points.begin(), f.points.end(), i)) normals.push_back(f.normal);
    if (!normals.empty() && rank(RatMatrix::from_rows(k, normals)) == k) out.push_back(points_[i]);
  }
  return out;
}

std::vector<Polytope> Polytope::facet_polytopes() const {
  std::vector<Polytope> out;
  for (const auto& f : facets_) {
    std::vector<RatVector> pts;
    for (auto i : f.points) pts.push_back(points_[i]);
    out.emplace_back(std::move(pts));
  }
  return out;
}

Polytope minkowski_sum(const Polytope& a, const Polytope& b) {
  std::vector<RatVector> pts;
  for (const auto& p : a.vertices())
    for (const auto& q : b.vertices()) pts.push_back(add(p, q));
  return Polytope(std::move(pts));
}

}  // namespace sympair
