#include "sympair/fan.hpp"

#include "sympair/smith.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>

namespace sympair {

namespace {

RatMatrix rows_of(const std::vector<RatVector>& rows, std::size_t n) { return RatMatrix::from_rows(n, rows); }

bool vanishes_on(const RatVector& covector, const RatMatrix& span) {
  for (std::size_t j = 0; j < span.cols(); ++j)
    if (dot(covector, span.col(j)) != 0) return false;
  return true;
}

// covector x -> a(P x) as coordinates
RatVector compose(const RatVector& a, const RatMatrix& p) { return p.apply_left(a); }

}  // namespace

Fan::Fan(RootSystem sys) : sys_(std::move(sys)) {
  const std::size_t n = sys_.dim();
  for (std::size_t i = 0; i < sys_.size(); ++i)
    if (sys_.is_positive(i) && sys_.is_reduced(i)) walls_.push_back(i);

  // Weyl group by breadth-first closure under the simple reflections
  {
    std::vector<RatMatrix> gens;
    for (auto s : sys_.simple()) gens.push_back(sys_.reflection_matrix(s));
    std::set<RatMatrix> seen{RatMatrix::identity(n)};
    weyl_.push_back(RatMatrix::identity(n));
    for (std::size_t k = 0; k < weyl_.size(); ++k)
      for (const auto& g : gens) {
        RatMatrix w = g * weyl_[k];
        if (seen.insert(w).second) {
          weyl_.push_back(std::move(w));
          if (weyl_.size() > 100000) throw std::invalid_argument("Fan: Weyl group too large");
        }
      }
  }

  // faces: W-orbits of x_J = sum of the fundamental coweights outside J
  const RatMatrix cow = sys_.fundamental_coweights();
  std::map<std::vector<std::size_t>, std::size_t> levi_index;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    RatVector x = zero_vector(n);
    for (std::size_t i = 0; i < n; ++i)
      if (!(mask >> i & 1)) x = add(x, cow.col(i));
    for (std::size_t w = 0; w < weyl_.size(); ++w) {
      RatVector p = weyl_[w].apply(x);
      SignVector s = sign_vector(p);
      if (index_.count(s)) continue;
      Cone c;
      c.signs = s;
      c.point = std::move(p);
      if (mask == 0) c.weyl = static_cast<long>(w);
      std::vector<std::size_t> zeros;
      for (std::size_t k = 0; k < walls_.size(); ++k)
        if (s[k] == 0) zeros.push_back(k);
      auto it = levi_index.find(zeros);
      if (it == levi_index.end()) {
        Levi l;
        l.zero_walls = zeros;
        std::vector<RatVector> eq;
        for (auto k : zeros) eq.push_back(sys_.root(walls_[k]));
        l.span = eq.empty() ? RatMatrix::identity(n) : kernel(rows_of(eq, n));
        l.dim = l.span.cols();
        std::vector<RatVector> cor;
        for (std::size_t r = 0; r < sys_.size(); ++r)
          if (vanishes_on(sys_.root(r), l.span)) {
            l.roots.push_back(r);
            cor.push_back(sys_.coroot(r));
          }
        const RatMatrix comp = cor.empty() ? RatMatrix(n, 0) : column_basis(RatMatrix::from_columns(n, cor));
        if (comp.cols() + l.dim != n) throw std::logic_error("Fan: Levi subspace and coroots are not complementary");
        const RatMatrix q = hstack(l.span, comp);
        RatMatrix keep(n, n);
        for (std::size_t i = 0; i < l.dim; ++i) keep(i, i) = 1;
        l.proj = q * keep * *inverse(q);
        // normalization lattice intersected with V_M
        const RatMatrix& lb = sys_.lattice().basis();
        if (eq.empty()) {
          l.lattice = sys_.lattice();
        } else {
          const IntMatrix k = integer_kernel(clear_row_denominators(rows_of(eq, n) * lb));
          l.lattice = IntLattice(lb * to_rational(k));
        }
        it = levi_index.emplace(zeros, levis_.size()).first;
        levis_.push_back(std::move(l));
      }
      c.levi = it->second;
      c.dim = levis_[c.levi].dim;
      index_[s] = cones_.size();
      cones_.push_back(std::move(c));
    }
  }

  for (std::size_t i = 0; i < cones_.size(); ++i) {
    for (std::size_t m = 0; m < levis_.size(); ++m) {
      const auto& z = levis_[m].zero_walls;
      const auto& cz = levis_[cones_[i].levi].zero_walls;
      if (std::includes(cz.begin(), cz.end(), z.begin(), z.end())) levis_[m].cones.push_back(i);
    }
    levis_[cones_[i].levi].chambers.push_back(i);
  }

  // simple roots of each chamber: reduced positive roots that are not a sum of two positive roots
  const auto chambers_list = levis_.front().chambers;
  chamber_simple_.resize(chambers_list.size());
  for (std::size_t ci = 0; ci < chambers_list.size(); ++ci) {
    const Cone& c = cones_[chambers_list[ci]];
    // order as the image of the base simple roots under the chamber's Weyl element
    const RatMatrix winv = *inverse(weyl_[static_cast<std::size_t>(c.weyl)]);
    for (auto s : sys_.simple()) {
      const long r = sys_.find_root(compose(sys_.root(s), winv));
      if (r < 0) throw std::logic_error("Fan: Weyl image of a simple root is not a root");
      chamber_simple_[ci].push_back(static_cast<std::size_t>(r));
    }
  }

  for (std::size_t i = 0; i < cones_.size(); ++i) {
    Cone& c = cones_[i];
    const Levi& l = levis_[c.levi];
    std::size_t chamber = 0;
    while (!parabolic_le(chambers_list[chamber], i)) ++chamber;
    for (auto r : chamber_simple_[chamber]) {
      if (vanishes_on(sys_.root(r), l.span)) continue;
      c.simple_roots.push_back(compose(sys_.root(r), l.proj));
    }
    if (c.simple_roots.size() != l.dim) throw std::logic_error("Fan: wrong number of simple roots for a cone");
    for (const auto& a : c.simple_roots) c.simple_coroots.push_back(restricted_coroot(i, a));
  }
}

SignVector Fan::sign_vector(const RatVector& h) const {
  SignVector s(walls_.size());
  for (std::size_t k = 0; k < walls_.size(); ++k) s[k] = static_cast<std::int8_t>(sign(dot(sys_.root(walls_[k]), h)));
  return s;
}

std::optional<std::size_t> Fan::find_cone(const SignVector& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Fan::facet_of(const RatVector& h) const {
  const auto c = find_cone(sign_vector(h));
  if (!c) throw std::logic_error("facet_of: sign vector not in the fan");
  return *c;
}

bool Fan::parabolic_le(std::size_t p, std::size_t q) const {
  const auto& sp = cones_[p].signs;
  const auto& sq = cones_[q].signs;
  for (std::size_t k = 0; k < sp.size(); ++k)
    if (sq[k] != 0 && sq[k] != sp[k]) return false;
  return true;
}

std::vector<std::size_t> Fan::levis_containing(std::size_t m) const {
  std::vector<std::size_t> out;
  const auto& z = levis_[m].zero_walls;
  for (std::size_t l = 0; l < levis_.size(); ++l) {
    const auto& lz = levis_[l].zero_walls;
    if (std::includes(lz.begin(), lz.end(), z.begin(), z.end())) out.push_back(l);
  }
  return out;
}

RatVector Fan::project(std::size_t cone, const RatVector& x) const { return levi_of(cone).proj.apply(x); }

std::vector<RatVector> Fan::restricted_roots(std::size_t cone) const {
  const Levi& l = levi_of(cone);
  std::vector<RatVector> out;
  std::set<RatVector> seen;
  for (std::size_t r = 0; r < sys_.size(); ++r) {
    RatVector a = compose(sys_.root(r), l.proj);
    if (is_zero(a) || !seen.insert(a).second) continue;
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<RatVector> Fan::positive_restricted_roots(std::size_t cone) const {
  std::vector<RatVector> out;
  for (auto& a : restricted_roots(cone))
    if (dot(a, cones_[cone].point) > 0) out.push_back(std::move(a));
  return out;
}

RatVector Fan::restricted_coroot(std::size_t cone, const RatVector& alpha) const {
  const Levi& l = levi_of(cone);
  const auto restricted = restricted_roots(cone);
  if (std::find(restricted.begin(), restricted.end(), alpha) == restricted.end())
    throw std::invalid_argument("restricted_coroot: " + to_string(alpha) + " is not a restricted root");
  // a multiple t * beta of a shorter restricted root gets beta^vee / t (2a in BC, 2a and 3a in G2)
  Rational best = 1;
  for (const auto& beta : restricted) {
    Rational t;
    if (proportional(beta, alpha, &t) && t > best) best = t;
  }
  if (best > 1) return scale(1 / best, restricted_coroot(cone, scale(1 / best, alpha)));

  // M_alpha: roots vanishing on V_M intersected with ker(alpha)
  const RatMatrix a_on_span = RatMatrix::from_rows(l.dim, {l.span.apply_left(alpha)});
  const RatMatrix slice = l.span * kernel(a_on_span);
  std::vector<std::size_t> m_alpha;
  for (std::size_t r = 0; r < sys_.size(); ++r)
    if (vanishes_on(sys_.root(r), slice)) m_alpha.push_back(r);

  // roots whose restriction is a positive multiple of alpha must be positive on the chamber used
  std::vector<std::size_t> along;
  for (auto r : m_alpha) {
    const RatVector rr = compose(sys_.root(r), l.proj);
    Rational f;
    if (!is_zero(rr) && proportional(alpha, rr, &f) && f > 0) along.push_back(r);
  }

  std::optional<RatVector> result;
  for (auto ch : levis_.front().chambers) {
    const RatVector& x = cones_[ch].point;
    bool ok = true;
    for (auto r : along)
      if (dot(sys_.root(r), x) <= 0) ok = false;
    if (!ok) continue;
    std::vector<std::size_t> pos;
    for (auto r : m_alpha)
      if (dot(sys_.root(r), x) > 0) pos.push_back(r);
    std::set<RatVector> pos_set;
    for (auto r : pos) pos_set.insert(sys_.root(r));
    std::vector<std::size_t> lifts;
    for (auto r : pos) {
      if (!sys_.is_reduced(r)) continue;
      bool decomposable = false;
      for (auto s : pos)
        if (pos_set.count(sub(sys_.root(r), sys_.root(s)))) {
          decomposable = true;
          break;
        }
      if (decomposable) continue;
      if (compose(sys_.root(r), l.proj) == alpha) lifts.push_back(r);
    }
    if (lifts.size() != 1)
      throw std::logic_error("restricted_coroot: expected a unique simple lift of " + to_string(alpha));
    RatVector cor = l.proj.apply(sys_.coroot(lifts.front()));
    if (result && *result != cor)
      throw std::logic_error("restricted_coroot: coroot of " + to_string(alpha) + " depends on the chamber");
    result = std::move(cor);
  }
  if (!result) throw std::logic_error("restricted_coroot: no chamber is positive on " + to_string(alpha));
  return *result;
}

std::vector<std::size_t> Fan::relative_simple(std::size_t p, std::size_t q) const {
  if (!parabolic_le(p, q)) throw std::invalid_argument("relative_simple: P is not contained in Q");
  std::vector<std::size_t> out;
  const auto& span = levi_of(q).span;
  const auto& roots = cones_[p].simple_roots;
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (vanishes_on(roots[i], span)) out.push_back(i);
  return out;
}

std::vector<RatVector> Fan::relative_dual_basis(std::size_t p, std::size_t q) const {
  const auto idx = relative_simple(p, q);
  if (idx.empty()) return {};
  const std::size_t n = sys_.dim();
  const Levi& lp = levi_of(p);
  const Levi& lq = levi_of(q);
  std::vector<RatVector> cols;
  for (auto r : lp.roots) cols.push_back(sys_.coroot(r));
  if (!cols.empty()) cols = column_basis(RatMatrix::from_columns(n, cols)).columns();
  const std::size_t offset = cols.size() + lq.dim;
  for (const auto& v : lq.span.columns()) cols.push_back(v);
  for (auto i : idx) cols.push_back(cones_[p].simple_coroots[i]);
  const auto inv = inverse(RatMatrix::from_columns(n, cols));
  if (cols.size() != n || !inv) throw std::logic_error("relative_dual_basis: constraints are not a basis");
  std::vector<RatVector> out;
  for (std::size_t j = 0; j < idx.size(); ++j) out.push_back(inv->row(offset + j));
  return out;
}

std::shared_ptr<const Fan> builtin_fan(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const Fan>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
  }
  auto fan = std::make_shared<const Fan>(build_root_system(name));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(name, std::move(fan)).first->second;
}

DescentSupport descent_support(std::size_t ambient_dim, const RatMatrix& theta_fixed, const RatMatrix& levi_part) {
  if (theta_fixed.rows() != ambient_dim || levi_part.rows() != ambient_dim)
    throw std::invalid_argument("descent_support: spanning vectors have the wrong length");
  const std::size_t r1 = rank(theta_fixed), r2 = rank(levi_part);
  const std::size_t r = rank(hstack(theta_fixed, levi_part));
  DescentSupport d;
  d.supported = r1 + r2 == ambient_dim && r == ambient_dim;
  d.coefficient_is_one = d.supported && r1 == 0;
  return d;
}

}  // namespace sympair
