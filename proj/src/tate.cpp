#include "sympair/tate.hpp"

#include "sympair/smith.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sympair {

namespace {

std::vector<IntMatrix> dedupe(std::vector<IntMatrix> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

IntMatrix permutation_matrix(const std::vector<std::size_t>& images) {
  IntMatrix p(images.size(), images.size());
  for (std::size_t j = 0; j < images.size(); ++j) p(images[j], j) = 1;
  return p;
}

}  // namespace

LatticeWithAction::LatticeWithAction(IntLattice lattice, std::vector<IntMatrix> group_elements)
    : lattice_(std::move(lattice)) {
  const std::size_t r = lattice_.rank();
  for (const auto& g : group_elements) {
    if (g.rows() != r || g.cols() != r) throw std::invalid_argument("LatticeWithAction: action matrix has wrong size");
    const Integer d = determinant(g);
    if (d != 1 && d != -1) throw std::invalid_argument("LatticeWithAction: action matrix is not unimodular");
  }
  elements_ = dedupe(std::move(group_elements));
  const std::set<IntMatrix> members(elements_.begin(), elements_.end());
  if (!members.count(IntMatrix::identity(r))) throw std::invalid_argument("LatticeWithAction: identity missing from group");
  for (const auto& a : elements_)
    for (const auto& b : elements_)
      if (!members.count(a * b))
        throw std::invalid_argument("LatticeWithAction: group elements not closed under multiplication");
}

LatticeWithAction LatticeWithAction::from_generators(IntLattice lattice, const std::vector<IntMatrix>& generators) {
  const std::size_t r = lattice.rank();
  std::set<IntMatrix> seen{IntMatrix::identity(r)};
  std::vector<IntMatrix> frontier{IntMatrix::identity(r)};
  constexpr std::size_t kMaxOrder = 100000;
  while (!frontier.empty()) {
    std::vector<IntMatrix> next;
    for (const auto& a : frontier)
      for (const auto& g : generators) {
        IntMatrix p = g * a;
        if (seen.insert(p).second) {
          if (seen.size() > kMaxOrder) throw std::invalid_argument("from_generators: group too large or infinite");
          next.push_back(std::move(p));
        }
      }
    frontier = std::move(next);
  }
  return LatticeWithAction(std::move(lattice), std::vector<IntMatrix>(seen.begin(), seen.end()));
}

LatticeWithAction LatticeWithAction::trivial(std::size_t rank) {
  return LatticeWithAction(IntLattice::standard(rank), {IntMatrix::identity(rank)});
}

LatticeWithAction LatticeWithAction::norm_one_torus() {
  return LatticeWithAction(IntLattice::standard(1), {IntMatrix(1, 1, {Integer(1)}), IntMatrix(1, 1, {Integer(-1)})});
}

LatticeWithAction LatticeWithAction::induced_torus() {
  return LatticeWithAction(IntLattice::standard(2), {IntMatrix::identity(2), permutation_matrix({1, 0})});
}

LatticeWithAction LatticeWithAction::cyclic_regular(std::size_t n) {
  std::vector<IntMatrix> els;
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> img(n);
    for (std::size_t j = 0; j < n; ++j) img[j] = (j + s) % n;
    els.push_back(permutation_matrix(img));
  }
  return LatticeWithAction(IntLattice::standard(n), els);
}

LatticeWithAction LatticeWithAction::regular(const std::vector<std::vector<std::size_t>>& table) {
  const std::size_t n = table.size();
  std::vector<IntMatrix> els;
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<std::size_t> img(n);
    for (std::size_t b = 0; b < n; ++b) img[b] = table[a][b];
    els.push_back(permutation_matrix(img));
  }
  return LatticeWithAction(IntLattice::standard(n), els);
}

LatticeWithAction direct_sum(const LatticeWithAction& a, const LatticeWithAction& b) {
  const std::size_t ra = a.rank(), rb = b.rank();
  RatMatrix basis(a.lattice().ambient_dim() + b.lattice().ambient_dim(), ra + rb);
  for (std::size_t i = 0; i < a.lattice().ambient_dim(); ++i)
    for (std::size_t j = 0; j < ra; ++j) basis(i, j) = a.lattice().basis()(i, j);
  for (std::size_t i = 0; i < b.lattice().ambient_dim(); ++i)
    for (std::size_t j = 0; j < rb; ++j) basis(a.lattice().ambient_dim() + i, ra + j) = b.lattice().basis()(i, j);
  std::vector<IntMatrix> els;
  for (const auto& g : a.group_elements())
    for (const auto& h : b.group_elements()) {
      IntMatrix m(ra + rb, ra + rb);
      for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t j = 0; j < ra; ++j) m(i, j) = g(i, j);
      for (std::size_t i = 0; i < rb; ++i)
        for (std::size_t j = 0; j < rb; ++j) m(ra + i, ra + j) = h(i, j);
      els.push_back(std::move(m));
    }
  return LatticeWithAction(IntLattice(std::move(basis)), std::move(els));
}

namespace {

// Integer coordinates of each column of `vectors` w.r.t. the saturated basis `basis`.
IntMatrix coordinates_in(const IntMatrix& basis, const IntMatrix& vectors) {
  const RatMatrix b = to_rational(basis);
  IntMatrix out(basis.cols(), vectors.cols());
  for (std::size_t j = 0; j < vectors.cols(); ++j) {
    RatVector v(vectors.rows());
    for (std::size_t i = 0; i < vectors.rows(); ++i) v[i] = Rational(vectors(i, j));
    const auto c = solve(b, v);
    if (!c) throw std::logic_error("coordinates_in: vector outside the sublattice span");
    for (std::size_t i = 0; i < basis.cols(); ++i) {
      if (!is_integral((*c)[i])) throw std::logic_error("coordinates_in: non-integral coordinates");
      out(i, j) = boost::multiprecision::numerator((*c)[i]);
    }
  }
  return out;
}

IntMatrix norm_matrix(const LatticeWithAction& x) {
  IntMatrix n(x.rank(), x.rank());
  for (const auto& g : x.group_elements()) n = n + g;
  return n;
}

}  // namespace

FiniteAbelianGroup tate_h_minus1(const LatticeWithAction& x) {
  const std::size_t r = x.rank();
  const IntMatrix kerN = integer_kernel(norm_matrix(x));
  if (kerN.cols() == 0) return {};
  // generators of I_G X: the columns of g - 1
  IntMatrix gens(r, r * x.group_elements().size());
  std::size_t c = 0;
  for (const auto& g : x.group_elements()) {
    const IntMatrix d = g - IntMatrix::identity(r);
    for (std::size_t j = 0; j < r; ++j, ++c)
      for (std::size_t i = 0; i < r; ++i) gens(i, c) = d(i, j);
  }
  return cokernel(coordinates_in(kerN, gens));
}

FiniteAbelianGroup tate_h0(const LatticeWithAction& x) {
  const std::size_t r = x.rank();
  const auto& els = x.group_elements();
  IntMatrix stacked(r * els.size(), r);
  for (std::size_t k = 0; k < els.size(); ++k) {
    const IntMatrix d = els[k] - IntMatrix::identity(r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) stacked(k * r + i, j) = d(i, j);
  }
  const IntMatrix fixed = integer_kernel(stacked);
  if (fixed.cols() == 0) return {};
  return cokernel(coordinates_in(fixed, norm_matrix(x)));
}

namespace {

IntMatrix int_matrix_from_json(const nlohmann::json& j, std::size_t r) {
  if (!j.is_array() || j.size() != r) throw std::invalid_argument("fixture: action matrix must have " + std::to_string(r) + " rows");
  IntMatrix m(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    if (!j[i].is_array() || j[i].size() != r) throw std::invalid_argument("fixture: action matrix row has wrong length");
    for (std::size_t k = 0; k < r; ++k) {
      if (!j[i][k].is_number_integer()) throw std::invalid_argument("fixture: action entries must be integers");
      m(i, k) = Integer(j[i][k].get<long long>());
    }
  }
  return m;
}

Rational rational_from_json(const nlohmann::json& v) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw std::invalid_argument("fixture: expected an integer or a \"p/q\" string");
}

}  // namespace

LatticeWithAction lattice_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("ambient_rank")) throw std::invalid_argument("fixture: missing \"ambient_rank\"");
  const auto n = j.at("ambient_rank").get<std::size_t>();
  RatMatrix basis = RatMatrix::identity(n);
  if (j.contains("basis")) {
    std::vector<RatVector> cols;
    for (const auto& v : j.at("basis")) {
      if (!v.is_array() || v.size() != n) throw std::invalid_argument("fixture: basis vector has wrong length");
      RatVector c;
      for (const auto& e : v) c.push_back(rational_from_json(e));
      cols.push_back(std::move(c));
    }
    basis = RatMatrix::from_columns(n, cols);
  }
  IntLattice lattice(basis);
  const std::size_t r = lattice.rank();
  std::vector<IntMatrix> mats;
  const bool gens = j.contains("generators");
  const auto& list = gens ? j.at("generators") : j.at("action");
  for (const auto& m : list) mats.push_back(int_matrix_from_json(m, r));
  if (gens) return LatticeWithAction::from_generators(std::move(lattice), mats);
  return LatticeWithAction(std::move(lattice), std::move(mats));
}

nlohmann::json lattice_to_json(const LatticeWithAction& x) {
  nlohmann::json j;
  j["ambient_rank"] = x.lattice().ambient_dim();
  nlohmann::json basis = nlohmann::json::array();
  for (std::size_t c = 0; c < x.rank(); ++c) {
    nlohmann::json v = nlohmann::json::array();
    for (std::size_t i = 0; i < x.lattice().ambient_dim(); ++i) v.push_back(to_string(x.lattice().basis()(i, c)));
    basis.push_back(v);
  }
  j["basis"] = basis;
  nlohmann::json action = nlohmann::json::array();
  for (const auto& g : x.group_elements()) {
    nlohmann::json m = nlohmann::json::array();
    for (std::size_t i = 0; i < g.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t k = 0; k < g.cols(); ++k) row.push_back(g(i, k).convert_to<long long>());
      m.push_back(row);
    }
    action.push_back(m);
  }
  j["action"] = action;
  return j;
}

}  // namespace sympair
