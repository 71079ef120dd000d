#include "sympair/root_system.hpp"

#include <cctype>
#include <deque>
#include <map>
#include <stdexcept>

namespace sympair {

namespace {

std::string root_label(std::size_t i, const std::vector<RatVector>& roots) {
  return "root #" + std::to_string(i) + " " + to_string(roots[i]);
}

RatVector reflect_covector(const RatVector& gamma, const RatVector& beta, const RatVector& beta_vee) {
  // s_beta acts on covectors by gamma -> gamma - <gamma, beta^vee> beta
  return sub(gamma, scale(dot(gamma, beta_vee), beta));
}

RatVector reflect_vector(const RatVector& x, const RatVector& beta, const RatVector& beta_vee) {
  return sub(x, scale(dot(beta, x), beta_vee));
}

}  // namespace

RootSystem::RootSystem(std::string name, std::size_t dim, std::vector<RatVector> roots,
                       std::vector<RatVector> coroots, std::vector<std::size_t> simple, IntLattice lattice)
    : name_(std::move(name)),
      dim_(dim),
      roots_(std::move(roots)),
      coroots_(std::move(coroots)),
      simple_(std::move(simple)),
      lattice_(std::move(lattice)) {
  const auto fail = [&](const std::string& msg) { throw std::invalid_argument("root system " + name_ + ": " + msg); };
  if (roots_.size() != coroots_.size()) fail("roots and coroots differ in number");
  if (lattice_.ambient_dim() != dim_ || lattice_.rank() != dim_) fail("normalization lattice must have full rank");
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    if (roots_[i].size() != dim_ || coroots_[i].size() != dim_) fail(root_label(i, roots_) + " has wrong length");
    if (is_zero(roots_[i])) fail("zero root");
    if (dot(roots_[i], coroots_[i]) != 2) fail("<a, a^vee> != 2 for " + root_label(i, roots_));
  }
  for (std::size_t i = 0; i < roots_.size(); ++i)
    for (std::size_t j = i + 1; j < roots_.size(); ++j)
      if (roots_[i] == roots_[j]) fail("duplicate " + root_label(j, roots_));
  if (simple_.size() != dim_) fail("number of simple roots must equal the dimension (semisimple, spanning)");
  for (auto s : simple_)
    if (s >= roots_.size()) fail("simple root index out of range");

  RatMatrix srows(dim_, dim_);
  for (std::size_t a = 0; a < dim_; ++a)
    for (std::size_t b = 0; b < dim_; ++b) srows(a, b) = roots_[simple_[a]][b];
  const auto sinv = inverse(srows);
  if (!sinv) fail("simple roots are linearly dependent");

  // closure under all reflections, with matching coroots
  for (std::size_t i = 0; i < roots_.size(); ++i)
    for (std::size_t j = 0; j < roots_.size(); ++j) {
      const Rational p = dot(roots_[j], coroots_[i]);
      if (!is_integral(p))
        fail("non-integral pairing <" + to_string(roots_[j]) + ", coroot of " + to_string(roots_[i]) + ">");
      const RatVector r = reflect_covector(roots_[j], roots_[i], coroots_[i]);
      const long k = find_root(r);
      if (k < 0) fail("reflection of " + root_label(j, roots_) + " in " + root_label(i, roots_) + " is not a root");
      if (coroots_[static_cast<std::size_t>(k)] != reflect_vector(coroots_[j], roots_[i], coroots_[i]))
        fail("coroots not reflection-equivariant for pair " + root_label(i, roots_) + ", " + root_label(j, roots_));
    }

  // integral combinations of simple roots of constant sign: a = c * S, so c = a * S^{-1}
  coords_.resize(roots_.size());
  positive_.resize(roots_.size());
  reduced_.resize(roots_.size());
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    const RatVector c = sinv->apply_left(roots_[i]);
    int sgn = 0;
    for (const auto& x : c) {
      if (!is_integral(x)) fail(root_label(i, roots_) + " is not an integral combination of simple roots");
      const int s = sign(x);
      if (s != 0 && sgn != 0 && s != sgn) fail(root_label(i, roots_) + " mixes signs in simple-root coordinates");
      if (s != 0) sgn = s;
      coords_[i].push_back(boost::multiprecision::numerator(x));
    }
    positive_[i] = sgn > 0;
    reduced_[i] = find_root(scale(Rational(1, 2), roots_[i])) < 0;
    const long d = find_root(scale(Rational(2), roots_[i]));
    if (d >= 0 && coroots_[static_cast<std::size_t>(d)] != scale(Rational(1, 2), coroots_[i]))
      fail("coroot of " + root_label(static_cast<std::size_t>(d), roots_) + " must be half the coroot of " +
           root_label(i, roots_));
  }
  for (auto s : simple_)
    if (!reduced_[s]) fail("simple root " + to_string(roots_[s]) + " is not reduced");
}

long RootSystem::find_root(const RatVector& covector) const {
  for (std::size_t i = 0; i < roots_.size(); ++i)
    if (roots_[i] == covector) return static_cast<long>(i);
  return -1;
}

RatMatrix RootSystem::reflection_matrix(std::size_t i) const {
  RatMatrix m = RatMatrix::identity(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) m(r, c) -= coroots_[i][r] * roots_[i][c];
  return m;
}

RatMatrix RootSystem::fundamental_coweights() const {
  RatMatrix srows(dim_, dim_);
  for (std::size_t a = 0; a < dim_; ++a)
    for (std::size_t b = 0; b < dim_; ++b) srows(a, b) = roots_[simple_[a]][b];
  return *inverse(srows);
}

RatVector RootSystem::sum_positive_coroots() const {
  RatVector s = zero_vector(dim_);
  for (std::size_t i = 0; i < roots_.size(); ++i)
    if (positive_[i] && reduced_[i]) s = add(s, coroots_[i]);
  return s;
}

RootSystem root_system_from_cartan(const std::string& name, const std::vector<std::vector<long>>& cartan,
                                   long doubled_orbit) {
  const std::size_t n = cartan.size();
  std::vector<RatVector> roots, coroots;
  std::vector<std::size_t> orbit;
  std::map<RatVector, std::size_t> index;
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < n; ++i) {
    RatVector a(n), av = zero_vector(n);
    for (std::size_t j = 0; j < n; ++j) a[j] = Rational(cartan[i][j]);
    av[i] = 1;
    index[a] = roots.size();
    roots.push_back(a);
    coroots.push_back(av);
    orbit.push_back(i);
    queue.push_back(roots.size() - 1);
  }
  while (!queue.empty()) {
    const std::size_t k = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      RatVector r = reflect_covector(roots[k], roots[i], coroots[i]);
      if (index.count(r)) continue;
      RatVector rv = reflect_vector(coroots[k], roots[i], coroots[i]);
      index[r] = roots.size();
      roots.push_back(std::move(r));
      coroots.push_back(std::move(rv));
      orbit.push_back(orbit[k]);
      queue.push_back(roots.size() - 1);
      if (roots.size() > 10000) throw std::invalid_argument("root_system_from_cartan: not a finite root system");
    }
  }
  if (doubled_orbit >= 0) {
    const std::size_t base = roots.size();
    for (std::size_t k = 0; k < base; ++k)
      if (orbit[k] == static_cast<std::size_t>(doubled_orbit)) {
        roots.push_back(scale(Rational(2), roots[k]));
        coroots.push_back(scale(Rational(1, 2), coroots[k]));
      }
  }
  std::vector<std::size_t> simple(n);
  for (std::size_t i = 0; i < n; ++i) simple[i] = i;
  return RootSystem(name, n, std::move(roots), std::move(coroots), std::move(simple), IntLattice::standard(n));
}

RootSystem build_root_system(const std::string& name) {
  const auto bad = [&] { return std::invalid_argument("unknown root system '" + name + "'"); };
  std::string family;
  std::size_t pos = 0;
  while (pos < name.size() && std::isalpha(static_cast<unsigned char>(name[pos]))) family += name[pos++];
  if (pos == name.size()) throw bad();
  std::size_t n = 0;
  for (; pos < name.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(name[pos]))) throw bad();
    n = n * 10 + static_cast<std::size_t>(name[pos] - '0');
    if (n > 12) throw bad();
  }
  std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) c[i][i] = 2;
  const auto chain = [&](std::size_t upto) {
    for (std::size_t i = 0; i + 1 < upto; ++i) c[i][i + 1] = c[i + 1][i] = -1;
  };
  if (family == "A" && n >= 1) {
    chain(n);
    return root_system_from_cartan(name, c);
  }
  if ((family == "B" || family == "C") && n >= 2) {
    chain(n);
    if (family == "B") c[n - 2][n - 1] = -2;  // last simple root short
    else c[n - 1][n - 2] = -2;                // last simple root long
    return root_system_from_cartan(name, c);
  }
  if (family == "D" && n >= 4) {
    chain(n - 1);
    c[n - 3][n - 1] = c[n - 1][n - 3] = -1;
    return root_system_from_cartan(name, c);
  }
  if (family == "G" && n == 2) return root_system_from_cartan(name, {{2, -1}, {-3, 2}});
  if (family == "BC" && n >= 1) {
    chain(n);
    if (n >= 2) c[n - 2][n - 1] = -2;
    return root_system_from_cartan(name, c, static_cast<long>(n - 1));
  }
  throw bad();
}

namespace {

RatVector vector_from_json(const nlohmann::json& v, std::size_t n, const char* what) {
  if (!v.is_array() || v.size() != n) throw std::invalid_argument(std::string("fixture: ") + what + " has wrong length");
  RatVector out;
  for (const auto& e : v) {
    if (e.is_number_integer()) out.emplace_back(e.get<long long>());
    else if (e.is_string()) out.push_back(parse_rational(e.get<std::string>()));
    else throw std::invalid_argument(std::string("fixture: ") + what + " entries must be integers or \"p/q\" strings");
  }
  return out;
}

nlohmann::json vector_to_json(const RatVector& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

}  // namespace

RootSystem root_system_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("fixture: root system must be an object");
  const auto n = j.at("dim").get<std::size_t>();
  std::vector<RatVector> roots, coroots;
  for (const auto& r : j.at("roots")) roots.push_back(vector_from_json(r, n, "root"));
  for (const auto& r : j.at("coroots")) coroots.push_back(vector_from_json(r, n, "coroot"));
  const auto simple = j.at("simple").get<std::vector<std::size_t>>();
  RatMatrix basis = RatMatrix::identity(n);
  if (j.contains("lattice")) {
    std::vector<RatVector> cols;
    for (const auto& v : j.at("lattice")) cols.push_back(vector_from_json(v, n, "lattice vector"));
    basis = RatMatrix::from_columns(n, cols);
  }
  return RootSystem(j.value("name", std::string("fixture")), n, std::move(roots), std::move(coroots), simple,
                    IntLattice(basis));
}

nlohmann::json root_system_to_json(const RootSystem& sys) {
  nlohmann::json j;
  j["name"] = sys.name();
  j["dim"] = sys.dim();
  j["roots"] = nlohmann::json::array();
  j["coroots"] = nlohmann::json::array();
  for (std::size_t i = 0; i < sys.size(); ++i) {
    j["roots"].push_back(vector_to_json(sys.root(i)));
    j["coroots"].push_back(vector_to_json(sys.coroot(i)));
  }
  j["simple"] = sys.simple();
  j["lattice"] = nlohmann::json::array();
  for (const auto& c : sys.lattice().basis().columns()) j["lattice"].push_back(vector_to_json(c));
  return j;
}

}  // namespace sympair
