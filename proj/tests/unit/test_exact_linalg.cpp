#include "oracles.hpp"
#include "sympair/smith.hpp"
#include "sympair/tate.hpp"

#include <doctest.h>

#include <array>

using namespace sympair;

namespace {

IntMatrix im(std::size_t r, std::size_t c, std::vector<long> v) {
  std::vector<Integer> d(v.begin(), v.end());
  return IntMatrix(r, c, d);
}

bool diagonal_chain(const IntMatrix& d) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  const std::size_t n = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < n; ++i) {
    if (d(i, i) < 0) return false;
    if (i + 1 < n && d(i, i) == 0 && d(i + 1, i + 1) != 0) return false;
    if (i + 1 < n && d(i, i) != 0 && d(i + 1, i + 1) % d(i, i) != 0) return false;
  }
  return true;
}

std::vector<std::vector<std::size_t>> klein_table() {
  return {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
}

// S3 as permutations of {0,1,2}, composed as maps.
std::vector<std::vector<std::size_t>> s3_table() {
  std::vector<std::array<int, 3>> perms{{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = std::find(perms.begin(), perms.end(), c) - perms.begin();
    }
  return t;
}

FiniteAbelianGroup z(std::vector<long> orders) {
  return FiniteAbelianGroup::from_orders(std::vector<Integer>(orders.begin(), orders.end()));
}

}  // namespace

TEST_CASE("smith normal form: fixed examples") {
  const auto id = smith_normal_form(IntMatrix::identity(2));
  CHECK(id.U == IntMatrix::identity(2));
  CHECK(id.D == IntMatrix::identity(2));
  CHECK(id.V == IntMatrix::identity(2));

  // d1 = gcd of entries = 2, d1 d2 = |det| = 8
  const IntMatrix m = im(2, 2, {2, 4, 6, 8});
  const auto s = smith_normal_form(m);
  CHECK(s.D == im(2, 2, {2, 0, 0, 4}));
  CHECK(s.U * m * s.V == s.D);
  CHECK(oracle::invariant_factors(m) == std::vector<Integer>{2, 4});

  const IntMatrix zero(3, 2);
  CHECK(smith_normal_form(zero).D == zero);
}

TEST_CASE("smith normal form: random round trip against determinantal divisors") {
  std::mt19937_64 rng(20240601);
  for (int it = 0; it < 300; ++it) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    const IntMatrix m = oracle::random_int_matrix(rng, r, c, 20);
    const auto s = smith_normal_form(m);
    REQUIRE(s.U * m * s.V == s.D);
    CHECK(abs(oracle::det(s.U)) == 1);
    CHECK(abs(oracle::det(s.V)) == 1);
    CHECK(diagonal_chain(s.D));
    if (std::max(r, c) <= 4) {
      std::vector<Integer> diag;
      for (std::size_t i = 0; i < std::min(r, c); ++i)
        if (s.D(i, i) != 0) diag.push_back(s.D(i, i));
      CHECK(diag == oracle::invariant_factors(m));
    }
    // reproducible transforms
    const auto again = smith_normal_form(m);
    CHECK(again.U == s.U);
    CHECK(again.V == s.V);
  }
}

TEST_CASE("integer kernel spans the integer solutions") {
  const IntMatrix m = im(1, 3, {2, 4, 6});
  const IntMatrix k = integer_kernel(m);
  CHECK(k.cols() == 2);
  CHECK((m * k).is_zero());
  // (1,1,-1) is an integer solution; it must be an integer combination of the kernel basis
  const auto coords = IntLattice(to_rational(k)).coordinates({1, 1, -1});
  REQUIRE(coords);
  for (const auto& x : *coords) CHECK(is_integral(x));
}

TEST_CASE("quotient groups") {
  const IntLattice z2 = IntLattice::standard(2);
  CHECK(quotient_group(z2, IntLattice::from_integer(im(2, 2, {2, 0, 0, 2}))).to_string() == "Z/2 x Z/2");
  CHECK(quotient_group(IntLattice::standard(1), IntLattice::from_integer(im(1, 1, {6}))).to_string() == "Z/6");
  // |det [[1,1],[1,-1]]| = 2
  CHECK(quotient_group(z2, IntLattice::from_integer(im(2, 2, {1, 1, 1, -1}))).to_string() == "Z/2");
  CHECK_THROWS(quotient_group(z2, IntLattice::from_integer(im(2, 1, {1, 0}))));
  CHECK_THROWS(quotient_group(IntLattice::from_integer(im(2, 2, {2, 0, 0, 2})), z2));
}

TEST_CASE("quotient order equals |det| for random square sublattices") {
  std::mt19937_64 rng(77);
  int tested = 0;
  while (tested < 100) {
    const std::size_t n = 1 + rng() % 4;
    const IntMatrix m = oracle::random_int_matrix(rng, n, n, 9);
    const Integer d = oracle::det(m);
    if (d == 0) continue;
    ++tested;
    CHECK(quotient_group(IntLattice::standard(n), IntLattice::from_integer(m)).order() == abs(d));
  }
}

TEST_CASE("finite abelian groups normalize to invariant factors") {
  CHECK(z({2, 3}).to_string() == "Z/6");
  CHECK(z({4, 6}).to_string() == "Z/2 x Z/12");
  CHECK(z({1, 1}).is_trivial());
  CHECK(direct_sum(z({2}), z({2})).to_string() == "Z/2 x Z/2");
}

TEST_CASE("tate cohomology: small lattices") {
  CHECK(tate_h_minus1(LatticeWithAction::trivial(1)).is_trivial());
  CHECK(tate_h_minus1(LatticeWithAction::norm_one_torus()).to_string() == "Z/2");
  CHECK(tate_h_minus1(LatticeWithAction::induced_torus()).is_trivial());
  CHECK(torus_h1(LatticeWithAction::trivial(3)).is_trivial());
  CHECK(tate_h0(LatticeWithAction::norm_one_torus()).is_trivial());
  CHECK(tate_h0(LatticeWithAction::induced_torus()).is_trivial());
  CHECK(tate_h0(LatticeWithAction::cyclic_regular(3)).is_trivial());
  // Z (trivial) + Z (sign) under Z/2: fixed part Z e1, norms 2Z e1
  const auto mixed = LatticeWithAction(IntLattice::standard(2), {IntMatrix::identity(2), im(2, 2, {1, 0, 0, -1})});
  CHECK(tate_h0(mixed).to_string() == "Z/2");
  CHECK(tate_h_minus1(mixed).to_string() == "Z/2");
  // an order-two action that is not diagonalizable over Z
  const auto twisted = LatticeWithAction(IntLattice::standard(2), {IntMatrix::identity(2), im(2, 2, {1, 1, 0, -1})});
  CHECK(tate_h0(twisted).is_trivial());
  CHECK(tate_h_minus1(twisted).is_trivial());
}

TEST_CASE("products of norm-one tori") {
  LatticeWithAction x = LatticeWithAction::norm_one_torus();
  for (int k = 1; k <= 4; ++k) {
    CHECK(torus_h1(x).order() == Integer(1) << k);
    x = direct_sum(x, LatticeWithAction::norm_one_torus());
  }
  // one quadratic extension acting by -1 on Z^3
  const auto diag = LatticeWithAction::from_generators(IntLattice::standard(3), {im(3, 3, {-1, 0, 0, 0, -1, 0, 0, 0, -1})});
  CHECK(torus_h1(diag).to_string() == "Z/2 x Z/2 x Z/2");
}

TEST_CASE("regular representations have trivial H^-1 for groups of order <= 6") {
  for (std::size_t n = 1; n <= 6; ++n) CHECK(tate_h_minus1(LatticeWithAction::cyclic_regular(n)).is_trivial());
  CHECK(tate_h_minus1(LatticeWithAction::regular(klein_table())).is_trivial());
  CHECK(tate_h_minus1(LatticeWithAction::regular(s3_table())).is_trivial());
}

TEST_CASE("H^-1 is additive over direct sums") {
  std::vector<LatticeWithAction> pieces{LatticeWithAction::trivial(1), LatticeWithAction::norm_one_torus(),
                                        LatticeWithAction::induced_torus(), LatticeWithAction::cyclic_regular(3)};
  for (const auto& a : pieces)
    for (const auto& b : pieces)
      CHECK(tate_h_minus1(direct_sum(a, b)) == direct_sum(tate_h_minus1(a), tate_h_minus1(b)));
}

TEST_CASE("non-closed group sets are rejected") {
  // {1, g} with g of order 3 is not closed
  const IntMatrix g = im(2, 2, {0, -1, 1, -1});
  CHECK_THROWS_AS(LatticeWithAction(IntLattice::standard(2), {IntMatrix::identity(2), g}), std::invalid_argument);
  CHECK_NOTHROW(LatticeWithAction::from_generators(IntLattice::standard(2), {g}));
  // non-invertible matrix
  CHECK_THROWS_AS(LatticeWithAction(IntLattice::standard(1), {IntMatrix::identity(1), im(1, 1, {2})}),
                  std::invalid_argument);
}

TEST_CASE("lattice fixtures round trip") {
  const auto j = nlohmann::json::parse(R"({"ambient_rank": 2, "generators": [[[0, 1], [1, 0]]]})");
  const auto x = lattice_from_json(j);
  CHECK(x.group_elements().size() == 2);
  const auto y = lattice_from_json(lattice_to_json(x));
  CHECK(y.group_elements() == x.group_elements());
  CHECK_THROWS(lattice_from_json(nlohmann::json::parse(R"({"generators": []})")));
}
