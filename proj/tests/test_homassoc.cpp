#include <doctest.h>

#include "homleib/homassoc.hpp"
#include "homleib/instances.hpp"

using namespace hlb;
namespace I = hlb::instances;

namespace {

// Upper-triangular 2x2 matrices twisted by conjugation with diag(1,2).
HomAssociativeAlgebra twisted_upper_triangular() {
  const auto A = I::upper_triangular();
  const auto f = A.field();
  Matrix a = Matrix::identity(f, 3);
  a(1, 1) = Scalar(f, 2);
  Tensor3 p(f, 3, 3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) p.set_slice(i, j, a * A.mul_basis(i, j));
  return HomAssociativeAlgebra(f, A.labels(), p, a);
}

struct Expected {
  std::size_t dim_L, rank_b3, rank_phi, hh1, hh1m, commutators;
};

}  // namespace

TEST_SUITE("homassoc") {

TEST_CASE("instances are valid Hom-associative algebras") {
  CHECK(validate_homassoc(I::dual_numbers()).flags.at("commutative"));
  CHECK(validate_homassoc(I::zero_product()).flags.at("commutative"));
  CHECK_FALSE(validate_homassoc(I::upper_triangular()).flags.at("commutative"));
  CHECK(validate_homassoc(I::matrices2()).ok());
  CHECK(validate_homassoc(twisted_upper_triangular()).ok());
}

TEST_CASE("non-associative product is rejected") {
  const auto A = I::dual_numbers();
  Tensor3 q = A.product();
  q(1, 1, 0) = Scalar(A.field(), 1);  // x^2 = 1
  q(0, 1, 1) = Scalar(A.field(), 0);  // 1 x = 0
  CHECK_FALSE(validate_homassoc(HomAssociativeAlgebra(A.field(), A.labels(), q, A.alpha_matrix())).ok());
}

TEST_CASE("commutator algebra is Hom-Leibniz") {
  for (const auto& A : {I::dual_numbers(), I::upper_triangular(), I::matrices2(), twisted_upper_triangular()})
    CHECK(validate_algebra(to_leibniz(A)).ok());
}

TEST_CASE("Hochschild module dimensions") {
  const std::vector<std::pair<HomAssociativeAlgebra, Expected>> cases = {
      {I::dual_numbers(), {1, 3, 0, 1, 1, 0}},
      {I::upper_triangular(), {1, 8, 1, 0, 0, 1}},
      {I::matrices2(), {3, 13, 3, 0, 0, 3}},
  };
  for (const auto& [A, e] : cases) {
    const auto H = hochschild_module(A);
    CHECK(H.algebra.dim() == e.dim_L);
    CHECK(H.b3.rank() == e.rank_b3);
    CHECK(H.phi.rank() == e.rank_phi);
    CHECK(H.commutators.dim() == e.commutators);
    CHECK(validate_algebra(H.algebra).ok());
    const auto h = first_homologies(A);
    CHECK(h.hh1_alpha_dim == e.hh1);
    CHECK(h.hh1_milnor_dim == e.hh1m);
    CHECK(h.alpha_identity_holds);
  }
}

TEST_CASE("commutative algebras have equal HH1 variants") {
  for (const auto& A : {I::dual_numbers(), I::zero_product()}) {
    const auto h = first_homologies(A);
    CHECK(h.hh1_alpha_dim == h.hh1_milnor_dim);
  }
}

TEST_CASE("exact sequence certificate") {
  for (const auto& A : {I::upper_triangular(), I::dual_numbers(), I::matrices2(), I::zero_product()}) {
    const auto rep = sequence_check(A);
    CHECK(rep.ok());
    CHECK(rep.joints.size() == 5);
    CHECK(rep.checks.size() == 3);
  }
}

TEST_CASE("alpha-identity failure is reported with a witness") {
  const auto A = twisted_upper_triangular();
  CHECK(alpha_identity_witness(A).has_value());
  CHECK_FALSE(first_homologies(A).alpha_identity_holds);
  try {
    sequence_check(A);
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::AlphaIdentityFails);
    CHECK_FALSE(e.witness().empty());
  }
}

TEST_CASE("comparison of L(A) with the tensor square") {
  struct Row {
    HomAssociativeAlgebra A;
    std::size_t T, J, K;
    bool equal;
  };
  const std::vector<Row> rows = {
      {I::dual_numbers(), 8, 6, 7, false},
      {I::upper_triangular(), 9, 8, 8, true},
      {I::matrices2(), 5, 2, 2, true},
      {I::zero_product(), 2, 0, 1, false},
  };
  for (const auto& r : rows) {
    const auto c = compare_with_tensor_square(r.A);
    CHECK(c.map_descends);
    CHECK(c.map_surjective);
    CHECK(c.tensor_dim == r.T);
    CHECK(c.ideal_dim == r.J);
    CHECK(c.kernel_dim == r.K);
    CHECK(c.kernel_is_ideal == r.equal);
  }
}

}  // TEST_SUITE
