#include <doctest.h>

#include "homleib/homology.hpp"
#include "homleib/instances.hpp"
#include "homleib/parallel.hpp"

using namespace hlb;
namespace I = hlb::instances;

TEST_SUITE("homology") {

TEST_CASE("HL with trivial coefficients") {
  CHECK(homology_dims(trivial_corep(I::sl2()), 3) == std::vector<std::size_t>{1, 0, 0, 0});
  CHECK(homology_dims(trivial_corep(I::twisted_sl2()), 3) == std::vector<std::size_t>{1, 0, 0, 0});
  CHECK(homology_dims(trivial_corep(I::e1()), 3) == std::vector<std::size_t>{1, 1, 1, 1});
  CHECK(homology_dims(trivial_corep(I::sl2_sum()), 2) == std::vector<std::size_t>{1, 0, 0});
}

TEST_CASE("HL of E1 with adjoint coefficients") {
  const auto c = adjoint_corep(I::e1());
  CHECK(validate_corep(c).ok());
  CHECK(homology_dims(c, 3) == std::vector<std::size_t>{1, 1, 1, 1});
}

TEST_CASE("d2 of E1 with adjoint coefficients") {
  const auto c = adjoint_corep(I::e1());
  const auto d2 = boundary_matrix(c, 2);
  const auto Q = FieldSpec::rationals();
  REQUIRE(d2.domain_dim() == 8);
  REQUIRE(d2.codomain_dim() == 4);
  auto col = [&](std::initializer_list<long> xs) {
    Vector v;
    for (long x : xs) v.emplace_back(Q, x);
    return v;
  };
  for (std::size_t j : {0, 1, 2, 4}) CHECK(is_zero(d2.image_of_basis(j)));
  CHECK(d2.image_of_basis(3) == col({-1, 0, 0, 0}));
  CHECK(d2.image_of_basis(5) == col({-1, 0, 0, 0}));
  CHECK(d2.image_of_basis(6) == col({1, 0, 0, 0}));
  CHECK(d2.image_of_basis(7) == col({-1, 0, -1, 0}));
}

TEST_CASE("chain complex dimensions") {
  const auto cx = build_complex(adjoint_corep(I::sl2()), 3);
  CHECK(cx.dims == std::vector<std::size_t>{3, 9, 27, 81});
  CHECK(cx.boundaries.size() == 3);
}

TEST_CASE("boundary assembly matches the serial transcription") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    I::Generator g(seed);
    const auto c = g.corep();
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto ref = boundary_matrix_reference(c, n);
      par::ModeGuard guard(par::Mode::Parallel, 4);
      CHECK(boundary_matrix(c, n) == ref);
    }
  }
}

TEST_CASE("d squared vanishes on random co-representations") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    I::Generator g(seed);
    const auto c = g.corep();
    CAPTURE(seed);
    REQUIRE(validate_corep(c).ok());
    CHECK_FALSE(first_nonzero_square(build_complex(c, 4)).has_value());
  }
}

TEST_CASE("closed forms for HL0 and HL1") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    I::Generator g(seed);
    const auto c = g.corep();
    const auto dims = homology_dims(c, 1);
    CAPTURE(seed);
    CHECK(dims[0] == hl0_closed_form(c));
    const auto& L = c.algebra();
    CHECK(homology_dims(trivial_corep(L), 1)[1] == L.dim() - L.derived().dim());
    if (c.is_trivial()) CHECK(dims[1] == hl1_trivial_closed_form(c));
  }
}

TEST_CASE("sl2 co-representation with the left sign dropped fails axiom c") {
  const auto L = I::sl2();
  const auto a = adjoint_corep(L);
  Tensor3 left = a.left();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) left(i, j, k) = -left(i, j, k);
  const CoRepresentation bad(L, a.alpha_matrix(), left, a.right());
  const auto rep = validate_corep(bad);
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.holds("c"));
}

TEST_CASE("homology representatives are cycles") {
  const auto c = trivial_corep(I::e1());
  const auto h = homology(c, 2);
  CHECK(h.dim == 1);
  const auto d2 = boundary_matrix(c, 2);
  for (const auto& z : h.representatives) CHECK(is_zero(d2(z)));
}

}  // TEST_SUITE
