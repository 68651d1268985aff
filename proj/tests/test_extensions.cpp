#include <doctest.h>

#include "homleib/extensions.hpp"
#include "homleib/homology.hpp"
#include "homleib/instances.hpp"

using namespace hlb;
namespace I = hlb::instances;

namespace {

// L + K onto the first summand.
AlgebraHom first_summand_projection(const HomLeibnizAlgebra& L, const HomLeibnizAlgebra& K) {
  const auto S = direct_sum(L, K);
  Matrix m(L.field(), L.dim(), S.dim());
  for (std::size_t i = 0; i < L.dim(); ++i) m(i, i) = Scalar(L.field(), 1);
  return AlgebraHom(S, L, LinearMap(m));
}

}  // namespace

TEST_SUITE("extensions") {

TEST_CASE("uce of sl2 and twisted sl2") {
  for (const auto& L : {I::sl2(), I::twisted_sl2()}) {
    const auto u = universal_central_extension(L);
    CHECK(classify_extension(u.extension) == ExtensionClass::Central);
    CHECK(predicates(u.extension.total).perfect);
    CHECK(u.kernel_dim == homology(trivial_corep(L), 2).dim);
  }
}

TEST_CASE("uce requires a perfect algebra") {
  try {
    universal_central_extension(I::e1());
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotPerfect);
  }
}

TEST_CASE("the lift into a central extension does not depend on preimage choices") {
  const auto L = I::sl2();
  const auto f = L.field();
  const auto u = universal_central_extension(L);
  const auto ext = make_extension(first_summand_projection(L, I::abelian(f, Matrix::identity(f, 2))));
  CHECK(classify_extension(ext) == ExtensionClass::Central);
  const auto base = lift_against(u, ext, 1);
  for (std::uint64_t seed = 2; seed <= 6; ++seed) CHECK(lift_against(u, ext, seed).map() == base.map());
  CHECK(compose(ext.proj.map(), base.map()) == u.extension.proj.map());
}

TEST_CASE("lifting against a non-central extension is refused") {
  const auto L = I::sl2();
  const auto u = universal_central_extension(L);
  const auto ext = make_extension(first_summand_projection(L, I::sl2()));
  CHECK(classify_extension(ext) == ExtensionClass::Neither);
  try {
    lift_against(u, ext);
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotCentral);
  }
}

TEST_CASE("an alpha-central extension that is not central") {
  const auto e = make_extension(I::alpha_central_projection());
  CHECK(classify_extension(e) == ExtensionClass::AlphaCentralOnly);
  CHECK(std::string(to_string(ExtensionClass::AlphaCentralOnly)) == "AlphaCentralOnly");
}

TEST_CASE("make_extension checks surjectivity and the kernel") {
  const auto L = I::sl2();
  const auto S = direct_sum(L, L);
  Matrix m(L.field(), S.dim(), L.dim());
  for (std::size_t i = 0; i < 3; ++i) m(i, i) = Scalar(L.field(), 1);
  try {
    make_extension(AlgebraHom(L, S, LinearMap(m)));
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotSurjective);
  }
  const auto p = first_summand_projection(L, L);
  try {
    make_extension(p, Subspace(L.field(), 6));
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::KernelMismatch);
  }
}

TEST_CASE("alpha-uce of twisted sl2 matches its presentation") {
  const auto u = universal_alpha_central_extension(I::twisted_sl2());
  CHECK(u.tensor.algebra().dim() == 3);
  CHECK(u.presentation.dim() == 3);
  CHECK(u.iso_bijective);
  CHECK(validate_algebra(u.presentation).ok());
}

TEST_CASE("alpha-uce requires alpha-perfection") {
  try {
    universal_alpha_central_extension(I::e1());
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotAlphaPerfect);
  }
}

TEST_CASE("six-term sequence on sl2 + sl2") {
  const auto L = I::sl2_sum();
  const auto f = L.field();
  const IdealHandle first(L, Subspace::span(f, 6, {L.basis_vector(0), L.basis_vector(1), L.basis_vector(2)}));
  for (const auto& I : {first, IdealHandle::zero(L), IdealHandle::whole(L)}) {
    const auto rep = six_term_check(L, I);
    CHECK(rep.ok());
    CHECK(rep.joints.size() == 3);
  }
}

TEST_CASE("six-term sequence needs a perfect algebra") {
  const auto L = I::e1();
  CHECK_THROWS_AS(six_term_check(L, IdealHandle::zero(L)), Error);
}

}  // TEST_SUITE
