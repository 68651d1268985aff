#include <doctest.h>

#include "homleib/instances.hpp"
#include "homleib/parallel.hpp"
#include "homleib/tensor.hpp"

using namespace hlb;
namespace I = hlb::instances;

namespace {

// The N-side outer action with the formula [n',n]*alpha(m) - ^n m * alpha(n')
// substituted on the n*m generators. Returns true if it respects the relations.
bool literal_outer_action_descends(const TensorProduct& t) {
  const auto& M = t.M();
  const auto& N = t.N();
  OuterAmbient oa = outer_action_ambient(t, Side::N);
  for (std::size_t k = 0; k < N.dim(); ++k) {
    Matrix m = oa.left[k].matrix();
    const Vector np = N.basis_vector(k);
    for (std::size_t i = 0; i < M.dim(); ++i)
      for (std::size_t j = 0; j < N.dim(); ++j) {
        const Vector mm = M.basis_vector(i), n = N.basis_vector(j);
        const Vector v = sub(t.star_nm(N.bracket(np, n), M.twist(mm)),
                             t.star_mn(t.actions().on_M.act_left(n, mm), N.twist(np)));
        for (std::size_t r = 0; r < t.ambient_dim(); ++r) m(r, t.nm_index(j, i)) = v[r];
      }
    try {
      (void)induced_map(LinearMap(m), t.presentation(), t.presentation());
    } catch (const Error&) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("tensor") {

TEST_CASE("E1*E1") {
  const auto t = tensor_square(I::e1());
  CHECK(t.ambient_dim() == 8);
  CHECK(t.presentation().relations().dim() == 5);
  CHECK(t.algebra().dim() == 3);
  CHECK(validate_algebra(t.algebra()).ok());
  const auto psi = psi_maps(t);
  CHECK(psi.psi1.map().rank() == 1);
  CHECK(tensor_property_battery(t).ok());
}

TEST_CASE("sl2*sl2 and twisted sl2*sl2 are three-dimensional with injective psi") {
  for (const auto& L : {I::sl2(), I::twisted_sl2()}) {
    const auto t = tensor_square(L);
    CHECK(t.algebra().dim() == 3);
    CHECK(kernel(psi_maps(t).psi1.map()).dim() == 0);
    const auto rep = tensor_property_battery(t);
    CHECK(rep.ok());
    CHECK(rep.rules.size() == 22);
  }
}

TEST_CASE("relation generation is identical in every execution mode") {
  const auto ma = adjoint_mutual(I::twisted_sl2());
  std::vector<Vector> ser, par4, par2;
  {
    par::ModeGuard g(par::Mode::Serial, 1);
    ser = tensor_relations(ma);
  }
  {
    par::ModeGuard g(par::Mode::Parallel, 4);
    par4 = tensor_relations(ma);
  }
  {
    par::ModeGuard g(par::Mode::Parallel, 2);
    par2 = tensor_relations(ma);
  }
  CHECK(ser == par4);
  CHECK(ser == par2);
}

TEST_CASE("tensor algebra is identical in every execution mode") {
  I::Generator g(4);
  const auto ma = g.ideal_pair();
  std::optional<TensorProduct> a, b;
  {
    par::ModeGuard guard(par::Mode::Serial, 1);
    a = build_tensor(ma);
  }
  {
    par::ModeGuard guard(par::Mode::Parallel, 4);
    b = build_tensor(ma);
  }
  CHECK(a->presentation().relations() == b->presentation().relations());
  CHECK(a->algebra().structure() == b->algebra().structure());
  CHECK(a->algebra().alpha_matrix() == b->algebra().alpha_matrix());
}

TEST_CASE("trivial actions with surjective twists split as 2 dim M^ab dim N^ab") {
  for (std::uint64_t seed = 100; seed < 110; ++seed) {
    I::Generator g(seed);
    const auto M = g.algebra(true), N = g.algebra(true);
    const auto t = build_tensor(trivial_mutual(M, N));
    CAPTURE(seed);
    CHECK(t.algebra().dim() == 2 * (M.dim() - M.derived().dim()) * (N.dim() - N.derived().dim()));
    CHECK(is_abelian(t.algebra()));
  }
}

TEST_CASE("outer actions are valid Hom-actions") {
  const auto t = tensor_square(I::sl2());
  CHECK(validate_action(outer_action(t, Side::M)).ok());
  CHECK(validate_action(outer_action(t, Side::N)).ok());
}

TEST_CASE("the literal N-side outer action formula does not descend on sl2*sl2") {
  CHECK_FALSE(literal_outer_action_descends(tensor_square(I::sl2())));
  CHECK_FALSE(literal_outer_action_descends(tensor_square(I::twisted_sl2())));
}

TEST_CASE("property battery on random compatible ideal pairs") {
  for (std::uint64_t seed : {1, 2, 3}) {
    I::Generator g(seed);
    const auto t = build_tensor(g.ideal_pair());
    CAPTURE(seed);
    CHECK(tensor_property_battery(t).ok());
  }
}

TEST_CASE("incompatible actions are refused") {
  const auto L = I::sl2();
  try {
    build_tensor(make_mutual(adjoint_action(L), trivial_action(L, L)));
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::IncompatibleActions);
    CHECK_FALSE(e.witness().empty());
  }
}

TEST_CASE("induced maps between tensor products") {
  const auto L = I::sl2();
  const auto t = tensor_square(L);
  const auto id = identity_hom(L);
  const auto f = induced_tensor_map(id, id, t, t);
  CHECK(f.map() == LinearMap::identity(L.field(), t.algebra().dim()));
}

TEST_CASE("right exactness along a central quotient") {
  const auto L = I::heisenberg();
  const auto f = L.field();
  const auto N = I::abelian(f, Matrix::identity(f, 2));
  const IdealHandle Z(L, L.center());
  const auto sub = materialize(L, L.center());
  const auto q = quotient_algebra(Z);
  const auto rep = right_exactness_check(sub.inclusion, q.projection, trivial_mutual(sub.algebra, N),
                                         trivial_mutual(L, N), trivial_mutual(q.algebra, N));
  CHECK(rep.ok());
  CHECK(rep.joints.size() == 2);
}

TEST_CASE("L*L maps onto (L/M)*(L/M) with kernel the image of sigma") {
  const auto L = I::e1();
  const auto rep = ideal_sequence_check(IdealHandle(L, Subspace::span(L.field(), 2, {L.basis_vector(0)})));
  CHECK(rep.ok());
  CHECK(rep.dims.at("L*L") == 3);
  CHECK(rep.dims.at("(L/M)*(L/M)") == 2);
}

}  // TEST_SUITE
