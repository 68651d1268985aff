#pragma once

#include <cstdint>
#include <random>

#include "homleib/actions.hpp"
#include "homleib/homassoc.hpp"
#include "homleib/homology.hpp"

namespace hlb::instances {

// dim 2, [e2,e2] = e1, alpha = [[1,1],[0,1]]
HomLeibnizAlgebra e1(FieldSpec f = FieldSpec::rationals());
// basis (e, h, f): [e,f] = h, [h,e] = 2e, [h,f] = -2f, alpha = id
HomLeibnizAlgebra sl2(FieldSpec f = FieldSpec::rationals());
// Yau twist of sl2 by e -> t e, h -> h, f -> f/t
HomLeibnizAlgebra twisted_sl2(FieldSpec f = FieldSpec::rationals(), long t = 4);
HomLeibnizAlgebra sl2_sum(FieldSpec f = FieldSpec::rationals());
// [x,y] = z = -[y,x], alpha = id
HomLeibnizAlgebra heisenberg(FieldSpec f = FieldSpec::rationals());
HomLeibnizAlgebra abelian(FieldSpec f, const Matrix& alpha);

// K = span{k1,k2}, [k2,k1] = k1 = -[k1,k2], alpha = diag(0,1), over the 1-dim
// quotient by span{k1}: alpha(Ker) = 0 is central but Ker is not.
AlgebraHom alpha_central_projection(FieldSpec f = FieldSpec::rationals());

// Associative algebras with alpha = id.
HomAssociativeAlgebra dual_numbers(FieldSpec f = FieldSpec::rationals());
HomAssociativeAlgebra upper_triangular(FieldSpec f = FieldSpec::rationals());
HomAssociativeAlgebra matrices2(FieldSpec f = FieldSpec::rationals());
HomAssociativeAlgebra zero_product(FieldSpec f = FieldSpec::rationals());
HomAssociativeAlgebra with_twist(const HomAssociativeAlgebra& A, const Matrix& alpha);

// Seeded generators. Draws use plain modular reduction of the engine output so
// sequences are identical on every platform.
class Generator {
 public:
  explicit Generator(std::uint64_t seed, FieldSpec f = FieldSpec::rationals()) : rng_(seed), f_(f) {}
  FieldSpec field() const { return f_; }
  long integer(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  Scalar scalar();          // small numerator over 1 or 2, possibly zero
  Scalar nonzero_scalar();
  Matrix matrix(std::size_t n);
  Matrix invertible_matrix(std::size_t n);

  // Random valid multiplicative algebra of dimension <= 3 (Yau twists of small
  // Leibniz algebras, abelian ones with arbitrary twist). Surjective twist when asked.
  HomLeibnizAlgebra algebra(bool surjective_twist = false);
  // Random valid co-representation of dimension <= 4 over a random algebra.
  CoRepresentation corep();
  // Ideals M, N of a random algebra acting on each other by brackets.
  MutualActions ideal_pair();

 private:
  std::mt19937_64 rng_;
  FieldSpec f_;
};

}  // namespace hlb::instances
