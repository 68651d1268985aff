#pragma once

#include <string>

#include "homleib/algebra.hpp"

namespace hlb {

// Action of `actor` (L) on `target` (M): left (x,m) -> ^x m with tensor shape
// (dim L, dim M, dim M), right (m,x) -> m^x with shape (dim M, dim L, dim M).
class HomAction {
 public:
  HomAction() = default;
  // Shapes checked (StructureError); axioms are not, see validate_action.
  HomAction(HomLeibnizAlgebra actor, HomLeibnizAlgebra target, Tensor3 left, Tensor3 right);

  const HomLeibnizAlgebra& actor() const { return actor_; }
  const HomLeibnizAlgebra& target() const { return target_; }
  const Tensor3& left() const { return left_; }
  const Tensor3& right() const { return right_; }

  Vector act_left(const Vector& x, const Vector& m) const { return left_.apply(x, m); }
  Vector act_right(const Vector& m, const Vector& x) const { return right_.apply(m, x); }
  bool is_trivial() const { return left_.is_zero() && right_.is_zero(); }

 private:
  HomLeibnizAlgebra actor_, target_;
  Tensor3 left_, right_;
};

// Axioms a)-h) over basis triples; flag "trivial".
ValidationReport validate_action(const HomAction& a);
void require_valid(const HomAction& a);

HomAction trivial_action(const HomLeibnizAlgebra& L, const HomLeibnizAlgebra& M);
// Action by the bracket of a common ambient algebra: K and H are subalgebras
// of it with [K,H] + [H,K] contained in H.
HomAction bracket_action(const Subalgebra& K, const Subalgebra& H);
// L acting on itself by its bracket.
HomAction adjoint_action(const HomLeibnizAlgebra& L);

// M acting on N (on_N) together with N acting on M (on_M).
struct MutualActions {
  HomAction on_N;
  HomAction on_M;

  const HomLeibnizAlgebra& M() const { return on_N.actor(); }
  const HomLeibnizAlgebra& N() const { return on_N.target(); }
};

// Checks that the two actions refer to the same pair of algebras.
MutualActions make_mutual(HomAction on_N, HomAction on_M);
// The eight identities of the compatibility system over basis triples.
ValidationReport check_compatible(const MutualActions& ma);

MutualActions trivial_mutual(const HomLeibnizAlgebra& M, const HomLeibnizAlgebra& N);
// Two subalgebras of a common algebra, each an ideal for the other's bracket.
MutualActions bracket_mutual(const Subalgebra& M, const Subalgebra& N);
// L with itself, both actions by the bracket.
MutualActions adjoint_mutual(const HomLeibnizAlgebra& L);

struct SemidirectProduct {
  HomLeibnizAlgebra algebra;  // basis: M first, then L
  AlgebraHom injection;       // M -> M x| L
  AlgebraHom projection;      // M x| L -> L
  AlgebraHom section;         // L -> M x| L
};

SemidirectProduct semidirect(const HomAction& a);

}  // namespace hlb
