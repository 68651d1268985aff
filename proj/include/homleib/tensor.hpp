#pragma once

#include <memory>
#include <utility>

#include "homleib/actions.hpp"
#include "homleib/exactness.hpp"

namespace hlb {

// M*N presented on the ambient space (M (x) N) + (N (x) M). Generator m_i*n_j
// has ambient index i*dim N + j; n_j*m_i has index dim M*dim N + j*dim M + i.
class TensorProduct {
 public:
  const MutualActions& actions() const { return ma_; }
  const HomLeibnizAlgebra& M() const { return ma_.M(); }
  const HomLeibnizAlgebra& N() const { return ma_.N(); }
  FieldSpec field() const { return M().field(); }

  std::size_t ambient_dim() const { return 2 * M().dim() * N().dim(); }
  std::size_t mn_index(std::size_t i, std::size_t j) const { return i * N().dim() + j; }
  std::size_t nm_index(std::size_t j, std::size_t i) const { return M().dim() * N().dim() + j * M().dim() + i; }
  // Ambient vectors of m*n and n*m for arbitrary m in M, n in N.
  Vector star_mn(const Vector& m, const Vector& n) const;
  Vector star_nm(const Vector& n, const Vector& m) const;

  std::size_t relation_generator_count() const { return relation_count_; }
  const QuotientSpace& presentation() const { return presentation_; }
  const HomLeibnizAlgebra& algebra() const { return algebra_; }
  // alpha_M (x) alpha_N + alpha_N (x) alpha_M on the ambient space.
  const LinearMap& alpha_ambient() const { return alpha_ambient_; }
  // psi_1, psi_2 on ambient generators.
  const LinearMap& psi1_ambient() const { return psi1_; }
  const LinearMap& psi2_ambient() const { return psi2_; }

  // Bracket on ambient representatives: [x, y] = psi_1(x) * psi_2(y) in the M*N block.
  Vector bracket_ambient(const Vector& x, const Vector& y) const;
  Vector project(const Vector& ambient) const { return presentation_.project(ambient); }
  Vector lift(const Vector& q) const { return presentation_.lift(q); }

 private:
  friend TensorProduct build_tensor(const MutualActions& ma);
  MutualActions ma_;
  std::size_t relation_count_ = 0;
  QuotientSpace presentation_;
  HomLeibnizAlgebra algebra_;
  LinearMap alpha_ambient_, psi1_, psi2_;
};

// All instances of the relation families over basis tuples, in a fixed order.
std::vector<Vector> tensor_relations(const MutualActions& ma);
TensorProduct build_tensor(const MutualActions& ma);
// Shorthand for L*L with both actions given by the bracket.
TensorProduct tensor_square(const HomLeibnizAlgebra& L);

struct PsiMaps {
  AlgebraHom psi1;  // M*N -> M
  AlgebraHom psi2;  // M*N -> N
};

PsiMaps psi_maps(const TensorProduct& t);

// f (x) g on generators, descended to t -> t'.
AlgebraHom induced_tensor_map(const AlgebraHom& f, const AlgebraHom& g, const TensorProduct& t,
                              const TensorProduct& tp);

enum class Side { M, N };

// Ambient linear maps x -> ^a x and x -> x^a for one basis element a of the
// chosen factor; index k of the result is basis element k.
struct OuterAmbient {
  std::vector<LinearMap> left, right;
};
OuterAmbient outer_action_ambient(const TensorProduct& t, Side side);
// The action of M (or N) on M*N, validated.
HomAction outer_action(const TensorProduct& t, Side side);

// Relation closure of bracket and twist plus the structural properties of
// psi_1, psi_2 and the outer actions: rules "bracket_closure", "twist_closure",
// "ker_psi1_central", "ker_psi2_central", "im_psi1_trivial_on_ker",
// "im_psi2_trivial_on_ker", and "f.i" ... "f.xvi".
ValidationReport tensor_property_battery(const TensorProduct& t);

// Right exactness M1*N -> M2*N -> M3*N -> 0 for a short exact sequence
// M1 -f-> M2 -g-> M3 of algebras acting compatibly with N, f and g equivariant.
ExactnessReport right_exactness_check(const AlgebraHom& f, const AlgebraHom& g, const MutualActions& ma1,
                                      const MutualActions& ma2, const MutualActions& ma3);
// (M*L) + (L*M) --sigma--> L*L --tau--> (L/M)*(L/M) --> 0 for an ideal M of L.
ExactnessReport ideal_sequence_check(const IdealHandle& M);

}  // namespace hlb
