#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homleib/exactness.hpp"
#include "homleib/tensor.hpp"

namespace hlb {

class HomAssociativeAlgebra {
 public:
  HomAssociativeAlgebra() = default;
  // e_i e_j = sum_k product(i,j,k) e_k. Shapes checked (StructureError), identities not.
  HomAssociativeAlgebra(FieldSpec f, std::vector<std::string> labels, Tensor3 product, Matrix alpha);

  FieldSpec field() const { return alpha_.field(); }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Tensor3& product() const { return product_; }
  const Matrix& alpha_matrix() const { return alpha_; }
  Vector mul(const Vector& a, const Vector& b) const { return product_.apply(a, b); }
  Vector mul_basis(std::size_t i, std::size_t j) const { return product_.slice(i, j); }
  Vector twist(const Vector& a) const { return alpha_ * a; }
  Vector basis_vector(std::size_t i) const { return unit_vector(field(), dim(), i); }

 private:
  std::vector<std::string> labels_;
  Tensor3 product_;
  Matrix alpha_;
};

// Rules "hom_associativity" (triples) and "multiplicativity" (pairs); flag "commutative".
ValidationReport validate_homassoc(const HomAssociativeAlgebra& A);
// Commutator algebra [a,b] = ab - ba with the same twist.
HomLeibnizAlgebra to_leibniz(const HomAssociativeAlgebra& A);

struct HochschildModule {
  HomAssociativeAlgebra parent;
  HomLeibnizAlgebra lie;          // to_leibniz(parent)
  LinearMap b3;                   // A(x)A(x)A -> A(x)A, triples row-major
  QuotientSpace presentation;     // (A(x)A) / Im(b3)
  HomLeibnizAlgebra algebra;      // L^alpha(A) on coset coordinates
  Subspace commutators;           // [A,A] inside A
  LinearMap phi;                  // L^alpha(A) -> [A,A], in basis coordinates of [A,A]
  LinearMap phi_ambient;          // A(x)A -> A, a(x)b |-> ab - ba
};
// Requires a valid algebra (InvalidAlgebra otherwise).
HochschildModule hochschild_module(const HomAssociativeAlgebra& A);

struct FirstHomologies {
  std::size_t dim_L = 0;          // dim L^alpha(A)
  std::size_t dim_commutators = 0;
  std::size_t hh1_alpha_dim = 0;
  std::size_t hh1_milnor_dim = 0;
  bool alpha_identity_holds = false;
};
FirstHomologies first_homologies(const HomAssociativeAlgebra& A);

// Some (i, v) with [e_i, v] != 0 for v a basis vector of Im(alpha - id), if any.
std::optional<std::string> alpha_identity_witness(const HomAssociativeAlgebra& A);

// Milnor relation span inside A(x)A.
Subspace milnor_relations(const HomAssociativeAlgebra& A);

// Five-joint certificate for A*HH1 -> ... -> [A,A]/[A,[A,A]] -> 0.
// Throws AlphaIdentityFails with a witness.
ExactnessReport sequence_check(const HomAssociativeAlgebra& A);

// Compare L^alpha(A) with A*A (adjoint actions of the commutator algebra)
// modulo the ideal generated by b3-shaped elements in both blocks.
struct TensorQuotientComparison {
  bool map_descends = false;    // a*b, b*a |-> a(x)b respects the tensor relations
  bool map_surjective = false;
  std::size_t tensor_dim = 0;
  std::size_t ideal_dim = 0;
  std::size_t kernel_dim = 0;
  bool kernel_is_ideal = false; // Ker = generated ideal
};
TensorQuotientComparison compare_with_tensor_square(const HomAssociativeAlgebra& A);

}  // namespace hlb
