#pragma once

#include <vector>

#include "homleib/algebra.hpp"

namespace hlb {

// Coefficient module: left (x,m) -> ^x m with shape (dim L, dim M, dim M),
// right (m,x) -> m^x with shape (dim M, dim L, dim M).
class CoRepresentation {
 public:
  CoRepresentation() = default;
  // Shapes checked (StructureError); identities are not, see validate_corep.
  CoRepresentation(HomLeibnizAlgebra algebra, Matrix alpha_M, Tensor3 left, Tensor3 right);

  const HomLeibnizAlgebra& algebra() const { return L_; }
  std::size_t dim() const { return alpha_.rows(); }
  const Matrix& alpha_matrix() const { return alpha_; }
  const Tensor3& left() const { return left_; }
  const Tensor3& right() const { return right_; }

  Vector act_left(const Vector& x, const Vector& m) const { return left_.apply(x, m); }
  Vector act_right(const Vector& m, const Vector& x) const { return right_.apply(m, x); }
  Vector twist(const Vector& m) const { return alpha_ * m; }
  bool is_trivial() const { return left_.is_zero() && right_.is_zero(); }

 private:
  HomLeibnizAlgebra L_;
  Matrix alpha_;
  Tensor3 left_, right_;
};

// Identities a)-e) over basis triples.
ValidationReport validate_corep(const CoRepresentation& c);

// Ground field K with alpha = id and zero operations.
CoRepresentation trivial_corep(const HomLeibnizAlgebra& L);
// Zero operations on a space with twist alpha_M.
CoRepresentation trivial_corep(const HomLeibnizAlgebra& L, const Matrix& alpha_M);
// L on itself: ^x y = -[y,x], y^x = [y,x].
CoRepresentation adjoint_corep(const HomLeibnizAlgebra& L);

// Matrix of d_n : M (x) L^{(x)n} -> M (x) L^{(x)(n-1)}, bases mixed-radix row-major
// over (m, x_1, ..., x_n). Columns are assembled in parallel.
LinearMap boundary_matrix(const CoRepresentation& M, std::size_t n);
// Direct serial transcription of the boundary formula, kept for testing.
LinearMap boundary_matrix_reference(const CoRepresentation& M, std::size_t n);

struct ChainComplex {
  std::vector<std::size_t> dims;        // dims[n] = dim M * (dim L)^n, n = 0..top
  std::vector<LinearMap> boundaries;    // boundaries[n-1] = d_n, n = 1..top
};

ChainComplex build_complex(const CoRepresentation& M, std::size_t top);
// Index n with d_{n-1} d_n != 0, if any (checked for 2 <= n <= top).
std::optional<std::size_t> first_nonzero_square(const ChainComplex& c);

struct HomologyGroup {
  std::size_t degree = 0;
  std::size_t dim = 0;
  std::vector<Vector> representatives;  // cycles whose classes form a basis
};

// HL_n: Ker d_n / Im d_{n+1}, with Ker d_0 = CL_0.
HomologyGroup homology(const CoRepresentation& M, std::size_t n);
std::vector<std::size_t> homology_dims(const CoRepresentation& M, std::size_t max_n);

// dim M / M^L with M^L the span of all m^x.
std::size_t hl0_closed_form(const CoRepresentation& M);
// Trivial coefficients: dim (M (x) L) / (alpha_M(M) (x) [L,L]).
std::size_t hl1_trivial_closed_form(const CoRepresentation& M);

}  // namespace hlb
