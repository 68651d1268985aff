#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "homleib/error.hpp"
#include "homleib/linalg.hpp"

namespace hlb {

// Dense 3-index array t(i,j,k) with the last index contiguous.
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(FieldSpec f, std::size_t a, std::size_t b, std::size_t c);

  FieldSpec field() const { return field_; }
  std::size_t extent(int axis) const { return axis == 0 ? a_ : axis == 1 ? b_ : c_; }
  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * b_ + j) * c_ + k]; }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * b_ + j) * c_ + k];
  }
  Vector slice(std::size_t i, std::size_t j) const;
  void set_slice(std::size_t i, std::size_t j, const Vector& v);
  // sum_{i,j} x_i y_j t(i,j,:)
  Vector apply(const Vector& x, const Vector& y) const;
  bool is_zero() const;

  friend bool operator==(const Tensor3& a, const Tensor3& b);

 private:
  FieldSpec field_;
  std::size_t a_ = 0, b_ = 0, c_ = 0;
  std::vector<Scalar> data_;
};

// One failed instance of a named identity, with the basis indices plugged in.
struct Violation {
  std::string rule;
  std::vector<std::size_t> witness;
  std::string detail;
};

struct ValidationReport {
  std::vector<std::string> rules;           // every rule checked, in order
  std::map<std::string, std::size_t> failures;  // rule -> number of failing tuples
  std::vector<Violation> violations;        // first few witnesses per rule
  std::map<std::string, bool> flags;        // e.g. "hom_lie", "trivial"

  bool ok() const { return violations.empty(); }
  bool holds(const std::string& rule) const { return failures.count(rule) == 0; }
};

class HomLeibnizAlgebra {
 public:
  HomLeibnizAlgebra();
  // Shapes are checked (StructureError); the identities are not, see validate_algebra.
  HomLeibnizAlgebra(FieldSpec f, std::vector<std::string> labels, Tensor3 bracket, Matrix alpha);
  static HomLeibnizAlgebra abelian(FieldSpec f, std::vector<std::string> labels, Matrix alpha);
  // Default labels e1..en.
  static std::vector<std::string> default_labels(std::size_t n, const std::string& stem = "e");

  FieldSpec field() const;
  std::size_t dim() const;
  const std::vector<std::string>& labels() const;
  const Tensor3& structure() const;
  const Matrix& alpha_matrix() const;
  LinearMap alpha() const { return LinearMap(alpha_matrix()); }

  Vector bracket(const Vector& x, const Vector& y) const;
  Vector bracket_basis(std::size_t i, std::size_t j) const;
  Vector twist(const Vector& x) const;
  Vector basis_vector(std::size_t i) const { return unit_vector(field(), dim(), i); }
  Vector zero() const { return zero_vector(field(), dim()); }

  // Cached; computed once per underlying algebra value, thread-safe.
  const Subspace& derived() const;  // [L,L]
  const Subspace& center() const;   // Z(L)

  // Same value: identical shared state or equal field, labels, tensors.
  bool same_as(const HomLeibnizAlgebra& o) const;
  friend bool operator==(const HomLeibnizAlgebra& a, const HomLeibnizAlgebra& b) { return a.same_as(b); }

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

ValidationReport validate_algebra(const HomLeibnizAlgebra& L);
// The validated form: throws InvalidAlgebra with the first witness.
void require_valid(const HomLeibnizAlgebra& L);
// Skew-symmetry c[i][i] = 0 and c[i][j] = -c[j][i].
bool is_hom_lie(const HomLeibnizAlgebra& L);
bool is_abelian(const HomLeibnizAlgebra& L);

class AlgebraHom {
 public:
  AlgebraHom() = default;
  // Throws NotHomomorphism with a witness if the map fails either condition.
  AlgebraHom(HomLeibnizAlgebra source, HomLeibnizAlgebra target, LinearMap map);
  static std::optional<std::string> check(const HomLeibnizAlgebra& source, const HomLeibnizAlgebra& target,
                                          const LinearMap& map);

  const HomLeibnizAlgebra& source() const { return source_; }
  const HomLeibnizAlgebra& target() const { return target_; }
  const LinearMap& map() const { return map_; }
  Vector operator()(const Vector& v) const { return map_(v); }

 private:
  HomLeibnizAlgebra source_, target_;
  LinearMap map_;
};

AlgebraHom identity_hom(const HomLeibnizAlgebra& L);

// Span of [h,k] and [k,h] over basis vectors of H and K.
Subspace bracket_span(const HomLeibnizAlgebra& L, const Subspace& H, const Subspace& K);
// Returns a description of the first escaping bracket or twist, if any.
std::optional<std::pair<Errc, std::string>> ideal_defect(const HomLeibnizAlgebra& L, const Subspace& S);

class IdealHandle {
 public:
  // Throws NotAnIdeal or NotAlphaStable with a witness.
  IdealHandle(HomLeibnizAlgebra parent, Subspace space);
  static IdealHandle zero(const HomLeibnizAlgebra& L);
  static IdealHandle whole(const HomLeibnizAlgebra& L);

  const HomLeibnizAlgebra& parent() const { return parent_; }
  const Subspace& space() const { return space_; }

 private:
  HomLeibnizAlgebra parent_;
  Subspace space_;
};

// [H,K]; ParentMismatch when the handles belong to different algebras.
Subspace commutator(const IdealHandle& h, const IdealHandle& k);
Subspace center(const HomLeibnizAlgebra& L);

struct QuotientAlgebra {
  HomLeibnizAlgebra algebra;
  AlgebraHom projection;
  QuotientSpace presentation;
};

QuotientAlgebra quotient_algebra(const IdealHandle& I);

struct Predicates {
  bool perfect = false;
  bool alpha_perfect = false;
  bool alpha_surjective = false;
  bool abelian = false;
};

Predicates predicates(const HomLeibnizAlgebra& L);

// Quotient by the smallest alpha-stable two-sided ideal containing all squares.
QuotientAlgebra lieization(const HomLeibnizAlgebra& L);

// Leibniz algebra with alpha = id twisted by a bracket-preserving endomorphism.
HomLeibnizAlgebra yau_twist(const HomLeibnizAlgebra& L, const LinearMap& endo);

struct Subalgebra {
  HomLeibnizAlgebra algebra;
  AlgebraHom inclusion;
  Subspace space;
};

// Restriction of bracket and twist to S (closed under both; NotSubalgebra otherwise).
// The basis of the result is the canonical basis of S.
Subalgebra materialize(const HomLeibnizAlgebra& L, const Subspace& S, const std::string& stem = "");

// Labels of A followed by labels of B, suffixed _1/_2 when the sets overlap.
std::vector<std::string> disjoint_labels(const std::vector<std::string>& a, const std::vector<std::string>& b);

HomLeibnizAlgebra direct_sum(const HomLeibnizAlgebra& A, const HomLeibnizAlgebra& B);

// Smallest alpha-stable two-sided ideal containing the given vectors.
Subspace generated_ideal(const HomLeibnizAlgebra& L, const std::vector<Vector>& gens);

}  // namespace hlb
