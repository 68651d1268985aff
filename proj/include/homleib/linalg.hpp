#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "homleib/scalar.hpp"

namespace hlb {

using Vector = std::vector<Scalar>;

Vector zero_vector(FieldSpec f, std::size_t n);
Vector unit_vector(FieldSpec f, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
// y += a * x
void axpy(Vector& y, const Scalar& a, const Vector& x);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Scalar& a, const Vector& x);
Vector concat(const Vector& a, const Vector& b);
std::string to_string(const Vector& v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldSpec f, std::size_t rows, std::size_t cols);
  static Matrix identity(FieldSpec f, std::size_t n);
  static Matrix from_rows(FieldSpec f, std::size_t cols, const std::vector<Vector>& rows);
  static Matrix from_columns(FieldSpec f, std::size_t rows, const std::vector<Vector>& cols);

  FieldSpec field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transpose() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& x);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  FieldSpec field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

// Gauss-Jordan elimination; row updates for each pivot run in parallel.
RrefResult rref(const Matrix& m);
// Textbook serial elimination kept as the reference for rref().
RrefResult rref_reference(const Matrix& m);

class Subspace;

// Incrementally maintained fully reduced echelon basis. Every stored row has
// a leading 1 at its pivot and zeros at all other pivots, so reduction of a
// vector is independent of the order rows were inserted.
class EchelonBuilder {
 public:
  EchelonBuilder(FieldSpec f, std::size_t ambient);
  explicit EchelonBuilder(const Subspace& s);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  FieldSpec field() const { return field_; }

  // Returns true if v was independent of the current span.
  bool add(Vector v);
  // Reduces the batch against the current basis in parallel, then inserts
  // the survivors in input order. Returns the number of new basis vectors.
  std::size_t add_all(std::vector<Vector> vs);
  std::size_t add_all_serial(std::vector<Vector> vs);
  void reduce(Vector& v) const;
  bool contains(Vector v) const;
  Subspace finish() const;

 private:
  struct Row {
    Vector v;
    std::vector<std::uint32_t> nz;
  };
  void insert_reduced(Vector v);

  FieldSpec field_;
  std::size_t ambient_;
  std::map<std::size_t, Row> rows_;  // pivot -> row
};

class Subspace {
 public:
  Subspace() = default;
  Subspace(FieldSpec f, std::size_t ambient);  // zero subspace
  static Subspace span(FieldSpec f, std::size_t ambient, const std::vector<Vector>& gens);
  static Subspace full(FieldSpec f, std::size_t ambient);

  FieldSpec field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const Vector& basis_vector(std::size_t i) const { return rows_[i]; }
  const std::vector<Vector>& basis_vectors() const { return rows_; }
  Matrix basis() const;

  // v minus its canonical component in the subspace (zero iff v is inside).
  Vector residual(Vector v) const;
  bool contains(const Vector& v) const;
  // Coefficients of v in basis_vector order; throws NotWellDefined if v is outside.
  Vector coordinates(const Vector& v) const;
  bool is_subset_of(const Subspace& o) const;
  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  friend class EchelonBuilder;
  FieldSpec field_;
  std::size_t ambient_ = 0;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<std::uint32_t>> nz_;
};

class QuotientSpace {
 public:
  QuotientSpace() = default;
  explicit QuotientSpace(Subspace relations);
  static QuotientSpace of(FieldSpec f, std::size_t ambient, const std::vector<Vector>& relations);

  FieldSpec field() const { return relations_.field(); }
  std::size_t ambient_dim() const { return relations_.ambient_dim(); }
  std::size_t dim() const { return coset_basis_.size(); }
  const Subspace& relations() const { return relations_; }
  // Non-pivot columns of the relation basis, increasing.
  const std::vector<std::size_t>& coset_basis() const { return coset_basis_; }

  Vector project(const Vector& v) const;
  Vector lift(const Vector& q) const;

 private:
  Subspace relations_;
  std::vector<std::size_t> coset_basis_;
};

class LinearMap {
 public:
  LinearMap() = default;
  explicit LinearMap(Matrix m) : m_(std::move(m)) {}
  static LinearMap identity(FieldSpec f, std::size_t n);
  static LinearMap zero(FieldSpec f, std::size_t codomain, std::size_t domain);
  // Column j is images[j].
  static LinearMap from_images(FieldSpec f, std::size_t codomain, const std::vector<Vector>& images);

  FieldSpec field() const { return m_.field(); }
  std::size_t domain_dim() const { return m_.cols(); }
  std::size_t codomain_dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }

  Vector operator()(const Vector& v) const { return m_ * v; }
  Vector image_of_basis(std::size_t j) const { return m_.column(j); }
  std::size_t rank() const;
  bool is_injective() const { return rank() == domain_dim(); }
  bool is_surjective() const { return rank() == codomain_dim(); }

  friend bool operator==(const LinearMap& a, const LinearMap& b) { return a.m_ == b.m_; }

 private:
  Matrix m_;
};

// g after f
LinearMap compose(const LinearMap& g, const LinearMap& f);
LinearMap operator+(const LinearMap& a, const LinearMap& b);
LinearMap operator-(const LinearMap& a, const LinearMap& b);
// Block map (x, y) -> f(x) + g(y) on the direct sum of domains.
LinearMap hstack(const LinearMap& f, const LinearMap& g);

Subspace kernel(const LinearMap& f);
Subspace image(const LinearMap& f);

// Map on canonical quotient coordinates; throws NotWellDefined with the first
// relation basis vector whose image leaves dst.relations.
LinearMap induced_map(const LinearMap& f, const QuotientSpace& src, const QuotientSpace& dst);
// f restricted to src and corestricted to dst, in basis coordinates of both.
LinearMap restrict_map(const LinearMap& f, const Subspace& src, const Subspace& dst);
// Some x with f(x) = v, or nothing if v is outside the image.
std::optional<Vector> solve(const LinearMap& f, const Vector& v);
// Inclusion of a subspace in its ambient space, in basis coordinates.
LinearMap inclusion_map(const Subspace& s);

}  // namespace hlb
