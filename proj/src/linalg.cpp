#include "homleib/linalg.hpp"

#include <algorithm>
#include <optional>

#include "homleib/error.hpp"
#include "homleib/parallel.hpp"

namespace hlb {

Vector zero_vector(FieldSpec f, std::size_t n) { return Vector(n, Scalar(f)); }

Vector unit_vector(FieldSpec f, std::size_t n, std::size_t i) {
  Vector v = zero_vector(f, n);
  v.at(i) = Scalar(f, 1);
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

void axpy(Vector& y, const Scalar& a, const Vector& x) {
  if (y.size() != x.size()) throw Error(Errc::DimensionError, "axpy length mismatch");
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i].add_mul(a, x[i]);
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(Errc::DimensionError, "vector length mismatch");
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector sub(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(Errc::DimensionError, "vector length mismatch");
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector scale(const Scalar& a, const Vector& x) {
  Vector r = x;
  for (auto& s : r) s *= a;
  return r;
}

Vector concat(const Vector& a, const Vector& b) {
  Vector r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

std::string to_string(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(FieldSpec f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar(f)) {}

Matrix Matrix::identity(FieldSpec f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(f, 1);
  return m;
}

Matrix Matrix::from_rows(FieldSpec f, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(Errc::DimensionError, "row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(FieldSpec f, std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(f, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw Error(Errc::DimensionError, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(Errc::DimensionError, "matrix product shape mismatch");
  if (!(a.field_ == b.field_)) throw Error(Errc::FieldMismatch, "matrix product across fields");
  Matrix c(a.field_, a.rows_, b.cols_);
  par::for_each_index(a.rows_, [&](std::size_t i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) c(i, j).add_mul(aik, b(k, j));
    }
  });
  return c;
}

Vector operator*(const Matrix& a, const Vector& x) {
  if (a.cols_ != x.size()) throw Error(Errc::DimensionError, "matrix-vector shape mismatch");
  Vector y = zero_vector(a.field_, a.rows_);
  for (std::size_t k = 0; k < a.cols_; ++k) {
    if (x[k].is_zero()) continue;
    for (std::size_t i = 0; i < a.rows_; ++i)
      if (!a(i, k).is_zero()) y[i].add_mul(a(i, k), x[k]);
  }
  return y;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(Errc::DimensionError, "matrix sum shape mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(Errc::DimensionError, "matrix difference shape mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

// ---------------------------------------------------------------- rref

namespace {

void check_uniform_field(const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!(m(r, c).field() == m.field()))
        throw Error(Errc::FieldMismatch, "matrix entry (" + std::to_string(r) + "," +
                                             std::to_string(c) + ") is not in " + m.field().name());
}

std::vector<std::uint32_t> nonzeros(const Vector& v) {
  std::vector<std::uint32_t> nz;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) nz.push_back(static_cast<std::uint32_t>(i));
  return nz;
}

}  // namespace

RrefResult rref(const Matrix& m) {
  check_uniform_field(m);
  const FieldSpec f = m.field();
  std::vector<Vector> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));

  RrefResult out;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    Vector& piv = rows[rank];
    const Scalar inv = piv[c].inverse();
    for (std::size_t k = c; k < piv.size(); ++k)
      if (!piv[k].is_zero()) piv[k] *= inv;
    std::vector<std::uint32_t> nz;
    for (std::size_t k = c; k < piv.size(); ++k)
      if (!piv[k].is_zero()) nz.push_back(static_cast<std::uint32_t>(k));
    const std::size_t pr = rank;
    par::for_each_index(rows.size(), [&](std::size_t i) {
      if (i == pr || rows[i][c].is_zero()) return;
      const Scalar factor = rows[i][c];
      for (auto k : nz) rows[i][k].sub_mul(factor, rows[pr][k]);
    });
    out.pivots.push_back(c);
    ++rank;
  }
  out.rank = rank;
  out.reduced = Matrix::from_rows(f, m.cols(), rows);
  return out;
}

RrefResult rref_reference(const Matrix& m) {
  check_uniform_field(m);
  Matrix a = m;
  RrefResult out;
  std::size_t rank = 0;
  // forward elimination to row-echelon form
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    std::size_t p = rank;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(rank, k), a(p, k));
    Scalar inv = a(rank, c).inverse();
    for (std::size_t k = 0; k < a.cols(); ++k) a(rank, k) *= inv;
    for (std::size_t i = rank + 1; i < a.rows(); ++i) {
      Scalar factor = a(i, c);
      if (factor.is_zero()) continue;
      for (std::size_t k = 0; k < a.cols(); ++k) a(i, k) -= factor * a(rank, k);
    }
    out.pivots.push_back(c);
    ++rank;
  }
  // back substitution
  for (std::size_t r = rank; r-- > 0;) {
    std::size_t c = out.pivots[r];
    for (std::size_t i = 0; i < r; ++i) {
      Scalar factor = a(i, c);
      if (factor.is_zero()) continue;
      for (std::size_t k = 0; k < a.cols(); ++k) a(i, k) -= factor * a(r, k);
    }
  }
  out.rank = rank;
  out.reduced = a;
  return out;
}

// ---------------------------------------------------------------- EchelonBuilder

EchelonBuilder::EchelonBuilder(FieldSpec f, std::size_t ambient) : field_(f), ambient_(ambient) {}

EchelonBuilder::EchelonBuilder(const Subspace& s) : field_(s.field()), ambient_(s.ambient_dim()) {
  for (std::size_t i = 0; i < s.dim(); ++i) rows_.emplace(s.pivots_[i], Row{s.rows_[i], s.nz_[i]});
}

void EchelonBuilder::reduce(Vector& v) const {
  if (v.size() != ambient_) throw Error(Errc::DimensionError, "vector length does not match ambient dimension");
  for (const auto& [p, row] : rows_) {
    if (v[p].is_zero()) continue;
    const Scalar c = v[p];
    for (auto k : row.nz) v[k].sub_mul(c, row.v[k]);
  }
}

void EchelonBuilder::insert_reduced(Vector v) {
  std::size_t q = 0;
  while (v[q].is_zero()) ++q;
  const Scalar inv = v[q].inverse();
  for (std::size_t k = q; k < v.size(); ++k)
    if (!v[k].is_zero()) v[k] *= inv;
  Row nr{std::move(v), {}};
  nr.nz = nonzeros(nr.v);
  for (auto& [p, row] : rows_) {
    if (row.v[q].is_zero()) continue;
    const Scalar c = row.v[q];
    for (auto k : nr.nz) row.v[k].sub_mul(c, nr.v[k]);
    row.nz = nonzeros(row.v);
  }
  rows_.emplace(q, std::move(nr));
}

bool EchelonBuilder::add(Vector v) {
  reduce(v);
  if (is_zero(v)) return false;
  insert_reduced(std::move(v));
  return true;
}

std::size_t EchelonBuilder::add_all(std::vector<Vector> vs) {
  if (rows_.size() == ambient_) {
    for (const auto& v : vs)
      if (v.size() != ambient_) throw Error(Errc::DimensionError, "vector length does not match ambient dimension");
    return 0;
  }
  par::for_each_index(vs.size(), [&](std::size_t i) { reduce(vs[i]); });
  std::size_t added = 0;
  for (auto& v : vs) {
    if (is_zero(v)) continue;
    reduce(v);
    if (is_zero(v)) continue;
    insert_reduced(std::move(v));
    ++added;
    if (rows_.size() == ambient_) break;
  }
  return added;
}

std::size_t EchelonBuilder::add_all_serial(std::vector<Vector> vs) {
  std::size_t added = 0;
  for (auto& v : vs) added += add(std::move(v)) ? 1 : 0;
  return added;
}

bool EchelonBuilder::contains(Vector v) const {
  reduce(v);
  return is_zero(v);
}

Subspace EchelonBuilder::finish() const {
  Subspace s(field_, ambient_);
  for (const auto& [p, row] : rows_) {
    s.rows_.push_back(row.v);
    s.pivots_.push_back(p);
    s.nz_.push_back(row.nz);
  }
  return s;
}

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(FieldSpec f, std::size_t ambient) : field_(f), ambient_(ambient) {}

Subspace Subspace::span(FieldSpec f, std::size_t ambient, const std::vector<Vector>& gens) {
  EchelonBuilder b(f, ambient);
  b.add_all(gens);
  return b.finish();
}

Subspace Subspace::full(FieldSpec f, std::size_t ambient) {
  Subspace s(f, ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    s.rows_.push_back(unit_vector(f, ambient, i));
    s.pivots_.push_back(i);
    s.nz_.push_back({static_cast<std::uint32_t>(i)});
  }
  return s;
}

Matrix Subspace::basis() const { return Matrix::from_rows(field_, ambient_, rows_); }

Vector Subspace::residual(Vector v) const {
  if (v.size() != ambient_) throw Error(Errc::DimensionError, "vector length does not match ambient dimension");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (v[p].is_zero()) continue;
    const Scalar c = v[p];
    for (auto k : nz_[i]) v[k].sub_mul(c, rows_[i][k]);
  }
  return v;
}

bool Subspace::contains(const Vector& v) const { return is_zero(residual(v)); }

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw Error(Errc::NotWellDefined, "vector lies outside the subspace", to_string(v));
  Vector c;
  c.reserve(rows_.size());
  for (auto p : pivots_) c.push_back(v[p]);
  return c;
}

bool Subspace::is_subset_of(const Subspace& o) const {
  if (ambient_ != o.ambient_) throw Error(Errc::DimensionError, "subspaces of different ambient spaces");
  for (const auto& r : rows_)
    if (!o.contains(r)) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& o) const {
  if (ambient_ != o.ambient_) throw Error(Errc::DimensionError, "subspaces of different ambient spaces");
  EchelonBuilder b(*this);
  b.add_all(o.rows_);
  return b.finish();
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (ambient_ != o.ambient_) throw Error(Errc::DimensionError, "subspaces of different ambient spaces");
  // x in both iff sum a_i h_i - sum b_j k_j = 0
  std::vector<Vector> cols;
  for (const auto& r : rows_) cols.push_back(r);
  for (const auto& r : o.rows_) cols.push_back(scale(Scalar(field_, -1), r));
  if (cols.empty()) return Subspace(field_, ambient_);
  Subspace k = kernel(LinearMap(Matrix::from_columns(field_, ambient_, cols)));
  std::vector<Vector> gens;
  for (const auto& coeffs : k.basis_vectors()) {
    Vector x = zero_vector(field_, ambient_);
    for (std::size_t i = 0; i < rows_.size(); ++i) axpy(x, coeffs[i], rows_[i]);
    gens.push_back(std::move(x));
  }
  return span(field_, ambient_, gens);
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.field_ == b.field_ && a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
}

// ---------------------------------------------------------------- QuotientSpace

QuotientSpace::QuotientSpace(Subspace relations) : relations_(std::move(relations)) {
  std::size_t next = 0;
  for (std::size_t c = 0; c < relations_.ambient_dim(); ++c) {
    if (next < relations_.pivots().size() && relations_.pivots()[next] == c) {
      ++next;
      continue;
    }
    coset_basis_.push_back(c);
  }
}

QuotientSpace QuotientSpace::of(FieldSpec f, std::size_t ambient, const std::vector<Vector>& relations) {
  for (const auto& r : relations)
    if (r.size() != ambient)
      throw Error(Errc::DimensionError, "relation of length " + std::to_string(r.size()) +
                                            " in ambient dimension " + std::to_string(ambient));
  return QuotientSpace(Subspace::span(f, ambient, relations));
}

Vector QuotientSpace::project(const Vector& v) const {
  Vector r = relations_.residual(v);
  Vector q;
  q.reserve(coset_basis_.size());
  for (auto c : coset_basis_) q.push_back(r[c]);
  return q;
}

Vector QuotientSpace::lift(const Vector& q) const {
  if (q.size() != coset_basis_.size()) throw Error(Errc::DimensionError, "quotient coordinate length mismatch");
  Vector v = zero_vector(field(), ambient_dim());
  for (std::size_t i = 0; i < q.size(); ++i) v[coset_basis_[i]] = q[i];
  return v;
}

// ---------------------------------------------------------------- LinearMap

LinearMap LinearMap::identity(FieldSpec f, std::size_t n) { return LinearMap(Matrix::identity(f, n)); }

LinearMap LinearMap::zero(FieldSpec f, std::size_t codomain, std::size_t domain) {
  return LinearMap(Matrix(f, codomain, domain));
}

LinearMap LinearMap::from_images(FieldSpec f, std::size_t codomain, const std::vector<Vector>& images) {
  return LinearMap(Matrix::from_columns(f, codomain, images));
}

std::size_t LinearMap::rank() const {
  if (m_.rows() == 0 || m_.cols() == 0) return 0;
  return rref(m_).rank;
}

LinearMap compose(const LinearMap& g, const LinearMap& f) {
  if (g.domain_dim() != f.codomain_dim()) throw Error(Errc::DimensionError, "composition shape mismatch");
  return LinearMap(g.matrix() * f.matrix());
}

LinearMap operator+(const LinearMap& a, const LinearMap& b) { return LinearMap(a.matrix() + b.matrix()); }
LinearMap operator-(const LinearMap& a, const LinearMap& b) { return LinearMap(a.matrix() - b.matrix()); }

LinearMap hstack(const LinearMap& f, const LinearMap& g) {
  if (f.codomain_dim() != g.codomain_dim()) throw Error(Errc::DimensionError, "hstack codomain mismatch");
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < f.domain_dim(); ++j) cols.push_back(f.image_of_basis(j));
  for (std::size_t j = 0; j < g.domain_dim(); ++j) cols.push_back(g.image_of_basis(j));
  return LinearMap::from_images(f.field(), f.codomain_dim(), cols);
}

Subspace kernel(const LinearMap& f) {
  const FieldSpec fs = f.field();
  const std::size_t n = f.domain_dim();
  if (f.codomain_dim() == 0) return Subspace::full(fs, n);
  RrefResult r = rref(f.matrix());
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> gens;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    Vector x = unit_vector(fs, n, j);
    for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = -r.reduced(i, j);
    gens.push_back(std::move(x));
  }
  return Subspace::span(fs, n, gens);
}

Subspace image(const LinearMap& f) {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < f.domain_dim(); ++j) cols.push_back(f.image_of_basis(j));
  return Subspace::span(f.field(), f.codomain_dim(), cols);
}

LinearMap induced_map(const LinearMap& f, const QuotientSpace& src, const QuotientSpace& dst) {
  if (f.domain_dim() != src.ambient_dim() || f.codomain_dim() != dst.ambient_dim())
    throw Error(Errc::DimensionError, "map does not match quotient ambients");
  const auto& rel = src.relations();
  std::vector<char> bad(rel.dim(), 0);
  par::for_each_index(rel.dim(), [&](std::size_t i) {
    bad[i] = dst.relations().contains(f(rel.basis_vector(i))) ? 0 : 1;
  });
  for (std::size_t i = 0; i < rel.dim(); ++i)
    if (bad[i])
      throw Error(Errc::NotWellDefined, "relation is not carried into the target relations",
                  to_string(rel.basis_vector(i)));
  std::vector<Vector> cols(src.dim());
  par::for_each_index(src.dim(), [&](std::size_t j) {
    cols[j] = dst.project(f.image_of_basis(src.coset_basis()[j]));
  });
  return LinearMap::from_images(f.field(), dst.dim(), cols);
}

LinearMap restrict_map(const LinearMap& f, const Subspace& src, const Subspace& dst) {
  if (f.domain_dim() != src.ambient_dim() || f.codomain_dim() != dst.ambient_dim())
    throw Error(Errc::DimensionError, "map does not match subspace ambients");
  std::vector<Vector> cols;
  for (const auto& b : src.basis_vectors()) cols.push_back(dst.coordinates(f(b)));
  return LinearMap::from_images(f.field(), dst.dim(), cols);
}

std::optional<Vector> solve(const LinearMap& f, const Vector& v) {
  if (v.size() != f.codomain_dim()) throw Error(Errc::DimensionError, "right-hand side length mismatch");
  const std::size_t n = f.domain_dim(), m = f.codomain_dim();
  Matrix aug(f.field(), m, n + 1);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = f.matrix()(r, c);
    aug(r, n) = v[r];
  }
  RrefResult red = rref(aug);
  if (!red.pivots.empty() && red.pivots.back() == n) return std::nullopt;
  Vector x = zero_vector(f.field(), n);
  for (std::size_t i = 0; i < red.rank; ++i) x[red.pivots[i]] = red.reduced(i, n);
  return x;
}

LinearMap inclusion_map(const Subspace& s) {
  return LinearMap::from_images(s.field(), s.ambient_dim(), s.basis_vectors());
}

}  // namespace hlb
