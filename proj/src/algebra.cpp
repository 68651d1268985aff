#include "homleib/algebra.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "homleib/error.hpp"
#include "homleib/parallel.hpp"

namespace hlb {

// ---------------------------------------------------------------- Tensor3

Tensor3::Tensor3(FieldSpec f, std::size_t a, std::size_t b, std::size_t c)
    : field_(f), a_(a), b_(b), c_(c), data_(a * b * c, Scalar(f)) {}

Vector Tensor3::slice(std::size_t i, std::size_t j) const {
  auto first = data_.begin() + static_cast<std::ptrdiff_t>((i * b_ + j) * c_);
  return Vector(first, first + static_cast<std::ptrdiff_t>(c_));
}

void Tensor3::set_slice(std::size_t i, std::size_t j, const Vector& v) {
  if (v.size() != c_) throw Error(Errc::DimensionError, "tensor slice length mismatch");
  std::copy(v.begin(), v.end(), data_.begin() + static_cast<std::ptrdiff_t>((i * b_ + j) * c_));
}

Vector Tensor3::apply(const Vector& x, const Vector& y) const {
  if (x.size() != a_ || y.size() != b_) throw Error(Errc::DimensionError, "tensor argument length mismatch");
  Vector out = zero_vector(field_, c_);
  for (std::size_t i = 0; i < a_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < b_; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar w = x[i] * y[j];
      const Scalar* t = &data_[(i * b_ + j) * c_];
      for (std::size_t k = 0; k < c_; ++k)
        if (!t[k].is_zero()) out[k].add_mul(w, t[k]);
    }
  }
  return out;
}

bool Tensor3::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool operator==(const Tensor3& a, const Tensor3& b) {
  return a.field_ == b.field_ && a.a_ == b.a_ && a.b_ == b.b_ && a.c_ == b.c_ && a.data_ == b.data_;
}

// ---------------------------------------------------------------- HomLeibnizAlgebra

struct HomLeibnizAlgebra::Data {
  FieldSpec field;
  std::vector<std::string> labels;
  Tensor3 bracket;
  Matrix alpha;

  mutable std::once_flag derived_once, center_once;
  mutable Subspace derived, center;
};

HomLeibnizAlgebra::HomLeibnizAlgebra()
    : HomLeibnizAlgebra(FieldSpec::rationals(), {}, Tensor3(FieldSpec::rationals(), 0, 0, 0),
                        Matrix(FieldSpec::rationals(), 0, 0)) {}

HomLeibnizAlgebra::HomLeibnizAlgebra(FieldSpec f, std::vector<std::string> labels, Tensor3 bracket,
                                     Matrix alpha) {
  const std::size_t n = labels.size();
  if (bracket.extent(0) != n || bracket.extent(1) != n || bracket.extent(2) != n)
    throw Error(Errc::StructureError, "structure tensor shape does not match dimension " + std::to_string(n));
  if (alpha.rows() != n || alpha.cols() != n)
    throw Error(Errc::StructureError, "twist matrix shape does not match dimension " + std::to_string(n));
  if (!(bracket.field() == f) || !(alpha.field() == f))
    throw Error(Errc::FieldMismatch, "structure data not over " + f.name());
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != n) throw Error(Errc::StructureError, "basis labels are not unique");
  auto d = std::make_shared<Data>();
  d->field = f;
  d->labels = std::move(labels);
  d->bracket = std::move(bracket);
  d->alpha = std::move(alpha);
  d_ = std::move(d);
}

HomLeibnizAlgebra HomLeibnizAlgebra::abelian(FieldSpec f, std::vector<std::string> labels, Matrix alpha) {
  const std::size_t n = labels.size();
  return HomLeibnizAlgebra(f, std::move(labels), Tensor3(f, n, n, n), std::move(alpha));
}

std::vector<std::string> HomLeibnizAlgebra::default_labels(std::size_t n, const std::string& stem) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(stem + std::to_string(i + 1));
  return out;
}

FieldSpec HomLeibnizAlgebra::field() const { return d_->field; }
std::size_t HomLeibnizAlgebra::dim() const { return d_->labels.size(); }
const std::vector<std::string>& HomLeibnizAlgebra::labels() const { return d_->labels; }
const Tensor3& HomLeibnizAlgebra::structure() const { return d_->bracket; }
const Matrix& HomLeibnizAlgebra::alpha_matrix() const { return d_->alpha; }

Vector HomLeibnizAlgebra::bracket(const Vector& x, const Vector& y) const { return d_->bracket.apply(x, y); }
Vector HomLeibnizAlgebra::bracket_basis(std::size_t i, std::size_t j) const { return d_->bracket.slice(i, j); }
Vector HomLeibnizAlgebra::twist(const Vector& x) const { return d_->alpha * x; }

const Subspace& HomLeibnizAlgebra::derived() const {
  std::call_once(d_->derived_once, [this] {
    Subspace all = Subspace::full(field(), dim());
    d_->derived = bracket_span(*this, all, all);
  });
  return d_->derived;
}

const Subspace& HomLeibnizAlgebra::center() const {
  std::call_once(d_->center_once, [this] {
    // x in Z(L) iff sum_i x_i c[i][j][k] = 0 and sum_i x_i c[j][i][k] = 0 for all j,k
    const std::size_t n = dim();
    Matrix sys(field(), 2 * n * n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
          sys(j * n + k, i) = structure()(i, j, k);
          sys(n * n + j * n + k, i) = structure()(j, i, k);
        }
    d_->center = kernel(LinearMap(sys));
  });
  return d_->center;
}

bool HomLeibnizAlgebra::same_as(const HomLeibnizAlgebra& o) const {
  if (d_ == o.d_) return true;
  return d_->field == o.d_->field && d_->labels == o.d_->labels && d_->bracket == o.d_->bracket &&
         d_->alpha == o.d_->alpha;
}

// ---------------------------------------------------------------- validation

namespace {

constexpr std::size_t kWitnessCap = 8;

void merge(ValidationReport& rep, const std::vector<std::vector<Violation>>& per_item) {
  for (const auto& vs : per_item)
    for (const auto& v : vs) {
      if (rep.failures[v.rule]++ < kWitnessCap) rep.violations.push_back(v);
    }
  // keep the report grouped by rule in check order
  std::stable_sort(rep.violations.begin(), rep.violations.end(), [&](const Violation& a, const Violation& b) {
    auto ia = std::find(rep.rules.begin(), rep.rules.end(), a.rule) - rep.rules.begin();
    auto ib = std::find(rep.rules.begin(), rep.rules.end(), b.rule) - rep.rules.begin();
    return ia < ib;
  });
}

std::string mismatch(const Vector& lhs, const Vector& rhs) {
  return "lhs=" + to_string(lhs) + " rhs=" + to_string(rhs);
}

}  // namespace

ValidationReport validate_algebra(const HomLeibnizAlgebra& L) {
  const std::size_t n = L.dim();
  ValidationReport rep;
  rep.rules = {"hom_leibniz", "multiplicativity"};
  std::vector<Vector> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = L.alpha_matrix().column(i);

  std::vector<std::vector<Violation>> found(n);
  par::for_each_index(n, [&](std::size_t i) {
    auto& out = found[i];
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Vector lhs = L.bracket(a[i], L.bracket_basis(j, k));
        Vector rhs = sub(L.bracket(L.bracket_basis(i, j), a[k]), L.bracket(L.bracket_basis(i, k), a[j]));
        if (lhs != rhs) out.push_back({"hom_leibniz", {i, j, k}, mismatch(lhs, rhs)});
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      Vector lhs = L.twist(L.bracket_basis(i, j));
      Vector rhs = L.bracket(a[i], a[j]);
      if (lhs != rhs) out.push_back({"multiplicativity", {i, j}, mismatch(lhs, rhs)});
    }
  });
  merge(rep, found);
  rep.flags["hom_lie"] = is_hom_lie(L);
  return rep;
}

void require_valid(const HomLeibnizAlgebra& L) {
  auto rep = validate_algebra(L);
  if (!rep.ok()) {
    const auto& v = rep.violations.front();
    std::string w;
    for (auto i : v.witness) w += (w.empty() ? "" : ",") + L.labels()[i];
    throw Error(Errc::InvalidAlgebra, v.rule + " fails at (" + w + ")", v.detail);
  }
}

bool is_hom_lie(const HomLeibnizAlgebra& L) {
  const auto& c = L.structure();
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = 0; j < L.dim(); ++j)
      for (std::size_t k = 0; k < L.dim(); ++k)
        if (!(c(i, j, k) + c(j, i, k)).is_zero()) return false;
  return true;
}

bool is_abelian(const HomLeibnizAlgebra& L) { return L.structure().is_zero(); }

// ---------------------------------------------------------------- AlgebraHom

std::optional<std::string> AlgebraHom::check(const HomLeibnizAlgebra& s, const HomLeibnizAlgebra& t,
                                             const LinearMap& f) {
  if (f.domain_dim() != s.dim() || f.codomain_dim() != t.dim())
    return "map shape " + std::to_string(f.codomain_dim()) + "x" + std::to_string(f.domain_dim()) +
           " does not match dimensions";
  for (std::size_t j = 0; j < s.dim(); ++j) {
    if (f(s.twist(s.basis_vector(j))) != t.twist(f.image_of_basis(j)))
      return "twist not preserved at " + s.labels()[j];
  }
  std::vector<Vector> img(s.dim());
  for (std::size_t j = 0; j < s.dim(); ++j) img[j] = f.image_of_basis(j);
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j)
      if (f(s.bracket_basis(i, j)) != t.bracket(img[i], img[j]))
        return "bracket not preserved at (" + s.labels()[i] + "," + s.labels()[j] + ")";
  return std::nullopt;
}

AlgebraHom::AlgebraHom(HomLeibnizAlgebra source, HomLeibnizAlgebra target, LinearMap map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (auto w = check(source_, target_, map_)) throw Error(Errc::NotHomomorphism, *w, *w);
}

AlgebraHom identity_hom(const HomLeibnizAlgebra& L) {
  return AlgebraHom(L, L, LinearMap::identity(L.field(), L.dim()));
}

// ---------------------------------------------------------------- ideals

Subspace bracket_span(const HomLeibnizAlgebra& L, const Subspace& H, const Subspace& K) {
  const std::size_t nh = H.dim(), nk = K.dim();
  std::vector<Vector> gens(2 * nh * nk);
  par::for_each_index(nh, [&](std::size_t a) {
    for (std::size_t b = 0; b < nk; ++b) {
      gens[2 * (a * nk + b)] = L.bracket(H.basis_vector(a), K.basis_vector(b));
      gens[2 * (a * nk + b) + 1] = L.bracket(K.basis_vector(b), H.basis_vector(a));
    }
  });
  return Subspace::span(L.field(), L.dim(), gens);
}

std::optional<std::pair<Errc, std::string>> ideal_defect(const HomLeibnizAlgebra& L, const Subspace& S) {
  if (S.ambient_dim() != L.dim()) throw Error(Errc::DimensionError, "subspace ambient does not match algebra");
  for (const auto& s : S.basis_vectors()) {
    for (std::size_t j = 0; j < L.dim(); ++j) {
      if (!S.contains(L.bracket(s, L.basis_vector(j))))
        return std::make_pair(Errc::NotAnIdeal, "[" + to_string(s) + "," + L.labels()[j] + "]");
      if (!S.contains(L.bracket(L.basis_vector(j), s)))
        return std::make_pair(Errc::NotAnIdeal, "[" + L.labels()[j] + "," + to_string(s) + "]");
    }
  }
  for (const auto& s : S.basis_vectors())
    if (!S.contains(L.twist(s))) return std::make_pair(Errc::NotAlphaStable, "alpha" + to_string(s));
  return std::nullopt;
}

IdealHandle::IdealHandle(HomLeibnizAlgebra parent, Subspace space)
    : parent_(std::move(parent)), space_(std::move(space)) {
  if (auto d = ideal_defect(parent_, space_))
    throw Error(d->first, d->first == Errc::NotAnIdeal ? "bracket " + d->second + " escapes the subspace"
                                                       : "twist " + d->second + " escapes the subspace",
                d->second);
}

IdealHandle IdealHandle::zero(const HomLeibnizAlgebra& L) { return IdealHandle(L, Subspace(L.field(), L.dim())); }
IdealHandle IdealHandle::whole(const HomLeibnizAlgebra& L) { return IdealHandle(L, Subspace::full(L.field(), L.dim())); }

Subspace commutator(const IdealHandle& h, const IdealHandle& k) {
  if (!h.parent().same_as(k.parent())) throw Error(Errc::ParentMismatch, "ideals of different algebras");
  return bracket_span(h.parent(), h.space(), k.space());
}

Subspace center(const HomLeibnizAlgebra& L) { return L.center(); }

QuotientAlgebra quotient_algebra(const IdealHandle& I) {
  const HomLeibnizAlgebra& L = I.parent();
  QuotientSpace Q(I.space());
  const std::size_t q = Q.dim();
  std::vector<std::string> labels;
  for (auto c : Q.coset_basis()) labels.push_back(L.labels()[c]);
  Tensor3 t(L.field(), q, q, q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b)
      t.set_slice(a, b, Q.project(L.bracket_basis(Q.coset_basis()[a], Q.coset_basis()[b])));
  LinearMap abar = induced_map(L.alpha(), Q, Q);
  HomLeibnizAlgebra quotient(L.field(), std::move(labels), std::move(t), abar.matrix());
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < L.dim(); ++i) cols.push_back(Q.project(L.basis_vector(i)));
  AlgebraHom proj(L, quotient, LinearMap::from_images(L.field(), q, cols));
  return {quotient, proj, Q};
}

Predicates predicates(const HomLeibnizAlgebra& L) {
  Predicates p;
  p.abelian = is_abelian(L);
  p.perfect = L.derived().dim() == L.dim();
  Subspace aL = image(L.alpha());
  p.alpha_surjective = aL.dim() == L.dim();
  p.alpha_perfect = bracket_span(L, aL, aL).dim() == L.dim();
  return p;
}

Subspace generated_ideal(const HomLeibnizAlgebra& L, const std::vector<Vector>& gens) {
  EchelonBuilder b(L.field(), L.dim());
  std::vector<Vector> queue;
  for (const auto& g : gens)
    if (b.add(g)) queue.push_back(g);
  while (!queue.empty()) {
    Vector v = std::move(queue.back());
    queue.pop_back();
    std::vector<Vector> cand;
    for (std::size_t j = 0; j < L.dim(); ++j) {
      cand.push_back(L.bracket(v, L.basis_vector(j)));
      cand.push_back(L.bracket(L.basis_vector(j), v));
    }
    cand.push_back(L.twist(v));
    for (auto& c : cand)
      if (b.add(c)) queue.push_back(std::move(c));
  }
  return b.finish();
}

QuotientAlgebra lieization(const HomLeibnizAlgebra& L) {
  std::vector<Vector> squares;
  for (std::size_t i = 0; i < L.dim(); ++i) {
    squares.push_back(L.bracket_basis(i, i));
    for (std::size_t j = i + 1; j < L.dim(); ++j) squares.push_back(add(L.bracket_basis(i, j), L.bracket_basis(j, i)));
  }
  return quotient_algebra(IdealHandle(L, generated_ideal(L, squares)));
}

HomLeibnizAlgebra yau_twist(const HomLeibnizAlgebra& L, const LinearMap& endo) {
  const std::size_t n = L.dim();
  if (!(L.alpha_matrix() == Matrix::identity(L.field(), n)))
    throw Error(Errc::HypothesisNotMet, "Yau twist expects a Leibniz algebra (twist = identity)");
  if (endo.domain_dim() != n || endo.codomain_dim() != n)
    throw Error(Errc::DimensionError, "endomorphism shape does not match dimension");
  std::vector<Vector> img(n);
  for (std::size_t j = 0; j < n; ++j) img[j] = endo.image_of_basis(j);
  Tensor3 t(L.field(), n, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector br = L.bracket(img[i], img[j]);
      if (endo(L.bracket_basis(i, j)) != br)
        throw Error(Errc::NotEndomorphism, "bracket not preserved", "(" + L.labels()[i] + "," + L.labels()[j] + ")");
      t.set_slice(i, j, br);
    }
  return HomLeibnizAlgebra(L.field(), L.labels(), std::move(t), endo.matrix());
}

Subalgebra materialize(const HomLeibnizAlgebra& L, const Subspace& S, const std::string& stem) {
  const std::size_t k = S.dim();
  std::vector<std::string> labels;
  bool units = stem.empty();
  if (units) {
    for (const auto& b : S.basis_vectors()) {
      std::size_t nz = 0, at = 0;
      for (std::size_t i = 0; i < b.size(); ++i)
        if (!b[i].is_zero()) ++nz, at = i;
      if (nz != 1 || !b[at].is_one()) {
        units = false;
        break;
      }
      labels.push_back(L.labels()[at]);
    }
  }
  if (!units) labels = HomLeibnizAlgebra::default_labels(k, stem.empty() ? "v" : stem);
  Tensor3 t(L.field(), k, k, k);
  Matrix a(L.field(), k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      Vector br = L.bracket(S.basis_vector(i), S.basis_vector(j));
      if (!S.contains(br))
        throw Error(Errc::NotSubalgebra, "bracket leaves the subspace", "(" + labels[i] + "," + labels[j] + ")");
      t.set_slice(i, j, S.coordinates(br));
    }
    Vector tw = L.twist(S.basis_vector(i));
    if (!S.contains(tw)) throw Error(Errc::NotSubalgebra, "twist leaves the subspace", labels[i]);
    Vector c = S.coordinates(tw);
    for (std::size_t r = 0; r < k; ++r) a(r, i) = c[r];
  }
  HomLeibnizAlgebra sub(L.field(), std::move(labels), std::move(t), std::move(a));
  AlgebraHom inc(sub, L, inclusion_map(S));
  return {sub, inc, S};
}

std::vector<std::string> disjoint_labels(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::set<std::string> seen(a.begin(), a.end());
  bool clash = false;
  for (const auto& l : b) clash |= seen.count(l) > 0;
  std::vector<std::string> out;
  for (const auto& l : a) out.push_back(clash ? l + "_1" : l);
  for (const auto& l : b) out.push_back(clash ? l + "_2" : l);
  return out;
}

HomLeibnizAlgebra direct_sum(const HomLeibnizAlgebra& A, const HomLeibnizAlgebra& B) {
  if (!(A.field() == B.field())) throw Error(Errc::FieldMismatch, "direct sum across fields");
  const std::size_t a = A.dim(), b = B.dim(), n = a + b;
  std::vector<std::string> labels = disjoint_labels(A.labels(), B.labels());
  Tensor3 t(A.field(), n, n, n);
  Matrix al(A.field(), n, n);
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < a; ++j)
      for (std::size_t k = 0; k < a; ++k) t(i, j, k) = A.structure()(i, j, k);
    for (std::size_t r = 0; r < a; ++r) al(r, i) = A.alpha_matrix()(r, i);
  }
  for (std::size_t i = 0; i < b; ++i) {
    for (std::size_t j = 0; j < b; ++j)
      for (std::size_t k = 0; k < b; ++k) t(a + i, a + j, a + k) = B.structure()(i, j, k);
    for (std::size_t r = 0; r < b; ++r) al(a + r, a + i) = B.alpha_matrix()(r, i);
  }
  return HomLeibnizAlgebra(A.field(), std::move(labels), std::move(t), std::move(al));
}

}  // namespace hlb
