#include "homleib/instances.hpp"

namespace hlb::instances {

namespace {

Tensor3 zeros(FieldSpec f, std::size_t n) { return Tensor3(f, n, n, n); }

void put(Tensor3& t, std::size_t i, std::size_t j, std::size_t k, long v) { t(i, j, k) = Scalar(t.field(), v); }

Matrix diag(FieldSpec f, const std::vector<Scalar>& d) {
  Matrix m(f, d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

HomAssociativeAlgebra assoc(FieldSpec f, std::vector<std::string> labels, Tensor3 p) {
  const std::size_t n = labels.size();
  return HomAssociativeAlgebra(f, std::move(labels), std::move(p), Matrix::identity(f, n));
}

}  // namespace

HomLeibnizAlgebra e1(FieldSpec f) {
  Tensor3 c = zeros(f, 2);
  put(c, 1, 1, 0, 1);
  Matrix a = Matrix::identity(f, 2);
  a(0, 1) = Scalar(f, 1);
  return HomLeibnizAlgebra(f, {"e1", "e2"}, std::move(c), std::move(a));
}

HomLeibnizAlgebra sl2(FieldSpec f) {
  Tensor3 c = zeros(f, 3);
  put(c, 0, 2, 1, 1);
  put(c, 2, 0, 1, -1);
  put(c, 1, 0, 0, 2);
  put(c, 0, 1, 0, -2);
  put(c, 1, 2, 2, -2);
  put(c, 2, 1, 2, 2);
  return HomLeibnizAlgebra(f, {"e", "h", "f"}, std::move(c), Matrix::identity(f, 3));
}

HomLeibnizAlgebra twisted_sl2(FieldSpec f, long t) {
  Matrix d = diag(f, {Scalar(f, t), Scalar(f, 1), Scalar(f, 1, t)});
  return yau_twist(sl2(f), LinearMap(d));
}

HomLeibnizAlgebra sl2_sum(FieldSpec f) { return direct_sum(sl2(f), sl2(f)); }

HomLeibnizAlgebra heisenberg(FieldSpec f) {
  Tensor3 c = zeros(f, 3);
  put(c, 0, 1, 2, 1);
  put(c, 1, 0, 2, -1);
  return HomLeibnizAlgebra(f, {"x", "y", "z"}, std::move(c), Matrix::identity(f, 3));
}

HomLeibnizAlgebra abelian(FieldSpec f, const Matrix& alpha) {
  return HomLeibnizAlgebra::abelian(f, HomLeibnizAlgebra::default_labels(alpha.rows()), alpha);
}

AlgebraHom alpha_central_projection(FieldSpec f) {
  Tensor3 c = zeros(f, 2);
  put(c, 1, 0, 0, 1);
  put(c, 0, 1, 0, -1);
  HomLeibnizAlgebra K(f, {"k1", "k2"}, std::move(c), diag(f, {Scalar(f, 0), Scalar(f, 1)}));
  IdealHandle I(K, Subspace::span(f, 2, {unit_vector(f, 2, 0)}));
  return quotient_algebra(I).projection;
}

HomAssociativeAlgebra dual_numbers(FieldSpec f) {
  Tensor3 p = zeros(f, 2);
  put(p, 0, 0, 0, 1);
  put(p, 0, 1, 1, 1);
  put(p, 1, 0, 1, 1);
  return assoc(f, {"1", "x"}, std::move(p));
}

HomAssociativeAlgebra upper_triangular(FieldSpec f) {
  Tensor3 p = zeros(f, 3);
  put(p, 0, 0, 0, 1);  // e11 e11 = e11
  put(p, 0, 1, 1, 1);  // e11 e12 = e12
  put(p, 1, 2, 1, 1);  // e12 e22 = e12
  put(p, 2, 2, 2, 1);  // e22 e22 = e22
  return assoc(f, {"e11", "e12", "e22"}, std::move(p));
}

HomAssociativeAlgebra matrices2(FieldSpec f) {
  Tensor3 p = zeros(f, 4);
  // e_ij e_kl = [j == k] e_il, basis e11, e12, e21, e22
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      const std::size_t i = a / 2, j = a % 2, k = b / 2, l = b % 2;
      if (j == k) put(p, a, b, i * 2 + l, 1);
    }
  return assoc(f, {"e11", "e12", "e21", "e22"}, std::move(p));
}

HomAssociativeAlgebra zero_product(FieldSpec f) { return assoc(f, {"z"}, zeros(f, 1)); }

HomAssociativeAlgebra with_twist(const HomAssociativeAlgebra& A, const Matrix& alpha) {
  return HomAssociativeAlgebra(A.field(), A.labels(), A.product(), alpha);
}

Scalar Generator::scalar() { return Scalar(f_, integer(-3, 3), integer(1, 2)); }

Scalar Generator::nonzero_scalar() {
  for (;;) {
    Scalar s = scalar();
    if (!s.is_zero()) return s;
  }
}

Matrix Generator::matrix(std::size_t n) {
  Matrix m(f_, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = scalar();
  return m;
}

Matrix Generator::invertible_matrix(std::size_t n) {
  for (;;) {
    Matrix m = matrix(n);
    if (LinearMap(m).rank() == n) return m;
  }
}

HomLeibnizAlgebra Generator::algebra(bool surjective) {
  const FieldSpec f = f_;
  auto coef = [&] { return surjective ? nonzero_scalar() : scalar(); };
  switch (integer(0, 4)) {
    case 0: {
      const std::size_t n = static_cast<std::size_t>(integer(1, 3));
      return abelian(f, surjective ? invertible_matrix(n) : matrix(n));
    }
    case 1: {
      // x -> a1 x + a2 y + a3 z, y -> b1 x + b2 y + b3 z, z -> (a1 b2 - a2 b1) z
      for (;;) {
        Scalar a1 = scalar(), a2 = scalar(), a3 = scalar(), b1 = scalar(), b2 = scalar(), b3 = scalar();
        Scalar det = a1 * b2 - a2 * b1;
        if (surjective && det.is_zero()) continue;
        Matrix m = Matrix::from_columns(f, 3, {{a1, a2, a3}, {b1, b2, b3}, {Scalar(f), Scalar(f), det}});
        return yau_twist(heisenberg(f), LinearMap(m));
      }
    }
    case 2: {
      // [e2,e2] = e1 with e1 -> c^2 e1, e2 -> b e1 + c e2
      Tensor3 t = zeros(f, 2);
      put(t, 1, 1, 0, 1);
      HomLeibnizAlgebra base(f, {"e1", "e2"}, std::move(t), Matrix::identity(f, 2));
      Scalar b = scalar(), c = coef();
      Matrix m = Matrix::from_columns(f, 2, {{c * c, Scalar(f)}, {b, c}});
      return yau_twist(base, LinearMap(m));
    }
    case 3: {
      // [x,y] = y = -[y,x] with x -> x + t y, y -> s y
      Tensor3 t = zeros(f, 2);
      put(t, 0, 1, 1, 1);
      put(t, 1, 0, 1, -1);
      HomLeibnizAlgebra base(f, {"x", "y"}, std::move(t), Matrix::identity(f, 2));
      Scalar tt = scalar(), s = coef();
      Matrix m = Matrix::from_columns(f, 2, {{Scalar(f, 1), tt}, {Scalar(f), s}});
      return yau_twist(base, LinearMap(m));
    }
    default: {
      Scalar t = nonzero_scalar();
      return yau_twist(sl2(f), LinearMap(diag(f, {t, Scalar(f, 1), t.inverse()})));
    }
  }
}

CoRepresentation Generator::corep() {
  HomLeibnizAlgebra L = algebra();
  if (integer(0, 1) == 0) return adjoint_corep(L);
  return trivial_corep(L, matrix(static_cast<std::size_t>(integer(1, 4))));
}

MutualActions Generator::ideal_pair() {
  HomLeibnizAlgebra L = integer(0, 1) == 0 ? algebra() : direct_sum(algebra(), algebra());
  const FieldSpec f = f_;
  std::vector<Subspace> cands{Subspace::full(f, L.dim())};
  if (L.derived().dim() > 0) cands.push_back(L.derived());
  // the summands, when L came from direct_sum
  for (std::size_t split = 1; split < L.dim(); ++split) {
    std::vector<Vector> lo, hi;
    for (std::size_t i = 0; i < L.dim(); ++i) (i < split ? lo : hi).push_back(L.basis_vector(i));
    for (auto* part : {&lo, &hi}) {
      Subspace s = Subspace::span(f, L.dim(), *part);
      if (!ideal_defect(L, s)) cands.push_back(s);
    }
  }
  const Subspace& m = cands[static_cast<std::size_t>(integer(0, static_cast<long>(cands.size()) - 1))];
  const Subspace& n = cands[static_cast<std::size_t>(integer(0, static_cast<long>(cands.size()) - 1))];
  return bracket_mutual(materialize(L, m, "m"), materialize(L, n, "n"));
}

}  // namespace hlb::instances
