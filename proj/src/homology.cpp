#include "homleib/homology.hpp"

#include "homleib/error.hpp"
#include "homleib/parallel.hpp"

namespace hlb {

CoRepresentation::CoRepresentation(HomLeibnizAlgebra algebra, Matrix alpha_M, Tensor3 left, Tensor3 right)
    : L_(std::move(algebra)), alpha_(std::move(alpha_M)), left_(std::move(left)), right_(std::move(right)) {
  const std::size_t l = L_.dim(), m = alpha_.rows();
  if (alpha_.cols() != m) throw Error(Errc::StructureError, "coefficient twist must be square");
  if (left_.extent(0) != l || left_.extent(1) != m || left_.extent(2) != m)
    throw Error(Errc::StructureError, "left operation tensor has the wrong shape");
  if (right_.extent(0) != m || right_.extent(1) != l || right_.extent(2) != m)
    throw Error(Errc::StructureError, "right operation tensor has the wrong shape");
  if (!(alpha_.field() == L_.field()) || !(left_.field() == L_.field()) || !(right_.field() == L_.field()))
    throw Error(Errc::FieldMismatch, "co-representation data over different fields");
}

ValidationReport validate_corep(const CoRepresentation& c) {
  const auto& L = c.algebra();
  const std::size_t nl = L.dim(), nm = c.dim();
  const FieldSpec f = L.field();
  ValidationReport rep;
  rep.rules = {"a", "b", "c", "d", "e"};
  auto l = [&](const Vector& x, const Vector& m) { return c.act_left(x, m); };
  auto r = [&](const Vector& m, const Vector& x) { return c.act_right(m, x); };
  auto neg = [](Vector v) {
    for (auto& s : v) s = -s;
    return v;
  };
  std::vector<std::vector<Violation>> found(nl);
  par::for_each_index(nl, [&](std::size_t i) {
    auto& out = found[i];
    auto report = [&](const char* rule, std::vector<std::size_t> w, const Vector& lhs, const Vector& rhs) {
      if (lhs != rhs) out.push_back({rule, std::move(w), "lhs=" + to_string(lhs) + " rhs=" + to_string(rhs)});
    };
    const Vector x = L.basis_vector(i), ax = L.twist(x);
    for (std::size_t j = 0; j < nl; ++j) {
      const Vector y = L.basis_vector(j), ay = L.twist(y), xy = L.bracket_basis(i, j);
      for (std::size_t k = 0; k < nm; ++k) {
        const Vector m = unit_vector(f, nm, k), am = c.twist(m);
        report("a", {i, j, k}, l(xy, am), sub(l(ax, l(y, m)), l(ay, l(x, m))));
        report("b", {i, j, k}, r(am, xy), sub(r(l(y, m), ax), l(ay, r(m, x))));
        report("c", {i, j, k}, r(r(m, x), ay), neg(l(ay, r(m, x))));
      }
    }
    for (std::size_t k = 0; k < nm; ++k) {
      const Vector m = unit_vector(f, nm, k), am = c.twist(m);
      report("d", {i, k}, c.twist(l(x, m)), l(ax, am));
      report("e", {i, k}, c.twist(r(m, x)), r(am, ax));
    }
  });
  for (const auto& rule : rep.rules)
    for (const auto& vs : found)
      for (const auto& v : vs)
        if (v.rule == rule && rep.failures[v.rule]++ < 8) rep.violations.push_back(v);
  rep.flags["trivial"] = c.is_trivial();
  return rep;
}

CoRepresentation trivial_corep(const HomLeibnizAlgebra& L) {
  return trivial_corep(L, Matrix::identity(L.field(), 1));
}

CoRepresentation trivial_corep(const HomLeibnizAlgebra& L, const Matrix& alpha_M) {
  const std::size_t m = alpha_M.rows();
  return CoRepresentation(L, alpha_M, Tensor3(L.field(), L.dim(), m, m), Tensor3(L.field(), m, L.dim(), m));
}

CoRepresentation adjoint_corep(const HomLeibnizAlgebra& L) {
  const std::size_t n = L.dim();
  Tensor3 left(L.field(), n, n, n), right(L.field(), n, n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Vector yx = L.bracket_basis(y, x);
      right.set_slice(y, x, yx);
      for (auto& s : yx) s = -s;
      left.set_slice(x, y, yx);
    }
  return CoRepresentation(L, L.alpha_matrix(), std::move(left), std::move(right));
}

namespace {

using Sparse = std::vector<std::pair<std::size_t, Scalar>>;

Sparse sparse(const Vector& v) {
  Sparse s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.emplace_back(i, v[i]);
  return s;
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

// col += coeff * (f_0 (x) f_1 (x) ... ) with mixed radix (dm, d, d, ...).
void accumulate(Vector& col, const Scalar& coeff, const std::vector<const Sparse*>& factors, std::size_t d) {
  struct Frame {
    std::size_t level, index;
    Scalar w;
  };
  std::vector<Frame> stack{{0, 0, coeff}};
  while (!stack.empty()) {
    Frame fr = std::move(stack.back());
    stack.pop_back();
    if (fr.level == factors.size()) {
      col[fr.index] += fr.w;
      continue;
    }
    for (const auto& [i, s] : *factors[fr.level])
      stack.push_back({fr.level + 1, fr.index * (fr.level == 0 ? 1 : d) + i, fr.w * s});
  }
}

}  // namespace

LinearMap boundary_matrix(const CoRepresentation& M, std::size_t n) {
  if (n == 0) throw Error(Errc::DimensionError, "boundary degree must be at least 1");
  const auto& L = M.algebra();
  const FieldSpec f = L.field();
  const std::size_t d = L.dim(), dm = M.dim();
  const std::size_t src = dm * ipow(d, n), dst = dm * ipow(d, n - 1);

  std::vector<Sparse> ax(d), am(dm), br(d * d), lact(d * dm), ract(dm * d), unit_l(d);
  for (std::size_t x = 0; x < d; ++x) {
    ax[x] = sparse(L.twist(L.basis_vector(x)));
    unit_l[x] = {{x, Scalar(f, 1)}};
    for (std::size_t y = 0; y < d; ++y) br[x * d + y] = sparse(L.bracket_basis(x, y));
  }
  for (std::size_t m = 0; m < dm; ++m) {
    am[m] = sparse(M.alpha_matrix().column(m));
    for (std::size_t x = 0; x < d; ++x) {
      lact[x * dm + m] = sparse(M.left().slice(x, m));
      ract[m * d + x] = sparse(M.right().slice(m, x));
    }
  }
  const Scalar one(f, 1), minus_one(f, -1);

  std::vector<Vector> cols(src);
  par::for_each_index(src, [&](std::size_t c) {
    std::vector<std::size_t> x(n);
    std::size_t rest = c;
    for (std::size_t k = n; k-- > 0;) x[k] = rest % d, rest /= d;
    const std::size_t m = rest;
    Vector col = zero_vector(f, dst);
    std::vector<const Sparse*> fac;
    // m^{x1} (x) a(x2) ... a(xn)
    fac.push_back(&ract[m * d + x[0]]);
    for (std::size_t k = 1; k < n; ++k) fac.push_back(&ax[x[k]]);
    accumulate(col, one, fac, d);
    // (-1)^i ^{x_i} m (x) a(x1) .. omit i .. a(xn), i = 2..n
    for (std::size_t i = 2; i <= n; ++i) {
      fac.clear();
      fac.push_back(&lact[x[i - 1] * dm + m]);
      for (std::size_t k = 1; k <= n; ++k)
        if (k != i) fac.push_back(&ax[x[k - 1]]);
      accumulate(col, i % 2 == 0 ? one : minus_one, fac, d);
    }
    // (-1)^{j+1} a(m) (x) a(x1) .. [x_i,x_j] .. omit j .. a(xn)
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j) {
        fac.clear();
        fac.push_back(&am[m]);
        for (std::size_t k = 1; k <= n; ++k) {
          if (k == j) continue;
          fac.push_back(k == i ? &br[x[i - 1] * d + x[j - 1]] : &ax[x[k - 1]]);
        }
        accumulate(col, (j + 1) % 2 == 0 ? one : minus_one, fac, d);
      }
    cols[c] = std::move(col);
  });
  return LinearMap::from_images(f, dst, cols);
}

namespace {

Vector kron(const Vector& a, const Vector& b) {
  Vector out;
  out.reserve(a.size() * b.size());
  for (const auto& s : a)
    for (const auto& t : b) out.push_back(s * t);
  return out;
}

}  // namespace

LinearMap boundary_matrix_reference(const CoRepresentation& M, std::size_t n) {
  if (n == 0) throw Error(Errc::DimensionError, "boundary degree must be at least 1");
  const auto& L = M.algebra();
  const FieldSpec f = L.field();
  const std::size_t d = L.dim(), dm = M.dim();
  const std::size_t src = dm * ipow(d, n), dst = dm * ipow(d, n - 1);
  Matrix D(f, dst, src);
  for (std::size_t c = 0; c < src; ++c) {
    std::vector<std::size_t> x(n);
    std::size_t rest = c;
    for (std::size_t k = n; k-- > 0;) x[k] = rest % d, rest /= d;
    const Vector m = unit_vector(f, dm, rest);
    std::vector<Vector> xs(n), axs(n);
    for (std::size_t k = 0; k < n; ++k) xs[k] = L.basis_vector(x[k]), axs[k] = L.twist(xs[k]);

    Vector total = zero_vector(f, dst);
    Vector t = M.act_right(m, xs[0]);
    for (std::size_t k = 1; k < n; ++k) t = kron(t, axs[k]);
    total = add(total, t);
    for (std::size_t i = 2; i <= n; ++i) {
      Vector u = M.act_left(xs[i - 1], m);
      for (std::size_t k = 1; k <= n; ++k)
        if (k != i) u = kron(u, axs[k - 1]);
      total = i % 2 == 0 ? add(total, u) : sub(total, u);
    }
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j) {
        Vector u = M.twist(m);
        for (std::size_t k = 1; k <= n; ++k) {
          if (k == j) continue;
          u = kron(u, k == i ? L.bracket(xs[i - 1], xs[j - 1]) : axs[k - 1]);
        }
        total = (j + 1) % 2 == 0 ? add(total, u) : sub(total, u);
      }
    for (std::size_t r = 0; r < dst; ++r) D(r, c) = total[r];
  }
  return LinearMap(D);
}

ChainComplex build_complex(const CoRepresentation& M, std::size_t top) {
  ChainComplex cx;
  for (std::size_t n = 0; n <= top; ++n) cx.dims.push_back(M.dim() * ipow(M.algebra().dim(), n));
  for (std::size_t n = 1; n <= top; ++n) cx.boundaries.push_back(boundary_matrix(M, n));
  return cx;
}

std::optional<std::size_t> first_nonzero_square(const ChainComplex& c) {
  for (std::size_t n = 2; n <= c.boundaries.size(); ++n)
    if (!compose(c.boundaries[n - 2], c.boundaries[n - 1]).matrix().is_zero()) return n;
  return std::nullopt;
}

HomologyGroup homology(const CoRepresentation& M, std::size_t n) {
  const FieldSpec f = M.algebra().field();
  const std::size_t dn = M.dim() * ipow(M.algebra().dim(), n);
  Subspace cycles = n == 0 ? Subspace::full(f, dn) : kernel(boundary_matrix(M, n));
  Subspace boundaries = image(boundary_matrix(M, n + 1));
  EchelonBuilder b(boundaries);
  HomologyGroup h;
  h.degree = n;
  for (const auto& z : cycles.basis_vectors())
    if (b.add(z)) h.representatives.push_back(z);
  h.dim = h.representatives.size();
  return h;
}

std::vector<std::size_t> homology_dims(const CoRepresentation& M, std::size_t max_n) {
  ChainComplex cx = build_complex(M, max_n + 1);
  std::vector<std::size_t> ranks(max_n + 2, 0);  // ranks[n] = rank d_n
  par::for_each_index(max_n + 1, [&](std::size_t k) { ranks[k + 1] = cx.boundaries[k].rank(); });
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n <= max_n; ++n) out.push_back(cx.dims[n] - ranks[n] - ranks[n + 1]);
  return out;
}

std::size_t hl0_closed_form(const CoRepresentation& M) {
  const auto& L = M.algebra();
  std::vector<Vector> gens;
  for (std::size_t m = 0; m < M.dim(); ++m)
    for (std::size_t x = 0; x < L.dim(); ++x) gens.push_back(M.right().slice(m, x));
  return M.dim() - Subspace::span(L.field(), M.dim(), gens).dim();
}

std::size_t hl1_trivial_closed_form(const CoRepresentation& M) {
  const auto& L = M.algebra();
  if (!M.is_trivial()) throw Error(Errc::HypothesisNotMet, "closed form requires trivial coefficients");
  return M.dim() * L.dim() - LinearMap(M.alpha_matrix()).rank() * L.derived().dim();
}

}  // namespace hlb
