#include "homleib/homassoc.hpp"

#include <set>

#include "homleib/error.hpp"
#include "homleib/parallel.hpp"

namespace hlb {

HomAssociativeAlgebra::HomAssociativeAlgebra(FieldSpec f, std::vector<std::string> labels, Tensor3 product,
                                             Matrix alpha)
    : labels_(std::move(labels)), product_(std::move(product)), alpha_(std::move(alpha)) {
  const std::size_t n = labels_.size();
  if (product_.extent(0) != n || product_.extent(1) != n || product_.extent(2) != n)
    throw Error(Errc::StructureError, "product tensor must be " + std::to_string(n) + "^3");
  if (alpha_.rows() != n || alpha_.cols() != n) throw Error(Errc::StructureError, "twist must be square of size dim");
  if (!(product_.field() == f) || !(alpha_.field() == f)) throw Error(Errc::FieldMismatch, "mixed fields");
  if (std::set<std::string>(labels_.begin(), labels_.end()).size() != n)
    throw Error(Errc::StructureError, "basis labels must be unique");
}

ValidationReport validate_homassoc(const HomAssociativeAlgebra& A) {
  const std::size_t n = A.dim();
  ValidationReport rep;
  rep.rules = {"hom_associativity", "multiplicativity"};
  std::vector<std::vector<Violation>> per(n);
  std::vector<std::size_t> c1(n), c2(n);
  par::for_each_index(n, [&](std::size_t i) {
    const Vector ai = A.twist(A.basis_vector(i));
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Vector lhs = A.mul(ai, A.mul_basis(j, k));
        Vector rhs = A.mul(A.mul_basis(i, j), A.twist(A.basis_vector(k)));
        if (lhs != rhs && c1[i]++ < 8)
          per[i].push_back({"hom_associativity", {i, j, k}, to_string(lhs) + " != " + to_string(rhs)});
      }
      Vector l = A.twist(A.mul_basis(i, j)), r = A.mul(ai, A.twist(A.basis_vector(j)));
      if (l != r && c2[i]++ < 8) per[i].push_back({"multiplicativity", {i, j}, to_string(l) + " != " + to_string(r)});
    }
  });
  for (const auto& rule : rep.rules)
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& v : per[i])
        if (v.rule == rule && rep.failures[rule]++ < 8) rep.violations.push_back(v);
  std::size_t tot1 = 0, tot2 = 0;
  for (std::size_t i = 0; i < n; ++i) tot1 += c1[i], tot2 += c2[i];
  if (tot1) rep.failures["hom_associativity"] = tot1;
  if (tot2) rep.failures["multiplicativity"] = tot2;
  bool comm = true;
  for (std::size_t i = 0; i < n && comm; ++i)
    for (std::size_t j = 0; j < n && comm; ++j) comm = A.mul_basis(i, j) == A.mul_basis(j, i);
  rep.flags["commutative"] = comm;
  return rep;
}

HomLeibnizAlgebra to_leibniz(const HomAssociativeAlgebra& A) {
  const std::size_t n = A.dim();
  Tensor3 c(A.field(), n, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c.set_slice(i, j, sub(A.mul_basis(i, j), A.mul_basis(j, i)));
  return HomLeibnizAlgebra(A.field(), A.labels(), std::move(c), A.alpha_matrix());
}

namespace {

void require_valid(const HomAssociativeAlgebra& A) {
  auto rep = validate_homassoc(A);
  if (!rep.ok()) {
    const auto& v = rep.violations.front();
    std::string w;
    for (auto i : v.witness) w += (w.empty() ? "" : ",") + A.labels()[i];
    throw Error(Errc::InvalidAlgebra, v.rule + " fails at (" + w + ")", v.detail);
  }
}

Vector kron(const Vector& a, const Vector& b) {
  const std::size_t n = a.size();
  Vector w = zero_vector(a.front().field(), n * n);
  for (std::size_t i = 0; i < n; ++i)
    if (!a[i].is_zero())
      for (std::size_t j = 0; j < n; ++j) w[i * n + j] = a[i] * b[j];
  return w;
}

// b3(a(x)b(x)c) = ab(x)alpha(c) - alpha(a)(x)bc + ca(x)alpha(b)
Vector b3_value(const HomAssociativeAlgebra& A, const Vector& a, const Vector& b, const Vector& c) {
  Vector v = kron(A.mul(a, b), A.twist(c));
  v = sub(v, kron(A.twist(a), A.mul(b, c)));
  return add(v, kron(A.mul(c, a), A.twist(b)));
}

}  // namespace

HochschildModule hochschild_module(const HomAssociativeAlgebra& A) {
  require_valid(A);
  const FieldSpec f = A.field();
  const std::size_t n = A.dim(), n2 = n * n;
  HochschildModule H;
  H.parent = A;
  H.lie = to_leibniz(A);
  std::vector<Vector> cols(n * n2);
  par::for_each_index(n, [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        cols[(i * n + j) * n + k] = b3_value(A, A.basis_vector(i), A.basis_vector(j), A.basis_vector(k));
  });
  H.b3 = LinearMap::from_images(f, n2, cols);
  H.presentation = QuotientSpace(image(H.b3));
  std::vector<Vector> ph(n2), tw(n2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ph[i * n + j] = H.lie.bracket_basis(i, j);
      tw[i * n + j] = kron(A.twist(A.basis_vector(i)), A.twist(A.basis_vector(j)));
    }
  H.phi_ambient = LinearMap::from_images(f, n, ph);
  if (!compose(H.phi_ambient, H.b3).matrix().is_zero())
    throw Error(Errc::InternalInconsistency, "commutator map does not vanish on Im(b3)");
  const QuotientSpace& P = H.presentation;
  LinearMap twb;
  try {
    twb = induced_map(LinearMap::from_images(f, n2, tw), P, P);
  } catch (const Error& e) {
    throw Error(Errc::InternalInconsistency, "twist does not preserve Im(b3)", e.witness());
  }
  // [a(x)b, a'(x)b'] = [a,b] (x) [a',b']; it vanishes on Im(b3) in either slot since phi does.
  auto br = [&](const Vector& x, const Vector& y) { return kron(H.phi_ambient(x), H.phi_ambient(y)); };
  const std::size_t q = P.dim();
  Tensor3 st(f, q, q, q);
  for (std::size_t x = 0; x < q; ++x)
    for (std::size_t y = 0; y < q; ++y)
      st.set_slice(x, y, P.project(br(unit_vector(f, n2, P.coset_basis()[x]), unit_vector(f, n2, P.coset_basis()[y]))));
  std::vector<std::string> labels;
  for (auto c : P.coset_basis()) labels.push_back(A.labels()[c / n] + "#" + A.labels()[c % n]);
  H.algebra = HomLeibnizAlgebra(f, std::move(labels), std::move(st), twb.matrix());
  auto rep = validate_algebra(H.algebra);
  if (!rep.ok())
    throw Error(Errc::InternalInconsistency, "L^alpha(A) fails " + rep.violations.front().rule,
                rep.violations.front().detail);
  H.commutators = H.lie.derived();
  LinearMap phib = induced_map(H.phi_ambient, P, QuotientSpace(Subspace(f, n)));
  H.phi = restrict_map(phib, Subspace::full(f, q), H.commutators);
  if (!H.phi.is_surjective()) throw Error(Errc::InternalInconsistency, "phi misses part of [A,A]");
  return H;
}

Subspace milnor_relations(const HomAssociativeAlgebra& A) {
  const std::size_t n = A.dim();
  EchelonBuilder eb(A.field(), n * n);
  std::vector<Vector> rels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector a = A.basis_vector(i), b = A.basis_vector(j), c = A.basis_vector(k);
        rels.push_back(b3_value(A, a, b, c));
        rels.push_back(kron(A.twist(a), sub(A.mul(b, c), A.mul(c, b))));
        rels.push_back(kron(sub(A.mul(a, b), A.mul(b, a)), A.twist(c)));
      }
  eb.add_all(std::move(rels));
  return eb.finish();
}

std::optional<std::string> alpha_identity_witness(const HomAssociativeAlgebra& A) {
  const std::size_t n = A.dim();
  LinearMap am = LinearMap(A.alpha_matrix()) - LinearMap::identity(A.field(), n);
  Subspace im = image(am);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& v : im.basis_vectors()) {
      Vector c = sub(A.mul(A.basis_vector(i), v), A.mul(v, A.basis_vector(i)));
      if (!is_zero(c)) return "[" + A.labels()[i] + ", " + to_string(v) + "] = " + to_string(c);
    }
  return std::nullopt;
}

FirstHomologies first_homologies(const HomAssociativeAlgebra& A) {
  HochschildModule H = hochschild_module(A);
  FirstHomologies r;
  r.dim_L = H.algebra.dim();
  r.dim_commutators = H.commutators.dim();
  r.hh1_alpha_dim = kernel(H.phi).dim();
  r.hh1_milnor_dim = A.dim() * A.dim() - milnor_relations(A).dim();
  r.alpha_identity_holds = !alpha_identity_witness(A).has_value();
  return r;
}

namespace {

// Actions of A on L^alpha(A) and of L^alpha(A) on A.
MutualActions hochschild_actions(const HochschildModule& H) {
  const HomAssociativeAlgebra& A = H.parent;
  const HomLeibnizAlgebra& AL = H.lie;
  const HomLeibnizAlgebra& LL = H.algebra;
  const FieldSpec f = A.field();
  const std::size_t n = A.dim(), n2 = n * n, q = LL.dim();
  const QuotientSpace& P = H.presentation;
  Tensor3 l1(f, n, q, q), r1(f, q, n, q);
  for (std::size_t k = 0; k < n; ++k) {
    const Vector ap = A.basis_vector(k);
    std::vector<Vector> lc(n2), rc(n2);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Vector a = A.basis_vector(i), b = A.basis_vector(j);
        lc[i * n + j] = sub(kron(AL.bracket(ap, a), A.twist(b)), kron(AL.bracket(ap, b), A.twist(a)));
        rc[i * n + j] = add(kron(AL.bracket(a, ap), A.twist(b)), kron(A.twist(a), AL.bracket(b, ap)));
      }
    LinearMap lk, rk;
    try {
      lk = induced_map(LinearMap::from_images(f, n2, lc), P, P);
      rk = induced_map(LinearMap::from_images(f, n2, rc), P, P);
    } catch (const Error& e) {
      throw Error(Errc::InternalInconsistency, "action of A does not preserve Im(b3)", e.witness());
    }
    for (std::size_t x = 0; x < q; ++x) {
      l1.set_slice(k, x, lk.image_of_basis(x));
      r1.set_slice(x, k, rk.image_of_basis(x));
    }
  }
  Tensor3 l2(f, q, n, n), r2(f, n, q, n);
  for (std::size_t x = 0; x < q; ++x) {
    const Vector px = H.phi_ambient(unit_vector(f, n2, P.coset_basis()[x]));
    for (std::size_t k = 0; k < n; ++k) {
      l2.set_slice(x, k, AL.bracket(px, A.basis_vector(k)));
      r2.set_slice(k, x, AL.bracket(A.basis_vector(k), px));
    }
  }
  return make_mutual(HomAction(AL, LL, std::move(l1), std::move(r1)), HomAction(LL, AL, std::move(l2), std::move(r2)));
}

}  // namespace

ExactnessReport sequence_check(const HomAssociativeAlgebra& A) {
  require_valid(A);
  if (auto w = alpha_identity_witness(A)) throw Error(Errc::AlphaIdentityFails, "[A, Im(alpha - id)] != 0", *w);
  const FieldSpec f = A.field();
  HochschildModule H = hochschild_module(A);
  const HomLeibnizAlgebra& AL = H.lie;
  const HomLeibnizAlgebra& LL = H.algebra;
  const std::size_t n = A.dim();

  // the three columns
  MutualActions ma2 = hochschild_actions(H);
  TensorProduct t2 = build_tensor(ma2);

  Subspace K = kernel(H.phi);
  HomLeibnizAlgebra HH = HomLeibnizAlgebra::abelian(f, HomLeibnizAlgebra::default_labels(K.dim(), "h"),
                                                    restrict_map(LL.alpha(), K, K).matrix());
  TensorProduct t1 = build_tensor(trivial_mutual(AL, HH));

  Subalgebra Afull = materialize(AL, Subspace::full(f, n));
  Subalgebra D = materialize(AL, H.commutators, "d");
  TensorProduct t3 = build_tensor(bracket_mutual(Afull, D));

  AlgebraHom idA = identity_hom(AL);
  AlgebraHom inc(HH, LL, inclusion_map(K));
  AlgebraHom phi(LL, D.algebra, H.phi);
  AlgebraHom F = induced_tensor_map(idA, inc, t1, t2);
  AlgebraHom G = induced_tensor_map(identity_hom(Afull.algebra), phi, t2, t3);
  LinearMap a = psi_maps(t1).psi2.map();
  LinearMap b = psi_maps(t2).psi2.map();
  LinearMap c = psi_maps(t3).psi2.map();

  SnakeResult sn = snake(SnakeInput{F.map(), G.map(), inc.map(), H.phi, a, b, c});
  ExactnessReport rep;
  rep.joints = sn.report.joints;
  const char* names[] = {"Ker(A*L->L)", "Ker(A*[A,A]->[A,A])", "HH1", "HH1M", "[A,A]/[A,[A,A]]"};
  for (std::size_t i = 0; i < rep.joints.size() && i < 5; ++i) rep.joints[i].name = names[i];
  rep.dims["A*HH1"] = t1.algebra().dim();
  rep.dims["A*L"] = t2.algebra().dim();
  rep.dims["A*[A,A]"] = t3.algebra().dim();
  rep.dims["Ker(A*L->L)"] = sn.ker_b.dim();
  rep.dims["Ker(A*[A,A]->[A,A])"] = sn.ker_c.dim();
  rep.dims["HH1"] = sn.coker_a.dim();
  rep.dims["HH1M"] = sn.coker_b.dim();
  rep.dims["[A,A]/[A,[A,A]]"] = sn.coker_c.dim();

  rep.check("A acts trivially through HH1", a.matrix().is_zero());
  // Coker(psi_2) is the Milnor quotient: lifted image plus Im(b3) equals the Milnor relations
  std::vector<Vector> gens = H.presentation.relations().basis_vectors();
  Subspace imb = image(b);
  for (const auto& v : imb.basis_vectors()) gens.push_back(H.presentation.lift(v));
  rep.check("Coker(psi_2) = HH1M", Subspace::span(f, n * n, gens) == milnor_relations(A));
  Subspace AAA = bracket_span(AL, Subspace::full(f, n), H.commutators);
  rep.check("Im(psi_3) = [A,[A,A]]", image(compose(D.inclusion.map(), c)) == AAA);
  return rep;
}

TensorQuotientComparison compare_with_tensor_square(const HomAssociativeAlgebra& A) {
  HochschildModule H = hochschild_module(A);
  const FieldSpec f = A.field();
  const std::size_t n = A.dim(), n2 = n * n;
  TensorProduct t = tensor_square(H.lie);
  TensorQuotientComparison r;
  r.tensor_dim = t.algebra().dim();
  std::vector<Vector> cols(t.ambient_dim());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cols[t.mn_index(i, j)] = unit_vector(f, n2, i * n + j);
      cols[t.nm_index(i, j)] = unit_vector(f, n2, i * n + j);
    }
  LinearMap kappa;
  try {
    kappa = induced_map(LinearMap::from_images(f, n2, cols), t.presentation(), H.presentation);
    r.map_descends = true;
  } catch (const Error&) {
    return r;
  }
  r.map_surjective = kappa.is_surjective();
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector a = A.basis_vector(i), b = A.basis_vector(j), c = A.basis_vector(k);
        gens.push_back(t.project(add(sub(t.star_mn(A.mul(a, b), A.twist(c)), t.star_mn(A.twist(a), A.mul(b, c))),
                                     t.star_mn(A.mul(c, a), A.twist(b)))));
        gens.push_back(t.project(add(sub(t.star_nm(A.mul(a, b), A.twist(c)), t.star_nm(A.twist(a), A.mul(b, c))),
                                     t.star_nm(A.mul(c, a), A.twist(b)))));
      }
  Subspace J = generated_ideal(t.algebra(), gens);
  Subspace ker = kernel(kappa);
  r.ideal_dim = J.dim();
  r.kernel_dim = ker.dim();
  r.kernel_is_ideal = J == ker;
  return r;
}

}  // namespace hlb
