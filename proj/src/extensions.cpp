#include "homleib/extensions.hpp"

#include <random>

#include "homleib/error.hpp"

namespace hlb {

Extension make_extension(const AlgebraHom& proj, const std::optional<Subspace>& kernel_given) {
  if (!proj.map().is_surjective())
    throw Error(Errc::NotSurjective, "projection has rank " + std::to_string(proj.map().rank()) + " onto a " +
                                         std::to_string(proj.target().dim()) + "-dimensional base");
  Subspace k = kernel(proj.map());
  if (kernel_given && !(*kernel_given == k))
    throw Error(Errc::KernelMismatch, "given kernel has dimension " + std::to_string(kernel_given->dim()) +
                                          ", Ker(proj) has dimension " + std::to_string(k.dim()));
  return Extension{proj.source(), proj.target(), proj, std::move(k)};
}

const char* to_string(ExtensionClass c) {
  switch (c) {
    case ExtensionClass::Central: return "Central";
    case ExtensionClass::AlphaCentralOnly: return "AlphaCentralOnly";
    case ExtensionClass::Neither: return "Neither";
  }
  return "?";
}

ExtensionClass classify_extension(const Extension& e) {
  make_extension(e.proj, e.kernel);
  const Subspace& z = e.total.center();
  if (e.kernel.is_subset_of(z)) return ExtensionClass::Central;
  std::vector<Vector> tw;
  for (const auto& v : e.kernel.basis_vectors()) tw.push_back(e.total.twist(v));
  if (Subspace::span(e.total.field(), e.total.dim(), tw).is_subset_of(z)) return ExtensionClass::AlphaCentralOnly;
  return ExtensionClass::Neither;
}

UniversalCentral universal_central_extension(const HomLeibnizAlgebra& L) {
  if (!predicates(L).perfect)
    throw Error(Errc::NotPerfect, "[L,L] has dimension " + std::to_string(L.derived().dim()) + " < " +
                                      std::to_string(L.dim()));
  TensorProduct t = tensor_square(L);
  PsiMaps psi = psi_maps(t);
  Extension e = make_extension(psi.psi1);
  std::size_t k = e.kernel.dim();
  return UniversalCentral{std::move(t), std::move(e), k};
}

namespace {

LinearMap lift_once(const UniversalCentral& u, const Extension& other, std::uint64_t seed) {
  const HomLeibnizAlgebra& L = u.extension.base;
  const HomLeibnizAlgebra& K = other.total;
  const FieldSpec f = L.field();
  std::mt19937_64 rng(seed);
  std::vector<Vector> c;
  for (std::size_t l = 0; l < L.dim(); ++l) {
    auto pre = solve(other.proj.map(), L.basis_vector(l));
    if (!pre) throw Error(Errc::InternalInconsistency, "surjection misses a basis vector");
    for (const auto& kv : other.kernel.basis_vectors())
      axpy(*pre, Scalar(f, static_cast<long>(rng() % 7) - 3), kv);
    c.push_back(std::move(*pre));
  }
  const TensorProduct& t = u.tensor;
  std::vector<Vector> cols(t.ambient_dim());
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = 0; j < L.dim(); ++j) {
      cols[t.mn_index(i, j)] = K.bracket(c[i], c[j]);
      cols[t.nm_index(j, i)] = K.bracket(c[j], c[i]);
    }
  LinearMap amb = LinearMap::from_images(f, K.dim(), cols);
  try {
    return induced_map(amb, t.presentation(), QuotientSpace(Subspace(f, K.dim())));
  } catch (const Error& e) {
    throw Error(Errc::InternalInconsistency, "lift does not respect the tensor relations", e.witness());
  }
}

}  // namespace

AlgebraHom lift_against(const UniversalCentral& u, const Extension& other, std::uint64_t seed) {
  if (!other.base.same_as(u.extension.base)) throw Error(Errc::BaseMismatch, "extensions have different bases");
  if (classify_extension(other) != ExtensionClass::Central)
    throw Error(Errc::NotCentral, "target extension is not central");
  LinearMap f1 = lift_once(u, other, seed);
  LinearMap f2 = lift_once(u, other, seed ^ 0x9e3779b97f4a7c15ULL);
  if (!(f1 == f2)) throw Error(Errc::InternalInconsistency, "lift depends on the choice of preimages");
  AlgebraHom f;
  try {
    f = AlgebraHom(u.tensor.algebra(), other.total, f1);
  } catch (const Error& e) {
    throw Error(Errc::InternalInconsistency, std::string("lift: ") + e.what(), e.witness());
  }
  if (!(compose(other.proj.map(), f1) == u.extension.proj.map()))
    throw Error(Errc::InternalInconsistency, "lift does not commute with the projections");
  return f;
}

UniversalAlphaCentral universal_alpha_central_extension(const HomLeibnizAlgebra& L) {
  if (!predicates(L).alpha_perfect) throw Error(Errc::NotAlphaPerfect, "L != [alpha(L), alpha(L)]");
  const FieldSpec f = L.field();
  Subalgebra S = materialize(L, image(L.alpha()), "a");
  const HomLeibnizAlgebra& A = S.algebra;
  TensorProduct t = tensor_square(A);
  PsiMaps psi = psi_maps(t);
  Extension e = make_extension(AlgebraHom(t.algebra(), L, compose(S.inclusion.map(), psi.psi1.map())));

  // alpha(L) (x) alpha(L) in row-major coordinates of the basis of alpha(L)
  const std::size_t a = A.dim(), n = L.dim(), amb = a * a;
  auto kron = [&](const Vector& u, const Vector& v) {
    Vector w = zero_vector(f, amb);
    for (std::size_t i = 0; i < a; ++i)
      if (!u[i].is_zero())
        for (std::size_t j = 0; j < a; ++j) w[i * a + j] = u[i] * v[j];
    return w;
  };
  auto co = [&](const Vector& x) { return S.space.coordinates(x); };
  std::vector<Vector> rels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector ai = L.twist(L.basis_vector(i)), aj = L.twist(L.basis_vector(j)),
                     ak = L.twist(L.basis_vector(k));
        Vector r = scale(Scalar(f, -1), kron(co(L.bracket_basis(i, j)), co(ak)));
        r = add(r, kron(co(L.bracket_basis(i, k)), co(aj)));
        r = add(r, kron(co(ai), co(L.bracket_basis(j, k))));
        rels.push_back(std::move(r));
      }
  QuotientSpace P = QuotientSpace::of(f, amb, rels);
  auto br = [&](const Vector& x, const Vector& y) {
    Vector w = zero_vector(f, amb);
    for (std::size_t p = 0; p < amb; ++p) {
      if (x[p].is_zero()) continue;
      for (std::size_t q = 0; q < amb; ++q) {
        if (y[q].is_zero()) continue;
        Vector g = kron(A.bracket_basis(p / a, p % a), A.bracket_basis(q / a, q % a));
        axpy(w, x[p] * y[q], g);
      }
    }
    return w;
  };
  const Subspace& R = P.relations();
  for (std::size_t k = 0; k < R.dim(); ++k)
    for (std::size_t g = 0; g < amb; ++g) {
      Vector eg = unit_vector(f, amb, g);
      if (!R.contains(br(R.basis_vector(k), eg)) || !R.contains(br(eg, R.basis_vector(k))))
        throw Error(Errc::BracketNotWellDefined, "presentation bracket does not preserve the relations",
                    std::to_string(k) + "," + std::to_string(g));
    }
  std::vector<Vector> tw(amb);
  for (std::size_t p = 0; p < amb; ++p) tw[p] = kron(A.twist(A.basis_vector(p / a)), A.twist(A.basis_vector(p % a)));
  LinearMap twb;
  try {
    twb = induced_map(LinearMap::from_images(f, amb, tw), P, P);
  } catch (const Error& err) {
    throw Error(Errc::InternalInconsistency, "twist does not preserve the presentation relations", err.witness());
  }
  const std::size_t q = P.dim();
  Tensor3 st(f, q, q, q);
  for (std::size_t x = 0; x < q; ++x)
    for (std::size_t y = 0; y < q; ++y)
      st.set_slice(x, y, P.project(br(unit_vector(f, amb, P.coset_basis()[x]), unit_vector(f, amb, P.coset_basis()[y]))));
  std::vector<std::string> labels;
  for (auto c : P.coset_basis()) labels.push_back(A.labels()[c / a] + "(x)" + A.labels()[c % a]);
  HomLeibnizAlgebra U(f, labels, std::move(st), twb.matrix());
  auto rep = validate_algebra(U);
  if (!rep.ok())
    throw Error(Errc::InternalInconsistency, "presentation fails " + rep.violations.front().rule,
                rep.violations.front().detail);

  std::vector<Vector> gen(t.ambient_dim());
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < a; ++j) {
      gen[t.mn_index(i, j)] = unit_vector(f, amb, i * a + j);
      gen[t.nm_index(j, i)] = unit_vector(f, amb, j * a + i);
    }
  LinearMap iso_map;
  try {
    iso_map = induced_map(LinearMap::from_images(f, amb, gen), t.presentation(), P);
  } catch (const Error& err) {
    throw Error(Errc::InternalInconsistency, "generator map does not respect the tensor relations", err.witness());
  }
  AlgebraHom iso(t.algebra(), U, iso_map);
  bool bij = iso_map.domain_dim() == iso_map.codomain_dim() && iso_map.is_injective();
  return UniversalAlphaCentral{std::move(S), std::move(t), std::move(e), std::move(U), std::move(P), std::move(iso), bij};
}

ExactnessReport six_term_check(const HomLeibnizAlgebra& L, const IdealHandle& I) {
  if (!I.parent().same_as(L)) throw Error(Errc::ParentMismatch, "ideal belongs to a different algebra");
  if (!predicates(L).perfect) throw Error(Errc::NotPerfect, "six-term sequence needs a perfect algebra");
  const FieldSpec f = L.field();
  Subalgebra Msub = materialize(L, I.space(), "m");
  Subalgebra Lfull = materialize(L, Subspace::full(f, L.dim()));
  QuotientAlgebra Q = quotient_algebra(I);
  TensorProduct tML = build_tensor(bracket_mutual(Msub, Lfull));
  TensorProduct tLM = build_tensor(bracket_mutual(Lfull, Msub));
  TensorProduct tLL = tensor_square(L);
  TensorProduct tQQ = tensor_square(Q.algebra);

  AlgebraHom idL = identity_hom(L);
  AlgebraHom s1 = induced_tensor_map(Msub.inclusion, idL, tML, tLL);
  AlgebraHom s2 = induced_tensor_map(idL, Msub.inclusion, tLM, tLL);
  AlgebraHom tau = induced_tensor_map(Q.projection, Q.projection, tLL, tQQ);
  LinearMap sigma = hstack(s1.map(), compose(tLL.algebra().alpha(), s2.map()));

  PsiMaps pML = psi_maps(tML), pLM = psi_maps(tLM);
  // psi(x, y) = psi_1(x) + alpha(psi_2(y)), landing in M
  LinearMap psi = hstack(pML.psi1.map(), compose(Msub.algebra.alpha(), pLM.psi2.map()));
  LinearMap psiL = psi_maps(tLL).psi1.map();
  LinearMap psiQ = psi_maps(tQQ).psi1.map();

  SnakeResult sn = snake(SnakeInput{sigma, tau.map(), Msub.inclusion.map(), Q.projection.map(), psi, psiL, psiQ});

  ExactnessReport rep;
  Subspace kpsi2 = kernel(pLM.psi2.map());
  rep.dims["L*M"] = tLM.algebra().dim();
  rep.dims["Ker(L*M->L)"] = kpsi2.dim();
  rep.dims["HL2(L)"] = sn.ker_b.dim();
  rep.dims["HL2(L/M)"] = sn.ker_c.dim();
  rep.dims["M/[L,M]"] = sn.coker_a.dim();

  LinearMap kappa = restrict_map(s2.map(), kpsi2, sn.ker_b);
  rep.joints.push_back(exact_at("HL2(L)", kappa, sn.ker_g));
  rep.joints.push_back(exact_at("HL2(L/M)", sn.ker_g, sn.delta));
  rep.joints.push_back(surjective_onto("M/[L,M]", sn.delta));

  Subspace LM = commutator(IdealHandle::whole(L), I);
  rep.check("image of psi is [L,M]", image(compose(Msub.inclusion.map(), psi)) == LM);
  rep.check("L/[L,L] vanishes", sn.coker_b.dim() == 0);
  rep.check("snake exact at HL2(L) through Ker(psi)", sn.report.joints[0].exact);
  // Ker(psi) -> Ker(psi_2), (x, y) |-> swap(x) + alpha(y)
  bool onto = false;
  try {
    const std::size_t dm = Msub.algebra.dim(), dl = L.dim();
    std::vector<Vector> sw(tML.ambient_dim());
    for (std::size_t i = 0; i < dm; ++i)
      for (std::size_t j = 0; j < dl; ++j) {
        sw[tML.mn_index(i, j)] = unit_vector(f, tLM.ambient_dim(), tLM.nm_index(i, j));
        sw[tML.nm_index(j, i)] = unit_vector(f, tLM.ambient_dim(), tLM.mn_index(j, i));
      }
    LinearMap swap = induced_map(LinearMap::from_images(f, tLM.ambient_dim(), sw), tML.presentation(), tLM.presentation());
    LinearMap mu = hstack(swap, tLM.algebra().alpha());
    onto = restrict_map(mu, kernel(psi), kpsi2).is_surjective();
  } catch (const Error&) {
    onto = false;
  }
  rep.check("Ker(psi) maps onto Ker(L*M->L)", onto);
  return rep;
}

}  // namespace hlb
