#include "homleib/tensor.hpp"

#include <set>

#include "homleib/error.hpp"
#include "homleib/parallel.hpp"

namespace hlb {

namespace {

struct Shape {
  FieldSpec f;
  std::size_t dm, dn;
  std::size_t amb() const { return 2 * dm * dn; }
  Vector mn(const Vector& m, const Vector& n) const {
    Vector v = zero_vector(f, amb());
    for (std::size_t i = 0; i < dm; ++i) {
      if (m[i].is_zero()) continue;
      for (std::size_t j = 0; j < dn; ++j)
        if (!n[j].is_zero()) v[i * dn + j] = m[i] * n[j];
    }
    return v;
  }
  Vector nm(const Vector& n, const Vector& m) const {
    Vector v = zero_vector(f, amb());
    for (std::size_t j = 0; j < dn; ++j) {
      if (n[j].is_zero()) continue;
      for (std::size_t i = 0; i < dm; ++i)
        if (!m[i].is_zero()) v[dm * dn + j * dm + i] = n[j] * m[i];
    }
    return v;
  }
};

// Basis data of a pair of mutually acting algebras. Notation:
//   mn_r(m,n) = m^n (N on M, right)   nm_l(n,m) = ^n m (N on M, left)
//   mn_l(m,n) = ^m n (M on N, left)   nm_r(n,m) = n^m (M on N, right)
struct Ops {
  const MutualActions& ma;
  const HomLeibnizAlgebra& M;
  const HomLeibnizAlgebra& N;
  Shape sh;
  std::vector<Vector> em, en, am, an;

  explicit Ops(const MutualActions& a)
      : ma(a), M(a.M()), N(a.N()), sh{a.M().field(), a.M().dim(), a.N().dim()} {
    for (std::size_t i = 0; i < sh.dm; ++i) em.push_back(M.basis_vector(i)), am.push_back(M.twist(em.back()));
    for (std::size_t j = 0; j < sh.dn; ++j) en.push_back(N.basis_vector(j)), an.push_back(N.twist(en.back()));
  }
  Vector m_pow_n(const Vector& m, const Vector& n) const { return ma.on_M.act_right(m, n); }
  Vector n_on_m(const Vector& n, const Vector& m) const { return ma.on_M.act_left(n, m); }
  Vector m_on_n(const Vector& m, const Vector& n) const { return ma.on_N.act_left(m, n); }
  Vector n_pow_m(const Vector& n, const Vector& m) const { return ma.on_N.act_right(n, m); }
};

std::vector<std::string> tensor_labels(const HomLeibnizAlgebra& M, const HomLeibnizAlgebra& N) {
  std::set<std::string> ml(M.labels().begin(), M.labels().end());
  bool overlap = false;
  for (const auto& l : N.labels()) overlap |= ml.count(l) > 0;
  std::vector<std::string> out;
  for (std::size_t i = 0; i < M.dim(); ++i)
    for (std::size_t j = 0; j < N.dim(); ++j) out.push_back(M.labels()[i] + "*" + N.labels()[j]);
  for (std::size_t j = 0; j < N.dim(); ++j)
    for (std::size_t i = 0; i < M.dim(); ++i)
      out.push_back(N.labels()[j] + "*" + M.labels()[i] + (overlap ? "'" : ""));
  if (std::set<std::string>(out.begin(), out.end()).size() != out.size())
    out = HomLeibnizAlgebra::default_labels(out.size(), "g");
  return out;
}

}  // namespace

Vector TensorProduct::star_mn(const Vector& m, const Vector& n) const {
  return Shape{field(), M().dim(), N().dim()}.mn(m, n);
}

Vector TensorProduct::star_nm(const Vector& n, const Vector& m) const {
  return Shape{field(), M().dim(), N().dim()}.nm(n, m);
}

Vector TensorProduct::bracket_ambient(const Vector& x, const Vector& y) const {
  return star_mn(psi1_(x), psi2_(y));
}

std::vector<Vector> tensor_relations(const MutualActions& ma) {
  Ops o(ma);
  const auto& M = o.M;
  const auto& N = o.N;
  const std::size_t dm = o.sh.dm, dn = o.sh.dn;
  const Shape& sh = o.sh;
  const std::size_t n7 = dm * dn * dn, n8 = dn * dm * dm, n9 = dm * dm * dn, n10 = dn * dn * dm;
  const std::size_t n11 = dm * dm * dn, n12 = dn * dn * dm, nq = dm * dn * dm * dn;
  std::vector<Vector> rel(n7 + n8 + n9 + n10 + n11 + n12 + 4 * nq);

  // One work item per (family, leading basis index); each writes its own slots.
  struct Item {
    int family;
    std::size_t lead;
  };
  std::vector<Item> items;
  for (int fam : {7, 9, 11, 13}) for (std::size_t i = 0; i < dm; ++i) items.push_back({fam, i});
  for (int fam : {8, 10, 12}) for (std::size_t i = 0; i < dn; ++i) items.push_back({fam, i});
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    return a.family != b.family ? a.family < b.family : a.lead < b.lead;
  });
  const std::size_t o8 = n7, o9 = o8 + n8, o10 = o9 + n9, o11 = o10 + n10, o12 = o11 + n11, o13 = o12 + n12;

  par::for_each_index(items.size(), [&](std::size_t t) {
    const std::size_t i = items[t].lead;
    switch (items[t].family) {
      case 7:  // a(m)*[n,n'] - m^n * a(n') + m^{n'} * a(n)
        for (std::size_t j = 0; j < dn; ++j)
          for (std::size_t k = 0; k < dn; ++k) {
            Vector v = sh.mn(o.am[i], N.bracket_basis(j, k));
            v = sub(v, sh.mn(o.m_pow_n(o.em[i], o.en[j]), o.an[k]));
            v = add(v, sh.mn(o.m_pow_n(o.em[i], o.en[k]), o.an[j]));
            rel[(i * dn + j) * dn + k] = std::move(v);
          }
        break;
      case 8:  // a(n)*[m,m'] - n^m * a(m') + n^{m'} * a(m)
        for (std::size_t j = 0; j < dm; ++j)
          for (std::size_t k = 0; k < dm; ++k) {
            Vector v = sh.nm(o.an[i], M.bracket_basis(j, k));
            v = sub(v, sh.nm(o.n_pow_m(o.en[i], o.em[j]), o.am[k]));
            v = add(v, sh.nm(o.n_pow_m(o.en[i], o.em[k]), o.am[j]));
            rel[o8 + (i * dm + j) * dm + k] = std::move(v);
          }
        break;
      case 9:  // [m,m']*a(n) - ^m n * a(m') + a(m) * n^{m'}   (lead = m)
        for (std::size_t k = 0; k < dm; ++k)
          for (std::size_t j = 0; j < dn; ++j) {
            Vector v = sh.mn(M.bracket_basis(i, k), o.an[j]);
            v = sub(v, sh.nm(o.m_on_n(o.em[i], o.en[j]), o.am[k]));
            v = add(v, sh.mn(o.am[i], o.n_pow_m(o.en[j], o.em[k])));
            rel[o9 + (i * dm + k) * dn + j] = std::move(v);
          }
        break;
      case 10:  // [n,n']*a(m) - ^n m * a(n') + a(n) * m^{n'}   (lead = n)
        for (std::size_t k = 0; k < dn; ++k)
          for (std::size_t j = 0; j < dm; ++j) {
            Vector v = sh.nm(N.bracket_basis(i, k), o.am[j]);
            v = sub(v, sh.mn(o.n_on_m(o.en[i], o.em[j]), o.an[k]));
            v = add(v, sh.nm(o.an[i], o.m_pow_n(o.em[j], o.en[k])));
            rel[o10 + (i * dn + k) * dm + j] = std::move(v);
          }
        break;
      case 11:  // a(m) * ^{m'}n + a(m) * n^{m'}
        for (std::size_t k = 0; k < dm; ++k)
          for (std::size_t j = 0; j < dn; ++j)
            rel[o11 + (i * dm + k) * dn + j] =
                add(sh.mn(o.am[i], o.m_on_n(o.em[k], o.en[j])), sh.mn(o.am[i], o.n_pow_m(o.en[j], o.em[k])));
        break;
      case 12:  // a(n) * ^{n'}m + a(n) * m^{n'}
        for (std::size_t k = 0; k < dn; ++k)
          for (std::size_t j = 0; j < dm; ++j)
            rel[o12 + (i * dn + k) * dm + j] =
                add(sh.nm(o.an[i], o.n_on_m(o.en[k], o.em[j])), sh.nm(o.an[i], o.m_pow_n(o.em[j], o.en[k])));
        break;
      case 13:  // the four quadruple families, lead = m
        for (std::size_t j = 0; j < dn; ++j)
          for (std::size_t k = 0; k < dm; ++k)
            for (std::size_t l = 0; l < dn; ++l) {
              const Vector& m = o.em[i];
              const Vector& n = o.en[j];
              const Vector& mp = o.em[k];
              const Vector& np = o.en[l];
              const std::size_t q = ((i * dn + j) * dm + k) * dn + l;
              // m^n * ^{m'}n' - ^m n * m'^{n'}
              rel[o13 + q] = sub(sh.mn(o.m_pow_n(m, n), o.m_on_n(mp, np)), sh.nm(o.m_on_n(m, n), o.m_pow_n(mp, np)));
              // m^n * n'^{m'} - ^m n * ^{n'}m'
              rel[o13 + nq + q] =
                  sub(sh.mn(o.m_pow_n(m, n), o.n_pow_m(np, mp)), sh.nm(o.m_on_n(m, n), o.n_on_m(np, mp)));
              // ^n m * ^{m'}n' - n^m * m'^{n'}
              rel[o13 + 2 * nq + q] =
                  sub(sh.mn(o.n_on_m(n, m), o.m_on_n(mp, np)), sh.nm(o.n_pow_m(n, m), o.m_pow_n(mp, np)));
              // ^n m * n'^{m'} - n^m * ^{n'}m'
              rel[o13 + 3 * nq + q] =
                  sub(sh.mn(o.n_on_m(n, m), o.n_pow_m(np, mp)), sh.nm(o.n_pow_m(n, m), o.n_on_m(np, mp)));
            }
        break;
    }
  });
  return rel;
}

TensorProduct build_tensor(const MutualActions& ma) {
  require_valid(ma.on_N);
  require_valid(ma.on_M);
  if (!ma.on_N.actor().same_as(ma.on_M.target()) || !ma.on_N.target().same_as(ma.on_M.actor()))
    throw Error(Errc::StructureError, "mutual actions refer to different algebras");
  {
    auto rep = check_compatible(ma);
    if (!rep.ok()) {
      const auto& v = rep.violations.front();
      std::string w;
      for (auto i : v.witness) w += (w.empty() ? "" : ",") + std::to_string(i);
      throw Error(Errc::IncompatibleActions, "compatibility identity " + v.rule + " fails at (" + w + ")", v.detail);
    }
  }
  Ops o(ma);
  const FieldSpec f = o.sh.f;
  const std::size_t dm = o.sh.dm, dn = o.sh.dn, amb = o.sh.amb();

  TensorProduct t;
  t.ma_ = ma;
  std::vector<Vector> rel = tensor_relations(ma);
  t.relation_count_ = rel.size();
  EchelonBuilder eb(f, amb);
  eb.add_all(std::move(rel));
  t.presentation_ = QuotientSpace(eb.finish());

  std::vector<Vector> acols(amb), p1(amb), p2(amb);
  for (std::size_t i = 0; i < dm; ++i)
    for (std::size_t j = 0; j < dn; ++j) {
      const std::size_t g = i * dn + j, h = dm * dn + j * dm + i;
      acols[g] = o.sh.mn(o.am[i], o.an[j]);
      acols[h] = o.sh.nm(o.an[j], o.am[i]);
      p1[g] = o.m_pow_n(o.em[i], o.en[j]);
      p1[h] = o.n_on_m(o.en[j], o.em[i]);
      p2[g] = o.m_on_n(o.em[i], o.en[j]);
      p2[h] = o.n_pow_m(o.en[j], o.em[i]);
    }
  t.alpha_ambient_ = LinearMap::from_images(f, amb, acols);
  t.psi1_ = LinearMap::from_images(f, dm, p1);
  t.psi2_ = LinearMap::from_images(f, dn, p2);

  const QuotientSpace& P = t.presentation_;
  const Subspace& R = P.relations();
  LinearMap abar;
  try {
    abar = induced_map(t.alpha_ambient_, P, P);
  } catch (const Error& e) {
    throw Error(Errc::InternalInconsistency, "twist does not preserve the tensor relations", e.witness());
  }
  // bracket closure: [r, g] and [g, r] in R for relation basis r and generators g
  std::vector<std::string> bad(R.dim());
  par::for_each_index(R.dim(), [&](std::size_t k) {
    const Vector& r = R.basis_vector(k);
    for (std::size_t g = 0; g < amb && bad[k].empty(); ++g) {
      Vector e = unit_vector(f, amb, g);
      if (!R.contains(t.bracket_ambient(r, e)) || !R.contains(t.bracket_ambient(e, r)))
        bad[k] = "relation " + to_string(r) + " with generator " + std::to_string(g);
    }
  });
  for (const auto& b : bad)
    if (!b.empty()) throw Error(Errc::BracketNotWellDefined, "bracket does not preserve the relations", b);

  const std::size_t q = P.dim();
  std::vector<std::string> all = tensor_labels(o.M, o.N), labels;
  for (auto c : P.coset_basis()) labels.push_back(all[c]);
  Tensor3 st(f, q, q, q);
  par::for_each_index(q, [&](std::size_t a) {
    const Vector x = unit_vector(f, amb, P.coset_basis()[a]);
    for (std::size_t b = 0; b < q; ++b)
      st.set_slice(a, b, P.project(t.bracket_ambient(x, unit_vector(f, amb, P.coset_basis()[b]))));
  });
  t.algebra_ = HomLeibnizAlgebra(f, std::move(labels), std::move(st), abar.matrix());
  auto rep = validate_algebra(t.algebra_);
  if (!rep.ok())
    throw Error(Errc::InternalInconsistency, "tensor product fails " + rep.violations.front().rule,
                rep.violations.front().detail);
  return t;
}

TensorProduct tensor_square(const HomLeibnizAlgebra& L) { return build_tensor(adjoint_mutual(L)); }

PsiMaps psi_maps(const TensorProduct& t) {
  const QuotientSpace& P = t.presentation();
  QuotientSpace QM(Subspace(t.field(), t.M().dim())), QN(Subspace(t.field(), t.N().dim()));
  try {
    return PsiMaps{AlgebraHom(t.algebra(), t.M(), induced_map(t.psi1_ambient(), P, QM)),
                   AlgebraHom(t.algebra(), t.N(), induced_map(t.psi2_ambient(), P, QN))};
  } catch (const Error& e) {
    throw Error(Errc::InternalInconsistency, std::string("psi maps: ") + e.what(), e.witness());
  }
}

AlgebraHom induced_tensor_map(const AlgebraHom& f, const AlgebraHom& g, const TensorProduct& t,
                              const TensorProduct& tp) {
  if (!f.source().same_as(t.M()) || !f.target().same_as(tp.M()) || !g.source().same_as(t.N()) ||
      !g.target().same_as(tp.N()))
    throw Error(Errc::StructureError, "maps do not match the factors of the tensor products");
  const MutualActions& a = t.actions();
  const MutualActions& b = tp.actions();
  const auto& M = t.M();
  const auto& N = t.N();
  for (std::size_t i = 0; i < M.dim(); ++i)
    for (std::size_t j = 0; j < N.dim(); ++j) {
      const Vector m = M.basis_vector(i), n = N.basis_vector(j);
      const Vector fm = f(m), gn = g(n);
      const std::string w = "(" + M.labels()[i] + "," + N.labels()[j] + ")";
      if (f(a.on_M.act_left(n, m)) != b.on_M.act_left(gn, fm))
        throw Error(Errc::NotEquivariant, "f(^n m) != ^{g n} f(m)", w);
      if (f(a.on_M.act_right(m, n)) != b.on_M.act_right(fm, gn))
        throw Error(Errc::NotEquivariant, "f(m^n) != f(m)^{g n}", w);
      if (g(a.on_N.act_left(m, n)) != b.on_N.act_left(fm, gn))
        throw Error(Errc::NotEquivariant, "g(^m n) != ^{f m} g(n)", w);
      if (g(a.on_N.act_right(n, m)) != b.on_N.act_right(gn, fm))
        throw Error(Errc::NotEquivariant, "g(n^m) != g(n)^{f m}", w);
    }
  std::vector<Vector> cols(t.ambient_dim());
  for (std::size_t i = 0; i < M.dim(); ++i)
    for (std::size_t j = 0; j < N.dim(); ++j) {
      const Vector fm = f(M.basis_vector(i)), gn = g(N.basis_vector(j));
      cols[t.mn_index(i, j)] = tp.star_mn(fm, gn);
      cols[t.nm_index(j, i)] = tp.star_nm(gn, fm);
    }
  LinearMap amb = LinearMap::from_images(t.field(), tp.ambient_dim(), cols);
  try {
    return AlgebraHom(t.algebra(), tp.algebra(), induced_map(amb, t.presentation(), tp.presentation()));
  } catch (const Error& e) {
    throw Error(Errc::InternalInconsistency, std::string("induced tensor map: ") + e.what(), e.witness());
  }
}

OuterAmbient outer_action_ambient(const TensorProduct& t, Side side) {
  Ops o(t.actions());
  const auto& M = o.M;
  const auto& N = o.N;
  const std::size_t dm = o.sh.dm, dn = o.sh.dn, amb = o.sh.amb();
  const FieldSpec f = o.sh.f;
  const std::size_t na = side == Side::M ? dm : dn;
  OuterAmbient out;
  out.left.resize(na);
  out.right.resize(na);
  par::for_each_index(na, [&](std::size_t k) {
    std::vector<Vector> lc(amb), rc(amb);
    for (std::size_t i = 0; i < dm; ++i)
      for (std::size_t j = 0; j < dn; ++j) {
        const Vector &m = o.em[i], &n = o.en[j], &am = o.am[i], &an = o.an[j];
        const std::size_t g = i * dn + j, h = dm * dn + j * dm + i;
        if (side == Side::M) {
          const Vector& mp = o.em[k];
          Vector l_mn = sub(o.sh.mn(M.bracket(mp, m), an), o.sh.nm(o.m_on_n(mp, n), am));
          lc[g] = l_mn;
          for (auto& s : l_mn) s = -s;
          lc[h] = l_mn;
          rc[g] = add(o.sh.mn(M.bracket(m, mp), an), o.sh.mn(am, o.n_pow_m(n, mp)));
          rc[h] = add(o.sh.nm(o.n_pow_m(n, mp), am), o.sh.nm(an, M.bracket(m, mp)));
        } else {
          const Vector& np = o.en[k];
          Vector l_mn = sub(o.sh.mn(o.n_on_m(np, m), an), o.sh.nm(N.bracket(np, n), am));
          lc[g] = l_mn;
          for (auto& s : l_mn) s = -s;
          lc[h] = l_mn;
          rc[g] = add(o.sh.mn(o.m_pow_n(m, np), an), o.sh.mn(am, N.bracket(n, np)));
          rc[h] = add(o.sh.nm(N.bracket(n, np), am), o.sh.nm(an, o.m_pow_n(m, np)));
        }
      }
    out.left[k] = LinearMap::from_images(f, amb, lc);
    out.right[k] = LinearMap::from_images(f, amb, rc);
  });
  return out;
}

HomAction outer_action(const TensorProduct& t, Side side) {
  OuterAmbient oa = outer_action_ambient(t, side);
  const HomLeibnizAlgebra& actor = side == Side::M ? t.M() : t.N();
  const HomLeibnizAlgebra& T = t.algebra();
  const std::size_t na = actor.dim(), q = T.dim();
  Tensor3 left(t.field(), na, q, q), right(t.field(), q, na, q);
  for (std::size_t k = 0; k < na; ++k) {
    LinearMap lk, rk;
    try {
      lk = induced_map(oa.left[k], t.presentation(), t.presentation());
      rk = induced_map(oa.right[k], t.presentation(), t.presentation());
    } catch (const Error& e) {
      throw Error(Errc::InternalInconsistency, "outer action does not preserve the relations", e.witness());
    }
    for (std::size_t x = 0; x < q; ++x) {
      left.set_slice(k, x, lk.image_of_basis(x));
      right.set_slice(x, k, rk.image_of_basis(x));
    }
  }
  HomAction act(actor, T, std::move(left), std::move(right));
  auto rep = validate_action(act);
  if (!rep.ok())
    throw Error(Errc::InternalInconsistency, "outer action fails axiom " + rep.violations.front().rule,
                rep.violations.front().detail);
  return act;
}

ValidationReport tensor_property_battery(const TensorProduct& t) {
  const FieldSpec f = t.field();
  const auto& M = t.M();
  const auto& N = t.N();
  const std::size_t dm = M.dim(), dn = N.dim(), amb = t.ambient_dim();
  const Subspace& R = t.presentation().relations();
  ValidationReport rep;
  rep.rules = {"bracket_closure", "twist_closure", "ker_psi1_central", "ker_psi2_central",
               "im_psi1_trivial_on_ker", "im_psi2_trivial_on_ker"};
  static const char* roman[] = {"i", "ii", "iii", "iv", "v", "vi", "vii", "viii",
                                "ix", "x", "xi", "xii", "xiii", "xiv", "xv", "xvi"};
  for (auto r : roman) rep.rules.push_back(std::string("f.") + r);
  std::vector<Violation> found;
  auto fail = [&](const std::string& rule, std::vector<std::size_t> w, std::string detail = {}) {
    if (rep.failures[rule]++ < 8) found.push_back({rule, std::move(w), std::move(detail)});
  };

  // relation closure
  for (std::size_t k = 0; k < R.dim(); ++k) {
    const Vector& r = R.basis_vector(k);
    for (std::size_t g = 0; g < amb; ++g) {
      Vector e = unit_vector(f, amb, g);
      if (!R.contains(t.bracket_ambient(r, e)) || !R.contains(t.bracket_ambient(e, r)))
        fail("bracket_closure", {k, g});
    }
    if (!R.contains(t.alpha_ambient()(r))) fail("twist_closure", {k});
  }

  PsiMaps psi = psi_maps(t);
  const HomLeibnizAlgebra& T = t.algebra();
  Subspace k1 = kernel(psi.psi1.map()), k2 = kernel(psi.psi2.map());
  if (!k1.is_subset_of(T.center())) fail("ker_psi1_central", {});
  if (!k2.is_subset_of(T.center())) fail("ker_psi2_central", {});

  HomAction outM = outer_action(t, Side::M), outN = outer_action(t, Side::N);
  auto trivial_on = [&](const HomAction& act, const Subspace& im, const Subspace& ker, const char* rule) {
    for (std::size_t a = 0; a < im.dim(); ++a)
      for (std::size_t b = 0; b < ker.dim(); ++b)
        if (!is_zero(act.act_left(im.basis_vector(a), ker.basis_vector(b))) ||
            !is_zero(act.act_right(ker.basis_vector(b), im.basis_vector(a))))
          fail(rule, {a, b});
  };
  trivial_on(outM, image(psi.psi1.map()), k1, "im_psi1_trivial_on_ker");
  trivial_on(outN, image(psi.psi2.map()), k2, "im_psi2_trivial_on_ker");

  // f) i)-viii) on generators, computed on ambient representatives
  OuterAmbient oaM = outer_action_ambient(t, Side::M), oaN = outer_action_ambient(t, Side::N);
  const LinearMap& p1 = t.psi1_ambient();
  const LinearMap& p2 = t.psi2_ambient();
  auto is_mn = [&](std::size_t g) { return g < dm * dn; };
  for (std::size_t g = 0; g < amb; ++g) {
    const Vector x = unit_vector(f, amb, g);
    for (std::size_t k = 0; k < dm; ++k) {
      const Vector amp = M.twist(M.basis_vector(k));
      if (p1(oaM.left[k](x)) != M.bracket(amp, p1(x))) fail(is_mn(g) ? "f.i" : "f.iii", {g, k});
      if (p1(oaM.right[k](x)) != M.bracket(p1(x), amp)) fail(is_mn(g) ? "f.ii" : "f.iv", {g, k});
    }
    for (std::size_t k = 0; k < dn; ++k) {
      const Vector anp = N.twist(N.basis_vector(k));
      if (p2(oaN.left[k](x)) != N.bracket(anp, p2(x))) fail(is_mn(g) ? "f.v" : "f.vii", {g, k});
      if (p2(oaN.right[k](x)) != N.bracket(p2(x), anp)) fail(is_mn(g) ? "f.vi" : "f.viii", {g, k});
    }
  }
  // f) ix)-xvi): outer actions through psi_1 and psi_2 agree with the twisted bracket
  auto outer_apply = [&](const OuterAmbient& oa, const Vector& coeffs, const Vector& y, bool left) {
    Vector acc = zero_vector(f, amb);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      if (!coeffs[k].is_zero()) axpy(acc, coeffs[k], left ? oa.left[k](y) : oa.right[k](y));
    return t.project(acc);
  };
  for (std::size_t g = 0; g < amb; ++g) {
    const Vector x = unit_vector(f, amb, g);
    const Vector ax = t.alpha_ambient()(x), px1 = p1(x), px2 = p2(x);
    for (std::size_t h = 0; h < amb; ++h) {
      const Vector y = unit_vector(f, amb, h);
      const int slot = (is_mn(g) ? 0 : 2) + (is_mn(h) ? 0 : 1);
      const Vector lb = t.project(t.bracket_ambient(ax, y));
      if (outer_apply(oaM, px1, y, true) != lb || outer_apply(oaN, px2, y, true) != lb)
        fail(std::string("f.") + roman[8 + slot], {g, h});
      const Vector rb = t.project(t.bracket_ambient(y, ax));
      if (outer_apply(oaM, px1, y, false) != rb || outer_apply(oaN, px2, y, false) != rb)
        fail(std::string("f.") + roman[12 + slot], {g, h});
    }
  }
  for (const auto& rule : rep.rules)
    for (const auto& v : found)
      if (v.rule == rule) rep.violations.push_back(v);
  return rep;
}

ExactnessReport right_exactness_check(const AlgebraHom& f, const AlgebraHom& g, const MutualActions& ma1,
                                      const MutualActions& ma2, const MutualActions& ma3) {
  if (!f.target().same_as(g.source())) throw Error(Errc::HypothesisNotMet, "maps do not compose");
  if (!ma1.M().same_as(f.source()) || !ma2.M().same_as(f.target()) || !ma3.M().same_as(g.target()))
    throw Error(Errc::HypothesisNotMet, "actions do not belong to the sequence");
  if (!ma1.N().same_as(ma2.N()) || !ma2.N().same_as(ma3.N()))
    throw Error(Errc::HypothesisNotMet, "partner algebra differs along the sequence");
  if (!f.map().is_injective()) throw Error(Errc::HypothesisNotMet, "first map is not injective");
  if (!g.map().is_surjective()) throw Error(Errc::HypothesisNotMet, "second map is not surjective");
  if (!exact_at("M2", f.map(), g.map()).exact) throw Error(Errc::HypothesisNotMet, "sequence is not exact at M2");

  TensorProduct t1 = build_tensor(ma1), t2 = build_tensor(ma2), t3 = build_tensor(ma3);
  AlgebraHom idN = identity_hom(ma2.N());
  AlgebraHom F = induced_tensor_map(f, identity_hom(ma1.N()), t1, t2);
  AlgebraHom G = induced_tensor_map(g, idN, t2, t3);
  ExactnessReport rep;
  rep.dims["M1*N"] = t1.algebra().dim();
  rep.dims["M2*N"] = t2.algebra().dim();
  rep.dims["M3*N"] = t3.algebra().dim();
  rep.joints.push_back(exact_at("M2*N", F.map(), G.map()));
  rep.joints.push_back(surjective_onto("M3*N", G.map()));
  return rep;
}

ExactnessReport ideal_sequence_check(const IdealHandle& I) {
  const HomLeibnizAlgebra& L = I.parent();
  Subalgebra Msub = materialize(L, I.space(), "m");
  Subalgebra Lfull = materialize(L, Subspace::full(L.field(), L.dim()));
  QuotientAlgebra Q = quotient_algebra(I);

  TensorProduct tML = build_tensor(bracket_mutual(Msub, Lfull));
  TensorProduct tLM = build_tensor(bracket_mutual(Lfull, Msub));
  TensorProduct tLL = tensor_square(L);
  TensorProduct tQQ = tensor_square(Q.algebra);

  AlgebraHom idL = identity_hom(L);
  AlgebraHom sigma1 = induced_tensor_map(Msub.inclusion, idL, tML, tLL);
  AlgebraHom sigma2 = induced_tensor_map(idL, Msub.inclusion, tLM, tLL);
  AlgebraHom tau = induced_tensor_map(Q.projection, Q.projection, tLL, tQQ);
  // sigma(x, y) = sigma'(x) + alpha(sigma''(y))
  LinearMap sigma = hstack(sigma1.map(), compose(tLL.algebra().alpha(), sigma2.map()));

  ExactnessReport rep;
  rep.dims["M*L"] = tML.algebra().dim();
  rep.dims["L*M"] = tLM.algebra().dim();
  rep.dims["L*L"] = tLL.algebra().dim();
  rep.dims["(L/M)*(L/M)"] = tQQ.algebra().dim();
  rep.joints.push_back(exact_at("L*L", sigma, tau.map()));
  rep.joints.push_back(surjective_onto("(L/M)*(L/M)", tau.map()));
  rep.check("image of sigma is a two-sided ideal", !ideal_defect(tLL.algebra(), image(sigma)).has_value());
  return rep;
}

}  // namespace hlb
