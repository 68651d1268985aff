#include "homleib/actions.hpp"

#include <algorithm>

#include "homleib/error.hpp"
#include "homleib/parallel.hpp"

namespace hlb {

HomAction::HomAction(HomLeibnizAlgebra actor, HomLeibnizAlgebra target, Tensor3 left, Tensor3 right)
    : actor_(std::move(actor)), target_(std::move(target)), left_(std::move(left)), right_(std::move(right)) {
  const std::size_t l = actor_.dim(), m = target_.dim();
  if (left_.extent(0) != l || left_.extent(1) != m || left_.extent(2) != m)
    throw Error(Errc::StructureError, "left action tensor must have shape (" + std::to_string(l) + "," +
                                          std::to_string(m) + "," + std::to_string(m) + ")");
  if (right_.extent(0) != m || right_.extent(1) != l || right_.extent(2) != m)
    throw Error(Errc::StructureError, "right action tensor must have shape (" + std::to_string(m) + "," +
                                          std::to_string(l) + "," + std::to_string(m) + ")");
  if (!(actor_.field() == target_.field()) || !(left_.field() == actor_.field()) ||
      !(right_.field() == actor_.field()))
    throw Error(Errc::FieldMismatch, "action data over different fields");
}

namespace {

constexpr std::size_t kWitnessCap = 8;

void merge(ValidationReport& rep, const std::vector<std::vector<Violation>>& found) {
  for (const auto& rule : rep.rules)
    for (const auto& vs : found)
      for (const auto& v : vs)
        if (v.rule == rule && rep.failures[v.rule]++ < kWitnessCap) rep.violations.push_back(v);
}

std::string mismatch(const Vector& lhs, const Vector& rhs) {
  return "lhs=" + to_string(lhs) + " rhs=" + to_string(rhs);
}

}  // namespace

ValidationReport validate_action(const HomAction& act) {
  const auto& L = act.actor();
  const auto& M = act.target();
  const std::size_t nl = L.dim(), nm = M.dim();
  ValidationReport rep;
  rep.rules = {"a", "b", "c", "d", "e", "f", "g", "h"};
  auto l = [&](const Vector& x, const Vector& m) { return act.act_left(x, m); };
  auto r = [&](const Vector& m, const Vector& x) { return act.act_right(m, x); };
  std::vector<Vector> x(nl), ax(nl), m(nm), am(nm);
  for (std::size_t i = 0; i < nl; ++i) x[i] = L.basis_vector(i), ax[i] = L.twist(x[i]);
  for (std::size_t i = 0; i < nm; ++i) m[i] = M.basis_vector(i), am[i] = M.twist(m[i]);

  std::vector<std::vector<Violation>> found(nl);
  par::for_each_index(nl, [&](std::size_t i) {
    auto& out = found[i];
    auto report = [&](const char* rule, std::vector<std::size_t> w, const Vector& lhs, const Vector& rhs) {
      if (lhs != rhs) out.push_back({rule, std::move(w), mismatch(lhs, rhs)});
    };
    // triples (x_i, y_j, m_k)
    for (std::size_t j = 0; j < nl; ++j) {
      const Vector xy = L.bracket_basis(i, j);
      for (std::size_t k = 0; k < nm; ++k) {
        report("a", {i, j, k}, r(am[k], xy), sub(r(r(m[k], x[i]), ax[j]), r(r(m[k], x[j]), ax[i])));
        report("b", {i, j, k}, l(xy, am[k]), sub(r(l(x[i], m[k]), ax[j]), l(ax[i], r(m[k], x[j]))));
        Vector rc = l(ax[i], r(m[k], x[j]));
        for (auto& s : rc) s = -s;
        report("c", {i, j, k}, l(ax[i], l(x[j], m[k])), rc);
      }
    }
    // triples (x_i, m_j, m'_k)
    for (std::size_t j = 0; j < nm; ++j) {
      for (std::size_t k = 0; k < nm; ++k) {
        const Vector mm = M.bracket_basis(j, k);
        report("d", {i, j, k}, l(ax[i], mm), sub(M.bracket(l(x[i], m[j]), am[k]), M.bracket(l(x[i], m[k]), am[j])));
        report("e", {i, j, k}, r(mm, ax[i]), add(M.bracket(r(m[j], x[i]), am[k]), M.bracket(am[j], r(m[k], x[i]))));
        Vector rf = M.bracket(am[j], r(m[k], x[i]));
        for (auto& s : rf) s = -s;
        report("f", {i, j, k}, M.bracket(am[j], l(x[i], m[k])), rf);
      }
    }
    // pairs (x_i, m_j)
    for (std::size_t j = 0; j < nm; ++j) {
      report("g", {i, j}, M.twist(l(x[i], m[j])), l(ax[i], am[j]));
      report("h", {i, j}, M.twist(r(m[j], x[i])), r(am[j], ax[i]));
    }
  });
  merge(rep, found);
  rep.flags["trivial"] = act.is_trivial();
  return rep;
}

void require_valid(const HomAction& a) {
  auto rep = validate_action(a);
  if (!rep.ok()) {
    const auto& v = rep.violations.front();
    std::string w;
    for (auto i : v.witness) w += (w.empty() ? "" : ",") + std::to_string(i);
    throw Error(Errc::InvalidAction, "axiom " + v.rule + ") fails at (" + w + ")", v.detail);
  }
}

HomAction trivial_action(const HomLeibnizAlgebra& L, const HomLeibnizAlgebra& M) {
  const FieldSpec f = L.field();
  return HomAction(L, M, Tensor3(f, L.dim(), M.dim(), M.dim()), Tensor3(f, M.dim(), L.dim(), M.dim()));
}

HomAction bracket_action(const Subalgebra& K, const Subalgebra& H) {
  const auto& P = K.inclusion.target();
  if (!P.same_as(H.inclusion.target()))
    throw Error(Errc::ParentMismatch, "subalgebras of different algebras");
  const FieldSpec f = P.field();
  const std::size_t nk = K.space.dim(), nh = H.space.dim();
  Tensor3 left(f, nk, nh, nh), right(f, nh, nk, nh);
  for (std::size_t i = 0; i < nk; ++i)
    for (std::size_t j = 0; j < nh; ++j) {
      const Vector& k = K.space.basis_vector(i);
      const Vector& h = H.space.basis_vector(j);
      Vector kh = P.bracket(k, h), hk = P.bracket(h, k);
      if (!H.space.contains(kh) || !H.space.contains(hk))
        throw Error(Errc::InvalidAction, "bracket leaves the acted-on subalgebra",
                    "(" + K.algebra.labels()[i] + "," + H.algebra.labels()[j] + ")");
      left.set_slice(i, j, H.space.coordinates(kh));
      right.set_slice(j, i, H.space.coordinates(hk));
    }
  return HomAction(K.algebra, H.algebra, std::move(left), std::move(right));
}

HomAction adjoint_action(const HomLeibnizAlgebra& L) {
  return HomAction(L, L, L.structure(), L.structure());
}

MutualActions make_mutual(HomAction on_N, HomAction on_M) {
  if (!on_N.actor().same_as(on_M.target()) || !on_N.target().same_as(on_M.actor()))
    throw Error(Errc::StructureError, "mutual actions refer to different algebras");
  return MutualActions{std::move(on_N), std::move(on_M)};
}

ValidationReport check_compatible(const MutualActions& ma) {
  const auto& M = ma.M();
  const auto& N = ma.N();
  const std::size_t nm = M.dim(), nn = N.dim();
  // M on N: lMN(m, n) = ^m n, rMN(n, m) = n^m; N on M: lNM(n, m) = ^n m, rNM(m, n) = m^n
  auto lMN = [&](const Vector& m, const Vector& n) { return ma.on_N.act_left(m, n); };
  auto rMN = [&](const Vector& n, const Vector& m) { return ma.on_N.act_right(n, m); };
  auto lNM = [&](const Vector& n, const Vector& m) { return ma.on_M.act_left(n, m); };
  auto rNM = [&](const Vector& m, const Vector& n) { return ma.on_M.act_right(m, n); };
  ValidationReport rep;
  for (int r = 1; r <= 8; ++r) rep.rules.push_back(std::to_string(r));

  // Rules 1,3,5,7 range over (m, n, m'); rules 2,4,6,8 over (n, m, n').
  std::vector<std::vector<Violation>> found(nm + nn);
  par::for_each_index(nm + nn, [&](std::size_t t) {
    auto& out = found[t];
    auto report = [&](const char* rule, std::vector<std::size_t> w, const Vector& lhs, const Vector& rhs) {
      if (lhs != rhs) out.push_back({rule, std::move(w), mismatch(lhs, rhs)});
    };
    if (t < nm) {
      const std::size_t i = t;
      const Vector m = M.basis_vector(i);
      for (std::size_t j = 0; j < nn; ++j) {
        const Vector n = N.basis_vector(j);
        for (std::size_t k = 0; k < nm; ++k) {
          const Vector mp = M.basis_vector(k);
          report("1", {i, j, k}, lNM(lMN(m, n), mp), M.bracket(rNM(m, n), mp));
          report("3", {i, j, k}, lNM(rMN(n, m), mp), M.bracket(lNM(n, m), mp));
          report("5", {i, j, k}, rNM(m, lMN(mp, n)), M.bracket(m, rNM(mp, n)));
          report("7", {i, j, k}, rNM(m, rMN(n, mp)), M.bracket(m, lNM(n, mp)));
        }
      }
    } else {
      const std::size_t i = t - nm;
      const Vector n = N.basis_vector(i);
      for (std::size_t j = 0; j < nm; ++j) {
        const Vector m = M.basis_vector(j);
        for (std::size_t k = 0; k < nn; ++k) {
          const Vector np = N.basis_vector(k);
          report("2", {i, j, k}, lMN(lNM(n, m), np), N.bracket(rMN(n, m), np));
          report("4", {i, j, k}, lMN(rNM(m, n), np), N.bracket(lMN(m, n), np));
          report("6", {i, j, k}, rMN(n, lNM(np, m)), N.bracket(n, rMN(np, m)));
          report("8", {i, j, k}, rMN(n, rNM(m, np)), N.bracket(n, lMN(m, np)));
        }
      }
    }
  });
  merge(rep, found);
  return rep;
}

MutualActions trivial_mutual(const HomLeibnizAlgebra& M, const HomLeibnizAlgebra& N) {
  return MutualActions{trivial_action(M, N), trivial_action(N, M)};
}

MutualActions bracket_mutual(const Subalgebra& M, const Subalgebra& N) {
  return MutualActions{bracket_action(M, N), bracket_action(N, M)};
}

MutualActions adjoint_mutual(const HomLeibnizAlgebra& L) {
  return MutualActions{adjoint_action(L), adjoint_action(L)};
}

SemidirectProduct semidirect(const HomAction& a) {
  require_valid(a);
  const auto& L = a.actor();
  const auto& M = a.target();
  const FieldSpec f = L.field();
  const std::size_t nm = M.dim(), nl = L.dim(), n = nm + nl;
  auto embed_m = [&](const Vector& v) { return concat(v, zero_vector(f, nl)); };
  auto embed_l = [&](const Vector& v) { return concat(zero_vector(f, nm), v); };
  auto split = [&](std::size_t i) {
    return i < nm ? std::make_pair(M.basis_vector(i), zero_vector(f, nl))
                  : std::make_pair(zero_vector(f, nm), L.basis_vector(i - nm));
  };
  Tensor3 t(f, n, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto [m1, l1] = split(i);
      auto [m2, l2] = split(j);
      Vector mpart = M.bracket(m1, m2);
      mpart = add(mpart, a.act_left(L.twist(l1), m2));
      mpart = add(mpart, a.act_right(m1, L.twist(l2)));
      t.set_slice(i, j, concat(mpart, L.bracket(l1, l2)));
    }
  Matrix al(f, n, n);
  for (std::size_t i = 0; i < nm; ++i)
    for (std::size_t r = 0; r < nm; ++r) al(r, i) = M.alpha_matrix()(r, i);
  for (std::size_t i = 0; i < nl; ++i)
    for (std::size_t r = 0; r < nl; ++r) al(nm + r, nm + i) = L.alpha_matrix()(r, i);
  HomLeibnizAlgebra K(f, disjoint_labels(M.labels(), L.labels()), std::move(t), std::move(al));

  std::vector<Vector> inj, sec, proj;
  for (std::size_t i = 0; i < nm; ++i) inj.push_back(embed_m(M.basis_vector(i)));
  for (std::size_t i = 0; i < nl; ++i) sec.push_back(embed_l(L.basis_vector(i)));
  for (std::size_t i = 0; i < n; ++i) proj.push_back(split(i).second);
  return SemidirectProduct{K, AlgebraHom(M, K, LinearMap::from_images(f, n, inj)),
                           AlgebraHom(K, L, LinearMap::from_images(f, nl, proj)),
                           AlgebraHom(L, K, LinearMap::from_images(f, n, sec))};
}

}  // namespace hlb
