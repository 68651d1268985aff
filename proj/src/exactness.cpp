#include "homleib/exactness.hpp"

#include "homleib/error.hpp"

namespace hlb {

Joint exact_at(const std::string& name, const LinearMap& in, const LinearMap& out) {
  if (in.codomain_dim() != out.domain_dim()) throw Error(Errc::DimensionError, "maps do not compose at " + name);
  Joint j;
  j.name = name;
  j.dim = in.codomain_dim();
  j.rank_in = in.rank();
  j.rank_out = out.rank();
  j.composite_zero = compose(out, in).matrix().is_zero();
  j.exact = j.composite_zero && j.rank_in + j.rank_out == j.dim;
  return j;
}

Joint surjective_onto(const std::string& name, const LinearMap& out) {
  Joint j;
  j.name = name;
  j.dim = out.codomain_dim();
  j.rank_in = out.rank();
  j.exact = j.rank_in == j.dim;
  return j;
}

bool ExactnessReport::ok() const {
  for (const auto& j : joints)
    if (!j.exact) return false;
  for (const auto& c : checks)
    if (!c.second) return false;
  return true;
}

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw Error(Errc::HypothesisNotMet, what);
}

}  // namespace

SnakeResult snake(const SnakeInput& in) {
  const auto& [f, g, i, p, a, b, c] = in;
  require(f.codomain_dim() == g.domain_dim() && i.codomain_dim() == p.domain_dim() &&
              a.domain_dim() == f.domain_dim() && a.codomain_dim() == i.domain_dim() &&
              b.domain_dim() == f.codomain_dim() && b.codomain_dim() == i.codomain_dim() &&
              c.domain_dim() == g.codomain_dim() && c.codomain_dim() == p.codomain_dim(),
          "diagram shapes are inconsistent");
  require(compose(b, f) == compose(i, a), "left square does not commute");
  require(compose(c, g) == compose(p, b), "right square does not commute");
  require(exact_at("B", f, g).exact, "top row is not exact at B");
  require(g.is_surjective(), "top right map is not surjective");
  require(i.is_injective(), "bottom left map is not injective");
  require(exact_at("B'", i, p).exact, "bottom row is not exact at B'");

  SnakeResult r;
  r.ker_a = kernel(a);
  r.ker_b = kernel(b);
  r.ker_c = kernel(c);
  r.coker_a = QuotientSpace(image(a));
  r.coker_b = QuotientSpace(image(b));
  r.coker_c = QuotientSpace(image(c));
  r.ker_f = restrict_map(f, r.ker_a, r.ker_b);
  r.ker_g = restrict_map(g, r.ker_b, r.ker_c);
  r.coker_i = induced_map(i, r.coker_a, r.coker_b);
  r.coker_p = induced_map(p, r.coker_b, r.coker_c);

  // delta(z): lift z through g, push through b into Im i, pull back along i.
  std::vector<Vector> cols;
  for (const auto& z : r.ker_c.basis_vectors()) {
    auto y = solve(g, z);
    if (!y) throw Error(Errc::InternalInconsistency, "kernel element has no preimage under a surjection");
    auto x = solve(i, b(*y));
    if (!x) throw Error(Errc::InternalInconsistency, "connecting element leaves the image of the injection");
    cols.push_back(r.coker_a.project(*x));
  }
  r.delta = LinearMap::from_images(a.field(), r.coker_a.dim(), cols);

  r.report.dims["Ker a"] = r.ker_a.dim();
  r.report.dims["Ker b"] = r.ker_b.dim();
  r.report.dims["Ker c"] = r.ker_c.dim();
  r.report.dims["Coker a"] = r.coker_a.dim();
  r.report.dims["Coker b"] = r.coker_b.dim();
  r.report.dims["Coker c"] = r.coker_c.dim();
  r.report.joints.push_back(exact_at("Ker b", r.ker_f, r.ker_g));
  r.report.joints.push_back(exact_at("Ker c", r.ker_g, r.delta));
  r.report.joints.push_back(exact_at("Coker a", r.delta, r.coker_i));
  r.report.joints.push_back(exact_at("Coker b", r.coker_i, r.coker_p));
  if (p.is_surjective()) r.report.joints.push_back(surjective_onto("Coker c", r.coker_p));
  return r;
}

}  // namespace hlb
