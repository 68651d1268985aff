// Acceptance gate: one PASS/FAIL line per criterion. All comparisons are exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "homleib/cli.hpp"
#include "homleib/document.hpp"
#include "homleib/extensions.hpp"
#include "homleib/instances.hpp"
#include "homleib/parallel.hpp"

using namespace hlb;
namespace I = hlb::instances;

namespace {

const std::string kData = HOMLEIB_DATA_DIR;

struct Outcome {
  bool ok = true;
  Json report = Json::object();
  void need(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      report["failed"].push_back(what);
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_s;  // 0: no runtime bound
  std::function<Outcome()> run;
};

// Fixed seeds for the randomized criteria.
constexpr std::uint64_t kCorepSeed = 20;
constexpr std::uint64_t kTrivialSeed = 400;
const std::vector<std::uint64_t> kIdealSeeds = {1, 2};

std::vector<CoRepresentation> criterion2_instances() {
  std::vector<CoRepresentation> cs = {adjoint_corep(I::e1()), trivial_corep(I::sl2())};
  for (std::uint64_t s = 0; s < 20; ++s) {
    I::Generator g(kCorepSeed + s);
    cs.push_back(g.corep());
  }
  return cs;
}

Outcome axiom_gate() {
  Outcome o;
  const auto L = I::e1();
  const auto rep = validate_algebra(L);
  o.need(rep.ok(), "E1 validates");
  o.need(!rep.flags.at("hom_lie"), "E1 is not hom-lie");
  Tensor3 t = L.structure();
  t(0, 1, 0) = Scalar(L.field(), 1);
  const auto bad = validate_algebra(HomLeibnizAlgebra(L.field(), L.labels(), t, L.alpha_matrix()));
  o.need(!bad.ok() && !bad.violations.empty(), "perturbation rejected");
  o.report["e1_valid"] = rep.ok();
  o.report["e1_hom_lie"] = rep.flags.at("hom_lie");
  if (!bad.violations.empty()) {
    o.report["perturbed_rule"] = bad.violations.front().rule;
    o.report["perturbed_witness"] = bad.violations.front().witness;
  }
  return o;
}

Outcome complex_property() {
  Outcome o;
  std::size_t i = 0;
  for (const auto& c : criterion2_instances()) {
    o.need(validate_corep(c).ok(), "instance " + std::to_string(i) + " valid");
    const auto bad = first_nonzero_square(build_complex(c, 4));
    o.need(!bad, "d^2 = 0 on instance " + std::to_string(i));
    o.report["instances"].push_back(Json{{"dim_L", c.algebra().dim()}, {"dim_M", c.dim()}, {"d2_zero", !bad}});
    ++i;
  }
  return o;
}

Outcome closed_forms() {
  Outcome o;
  std::size_t i = 0;
  for (const auto& c : criterion2_instances()) {
    const auto& L = c.algebra();
    const std::size_t hl0 = homology_dims(c, 0)[0];
    const std::size_t hl1 = homology_dims(trivial_corep(L), 1)[1];
    const std::size_t hl0_cf = hl0_closed_form(c), hl1_cf = L.dim() - L.derived().dim();
    o.need(hl0 == hl0_cf, "HL0 closed form on instance " + std::to_string(i));
    o.need(hl1 == hl1_cf, "HL1 closed form on instance " + std::to_string(i));
    o.report["instances"].push_back(Json{{"hl0", hl0}, {"hl0_closed", hl0_cf}, {"hl1", hl1}, {"hl1_closed", hl1_cf}});
    ++i;
  }
  return o;
}

Outcome trivial_decomposition() {
  Outcome o;
  for (std::uint64_t s = 0; s < 10; ++s) {
    I::Generator g(kTrivialSeed + s);
    const auto M = g.algebra(true), N = g.algebra(true);
    o.need(M.alpha().is_surjective() && N.alpha().is_surjective(), "surjective twists");
    const auto t = build_tensor(trivial_mutual(M, N));
    const std::size_t expect = 2 * (M.dim() - M.derived().dim()) * (N.dim() - N.derived().dim());
    o.need(t.algebra().dim() == expect, "dimension formula, pair " + std::to_string(s));
    o.need(is_abelian(t.algebra()), "abelian, pair " + std::to_string(s));
    o.report["pairs"].push_back(Json{{"dim_M", M.dim()}, {"dim_N", N.dim()}, {"dim", t.algebra().dim()}, {"expected", expect}});
  }
  return o;
}

Outcome tensor_battery() {
  Outcome o;
  auto check = [&](const std::string& name, const TensorProduct& t) {
    const auto rep = tensor_property_battery(t);
    o.need(rep.ok(), name + " battery");
    o.need(rep.rules.size() == 22, name + " runs every rule");
    o.report[name] = Json{{"dim", t.algebra().dim()}, {"rules", rep.rules.size()}, {"holds", rep.ok()}};
  };
  check("E1*E1", tensor_square(I::e1()));
  for (auto s : kIdealSeeds) {
    I::Generator g(s);
    const auto ma = g.ideal_pair();
    o.need(check_compatible(ma).ok(), "compatible ideal pair");
    check("ideal_pair_" + std::to_string(s), build_tensor(ma));
  }
  return o;
}

Outcome uce() {
  Outcome o;
  for (const auto& [name, L] : {std::pair{"sl2", I::sl2()}, std::pair{"twisted_sl2", I::twisted_sl2()}}) {
    const auto u = universal_central_extension(L);
    const auto cls = classify_extension(u.extension);
    const bool perfect = predicates(u.extension.total).perfect;
    const std::size_t hl2 = homology(trivial_corep(L), 2).dim;
    o.need(cls == ExtensionClass::Central, std::string(name) + " central");
    o.need(perfect, std::string(name) + " L*L perfect");
    o.need(u.kernel_dim == hl2, std::string(name) + " Ker psi = HL2");
    o.report[name] = Json{{"class", to_string(cls)}, {"perfect", perfect}, {"kernel_dim", u.kernel_dim}, {"hl2", hl2}};
  }
  return o;
}

Outcome sl2_square_homology() {
  Outcome o;
  const auto K = tensor_square(I::sl2()).algebra();
  const auto dims = homology_dims(trivial_corep(K), 2);
  o.need(dims[1] == 0, "HL1(K) = 0");
  o.need(dims[2] == 0, "HL2(K) = 0");
  o.report["dim_K"] = K.dim();
  o.report["hl"] = dims;
  return o;
}

Outcome alpha_uce() {
  Outcome o;
  const auto u = universal_alpha_central_extension(I::twisted_sl2());
  o.need(u.tensor.algebra().dim() == u.presentation.dim(), "equal dimension");
  o.need(u.iso_bijective, "generator map bijective");
  o.need(!AlgebraHom::check(u.iso.source(), u.iso.target(), u.iso.map()).has_value(), "generator map is a homomorphism");
  o.report["tensor_dim"] = u.tensor.algebra().dim();
  o.report["presentation_dim"] = u.presentation.dim();
  o.report["bijective"] = u.iso_bijective;
  return o;
}

Outcome six_term() {
  Outcome o;
  const auto L = I::sl2_sum();
  const auto f = L.field();
  const IdealHandle first(L, Subspace::span(f, 6, {L.basis_vector(0), L.basis_vector(1), L.basis_vector(2)}));
  for (const auto& [name, I] : {std::pair{"first_summand", first}, std::pair{"zero", IdealHandle::zero(L)},
                                std::pair{"whole", IdealHandle::whole(L)}}) {
    const auto rep = six_term_check(L, I);
    o.need(rep.ok(), std::string(name) + " exact");
    Json ranks = Json::array();
    for (const auto& j : rep.joints) ranks.push_back(Json{{"at", j.name}, {"dim", j.dim}, {"exact", j.exact}});
    o.report[name] = ranks;
  }
  return o;
}

Outcome hochschild() {
  Outcome o;
  const auto rep = sequence_check(I::upper_triangular());
  o.need(rep.ok(), "upper-triangular certificate");
  o.need(rep.joints.size() == 5, "five joints");
  o.report["upper_triangular_joints"] = rep.joints.size();
  for (const auto& [name, A] : {std::pair{"dual_numbers", I::dual_numbers()}, std::pair{"zero_product", I::zero_product()}}) {
    const auto h = first_homologies(A);
    o.need(validate_homassoc(A).flags.at("commutative"), std::string(name) + " commutative");
    o.need(h.hh1_alpha_dim == h.hh1_milnor_dim, std::string(name) + " HH1 = HH1^M");
    o.report[name] = Json{{"hh1", h.hh1_alpha_dim}, {"hh1_milnor", h.hh1_milnor_dim}};
  }
  return o;
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> cs = {
      {1, "axiom gate", 1, axiom_gate},
      {2, "d^2 = 0 for n <= 4", 30, complex_property},
      {3, "HL0 and HL1 closed forms", 0, closed_forms},
      {4, "trivial-action decomposition", 0, trivial_decomposition},
      {5, "tensor well-definedness and property battery", 60, tensor_battery},
      {6, "universal central extension", 60, uce},
      {7, "HL1 = HL2 = 0 for sl2*sl2", 300, sl2_square_homology},
      {8, "alpha-uce presentation", 0, alpha_uce},
      {9, "six-term sequence", 0, six_term},
      {10, "Hochschild sequence", 60, hochschild},
  };
  return cs;
}

Outcome guarded(const Criterion& c) {
  try {
    return c.run();
  } catch (const Error& e) {
    Outcome o;
    o.ok = false;
    o.report["error"] = e.what();
    return o;
  }
}

std::string all_reports() {
  Json j = Json::object();
  for (const auto& c : criteria()) j[std::to_string(c.id)] = guarded(c).report;
  return j.dump();
}

std::string cli_json(std::vector<std::string> args, const std::string& threads) {
  args.push_back("--json");
  args.push_back("--threads");
  args.push_back(threads);
  std::ostringstream out, err;
  cli::run_command(args, out, err);
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  const bool verbose = argc > 1 && std::string(argv[1]) == "--verbose";
  using clock = std::chrono::steady_clock;
  int failures = 0;
  {
    par::ModeGuard g(par::Mode::Parallel, 4);
    for (const auto& c : criteria()) {
      const auto t0 = clock::now();
      const Outcome o = guarded(c);
      const double s = std::chrono::duration<double>(clock::now() - t0).count();
      const bool in_time = c.limit_s == 0 || s < c.limit_s;
      const bool pass = o.ok && in_time;
      failures += !pass;
      std::string note;
      if (!o.ok || verbose) note = " " + o.report.dump();
      if (!in_time) note += " exceeded " + std::to_string(c.limit_s) + " s";
      std::printf("%s %2d %s (%.2f s%s)%s\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(), s,
                  c.limit_s > 0 ? (" < " + std::to_string(static_cast<int>(c.limit_s)) + " s").c_str() : "",
                  note.c_str());
    }
  }

  // Determinism: library reports across runs and execution modes, and the
  // CLI --json reports for the same constructions across thread counts.
  const auto t0 = clock::now();
  std::string a, b, c, d;
  {
    par::ModeGuard g(par::Mode::Parallel, 4);
    a = all_reports();
    b = all_reports();
  }
  {
    par::ModeGuard g(par::Mode::Serial, 1);
    c = all_reports();
  }
  {
    par::ModeGuard g(par::Mode::Parallel, 2);
    d = all_reports();
  }
  bool same = a == b && a == c && a == d;
  const std::vector<std::vector<std::string>> cmds = {
      {"validate", kData + "/e1.json"},
      {"homology", kData + "/e1_adjoint_corep.json", "--max-n", "4"},
      {"homology", kData + "/sl2.json", "--coeffs", "trivial", "--max-n", "4"},
      {"tensor", kData + "/e1.json"},
      {"uce", kData + "/sl2.json"},
      {"uce", kData + "/twisted_sl2.json"},
      {"uce-alpha", kData + "/twisted_sl2.json"},
      {"six-term", kData + "/sl2_sum.json", "--ideal", "e_1,h_1,f_1"},
      {"six-term", kData + "/sl2_sum.json", "--ideal", "0"},
      {"six-term", kData + "/sl2_sum.json", "--ideal", "all"},
      {"sequence-check", kData + "/upper_triangular.json"},
      {"hh1", kData + "/dual_numbers.json"},
      {"hh1", kData + "/zero_product.json"},
      {"check-all", "--seed", "7"},
  };
  std::size_t compared = 0;
  for (const auto& cmd : cmds) {
    const std::string r1 = cli_json(cmd, "1");
    same = same && !r1.empty() && r1 == cli_json(cmd, "1") && r1 == cli_json(cmd, "2") && r1 == cli_json(cmd, "4");
    ++compared;
  }
  const double s = std::chrono::duration<double>(clock::now() - t0).count();
  failures += !same;
  std::printf("%s %2d determinism across runs and thread counts (%.2f s; %zu CLI reports, 4 library passes)\n",
              same ? "PASS" : "FAIL", 11, s, compared);

  std::printf("%s\n", failures == 0 ? "all criteria pass" : (std::to_string(failures) + " criteria fail").c_str());
  return failures == 0 ? 0 : 1;
}
