#include <doctest.h>

#include <functional>

#include "homleib/document.hpp"
#include "homleib/instances.hpp"

using namespace hlb;
namespace I = hlb::instances;

namespace {

const std::string kData = HOMLEIB_DATA_DIR;

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no exception");
  return Errc::InternalInconsistency;
}

const char* kE1 = R"({
  "field": "Q",
  "kind": "hom-leibniz",
  "dim": 2,
  "basis": ["e1", "e2"],
  "bracket": [{"left": "e2", "right": "e2", "value": {"e1": "1"}}],
  "alpha": [["1", "1"], ["0", "1"]]
})";

}  // namespace

TEST_SUITE("document") {

TEST_CASE("E1 document parses and validates") {
  const auto d = parse_algebra(read_json(kE1));
  CHECK(d.kind == "hom-leibniz");
  CHECK(d.leibniz == I::e1());
  CHECK(validate_algebra(d.leibniz).ok());
}

TEST_CASE("data files load") {
  CHECK(std::get<AlgebraDocument>(load_document(kData + "/e1.json")).leibniz == I::e1());
  CHECK(std::get<AlgebraDocument>(load_document(kData + "/sl2.json")).leibniz == I::sl2());
  CHECK(std::get<AlgebraDocument>(load_document(kData + "/twisted_sl2.json")).leibniz == I::twisted_sl2());
  const auto m = std::get<MutualDocument>(load_document(kData + "/sl2_adjoint_mutual.json"));
  CHECK(m.actions.on_N.left() == adjoint_action(I::sl2()).left());
  const auto c = std::get<CorepDocument>(load_document(kData + "/e1_adjoint_corep.json"));
  CHECK(c.corep.left() == adjoint_corep(I::e1()).left());
  const auto a = std::get<AlgebraDocument>(load_document(kData + "/gl2.json"));
  CHECK(a.is_associative());
  CHECK(a.associative.product() == I::matrices2().product());
}

TEST_CASE("round trip of algebras") {
  for (auto f : {FieldSpec::rationals(), FieldSpec::prime(101)}) {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
      I::Generator g(seed, f);
      const auto L = g.algebra();
      const auto back = parse_algebra(read_json(to_json(L).dump()));
      CHECK(back.field == f);
      CHECK(back.leibniz.structure() == L.structure());
      CHECK(back.leibniz.alpha_matrix() == L.alpha_matrix());
      CHECK(back.leibniz.labels() == L.labels());
    }
  }
  const auto A = I::upper_triangular();
  const auto back = parse_algebra(read_json(to_json(A).dump()));
  CHECK(back.associative.product() == A.product());
  CHECK(back.associative.alpha_matrix() == A.alpha_matrix());
}

TEST_CASE("round trip of actions and co-representations") {
  const auto a = adjoint_action(I::twisted_sl2());
  const auto da = std::get<ActionDocument>(parse_document(read_json(to_json(a).dump())));
  CHECK(da.action.left() == a.left());
  CHECK(da.action.right() == a.right());
  I::Generator g(7);
  const auto c = g.corep();
  const auto dc = std::get<CorepDocument>(parse_document(read_json(to_json(c).dump())));
  CHECK(dc.corep.left() == c.left());
  CHECK(dc.corep.right() == c.right());
  CHECK(dc.corep.alpha_matrix() == c.alpha_matrix());
}

TEST_CASE("serialization is deterministic") {
  CHECK(to_json(I::sl2()).dump() == to_json(I::sl2()).dump());
  CHECK(to_json(I::e1()).dump() == read_json(kE1).dump());
}

TEST_CASE("semantic errors") {
  auto with = [](const std::string& key, const std::string& value) {
    Json j = read_json(kE1);
    j[key] = read_json(value);
    return j;
  };
  CHECK(code_of([&] { parse_document(with("alpha", R"([["1/0","0"],["0","1"]])")); }) == Errc::SemanticError);
  CHECK(code_of([&] { parse_document(with("field", R"({"Fp": 2})")); }) == Errc::SemanticError);
  CHECK(code_of([&] { parse_document(with("field", R"({"Fp": 15})")); }) == Errc::SemanticError);
  CHECK(code_of([&] { parse_document(with("basis", R"(["a","a"])")); }) == Errc::SemanticError);
  CHECK(code_of([&] {
          parse_document(with("bracket", R"([{"left":"e3","right":"e2","value":{"e1":"1"}}])"));
        }) == Errc::SemanticError);
  CHECK(code_of([&] { parse_document(with("dim", "3")); }) == Errc::SemanticError);
  CHECK(code_of([&] { parse_document(with("kind", "\"lie\"")); }) == Errc::SemanticError);
  CHECK(code_of([&] { parse_document(with("alpha", R"([["1"]])")); }) == Errc::SemanticError);
}

TEST_CASE("error messages name the location") {
  Json j = read_json(kE1);
  j["alpha"] = read_json(R"([["1","1/0"],["0","1"]])");
  try {
    parse_document(j);
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("/alpha/0/1") != std::string::npos);
  }
  try {
    read_json("{\n  \"field\": \"Q\",\n  \"basis\": [1,}\n", "x.json");
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
    CHECK(std::string(e.what()).find("x.json:line 3") != std::string::npos);
  }
}

TEST_CASE("reparsing over a prime field") {
  const auto d = std::get<AlgebraDocument>(parse_document_over(read_json(kE1), FieldSpec::prime(2147483647)));
  CHECK(d.field == FieldSpec::prime(2147483647));
  CHECK(validate_algebra(d.leibniz).ok());
  CHECK(code_of([&] {
          parse_document_over(to_json(I::twisted_sl2(FieldSpec::rationals(), 3)), FieldSpec::prime(3));
        }) == Errc::SemanticError);
}

TEST_CASE("leibniz kind defaults alpha to the identity") {
  const auto d = parse_algebra(read_json(R"({"field":"Q","kind":"leibniz","basis":["x","y"],
    "bracket":[{"left":"x","right":"y","value":{"x":"1"}},{"left":"y","right":"x","value":{"x":"-1"}}]})"));
  CHECK(d.leibniz.alpha_matrix() == Matrix::identity(FieldSpec::rationals(), 2));
  CHECK(validate_algebra(d.leibniz).ok());
}

}  // TEST_SUITE
