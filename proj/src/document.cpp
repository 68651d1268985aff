#include "homleib/document.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "homleib/error.hpp"

namespace hlb {

namespace fs = std::filesystem;

Json read_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') ++line, col = 1;
      else ++col;
    }
    std::string msg = e.what();
    if (auto p = msg.find(": "); p != std::string::npos) msg = msg.substr(p + 2);
    throw Error(Errc::ParseError, (source.empty() ? "" : source + ":") + "line " + std::to_string(line) +
                                      ", column " + std::to_string(col) + ": " + msg);
  }
}

Json read_json_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return read_json(ss.str(), path.string());
}

namespace {

struct Ctx {
  std::optional<FieldSpec> field_override;
  fs::path base;
};

[[noreturn]] void semantic(const std::string& where, const std::string& what) {
  throw Error(Errc::SemanticError, (where.empty() ? "/" : where) + ": " + what);
}

std::string bare(const Error& e) {
  std::string m = e.what();
  const std::string prefix = std::string(errc_name(e.code())) + ": ";
  return m.rfind(prefix, 0) == 0 ? m.substr(prefix.size()) : m;
}

const Json& member(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) semantic(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) semantic(where, "missing member '" + key + "'");
  return *it;
}

FieldSpec parse_field(const Json& j, const std::string& where) {
  if (j.is_string() && j.get<std::string>() == "Q") return FieldSpec::rationals();
  if (j.is_object() && j.contains("Fp") && j["Fp"].is_number_integer()) {
    const auto p = j["Fp"].get<std::int64_t>();
    if (p <= 0) semantic(where + "/Fp", "characteristic must be an odd prime below 2^31");
    try {
      return FieldSpec::prime(static_cast<std::uint64_t>(p));
    } catch (const Error& e) {
      semantic(where + "/Fp", bare(e));
    }
  }
  semantic(where, "field must be \"Q\" or {\"Fp\": p}");
}

Scalar parse_scalar(const Json& j, FieldSpec f, const std::string& where) {
  std::string text;
  if (j.is_string()) text = j.get<std::string>();
  else if (j.is_number_integer()) text = std::to_string(j.get<std::int64_t>());
  else semantic(where, "scalar must be a string \"a\" or \"a/b\"");
  try {
    return Scalar::parse(f, text);
  } catch (const Error& e) {
    semantic(where, bare(e));
  }
}

std::vector<std::string> parse_labels(const Json& j, const std::string& where) {
  if (!j.is_array()) semantic(where, "basis must be an array of labels");
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) semantic(where + "/" + std::to_string(i), "label must be a string");
    auto s = j[i].get<std::string>();
    if (!seen.insert(s).second) semantic(where + "/" + std::to_string(i), "duplicate label '" + s + "'");
    out.push_back(std::move(s));
  }
  return out;
}

std::size_t index_of(const std::vector<std::string>& labels, const Json& j, const std::string& where) {
  if (!j.is_string()) semantic(where, "expected a basis label");
  const auto s = j.get<std::string>();
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == s) return i;
  semantic(where, "unknown label '" + s + "'");
}

Matrix parse_matrix(const Json& j, FieldSpec f, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array() || j.size() != rows) semantic(where, "expected " + std::to_string(rows) + " rows");
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string w = where + "/" + std::to_string(r);
    if (!j[r].is_array() || j[r].size() != cols) semantic(w, "expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = parse_scalar(j[r][c], f, w + "/" + std::to_string(c));
  }
  return m;
}

// Sparse list [{<a>: label, <b>: label, "value": {label: scalar}}] into t(a, b, :).
void parse_sparse(const Json& j, FieldSpec f, const std::string& ka, const std::vector<std::string>& la,
                  const std::string& kb, const std::vector<std::string>& lb, const std::vector<std::string>& lv,
                  Tensor3& t, const std::string& where) {
  if (!j.is_array()) semantic(where, "expected a list of entries");
  for (std::size_t e = 0; e < j.size(); ++e) {
    const std::string w = where + "/" + std::to_string(e);
    const std::size_t a = index_of(la, member(j[e], ka, w), w + "/" + ka);
    const std::size_t b = index_of(lb, member(j[e], kb, w), w + "/" + kb);
    const Json& val = member(j[e], "value", w);
    if (!val.is_object()) semantic(w + "/value", "value must map labels to scalars");
    for (auto it = val.begin(); it != val.end(); ++it) {
      const std::size_t k = index_of(lv, Json(it.key()), w + "/value/" + it.key());
      t(a, b, k) += parse_scalar(it.value(), f, w + "/value/" + it.key());
    }
  }
}

std::pair<Json, fs::path> resolve(const Json& ref, const Ctx& ctx, const std::string& where) {
  if (ref.is_object()) return {ref, ctx.base};
  if (ref.is_string()) {
    fs::path p = ctx.base / ref.get<std::string>();
    if (!fs::exists(p)) semantic(where, "referenced file " + p.string() + " does not exist");
    return {read_json_file(p), p.parent_path()};
  }
  semantic(where, "expected an inline document or a file path");
}

Document parse_any(const Json& j, const Ctx& ctx);

AlgebraDocument parse_algebra_ctx(const Json& j, const Ctx& ctx) {
  AlgebraDocument d;
  d.kind = j.contains("kind") ? j["kind"].get<std::string>() : "hom-leibniz";
  if (d.kind != "hom-leibniz" && d.kind != "leibniz" && d.kind != "hom-associative")
    semantic("/kind", "unknown kind '" + d.kind + "'");
  d.field = ctx.field_override ? *ctx.field_override : parse_field(member(j, "field", ""), "/field");
  const auto labels = parse_labels(member(j, "basis", ""), "/basis");
  const std::size_t n = labels.size();
  if (j.contains("dim") && (!j["dim"].is_number_integer() || j["dim"].get<std::int64_t>() != static_cast<std::int64_t>(n)))
    semantic("/dim", "dim does not match the number of basis labels");
  Matrix alpha = Matrix::identity(d.field, n);
  if (j.contains("alpha")) {
    if (d.kind == "leibniz") semantic("/alpha", "a leibniz document has alpha = id; use hom-leibniz");
    alpha = parse_matrix(j["alpha"], d.field, n, n, "/alpha");
  }
  Tensor3 t(d.field, n, n, n);
  const std::string key = d.is_associative() ? "product" : "bracket";
  if (j.contains(key)) parse_sparse(j[key], d.field, "left", labels, "right", labels, labels, t, "/" + key);
  if (d.is_associative())
    d.associative = HomAssociativeAlgebra(d.field, labels, std::move(t), std::move(alpha));
  else
    d.leibniz = HomLeibnizAlgebra(d.field, labels, std::move(t), std::move(alpha));
  return d;
}

HomLeibnizAlgebra ref_algebra(const Json& j, const std::string& key, const Ctx& ctx) {
  auto [doc, base] = resolve(member(j, key, ""), ctx, "/" + key);
  AlgebraDocument a = parse_algebra_ctx(doc, Ctx{ctx.field_override, base});
  if (a.is_associative()) return to_leibniz(a.associative);
  return a.leibniz;
}

HomAction parse_action_ctx(const Json& j, const Ctx& ctx) {
  HomLeibnizAlgebra L = ref_algebra(j, "actor", ctx);
  HomLeibnizAlgebra M = ref_algebra(j, "target", ctx);
  if (!(L.field() == M.field())) semantic("/", "actor and target live over different fields");
  const FieldSpec f = L.field();
  Tensor3 left(f, L.dim(), M.dim(), M.dim()), right(f, M.dim(), L.dim(), M.dim());
  if (j.contains("left")) parse_sparse(j["left"], f, "actor", L.labels(), "target", M.labels(), M.labels(), left, "/left");
  if (j.contains("right"))
    parse_sparse(j["right"], f, "target", M.labels(), "actor", L.labels(), M.labels(), right, "/right");
  return HomAction(L, M, std::move(left), std::move(right));
}

Document parse_any(const Json& j, const Ctx& ctx) {
  if (!j.is_object()) semantic("/", "document must be a JSON object");
  const std::string kind = j.contains("kind") && j["kind"].is_string() ? j["kind"].get<std::string>() : "hom-leibniz";
  if (kind == "action") return ActionDocument{parse_action_ctx(j, ctx)};
  if (kind == "mutual") {
    auto [n, bn] = resolve(member(j, "on_N", ""), ctx, "/on_N");
    auto [m, bm] = resolve(member(j, "on_M", ""), ctx, "/on_M");
    HomAction on_N = parse_action_ctx(n, Ctx{ctx.field_override, bn});
    HomAction on_M = parse_action_ctx(m, Ctx{ctx.field_override, bm});
    try {
      return MutualDocument{make_mutual(std::move(on_N), std::move(on_M))};
    } catch (const Error& e) {
      semantic("/", e.what());
    }
  }
  if (kind == "corep") {
    HomLeibnizAlgebra L = ref_algebra(j, "algebra", ctx);
    const FieldSpec f = L.field();
    const auto labels = parse_labels(member(j, "basis", ""), "/basis");
    const std::size_t k = labels.size();
    Matrix alpha = j.contains("alpha") ? parse_matrix(j["alpha"], f, k, k, "/alpha") : Matrix::identity(f, k);
    Tensor3 left(f, L.dim(), k, k), right(f, k, L.dim(), k);
    if (j.contains("left")) parse_sparse(j["left"], f, "actor", L.labels(), "target", labels, labels, left, "/left");
    if (j.contains("right"))
      parse_sparse(j["right"], f, "target", labels, "actor", L.labels(), labels, right, "/right");
    return CorepDocument{CoRepresentation(L, std::move(alpha), std::move(left), std::move(right))};
  }
  return parse_algebra_ctx(j, ctx);
}

Json sparse_to_json(const Tensor3& t, const std::string& ka, const std::vector<std::string>& la,
                    const std::string& kb, const std::vector<std::string>& lb, const std::vector<std::string>& lv) {
  Json out = Json::array();
  for (std::size_t a = 0; a < t.extent(0); ++a)
    for (std::size_t b = 0; b < t.extent(1); ++b) {
      Json val = Json::object();
      for (std::size_t k = 0; k < t.extent(2); ++k)
        if (!t(a, b, k).is_zero()) val[lv[k]] = t(a, b, k).str();
      if (!val.empty()) out.push_back(Json{{ka, la[a]}, {kb, lb[b]}, {"value", val}});
    }
  return out;
}

}  // namespace

// Library errors raised while building objects from a document are input
// problems from the caller's point of view.
template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == Errc::ParseError || e.code() == Errc::SemanticError) throw;
    throw Error(Errc::SemanticError, e.what(), e.witness());
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::SemanticError, e.what());
  }
}

Document parse_document(const Json& j, const fs::path& base_dir) {
  return guarded([&] { return parse_any(j, Ctx{std::nullopt, base_dir}); });
}

Document parse_document_over(const Json& j, FieldSpec f, const fs::path& base_dir) {
  return guarded([&] { return parse_any(j, Ctx{f, base_dir}); });
}

Document load_document(const fs::path& path) {
  return parse_document(read_json_file(path), path.parent_path().empty() ? fs::path(".") : path.parent_path());
}

AlgebraDocument parse_algebra(const Json& j, const fs::path& base_dir) {
  return guarded([&] { return parse_algebra_ctx(j, Ctx{std::nullopt, base_dir}); });
}

Matrix matrix_from_json(const Json& j, FieldSpec f, std::size_t rows, std::size_t cols) {
  return parse_matrix(j, f, rows, cols, "");
}

Json field_to_json(FieldSpec f) {
  if (f.is_rational()) return "Q";
  return Json{{"Fp", f.characteristic()}};
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    out.push_back(row);
  }
  return out;
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s.str());
  return out;
}

Json to_json(const HomLeibnizAlgebra& L, const std::string& kind) {
  Json j;
  j["field"] = field_to_json(L.field());
  j["kind"] = kind;
  j["dim"] = L.dim();
  j["basis"] = L.labels();
  j["bracket"] = sparse_to_json(L.structure(), "left", L.labels(), "right", L.labels(), L.labels());
  if (kind != "leibniz") j["alpha"] = matrix_to_json(L.alpha_matrix());
  return j;
}

Json to_json(const HomAssociativeAlgebra& A) {
  Json j;
  j["field"] = field_to_json(A.field());
  j["kind"] = "hom-associative";
  j["dim"] = A.dim();
  j["basis"] = A.labels();
  j["product"] = sparse_to_json(A.product(), "left", A.labels(), "right", A.labels(), A.labels());
  j["alpha"] = matrix_to_json(A.alpha_matrix());
  return j;
}

Json to_json(const HomAction& a) {
  const auto& L = a.actor();
  const auto& M = a.target();
  Json j;
  j["kind"] = "action";
  j["actor"] = to_json(L);
  j["target"] = to_json(M);
  j["left"] = sparse_to_json(a.left(), "actor", L.labels(), "target", M.labels(), M.labels());
  j["right"] = sparse_to_json(a.right(), "target", M.labels(), "actor", L.labels(), M.labels());
  return j;
}

Json to_json(const CoRepresentation& c) {
  const auto& L = c.algebra();
  const auto labels = HomLeibnizAlgebra::default_labels(c.dim(), "m");
  Json j;
  j["kind"] = "corep";
  j["algebra"] = to_json(L);
  j["basis"] = labels;
  j["alpha"] = matrix_to_json(c.alpha_matrix());
  j["left"] = sparse_to_json(c.left(), "actor", L.labels(), "target", labels, labels);
  j["right"] = sparse_to_json(c.right(), "target", labels, "actor", L.labels(), labels);
  return j;
}

}  // namespace hlb
