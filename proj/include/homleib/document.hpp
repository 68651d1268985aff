#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include <json.hpp>

#include "homleib/actions.hpp"
#include "homleib/homassoc.hpp"
#include "homleib/homology.hpp"

namespace hlb {

using Json = nlohmann::ordered_json;

// Syntax errors become ParseError with "line L, column C"; the source name is
// prefixed when given.
Json read_json(const std::string& text, const std::string& source = "");
Json read_json_file(const std::filesystem::path& path);

struct AlgebraDocument {
  std::string kind;  // "hom-leibniz", "leibniz" or "hom-associative"
  FieldSpec field;
  HomLeibnizAlgebra leibniz;       // unless hom-associative
  HomAssociativeAlgebra associative;  // hom-associative only
  bool is_associative() const { return kind == "hom-associative"; }
};

struct ActionDocument {
  HomAction action;
};

struct MutualDocument {
  MutualActions actions;
};

struct CorepDocument {
  CoRepresentation corep;
};

using Document = std::variant<AlgebraDocument, ActionDocument, MutualDocument, CorepDocument>;

// References to other documents ("actor", "target", "algebra", ...) may be
// inline objects or paths resolved against base_dir. Semantic problems raise
// SemanticError naming the JSON location.
Document parse_document(const Json& j, const std::filesystem::path& base_dir = ".");
Document load_document(const std::filesystem::path& path);
// Same, with every scalar reinterpreted over the given field.
Document parse_document_over(const Json& j, FieldSpec f, const std::filesystem::path& base_dir = ".");

AlgebraDocument parse_algebra(const Json& j, const std::filesystem::path& base_dir = ".");

// Dense matrix of scalar strings.
Matrix matrix_from_json(const Json& j, FieldSpec f, std::size_t rows, std::size_t cols);

Json field_to_json(FieldSpec f);
Json to_json(const HomLeibnizAlgebra& L, const std::string& kind = "hom-leibniz");
Json to_json(const HomAssociativeAlgebra& A);
Json to_json(const HomAction& a);
Json to_json(const CoRepresentation& c);
Json matrix_to_json(const Matrix& m);
Json vector_to_json(const Vector& v);

}  // namespace hlb
