#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hlb {

enum class Errc {
  FieldMismatch,
  DimensionError,
  NotWellDefined,
  StructureError,
  ParentMismatch,
  NotAnIdeal,
  NotAlphaStable,
  NotSubalgebra,
  NotEndomorphism,
  NotHomomorphism,
  InvalidAlgebra,
  InvalidAction,
  IncompatibleActions,
  BracketNotWellDefined,
  NotEquivariant,
  HypothesisNotMet,
  NotSurjective,
  KernelMismatch,
  NotPerfect,
  NotAlphaPerfect,
  BaseMismatch,
  NotCentral,
  AlphaIdentityFails,
  InternalInconsistency,
  ParseError,
  SemanticError,
};

std::string_view errc_name(Errc c);

// Raised for every failure the library can detect. `witness` names the basis
// tuple or element that exhibits the failure, when there is one.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, std::string witness = {});

  Errc code() const noexcept { return code_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  Errc code_;
  std::string witness_;
};

}  // namespace hlb
