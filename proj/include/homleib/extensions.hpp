#pragma once

#include <cstdint>
#include <optional>

#include "homleib/exactness.hpp"
#include "homleib/tensor.hpp"

namespace hlb {

// Surjection pi: K -> L together with its kernel.
struct Extension {
  HomLeibnizAlgebra total;
  HomLeibnizAlgebra base;
  AlgebraHom proj;
  Subspace kernel;
};

// Throws NotSurjective; KernelMismatch when a given kernel differs from Ker(proj).
Extension make_extension(const AlgebraHom& proj, const std::optional<Subspace>& kernel = std::nullopt);

enum class ExtensionClass { Central, AlphaCentralOnly, Neither };
const char* to_string(ExtensionClass c);
ExtensionClass classify_extension(const Extension& e);

struct UniversalCentral {
  TensorProduct tensor;  // L*L with adjoint actions
  Extension extension;   // psi_L : L*L -> L
  std::size_t kernel_dim = 0;
};
// Throws NotPerfect.
UniversalCentral universal_central_extension(const HomLeibnizAlgebra& L);

// The unique f with proj_other o f = proj_universal, built from preimage choices
// drawn with the given seed. BaseMismatch, NotCentral.
AlgebraHom lift_against(const UniversalCentral& u, const Extension& other, std::uint64_t seed = 1);

struct UniversalAlphaCentral {
  Subalgebra alpha_image;  // alpha(L) inside L
  TensorProduct tensor;    // alpha(L) * alpha(L)
  Extension extension;     // psi : alpha(L)*alpha(L) -> L
  HomLeibnizAlgebra presentation;  // quotient of alpha(L) (x) alpha(L) by the three-term relations
  QuotientSpace presentation_space;
  AlgebraHom iso;          // u*v |-> u (x) v
  bool iso_bijective = false;
};
// Throws NotAlphaPerfect.
UniversalAlphaCentral universal_alpha_central_extension(const HomLeibnizAlgebra& L);

// Ker(L*M -> L) -> HL2(L) -> HL2(L/M) -> M/[L,M] -> 0, certified by ranks.
// Throws NotPerfect.
ExactnessReport six_term_check(const HomLeibnizAlgebra& L, const IdealHandle& I);

}  // namespace hlb
