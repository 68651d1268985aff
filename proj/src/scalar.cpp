#include "homleib/scalar.hpp"

#include <cctype>

#include "homleib/error.hpp"

namespace hlb {

std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::DimensionError: return "DimensionError";
    case Errc::NotWellDefined: return "NotWellDefined";
    case Errc::StructureError: return "StructureError";
    case Errc::ParentMismatch: return "ParentMismatch";
    case Errc::NotAnIdeal: return "NotAnIdeal";
    case Errc::NotAlphaStable: return "NotAlphaStable";
    case Errc::NotSubalgebra: return "NotSubalgebra";
    case Errc::NotEndomorphism: return "NotEndomorphism";
    case Errc::NotHomomorphism: return "NotHomomorphism";
    case Errc::InvalidAlgebra: return "InvalidAlgebra";
    case Errc::InvalidAction: return "InvalidAction";
    case Errc::IncompatibleActions: return "IncompatibleActions";
    case Errc::BracketNotWellDefined: return "BracketNotWellDefined";
    case Errc::NotEquivariant: return "NotEquivariant";
    case Errc::HypothesisNotMet: return "HypothesisNotMet";
    case Errc::NotSurjective: return "NotSurjective";
    case Errc::KernelMismatch: return "KernelMismatch";
    case Errc::NotPerfect: return "NotPerfect";
    case Errc::NotAlphaPerfect: return "NotAlphaPerfect";
    case Errc::BaseMismatch: return "BaseMismatch";
    case Errc::NotCentral: return "NotCentral";
    case Errc::AlphaIdentityFails: return "AlphaIdentityFails";
    case Errc::InternalInconsistency: return "InternalInconsistency";
    case Errc::ParseError: return "ParseError";
    case Errc::SemanticError: return "SemanticError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message, std::string witness)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message),
      code_(code),
      witness_(std::move(witness)) {}

bool is_odd_prime(std::uint64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (1ull << 31) || !is_odd_prime(p))
    throw Error(Errc::SemanticError, "characteristic " + std::to_string(p) +
                                         " is not an odd prime below 2^31");
  return FieldSpec(static_cast<std::uint32_t>(p));
}

std::string FieldSpec::name() const {
  return p_ ? "GF(" + std::to_string(p_) + ")" : "Q";
}

namespace {

std::uint64_t reduce_mod(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return r.get_ui();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint32_t p) {
  // a^(p-2) by square-and-multiply
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

bool parse_integer(std::string_view s, mpz_class& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  if (i == s.size()) return false;
  for (std::size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  std::string digits(s.substr(i));
  out.set_str(digits, 10);
  if (s[0] == '-') out = -out;
  return true;
}

}  // namespace

Scalar::Scalar(FieldSpec f, long n) : p_(f.characteristic()) {
  if (p_)
    r_ = reduce_mod(mpz_class(n), p_);
  else
    q_ = n;
}

Scalar::Scalar(FieldSpec f, long num, long den) : Scalar(f, num) {
  *this /= Scalar(f, den);
}

Scalar Scalar::parse(FieldSpec f, std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  mpz_class num, den = 1;
  auto slash = text.find('/');
  bool ok = slash == std::string_view::npos
                ? parse_integer(text, num)
                : parse_integer(text.substr(0, slash), num) &&
                      parse_integer(text.substr(slash + 1), den) &&
                      text[slash + 1] != '-' && text[slash + 1] != '+';
  if (!ok) throw Error(Errc::SemanticError, "malformed scalar \"" + std::string(text) + "\"");
  if (den == 0) throw Error(Errc::SemanticError, "zero denominator in \"" + std::string(text) + "\"");
  Scalar s(f);
  if (f.is_rational()) {
    s.q_ = mpq_class(num, den);
    s.q_.canonicalize();
  } else {
    std::uint64_t d = reduce_mod(den, s.p_);
    if (d == 0)
      throw Error(Errc::SemanticError,
                  "denominator of \"" + std::string(text) + "\" vanishes in " + f.name());
    s.r_ = reduce_mod(num, s.p_) * inv_mod(d, s.p_) % s.p_;
  }
  return s;
}

FieldSpec Scalar::field() const {
  return p_ ? FieldSpec::prime(p_) : FieldSpec::rationals();
}

void Scalar::check(const Scalar& o) const {
  if (p_ != o.p_)
    throw Error(Errc::FieldMismatch, "scalars from " + field().name() + " and " + o.field().name());
}

Scalar Scalar::operator-() const {
  Scalar s(*this);
  if (p_)
    s.r_ = r_ ? p_ - r_ : 0;
  else
    mpq_neg(s.q_.get_mpq_t(), q_.get_mpq_t());
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check(o);
  if (p_) {
    r_ += o.r_;
    if (r_ >= p_) r_ -= p_;
  } else {
    q_ += o.q_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check(o);
  if (p_)
    r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + p_ - o.r_;
  else
    q_ -= o.q_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check(o);
  if (p_)
    r_ = r_ * o.r_ % p_;
  else
    q_ *= o.q_;
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(Errc::DimensionError, "division by zero");
  Scalar s(*this);
  if (p_)
    s.r_ = inv_mod(r_, p_);
  else
    mpq_inv(s.q_.get_mpq_t(), q_.get_mpq_t());
  return s;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check(o);
  return *this *= o.inverse();
}

void Scalar::sub_mul(const Scalar& a, const Scalar& b) {
  check(a);
  check(b);
  if (p_) {
    std::uint64_t t = a.r_ * b.r_ % p_;
    r_ = r_ >= t ? r_ - t : r_ + p_ - t;
  } else {
    thread_local mpq_class tmp;
    mpq_mul(tmp.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
    mpq_sub(q_.get_mpq_t(), q_.get_mpq_t(), tmp.get_mpq_t());
  }
}

void Scalar::add_mul(const Scalar& a, const Scalar& b) {
  check(a);
  check(b);
  if (p_) {
    r_ = (r_ + a.r_ * b.r_ % p_) % p_;
  } else {
    thread_local mpq_class tmp;
    mpq_mul(tmp.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
    mpq_add(q_.get_mpq_t(), q_.get_mpq_t(), tmp.get_mpq_t());
  }
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check(b);
  return a.p_ ? a.r_ == b.r_ : a.q_ == b.q_;
}

std::string Scalar::str() const {
  return p_ ? std::to_string(r_) : q_.get_str();
}

}  // namespace hlb
