#pragma once
/// Exact rational scalars backed by GMP.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hominduce {

/// Field element; mpq_class keeps values canonical (lowest terms, positive denominator).
using Scalar = mpq_class;

/// Renders as "p/q", always with an explicit denominator.
std::string to_string(const Scalar& x);

/// Accepts "p/q" or "p"; throws hominduce::Error(InvalidInput) on malformed text or zero denominator.
Scalar parse_scalar(std::string_view text);

/// (-1)^e as a Scalar.
inline Scalar sign_of(long e) { return (e & 1) ? Scalar(-1) : Scalar(1); }

inline bool is_zero(const Scalar& x) { return sgn(x) == 0; }

}  // namespace hominduce
