#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace pph {

// Exact rational scalar used throughout the library. All weights, filtration
// values, diagram coordinates and linear algebra run over Q; no floating
// point enters any computed value.
using Rat = mpq_class;

// Parses "3", "-0.25" or "7/2". Decimal literals become exact decimal
// fractions (0.25 -> 1/4). Returns nullopt on any malformed token; no
// exponents, no floating-point fallback.
std::optional<Rat> try_parse_rational(const std::string& token);

// Throwing variant of try_parse_rational.
Rat parse_rational(const std::string& token);

// Canonical text form: exact decimal when the reduced denominator is
// 2^a*5^b ("0.5", "3", "-1.25"), otherwise "p/q" in lowest terms. The
// output always parses back to the same rational.
std::string rational_to_string(const Rat& value);

// Rational from an unsigned 32-bit numerator over 2^32.
Rat rational_u32_over_2pow32(std::uint64_t numerator);

}  // namespace pph
