#pragma once

#include <gmpxx.h>

#include <string>

namespace fairdiv {

// Exact rational number, always in canonical reduced form when built through
// the helpers below. All solver arithmetic goes through this type; no
// floating point is used anywhere in the library.
using Rat = mpq_class;

// num/den in canonical form. Throws PreconditionError when den == 0.
Rat make_rat(long num, long den = 1);

// Accepts an optionally signed integer literal ("42", "-3") or a "p/q" pair
// ("2/3", "-1/2"). Throws ParseError on anything else.
Rat parse_rat(const std::string& text);

// Canonical text form: "p" when the denominator is 1, "p/q" otherwise.
std::string format_rat(const Rat& value);

// floor(a / b) for b > 0 as a machine integer.
// Throws CapacityError when the quotient does not fit a long.
long floor_quotient(const Rat& a, const Rat& b);

// ceil(a) as a machine integer, same overflow rule.
long ceil_to_long(const Rat& a);

}  // namespace fairdiv
