#include "fairdiv/rational.hpp"

#include <cctype>

#include "fairdiv/errors.hpp"

namespace fairdiv {

namespace {

bool is_integer_literal(const std::string& s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

long mpz_to_long(const mpz_class& z, const char* what) {
  if (!z.fits_slong_p()) {
    throw CapacityError(std::string(what) + " does not fit a machine integer: " +
                        z.get_str());
  }
  return z.get_si();
}

}  // namespace

Rat make_rat(long num, long den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(const std::string& text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_literal(text)) {
      throw ParseError("not a rational literal: '" + text + "'");
    }
    return Rat(mpz_class(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den)) {
    throw ParseError("not a rational literal: '" + text + "'");
  }
  mpz_class d(den);
  if (d == 0) throw ParseError("zero denominator in rational: '" + text + "'");
  Rat r(mpz_class(num), d);
  r.canonicalize();
  return r;
}

std::string format_rat(const Rat& value) {
  return value.get_str();  // "p" or "p/q", canonical
}

long floor_quotient(const Rat& a, const Rat& b) {
  if (b <= 0) throw PreconditionError("floor_quotient needs a positive divisor");
  const Rat q = a / b;
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return mpz_to_long(f, "floor quotient");
}

long ceil_to_long(const Rat& a) {
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
  return mpz_to_long(c, "ceiling");
}

}  // namespace fairdiv
