#include "addrep/numeric.hpp"

#include <sstream>

#include "addrep/errors.hpp"

namespace addrep {

BigInt factorial(std::uint64_t k) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

BigInt int_pow(const BigInt& base, std::uint64_t exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(),
             static_cast<unsigned long>(exponent));
  return out;
}

Rational make_rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw InputError("rational with zero denominator");
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

std::int64_t to_int64(const BigInt& value, const char* what) {
  if (!value.fits_slong_p()) {
    std::ostringstream msg;
    msg << what << " out of 64-bit range: " << value;
    throw InputError(msg.str());
  }
  return static_cast<std::int64_t>(value.get_si());
}

std::string rational_str(const Rational& q) {
  // canonical "p/q", or plain "p" when the denominator is 1
  return q.get_str();
}

double rational_double(const Rational& q) { return q.get_d(); }

}  // namespace addrep
