#include "bibdopt/integer.hpp"

#include "bibdopt/errors.hpp"

namespace bibdopt {

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  Rational q(value);
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer parse_integer(std::string_view text) {
  Integer out;
  if (text.empty() || out.set_str(std::string(text), 10) != 0)
    throw ValidationError("not an integer: '" + std::string(text) + "'");
  return out;
}

Integer ceil(const Rational& value) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

Integer ceil_root(const Integer& value, unsigned long n) {
  if (value <= 0) return 0;
  Integer root;
  const bool exact = mpz_root(root.get_mpz_t(), value.get_mpz_t(), n) != 0;
  if (!exact) root += 1;
  return root;
}

}  // namespace bibdopt
