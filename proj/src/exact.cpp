#include "catpath/exact.hpp"

namespace catpath {

Rat make_rat(Int num, Int den) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  Rat q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

bool is_integer(const Rat& q) { return q.get_den() == 1; }

Int to_integer(const Rat& q) {
  if (!is_integer(q))
    throw std::domain_error("to_integer: " + to_fraction_string(q) +
                            " is not an integer");
  return q.get_num();
}

Int binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

std::string to_fraction_string(const Rat& q) {
  if (is_integer(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_decimal_string(const Rat& q, unsigned digits) {
  Int num = q.get_num();
  const Int& den = q.get_den();  // canonical: always positive
  const bool negative = num < 0;
  if (negative) num = -num;

  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  Int shifted = num * scale;
  Int quot, rem;
  mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), shifted.get_mpz_t(),
              den.get_mpz_t());
  // round half to even on the discarded remainder
  Int twice = rem * 2;
  const int c = cmp(twice, den);
  if (c > 0 || (c == 0 && mpz_odd_p(quot.get_mpz_t()))) quot += 1;

  Int int_part = quot / scale;
  Int frac_part = quot % scale;
  std::string out;
  if (negative && quot != 0) out += '-';
  out += int_part.get_str();
  if (digits > 0) {
    std::string frac = frac_part.get_str();
    out += '.';
    out.append(digits - frac.size(), '0');
    out += frac;
  }
  return out;
}

double to_double(const Rat& q) { return q.get_d(); }

}  // namespace catpath
