#include "orthoform/rational.hpp"

#include <cmath>
#include <cstdint>
#include <limits>

#include "orthoform/errors.hpp"

namespace orthoform {

Rat rat(long num, long den) {
  if (den == 0) throw ParseError("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool all_digits(const std::string& s, size_t from, size_t to) {
  if (from >= to) return false;
  for (size_t i = from; i < to; ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

bool valid_integer(const std::string& s, size_t from, size_t to) {
  if (from < to && s[from] == '-') ++from;
  return all_digits(s, from, to);
}

}  // namespace

Rat rat_parse(const std::string& text) {
  size_t slash = text.find('/');
  bool ok = false;
  if (slash == std::string::npos) {
    ok = valid_integer(text, 0, text.size());
  } else {
    ok = valid_integer(text, 0, slash) &&
         valid_integer(text, slash + 1, text.size());
  }
  if (!ok) throw ParseError("not a fraction: '" + text + "'");
  Rat r(text);
  if (r.get_den() == 0)
    throw ParseError("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

Rat rat_from_double(double x, double eps) {
  if (!(eps > 0)) throw ParseError("float tolerance must be positive");
  if (!std::isfinite(x)) throw ParseError("non-finite float input");

  bool neg = x < 0;
  double v = neg ? -x : x;

  // Continued-fraction convergents p_k/q_k of v until within eps.
  mpz_class p_prev(1), q_prev(0);
  mpz_class p(static_cast<long>(std::floor(v))), q(1);
  double frac = v - std::floor(v);
  for (int iter = 0; iter < 64; ++iter) {
    Rat approx(p, q);
    approx.canonicalize();
    if (std::fabs(approx.get_d() - v) <= eps) break;
    if (frac <= 0) break;
    double inv = 1.0 / frac;
    if (inv > 1e18) break;
    double a = std::floor(inv);
    frac = inv - a;
    mpz_class ai(static_cast<long>(a));
    mpz_class p_next = ai * p + p_prev;
    mpz_class q_next = ai * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
  }
  Rat r(p, q);
  r.canonicalize();
  return neg ? Rat(-r) : r;
}

std::string crat_str(const CRat& z) {
  if (z.is_zero()) return "0";
  std::string out;
  if (z.re != 0) out += rat_str(z.re);
  if (z.im != 0) {
    if (!out.empty() && z.im > 0) out += "+";
    if (z.im == -1)
      out += "-";
    else if (z.im != 1)
      out += rat_str(z.im);
    out += "i";
  }
  return out;
}

}  // namespace orthoform
