#pragma once

#include <gmpxx.h>

#include <string>

namespace orthoform {

// Exact rational scalar.  Every value passed around the library is kept in
// canonical form (lowest terms, positive denominator).
using Rat = mpq_class;

Rat rat(long num, long den = 1);

// Parses "p/q" or "p" (decimal digits, optional leading '-').  Throws
// ParseError on anything else, including a zero denominator.
Rat rat_parse(const std::string& text);

// Canonical fraction string: "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rat& r);

// Best rational approximation within eps, by continued-fraction expansion.
Rat rat_from_double(double x, double eps);

// Complex scalar with exact rational real and imaginary parts.
struct CRat {
  Rat re, im;

  CRat() : re(0), im(0) {}
  CRat(Rat r) : re(std::move(r)), im(0) {}  // NOLINT: implicit from Rat
  CRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  CRat(long r, long i) : re(r), im(i) {}

  static CRat unit_i() { return CRat(Rat(0), Rat(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  CRat conj() const { return CRat(re, -im); }

  CRat operator+(const CRat& o) const { return CRat(re + o.re, im + o.im); }
  CRat operator-(const CRat& o) const { return CRat(re - o.re, im - o.im); }
  CRat operator-() const { return CRat(-re, -im); }
  CRat operator*(const CRat& o) const {
    return CRat(re * o.re - im * o.im, re * o.im + im * o.re);
  }
  CRat operator*(const Rat& s) const { return CRat(re * s, im * s); }
  bool operator==(const CRat& o) const { return re == o.re && im == o.im; }
  bool operator!=(const CRat& o) const { return !(*this == o); }
};

// Debug/diagnostic rendering, e.g. "1/2+3i" or "-1".
std::string crat_str(const CRat& z);

}  // namespace orthoform
