#include "acx/scalar.hpp"

#include <stdexcept>

namespace acx {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in: '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& r) { return r.get_str(); }

bool rat_sqrt(const Rat& r, Rat* root) {
  if (r < 0) return false;
  const mpz_class num = r.get_num(), den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t()))
    return false;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  if (root) *root = Rat(sn, sd);
  return true;
}

Scalar::Scalar(long rn, long rd, long in, long id) : re(rn, rd), im(in, id) {
  re.canonicalize();
  im.canonicalize();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero Scalar");
  const Rat n = norm2();
  return Scalar(re / n, -im / n);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  const Rat r = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = r;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

std::string Scalar::str() const {
  if (im == 0) return rat_to_string(re);
  std::string istr;
  if (im == 1)
    istr = "i";
  else if (im == -1)
    istr = "-i";
  else
    istr = rat_to_string(im) + "i";
  if (re == 0) return istr;
  if (im > 0) return rat_to_string(re) + "+" + istr;
  return rat_to_string(re) + istr;
}

namespace {

// One summand of "a+bi": optional sign, optional rational, optional 'i'.
size_t parse_term(const std::string& s, size_t pos, Scalar* out) {
  size_t i = pos;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    neg = s[i] == '-';
    ++i;
  }
  size_t start = i;
  while (i < s.size() && (isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
  std::string digits = s.substr(start, i - start);
  bool imag = i < s.size() && s[i] == 'i';
  if (imag) ++i;
  if (digits.empty() && !imag)
    throw std::invalid_argument("bad complex literal: '" + s + "'");
  Rat mag = digits.empty() ? Rat(1) : rat_from_string(digits);
  if (neg) mag = -mag;
  *out = imag ? Scalar(Rat(0), mag) : Scalar(mag);
  return i;
}

}  // namespace

Scalar scalar_from_string(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty complex literal");
  Scalar acc;
  size_t pos = 0;
  while (pos < s.size()) {
    Scalar term;
    size_t next = parse_term(s, pos, &term);
    if (next == pos)
      throw std::invalid_argument("bad complex literal: '" + raw + "'");
    acc += term;
    pos = next;
  }
  return acc;
}

}  // namespace acx
