#include "leibniz/field.hpp"

#include <stdexcept>

namespace leibniz {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::gf(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("GF modulus must be prime: " + std::to_string(p));
  if (p > 257) throw std::invalid_argument("GF modulus above 257 is unsupported");
  return FieldSpec(p);
}

std::uint32_t FieldSpec::modulus() const {
  if (p_ == 0) throw std::logic_error("rationals have no modulus");
  return p_;
}

std::string FieldSpec::to_string() const {
  return p_ == 0 ? "Q" : "GF(" + std::to_string(p_) + ")";
}

namespace {

void require_same_field(const Scalar& a, const Scalar& b) {
  if (a.field() != b.field())
    throw std::invalid_argument("mixed-field operands: " + a.field().to_string() + " vs " +
                                b.field().to_string());
}

// Inverse mod p by extended Euclid; a must be nonzero mod p.
std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw std::domain_error("division by zero in GF(" + std::to_string(p) + ")");
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace

Scalar Scalar::zero(FieldSpec f) { return Scalar(f); }

Scalar Scalar::one(FieldSpec f) { return of_int(f, 1); }

Scalar Scalar::of_int(FieldSpec f, long long v) {
  Scalar s(f);
  if (f.is_finite()) {
    std::int64_t p = f.modulus();
    std::int64_t r = v % p;
    if (r < 0) r += p;
    s.r_ = static_cast<std::uint32_t>(r);
  } else {
    s.q_ = v;
  }
  return s;
}

Scalar Scalar::of_rational(const Rational& v) {
  Scalar s(FieldSpec::rationals());
  s.q_ = v;
  return s;
}

Scalar Scalar::of_residue(FieldSpec f, long long v) {
  if (!f.is_finite()) throw std::invalid_argument("of_residue needs a finite field");
  return of_int(f, v);
}

bool Scalar::is_zero() const { return f_.is_finite() ? r_ == 0 : q_.is_zero(); }

bool Scalar::is_one() const { return f_.is_finite() ? r_ == 1 : q_ == 1; }

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(*this, o);
  Scalar s(f_);
  if (f_.is_finite())
    s.r_ = (r_ + o.r_) % f_.modulus();
  else
    s.q_ = q_ + o.q_;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same_field(*this, o);
  Scalar s(f_);
  if (f_.is_finite())
    s.r_ = (r_ + f_.modulus() - o.r_) % f_.modulus();
  else
    s.q_ = q_ - o.q_;
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(*this, o);
  Scalar s(f_);
  if (f_.is_finite())
    s.r_ = static_cast<std::uint32_t>((std::uint64_t{r_} * o.r_) % f_.modulus());
  else
    s.q_ = q_ * o.q_;
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::operator-() const {
  Scalar s(f_);
  if (f_.is_finite())
    s.r_ = r_ == 0 ? 0 : f_.modulus() - r_;
  else
    s.q_ = -q_;
  return s;
}

Scalar Scalar::inv() const {
  Scalar s(f_);
  if (f_.is_finite()) {
    s.r_ = mod_inverse(r_, f_.modulus());
  } else {
    if (q_.is_zero()) throw std::domain_error("division by zero in Q");
    s.q_ = 1 / q_;
  }
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  require_same_field(*this, o);
  return f_.is_finite() ? r_ == o.r_ : q_ == o.q_;
}

bool Scalar::less(const Scalar& o) const {
  require_same_field(*this, o);
  return f_.is_finite() ? r_ < o.r_ : q_ < o.q_;
}

std::uint32_t Scalar::residue() const {
  if (!f_.is_finite()) throw std::logic_error("residue() on a rational scalar");
  return r_;
}

const Rational& Scalar::rational() const {
  if (f_.is_finite()) throw std::logic_error("rational() on a finite-field scalar");
  return q_;
}

std::string Scalar::str() const {
  if (f_.is_finite()) return std::to_string(r_);
  std::string s = numerator(q_).str();
  if (denominator(q_) != 1) s += "/" + denominator(q_).str();
  return s;
}

Scalar parse_scalar(std::string_view text, FieldSpec f) {
  // Grammar: -?digits(/digits)?
  auto fail = [&] { throw std::invalid_argument("malformed scalar: '" + std::string(text) + "'"); };
  if (text.empty()) fail();
  std::size_t pos = 0;
  bool neg = false;
  if (text[pos] == '-') {
    neg = true;
    ++pos;
  }
  auto scan_digits = [&](std::size_t start) {
    std::size_t i = start;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == start) fail();
    return i;
  };
  std::size_t num_end = scan_digits(pos);
  boost::multiprecision::cpp_int num(std::string(text.substr(pos, num_end - pos)));
  boost::multiprecision::cpp_int den = 1;
  if (num_end < text.size()) {
    if (text[num_end] != '/') fail();
    std::size_t den_end = scan_digits(num_end + 1);
    if (den_end != text.size()) fail();
    den = boost::multiprecision::cpp_int(std::string(text.substr(num_end + 1, den_end - num_end - 1)));
    if (den.is_zero()) throw std::domain_error("zero denominator in scalar: '" + std::string(text) + "'");
  }
  if (neg) num = -num;

  if (f.is_rationals()) return Scalar::of_rational(Rational(num, den));

  std::uint32_t p = f.modulus();
  auto reduce = [&](const boost::multiprecision::cpp_int& v) {
    boost::multiprecision::cpp_int r = v % p;
    if (r < 0) r += p;
    return static_cast<long long>(r);
  };
  Scalar a = Scalar::of_int(f, reduce(num));
  Scalar b = Scalar::of_int(f, reduce(den));
  if (b.is_zero())
    throw std::domain_error("denominator is 0 mod " + std::to_string(p) + " in '" + std::string(text) + "'");
  return a / b;
}

}  // namespace leibniz
