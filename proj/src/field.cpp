#include "ntrans/field.hpp"

#include <stdexcept>

namespace ntrans {

namespace {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Inverse of a modulo p (p prime, a not divisible by p), via extended Euclid.
long mod_inverse(long a, long p) {
  long t = 0, new_t = 1;
  long r = p, new_r = a % p;
  if (new_r < 0) new_r += p;
  while (new_r != 0) {
    long q = r / new_r;
    long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("element has no inverse mod p");
  if (t < 0) t += p;
  return t;
}

}  // namespace

Field Field::gf(long prime) {
  if (!is_prime(prime)) throw std::invalid_argument("field gf requires a prime, got " + std::to_string(prime));
  return Field{prime};
}

std::string Field::to_string() const {
  return is_rational() ? "rational" : "gf " + std::to_string(p);
}

Scalar::Scalar(const Field& f, long value) : v_(value), p_(f.p) { reduce_(); }

Scalar::Scalar(const Field& f, const mpq_class& value) : v_(value), p_(f.p) { reduce_(); }

void Scalar::reduce_() {
  if (p_ == 0) return;
  // A rational with denominator not divisible by p embeds into GF(p).
  mpz_class num = v_.get_num(), den = v_.get_den();
  mpz_class m(p_);
  mpz_class dm = den % m;
  if (dm < 0) dm += m;
  if (dm == 0) throw std::domain_error("denominator divisible by field characteristic");
  mpz_class nm = num % m;
  if (nm < 0) nm += m;
  long n = mpz_get_si(nm.get_mpz_t());
  long d = mpz_get_si(dm.get_mpz_t());
  long r = (d == 1) ? n : (n * mod_inverse(d, p_)) % p_;
  v_ = r;
}

void Scalar::check_same_(const Scalar& o) const {
  if (p_ != o.p_) throw std::logic_error("scalar arithmetic across different fields");
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  r.v_ = -r.v_;
  r.reduce_();
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_(o);
  Scalar r(*this);
  r.v_ += o.v_;
  r.reduce_();
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_(o);
  Scalar r(*this);
  r.v_ -= o.v_;
  r.reduce_();
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_(o);
  Scalar r(*this);
  r.v_ *= o.v_;
  r.reduce_();
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same_(o);
  if (o.is_zero()) throw std::domain_error("division by zero");
  Scalar r(*this);
  if (p_ == 0) {
    r.v_ /= o.v_;
  } else {
    long inv = mod_inverse(o.v_.get_num().get_si(), p_);
    r.v_ *= inv;
    r.reduce_();
  }
  return r;
}

std::optional<Scalar> Scalar::parse(const Field& f, const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::size_t slash = text.find('/');
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  try {
    if (slash == std::string::npos) {
      if (!is_int(text)) return std::nullopt;
      return Scalar(f, mpq_class(mpz_class(text)));
    }
    std::string num = text.substr(0, slash), den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) return std::nullopt;
    mpz_class d(den);
    if (d == 0) return std::nullopt;
    mpq_class q(mpz_class(num), d);
    q.canonicalize();
    return Scalar(f, q);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::string Scalar::to_string() const { return v_.get_str(); }

}  // namespace ntrans
