#include "modfun/scalar.hpp"

#include <ostream>

#include "modfun/errors.hpp"

namespace modfun {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw DomainError("division by zero in F_" + std::to_string(p));
  return pow_mod(a, p - 2, p);
}

std::uint64_t mpz_mod(const mpz_class& z, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Scalar::Scalar(mpq_class value) : q_(std::move(value)) { q_.canonicalize(); }

Scalar Scalar::residue(std::int64_t value, std::uint64_t p) {
  if (p < 2) throw InputError("prime field modulus must be at least 2");
  Scalar s;
  s.modulus_ = p;
  const auto m = static_cast<std::int64_t>(p);
  std::int64_t r = value % m;
  if (r < 0) r += m;
  s.residue_ = static_cast<std::uint64_t>(r);
  return s;
}

std::uint64_t Scalar::reduce_rational(const mpq_class& q, std::uint64_t p) {
  const std::uint64_t num = mpz_mod(q.get_num(), p);
  const std::uint64_t den = mpz_mod(q.get_den(), p);
  if (den == 0) {
    throw InputError("rational with denominator divisible by " + std::to_string(p));
  }
  return mul_mod(num, inv_mod(den, p), p);
}

std::uint64_t Scalar::unify(const Scalar& other) {
  if (modulus_ == other.modulus_) return modulus_;
  if (other.modulus_ == 0) return modulus_;
  if (modulus_ == 0) {
    residue_ = reduce_rational(q_, other.modulus_);
    modulus_ = other.modulus_;
    q_ = 0;
    return modulus_;
  }
  throw InputError("scalars from different prime fields F_" + std::to_string(modulus_) +
                   " and F_" + std::to_string(other.modulus_));
}

bool Scalar::is_zero() const { return modulus_ == 0 ? sgn(q_) == 0 : residue_ == 0; }

bool Scalar::is_one() const { return modulus_ == 0 ? q_ == 1 : residue_ == 1 % modulus_; }

const mpq_class& Scalar::rational() const {
  if (modulus_ != 0) throw DomainError("scalar is not rational");
  return q_;
}

std::uint64_t Scalar::residue_value() const {
  if (modulus_ == 0) throw DomainError("scalar is not a residue");
  return residue_;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (modulus_ == 0) {
    r.q_ = -q_;
  } else {
    r.residue_ = residue_ == 0 ? 0 : modulus_ - residue_;
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  Scalar r = *this;
  if (modulus_ == 0) {
    r.q_ = 1 / q_;
    r.q_.canonicalize();
  } else {
    r.residue_ = inv_mod(residue_, modulus_);
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  const std::uint64_t p = unify(rhs);
  if (p == 0) {
    q_ += rhs.q_;
  } else {
    const std::uint64_t b = rhs.modulus_ == 0 ? reduce_rational(rhs.q_, p) : rhs.residue_;
    residue_ = (residue_ + b) % p;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  const std::uint64_t p = unify(rhs);
  if (p == 0) {
    q_ *= rhs.q_;
  } else {
    const std::uint64_t b = rhs.modulus_ == 0 ? reduce_rational(rhs.q_, p) : rhs.residue_;
    residue_ = mul_mod(residue_, b, p);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.modulus_ == b.modulus_) {
    return a.modulus_ == 0 ? a.q_ == b.q_ : a.residue_ == b.residue_;
  }
  Scalar x = a;
  x.unify(b);
  const std::uint64_t rb = b.modulus_ == 0 ? Scalar::reduce_rational(b.q_, x.modulus_) : b.residue_;
  return x.residue_ == rb;
}

std::string Scalar::to_string() const {
  if (modulus_ != 0) return std::to_string(residue_);
  return q_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32U) || !is_prime(p)) {
    throw InputError("prime field characteristic must be a prime below 2^32, got " +
                     std::to_string(p));
  }
  return {Kind::PrimeField, p};
}

Scalar FieldSpec::zero() const { return from_int(0); }

Scalar FieldSpec::one() const { return from_int(1); }

Scalar FieldSpec::from_int(std::int64_t v) const {
  if (is_rational()) return Scalar(mpq_class(static_cast<long>(v)));
  return Scalar::residue(v, characteristic);
}

Scalar FieldSpec::from_rational(const mpq_class& q) const {
  Scalar s(q);
  if (is_rational()) return s;
  return coerce(s);
}

Scalar FieldSpec::coerce(const Scalar& s) const {
  if (is_rational()) {
    if (!s.is_rational()) throw InputError("cannot map a residue into the rationals");
    return s;
  }
  if (!s.is_rational()) {
    if (s.modulus() != characteristic) throw InputError("scalar from a different prime field");
    return s;
  }
  Scalar r = zero();
  r += s;
  return r;
}

Scalar FieldSpec::parse(std::string_view text) const {
  std::string t(text);
  while (!t.empty() && t.front() == ' ') t.erase(t.begin());
  while (!t.empty() && t.back() == ' ') t.pop_back();
  auto valid_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  const auto slash = t.find('/');
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
    throw InputError("malformed scalar \"" + t + "\"");
  }
  if (num[0] == '+') num.erase(num.begin());
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw InputError("zero denominator in scalar \"" + t + "\"");
  return from_rational(mpq_class(n, d));
}

}  // namespace modfun
