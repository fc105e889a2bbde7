#include "modfun/upoly.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "modfun/errors.hpp"

namespace modfun {

namespace {
void trim(std::vector<Scalar>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}
}  // namespace

UPoly::UPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(c_); }

UPoly UPoly::constant(const Scalar& c) { return UPoly(std::vector<Scalar>{c}); }

UPoly UPoly::monomial(std::size_t k, const Scalar& c) {
  std::vector<Scalar> v(k + 1, c - c);
  v[k] = c;
  return UPoly(std::move(v));
}

Scalar UPoly::lead() const {
  if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return c_.back();
}

UPoly UPoly::monic() const {
  if (c_.empty()) return *this;
  return lead().inverse() * *this;
}

UPoly UPoly::derivative() const {
  std::vector<Scalar> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(Scalar(static_cast<long>(i)) * c_[i]);
  return UPoly(std::move(d));
}

Scalar UPoly::evaluate(const Scalar& x) const {
  Scalar acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::operator-() const { return Scalar(-1) * *this; }

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(c));
}

UPoly operator*(const Scalar& s, const UPoly& a) {
  std::vector<Scalar> c = a.c_;
  for (auto& x : c) x *= s;
  return UPoly(std::move(c));
}

bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

std::string UPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k].is_zero()) continue;
    std::string s = c_[k].to_string();
    const bool neg = s[0] == '-';
    if (neg) s.erase(s.begin());
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (k == 0 || s != "1") os << s;
    if (k > 0) os << (k == 0 || s != "1" ? "*" : "") << var;
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Scalar> r = a.coeffs();
  const auto& bc = b.coeffs();
  if (r.size() < bc.size()) return {UPoly(), a};
  std::vector<Scalar> q(r.size() - bc.size() + 1);
  const Scalar inv = b.lead().inverse();
  for (std::size_t shift = q.size(); shift-- > 0;) {
    const Scalar f = r[shift + bc.size() - 1] * inv;
    q[shift] = f;
    if (!f.is_zero()) {
      for (std::size_t j = 0; j < bc.size(); ++j) r[shift + j] -= f * bc[j];
    }
  }
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a;
  UPoly y = b;
  while (!y.is_zero()) {
    UPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::optional<UPoly> inverse_mod(const UPoly& a, const UPoly& m) {
  // Extended Euclid tracking only the coefficient of a.
  UPoly r0 = m;
  UPoly r1 = a % m;
  UPoly s0;
  UPoly s1 = UPoly::constant(Scalar(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    UPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) return std::nullopt;
  return (r0.lead().inverse() * s0) % m;
}

namespace {

std::vector<Factor> squarefree(const UPoly& f, std::uint64_t p);

// p-th root of a polynomial whose derivative vanishes (only x^{kp} terms).
UPoly pth_root(const UPoly& f, std::uint64_t p) {
  std::vector<Scalar> c;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) c.push_back(f.coeffs()[i]);
  return UPoly(std::move(c));
}

// f monic; returns (g, i) with f = prod g_i^i, g_i squarefree and coprime.
std::vector<Factor> squarefree(const UPoly& f, std::uint64_t p) {
  std::vector<Factor> out;
  if (f.degree() < 1) return out;
  UPoly c = gcd(f, f.derivative());
  UPoly w = divmod(f, c).first;
  int i = 1;
  while (!w.is_one()) {
    UPoly y = gcd(w, c);
    UPoly fac = divmod(w, y).first;
    if (fac.degree() > 0) out.push_back({fac.monic(), i});
    w = std::move(y);
    c = divmod(c, w).first;
    ++i;
  }
  if (c.degree() > 0) {
    if (p == 0) throw InvariantViolation("squarefree decomposition left a factor in characteristic 0");
    for (auto& [g, m] : squarefree(pth_root(c, p).monic(), p)) {
      out.push_back({g, m * static_cast<int>(p)});
    }
  }
  return out;
}

UPoly mulmod(const UPoly& a, const UPoly& b, const UPoly& m) { return (a * b) % m; }

UPoly powmod(UPoly base, const mpz_class& e, const UPoly& m) {
  UPoly result = UPoly::constant(Scalar(1)) % m;
  base = base % m;
  const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t k = bits; k-- > 0;) {
    result = mulmod(result, result, m);
    if (mpz_tstbit(e.get_mpz_t(), k)) result = mulmod(result, base, m);
  }
  return result;
}

Scalar residue(std::uint64_t v, std::uint64_t p) { return Scalar::residue(static_cast<std::int64_t>(v % p), p); }

// Distinct-degree factorization of a squarefree monic f over F_p.
std::vector<std::pair<UPoly, int>> distinct_degree(UPoly f, std::uint64_t p) {
  std::vector<std::pair<UPoly, int>> out;
  const UPoly x = UPoly::monomial(1, residue(1, p));
  UPoly h = x % f;
  int i = 1;
  while (f.degree() >= 2 * i) {
    h = powmod(h, mpz_class(static_cast<unsigned long>(p)), f);
    UPoly g = gcd(f, h - x);
    if (!g.is_one()) {
      out.emplace_back(g, i);
      f = divmod(f, g).first;
      h = h % f;
    }
    ++i;
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

void equal_degree(const UPoly& g, int d, std::uint64_t p, std::mt19937_64& rng,
                  std::vector<UPoly>& out) {
  if (g.degree() == d) {
    out.push_back(g.monic());
    return;
  }
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  for (;;) {
    std::vector<Scalar> c(static_cast<std::size_t>(g.degree()));
    for (auto& s : c) s = residue(rng(), p);
    const UPoly a(std::move(c));
    if (a.degree() < 1) continue;
    UPoly b;
    if (p == 2) {
      // Trace map a + a^2 + ... + a^(2^(d-1)).
      UPoly t = a % g;
      b = t;
      for (int k = 1; k < d; ++k) {
        t = mulmod(t, t, g);
        b = b + t;
      }
    } else {
      b = powmod(a, e, g) - UPoly::constant(residue(1, p));
    }
    UPoly u = gcd(g, b);
    if (u.degree() > 0 && u.degree() < g.degree()) {
      equal_degree(u, d, p, rng, out);
      equal_degree(divmod(g, u).first, d, p, rng, out);
      return;
    }
  }
}

// ---- rationals

using ZPoly = std::vector<mpz_class>;

// Primitive integer polynomial with positive leading coefficient.
ZPoly to_primitive(const UPoly& f) {
  mpz_class den = 1;
  for (const auto& c : f.coeffs()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den_mpz_t());
  }
  ZPoly z;
  mpz_class g = 0;
  for (const auto& c : f.coeffs()) {
    mpq_class v = c.rational() * den;
    z.push_back(v.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
  }
  for (auto& c : z) c /= g;
  if (z.back() < 0) {
    for (auto& c : z) c = -c;
  }
  return z;
}

UPoly from_z(const ZPoly& z) {
  std::vector<Scalar> c;
  for (const auto& v : z) c.emplace_back(mpq_class(v));
  return UPoly(std::move(c));
}

mpz_class eval_z(const ZPoly& f, const mpz_class& x) {
  mpz_class acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Positive divisors of |n| for n != 0; nullopt when n is too large to factor.
std::optional<std::vector<mpz_class>> divisors(mpz_class n) {
  n = abs(n);
  if (n > mpz_class("1000000000000")) return std::nullopt;
  std::vector<std::pair<mpz_class, int>> primes;
  for (mpz_class d = 2; d * d <= n; ++d) {
    int k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    if (k > 0) primes.emplace_back(d, k);
  }
  if (n > 1) primes.emplace_back(n, 1);
  std::vector<mpz_class> out{1};
  for (const auto& [q, k] : primes) {
    const std::size_t base = out.size();
    mpz_class pw = 1;
    for (int e = 1; e <= k; ++e) {
      pw *= q;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pw);
    }
  }
  return out;
}

// Kronecker's method on a squarefree primitive integer polynomial.
void kronecker(const ZPoly& f, std::vector<UPoly>& out) {
  const int n = static_cast<int>(f.size()) - 1;
  const UPoly fq = from_z(f);
  for (int k = 1; 2 * k <= n; ++k) {
    std::vector<mpz_class> xs;
    std::vector<std::vector<mpz_class>> divs;
    for (long t = 0; static_cast<int>(xs.size()) < k + 1 && t < 200; ++t) {
      const mpz_class x = (t % 2 == 0) ? mpz_class(t / 2) : mpz_class(-(t + 1) / 2);
      const mpz_class v = eval_z(f, x);
      if (v == 0) {
        // Integer root: a linear factor.
        out.push_back(UPoly(std::vector<Scalar>{Scalar(mpq_class(-x)), Scalar(1)}));
        const UPoly rest = divmod(fq, out.back()).first;
        if (rest.degree() > 0) kronecker(to_primitive(rest), out);
        return;
      }
      auto d = divisors(v);
      if (!d) continue;
      xs.push_back(x);
      divs.push_back(std::move(*d));
    }
    if (static_cast<int>(xs.size()) < k + 1) throw GuardError("factorization values too large");
    // Sign of g(x_0) fixed positive; other signs free.
    std::vector<std::size_t> idx(xs.size(), 0);
    std::vector<int> sign(xs.size(), 1);
    std::uint64_t tried = 0;
    std::function<bool(std::size_t, std::vector<mpz_class>&)> search =
        [&](std::size_t pos, std::vector<mpz_class>& vals) -> bool {
      if (pos == xs.size()) {
        if (++tried > 4000000) throw GuardError("factorization search space exceeded");
        // Lagrange interpolation over Q.
        std::vector<Scalar> g(static_cast<std::size_t>(k) + 1);
        for (std::size_t i = 0; i < xs.size(); ++i) {
          UPoly basis = UPoly::constant(Scalar(mpq_class(vals[i])));
          for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis = basis * UPoly(std::vector<Scalar>{Scalar(mpq_class(-xs[j])), Scalar(1)});
            basis = Scalar(mpq_class(1, 1) / mpq_class(xs[i] - xs[j])) * basis;
          }
          for (std::size_t c = 0; c < basis.coeffs().size(); ++c) g[c] += basis.coeffs()[c];
        }
        const UPoly cand(std::move(g));
        if (cand.degree() != k) return false;
        auto [q, r] = divmod(fq, cand);
        if (!r.is_zero()) return false;
        kronecker(to_primitive(cand), out);
        kronecker(to_primitive(q), out);
        return true;
      }
      for (const auto& dv : divs[pos]) {
        for (int s : {1, -1}) {
          if (pos == 0 && s < 0) continue;
          vals.push_back(s > 0 ? dv : mpz_class(-dv));
          if (search(pos + 1, vals)) return true;
          vals.pop_back();
        }
      }
      return false;
    };
    std::vector<mpz_class> vals;
    if (search(0, vals)) return;
  }
  out.push_back(fq.monic());
}

bool factor_less(const Factor& a, const Factor& b) {
  if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
  const auto& x = a.factor.coeffs();
  const auto& y = b.factor.coeffs();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == y[i]) continue;
    if (x[i].is_rational()) return x[i].rational() < y[i].rational();
    return x[i].residue_value() < y[i].residue_value();
  }
  return a.multiplicity < b.multiplicity;
}

}  // namespace

std::vector<Factor> factor_univariate(const UPoly& p, const FieldSpec& field, std::uint64_t seed) {
  if (p.is_zero()) throw DomainError("cannot factor the zero polynomial");
  const std::uint64_t ch = field.characteristic;
  UPoly f(std::vector<Scalar>(p.coeffs().begin(), p.coeffs().end()));
  if (ch != 0) {
    std::vector<Scalar> c;
    for (const auto& s : p.coeffs()) c.push_back(field.coerce(s));
    f = UPoly(std::move(c));
  } else if (f.degree() > kRationalFactorDegreeGuard) {
    throw GuardError("degree " + std::to_string(f.degree()) + " exceeds the rational factorization guard of " +
                     std::to_string(kRationalFactorDegreeGuard));
  }
  if (f.degree() < 1) return {};
  std::vector<Factor> out;
  std::mt19937_64 rng(seed);
  for (const auto& [g, mult] : squarefree(f.monic(), ch)) {
    std::vector<UPoly> irreducible;
    if (ch == 0) {
      kronecker(to_primitive(g), irreducible);
    } else {
      for (const auto& [part, d] : distinct_degree(g, ch)) equal_degree(part, d, ch, rng, irreducible);
    }
    for (auto& q : irreducible) out.push_back({q.monic(), mult});
  }
  std::sort(out.begin(), out.end(), factor_less);
  return out;
}

}  // namespace modfun
