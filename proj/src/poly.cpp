#include "modfun/poly.hpp"

#include <algorithm>
#include <sstream>

#include "modfun/errors.hpp"

namespace modfun {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::size_t nvars) {
  if (nvars > kMaxVars) {
    throw GuardError("at most " + std::to_string(kMaxVars) + " ring variables are supported");
  }
  nvars_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::initializer_list<unsigned> exponents)
    : Monomial(from_exponents(std::span<const unsigned>(exponents.begin(), exponents.size()))) {}

Monomial Monomial::from_exponents(std::span<const unsigned> exponents) {
  Monomial m(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) m.set(i, exponents[i]);
  return m;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, unsigned power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= nvars_) throw InputError("variable index out of range");
  if (e > 0xFFFFU) throw DomainError("exponent overflow");
  degree_ = degree_ - exp_[i] + e;
  exp_[i] = static_cast<std::uint16_t>(e);
}

std::vector<unsigned> Monomial::exponents() const {
  return {exp_.begin(), exp_.begin() + nvars_};
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exp_[i] > other.exp_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exp_[i] != 0 && other.exp_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < nvars_; ++i) {
    const unsigned e = unsigned{exp_[i]} + rhs.exp_[i];
    if (e > 0xFFFFU) throw DomainError("exponent overflow");
    r.exp_[i] = static_cast<std::uint16_t>(e);
  }
  r.degree_ = degree_ + rhs.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& rhs) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < nvars_; ++i) {
    r.exp_[i] = static_cast<std::uint16_t>(exp_[i] - rhs.exp_[i]);
  }
  r.degree_ = degree_ - rhs.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  r.degree_ = 0;
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
    r.degree_ += r.exp_[i];
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  r.degree_ = 0;
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    r.exp_[i] = std::min(a.exp_[i], b.exp_[i]);
    r.degree_ += r.exp_[i];
  }
  return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    if (a.exp_[i] != b.exp_[i]) return a.exp_[i] <=> b.exp_[i];
  }
  return std::strong_ordering::equal;
}

std::vector<std::string> default_var_names(std::size_t nvars) {
  std::vector<std::string> names;
  names.reserve(nvars);
  for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

std::string Monomial::to_string(std::span<const std::string> names) const {
  if (degree_ == 0) return "1";
  std::vector<std::string> fallback;
  if (names.size() < nvars_) {
    fallback = default_var_names(nvars_);
    names = fallback;
  }
  std::string out;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exp_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (exp_[i] > 1) out += '^' + std::to_string(exp_[i]);
  }
  return out;
}

// --------------------------------------------------------------- RingOrder

RingOrder::RingOrder(Kind kind, std::vector<std::uint32_t> priority)
    : kind_(kind), priority_(std::move(priority)) {
  std::vector<bool> seen(priority_.size(), false);
  for (auto v : priority_) {
    if (v >= priority_.size() || seen[v]) throw InputError("variable priority is not a permutation");
    seen[v] = true;
  }
}

namespace {
std::vector<std::uint32_t> identity_perm(std::size_t n) {
  std::vector<std::uint32_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint32_t>(i);
  return p;
}
}  // namespace

RingOrder RingOrder::deglex(std::size_t nvars) { return {Kind::DegLex, identity_perm(nvars)}; }

RingOrder RingOrder::lex(std::size_t nvars) { return {Kind::Lex, identity_perm(nvars)}; }

RingOrder RingOrder::deglex_reversed(std::size_t nvars) {
  auto p = identity_perm(nvars);
  std::reverse(p.begin(), p.end());
  return {Kind::DegLex, std::move(p)};
}

std::strong_ordering RingOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind_ == Kind::DegLex && a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (auto v : priority_) {
    if (a[v] != b[v]) return a[v] <=> b[v];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering mono_cmp(const RingOrder& order, const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars() || a.nvars() != order.nvars()) {
    throw InputError("monomials over different rings");
  }
  return order.compare(a, b);
}

// -------------------------------------------------------------- Polynomial

namespace {

bool storage_greater(const Term& a, const Term& b) { return a.mono > b.mono; }

// Sorts descending and merges equal monomials, dropping zeros.
void normalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), storage_greater);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Term acc = std::move(terms[i]);
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j].mono == acc.mono) {
      acc.coef += terms[j].coef;
      ++j;
    }
    if (!acc.coef.is_zero()) terms[out++] = std::move(acc);
    i = j;
  }
  terms.resize(out);
}

}  // namespace

Polynomial Polynomial::constant(std::size_t nvars, const Scalar& c) {
  Polynomial p(nvars);
  if (!c.is_zero()) p.terms_.push_back({Monomial(nvars), c});
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index, const Scalar& c) {
  Polynomial p(nvars);
  if (!c.is_zero()) p.terms_.push_back({Monomial::variable(nvars, index), c});
  return p;
}

Polynomial Polynomial::monomial(const Monomial& m, const Scalar& c) {
  Polynomial p(m.nvars());
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.mono.nvars() != nvars) throw InputError("term over a different ring");
  }
  Polynomial p(nvars);
  normalize(terms);
  p.terms_ = std::move(terms);
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = terms_.front().mono.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return t.mono.degree() == d; });
}

Scalar Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
  return Scalar(0);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

void Polynomial::check_ring(const Polynomial& other) {
  if (nvars_ == other.nvars_) return;
  if (terms_.empty() && nvars_ == 0) {
    nvars_ = other.nvars_;
    return;
  }
  if (other.terms_.empty() && other.nvars_ == 0) return;
  throw InputError("polynomials over different rings");
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  check_ring(rhs);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() || j < rhs.terms_.size()) {
    if (j == rhs.terms_.size() || (i < terms_.size() && terms_[i].mono > rhs.terms_[j].mono)) {
      merged.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || rhs.terms_[j].mono > terms_[i].mono) {
      merged.push_back(rhs.terms_[j++]);
    } else {
      Scalar c = terms_[i].coef + rhs.terms_[j].coef;
      if (!c.is_zero()) merged.push_back({terms_[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return *this += -rhs; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r(a.nvars_ == 0 ? b.nvars_ : a.nvars_);
  if (a.nvars_ != b.nvars_ && !(a.is_zero() && a.nvars_ == 0) && !(b.is_zero() && b.nvars_ == 0)) {
    throw InputError("polynomials over different rings");
  }
  if (a.is_zero() || b.is_zero()) return r;
  std::vector<Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) terms.push_back({s.mono * t.mono, s.coef * t.coef});
  }
  normalize(terms);
  r.terms_ = std::move(terms);
  return r;
}

Polynomial operator*(const Scalar& c, const Polynomial& p) {
  Polynomial r(p.nvars_);
  if (c.is_zero()) return r;
  r.terms_ = p.terms_;
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Scalar& c) const {
  Polynomial r(nvars_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the storage order.
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coef * c});
  return r;
}

Term Polynomial::leading_term(const RingOrder& order) const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  if (order.nvars() != nvars_) throw InputError("order over a different ring");
  const Term* best = &terms_.front();
  for (const auto& t : terms_) {
    if (order.compare(t.mono, best->mono) > 0) best = &t;
  }
  return *best;
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
  if (point.size() != nvars_) throw InputError("evaluation point has wrong length");
  Scalar acc(0);
  for (const auto& t : terms_) {
    Scalar v = t.coef;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (unsigned e = 0; e < t.mono[i]; ++e) v *= point[i];
    }
    acc += v;
  }
  return acc;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (images.size() != nvars_) throw InputError("substitution has wrong length");
  const std::size_t target = images.empty() ? 0 : images.front().nvars();
  Polynomial acc(target);
  for (const auto& t : terms_) {
    Polynomial v = Polynomial::constant(target, t.coef);
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (unsigned e = 0; e < t.mono[i]; ++e) v = v * images[i];
    }
    acc += v;
  }
  return acc;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.terms_.empty()) return true;
  if (a.nvars_ != b.nvars_) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coef == b.terms_[i].coef)) {
      return false;
    }
  }
  return true;
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::string c = t.coef.to_string();
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(c.begin());
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (t.mono.is_one()) {
      os << c;
    } else {
      if (c != "1") os << c << '*';
      os << t.mono.to_string(names);
    }
  }
  return os.str();
}

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add:
      return a + b;
    case ArithOp::Sub:
      return a - b;
    case ArithOp::Mul:
      return a * b;
  }
  return Polynomial(a.nvars());
}

Term leading_term(const Polynomial& p, const RingOrder& order) { return p.leading_term(order); }

}  // namespace modfun
