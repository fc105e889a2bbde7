#include "modfun/modvec.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "modfun/errors.hpp"

namespace modfun {

// --------------------------------------------------------------- ModVector

namespace {

bool canonical_greater(const ModTerm& a, const ModTerm& b) {
  if (!(a.mono == b.mono)) return a.mono > b.mono;
  return a.comp < b.comp;
}

void normalize(std::vector<ModTerm>& terms) {
  std::sort(terms.begin(), terms.end(), canonical_greater);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    ModTerm acc = std::move(terms[i]);
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j].comp == acc.comp && terms[j].mono == acc.mono) {
      acc.coef += terms[j].coef;
      ++j;
    }
    if (!acc.coef.is_zero()) terms[out++] = std::move(acc);
    i = j;
  }
  terms.resize(out);
}

}  // namespace

ModVector ModVector::from_terms(std::size_t rank, std::size_t nvars, std::vector<ModTerm> terms) {
  for (const auto& t : terms) {
    if (t.comp >= rank) throw InputError("basis index out of range");
    if (t.mono.nvars() != nvars) throw InputError("module term over a different ring");
  }
  ModVector v(rank, nvars);
  normalize(terms);
  v.terms_ = std::move(terms);
  return v;
}

ModVector ModVector::unit(std::size_t rank, std::size_t nvars, std::uint32_t comp) {
  return from_terms(rank, nvars, {{Monomial(nvars), comp, Scalar(1)}});
}

ModVector ModVector::from_components(const std::vector<Polynomial>& comps, std::size_t nvars) {
  std::vector<ModTerm> terms;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (!comps[i].is_zero() && comps[i].nvars() != nvars) {
      throw InputError("component over a different ring");
    }
    for (const auto& t : comps[i].terms()) {
      terms.push_back({t.mono, static_cast<std::uint32_t>(i), t.coef});
    }
  }
  return from_terms(comps.size(), nvars, std::move(terms));
}

Polynomial ModVector::component(std::uint32_t i) const {
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    if (t.comp == i) terms.push_back({t.mono, t.coef});
  }
  return Polynomial::from_terms(nvars_, std::move(terms));
}

std::vector<Polynomial> ModVector::components() const {
  std::vector<std::vector<Term>> parts(rank_);
  for (const auto& t : terms_) parts[t.comp].push_back({t.mono, t.coef});
  std::vector<Polynomial> out;
  out.reserve(rank_);
  for (auto& p : parts) out.push_back(Polynomial::from_terms(nvars_, std::move(p)));
  return out;
}

bool ModVector::is_homogeneous(const std::vector<int>& gen_degrees) const {
  if (terms_.empty()) return true;
  const int d = degree(gen_degrees);
  return std::all_of(terms_.begin(), terms_.end(), [&](const ModTerm& t) {
    return static_cast<int>(t.mono.degree()) + gen_degrees[t.comp] == d;
  });
}

int ModVector::degree(const std::vector<int>& gen_degrees) const {
  if (terms_.empty()) throw DomainError("degree of the zero vector");
  const auto& t = terms_.front();
  return static_cast<int>(t.mono.degree()) + gen_degrees.at(t.comp);
}

ModVector ModVector::operator-() const {
  ModVector r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

ModVector& ModVector::operator+=(const ModVector& rhs) {
  if (rank_ != rhs.rank_ || (nvars_ != rhs.nvars_ && !rhs.is_zero() && !is_zero())) {
    throw InputError("vectors from different free modules");
  }
  if (is_zero()) nvars_ = rhs.nvars_;
  std::vector<ModTerm> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() || j < rhs.terms_.size()) {
    if (j == rhs.terms_.size() ||
        (i < terms_.size() && canonical_greater(terms_[i], rhs.terms_[j]))) {
      merged.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || canonical_greater(rhs.terms_[j], terms_[i])) {
      merged.push_back(rhs.terms_[j++]);
    } else {
      Scalar c = terms_[i].coef + rhs.terms_[j].coef;
      if (!c.is_zero()) merged.push_back({terms_[i].mono, terms_[i].comp, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

ModVector& ModVector::operator-=(const ModVector& rhs) { return *this += -rhs; }

ModVector operator*(const Scalar& c, const ModVector& v) {
  ModVector r(v.rank_, v.nvars_);
  if (c.is_zero()) return r;
  r.terms_ = v.terms_;
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

ModVector operator*(const Polynomial& p, const ModVector& v) {
  std::vector<ModTerm> terms;
  terms.reserve(p.size() * v.terms_.size());
  for (const auto& s : p.terms()) {
    for (const auto& t : v.terms_) terms.push_back({s.mono * t.mono, t.comp, s.coef * t.coef});
  }
  return ModVector::from_terms(v.rank_, v.nvars_, std::move(terms));
}

ModVector ModVector::mul_term(const Monomial& m, const Scalar& c) const {
  ModVector r(rank_, nvars_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.comp, t.coef * c});
  return r;
}

bool operator==(const ModVector& a, const ModVector& b) {
  if (a.rank_ != b.rank_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    const auto& s = a.terms_[i];
    const auto& t = b.terms_[i];
    if (s.comp != t.comp || !(s.mono == t.mono) || !(s.coef == t.coef)) return false;
  }
  return true;
}

std::string ModVector::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::string c = t.coef.to_string();
    const bool negative = c[0] == '-';
    if (negative) c.erase(c.begin());
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (c != "1") os << c << '*';
    if (!t.mono.is_one()) os << t.mono.to_string(names) << '*';
    os << 'e' << (t.comp + 1);
  }
  return os.str();
}

// ------------------------------------------------------------- ModuleOrder

struct SchreyerFrame {
  ModuleOrder base;  // never itself a Schreyer order
  std::vector<Monomial> total_lead;
  std::vector<std::uint32_t> base_comp;
  std::vector<std::vector<std::uint32_t>> chain;
};

ModuleOrder::ModuleOrder(RingOrder ring, Style style, std::vector<std::uint32_t> basis_priority)
    : ring_(std::move(ring)), style_(style), priority_(std::move(basis_priority)) {
  rank_of_.assign(priority_.size(), 0);
  std::vector<bool> seen(priority_.size(), false);
  for (std::size_t r = 0; r < priority_.size(); ++r) {
    const auto c = priority_[r];
    if (c >= priority_.size() || seen[c]) throw InputError("basis priority is not a permutation");
    seen[c] = true;
    rank_of_[c] = static_cast<std::uint32_t>(r);
  }
}

namespace {
std::vector<std::uint32_t> iota_u32(std::size_t n) {
  std::vector<std::uint32_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<std::uint32_t>(i);
  return v;
}
}  // namespace

ModuleOrder ModuleOrder::top(RingOrder ring, std::size_t rank) {
  return {std::move(ring), Style::TermOverPosition, iota_u32(rank)};
}

ModuleOrder ModuleOrder::pot(RingOrder ring, std::size_t rank) {
  return {std::move(ring), Style::PositionOverTerm, iota_u32(rank)};
}

ModuleOrder ModuleOrder::standard(std::size_t nvars, std::size_t rank) {
  return top(RingOrder::deglex(nvars), rank);
}

ModuleOrder ModuleOrder::schreyer(const ModuleOrder& base, const std::vector<ModMonomial>& leads) {
  auto frame = std::make_shared<SchreyerFrame>();
  const std::size_t t = leads.size();
  frame->total_lead.reserve(t);
  frame->base_comp.reserve(t);
  frame->chain.reserve(t);
  for (std::size_t a = 0; a < t; ++a) {
    const auto& lead = leads[a];
    if (base.frame_) {
      const auto& prev = *base.frame_;
      frame->total_lead.push_back(lead.mono * prev.total_lead.at(lead.comp));
      frame->base_comp.push_back(prev.base_comp[lead.comp]);
      auto chain = prev.chain[lead.comp];
      chain.push_back(static_cast<std::uint32_t>(a));
      frame->chain.push_back(std::move(chain));
    } else {
      frame->total_lead.push_back(lead.mono);
      frame->base_comp.push_back(lead.comp);
      frame->chain.push_back({static_cast<std::uint32_t>(a)});
    }
  }
  frame->base = base.frame_ ? base.frame_->base : base;
  ModuleOrder out;
  out.ring_ = base.ring_;
  out.style_ = base.style_;
  out.frame_ = std::move(frame);
  return out;
}

std::size_t ModuleOrder::rank() const {
  return frame_ ? frame_->total_lead.size() : priority_.size();
}

std::strong_ordering ModuleOrder::compare_base(const Monomial& a, std::uint32_t ca,
                                               const Monomial& b, std::uint32_t cb) const {
  if (style_ == Style::TermOverPosition) {
    const auto c = ring_.compare(a, b);
    if (c != 0) return c;
    return rank_of_[cb] <=> rank_of_[ca];
  }
  if (ca != cb) return rank_of_[cb] <=> rank_of_[ca];
  return ring_.compare(a, b);
}

std::strong_ordering ModuleOrder::compare(const Monomial& a, std::uint32_t ca, const Monomial& b,
                                          std::uint32_t cb) const {
  if (!frame_) return compare_base(a, ca, b, cb);
  const auto& f = *frame_;
  const auto c = f.base.compare_base(a * f.total_lead[ca], f.base_comp[ca], b * f.total_lead[cb],
                                     f.base_comp[cb]);
  if (c != 0) return c;
  const auto& xa = f.chain[ca];
  const auto& xb = f.chain[cb];
  for (std::size_t k = 0; k < xa.size(); ++k) {
    if (xa[k] != xb[k]) return xb[k] <=> xa[k];
  }
  return std::strong_ordering::equal;
}

// --------------------------------------------------------- ordered vectors

namespace detail {

OrderedVec to_ordered(const ModVector& v, const ModuleOrder& order) {
  OrderedVec out(v.terms().begin(), v.terms().end());
  std::sort(out.begin(), out.end(),
            [&](const ModTerm& a, const ModTerm& b) { return order.compare(a, b) > 0; });
  return out;
}

ModVector from_ordered(std::size_t rank, std::size_t nvars, const OrderedVec& v) {
  return ModVector::from_terms(rank, nvars, v);
}

void make_monic(OrderedVec& v) {
  if (v.empty() || v.front().coef.is_one()) return;
  const Scalar inv = v.front().coef.inverse();
  for (auto& t : v) t.coef *= inv;
}

void sub_mul(OrderedVec& g, const Scalar& a, const Monomial& n, const OrderedVec& f,
             const ModuleOrder& order) {
  OrderedVec out;
  out.reserve(g.size() + f.size());
  std::size_t i = 0;
  std::size_t j = 0;
  // Multiplication by a monomial preserves the order, so n*f stays sorted.
  std::optional<ModTerm> next_f;
  auto load_f = [&]() {
    if (j < f.size()) {
      next_f = ModTerm{f[j].mono * n, f[j].comp, Scalar()};
    } else {
      next_f.reset();
    }
  };
  load_f();
  while (i < g.size() || next_f) {
    if (!next_f) {
      out.push_back(std::move(g[i++]));
      continue;
    }
    if (i == g.size()) {
      next_f->coef = -(a * f[j].coef);
      out.push_back(std::move(*next_f));
      ++j;
      load_f();
      continue;
    }
    const auto c = order.compare(g[i], *next_f);
    if (c > 0) {
      out.push_back(std::move(g[i++]));
    } else if (c < 0) {
      next_f->coef = -(a * f[j].coef);
      out.push_back(std::move(*next_f));
      ++j;
      load_f();
    } else {
      Scalar coef = g[i].coef - a * f[j].coef;
      if (!coef.is_zero()) out.push_back({std::move(g[i].mono), g[i].comp, std::move(coef)});
      ++i;
      ++j;
      load_f();
    }
  }
  g = std::move(out);
}

namespace {

struct LeadIndex {
  // Basis indices grouped by the slot of their leading term, in list order.
  std::map<std::uint32_t, std::vector<std::size_t>> by_comp;

  explicit LeadIndex(const std::vector<OrderedVec>& basis) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (!basis[k].empty()) by_comp[basis[k].front().comp].push_back(k);
    }
  }

  std::optional<std::size_t> find(const std::vector<OrderedVec>& basis, const ModTerm& t) const {
    const auto it = by_comp.find(t.comp);
    if (it == by_comp.end()) return std::nullopt;
    for (auto k : it->second) {
      if (basis[k].front().mono.divides(t.mono)) return k;
    }
    return std::nullopt;
  }
};

OrderedVec normal_form_ordered(OrderedVec g, const std::vector<OrderedVec>& basis,
                               const LeadIndex& index, const ModuleOrder& order) {
  OrderedVec result;
  while (!g.empty()) {
    const ModTerm& t = g.front();
    const auto k = index.find(basis, t);
    if (k) {
      const auto& b = basis[*k];
      const Scalar a = t.coef / b.front().coef;
      const Monomial n = t.mono / b.front().mono;
      sub_mul(g, a, n, b, order);
    } else {
      // g is sorted, so everything after the irreducible head is smaller.
      result.push_back(std::move(g.front()));
      g.erase(g.begin());
    }
  }
  return result;
}

}  // namespace

std::vector<OrderedVec> syzygy_frame(const std::vector<OrderedVec>& gb, const ModuleOrder& order,
                                     const ModuleOrder& next, bool parallel) {
  const std::size_t t = gb.size();
  const LeadIndex index(gb);
  std::vector<std::vector<OrderedVec>> per_lead(t);
  std::vector<std::string> failures(t);

  auto work = [&](std::size_t i) {
    const auto& lead_i = gb[i].front();
    std::vector<std::pair<std::size_t, Monomial>> cands;
    for (std::size_t j = i + 1; j < t; ++j) {
      if (gb[j].front().comp != lead_i.comp) continue;
      cands.emplace_back(j, Monomial::lcm(lead_i.mono, gb[j].front().mono) / lead_i.mono);
    }
    for (std::size_t a = 0; a < cands.size(); ++a) {
      const auto& [j, q] = cands[a];
      bool redundant = false;
      for (std::size_t b = 0; b < cands.size() && !redundant; ++b) {
        if (b == a) continue;
        const auto& q2 = cands[b].second;
        if (q2.divides(q) && (!(q2 == q) || b < a)) redundant = true;
      }
      if (redundant) continue;

      const Monomial lcm = q * lead_i.mono;
      const Monomial qj = lcm / gb[j].front().mono;
      OrderedVec s;
      s.reserve(gb[i].size());
      for (const auto& term : gb[i]) s.push_back({term.mono * q, term.comp, term.coef});
      sub_mul(s, Scalar(1), qj, gb[j], order);

      std::vector<ModTerm> syz;
      syz.push_back({q, static_cast<std::uint32_t>(i), Scalar(1)});
      syz.push_back({qj, static_cast<std::uint32_t>(j), Scalar(-1)});
      while (!s.empty()) {
        const ModTerm head = s.front();
        const auto k = index.find(gb, head);
        if (!k) {
          failures[i] = "S-vector does not reduce to zero: input is not a Groebner basis";
          return;
        }
        const Monomial mult = head.mono / gb[*k].front().mono;
        sub_mul(s, head.coef, mult, gb[*k], order);
        syz.push_back({mult, static_cast<std::uint32_t>(*k), -head.coef});
      }
      std::sort(syz.begin(), syz.end(),
                [&](const ModTerm& x, const ModTerm& y) { return next.compare(x, y) > 0; });
      OrderedVec combined;
      for (auto& term : syz) {
        if (!combined.empty() && combined.back().comp == term.comp &&
            combined.back().mono == term.mono) {
          combined.back().coef += term.coef;
          if (combined.back().coef.is_zero()) combined.pop_back();
        } else {
          combined.push_back(std::move(term));
        }
      }
      if (combined.empty() || combined.front().comp != i || !(combined.front().mono == q) ||
          !combined.front().coef.is_one()) {
        failures[i] = "syzygy leading term is not the expected Schreyer lead";
        return;
      }
      per_lead[i].push_back(std::move(combined));
    }
  };

  if (parallel) {
    const auto n = static_cast<std::ptrdiff_t>(t);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) work(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < t; ++i) work(i);
  }

  std::vector<OrderedVec> out;
  for (std::size_t i = 0; i < t; ++i) {
    if (!failures[i].empty()) throw InvariantViolation(failures[i]);
    for (auto& v : per_lead[i]) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace detail

// ------------------------------------------------------------ GB operations

using detail::OrderedVec;

ModTerm leading_term(const ModVector& v, const ModuleOrder& order) {
  if (v.is_zero()) throw DomainError("leading term of the zero vector");
  const ModTerm* best = &v.terms().front();
  for (const auto& t : v.terms()) {
    if (order.compare(t, *best) > 0) best = &t;
  }
  return *best;
}

std::optional<ModVector> reduce_once(const ModVector& g, const ModVector& f,
                                     const ModuleOrder& order) {
  if (f.is_zero()) throw DomainError("reduction by the zero vector");
  if (g.rank() != f.rank()) throw InputError("vectors from different free modules");
  const OrderedVec fo = detail::to_ordered(f, order);
  const OrderedVec go = detail::to_ordered(g, order);
  const ModTerm& lead = fo.front();
  for (const auto& t : go) {
    if (t.comp == lead.comp && lead.mono.divides(t.mono)) {
      OrderedVec out = go;
      detail::sub_mul(out, t.coef / lead.coef, t.mono / lead.mono, fo, order);
      return detail::from_ordered(g.rank(), g.nvars(), out);
    }
  }
  return std::nullopt;
}

ModVector normal_form(const ModVector& g, const std::vector<ModVector>& basis,
                      const ModuleOrder& order) {
  std::vector<OrderedVec> ob;
  for (const auto& b : basis) {
    if (b.is_zero()) throw DomainError("zero vector in reduction basis");
    if (b.rank() != g.rank()) throw InputError("vectors from different free modules");
    ob.push_back(detail::to_ordered(b, order));
  }
  const detail::LeadIndex index(ob);
  return detail::from_ordered(
      g.rank(), g.nvars(),
      detail::normal_form_ordered(detail::to_ordered(g, order), ob, index, order));
}

std::optional<ModVector> s_vector(const ModVector& f, const ModVector& g, const ModuleOrder& order) {
  if (f.is_zero() || g.is_zero()) throw DomainError("S-vector of a zero vector");
  OrderedVec fo = detail::to_ordered(f, order);
  OrderedVec go = detail::to_ordered(g, order);
  if (fo.front().comp != go.front().comp) return std::nullopt;
  detail::make_monic(fo);
  detail::make_monic(go);
  const Monomial lcm = Monomial::lcm(fo.front().mono, go.front().mono);
  const Monomial qf = lcm / fo.front().mono;
  OrderedVec s;
  for (const auto& t : fo) s.push_back({t.mono * qf, t.comp, t.coef});
  detail::sub_mul(s, Scalar(1), lcm / go.front().mono, go, order);
  return detail::from_ordered(f.rank(), f.nvars(), s);
}

Submodule buchberger(const std::vector<ModVector>& gens, const ModuleOrder& order) {
  if (gens.empty()) throw InputError("buchberger needs the ambient rank; pass it explicitly");
  return buchberger(gens, order, gens.front().rank(), gens.front().nvars());
}

Submodule buchberger(const std::vector<ModVector>& gens, const ModuleOrder& order,
                     std::size_t rank, std::size_t nvars) {
  for (const auto& g : gens) {
    if (g.rank() != rank) throw InputError("generators live in different free modules");
  }
  Submodule sub{rank, nvars, order, gens, std::nullopt};

  struct Pair {
    unsigned degree;
    std::size_t seq;
    std::size_t i;
    std::size_t j;
  };
  auto later = [](const Pair& a, const Pair& b) {
    return a.degree != b.degree ? a.degree > b.degree : a.seq > b.seq;
  };
  std::priority_queue<Pair, std::vector<Pair>, decltype(later)> queue(later);
  std::set<std::pair<std::size_t, std::size_t>> pending;
  std::size_t seq = 0;

  std::vector<OrderedVec> basis;
  detail::LeadIndex index(basis);

  auto add = [&](OrderedVec h) {
    detail::make_monic(h);
    const std::size_t idx = basis.size();
    basis.push_back(std::move(h));
    const auto& lead = basis.back().front();
    index.by_comp[lead.comp].push_back(idx);
    for (std::size_t i = 0; i < idx; ++i) {
      if (basis[i].front().comp != lead.comp) continue;
      const unsigned deg = Monomial::lcm(basis[i].front().mono, lead.mono).degree();
      queue.push({deg, seq++, i, idx});
      pending.insert({i, idx});
    }
  };

  for (const auto& g : gens) {
    OrderedVec h = detail::normal_form_ordered(detail::to_ordered(g, order), basis, index, order);
    if (!h.empty()) add(std::move(h));
  }

  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  while (!queue.empty()) {
    const Pair p = queue.top();
    queue.pop();
    pending.erase({p.i, p.j});
    const auto& li = basis[p.i].front();
    const auto& lj = basis[p.j].front();
    // Coprime leads only guarantee a zero reduction for ideals.
    if (rank == 1 && li.mono.coprime(lj.mono)) continue;
    const Monomial lcm = Monomial::lcm(li.mono, lj.mono);
    bool chain = false;
    for (auto k : index.by_comp[li.comp]) {
      if (k == p.i || k == p.j) continue;
      if (basis[k].front().mono.divides(lcm) && !is_pending(p.i, k) && !is_pending(p.j, k)) {
        chain = true;
        break;
      }
    }
    if (chain) continue;
    OrderedVec s;
    const Monomial qi = lcm / li.mono;
    for (const auto& t : basis[p.i]) s.push_back({t.mono * qi, t.comp, t.coef});
    detail::sub_mul(s, Scalar(1), lcm / lj.mono, basis[p.j], order);
    OrderedVec h = detail::normal_form_ordered(std::move(s), basis, index, order);
    if (!h.empty()) add(std::move(h));
  }

  // Minimalize: drop elements whose lead is divisible by another lead.
  std::vector<OrderedVec> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& li = basis[i].front();
    bool drop = false;
    for (std::size_t j = 0; j < basis.size() && !drop; ++j) {
      if (j == i) continue;
      const auto& lj = basis[j].front();
      if (lj.comp != li.comp || !lj.mono.divides(li.mono)) continue;
      if (!(lj.mono == li.mono) || j < i) drop = true;
    }
    if (!drop) minimal.push_back(basis[i]);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const OrderedVec& a, const OrderedVec& b) {
    return order.compare(a.front(), b.front()) > 0;
  });
  // Tail-reduce each element by the others; leads never change.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<OrderedVec> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    const detail::LeadIndex oi(others);
    OrderedVec head{minimal[i].front()};
    OrderedVec tail(minimal[i].begin() + 1, minimal[i].end());
    OrderedVec reduced = detail::normal_form_ordered(std::move(tail), others, oi, order);
    head.insert(head.end(), reduced.begin(), reduced.end());
    minimal[i] = std::move(head);
  }

  std::vector<ModVector> gb;
  gb.reserve(minimal.size());
  for (const auto& v : minimal) gb.push_back(detail::from_ordered(rank, nvars, v));
  sub.reduced_gb = std::move(gb);
  return sub;
}

namespace {
const std::vector<ModVector>& require_gb(const Submodule& sub) {
  if (!sub.reduced_gb) throw DomainError("submodule has no Groebner basis yet");
  return *sub.reduced_gb;
}
}  // namespace

std::vector<ModMonomial> initial_module(const Submodule& sub) {
  std::vector<ModMonomial> out;
  for (const auto& g : require_gb(sub)) {
    const auto lt = leading_term(g, sub.order);
    out.push_back({lt.mono, lt.comp});
  }
  return out;
}

bool contains(const ModVector& v, const Submodule& sub) {
  if (v.rank() != sub.rank) throw InputError("vector rank does not match the submodule");
  if (v.is_zero()) return true;
  return normal_form(v, require_gb(sub), sub.order).is_zero();
}

std::vector<ModVector> schreyer_syzygies(const Submodule& sub) {
  const auto& gb = require_gb(sub);
  std::vector<OrderedVec> ordered;
  std::vector<ModMonomial> leads;
  for (const auto& g : gb) {
    ordered.push_back(detail::to_ordered(g, sub.order));
    leads.push_back({ordered.back().front().mono, ordered.back().front().comp});
  }
  const ModuleOrder next = ModuleOrder::schreyer(sub.order, leads);
  std::vector<ModVector> out;
  for (const auto& s : detail::syzygy_frame(ordered, sub.order, next)) {
    out.push_back(detail::from_ordered(gb.size(), sub.nvars, s));
  }
  return out;
}

std::vector<ModVector> syzygies_of(const std::vector<ModVector>& gens, std::size_t rank,
                                   std::size_t nvars) {
  const std::size_t k = gens.size();
  const std::size_t total = rank + k;
  std::vector<ModVector> graph;
  graph.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (gens[i].rank() != rank) throw InputError("generators live in different free modules");
    std::vector<ModTerm> terms = gens[i].terms();
    terms.push_back({Monomial(nvars), static_cast<std::uint32_t>(rank + i), Scalar(1)});
    graph.push_back(ModVector::from_terms(total, nvars, std::move(terms)));
  }
  // Position over term with the original slots first eliminates them.
  const ModuleOrder order = ModuleOrder::pot(RingOrder::deglex(nvars), total);
  const Submodule sub = buchberger(graph, order, total, nvars);
  std::vector<ModVector> out;
  for (const auto& g : *sub.reduced_gb) {
    if (leading_term(g, order).comp < rank) continue;
    std::vector<ModTerm> terms;
    for (const auto& t : g.terms()) {
      terms.push_back({t.mono, static_cast<std::uint32_t>(t.comp - rank), t.coef});
    }
    out.push_back(ModVector::from_terms(k, nvars, std::move(terms)));
  }
  return out;
}

}  // namespace modfun
