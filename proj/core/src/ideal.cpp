#include "dseq/ideal.hpp"

#include <map>
#include <mutex>

#include "dseq/errors.hpp"

namespace dseq {

namespace {

using OrderKey = std::pair<int, int>;

OrderKey key_of(const MonomialOrder& o) { return {static_cast<int>(o.kind), o.block}; }

}  // namespace

struct Ideal::Data {
  Ring ring;
  std::vector<Polynomial> gens;
  mutable std::mutex lock;
  mutable std::map<OrderKey, std::shared_ptr<const GroebnerBasis>> bases;
};

Ideal::Ideal(Ring ring, std::vector<Polynomial> generators) : data_(std::make_shared<Data>()) {
  if (!ring) throw input_error("ideal needs a ring");
  data_->ring = std::move(ring);
  for (auto& g : generators) {
    if (!same_ring(data_->ring, g.ring()))
      throw input_error("ideal generators live in different rings");
    if (!g.is_zero()) data_->gens.push_back(std::move(g));
  }
}

Ideal Ideal::unit(Ring ring) {
  std::vector<Polynomial> gens{Polynomial::constant(ring, 1)};
  return Ideal(std::move(ring), std::move(gens));
}

Ideal Ideal::span(std::vector<Polynomial> generators) {
  if (generators.empty()) throw input_error("Ideal::span needs at least one generator");
  Ring ring = generators.front().ring();
  return Ideal(std::move(ring), std::move(generators));
}

const Ring& Ideal::ring() const { return data_->ring; }
const std::vector<Polynomial>& Ideal::generators() const { return data_->gens; }

const GroebnerBasis& Ideal::groebner(const MonomialOrder& order) const {
  const OrderKey key = key_of(order);
  std::lock_guard<std::mutex> guard(data_->lock);
  auto it = data_->bases.find(key);
  if (it == data_->bases.end()) {
    auto gb = std::make_shared<GroebnerBasis>(groebner_basis(data_->gens, order));
    if (gb->ring == nullptr) gb->ring = data_->ring;
    it = data_->bases.emplace(key, std::move(gb)).first;
  }
  return *it->second;
}

const GroebnerBasis& Ideal::groebner() const { return groebner(data_->ring->order()); }

bool Ideal::is_unit() const {
  const auto& gb = groebner(MonomialOrder::grevlex());
  return gb.generators.size() == 1 && gb.generators.front().is_constant();
}

bool Ideal::contains(const Polynomial& f) const {
  return ideal_membership(f, groebner(MonomialOrder::grevlex()));
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw input_error("ideal sum across different rings");
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw input_error("ideal product across different rings");
  std::vector<Polynomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& a, int k) {
  if (k < 0) throw input_error("negative ideal power");
  if (k == 0) return Ideal::unit(a.ring());
  if (a.is_zero()) return a;
  // k-fold products of generators, multisets only
  const auto& g = a.generators();
  std::vector<Polynomial> gens;
  std::vector<int> idx(static_cast<std::size_t>(k), 0);
  while (true) {
    Polynomial prod = g[static_cast<std::size_t>(idx[0])];
    for (int t = 1; t < k; ++t) prod = prod * g[static_cast<std::size_t>(idx[static_cast<std::size_t>(t)])];
    gens.push_back(std::move(prod));
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == static_cast<int>(g.size()) - 1) --pos;
    if (pos < 0) break;
    const int next = idx[static_cast<std::size_t>(pos)] + 1;
    for (int t = pos; t < k; ++t) idx[static_cast<std::size_t>(t)] = next;  // non-decreasing
  }
  return Ideal(a.ring(), std::move(gens));
}

namespace {

Polynomial lift_to(const Ring& target, const Polynomial& f, int shift) {
  std::vector<Term> terms;
  terms.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    std::vector<int> e(static_cast<std::size_t>(target->nvars()), 0);
    for (int i = 0; i < t.mono.nvars(); ++i)
      e[static_cast<std::size_t>(i + shift)] = t.mono.exponent(i);
    terms.push_back({Monomial(std::move(e)), t.coeff});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

Polynomial drop_first_variable(const Ring& target, const Polynomial& f) {
  std::vector<Term> terms;
  terms.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    std::vector<int> e(t.mono.exponents().begin() + 1, t.mono.exponents().end());
    terms.push_back({Monomial(std::move(e)), t.coeff});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

}  // namespace

Ideal intersect(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw input_error("intersection across different rings");
  if (a.is_zero()) return a;
  if (b.is_zero()) return b;

  const Ring ext = prepend_auxiliary_variable(a.ring());
  const Polynomial t = Polynomial::variable(ext, 0);
  const Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;

  std::vector<Polynomial> gens;
  gens.reserve(a.generators().size() + b.generators().size());
  for (const auto& f : a.generators()) gens.push_back(t * lift_to(ext, f, 1));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * lift_to(ext, g, 1));

  const GroebnerBasis gb = groebner_basis(std::move(gens), ext->order());
  std::vector<Polynomial> result;
  for (const auto& g : gb.generators) {
    bool uses_t = false;
    for (const auto& term : g.terms())
      if (term.mono.exponent(0) > 0) {
        uses_t = true;
        break;
      }
    if (!uses_t) result.push_back(drop_first_variable(a.ring(), g));
  }
  return Ideal(a.ring(), std::move(result));
}

Ideal colon(const Ideal& ideal, const Polynomial& by) {
  if (by.is_zero()) throw input_error("colon by the zero element is undefined here");
  if (!same_ring(ideal.ring(), by.ring())) throw input_error("colon across different rings");
  if (ideal.is_zero()) return ideal;  // the ambient ring is a domain
  const Ideal meet = intersect(ideal, Ideal(ideal.ring(), {by}));
  std::vector<Polynomial> gens;
  gens.reserve(meet.generators().size());
  std::vector<Polynomial> divisor{by};
  for (const auto& g : meet.generators()) {
    DivisionResult d = divide(g, divisor, ideal.ring()->order());
    if (!d.remainder.is_zero())
      throw property_violation("inexact division during colon computation");
    gens.push_back(std::move(d.quotients.front()));
  }
  return Ideal(ideal.ring(), std::move(gens));
}

Ideal colon(const Ideal& ideal, const Ideal& by) {
  if (!same_ring(ideal.ring(), by.ring())) throw input_error("colon across different rings");
  if (by.is_zero()) throw input_error("colon by the zero ideal is undefined here");
  bool first = true;
  Ideal acc = Ideal::zero(ideal.ring());
  for (const auto& g : by.generators()) {
    const Ideal q = colon(ideal, g);
    acc = first ? q : intersect(acc, q);
    first = false;
  }
  return acc;
}

Saturation saturate(const Ideal& ideal, const Ideal& by) {
  if (by.is_zero()) throw input_error("saturation by the zero ideal is undefined here");
  Saturation out{ideal, 0, {ideal}};
  constexpr int kCap = 128;
  for (int n = 1; n <= kCap; ++n) {
    Ideal next = colon(out.chain.back(), by);
    if (ideal_equal(next, out.chain.back())) {
      // I : by^(n-1) == I : by^n, so the chain is flat from n-1 on; the
      // reported index is the least admissible n >= 1
      out.index = std::max(1, n - 1);
      out.ideal = out.chain.back();
      return out;
    }
    out.chain.push_back(std::move(next));
  }
  throw property_violation("saturation chain failed to stabilize");
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw input_error("comparison across different rings");
  const auto& ga = a.groebner(MonomialOrder::grevlex()).generators;
  const auto& gb = b.groebner(MonomialOrder::grevlex()).generators;
  if (ga.size() != gb.size()) return false;
  for (std::size_t i = 0; i < ga.size(); ++i) {
    if (ga[i].terms().size() != gb[i].terms().size()) return false;
    for (std::size_t j = 0; j < ga[i].terms().size(); ++j)
      if (ga[i].terms()[j].coeff != gb[i].terms()[j].coeff ||
          ga[i].terms()[j].mono != gb[i].terms()[j].mono)
        return false;
  }
  return true;
}

bool ideal_contains(const Ideal& outer, const Ideal& inner) {
  if (!same_ring(outer.ring(), inner.ring()))
    throw input_error("comparison across different rings");
  for (const auto& g : inner.generators())
    if (!outer.contains(g)) return false;
  return true;
}

std::string to_string(const Ideal& ideal) {
  const auto& gens = ideal.groebner(MonomialOrder::grevlex()).generators;
  if (gens.empty()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ", ";
    s += to_string(gens[i]);
  }
  return s + ")";
}

}  // namespace dseq
