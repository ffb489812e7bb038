#include "dseq/polynomial.hpp"

#include <algorithm>

#include "dseq/errors.hpp"
#include "dseq/fp.hpp"

namespace dseq {

Polynomial Polynomial::zero(Ring ring) { return Polynomial(std::move(ring), {}); }

Polynomial Polynomial::constant(Ring ring, std::int64_t c) {
  c = fp::reduce(c, ring->characteristic());
  std::vector<Term> ts;
  if (c != 0) ts.push_back({Monomial::one(ring->nvars()), c});
  return Polynomial(std::move(ring), std::move(ts));
}

Polynomial Polynomial::variable(Ring ring, int index) {
  if (index < 0 || index >= ring->nvars()) throw input_error("variable index out of range");
  std::vector<int> e(static_cast<std::size_t>(ring->nvars()), 0);
  e[static_cast<std::size_t>(index)] = 1;
  return term(std::move(ring), Monomial(std::move(e)));
}

Polynomial Polynomial::term(Ring ring, Monomial m, std::int64_t c) {
  if (m.nvars() != ring->nvars()) throw input_error("monomial does not fit the ring");
  c = fp::reduce(c, ring->characteristic());
  std::vector<Term> ts;
  if (c != 0) ts.push_back({std::move(m), c});
  return Polynomial(std::move(ring), std::move(ts));
}

Polynomial Polynomial::from_terms(Ring ring, std::vector<Term> terms) {
  auto ts = normalize(ring, std::move(terms));
  return Polynomial(std::move(ring), std::move(ts));
}

std::vector<Term> Polynomial::normalize(const Ring& ring, std::vector<Term> terms) {
  const std::int64_t p = ring->characteristic();
  for (auto& t : terms) {
    if (t.mono.nvars() != ring->nvars()) throw input_error("monomial does not fit the ring");
    t.coeff = fp::reduce(t.coeff, p);
  }
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return compare_monomials(ring->order(), a.mono, b.mono) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = fp::add(out.back().coeff, t.coeff, p);
      if (out.back().coeff == 0) out.pop_back();
    } else if (t.coeff != 0) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

void Polynomial::check_same_ring(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_)) throw input_error("operands live in different rings");
}

const Term& Polynomial::leading() const {
  if (terms_.empty()) throw input_error("the zero polynomial has no leading term");
  return terms_.front();
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.front().mono.total_degree();
  for (const auto& t : terms_)
    if (t.mono.total_degree() != d) return false;
  return true;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_ring(o);
  const std::int64_t p = ring_->characteristic();
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    const int c = compare_monomials(ring_->order(), terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      const std::int64_t s = fp::add(terms_[i].coeff, o.terms_[j].coeff, p);
      if (s != 0) out.push_back({terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-() const {
  const std::int64_t p = ring_->characteristic();
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = fp::neg(t.coeff, p);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_ring(o);
  std::vector<Term> prods;
  prods.reserve(terms_.size() * o.terms_.size());
  const std::int64_t p = ring_->characteristic();
  for (const auto& a : terms_)
    for (const auto& b : o.terms_)
      prods.push_back({a.mono * b.mono, fp::mul(a.coeff, b.coeff, p)});
  return from_terms(ring_, std::move(prods));
}

Polynomial Polynomial::scale(std::int64_t c) const {
  const std::int64_t p = ring_->characteristic();
  c = fp::reduce(c, p);
  if (c == 0) return zero(ring_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = fp::mul(t.coeff, c, p);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::pow(int k) const {
  if (k < 0) throw input_error("negative polynomial power");
  Polynomial acc = constant(ring_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    if (k >>= 1) base = base * base;
  }
  return acc;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scale(fp::inv(terms_.front().coeff, ring_->characteristic()));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].mono != o.terms_[i].mono) return false;
  return true;
}

std::string to_string(const Monomial& m, const Ring& ring) {
  std::string s;
  for (int i = 0; i < m.nvars(); ++i) {
    const int e = m.exponent(i);
    if (e == 0) continue;
    if (!s.empty()) s += "*";
    s += ring->variable(i);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const std::int64_t p = f.ring()->characteristic();
  std::string s;
  for (const auto& t : f.terms()) {
    // symmetric representative: coefficients above p/2 print as negatives
    std::int64_t c = t.coeff;
    bool negative = false;
    if (c > p / 2) {
      c = p - c;
      negative = true;
    }
    if (s.empty()) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    const std::string mono = to_string(t.mono, f.ring());
    if (mono == "1") {
      s += std::to_string(c);
    } else if (c == 1) {
      s += mono;
    } else {
      s += std::to_string(c) + "*" + mono;
    }
  }
  return s;
}

}  // namespace dseq
