#include "dseq/groebner.hpp"

#include <algorithm>
#include <set>

#include "dseq/errors.hpp"
#include "dseq/fp.hpp"

namespace dseq {

namespace {

// same coefficient field and variables; the active order may differ
bool compatible_ring(const Ring& a, const Ring& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->characteristic() == b->characteristic() && a->variables() == b->variables();
}

// S(f, g) = (lcm/lt_f) f - (lcm/lt_g) g, both sides monic first
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial l = Monomial::lcm(f.leading().mono, g.leading().mono);
  const Polynomial uf = Polynomial::term(f.ring(), l.divide(f.leading().mono));
  const Polynomial ug = Polynomial::term(g.ring(), l.divide(g.leading().mono));
  return uf * f.monic() - ug * g.monic();
}

struct Pair {
  int i, j;
  Monomial lcm;
  int degree;
};

struct PairQueueCmp {
  const MonomialOrder* order;
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (int c = compare_monomials(*order, a.lcm, b.lcm)) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

}  // namespace

DivisionResult divide(const Polynomial& f, std::span<const Polynomial> reducers,
                      const MonomialOrder&) {
  // reducers and f must already be canonical under the active order
  const Ring& ring = f.ring();
  const std::int64_t p = ring->characteristic();
  for (const auto& g : reducers)
    if (!same_ring(ring, g.ring())) throw input_error("division across different rings");

  std::vector<Polynomial> quotients(reducers.size(), Polynomial::zero(ring));
  Polynomial remainder = Polynomial::zero(ring);
  Polynomial work = f;

  while (!work.is_zero()) {
    const Term lt = work.leading();
    bool reduced = false;
    for (std::size_t k = 0; k < reducers.size(); ++k) {
      const Polynomial& g = reducers[k];
      if (g.is_zero()) continue;
      if (!g.leading().mono.divides(lt.mono)) continue;
      const std::int64_t c = fp::mul(lt.coeff, fp::inv(g.leading().coeff, p), p);
      const Polynomial factor = Polynomial::term(ring, lt.mono.divide(g.leading().mono), c);
      quotients[k] = quotients[k] + factor;
      work = work - factor * g;
      reduced = true;
      break;
    }
    if (!reduced) {
      const Polynomial t = Polynomial::term(ring, lt.mono, lt.coeff);
      remainder = remainder + t;
      work = work - t;
    }
  }
  return {std::move(remainder), std::move(quotients)};
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> reducers,
                       const MonomialOrder&) {
  const Ring& ring = f.ring();
  const std::int64_t p = ring->characteristic();
  Polynomial remainder = Polynomial::zero(ring);
  Polynomial work = f;
  while (!work.is_zero()) {
    const Term lt = work.leading();
    bool reduced = false;
    for (const auto& g : reducers) {
      if (g.is_zero() || !g.leading().mono.divides(lt.mono)) continue;
      const std::int64_t c = fp::mul(lt.coeff, fp::inv(g.leading().coeff, p), p);
      work = work - Polynomial::term(ring, lt.mono.divide(g.leading().mono), c) * g;
      reduced = true;
      break;
    }
    if (!reduced) {
      const Polynomial t = Polynomial::term(ring, lt.mono, lt.coeff);
      remainder = remainder + t;
      work = work - t;
    }
  }
  return remainder;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (gb.ring == nullptr) return f;  // zero ideal
  if (!compatible_ring(f.ring(), gb.ring))
    throw input_error("normal form across different rings");
  if (f.ring()->order() == gb.order) return normal_form(f, gb.generators, gb.order);
  // re-canonicalize into the basis ring, reduce, then convert back
  const Polynomial g = Polynomial::from_terms(gb.ring, f.terms());
  const Polynomial r = normal_form(g, gb.generators, gb.order);
  return Polynomial::from_terms(f.ring(), r.terms());
}

bool ideal_membership(const Polynomial& f, const GroebnerBasis& gb) {
  return normal_form(f, gb).is_zero();
}

GroebnerBasis groebner_basis(std::vector<Polynomial> gens, const MonomialOrder& order) {
  GroebnerBasis out;
  out.order = order;
  out.source = gens;
  out.ring = gens.empty() ? nullptr : gens.front().ring();

  std::vector<Polynomial> basis;
  for (auto& g : gens) {
    if (!same_ring(out.ring, g.ring())) throw input_error("generators live in different rings");
    if (!g.is_zero()) basis.push_back(g);
  }
  if (out.ring == nullptr || basis.empty()) {
    out.generators = {};
    return out;  // zero ideal: empty basis
  }

  // the basis lives in a ring whose active order is the requested one, so
  // leading terms and canonical layout stay coherent
  if (out.ring->order() != order) {
    out.ring = make_ring(out.ring->characteristic(), out.ring->variables(), order);
    for (auto& g : basis) g = Polynomial::from_terms(out.ring, g.terms());
  }
  for (auto& g : basis) g = g.monic();

  PairQueueCmp cmp{&order};
  std::set<Pair, PairQueueCmp> queue(cmp);
  std::set<std::pair<int, int>> handled;
  auto push_pairs = [&](int j) {
    for (int i = 0; i < j; ++i) {
      const Monomial l = Monomial::lcm(basis[static_cast<std::size_t>(i)].leading().mono,
                                       basis[static_cast<std::size_t>(j)].leading().mono);
      queue.insert({i, j, l, l.total_degree()});
    }
  };
  for (int j = 1; j < static_cast<int>(basis.size()); ++j) push_pairs(j);

  while (!queue.empty()) {
    const Pair pr = *queue.begin();
    queue.erase(queue.begin());
    handled.insert({pr.i, pr.j});

    const Polynomial& fi = basis[static_cast<std::size_t>(pr.i)];
    const Polynomial& fj = basis[static_cast<std::size_t>(pr.j)];

    // product criterion: coprime leading terms reduce to zero
    if (fi.leading().mono.coprime(fj.leading().mono)) continue;

    // chain criterion: some k with lt_k | lcm(i,j) and both (i,k), (j,k) done
    bool skip = false;
    for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!basis[static_cast<std::size_t>(k)].leading().mono.divides(pr.lcm)) continue;
      const auto a = std::minmax(pr.i, k);
      const auto b = std::minmax(pr.j, k);
      if (handled.count({a.first, a.second}) && handled.count({b.first, b.second})) skip = true;
    }
    if (skip) continue;

    const Polynomial r = normal_form(s_polynomial(fi, fj), basis, order);
    if (!r.is_zero()) {
      basis.push_back(r.monic());
      push_pairs(static_cast<int>(basis.size()) - 1);
    }
  }

  // minimalize: drop every element whose leading term another one divides
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    if (int c = compare_monomials(order, a.leading().mono, b.leading().mono)) return c < 0;
    return a.terms().size() < b.terms().size();
  });
  std::vector<Polynomial> minimal;
  for (const auto& g : basis) {
    bool redundant = false;
    for (const auto& h : minimal)
      if (h.leading().mono.divides(g.leading().mono)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(g);
  }

  // inter-reduce tails; leading terms are pairwise non-dividing and survive
  std::vector<Polynomial> reduced = minimal;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(reduced.size() - 1);
    for (std::size_t j = 0; j < reduced.size(); ++j)
      if (j != i) others.push_back(reduced[j]);
    reduced[i] = normal_form(reduced[i], others, order).monic();
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return compare_monomials(order, a.leading().mono, b.leading().mono) < 0;
  });

  out.generators = std::move(reduced);
  return out;
}

}  // namespace dseq
