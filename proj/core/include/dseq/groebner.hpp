#ifndef DSEQ_GROEBNER_HPP
#define DSEQ_GROEBNER_HPP

#include <span>
#include <vector>

#include "dseq/polynomial.hpp"

namespace dseq {

// A reduced Groebner basis: monic, auto-reduced, sorted ascending by leading
// monomial.  Unique for a fixed ideal and order, so basis equality is ideal
// equality.  `source` keeps the generators the basis was computed from.
struct GroebnerBasis {
  Ring ring;
  MonomialOrder order;
  std::vector<Polynomial> generators;
  std::vector<Polynomial> source;
};

GroebnerBasis groebner_basis(std::vector<Polynomial> gens, const MonomialOrder& order);

struct DivisionResult {
  Polynomial remainder;
  std::vector<Polynomial> quotients;  // parallel to the reducers
};

// Full multivariate division: no term of the remainder is divisible by any
// reducer's leading term, and f = sum(quotients[i] * reducers[i]) + remainder.
DivisionResult divide(const Polynomial& f, std::span<const Polynomial> reducers,
                      const MonomialOrder& order);

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> reducers,
                       const MonomialOrder& order);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

bool ideal_membership(const Polynomial& f, const GroebnerBasis& gb);

}  // namespace dseq

#endif
