#ifndef DSEQ_ORDER_HPP
#define DSEQ_ORDER_HPP

#include <string>

#include "dseq/monomial.hpp"

namespace dseq {

// A total multiplicative well-order on exponent vectors.
//
// grevlex            degree first, ties broken reverse-lexicographically
// lex                first declared variable dominates
// elimination_block  grevlex on the first `block` variables, then grevlex
//                    on the rest; eliminates the leading block
struct MonomialOrder {
  enum class Kind { grevlex, lex, elimination_block };

  Kind kind = Kind::grevlex;
  int block = 0;

  static MonomialOrder grevlex() { return {Kind::grevlex, 0}; }
  static MonomialOrder lex() { return {Kind::lex, 0}; }
  static MonomialOrder elimination(int k) { return {Kind::elimination_block, k}; }

  bool operator==(const MonomialOrder&) const = default;
};

// -1 / 0 / +1 for a < b / a == b / a > b under `order`.
int compare_monomials(const MonomialOrder& order, const Monomial& a, const Monomial& b);

std::string to_string(const MonomialOrder& order);

// Accepts "grevlex", "lex", "elim(k)".
MonomialOrder parse_order(const std::string& text);

}  // namespace dseq

#endif
