#include "dseq/order.hpp"

#include <cstdlib>

namespace dseq {

namespace {

// grevlex on the index range [lo, hi)
int grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
  int da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a.exponent(i);
    db += b.exponent(i);
  }
  if (da != db) return da < db ? -1 : 1;
  // equal degree: a > b iff the last nonzero entry of a - b is negative
  for (int i = hi - 1; i >= lo; --i) {
    int d = a.exponent(i) - b.exponent(i);
    if (d != 0) return d < 0 ? 1 : -1;
  }
  return 0;
}

int lex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
  for (int i = lo; i < hi; ++i) {
    int d = a.exponent(i) - b.exponent(i);
    if (d != 0) return d > 0 ? 1 : -1;
  }
  return 0;
}

}  // namespace

int compare_monomials(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars())
    throw input_error("compare_monomials: exponent-vector length mismatch");
  const int n = a.nvars();
  switch (order.kind) {
    case MonomialOrder::Kind::grevlex:
      return grevlex_range(a, b, 0, n);
    case MonomialOrder::Kind::lex:
      return lex_range(a, b, 0, n);
    case MonomialOrder::Kind::elimination_block: {
      if (order.block < 0 || order.block > n)
        throw input_error("elimination block out of range");
      if (int c = grevlex_range(a, b, 0, order.block)) return c;
      return grevlex_range(a, b, order.block, n);
    }
  }
  return 0;
}

std::string to_string(const MonomialOrder& order) {
  switch (order.kind) {
    case MonomialOrder::Kind::grevlex:
      return "grevlex";
    case MonomialOrder::Kind::lex:
      return "lex";
    case MonomialOrder::Kind::elimination_block:
      return "elim(" + std::to_string(order.block) + ")";
  }
  return "?";
}

MonomialOrder parse_order(const std::string& text) {
  if (text == "grevlex") return MonomialOrder::grevlex();
  if (text == "lex") return MonomialOrder::lex();
  if (text.rfind("elim(", 0) == 0 && text.back() == ')') {
    const std::string inner = text.substr(5, text.size() - 6);
    if (inner.empty() || inner.find_first_not_of("0123456789") != std::string::npos)
      throw input_error("bad elimination order: " + text);
    return MonomialOrder::elimination(std::atoi(inner.c_str()));
  }
  throw input_error("unknown monomial order: " + text);
}

}  // namespace dseq
