#ifndef DSEQ_POLYNOMIAL_HPP
#define DSEQ_POLYNOMIAL_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dseq/ring.hpp"

namespace dseq {

struct Term {
  Monomial mono;
  std::int64_t coeff;  // in [1, p-1]; zero coefficients are never stored
};

// Sparse multivariate polynomial over F_p in canonical form: terms are kept
// strictly descending under the ring's active order, the leading term is
// terms().front().  Values are immutable; every operation returns a fresh
// canonical polynomial.
class Polynomial {
 public:
  static Polynomial zero(Ring ring);
  static Polynomial constant(Ring ring, std::int64_t c);
  static Polynomial variable(Ring ring, int index);
  static Polynomial term(Ring ring, Monomial m, std::int64_t c = 1);
  static Polynomial from_terms(Ring ring, std::vector<Term> terms);

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || terms_.front().mono.is_one(); }
  bool is_monomial() const { return terms_.size() == 1; }

  const Term& leading() const;
  int total_degree() const;  // -1 for the zero polynomial
  bool is_homogeneous() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scale(std::int64_t c) const;
  Polynomial pow(int k) const;
  Polynomial monic() const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

 private:
  Polynomial(Ring ring, std::vector<Term> terms)
      : ring_(std::move(ring)), terms_(std::move(terms)) {}

  static std::vector<Term> normalize(const Ring& ring, std::vector<Term> terms);
  void check_same_ring(const Polynomial& o) const;

  Ring ring_;
  std::vector<Term> terms_;
};

std::string to_string(const Polynomial& f);
std::string to_string(const Monomial& m, const Ring& ring);

// Grammar: integer coefficients, '*' for products, '^' for powers, '+'/'-',
// variable names as declared in the ring; whitespace insignificant.
// Example: x1^2*x2*x3 - 3*x3^2
Polynomial parse_polynomial(std::string_view text, const Ring& ring);

}  // namespace dseq

#endif
