#ifndef DSEQ_IDEAL_HPP
#define DSEQ_IDEAL_HPP

#include <memory>
#include <vector>

#include "dseq/groebner.hpp"

namespace dseq {

// An ideal of the ambient ring, held by its (possibly redundant) generator
// list.  Reduced Groebner bases are computed lazily and cached per order;
// the cache is shared across copies and safe for concurrent readers.
class Ideal {
 public:
  Ideal(Ring ring, std::vector<Polynomial> generators);

  static Ideal zero(Ring ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(Ring ring);
  static Ideal span(std::vector<Polynomial> generators);  // ring from the gens

  const Ring& ring() const;
  const std::vector<Polynomial>& generators() const;
  bool is_zero() const { return generators().empty(); }
  bool is_unit() const;

  const GroebnerBasis& groebner(const MonomialOrder& order) const;
  const GroebnerBasis& groebner() const;  // ring's active order

  bool contains(const Polynomial& f) const;

 private:
  struct Data;
  std::shared_ptr<Data> data_;
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, int k);  // a^0 is the unit ideal

// I cap J via elimination of one auxiliary variable from t*I + (1-t)*J
Ideal intersect(const Ideal& a, const Ideal& b);

// (I : f), computed from I cap (f) with generators divided by f
Ideal colon(const Ideal& ideal, const Polynomial& by);
// (I : J) = intersection of (I : g) over the generators g of J
Ideal colon(const Ideal& ideal, const Ideal& by);

struct Saturation {
  Ideal ideal;  // the stable value of I : by^n
  int index;    // least n >= 1 with I : by^n == I : by^(n+1)
  std::vector<Ideal> chain;  // chain[k] == I : by^k, chain[0] == I
};
Saturation saturate(const Ideal& ideal, const Ideal& by);

// equality via identical reduced grevlex bases
bool ideal_equal(const Ideal& a, const Ideal& b);
// outer contains inner
bool ideal_contains(const Ideal& outer, const Ideal& inner);

std::string to_string(const Ideal& ideal);

}  // namespace dseq

#endif
