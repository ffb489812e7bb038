#ifndef DSEQ_MODULE_HPP
#define DSEQ_MODULE_HPP

#include <span>

#include "dseq/ideal.hpp"

namespace dseq {

// A length, possibly infinite.  `truncated` marks values that were decided
// by the degreewise window heuristic rather than a standard-monomial count.
struct LengthValue {
  bool finite = false;
  long long value = 0;
  bool truncated = false;
  int bound = 0;

  static LengthValue exact(long long v) { return {true, v, false, 0}; }
  static LengthValue infinite() { return {false, 0, false, 0}; }
  static LengthValue truncated_finite(long long v, int bound) { return {true, v, true, bound}; }
  static LengthValue truncated_infinite(int bound) { return {false, 0, true, bound}; }

  bool operator==(const LengthValue& o) const {
    return finite == o.finite && (!finite || value == o.value);
  }
};

// The cyclic module M = S/J.  Submodules are ideals containing J.
class PresentedModule {
 public:
  PresentedModule(Ring ring, Ideal defining_ideal);

  const Ring& ring() const { return ring_; }
  const Ideal& defining_ideal() const { return j_; }
  bool homogeneous() const { return homogeneous_; }
  bool is_zero() const { return zero_; }  // 1 in J; representable but flagged

 private:
  Ring ring_;
  Ideal j_;
  bool homogeneous_;
  bool zero_;
};

// A submodule of M, carried by the ideal U + J of the ambient ring.
class Submodule {
 public:
  Submodule(const PresentedModule& m, const Ideal& carrier);
  const Ideal& carrier() const { return carrier_; }

 private:
  Ideal carrier_;
};

Submodule submodule(const PresentedModule& m, std::vector<Polynomial> gens);
Submodule whole_module(const PresentedModule& m);
Submodule zero_submodule(const PresentedModule& m);

Submodule module_colon(const PresentedModule& m, const Submodule& u, const Polynomial& by);
Submodule module_colon(const PresentedModule& m, const Submodule& u, const Ideal& by);

// dim_k of S/I: the number of standard monomials of the reduced basis
LengthValue colength(const Ideal& ideal);
// dim_k of the degree-d slice of S/I (counts standard monomials of degree d)
long long graded_dimension(const Ideal& ideal, int degree);

// l(U/V) for V contained in U.  Finite colengths subtract directly; when both
// carriers have infinite colength and everything is homogeneous the value is
// decided by a degreewise dimension window up to `truncation_bound`.
LengthValue length_of_quotient(const PresentedModule& m, const Submodule& u, const Submodule& v,
                               int truncation_bound = 20);

// combinatorial dimension of the initial ideal of J
int krull_dim(const PresentedModule& m);

bool is_system_of_parameters(const PresentedModule& m, std::span<const Polynomial> seq);

}  // namespace dseq

#endif
