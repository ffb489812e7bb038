#ifndef DSEQ_MONOMIAL_HPP
#define DSEQ_MONOMIAL_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "dseq/errors.hpp"

namespace dseq {

// An exponent vector.  The variable count is fixed by the ambient ring;
// all binary operations require equal lengths.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {
    for (int x : e_)
      if (x < 0) throw input_error("negative exponent in monomial");
  }

  static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }

  int nvars() const { return static_cast<int>(e_.size()); }
  int exponent(int i) const { return e_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& exponents() const { return e_; }

  int total_degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }
  bool is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; });
  }

  Monomial operator*(const Monomial& o) const {
    check(o);
    std::vector<int> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] + o.e_[i];
    return Monomial(std::move(r));
  }

  Monomial pow(int k) const {
    if (k < 0) throw input_error("negative monomial power");
    std::vector<int> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] * k;
    return Monomial(std::move(r));
  }

  // true iff this divides o
  bool divides(const Monomial& o) const {
    check(o);
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  // this / by, assuming by | this
  Monomial divide(const Monomial& by) const {
    check(by);
    std::vector<int> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) {
      r[i] = e_[i] - by.e_[i];
      if (r[i] < 0) throw input_error("inexact monomial division");
    }
    return Monomial(std::move(r));
  }

  static Monomial gcd(const Monomial& a, const Monomial& b) {
    a.check(b);
    std::vector<int> r(a.e_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::min(a.e_[i], b.e_[i]);
    return Monomial(std::move(r));
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    a.check(b);
    std::vector<int> r(a.e_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::max(a.e_[i], b.e_[i]);
    return Monomial(std::move(r));
  }

  bool coprime(const Monomial& o) const {
    check(o);
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > 0 && o.e_[i] > 0) return false;
    return true;
  }

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }

 private:
  void check(const Monomial& o) const {
    if (e_.size() != o.e_.size())
      throw input_error("monomial exponent-vector length mismatch");
  }

  std::vector<int> e_;
};

// Plain lexicographic comparison of the raw exponent vectors.  This is a
// container ordering for canonical generator sets, not a monomial order.
inline bool exponent_less(const Monomial& a, const Monomial& b) {
  return a.exponents() < b.exponents();
}

}  // namespace dseq

#endif
