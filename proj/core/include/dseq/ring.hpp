#ifndef DSEQ_RING_HPP
#define DSEQ_RING_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "dseq/order.hpp"

namespace dseq {

// The ambient polynomial ring F_p[variables] with its active monomial order.
// Immutable after construction; shared by reference-counted handle.
class RingDescriptor {
 public:
  RingDescriptor(std::int64_t characteristic, std::vector<std::string> variables,
                 MonomialOrder order = MonomialOrder::grevlex());

  std::int64_t characteristic() const { return p_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& variables() const { return vars_; }
  const std::string& variable(int i) const { return vars_[static_cast<std::size_t>(i)]; }
  const MonomialOrder& order() const { return order_; }

  // -1 when absent
  int variable_index(std::string_view name) const;

  bool operator==(const RingDescriptor& o) const {
    return p_ == o.p_ && vars_ == o.vars_ && order_ == o.order_;
  }

 private:
  std::int64_t p_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

using Ring = std::shared_ptr<const RingDescriptor>;

Ring make_ring(std::int64_t characteristic, std::vector<std::string> variables,
               MonomialOrder order = MonomialOrder::grevlex());

inline bool same_ring(const Ring& a, const Ring& b) {
  return a == b || (a && b && *a == *b);
}

// New ring with one fresh variable in front and an elimination-block(1)
// order; used for intersections via the auxiliary-variable method.
Ring prepend_auxiliary_variable(const Ring& ring);

}  // namespace dseq

#endif
