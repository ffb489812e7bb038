#include "dseq/ring.hpp"

#include <unordered_set>

#include "dseq/errors.hpp"
#include "dseq/fp.hpp"

namespace dseq {

namespace {

bool identifier_shaped(const std::string& name) {
  if (name.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  auto alnum = [&](char c) { return alpha(c) || (c >= '0' && c <= '9'); };
  if (!alpha(name[0])) return false;
  for (char c : name)
    if (!alnum(c)) return false;
  return true;
}

}  // namespace

RingDescriptor::RingDescriptor(std::int64_t characteristic, std::vector<std::string> variables,
                               MonomialOrder order)
    : p_(characteristic), vars_(std::move(variables)), order_(order) {
  if (p_ <= 2 || p_ >= (std::int64_t{1} << 31) || !fp::is_prime(p_))
    throw input_error("characteristic must be a prime with 2 < p < 2^31");
  if (vars_.empty()) throw input_error("a ring needs at least one variable");
  std::unordered_set<std::string> seen;
  for (const auto& v : vars_) {
    if (!identifier_shaped(v))
      throw input_error("variable name not usable in the polynomial grammar: '" + v + "'");
    if (!seen.insert(v).second) throw input_error("duplicate variable name: '" + v + "'");
  }
  if (order_.kind == MonomialOrder::Kind::elimination_block &&
      (order_.block < 0 || order_.block > nvars()))
    throw input_error("elimination block out of range for this ring");
}

int RingDescriptor::variable_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

Ring make_ring(std::int64_t characteristic, std::vector<std::string> variables,
               MonomialOrder order) {
  return std::make_shared<const RingDescriptor>(characteristic, std::move(variables), order);
}

Ring prepend_auxiliary_variable(const Ring& ring) {
  std::string name = "t";
  for (int k = 0; ring->variable_index(name) >= 0; ++k) name = "t" + std::to_string(k);
  std::vector<std::string> vars;
  vars.reserve(static_cast<std::size_t>(ring->nvars()) + 1);
  vars.push_back(name);
  for (const auto& v : ring->variables()) vars.push_back(v);
  return make_ring(ring->characteristic(), std::move(vars), MonomialOrder::elimination(1));
}

}  // namespace dseq
