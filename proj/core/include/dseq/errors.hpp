#ifndef DSEQ_ERRORS_HPP
#define DSEQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dseq {

// Bad input: malformed text, mixed rings, violated preconditions.
// The CLI maps this to exit code 1.
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A guaranteed implication failed at runtime.  This never means the input
// is bad; it means the build is.  The CLI maps this to exit code 2.
class property_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dseq

#endif
