#ifndef AOMDD_ERROR_HPP
#define AOMDD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace aomdd {

// All recoverable failures (bad input files, contract violations) are
// reported through this type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace aomdd

#endif  // AOMDD_ERROR_HPP
