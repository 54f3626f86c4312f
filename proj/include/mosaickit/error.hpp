#pragma once

#include <stdexcept>
#include <string>

namespace mosaickit {

/// Malformed input text or arguments. The CLI maps this to exit code 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A domain precondition failed (invalid mosaic, not in cap form, limit
/// exceeded, ...). The CLI maps this to exit code 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mosaickit
