#pragma once

#include <stdexcept>
#include <string>

namespace postlat {

/// Malformed arguments: arity mismatches, bad literals, unknown names.
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration would exceed its configured work cap.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent constructions of the same object disagreed.
class consistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace postlat
