#pragma once

#include <stdexcept>
#include <string>

namespace fuglede {

// Caller violated a documented precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input that cannot be represented exactly (irrational or symbolic values).
class UnsupportedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A search or enumeration would exceed its configured guard.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A residue set that fails to tile at least one fiber of an interval union.
class NotCommonComplement : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A family member that is not a spectrum of the supplied point set.
class InvalidFamily : public std::invalid_argument {
 public:
  InvalidFamily(const std::string& what, std::size_t index)
      : std::invalid_argument(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace fuglede
