#pragma once

#include <stdexcept>
#include <string>

namespace treeskel {

// Thrown when an instance exceeds a configured enumeration or pair budget.
class resource_limit_error : public std::runtime_error {
 public:
  explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an input violates an operation's contract in a way that is a
// bug in the caller rather than a property of the instance (e.g. projecting
// a tree that is not in the family).
class contract_error : public std::logic_error {
 public:
  explicit contract_error(const std::string& what) : std::logic_error(what) {}
};

class io_error : public std::runtime_error {
 public:
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace treeskel
