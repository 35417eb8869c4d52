#pragma once

#include <stdexcept>
#include <string>

namespace stsrank {

/// Invalid input or violated precondition (CLI exit code 1).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A formula needs a base constant the registry does not hold (CLI exit code 2).
class UnknownConstantError : public std::runtime_error {
 public:
  UnknownConstantError(std::string symbol, unsigned order)
      : std::runtime_error("unknown constant " + symbol + "_" + std::to_string(order)),
        symbol_(std::move(symbol)),
        order_(order) {}

  const std::string& symbol() const { return symbol_; }
  unsigned order() const { return order_; }

 private:
  std::string symbol_;
  unsigned order_;
};

/// A desk-scale enumeration guard was exceeded (CLI exit code 3).
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace stsrank
