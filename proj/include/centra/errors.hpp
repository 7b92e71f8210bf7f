#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace centra {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotAGroup : public Error {
 public:
  explicit NotAGroup(const std::string& reason) : Error("not a group: " + reason) {}
};

class NotNormal : public Error {
 public:
  explicit NotNormal(const std::string& what) : Error("subgroup is not normal: " + what) {}
};

class NotProper : public Error {
 public:
  NotProper() : Error("subgroup must be proper") {}
};

class OutOfRange : public Error {
 public:
  explicit OutOfRange(const std::string& what) : Error("parameter out of range: " + what) {}
};

class NotPrime : public Error {
 public:
  explicit NotPrime(std::uint64_t p) : Error("not a prime: " + std::to_string(p)) {}
};

/// Raised by predicates that are only defined for non-abelian groups.
class AbelianInput : public Error {
 public:
  AbelianInput() : Error("operation requires a non-abelian group") {}
};

/// Raised by predicates that are only defined for groups of prime-power order.
class NotPGroup : public Error {
 public:
  explicit NotPGroup(std::size_t order)
      : Error("group of order " + std::to_string(order) + " is not a p-group") {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class NotAPermutation : public Error {
 public:
  explicit NotAPermutation(const std::string& what) : Error("not a permutation: " + what) {}
};

class OrderCapExceeded : public Error {
 public:
  explicit OrderCapExceeded(std::size_t cap)
      : Error("group order exceeds the configured cap of " + std::to_string(cap)), cap_(cap) {}

  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

class SearchBudgetExceeded : public Error {
 public:
  explicit SearchBudgetExceeded(std::uint64_t budget)
      : Error("isoclinism search exceeded its budget of " + std::to_string(budget) + " nodes"),
        budget_(budget) {}

  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t budget_;
};

}  // namespace centra
