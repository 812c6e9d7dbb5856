#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cartsum {

/// Invalid input data: non-finite values, empty vectors, bad table rows.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Caller misuse of an API, e.g. popping an empty heap.
class UsageError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Instance exceeds a configured size cap (oracle enumeration, multinomial expansion).
class SizeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Formula or file parse failure. `offset` is the byte offset into the parsed text.
class ParseError : public DomainError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : DomainError(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace cartsum
