#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trendrank {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ill-formed UTF-8 input.
class DecodeError : public Error {
 public:
  DecodeError(std::size_t byte_offset)
      : Error("invalid UTF-8 at byte offset " + std::to_string(byte_offset)),
        byte_offset_(byte_offset) {}

  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

// Malformed corpus, trends or lexicon file content.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Numeric argument outside its admissible range.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Query against an index holding no mass.
class EmptyIndexError : public Error {
 public:
  EmptyIndexError() : Error("frequency index is empty") {}
};

// Operation requiring a non-empty sample space received none.
class EmptyInputError : public Error {
 public:
  EmptyInputError() : Error("empty sample space") {}
};

// File could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace trendrank
