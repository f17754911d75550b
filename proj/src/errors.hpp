#pragma once

#include <stdexcept>
#include <string>

namespace cdkit {

// Error categories. Kept in sync with the CDKIT_ERR_* codes in the public
// C header; capi.cpp maps one to the other.
enum class Errc {
  invalid_argument = 1,
  dimension_mismatch = 2,
  parse = 3,
  io = 4,
  numeric = 5,
  degenerate = 6,
  version = 7,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

// Parse failures carry the 1-based line number of the offending input line.
class ParseError : public Error {
 public:
  ParseError(long line, const std::string& what)
      : Error(Errc::parse, "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) {
  throw Error(c, msg);
}

}  // namespace cdkit
