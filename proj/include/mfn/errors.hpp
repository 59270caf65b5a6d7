#ifndef MFN_ERRORS_HPP
#define MFN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mfn {

// Base class for every error thrown by this library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two values from different vertex universes were mixed in one operation.
class universe_mismatch : public error {
 public:
  using error::error;
};

// An operation whose domain excludes the empty value received one
// (empty set for the intersection image, empty word, empty family).
class empty_argument : public error {
 public:
  using error::error;
};

// A request would exceed a configured enumeration cap.
class cap_exceeded : public error {
 public:
  using error::error;
};

// A scalar argument is outside the operation's domain
// (zero closure modulus, non-positive integer, composite where a prime
// is required, unrecognized set description).
class bad_argument : public error {
 public:
  using error::error;
};

// A structural precondition on the input does not hold
// (graph-kind violation, non-undirected input, non-strict input, ...).
class precondition_violation : public error {
 public:
  using error::error;
};

// Malformed input text (graph files).
class parse_error : public error {
 public:
  parse_error(const std::string& what, int line)
      : error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace mfn

#endif  // MFN_ERRORS_HPP
