#ifndef SWNET_ERRORS_HPP
#define SWNET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace swnet {

// Input text could not be parsed. `line` is 1-based; 0 means "not line-specific".
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A requested enumeration or build exceeds a configured resource cap.
class limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A randomized construction failed to converge (retry with another seed),
// or an internal structural check failed during a build.
class build_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The operation's precondition on this particular input does not hold
// (e.g. auditing a network against an input it does not accept).
class not_applicable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace swnet

#endif
