#pragma once

#include <stdexcept>
#include <string>

namespace balanced {

/// Raised by the text parsers. Carries the 1-based source line and a kind
/// so callers can tell malformed input apart from constraint violations.
class ParseError : public std::runtime_error {
  public:
    enum class Kind {
        MalformedHeader,
        MalformedEdge,
        OutOfRangeId,
        SelfLoop,
        DuplicateEdge,
        MalformedWalk,
    };

    ParseError(Kind kind, int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          kind_(kind),
          line_(line) {}

    Kind kind() const { return kind_; }
    int line() const { return line_; }

  private:
    Kind kind_;
    int line_;
};

/// A walk referenced a pair not present in the view. step() is the 0-based
/// index of the offending edge.
class WalkError : public std::runtime_error {
  public:
    WalkError(std::size_t step, const std::string& message)
        : std::runtime_error("step " + std::to_string(step) + ": " + message),
          step_(step) {}

    std::size_t step() const { return step_; }

  private:
    std::size_t step_;
};

/// Lookup of an absent pair in a ClassifiedView.
class NoSuchEdgeError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// The oracle's state-space budget was exceeded. Never a wrong answer.
class ResourceLimitError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace balanced
