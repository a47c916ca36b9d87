#pragma once

#include <stdexcept>
#include <string>

namespace sq7 {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MalformedRotation : Error {
  using Error::Error;
};

struct UnknownConfiguration : Error {
  explicit UnknownConfiguration(const std::string& name)
      : Error("unknown configuration: " + name) {}
};

struct UnknownLemma : Error {
  explicit UnknownLemma(const std::string& id) : Error("unknown lemma: " + id) {}
};

// Thrown for structures that are only detected, never list-colour verified.
struct DetectionOnly : Error {
  explicit DetectionOnly(const std::string& id)
      : Error("lemma is detection-only: " + id) {}
};

struct ExponentExceedsList : Error {
  ExponentExceedsList(int vertex, int exponent, int list_size)
      : Error("exponent " + std::to_string(exponent) + " at vertex " +
              std::to_string(vertex) + " is not below list size " +
              std::to_string(list_size)),
        vertex(vertex) {}
  int vertex;
};

struct Disconnected : Error {
  Disconnected() : Error("graph is disconnected") {}
};

struct NotCubic : Error {
  NotCubic() : Error("graph is not cubic") {}
};

struct SizeBound : Error {
  using Error::Error;
};

struct OverflowError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line(line) {}
  std::size_t line;
};

}  // namespace sq7

namespace sq7 {

/// The input violates a hypothesis of the discharging argument.
struct HypothesisViolation : Error {
  HypothesisViolation(const std::string& hypothesis, const std::string& detail)
      : Error("hypothesis violated: " + hypothesis + (detail.empty() ? "" : " (" + detail + ")")),
        hypothesis(hypothesis),
        detail(detail) {}
  std::string hypothesis;
  std::string detail;
};

}  // namespace sq7
