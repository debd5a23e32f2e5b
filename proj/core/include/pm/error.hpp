#ifndef PM_ERROR_HPP
#define PM_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed formula text. `position` is the 0-based character offset.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class CaptureError : public Error {
 public:
  using Error::Error;
};

// Bad world/model file or a reference to something the world lacks.
class WorldError : public Error {
 public:
  using Error::Error;
};

// Formula or assignment outside an evaluator's domain.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

// Operands of a dotted union whose shapes cannot be aligned.
class StructureMismatch : public Error {
 public:
  using Error::Error;
};

// Malformed proof script line.
class ProofFormatError : public Error {
 public:
  ProofFormatError(const std::string& message, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace pm

#endif  // PM_ERROR_HPP
