#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bredim {

// Malformed or inconsistent input: parse failures, dimension mismatches,
// violated structural invariants. The CLI maps these to exit status 2.
class InputError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
  public:
    ParseError(std::size_t line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

// A request outside the parameter range where a closed form is known to hold.
// The CLI maps these to exit status 3.
class OutOfRangeError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace bredim
