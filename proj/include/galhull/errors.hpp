#ifndef GALHULL_ERRORS_HPP
#define GALHULL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace galhull {

/// Domain error carrying a stable machine-greppable code such as
/// "E_FIELD_MISMATCH". what() is always "<code>: <detail>" on a single line.
class CodeError : public std::runtime_error {
  public:
    CodeError(std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

  private:
    std::string code_;
};

}  // namespace galhull

#endif
