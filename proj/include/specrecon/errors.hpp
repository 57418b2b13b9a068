#ifndef SPECRECON_ERRORS_HPP_
#define SPECRECON_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <utility>

namespace specrecon {

// A linear system that the method contract assumes solvable turned out
// rank-deficient (e.g. linearly dependent filter rows).
class SingularSystemError : public std::runtime_error {
 public:
  explicit SingularSystemError(const std::string& what)
      : std::runtime_error(what) {}
};

// File-level problems. `code()` is a stable machine-readable tag
// ("malformed-header", "payload-size-mismatch", "dtype-mismatch", ...).
class IoError : public std::runtime_error {
 public:
  IoError(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// A metric has no defined value for the given inputs.
class MetricError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace specrecon

#endif  // SPECRECON_ERRORS_HPP_
