#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace insider {

struct Diagnostic {
  std::size_t line = 0;    // 1-based
  std::size_t column = 0;  // 1-based
  std::string message;

  std::string str() const;
  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

/// Parse failure carrying every diagnostic found, ordered by position.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

}  // namespace insider
