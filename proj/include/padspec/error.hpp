#pragma once

#include <stdexcept>
#include <string>

namespace padspec {

/// Domain error with a machine-readable kind matching the error names of the
/// public interface ("GaugeMismatch", "HypothesisNotCertified", ...).
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& detail)
        : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& detail) {
    throw Error(kind, detail);
}

} // namespace padspec
