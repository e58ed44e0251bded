#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace homcount {

// Domain error carrying a stable machine-readable label next to the
// human-readable message. The CLI maps these to {"error": ...} objects.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string label, const std::string& message)
        : std::runtime_error(message), label_(std::move(label)) {}

    const std::string& label() const noexcept { return label_; }

private:
    std::string label_;
};

} // namespace homcount
