#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace jkres {

// Input that fails schema or structural validation (CLI exit code 2).
class validation_error : public std::runtime_error {
public:
    validation_error(std::string field, const std::string& what)
        : std::runtime_error(what), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

// A mathematical precondition does not hold: wall point, divergent
// limit request, singular basis matrix, ... (CLI exit code 3).
class precondition_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A truncated-series result changed under window doubling (CLI exit code 4).
class stability_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A required exponent fell outside the truncation window; the caller
// must widen the window.
class window_overflow : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A self-check that is supposed to hold by construction failed
// (e.g. the diagonal-basis duality matrix is not the identity).
class verification_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace jkres
