#pragma once

#include <stdexcept>
#include <string>

namespace jetvar {

/// Reconstruction refused: the Helmholtz residual is nonzero, so the
/// homotopy formula carries no correctness guarantee.
class NotVariationalError : public std::runtime_error {
public:
    explicit NotVariationalError(std::string what) : std::runtime_error(std::move(what)) {}
};

/// Poincare antiderivative refused: the form is not closed.
class NotClosedError : public std::runtime_error {
public:
    explicit NotClosedError(std::string what) : std::runtime_error(std::move(what)) {}
};

}  // namespace jetvar
