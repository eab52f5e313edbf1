#pragma once

#include <stdexcept>
#include <string>

namespace bgk {

/// Argument outside the mathematical domain of an operation (negative a, |mu| >= alpha, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Evaluation requested in the wrong region of the complex plane, e.g. an
/// off-cut routine called on the spectral cut.
class RegionError : public std::domain_error {
public:
    explicit RegionError(const std::string& what) : std::domain_error(what) {}
};

/// A numerical evaluation produced a non-finite value or failed to converge.
class EvaluationError : public std::runtime_error {
public:
    explicit EvaluationError(const std::string& what) : std::runtime_error(what) {}
};

/// Contour passes through the cut or through a (near-)zero of the dispersion function.
class IllConditionedContour : public std::runtime_error {
public:
    explicit IllConditionedContour(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bgk
