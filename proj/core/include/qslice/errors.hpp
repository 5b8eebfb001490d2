#ifndef QSLICE_ERRORS_HPP
#define QSLICE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qslice {

// Base class of everything this library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ZeroDivisor : public Error {
public:
    using Error::Error;
};

class ArityMismatch : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

// Subset-indexed containers are capped at 12 variables (2^12 components).
class ArityLimitExceeded : public Error {
public:
    using Error::Error;
};

class NotAUnit : public Error {
public:
    using Error::Error;
};

class NotDivisible : public Error {
public:
    using Error::Error;
};

class NonOrderedMonomial : public Error {
public:
    using Error::Error;
};

class RealFiber : public Error {
public:
    using Error::Error;
};

class NotSliceInVariable : public Error {
public:
    using Error::Error;
};

class DegenerateStep : public Error {
public:
    using Error::Error;
};

// Raised by theorem verifiers when the input does not satisfy the
// theorem's hypotheses; verifiers never report residuals in that case.
class HypothesisViolated : public Error {
public:
    using Error::Error;
};

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& message, std::size_t position)
        : Error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

}  // namespace qslice

#endif
