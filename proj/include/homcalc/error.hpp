#pragma once

#include <stdexcept>
#include <string>

namespace homcalc {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operands built over different variable lists.
class VariableMismatch : public Error {
public:
    using Error::Error;
};

class NonInvertible : public Error {
public:
    using Error::Error;
};

class GradeError : public Error {
public:
    using Error::Error;
};

class RankMismatch : public Error {
public:
    using Error::Error;
};

// A construction whose input failed a validated precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

} // namespace homcalc
