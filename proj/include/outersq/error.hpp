#pragma once

#include <stdexcept>
#include <string>

namespace outersq {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Precondition violations and malformed input.
class InvalidInput : public Error {
public:
    using Error::Error;
};

// An exact search ran out of its node budget before it could certify a value.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

// A structural routine reached a state its case analysis rules out.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace outersq
