#pragma once

#include <stdexcept>
#include <string>

namespace babai {

// Base for every error the library raises on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input outside an operation's domain (bad vertex, distance > diameter, k out of range).
class DomainError : public Error {
public:
    using Error::Error;
};

// A construction was asked for a case it does not cover.
class InapplicableError : public Error {
public:
    using Error::Error;
};

// The requested object does not exist for these parameters.
class InfeasibleError : public Error {
public:
    using Error::Error;
};

// No proven closed form for this (space, k).
class NoClosedFormError : public Error {
public:
    using Error::Error;
};

// Search stopped at its configured work ceiling.
class BudgetExceededError : public Error {
public:
    using Error::Error;
};

} // namespace babai
