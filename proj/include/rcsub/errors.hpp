#pragma once

#include <stdexcept>
#include <string>

namespace rcsub {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The cover relation handed to from_covers is not acyclic.
class CycleDetected : public Error {
public:
    using Error::Error;
};

// Some pair of elements lacks a unique meet or join.
class NotALattice : public Error {
public:
    using Error::Error;
};

class NotComparable : public Error {
public:
    using Error::Error;
};

// A size or work budget was exceeded. Distinct from a negative answer.
class Overbudget : public Error {
public:
    using Error::Error;
};

class NotDistributive : public Error {
public:
    using Error::Error;
};

class NotAChain : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

} // namespace rcsub
