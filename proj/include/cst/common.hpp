#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cst {

// All coefficients and counts are exact; cpp_int keeps everything integral.
using Int = boost::multiprecision::cpp_int;

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input (edge lists, graph6, partitions, JSON payloads).
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// A configured resource bound (vertex limits, code-word widths) was exceeded.
class BoundError : public Error {
public:
    using Error::Error;
};

// Arguments outside an operation's domain (unequal weights, zero family
// parameters, unknown pattern names).
class DomainError : public Error {
public:
    using Error::Error;
};

// Consistency tripwire: a state the underlying theory rules out. Reaching one
// of these means either a precondition was violated upstream or the code is
// wrong; never downgraded to a soft failure.
class InternalError : public Error {
public:
    using Error::Error;
};

Int factorial(int n);
Int binomial(int n, int k);

} // namespace cst
