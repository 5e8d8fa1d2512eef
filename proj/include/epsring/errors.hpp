#pragma once

#include <stdexcept>
#include <string>

namespace epsring {

// Base for all library errors. Subclasses carry a status code that the C API
// and the CLI map onto exit codes.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg, int code = 1)
        : std::runtime_error(msg), code_(code) {}
    int code() const { return code_; }

private:
    int code_;
};

// Malformed input document (status 2).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg, 2) {}
};

// Structurally valid input that fails algebra or grading validation (status 3).
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg, 3) {}
};

// Operation requires an epsilon-strong grading and the input is not (status 4).
class NotEpsilonStrongError : public Error {
public:
    explicit NotEpsilonStrongError(const std::string& msg) : Error(msg, 4) {}
};

// A mathematically guaranteed identity failed at runtime. Always a bug in
// this library, never a property of the input (status 5).
class TheoremViolation : public Error {
public:
    explicit TheoremViolation(const std::string& msg) : Error(msg, 5) {}
};

// Twisted partial action axiom failure (status 6).
class ActionAxiomError : public Error {
public:
    explicit ActionAxiomError(const std::string& msg) : Error(msg, 6) {}
};

// A bounded search ran out without a definite answer (status 7).
class SearchExhausted : public Error {
public:
    explicit SearchExhausted(const std::string& msg) : Error(msg, 7) {}
};

}  // namespace epsring
