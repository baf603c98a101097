#pragma once

#include <stdexcept>
#include <string>

namespace frob {

// Violated mathematical precondition (bad input to an operation):
// derogatory matrix passed to jordanize, non-commuting generators, division
// by zero, mismatched quadratic extensions, ...
class MathError : public std::runtime_error {
public:
    explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

// Two independently computed routes disagreed.  This is never a user error:
// it means one of the implementations is wrong, so it derives from
// logic_error and is not meant to be caught in normal control flow.
class CrossCheckError : public std::logic_error {
public:
    explicit CrossCheckError(const std::string& what) : std::logic_error(what) {}
};

// Malformed input document (JSON syntax or schema violation).  The message
// includes a location: either the parser's byte offset or the path of the
// offending field.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace frob
