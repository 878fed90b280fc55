#pragma once

#include <stdexcept>
#include <string>

namespace vcalp {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A vertex identifier that is not present in the graph it was used with.
class InvalidVertex : public Error {
public:
    using Error::Error;
};

// A caller broke an operation's documented precondition.
class ContractViolation : public Error {
public:
    using Error::Error;
};

// A structural guarantee the algorithm depends on did not hold. Always a bug.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

// Brute-force oracle asked to run beyond its size cap.
class OracleRefusal : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace vcalp
