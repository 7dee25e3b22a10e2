#pragma once

#include <stdexcept>
#include <string>

namespace ringdna {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class NonUnitLeadingCoefficient : public Error {
public:
    NonUnitLeadingCoefficient() : Error("divisor has a non-unit leading coefficient") {}
};

class ZeroPolynomial : public Error {
public:
    ZeroPolynomial() : Error("operation undefined for the zero polynomial") {}
};

class UnsupportedLength : public Error {
public:
    explicit UnsupportedLength(int n)
        : Error("unsupported code length n=" + std::to_string(n) + " (need odd 1 <= n <= 63)") {}
};

class NotAFactor : public Error {
public:
    NotAFactor() : Error("polynomial is not a monic irreducible factor of x^n-1 over F2") {}
};

class InvalidGenerators : public Error {
public:
    using Error::Error;
};

class WrongForm : public Error {
public:
    using Error::Error;
};

class CapExceeded : public Error {
public:
    explicit CapExceeded(std::size_t cap)
        : Error("enumeration exceeded cap of " + std::to_string(cap) + " codewords") {}
};

class TrivialCode : public Error {
public:
    TrivialCode() : Error("minimum distance needs at least two codewords") {}
};

class LengthMismatch : public Error {
public:
    using Error::Error;
};

class BadAlphabet : public Error {
public:
    using Error::Error;
};

class OddLength : public Error {
public:
    OddLength() : Error("DNA word has odd length") {}
};

}  // namespace ringdna
