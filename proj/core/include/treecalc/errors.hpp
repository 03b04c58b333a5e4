#pragma once

#include <stdexcept>
#include <string>

namespace treecalc {

// Base of every error the library raises. All errors are exceptions; the CLI
// maps them onto exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Polynomial long division left a nonzero remainder.
class NonExactDivision : public Error {
public:
    using Error::Error;
};

// A rational that was required to be an integer was not.
class NonIntegerResult : public Error {
public:
    using Error::Error;
};

// Requested size exceeds an enumeration guard and no override was given.
class SizeGuard : public Error {
public:
    using Error::Error;
};

class BasisMismatch : public Error {
public:
    using Error::Error;
};

// Dendriform / tridendriform half products are only defined on the
// augmentation ideal (no degree-0 part).
class EmptyOperand : public Error {
public:
    using Error::Error;
};

// An operator handed to a fixed-point engine does not raise valuation enough
// for the tree expansion to be finite at each order.
class ValuationViolation : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class VariantArityMismatch : public Error {
public:
    using Error::Error;
};

} // namespace treecalc
