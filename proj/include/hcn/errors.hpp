#ifndef HCN_ERRORS_HPP
#define HCN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hcn {

// Base for everything thrown by this library. The CLI maps any Error to exit code 2.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mathematically invalid argument (e.g. Kronecker symbol at (0,0), Re s outside a
// convergence region, nonpositive quadrature argument).
struct DomainError : Error {
    using Error::Error;
};

// Index or parameter outside the range a table or grid supports.
struct RangeError : Error {
    using Error::Error;
};

// Requested table cannot be represented (too many cells, or cell width would overflow).
struct CapacityError : Error {
    using Error::Error;
};

// Grid unusable for a least-squares fit (too few points or zero span).
struct DegenerateGridError : RangeError {
    using RangeError::RangeError;
};

struct UnsupportedFamilyError : DomainError {
    using DomainError::DomainError;
};

// Table file problems, split by failure mode so callers can react precisely.
struct TableIoError : Error {
    using Error::Error;
};
struct CorruptHeaderError : TableIoError {
    using TableIoError::TableIoError;
};
struct VersionMismatchError : TableIoError {
    using TableIoError::TableIoError;
};
struct TruncatedPayloadError : TableIoError {
    using TableIoError::TableIoError;
};

} // namespace hcn

#endif
