#ifndef KPD_ERRORS_HPP
#define KPD_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kpd {

// Base type for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands live in different truncation rings or ambient dimensions.
struct DimensionMismatch : Error {
    using Error::Error;
};

// A constant term (or divisor) is not invertible in its coefficient domain.
struct NotAUnit : Error {
    using Error::Error;
};

// Logarithm of a series whose constant term is not 1.
struct NotNormalized : Error {
    using Error::Error;
};

// Exponential of a series whose constant term is not 0.
struct NotNilpotent : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

// A polynomial degree exceeds the ambient dimension.
struct DegreeTooHigh : Error {
    using Error::Error;
};

// The polynomial is not an integer combination of the subspace Hilbert basis.
struct NotInHilbertLattice : Error {
    using Error::Error;
};

// Chern data with no preimage among integer K-classes.
struct NotRepresentable : Error {
    using Error::Error;
};

// Malformed structured input: table data, file contents, flag values.
struct ValidationError : Error {
    using Error::Error;
};

// Expression text failed to parse; offset() is the byte position of the fault.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// An identifier other than the expected variable appeared in an expression.
class WrongVariable : public Error {
public:
    WrongVariable(const std::string& what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

} // namespace kpd

#endif // KPD_ERRORS_HPP
