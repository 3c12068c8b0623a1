#pragma once

#include <stdexcept>
#include <string>

namespace yb {

// Base class for typed failures. These are thrown for contract violations:
// malformed input, unsatisfied preconditions, misuse of an operation.
// Axiom-verification *results* are data (VerificationReport), never exceptions.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input (rational literals, JSON files, CSV rows).
struct ParseError : Error {
    using Error::Error;
};

// Dimensions of the operands do not line up.
struct ShapeMismatch : Error {
    using Error::Error;
};

// Matrix inversion hit a column with no usable pivot.
struct Singular : Error {
    long pivot_col;  // 1-based column where elimination failed
    explicit Singular(long col)
        : Error("matrix is singular: no pivot available for column " + std::to_string(col)),
          pivot_col(col) {}
};

// An exponential was requested for an operator that is not nilpotent.
struct NotNilpotent : Error {
    long tried_power;  // smallest power whose matrix was still nonzero
    NotNilpotent(long power, const std::string& witness)
        : Error("operator is not nilpotent: power " + std::to_string(power) +
                " is still nonzero (" + witness + ")"),
          tried_power(power) {}
};

// A bilinear form failed the 2-cocycle identity.
struct NotACocycle : Error {
    long x, y, z;        // 1-based basis triple witnessing the failure
    std::string defect;  // value of w([x,y],z) - w([x,z],y) - w(x,[y,z])
    NotACocycle(long x_, long y_, long z_, const std::string& defect_)
        : Error("form is not a 2-cocycle: defect " + defect_ + " at basis triple (" +
                std::to_string(x_) + "," + std::to_string(y_) + "," + std::to_string(z_) + ")"),
          x(x_), y(y_), z(z_), defect(defect_) {}
};

// The element offered as a unit witness is not central.
struct NotCentral : Error {
    using Error::Error;
};

// A construction requiring a cocommutative coalgebra received one that is not.
struct NotCocommutative : Error {
    using Error::Error;
};

// A builder was asked for a variant it does not know.
struct UnknownVariant : Error {
    using Error::Error;
};

}  // namespace yb
