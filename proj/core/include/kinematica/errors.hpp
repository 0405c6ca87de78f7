#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kinematica {

enum class ErrorKind {
    DomainError,
    PoleError,
    KappaMismatch,
    ZeroDivisorError,
    DivisionByZero,
    AtInfinity,
    InadmissiblePoint,
    SingularMap,
    DivergentContraction,
    UnknownName,
    NotOnSigma,
    ProjectionPole,
    OutsideModel,
    BoundarySingularity,
    WrongGeometry,
    NullOrImaginarySeparation,
    DenominatorNotInvertible,
    NotAVector,
    GradeError,
    DegeneratePlane,
    NotUnitAxis,
    NotSpin,
    DecompositionFailure,
    NonConvergence,
    SingularMetric,
};

std::string_view error_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::string_view name() const noexcept { return error_name(kind_); }

private:
    ErrorKind kind_;
};

}  // namespace kinematica
