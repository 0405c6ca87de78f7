#include "kinematica/errors.hpp"

namespace kinematica {

std::string_view error_name(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::DomainError: return "DomainError";
        case ErrorKind::PoleError: return "PoleError";
        case ErrorKind::KappaMismatch: return "KappaMismatch";
        case ErrorKind::ZeroDivisorError: return "ZeroDivisorError";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::AtInfinity: return "AtInfinity";
        case ErrorKind::InadmissiblePoint: return "InadmissiblePoint";
        case ErrorKind::SingularMap: return "SingularMap";
        case ErrorKind::DivergentContraction: return "DivergentContraction";
        case ErrorKind::UnknownName: return "UnknownName";
        case ErrorKind::NotOnSigma: return "NotOnSigma";
        case ErrorKind::ProjectionPole: return "ProjectionPole";
        case ErrorKind::OutsideModel: return "OutsideModel";
        case ErrorKind::BoundarySingularity: return "BoundarySingularity";
        case ErrorKind::WrongGeometry: return "WrongGeometry";
        case ErrorKind::NullOrImaginarySeparation: return "NullOrImaginarySeparation";
        case ErrorKind::DenominatorNotInvertible: return "DenominatorNotInvertible";
        case ErrorKind::NotAVector: return "NotAVector";
        case ErrorKind::GradeError: return "GradeError";
        case ErrorKind::DegeneratePlane: return "DegeneratePlane";
        case ErrorKind::NotUnitAxis: return "NotUnitAxis";
        case ErrorKind::NotSpin: return "NotSpin";
        case ErrorKind::DecompositionFailure: return "DecompositionFailure";
        case ErrorKind::NonConvergence: return "NonConvergence";
        case ErrorKind::SingularMetric: return "SingularMetric";
    }
    return "Error";
}

}  // namespace kinematica
