#include <univalent/error.hpp>

namespace univalent
{

std::string_view to_string(Errc code) noexcept
{
    switch (code) {
        case Errc::DivisionByNonUnit:
            return "DivisionByNonUnit";
        case Errc::OrderMismatch:
            return "OrderMismatch";
        case Errc::BranchPointAtOrigin:
            return "BranchPointAtOrigin";
        case Errc::InnerNotVanishing:
            return "InnerNotVanishing";
        case Errc::NotInvertibleAtOrigin:
            return "NotInvertibleAtOrigin";
        case Errc::RadiusExceeded:
            return "RadiusExceeded";
        case Errc::NotNormalized:
            return "NotNormalized";
        case Errc::ParamOutOfRange:
            return "ParamOutOfRange";
        case Errc::DegreeTooLarge:
            return "DegreeTooLarge";
        case Errc::OrderOutOfRange:
            return "OrderOutOfRange";
        case Errc::QuadratureUnderresolved:
            return "QuadratureUnderresolved";
        case Errc::BranchSelectionFailure:
            return "BranchSelectionFailure";
        case Errc::PoleAtMinusOne:
            return "PoleAtMinusOne";
        case Errc::StepRejected:
            return "StepRejected";
        case Errc::TrajectoryEscaped:
            return "TrajectoryEscaped";
        case Errc::DerivativeUnderflow:
            return "DerivativeUnderflow";
        case Errc::BranchTrackingFailure:
            return "BranchTrackingFailure";
        case Errc::ChainUnavailable:
            return "ChainUnavailable";
        case Errc::UnknownFunction:
            return "UnknownFunction";
        case Errc::UnknownSuite:
            return "UnknownSuite";
        case Errc::IoFailure:
            return "IoFailure";
    }
    return "Unknown";
}

} // namespace univalent
