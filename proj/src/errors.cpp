#include "lagloci/errors.hpp"

namespace lagloci {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::OrderExhausted: return "OrderExhausted";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::SingularAtOrigin: return "SingularAtOrigin";
    case ErrorCode::RankDeficientAtOrigin: return "RankDeficientAtOrigin";
    case ErrorCode::InconsistentSystem: return "InconsistentSystem";
    case ErrorCode::ZeroCubic: return "ZeroCubic";
    case ErrorCode::NotDegenerate: return "NotDegenerate";
    case ErrorCode::DegenerateFiber: return "DegenerateFiber";
    case ErrorCode::SolutionSpaceNotRank2: return "SolutionSpaceNotRank2";
    case ErrorCode::NotAnIsomorphism: return "NotAnIsomorphism";
    case ErrorCode::WrongKappaImage: return "WrongKappaImage";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::SingularGroupElement: return "SingularGroupElement";
    case ErrorCode::NotSiegel: return "NotSiegel";
    case ErrorCode::NotImmersed: return "NotImmersed";
    case ErrorCode::InvalidGerm: return "InvalidGerm";
    case ErrorCode::NotNullCurve: return "NotNullCurve";
    case ErrorCode::NoAdmissibleChart: return "NoAdmissibleChart";
    case ErrorCode::E0ConditionFails: return "E0ConditionFails";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

}  // namespace lagloci
