#include "nilorb/error.hpp"

namespace nilorb {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidPartition: return "InvalidPartition";
        case ErrorCode::EmptyDiagram: return "EmptyDiagram";
        case ErrorCode::RowTooShort: return "RowTooShort";
        case ErrorCode::ColumnTooShort: return "ColumnTooShort";
        case ErrorCode::SizeMismatch: return "SizeMismatch";
        case ErrorCode::BoundExceeded: return "BoundExceeded";
        case ErrorCode::ParityMismatch: return "ParityMismatch";
        case ErrorCode::NotAnOrbit: return "NotAnOrbit";
        case ErrorCode::NotSpecial: return "NotSpecial";
        case ErrorCode::UnsupportedFamily: return "UnsupportedFamily";
        case ErrorCode::InvalidFilter: return "InvalidFilter";
        case ErrorCode::InvalidDualPair: return "InvalidDualPair";
        case ErrorCode::NoMaximum: return "NoMaximum";
        case ErrorCode::StableRangeViolated: return "StableRangeViolated";
        case ErrorCode::LiftNotTypeB: return "LiftNotTypeB";
        case ErrorCode::RankTooSmall: return "RankTooSmall";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::PairingImpossible: return "PairingImpossible";
        case ErrorCode::UnknownCheck: return "UnknownCheck";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace nilorb
