#include "diwallkit/error.hpp"

namespace diwallkit {

std::string_view errc_name(Errc code) {
    switch (code) {
    case Errc::ParseError: return "ParseError";
    case Errc::DanglingDart: return "DanglingDart";
    case Errc::DuplicateDart: return "DuplicateDart";
    case Errc::NotSphere: return "NotSphere";
    case Errc::HasLoop: return "HasLoop";
    case Errc::Disconnected: return "Disconnected";
    case Errc::NotWalk: return "NotWalk";
    case Errc::NotBond: return "NotBond";
    case Errc::NotAlternating: return "NotAlternating";
    case Errc::NotPath: return "NotPath";
    case Errc::NotOneWeak: return "NotOneWeak";
    case Errc::SameVertex: return "SameVertex";
    case Errc::InvalidMulticut: return "InvalidMulticut";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::RingTooSmall: return "RingTooSmall";
    case Errc::NotOdd: return "NotOdd";
    case Errc::NestingViolated: return "NestingViolated";
    case Errc::BadParity: return "BadParity";
    case Errc::TooSmall: return "TooSmall";
    case Errc::RoutingFailed: return "RoutingFailed";
    case Errc::ScaleExceeded: return "ScaleExceeded";
    case Errc::NotTwoWeak: return "NotTwoWeak";
    case Errc::CutEdge: return "CutEdge";
    case Errc::NotTwoEdgeConnected: return "NotTwoEdgeConnected";
    case Errc::TransferCostExceeded: return "TransferCostExceeded";
    case Errc::NotButterfly: return "NotButterfly";
    case Errc::NotStrong: return "NotStrong";
    }
    return "Unknown";
}

} // namespace diwallkit
