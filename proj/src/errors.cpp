#include "uavpki/errors.hpp"

namespace uavpki {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::EncodingError: return "EncodingError";
        case ErrorCode::MerkleError: return "MerkleError";
        case ErrorCode::BadSignature: return "BadSignature";
        case ErrorCode::BadNonce: return "BadNonce";
        case ErrorCode::UnknownAccount: return "UnknownAccount";
        case ErrorCode::DuplicateRegistration: return "DuplicateRegistration";
        case ErrorCode::InsufficientBalance: return "InsufficientBalance";
        case ErrorCode::SelfConfirmation: return "SelfConfirmation";
        case ErrorCode::RevokeWithoutConfirmation: return "RevokeWithoutConfirmation";
        case ErrorCode::CheckpointMismatch: return "CheckpointMismatch";
        case ErrorCode::InvalidScope: return "InvalidScope";
        case ErrorCode::BadParent: return "BadParent";
        case ErrorCode::BadMerkleRoot: return "BadMerkleRoot";
        case ErrorCode::BadProducer: return "BadProducer";
        case ErrorCode::BadCoinbase: return "BadCoinbase";
        case ErrorCode::RangeError: return "RangeError";
        case ErrorCode::UnknownNode: return "UnknownNode";
        case ErrorCode::StaleViewError: return "StaleViewError";
        case ErrorCode::MergeConflict: return "MergeConflict";
        case ErrorCode::BrokenHeaderChain: return "BrokenHeaderChain";
        case ErrorCode::BadInclusionProof: return "BadInclusionProof";
        case ErrorCode::InconsistentView: return "InconsistentView";
        case ErrorCode::UnknownHeight: return "UnknownHeight";
        case ErrorCode::UnknownHash: return "UnknownHash";
        case ErrorCode::StaleSession: return "StaleSession";
        case ErrorCode::InvalidScenario: return "InvalidScenario";
        case ErrorCode::UnknownTarget: return "UnknownTarget";
        case ErrorCode::IoError: return "IoError";
    }
    return "UnknownError";
}

} // namespace uavpki
