#pragma once

#include <stdexcept>
#include <string>

namespace uavpki {

enum class ErrorCode {
    EncodingError,
    MerkleError,
    BadSignature,
    BadNonce,
    UnknownAccount,
    DuplicateRegistration,
    InsufficientBalance,
    SelfConfirmation,
    RevokeWithoutConfirmation,
    CheckpointMismatch,
    InvalidScope,
    BadParent,
    BadMerkleRoot,
    BadProducer,
    BadCoinbase,
    RangeError,
    UnknownNode,
    StaleViewError,
    MergeConflict,
    BrokenHeaderChain,
    BadInclusionProof,
    InconsistentView,
    UnknownHeight,
    UnknownHash,
    StaleSession,
    InvalidScenario,
    UnknownTarget,
    IoError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& detail) {
    throw Error(code, detail);
}

} // namespace uavpki
