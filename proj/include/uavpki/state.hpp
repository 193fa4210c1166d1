#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "uavpki/bytes.hpp"
#include "uavpki/crypto.hpp"

namespace uavpki::ledger {

struct Property {
    std::string key;
    std::string value;
    bool operator==(const Property&) const = default;
};

/// Per-account state. Balance-and-nonce only; the ledger stores results,
/// not history. registration_txid anchors the account to the ledger entry
/// that created it (a synthetic digest for genesis-declared accounts).
struct AccountRecord {
    crypto::PublicKey public_key;
    std::string name;
    std::vector<Property> properties;
    uint64_t balance = 0;
    uint64_t nonce = 0; // last accepted nonce; next valid is nonce + 1
    Hash256 registration_txid;
    uint64_t registered_height = 0;
    bool operator==(const AccountRecord&) const = default;
};

struct ConfirmationRecord {
    uint32_t scope = 0;
    uint64_t since_height = 0;
    bool operator==(const ConfirmationRecord&) const = default;
};

using EdgeKey = std::pair<AccountId, AccountId>; // (issuer, subject)

/// Full ledger state: a pure function of the applied block sequence.
struct LedgerState {
    std::map<AccountId, AccountRecord> accounts;
    std::map<EdgeKey, ConfirmationRecord> confirmations; // active confirmations only
    uint64_t height = 0;

    bool operator==(const LedgerState&) const = default;

    Bytes canonical_bytes() const;
    Hash256 digest() const;
    static LedgerState decode(BytesView data);
};

/// Snapshot of ledger state at a block, sufficient to continue replay from
/// there without earlier history.
struct Checkpoint {
    uint64_t at_height = 0;
    Hash256 at_block;     // header hash at at_height
    Hash256 state_digest; // digest over state_snapshot's canonical bytes
    LedgerState state_snapshot;

    bool operator==(const Checkpoint&) const = default;

    Bytes canonical_bytes() const;
    static Checkpoint decode(BytesView data);
};

} // namespace uavpki::ledger
