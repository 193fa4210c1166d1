#pragma once

#include <array>
#include <compare>
#include <string>

#include "uavpki/bytes.hpp"

namespace uavpki::crypto {

inline constexpr size_t kPublicKeyBytes = 32;
inline constexpr size_t kSecretKeyBytes = 64;
inline constexpr size_t kSignatureBytes = 64;
inline constexpr size_t kSeedBytes = 32;

Hash256 sha256(BytesView data);

struct PublicKey {
    std::array<uint8_t, kPublicKeyBytes> bytes{};
    auto operator<=>(const PublicKey&) const = default;
    std::string hex() const { return to_hex(BytesView(bytes.data(), bytes.size())); }
    static PublicKey from_hex(const std::string& text);
};

struct SecretKey {
    std::array<uint8_t, kSecretKeyBytes> bytes{};
};

struct Signature {
    std::array<uint8_t, kSignatureBytes> bytes{};
    auto operator<=>(const Signature&) const = default;
};

struct KeyPair {
    PublicKey pub;
    SecretKey sec;
};

KeyPair keypair_from_seed(const Hash256& seed);

/// Deterministic keypair for fixtures and simulation, derived from a name.
/// Not for production identities.
KeyPair demo_keypair(const std::string& name);

Signature sign(const SecretKey& key, BytesView message);
bool verify(const PublicKey& key, BytesView message, const Signature& sig);

/// AccountId = sha256 over the registration public key bytes.
AccountId account_id(const PublicKey& key);

} // namespace uavpki::crypto
