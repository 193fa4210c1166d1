#include "uavpki/crypto.hpp"

#include <mutex>

#include <sodium.h>

#include "uavpki/errors.hpp"

namespace uavpki::crypto {

namespace {

void ensure_sodium() {
    static std::once_flag flag;
    std::call_once(flag, [] {
        if (sodium_init() < 0)
            throw std::runtime_error("libsodium initialization failed");
    });
}

} // namespace

Hash256 sha256(BytesView data) {
    ensure_sodium();
    Hash256 out;
    crypto_hash_sha256(out.bytes.data(), data.data(), data.size());
    return out;
}

PublicKey PublicKey::from_hex(const std::string& text) {
    Bytes raw = uavpki::from_hex(text);
    if (raw.size() != kPublicKeyBytes)
        raise(ErrorCode::EncodingError, "public key must be 32 bytes");
    PublicKey key;
    std::copy(raw.begin(), raw.end(), key.bytes.begin());
    return key;
}

KeyPair keypair_from_seed(const Hash256& seed) {
    ensure_sodium();
    static_assert(crypto_sign_SEEDBYTES == kSeedBytes);
    KeyPair kp;
    crypto_sign_seed_keypair(kp.pub.bytes.data(), kp.sec.bytes.data(), seed.bytes.data());
    return kp;
}

KeyPair demo_keypair(const std::string& name) {
    const std::string tagged = "uavpki.demo.key.v1/" + name;
    return keypair_from_seed(sha256(BytesView(reinterpret_cast<const uint8_t*>(tagged.data()), tagged.size())));
}

Signature sign(const SecretKey& key, BytesView message) {
    ensure_sodium();
    Signature sig;
    crypto_sign_detached(sig.bytes.data(), nullptr, message.data(), message.size(), key.bytes.data());
    return sig;
}

bool verify(const PublicKey& key, BytesView message, const Signature& sig) {
    ensure_sodium();
    return crypto_sign_verify_detached(sig.bytes.data(), message.data(), message.size(), key.bytes.data()) == 0;
}

AccountId account_id(const PublicKey& key) {
    return AccountId{sha256(BytesView(key.bytes.data(), key.bytes.size()))};
}

} // namespace uavpki::crypto
