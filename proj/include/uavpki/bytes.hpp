#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace uavpki {

using Bytes = std::vector<uint8_t>;
using BytesView = std::span<const uint8_t>;

/// 32-byte digest. Equality is byte equality; ordering is lexicographic.
struct Hash256 {
    std::array<uint8_t, 32> bytes{};

    auto operator<=>(const Hash256&) const = default;

    bool is_zero() const;
    std::string hex() const;
    static Hash256 from_hex(const std::string& text);

    BytesView view() const { return BytesView(bytes.data(), bytes.size()); }
};

/// Account identifier: sha256 of the account's registration public key.
struct AccountId {
    Hash256 id{};

    auto operator<=>(const AccountId&) const = default;

    bool is_zero() const { return id.is_zero(); }
    std::string hex() const { return id.hex(); }
    static AccountId from_hex(const std::string& text) { return AccountId{Hash256::from_hex(text)}; }
};

std::string to_hex(BytesView data);
Bytes from_hex(const std::string& text);

} // namespace uavpki
