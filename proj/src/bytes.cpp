#include "uavpki/bytes.hpp"

#include <algorithm>

#include "uavpki/errors.hpp"

namespace uavpki {

namespace {

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

} // namespace

bool Hash256::is_zero() const {
    return std::all_of(bytes.begin(), bytes.end(), [](uint8_t b) { return b == 0; });
}

std::string Hash256::hex() const {
    return to_hex(view());
}

Hash256 Hash256::from_hex(const std::string& text) {
    Bytes raw = uavpki::from_hex(text);
    if (raw.size() != 32)
        raise(ErrorCode::EncodingError, "expected 32-byte hex digest, got " + std::to_string(raw.size()) + " bytes");
    Hash256 h;
    std::copy(raw.begin(), raw.end(), h.bytes.begin());
    return h;
}

std::string to_hex(BytesView data) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(data.size() * 2);
    for (uint8_t b : data) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

Bytes from_hex(const std::string& text) {
    if (text.size() % 2 != 0)
        raise(ErrorCode::EncodingError, "odd-length hex string");
    Bytes out;
    out.reserve(text.size() / 2);
    for (size_t i = 0; i < text.size(); i += 2) {
        int hi = hex_digit(text[i]);
        int lo = hex_digit(text[i + 1]);
        if (hi < 0 || lo < 0)
            raise(ErrorCode::EncodingError, "invalid hex character");
        out.push_back(static_cast<uint8_t>(hi << 4 | lo));
    }
    return out;
}

} // namespace uavpki
