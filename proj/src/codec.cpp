#include "uavpki/codec.hpp"

namespace uavpki::codec {

void Writer::u32(uint32_t v) {
    out_.push_back(static_cast<uint8_t>(v >> 24));
    out_.push_back(static_cast<uint8_t>(v >> 16));
    out_.push_back(static_cast<uint8_t>(v >> 8));
    out_.push_back(static_cast<uint8_t>(v));
}

void Writer::u64(uint64_t v) {
    u32(static_cast<uint32_t>(v >> 32));
    u32(static_cast<uint32_t>(v));
}

void Writer::raw(BytesView data) {
    out_.insert(out_.end(), data.begin(), data.end());
}

void Writer::blob(BytesView data) {
    if (data.size() > kMaxBlobBytes)
        raise(ErrorCode::EncodingError, "blob exceeds " + std::to_string(kMaxBlobBytes) + " bytes");
    u32(static_cast<uint32_t>(data.size()));
    raw(data);
}

void Writer::str(const std::string& s) {
    if (s.size() > kMaxStringBytes)
        raise(ErrorCode::EncodingError, "string field exceeds " + std::to_string(kMaxStringBytes) + " bytes");
    u32(static_cast<uint32_t>(s.size()));
    out_.insert(out_.end(), s.begin(), s.end());
}

void Reader::need(size_t n) const {
    if (remaining() < n)
        raise(ErrorCode::EncodingError, "truncated input: need " + std::to_string(n) + " bytes, have " +
                                            std::to_string(remaining()));
}

uint8_t Reader::u8() {
    need(1);
    return data_[pos_++];
}

uint32_t Reader::u32() {
    need(4);
    uint32_t v = (uint32_t(data_[pos_]) << 24) | (uint32_t(data_[pos_ + 1]) << 16) |
                 (uint32_t(data_[pos_ + 2]) << 8) | uint32_t(data_[pos_ + 3]);
    pos_ += 4;
    return v;
}

uint64_t Reader::u64() {
    uint64_t hi = u32();
    uint64_t lo = u32();
    return (hi << 32) | lo;
}

Bytes Reader::raw(size_t n) {
    need(n);
    Bytes out(data_.begin() + pos_, data_.begin() + pos_ + n);
    pos_ += n;
    return out;
}

Bytes Reader::blob() {
    uint32_t n = u32();
    if (n > kMaxBlobBytes)
        raise(ErrorCode::EncodingError, "blob length exceeds limit");
    return raw(n);
}

std::string Reader::str() {
    uint32_t n = u32();
    if (n > kMaxStringBytes)
        raise(ErrorCode::EncodingError, "string length exceeds limit");
    need(n);
    std::string out(data_.begin() + pos_, data_.begin() + pos_ + n);
    pos_ += n;
    return out;
}

Hash256 Reader::hash() {
    need(32);
    Hash256 h;
    std::copy(data_.begin() + pos_, data_.begin() + pos_ + 32, h.bytes.begin());
    pos_ += 32;
    return h;
}

bool Reader::boolean() {
    uint8_t v = u8();
    if (v > 1)
        raise(ErrorCode::EncodingError, "boolean field must be 0 or 1");
    return v == 1;
}

void Reader::expect_end() const {
    if (!empty())
        raise(ErrorCode::EncodingError, std::to_string(remaining()) + " trailing bytes");
}

} // namespace uavpki::codec
