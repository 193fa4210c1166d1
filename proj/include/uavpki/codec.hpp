#pragma once

#include <string>

#include "uavpki/bytes.hpp"
#include "uavpki/errors.hpp"

namespace uavpki::codec {

// Canonical binary form shared by hashing, signing, and persistence:
// fixed field order, big-endian fixed-width integers, u32 length prefixes
// on variable fields. The encoding is injective so digests over it are
// well-defined.

inline constexpr size_t kMaxStringBytes = 256;
inline constexpr size_t kMaxBlobBytes = 64u << 20;

class Writer {
public:
    void u8(uint8_t v) { out_.push_back(v); }
    void u32(uint32_t v);
    void u64(uint64_t v);
    void raw(BytesView data);                 // fixed-size field, no prefix
    void blob(BytesView data);                // u32 length prefix + bytes
    void str(const std::string& s);           // u32 length prefix + utf-8, <= kMaxStringBytes
    void hash(const Hash256& h) { raw(h.view()); }
    void boolean(bool v) { u8(v ? 1 : 0); }

    const Bytes& bytes() const { return out_; }
    Bytes take() { return std::move(out_); }

private:
    Bytes out_;
};

class Reader {
public:
    explicit Reader(BytesView data) : data_(data) {}

    uint8_t u8();
    uint32_t u32();
    uint64_t u64();
    Bytes raw(size_t n);
    Bytes blob();
    std::string str();
    Hash256 hash();
    bool boolean();

    size_t remaining() const { return data_.size() - pos_; }
    bool empty() const { return remaining() == 0; }
    void expect_end() const;

private:
    void need(size_t n) const;

    BytesView data_;
    size_t pos_ = 0;
};

} // namespace uavpki::codec
