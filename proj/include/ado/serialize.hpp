#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ado {

struct SerializeError : std::runtime_error {
    explicit SerializeError(const std::string& message) : std::runtime_error(message) {}
};

inline std::uint64_t fnv1a64(const std::uint8_t* data, std::size_t len) {
    std::uint64_t h = 14695981039346656037ull;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= data[i];
        h *= 1099511628211ull;
    }
    return h;
}

// Little-endian byte packing, independent of host order.
class ByteWriter {
public:
    void u8(std::uint8_t v) { buf_.push_back(v); }
    void u16(std::uint16_t v) { put(v, 2); }
    void u32(std::uint32_t v) { put(v, 4); }
    void u64(std::uint64_t v) { put(v, 8); }
    void i64(std::int64_t v) { u64(static_cast<std::uint64_t>(v)); }
    void raw(const char* data, std::size_t len) {
        buf_.insert(buf_.end(), data, data + len);
    }

    void append_checksum() { u64(fnv1a64(buf_.data(), buf_.size())); }

    std::vector<std::uint8_t> take() { return std::move(buf_); }
    std::size_t size() const { return buf_.size(); }

private:
    void put(std::uint64_t v, int bytes) {
        for (int i = 0; i < bytes; ++i) buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
    std::vector<std::uint8_t> buf_;
};

class ByteReader {
public:
    ByteReader(const std::uint8_t* data, std::size_t len) : data_(data), len_(len) {}

    std::uint8_t u8() { return static_cast<std::uint8_t>(get(1)); }
    std::uint16_t u16() { return static_cast<std::uint16_t>(get(2)); }
    std::uint32_t u32() { return static_cast<std::uint32_t>(get(4)); }
    std::uint64_t u64() { return get(8); }
    std::int64_t i64() { return static_cast<std::int64_t>(get(8)); }

    void raw(char* out, std::size_t len) {
        require(len);
        for (std::size_t i = 0; i < len; ++i) out[i] = static_cast<char>(data_[pos_ + i]);
        pos_ += len;
    }

    std::size_t remaining() const { return len_ - pos_; }
    void expect_end() const {
        if (pos_ != len_) throw SerializeError("trailing bytes after oracle payload");
    }

private:
    void require(std::size_t bytes) const {
        if (len_ - pos_ < bytes) throw SerializeError("truncated oracle stream");
    }
    std::uint64_t get(int bytes) {
        require(static_cast<std::size_t>(bytes));
        std::uint64_t v = 0;
        for (int i = 0; i < bytes; ++i)
            v |= static_cast<std::uint64_t>(data_[pos_ + i]) << (8 * i);
        pos_ += static_cast<std::size_t>(bytes);
        return v;
    }

    const std::uint8_t* data_;
    std::size_t len_;
    std::size_t pos_ = 0;
};

}  // namespace ado
