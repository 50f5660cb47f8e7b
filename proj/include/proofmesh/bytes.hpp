#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include "proofmesh/errors.hpp"

namespace proofmesh {

// Little-endian byte building and parsing shared by all binary file formats
// (transcripts, keys, proofs). Kept deliberately dumb: fixed-width integers
// only, explicit bounds checks, no endianness surprises across platforms.

class ByteWriter {
  public:
    void u8(std::uint8_t v) { bytes_.push_back(v); }

    void u32(std::uint32_t v) {
        for (int i = 0; i < 4; i++) bytes_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }

    void u64(std::uint64_t v) {
        for (int i = 0; i < 8; i++) bytes_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }

    void magic(const char* tag) {
        for (const char* c = tag; *c; c++) bytes_.push_back(static_cast<std::uint8_t>(*c));
    }

    const std::vector<std::uint8_t>& bytes() const { return bytes_; }
    std::vector<std::uint8_t> take() { return std::move(bytes_); }

  private:
    std::vector<std::uint8_t> bytes_;
};

class ByteReader {
  public:
    explicit ByteReader(const std::vector<std::uint8_t>& bytes) : bytes_(&bytes) {}

    std::uint8_t u8() {
        need(1);
        return (*bytes_)[pos_++];
    }

    std::uint32_t u32() {
        need(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; i++) v |= static_cast<std::uint32_t>((*bytes_)[pos_++]) << (8 * i);
        return v;
    }

    std::uint64_t u64() {
        need(8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; i++) v |= static_cast<std::uint64_t>((*bytes_)[pos_++]) << (8 * i);
        return v;
    }

    void magic(const char* tag) {
        for (const char* c = tag; *c; c++) {
            need(1);
            if ((*bytes_)[pos_++] != static_cast<std::uint8_t>(*c))
                throw ParseError(0, std::string("bad magic, expected \"") + tag + "\"");
        }
    }

    bool done() const { return pos_ == bytes_->size(); }
    std::size_t remaining() const { return bytes_->size() - pos_; }

  private:
    void need(std::size_t n) const {
        if (bytes_->size() - pos_ < n) throw ParseError(0, "unexpected end of data");
    }

    const std::vector<std::uint8_t>* bytes_;
    std::size_t pos_ = 0;
};

inline void write_file_bytes(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error("write failed: " + path);
}

inline std::vector<std::uint8_t> read_file_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary | std::ios::ate);
    if (!in) throw Error("cannot open " + path);
    std::streamsize size = in.tellg();
    in.seekg(0);
    std::vector<std::uint8_t> bytes(static_cast<std::size_t>(size));
    if (size > 0) in.read(reinterpret_cast<char*>(bytes.data()), size);
    if (!in) throw Error("read failed: " + path);
    return bytes;
}

}  // namespace proofmesh
