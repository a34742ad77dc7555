#ifndef CRSEQ_IO_HPP
#define CRSEQ_IO_HPP

#include <cctype>
#include <cstdint>
#include <istream>
#include <iterator>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bits.hpp"

namespace crseq {

/// ascii01: one '0'/'1' character per bit, newline-terminated.
/// hex: 4 bits per digit, first bit most significant, last digit
///      zero-padded, newline-terminated.
/// packed-bits: raw bytes, bit i at byte i/8, bit position i%8 (LSB first);
///      the final byte is zero-padded, no terminator.
enum class OutputFormat { ascii01, hex, packed_bits };

inline OutputFormat parse_format(std::string_view s) {
    if (s == "ascii01") return OutputFormat::ascii01;
    if (s == "hex") return OutputFormat::hex;
    if (s == "packed-bits") return OutputFormat::packed_bits;
    throw std::invalid_argument("unknown format '" + std::string(s) + "'");
}

/// Buffered streaming encoder.
class BitWriter {
public:
    BitWriter(std::ostream& out, OutputFormat fmt) : out_(out), fmt_(fmt) { buf_.reserve(kFlushAt + 8); }
    BitWriter(const BitWriter&) = delete;
    BitWriter& operator=(const BitWriter&) = delete;
    ~BitWriter() { finish(); }

    void put(Bit b) {
        switch (fmt_) {
            case OutputFormat::ascii01:
                buf_.push_back(b ? '1' : '0');
                break;
            case OutputFormat::hex:
                acc_ |= static_cast<unsigned>(b & 1) << (3 - fill_);
                if (++fill_ == 4) flush_group();
                break;
            case OutputFormat::packed_bits:
                acc_ |= static_cast<unsigned>(b & 1) << fill_;
                if (++fill_ == 8) flush_group();
                break;
        }
        if (buf_.size() >= kFlushAt) flush();
    }

    void put(std::span<const Bit> bits) {
        for (Bit b : bits) put(b);
    }

    /// Emits any partial group and the terminator. Idempotent.
    void finish() {
        if (finished_) return;
        finished_ = true;
        if (fill_ > 0) flush_group();
        if (fmt_ != OutputFormat::packed_bits) buf_.push_back('\n');
        flush();
    }

private:
    static constexpr std::size_t kFlushAt = 1 << 16;

    void flush_group() {
        if (fmt_ == OutputFormat::hex)
            buf_.push_back("0123456789abcdef"[acc_ & 0xf]);
        else
            buf_.push_back(static_cast<char>(acc_ & 0xff));
        acc_ = 0;
        fill_ = 0;
    }

    void flush() {
        out_.write(buf_.data(), static_cast<std::streamsize>(buf_.size()));
        buf_.clear();
    }

    std::ostream& out_;
    OutputFormat fmt_;
    std::string buf_;
    unsigned acc_ = 0;
    unsigned fill_ = 0;
    bool finished_ = false;
};

inline void write_bits(std::ostream& out, const BitString& bits, OutputFormat fmt) {
    BitWriter w(out, fmt);
    w.put(bits.bits());
}

/// Decodes a whole stream. For hex and packed-bits the decoded length is
/// 4 or 8 bits per symbol unless `length` truncates it.
inline BitString read_bits(std::istream& in, OutputFormat fmt, std::optional<std::size_t> length = std::nullopt) {
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::vector<Bit> bits;
    switch (fmt) {
        case OutputFormat::ascii01:
            return BitString::parse(text);
        case OutputFormat::hex:
            for (char ch : text) {
                if (std::isspace(static_cast<unsigned char>(ch))) continue;
                const int v = std::isdigit(static_cast<unsigned char>(ch)) ? ch - '0'
                              : (ch >= 'a' && ch <= 'f')                    ? ch - 'a' + 10
                              : (ch >= 'A' && ch <= 'F')                    ? ch - 'A' + 10
                                                                            : -1;
                if (v < 0) throw std::invalid_argument(std::string("hex: unexpected character '") + ch + "'");
                for (int k = 3; k >= 0; --k) bits.push_back(static_cast<Bit>((v >> k) & 1));
            }
            break;
        case OutputFormat::packed_bits:
            for (char ch : text)
                for (int k = 0; k < 8; ++k) bits.push_back(static_cast<Bit>((static_cast<unsigned char>(ch) >> k) & 1));
            break;
    }
    if (length) {
        if (*length > bits.size()) throw std::invalid_argument("input is shorter than the requested length");
        bits.resize(*length);
    }
    if (bits.empty()) throw std::invalid_argument("empty input");
    return BitString(std::move(bits));
}

}  // namespace crseq

#endif
