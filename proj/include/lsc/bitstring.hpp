#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lsc/errors.hpp"

namespace lsc {

// Ordered bit sequence; the universal intermediate between encoders and
// analyzers. Bits are stored one per byte (values 0/1) — windows are at
// most a few thousand bits, so clarity beats packing here. Packed byte
// serialization lives in bitio.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (std::uint8_t b : bits_) {
      LSC_CHECK(b <= 1, "BitString: bit value out of range");
    }
  }

  static BitString from_string(std::string_view s) {
    BitString out;
    out.bits_.reserve(s.size());
    for (char c : s) {
      if (c == '0' || c == '1') {
        out.bits_.push_back(static_cast<std::uint8_t>(c - '0'));
      } else {
        throw CorruptStreamError("bit string contains character other than 0/1");
      }
    }
    return out;
  }

  static BitString zeros(std::size_t n) {
    BitString out;
    out.bits_.assign(n, 0);
    return out;
  }

  void push_back(int bit) {
    LSC_CHECK(bit == 0 || bit == 1, "BitString: bit value out of range");
    bits_.push_back(static_cast<std::uint8_t>(bit));
  }

  int operator[](std::size_t i) const { return bits_[i]; }
  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }

  // Slice [i, j); bounds violations are caller bugs surfaced as DomainError.
  BitString slice(std::size_t i, std::size_t j) const {
    if (i > j || j > bits_.size()) {
      throw DomainError("BitString::slice: bad range");
    }
    BitString out;
    out.bits_.assign(bits_.begin() + static_cast<std::ptrdiff_t>(i),
                     bits_.begin() + static_cast<std::ptrdiff_t>(j));
    return out;
  }

  BitString complemented() const {
    BitString out;
    out.bits_.reserve(bits_.size());
    for (std::uint8_t b : bits_) out.bits_.push_back(static_cast<std::uint8_t>(1 - b));
    return out;
  }

  // Full left/right mirror of the induced tree = reversed bit order.
  BitString mirrored() const {
    BitString out;
    out.bits_.assign(bits_.rbegin(), bits_.rend());
    return out;
  }

  std::string str() const {
    std::string s;
    s.reserve(bits_.size());
    for (std::uint8_t b : bits_) s.push_back(static_cast<char>('0' + b));
    return s;
  }

  const std::vector<std::uint8_t>& raw() const { return bits_; }

  bool operator==(const BitString&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

}  // namespace lsc
