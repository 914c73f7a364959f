#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

#include "lsc/bitstring.hpp"

namespace lsc {

// Header of a packed bit file: a single JSON line followed by the payload
// bytes, most significant bit first, final partial byte zero-padded.
struct BitFileMeta {
  std::size_t bits = 0;
  std::string encoding = "raw-bits";
  std::optional<unsigned> code_width;  // LZW only
};

void write_packed(std::ostream& out, const BitString& bits, const BitFileMeta& meta);
std::pair<BitString, BitFileMeta> read_packed(std::istream& in);

// Debug form: one long line of '0'/'1'.
void write_ascii(std::ostream& out, const BitString& bits);
// Parses '0'/'1' ignoring all whitespace; anything else is corrupt.
BitString parse_ascii_bits(std::string_view text);

// Reads either format: a file starting with '{' is packed-with-header,
// anything else is ASCII bits.
std::pair<BitString, BitFileMeta> read_bit_file(const std::string& path);

}  // namespace lsc
