#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lsc/bitstring.hpp"

namespace lsc {

// The 27-symbol text alphabet: a..z -> 1..26, space -> 27.
inline constexpr std::string_view kTextAlphabet = "abcdefghijklmnopqrstuvwxyz ";
inline constexpr unsigned kBinFieldWidth = 5;  // ceil(log2 27)

// Lowercase, collapse whitespace runs to single spaces, drop every other
// character, trim. Empty output is legal.
std::string preprocess_text(std::string_view raw);

// Fixed 5-bit index encoding over kTextAlphabet.
BitString encode_bin(std::string_view text);
// Inverse of encode_bin; used as the round-trip oracle.
std::string decode_bin(const BitString& bits);

// Growing substring -> index map used during one LZW encode run.
struct LzwDictionary {
  std::unordered_map<std::string, std::uint32_t> entries;
  std::uint32_t next_index = 1;
};

// Standard LZW over an explicit ordered alphabet pre-seeded 1..|alphabet|.
// Returns the emitted indices and the final dictionary.
std::pair<std::vector<std::uint32_t>, LzwDictionary> encode_lzw(
    std::string_view text, std::string_view alphabet);

// Inverse of encode_lzw, including the self-referencing-entry case.
std::string decode_lzw(const std::vector<std::uint32_t>& indices,
                       std::string_view alphabet);

// Smallest w with 2^w > max(indices). Zero for an empty sequence.
unsigned index_bit_width(const std::vector<std::uint32_t>& indices);

// Every index as a w-bit big-endian field, w = index_bit_width(indices).
BitString indices_to_bits(const std::vector<std::uint32_t>& indices);
BitString indices_to_bits(const std::vector<std::uint32_t>& indices, unsigned width);

}  // namespace lsc
