#include "lsc/encoding.hpp"

#include <bit>
#include <cctype>

#include "lsc/errors.hpp"

namespace lsc {

std::string preprocess_text(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  bool pending_space = false;
  for (char c : raw) {
    unsigned char u = static_cast<unsigned char>(c);
    if (std::isspace(u)) {
      pending_space = true;
      continue;
    }
    char lower = static_cast<char>(std::tolower(u));
    if (lower < 'a' || lower > 'z') continue;
    if (pending_space && !out.empty()) out.push_back(' ');
    pending_space = false;
    out.push_back(lower);
  }
  return out;
}

namespace {

std::uint32_t bin_index(char c) {
  if (c >= 'a' && c <= 'z') return static_cast<std::uint32_t>(c - 'a' + 1);
  if (c == ' ') return 27;
  throw InvalidSymbolError(std::string("symbol outside a..z/space: '") + c + "'");
}

void append_field(BitString& bits, std::uint32_t value, unsigned width) {
  for (unsigned i = width; i-- > 0;) {
    bits.push_back(static_cast<int>((value >> i) & 1u));
  }
}

}  // namespace

BitString encode_bin(std::string_view text) {
  BitString out;
  for (char c : text) append_field(out, bin_index(c), kBinFieldWidth);
  return out;
}

std::string decode_bin(const BitString& bits) {
  if (bits.size() % kBinFieldWidth != 0) {
    throw CorruptStreamError("BIN stream length is not a multiple of 5");
  }
  std::string out;
  out.reserve(bits.size() / kBinFieldWidth);
  for (std::size_t i = 0; i < bits.size(); i += kBinFieldWidth) {
    std::uint32_t v = 0;
    for (unsigned j = 0; j < kBinFieldWidth; ++j) {
      v = (v << 1) | static_cast<std::uint32_t>(bits[i + j]);
    }
    if (v < 1 || v > 27) throw CorruptStreamError("BIN field outside 1..27");
    out.push_back(v == 27 ? ' ' : static_cast<char>('a' + v - 1));
  }
  return out;
}

namespace {

LzwDictionary seed_dictionary(std::string_view alphabet) {
  if (alphabet.empty()) throw DomainError("LZW alphabet is empty");
  LzwDictionary dict;
  for (char c : alphabet) {
    auto [it, inserted] = dict.entries.emplace(std::string(1, c), dict.next_index);
    if (!inserted) throw DomainError("LZW alphabet has a repeated symbol");
    ++dict.next_index;
  }
  return dict;
}

}  // namespace

std::pair<std::vector<std::uint32_t>, LzwDictionary> encode_lzw(
    std::string_view text, std::string_view alphabet) {
  LzwDictionary dict = seed_dictionary(alphabet);
  std::vector<std::uint32_t> out;
  std::string current;
  for (char c : text) {
    if (dict.entries.find(std::string(1, c)) == dict.entries.end()) {
      throw InvalidSymbolError(std::string("symbol outside LZW alphabet: '") + c + "'");
    }
    current.push_back(c);
    if (dict.entries.find(current) != dict.entries.end()) continue;
    // current = known prefix + c: emit the prefix, learn current,
    // restart the scan at c.
    out.push_back(dict.entries.at(current.substr(0, current.size() - 1)));
    dict.entries.emplace(current, dict.next_index++);
    current.assign(1, c);
  }
  if (!current.empty()) out.push_back(dict.entries.at(current));
  return {std::move(out), std::move(dict)};
}

std::string decode_lzw(const std::vector<std::uint32_t>& indices,
                       std::string_view alphabet) {
  seed_dictionary(alphabet);  // validates the alphabet
  if (indices.empty()) return "";
  // table[i-1] = string for index i.
  std::vector<std::string> table;
  table.reserve(alphabet.size() + indices.size());
  for (char c : alphabet) table.emplace_back(1, c);

  if (indices[0] == 0 || indices[0] > table.size()) {
    throw CorruptStreamError("LZW stream starts with an undefined index");
  }
  std::string prev = table[indices[0] - 1];
  std::string out = prev;
  for (std::size_t i = 1; i < indices.size(); ++i) {
    std::uint32_t idx = indices[i];
    std::string entry;
    if (idx >= 1 && idx <= table.size()) {
      entry = table[idx - 1];
    } else if (idx == table.size() + 1) {
      entry = prev + prev[0];  // the entry being defined by this very step
    } else {
      throw CorruptStreamError("LZW index never defined at its point of use");
    }
    out += entry;
    table.push_back(prev + entry[0]);
    prev = std::move(entry);
  }
  return out;
}

unsigned index_bit_width(const std::vector<std::uint32_t>& indices) {
  std::uint32_t mx = 0;
  for (std::uint32_t v : indices) {
    if (v < 1) throw DomainError("LZW index below 1");
    mx = std::max(mx, v);
  }
  return static_cast<unsigned>(std::bit_width(mx));
}

BitString indices_to_bits(const std::vector<std::uint32_t>& indices, unsigned width) {
  BitString out;
  for (std::uint32_t v : indices) {
    LSC_CHECK(width >= std::bit_width(v), "index does not fit the field width");
    for (unsigned i = width; i-- > 0;) {
      out.push_back(static_cast<int>((v >> i) & 1u));
    }
  }
  return out;
}

BitString indices_to_bits(const std::vector<std::uint32_t>& indices) {
  return indices_to_bits(indices, index_bit_width(indices));
}

}  // namespace lsc
