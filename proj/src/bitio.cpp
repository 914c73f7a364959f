#include "lsc/bitio.hpp"

#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "lsc/errors.hpp"

namespace lsc {

void write_packed(std::ostream& out, const BitString& bits, const BitFileMeta& meta) {
  nlohmann::json header;
  header["bits"] = meta.bits;
  header["encoding"] = meta.encoding;
  if (meta.code_width) header["code_width"] = *meta.code_width;
  out << header.dump() << '\n';
  std::vector<unsigned char> bytes((bits.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) bytes[i / 8] |= static_cast<unsigned char>(0x80u >> (i % 8));
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

std::pair<BitString, BitFileMeta> read_packed(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw CorruptStreamError("packed bit file: no header");
  BitFileMeta meta;
  try {
    nlohmann::json header = nlohmann::json::parse(line);
    meta.bits = header.at("bits").get<std::size_t>();
    meta.encoding = header.at("encoding").get<std::string>();
    if (header.contains("code_width")) {
      meta.code_width = header.at("code_width").get<unsigned>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw CorruptStreamError(std::string("packed bit file: bad header: ") + e.what());
  }
  std::size_t nbytes = (meta.bits + 7) / 8;
  std::vector<char> bytes(nbytes);
  in.read(bytes.data(), static_cast<std::streamsize>(nbytes));
  if (static_cast<std::size_t>(in.gcount()) != nbytes) {
    throw CorruptStreamError("packed bit file: truncated payload");
  }
  BitString bits;
  for (std::size_t i = 0; i < meta.bits; ++i) {
    unsigned char byte = static_cast<unsigned char>(bytes[i / 8]);
    bits.push_back((byte >> (7 - i % 8)) & 1u);
  }
  // A conforming writer zero-pads; nonzero tail bits mean the header lied.
  if (nbytes > 0) {
    unsigned tail = static_cast<unsigned>(meta.bits % 8);
    if (tail != 0) {
      unsigned char last = static_cast<unsigned char>(bytes[nbytes - 1]);
      if ((last & ((1u << (8 - tail)) - 1u)) != 0) {
        throw CorruptStreamError("packed bit file: nonzero padding");
      }
    }
  }
  return {std::move(bits), std::move(meta)};
}

void write_ascii(std::ostream& out, const BitString& bits) {
  out << bits.str() << '\n';
}

BitString parse_ascii_bits(std::string_view text) {
  BitString out;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c != '0' && c != '1') {
      throw CorruptStreamError("ASCII bit file: character other than 0/1");
    }
    out.push_back(c - '0');
  }
  return out;
}

std::pair<BitString, BitFileMeta> read_bit_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  int first = in.peek();
  if (first == '{') return read_packed(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  BitString bits = parse_ascii_bits(buf.str());
  BitFileMeta meta;
  meta.bits = bits.size();
  return {std::move(bits), std::move(meta)};
}

}  // namespace lsc
