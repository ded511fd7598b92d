#include "poac/huffman.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <tuple>

#include "poac/error.hpp"

namespace poac {

namespace {

struct Node {
  std::uint64_t weight;
  std::uint32_t order;  // symbol for leaves, 256 + creation index otherwise
  std::int32_t parent = -1;
};

CodeLengths build_lengths(const SymbolCounts& counts, unsigned& max_length) {
  std::vector<Node> nodes;
  nodes.reserve(2 * kAlphabetSize);
  using Entry = std::tuple<std::uint64_t, std::uint32_t, std::size_t>;  // weight, order, index
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  std::array<std::int32_t, kAlphabetSize> leaf{};
  leaf.fill(-1);
  for (std::size_t s = 0; s < kAlphabetSize; ++s) {
    if (counts[s] == 0) continue;
    leaf[s] = static_cast<std::int32_t>(nodes.size());
    nodes.push_back({counts[s], static_cast<std::uint32_t>(s)});
    heap.emplace(counts[s], static_cast<std::uint32_t>(s), nodes.size() - 1);
  }

  CodeLengths lengths{};
  max_length = 0;
  if (nodes.size() == 1) {
    lengths[nodes.front().order] = 1;
    max_length = 1;
    return lengths;
  }

  std::uint32_t created = 0;
  while (heap.size() > 1) {
    auto [wa, oa, ia] = heap.top();
    heap.pop();
    auto [wb, ob, ib] = heap.top();
    heap.pop();
    const std::size_t idx = nodes.size();
    const std::uint32_t order = static_cast<std::uint32_t>(kAlphabetSize) + created++;
    nodes.push_back({wa + wb, order});
    nodes[ia].parent = static_cast<std::int32_t>(idx);
    nodes[ib].parent = static_cast<std::int32_t>(idx);
    heap.emplace(wa + wb, order, idx);
  }

  for (std::size_t s = 0; s < kAlphabetSize; ++s) {
    if (leaf[s] < 0) continue;
    unsigned depth = 0;
    for (std::int32_t n = leaf[s]; nodes[n].parent >= 0; n = nodes[n].parent) ++depth;
    max_length = std::max(max_length, depth);
    lengths[s] = static_cast<std::uint8_t>(std::min<unsigned>(depth, 255));
  }
  return lengths;
}

}  // namespace

CodeLengths huffman_code_lengths(const SymbolCounts& counts) {
  if (std::all_of(counts.begin(), counts.end(), [](std::uint64_t c) { return c == 0; })) {
    throw Error(Errc::EmptyInput, "no symbols to code");
  }
  SymbolCounts scaled = counts;
  for (;;) {
    unsigned max_length = 0;
    CodeLengths lengths = build_lengths(scaled, max_length);
    if (max_length <= kMaxCodeLength) return lengths;
    // Flatten the distribution and retry; used symbols stay used.
    for (auto& c : scaled) {
      if (c != 0) c = std::max<std::uint64_t>(1, c >> 1);
    }
  }
}

std::array<std::uint32_t, kAlphabetSize> canonical_codes(const CodeLengths& lengths) {
  std::array<std::uint64_t, kMaxCodeLength + 2> per_length{};
  std::uint64_t kraft = 0;  // in units of 2^-kMaxCodeLength
  bool any = false;
  for (auto len : lengths) {
    if (len == 0) continue;
    if (len > kMaxCodeLength) {
      throw Error(Errc::InvalidCodeTable, "code length " + std::to_string(len) + " too long");
    }
    ++per_length[len];
    kraft += std::uint64_t{1} << (kMaxCodeLength - len);
    any = true;
  }
  if (!any) throw Error(Errc::InvalidCodeTable, "code table has no symbols");
  if (kraft > (std::uint64_t{1} << kMaxCodeLength)) {
    throw Error(Errc::InvalidCodeTable, "code lengths violate the Kraft inequality");
  }

  std::array<std::uint64_t, kMaxCodeLength + 2> next{};
  std::uint64_t code = 0;
  for (unsigned len = 1; len <= kMaxCodeLength; ++len) {
    code = (code + per_length[len - 1]) << 1;
    next[len] = code;
  }
  std::array<std::uint32_t, kAlphabetSize> codes{};
  for (std::size_t s = 0; s < kAlphabetSize; ++s) {
    if (lengths[s] != 0) codes[s] = static_cast<std::uint32_t>(next[lengths[s]]++);
  }
  return codes;
}

HuffmanEncoded huffman_encode(std::span<const std::uint8_t> symbols) {
  if (symbols.empty()) throw Error(Errc::EmptyInput, "cannot Huffman-code an empty stream");
  SymbolCounts counts{};
  for (auto s : symbols) ++counts[s];

  HuffmanEncoded out;
  out.code_lengths = huffman_code_lengths(counts);
  const auto codes = canonical_codes(out.code_lengths);

  std::uint64_t total_bits = 0;
  for (std::size_t s = 0; s < kAlphabetSize; ++s) total_bits += counts[s] * out.code_lengths[s];
  out.bit_count = total_bits;
  out.bits.assign((total_bits + 7) / 8, 0);

  std::uint64_t pos = 0;
  for (auto s : symbols) {
    const unsigned len = out.code_lengths[s];
    const std::uint32_t code = codes[s];
    for (unsigned i = 0; i < len; ++i, ++pos) {
      if ((code >> (len - 1 - i)) & 1u) {
        out.bits[pos >> 3] |= static_cast<std::uint8_t>(0x80u >> (pos & 7));
      }
    }
  }
  return out;
}

std::vector<std::uint8_t> huffman_decode(const CodeLengths& lengths,
                                         std::span<const std::uint8_t> bits,
                                         std::uint64_t bit_count, std::size_t symbol_count) {
  if (bit_count > static_cast<std::uint64_t>(bits.size()) * 8) {
    throw Error(Errc::TruncatedPayload, "bit count " + std::to_string(bit_count) +
                                            " exceeds payload of " +
                                            std::to_string(bits.size()) + " bytes");
  }
  canonical_codes(lengths);  // validates the table

  // Symbols sorted canonically, plus the first code and index per length.
  std::array<std::uint64_t, kMaxCodeLength + 1> count{};
  unsigned longest = 0;
  for (auto len : lengths) {
    if (len) ++count[len];
    longest = std::max<unsigned>(longest, len);
  }
  std::vector<std::uint8_t> sorted;
  for (unsigned len = 1; len <= kMaxCodeLength; ++len) {
    for (std::size_t s = 0; s < kAlphabetSize; ++s) {
      if (lengths[s] == len) sorted.push_back(static_cast<std::uint8_t>(s));
    }
  }
  std::array<std::uint64_t, kMaxCodeLength + 1> first_code{};
  std::array<std::uint64_t, kMaxCodeLength + 1> first_index{};
  std::uint64_t code = 0;
  std::uint64_t index = 0;
  for (unsigned len = 1; len <= kMaxCodeLength; ++len) {
    code = (code + count[len - 1]) << 1;
    first_code[len] = code;
    first_index[len] = index;
    index += count[len];
  }

  std::vector<std::uint8_t> out;
  out.reserve(symbol_count);
  std::uint64_t pos = 0;
  while (out.size() < symbol_count) {
    std::uint64_t acc = 0;
    unsigned len = 0;
    for (;;) {
      if (pos >= bit_count) {
        throw Error(Errc::TruncatedPayload, "bitstream ends after " +
                                                std::to_string(out.size()) + " of " +
                                                std::to_string(symbol_count) + " symbols");
      }
      acc = (acc << 1) | ((bits[pos >> 3] >> (7 - (pos & 7))) & 1u);
      ++pos;
      ++len;
      if (acc >= first_code[len] && acc - first_code[len] < count[len]) {
        out.push_back(sorted[first_index[len] + (acc - first_code[len])]);
        break;
      }
      if (len == longest) {
        throw Error(Errc::InvalidBlob, "bitstream holds a code not in the table");
      }
    }
  }
  if (pos != bit_count) {
    throw Error(Errc::SymbolOverrun, std::to_string(bit_count - pos) +
                                         " bits remain after the expected " +
                                         std::to_string(symbol_count) + " symbols");
  }
  return out;
}

}  // namespace poac
