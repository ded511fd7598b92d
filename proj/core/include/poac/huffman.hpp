#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace poac {

inline constexpr std::size_t kAlphabetSize = 256;
inline constexpr unsigned kMaxCodeLength = 32;

using CodeLengths = std::array<std::uint8_t, kAlphabetSize>;
using SymbolCounts = std::array<std::uint64_t, kAlphabetSize>;

struct HuffmanEncoded {
  CodeLengths code_lengths{};
  std::vector<std::uint8_t> bits;  // MSB-first, zero-padded to a byte boundary
  std::uint64_t bit_count = 0;
};

/// Huffman code lengths for the given symbol counts, limited to
/// kMaxCodeLength bits. Ties between equal weights merge the node created
/// first (leaves before internal nodes, lower symbols first). A single used
/// symbol gets a 1-bit code; unused symbols get length 0.
CodeLengths huffman_code_lengths(const SymbolCounts& counts);

/// Canonical codes from lengths: shorter codes first, ties by symbol value.
/// Throws InvalidCodeTable if the lengths violate the Kraft inequality or
/// exceed kMaxCodeLength.
std::array<std::uint32_t, kAlphabetSize> canonical_codes(const CodeLengths& lengths);

HuffmanEncoded huffman_encode(std::span<const std::uint8_t> symbols);

/// Decodes exactly `symbol_count` symbols that must consume exactly
/// `bit_count` bits.
std::vector<std::uint8_t> huffman_decode(const CodeLengths& lengths,
                                         std::span<const std::uint8_t> bits,
                                         std::uint64_t bit_count, std::size_t symbol_count);

}  // namespace poac
