#include "medrx/linecode.hpp"

#include <array>
#include <bit>

namespace medrx::berlab {
namespace {

// 5b6b sub-blocks, abcdei transmit order with 'a' in bit 5, listed for RD-.
// Sub-blocks with four ones are complemented when the running disparity is
// positive. D.07 is balanced but still alternates (111000 / 000111).
constexpr std::array<std::uint8_t, 32> k5b6bRdMinus = {
    0b100111, 0b011101, 0b101101, 0b110001, 0b110101, 0b101001, 0b011001,
    0b111000, 0b111001, 0b100101, 0b010101, 0b110100, 0b001101, 0b101100,
    0b011100, 0b010111, 0b011011, 0b100011, 0b010011, 0b110010, 0b001011,
    0b101010, 0b011010, 0b111010, 0b110011, 0b100110, 0b010110, 0b110110,
    0b001110, 0b101110, 0b011110, 0b101011};

// 3b4b sub-blocks, fghj transmit order with 'f' in bit 3, listed for RD-.
// Index 7 is the primary encoding D.x.P7; the alternate D.x.A7 is 0111/1000.
constexpr std::array<std::uint8_t, 8> k3b4bRdMinus = {
    0b1011, 0b1001, 0b0101, 0b1100, 0b1101, 0b1010, 0b0110, 0b1110};

constexpr std::uint8_t kA7RdMinus = 0b0111;

inline int block_disparity(std::uint8_t pattern, int nbits) {
  const int ones = std::popcount(pattern);
  return 2 * ones - nbits;
}

// The alternate D.x.A7 replaces P7 to avoid five-bit runs across the
// sub-block boundary.
inline bool use_a7(int rd_before_3b4b, unsigned x) {
  if (rd_before_3b4b < 0) return x == 17 || x == 18 || x == 20;
  return x == 11 || x == 13 || x == 14;
}

struct SubBlockEntry {
  std::uint8_t value = 0;
  int disparity = 0;  // -2, 0, +2
  bool valid = false;
};

struct DecodeTables {
  std::array<SubBlockEntry, 64> six;
  std::array<SubBlockEntry, 16> four;

  DecodeTables() {
    auto add6 = [this](std::uint8_t pattern, std::uint8_t value) {
      six[pattern] = {value, block_disparity(pattern, 6), true};
    };
    auto add4 = [this](std::uint8_t pattern, std::uint8_t value) {
      four[pattern] = {value, block_disparity(pattern, 4), true};
    };
    for (unsigned x = 0; x < 32; ++x) {
      const std::uint8_t p = k5b6bRdMinus[x];
      add6(p, static_cast<std::uint8_t>(x));
      if (block_disparity(p, 6) != 0 || x == 7) {
        add6(static_cast<std::uint8_t>(~p & 0x3F), static_cast<std::uint8_t>(x));
      }
    }
    for (unsigned y = 0; y < 8; ++y) {
      const std::uint8_t p = k3b4bRdMinus[y];
      add4(p, static_cast<std::uint8_t>(y));
      if (block_disparity(p, 4) != 0 || y == 3) {
        add4(static_cast<std::uint8_t>(~p & 0x0F), static_cast<std::uint8_t>(y));
      }
    }
    add4(kA7RdMinus, 7);
    add4(static_cast<std::uint8_t>(~kA7RdMinus & 0x0F), 7);
  }
};

const DecodeTables& tables() {
  static const DecodeTables t;
  return t;
}

void check_disparity_arg(int initial_disparity, const char* who) {
  if (initial_disparity != -1 && initial_disparity != 1) {
    throw std::invalid_argument(std::string(who) +
                                ": initial_disparity must be -1 or +1");
  }
}

void push_bits(std::vector<std::uint8_t>& out, std::uint8_t pattern, int nbits) {
  for (int b = nbits - 1; b >= 0; --b) {
    out.push_back(static_cast<std::uint8_t>((pattern >> b) & 1));
  }
}

// Applies a sub-block to the running disparity; returns false when the
// stream leaves the legal {-1,+1} state.
bool step_rd(int& rd, int disparity) {
  const int next = rd + disparity;
  if (next != -1 && next != 1) return false;
  rd = next;
  return true;
}

}  // namespace

LineCodeBlock encode_8b10b(const std::vector<std::uint8_t>& payload,
                           int initial_disparity) {
  check_disparity_arg(initial_disparity, "encode_8b10b");
  LineCodeBlock block;
  block.payload = payload;
  block.encoded.reserve(payload.size() * 10);
  block.running_disparity_trace.reserve(payload.size());

  int rd = initial_disparity;
  for (const std::uint8_t byte : payload) {
    const unsigned x = byte & 0x1F;
    const unsigned y = byte >> 5;

    std::uint8_t p6 = k5b6bRdMinus[x];
    const int d6 = block_disparity(p6, 6);
    if ((d6 != 0 && rd > 0) || (x == 7 && rd > 0)) p6 = ~p6 & 0x3F;
    push_bits(block.encoded, p6, 6);
    rd += block_disparity(p6, 6);

    std::uint8_t p4;
    if (y == 7 && use_a7(rd, x)) {
      p4 = kA7RdMinus;
    } else {
      p4 = k3b4bRdMinus[y];
    }
    const int d4 = block_disparity(p4, 4);
    if ((d4 != 0 && rd > 0) || (y == 3 && rd > 0)) p4 = ~p4 & 0x0F;
    push_bits(block.encoded, p4, 4);
    rd += block_disparity(p4, 4);

    block.running_disparity_trace.push_back(rd);
  }
  block.final_disparity = rd;
  return block;
}

DecodeResult try_decode_8b10b(const std::vector<std::uint8_t>& bits,
                              int initial_disparity) {
  check_disparity_arg(initial_disparity, "decode_8b10b");
  if (bits.size() % 10 != 0) {
    throw std::invalid_argument(
        "decode_8b10b: bit count must be a multiple of 10, got " +
        std::to_string(bits.size()));
  }
  DecodeResult result;
  result.bytes.reserve(bits.size() / 10);
  const auto& t = tables();

  int rd = initial_disparity;
  for (std::size_t g = 0; g < bits.size() / 10; ++g) {
    std::uint8_t p6 = 0, p4 = 0;
    for (int i = 0; i < 6; ++i) p6 = static_cast<std::uint8_t>((p6 << 1) | (bits[g * 10 + i] & 1));
    for (int i = 6; i < 10; ++i) p4 = static_cast<std::uint8_t>((p4 << 1) | (bits[g * 10 + i] & 1));

    const SubBlockEntry& e6 = t.six[p6];
    const SubBlockEntry& e4 = t.four[p4];
    if (!e6.valid || !e4.valid) {
      result.error = DecodeError{g, "invalid-code"};
      return result;
    }
    if (!step_rd(rd, e6.disparity) || !step_rd(rd, e4.disparity)) {
      result.error = DecodeError{g, "disparity-violation"};
      return result;
    }
    result.bytes.push_back(static_cast<std::uint8_t>((e4.value << 5) | e6.value));
  }
  return result;
}

std::vector<std::uint8_t> decode_8b10b(const std::vector<std::uint8_t>& bits,
                                       int initial_disparity) {
  DecodeResult r = try_decode_8b10b(bits, initial_disparity);
  if (r.error) {
    throw std::runtime_error("decode_8b10b: " + r.error->kind +
                             " at group " + std::to_string(r.error->group_index));
  }
  return std::move(r.bytes);
}

std::optional<std::uint8_t> decode_group_value(const std::uint8_t* bits10) {
  const auto& t = tables();
  std::uint8_t p6 = 0, p4 = 0;
  for (int i = 0; i < 6; ++i) p6 = static_cast<std::uint8_t>((p6 << 1) | (bits10[i] & 1));
  for (int i = 6; i < 10; ++i) p4 = static_cast<std::uint8_t>((p4 << 1) | (bits10[i] & 1));
  const SubBlockEntry& e6 = t.six[p6];
  const SubBlockEntry& e4 = t.four[p4];
  if (!e6.valid || !e4.valid) return std::nullopt;
  return static_cast<std::uint8_t>((e4.value << 5) | e6.value);
}

std::size_t max_run_length(const std::vector<std::uint8_t>& bits) {
  std::size_t best = 0, run = 0;
  int prev = -1;
  for (const std::uint8_t b : bits) {
    if (b == prev) {
      ++run;
    } else {
      run = 1;
      prev = b;
    }
    best = std::max(best, run);
  }
  return best;
}

}  // namespace medrx::berlab
