#ifndef MEDRX_LINECODE_HPP
#define MEDRX_LINECODE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// 8b/10b line coding (data characters D.x.y only), used by the OOK chain to
// keep the baseband stream DC-balanced with bounded run length.

namespace medrx::berlab {

struct LineCodeBlock {
  std::vector<std::uint8_t> payload;
  std::vector<std::uint8_t> encoded;  // one bit per element, transmit order
  std::vector<int> running_disparity_trace;  // RD in {-1,+1} after each group
  int final_disparity = -1;
};

// Standard running-disparity encoding; initial_disparity must be -1 or +1.
LineCodeBlock encode_8b10b(const std::vector<std::uint8_t>& payload,
                           int initial_disparity = -1);

struct DecodeError {
  std::size_t group_index = 0;
  std::string kind;  // "invalid-code" or "disparity-violation"
};

struct DecodeResult {
  std::vector<std::uint8_t> bytes;
  std::optional<DecodeError> error;  // decoding stops at the first error
};

// Non-throwing decode; on error, `bytes` holds the groups decoded so far.
DecodeResult try_decode_8b10b(const std::vector<std::uint8_t>& bits,
                              int initial_disparity = -1);

// Throwing variant: std::runtime_error with the failing group index.
std::vector<std::uint8_t> decode_8b10b(const std::vector<std::uint8_t>& bits,
                                       int initial_disparity = -1);

// Longest run of identical bits in a stream.
std::size_t max_run_length(const std::vector<std::uint8_t>& bits);

// Lenient single-group decode: pattern lookup only, running disparity
// ignored. Returns the byte when both sub-blocks are valid code patterns.
// Used for per-group error statistics where a strict decoder would let one
// corrupted group cast doubt on everything after it.
std::optional<std::uint8_t> decode_group_value(const std::uint8_t* bits10);

}  // namespace medrx::berlab

#endif  // MEDRX_LINECODE_HPP
