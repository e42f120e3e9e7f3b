#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wiremodel {

enum class CodecKind { Amr, AmrWb };

const char* codec_kind_name(CodecKind kind);
CodecKind codec_kind_from_name(const std::string& name); // "amr" | "amr-wb", ConfigError

// 20 ms frame bit budget, split by subjective importance: Class A bits are
// CRC-protected and decide frame loss, Class B/C travel unprotected (C exists
// only in the two highest AMR modes). total = bitrate_kbps * 20 ms always
// holds; `reconciled` marks modes whose source print was internally
// inconsistent and had Class B / total recomputed from that identity.
struct CodecFrameLayout {
    CodecKind codec = CodecKind::Amr;
    int mode = 0;
    int class_a = 0;
    int class_b = 0;
    int class_c = 0;
    int total = 0;
    double bitrate_kbps = 0.0;
    bool reconciled = false;
};

const CodecFrameLayout& layout_for(CodecKind codec, int mode); // ConfigError if unknown
const std::vector<CodecFrameLayout>& all_layouts();

// JSON array of {codec, mode, class_a, class_b, class_c, total, bitrate_kbps,
// reconciled} for external consumers.
std::string layout_registry_json();

// CRC-8, generator x^8 + x^7 + x^4 + x^3 + x + 1 (0x9B below the x^8 term),
// init 0, bits processed most-significant-first, no reflection, no final xor.
// With init 0 the map is linear over GF(2): crc(x ^ y) = crc(x) ^ crc(y).
struct CrcSpec {
    std::uint8_t poly = 0x9B;
    std::uint8_t init = 0x00;
};

// `bits` holds one bit per byte (0/1), consumed in index order.
std::uint8_t crc8_compute(const std::vector<std::uint8_t>& bits, std::size_t offset,
                          std::size_t count, const CrcSpec& spec = {});
std::uint8_t crc8_compute(const std::vector<std::uint8_t>& bits, const CrcSpec& spec = {});

// One speech frame on the wire: payload ordered Class A, B, C, followed by the
// 8 CRC bits computed over Class A only. Header/auxiliary codec fields are
// out-of-band metadata and are not part of the transmitted bits.
struct FrameBits {
    CodecFrameLayout layout;
    std::vector<std::uint8_t> payload; // layout.total bits, Class A first
    std::uint8_t crc = 0;
};

FrameBits make_frame(const CodecFrameLayout& layout, std::vector<std::uint8_t> payload);

// Wire form: payload bits then CRC bits, MSB of the CRC first.
std::vector<std::uint8_t> frame_to_bits(const FrameBits& frame);
FrameBits frame_from_bits(const CodecFrameLayout& layout,
                          const std::vector<std::uint8_t>& bits); // ConfigError on size

struct FrameVerdict {
    // Receiver's verdict: CRC recomputed over the received Class A bits
    // mismatches the received CRC field. This is what drives Ppl.
    bool lost = false;
    // Ground truth (needs the sent frame): some Class A bit actually flipped.
    // Kept separate so CRC blind spots are measurable.
    bool class_a_corrupted = false;
};

FrameVerdict frame_loss_decision(const FrameBits& sent, const FrameBits& received,
                                 const CrcSpec& spec = {});

} // namespace wiremodel
