#include "wiremodel/framing.hpp"

#include <json.hpp>

#include "wiremodel/errors.hpp"

namespace wiremodel {

using nlohmann::json;

const char* codec_kind_name(CodecKind kind) {
    return kind == CodecKind::Amr ? "amr" : "amr-wb";
}

CodecKind codec_kind_from_name(const std::string& name) {
    if (name == "amr")
        return CodecKind::Amr;
    if (name == "amr-wb" || name == "amr_wb" || name == "amrwb")
        return CodecKind::AmrWb;
    throw ConfigError("unknown codec '" + name + "' (expected amr or amr-wb)");
}

const std::vector<CodecFrameLayout>& all_layouts() {
    // Class A counts and bitrates are verbatim from the source tables; total
    // is pinned to bitrate * 20 ms and Class B recomputed from it wherever the
    // printed row contradicted that identity (`reconciled`).
    static const std::vector<CodecFrameLayout> kLayouts = {
        {CodecKind::Amr, 0, 42, 53, 0, 95, 4.75, false},
        {CodecKind::Amr, 1, 49, 54, 0, 103, 5.15, true}, // printed Class B 64
        {CodecKind::Amr, 2, 55, 63, 0, 118, 5.90, false},
        {CodecKind::Amr, 3, 58, 76, 0, 134, 6.70, false},
        {CodecKind::Amr, 4, 61, 87, 0, 148, 7.40, false},
        {CodecKind::Amr, 5, 75, 84, 0, 159, 7.95, false},
        {CodecKind::Amr, 6, 65, 99, 40, 204, 10.2, false},
        {CodecKind::Amr, 7, 81, 103, 60, 244, 12.2, false},
        {CodecKind::AmrWb, 0, 54, 78, 0, 132, 6.60, false},
        {CodecKind::AmrWb, 1, 64, 113, 0, 177, 8.85, false},
        {CodecKind::AmrWb, 2, 72, 181, 0, 253, 12.65, true},  // printed total 181
        {CodecKind::AmrWb, 3, 72, 213, 0, 285, 14.25, true},  // printed B 76, total 213
        {CodecKind::AmrWb, 4, 72, 245, 0, 317, 15.85, true},  // printed B 87, total 245
        {CodecKind::AmrWb, 5, 72, 293, 0, 365, 18.25, true},  // printed B 84, total 293
        {CodecKind::AmrWb, 6, 72, 325, 0, 397, 19.85, true},  // printed B 99, total 325
        {CodecKind::AmrWb, 7, 72, 389, 0, 461, 23.05, true},  // printed B 103, total 389
        {CodecKind::AmrWb, 8, 72, 405, 0, 477, 23.85, true},  // printed B 103, total 405
    };
    return kLayouts;
}

const CodecFrameLayout& layout_for(CodecKind codec, int mode) {
    for (const auto& l : all_layouts())
        if (l.codec == codec && l.mode == mode)
            return l;
    throw ConfigError(std::string("no frame layout for ") + codec_kind_name(codec) + " mode " +
                      std::to_string(mode));
}

std::string layout_registry_json() {
    json arr = json::array();
    for (const auto& l : all_layouts()) {
        arr.push_back({{"codec", codec_kind_name(l.codec)},
                       {"mode", l.mode},
                       {"class_a", l.class_a},
                       {"class_b", l.class_b},
                       {"class_c", l.class_c},
                       {"total", l.total},
                       {"bitrate_kbps", l.bitrate_kbps},
                       {"reconciled", l.reconciled}});
    }
    return arr.dump(2) + "\n";
}

std::uint8_t crc8_compute(const std::vector<std::uint8_t>& bits, std::size_t offset,
                          std::size_t count, const CrcSpec& spec) {
    if (offset + count > bits.size())
        throw ConfigError("crc8: bit range exceeds input size");
    std::uint8_t crc = spec.init;
    for (std::size_t i = offset; i < offset + count; ++i) {
        std::uint8_t in = bits[i];
        if (in > 1)
            throw ConfigError("crc8: input must be 0/1 bits");
        std::uint8_t fb = static_cast<std::uint8_t>((crc >> 7) ^ in) & 1u;
        crc = static_cast<std::uint8_t>(crc << 1);
        if (fb)
            crc ^= spec.poly;
    }
    return crc;
}

std::uint8_t crc8_compute(const std::vector<std::uint8_t>& bits, const CrcSpec& spec) {
    return crc8_compute(bits, 0, bits.size(), spec);
}

FrameBits make_frame(const CodecFrameLayout& layout, std::vector<std::uint8_t> payload) {
    if (payload.size() != static_cast<std::size_t>(layout.total))
        throw ConfigError("frame payload must be exactly " + std::to_string(layout.total) +
                          " bits for " + codec_kind_name(layout.codec) + " mode " +
                          std::to_string(layout.mode));
    FrameBits frame;
    frame.layout = layout;
    frame.payload = std::move(payload);
    frame.crc = crc8_compute(frame.payload, 0, static_cast<std::size_t>(layout.class_a));
    return frame;
}

std::vector<std::uint8_t> frame_to_bits(const FrameBits& frame) {
    std::vector<std::uint8_t> bits = frame.payload;
    bits.reserve(bits.size() + 8);
    for (int i = 7; i >= 0; --i)
        bits.push_back(static_cast<std::uint8_t>((frame.crc >> i) & 1u));
    return bits;
}

FrameBits frame_from_bits(const CodecFrameLayout& layout, const std::vector<std::uint8_t>& bits) {
    if (bits.size() != static_cast<std::size_t>(layout.total) + 8)
        throw ConfigError("frame bit stream must be total + 8 bits");
    FrameBits frame;
    frame.layout = layout;
    frame.payload.assign(bits.begin(), bits.begin() + layout.total);
    std::uint8_t crc = 0;
    for (int i = 0; i < 8; ++i)
        crc = static_cast<std::uint8_t>((crc << 1) | (bits[layout.total + i] & 1u));
    frame.crc = crc;
    return frame;
}

FrameVerdict frame_loss_decision(const FrameBits& sent, const FrameBits& received,
                                 const CrcSpec& spec) {
    if (sent.layout.codec != received.layout.codec || sent.layout.mode != received.layout.mode)
        throw ConfigError("frame_loss_decision: sent/received layouts differ");
    std::size_t class_a = static_cast<std::size_t>(sent.layout.class_a);
    FrameVerdict verdict;
    verdict.lost = crc8_compute(received.payload, 0, class_a, spec) != received.crc;
    verdict.class_a_corrupted = false;
    for (std::size_t i = 0; i < class_a; ++i) {
        if (sent.payload[i] != received.payload[i]) {
            verdict.class_a_corrupted = true;
            break;
        }
    }
    return verdict;
}

} // namespace wiremodel
