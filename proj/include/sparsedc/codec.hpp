#pragma once

#include "sparsedc/estimators.hpp"
#include "sparsedc/model.hpp"
#include "sparsedc/range_coder.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace sparsedc {

// On-disk layout, little-endian:
//
//   offset  size  field
//   0       4     magic "SSDC"
//   4       1     version (1)
//   5       1     model_id (0 = sdc, 1 = ssd, 2 = ssa)
//   6       4     alphabet_size
//   10      8     length_n (number of symbols)
//   18      ...   range coder payload
struct CompressedContainer {
    static constexpr std::array<std::uint8_t, 4> kMagic = {'S', 'S', 'D', 'C'};
    static constexpr std::uint8_t kVersion = 1;
    static constexpr std::size_t kHeaderSize = 18;

    ModelKind model = ModelKind::Ssd;
    std::uint32_t alphabet_size = 0;
    std::uint64_t length = 0;
    std::vector<std::uint8_t> payload;

    std::vector<std::uint8_t> serialize() const;

    // throws FormatError (magic, version, model id) or TruncatedError
    static CompressedContainer parse(std::span<const std::uint8_t> bytes);

    bool operator==(const CompressedContainer&) const = default;
};

// Codes seq with the model's conditionals, advancing the model past seq.
template <SequentialModel M>
std::vector<std::uint8_t> encode_payload(M& model, std::span<const Symbol> seq) {
    std::vector<double> dist(model.alphabet_size());
    RangeEncoder encoder;
    for (Symbol s : seq) {
        check_symbol(s, model.alphabet_size());
        model.distribution(dist);
        encoder.encode(quantize(dist), s);
        model.update(s);
    }
    return std::move(encoder).finish();
}

// Inverse of encode_payload; the model must start in the encoder's state.
template <SequentialModel M>
std::vector<Symbol> decode_payload(M& model, std::span<const std::uint8_t> payload, std::uint64_t length) {
    std::vector<double> dist(model.alphabet_size());
    RangeDecoder decoder(payload);
    std::vector<Symbol> out;
    out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(length, 1u << 20)));
    for (std::uint64_t i = 0; i < length; ++i) {
        model.distribution(dist);
        const Symbol s = decoder.decode(quantize(dist));
        model.update(s);
        out.push_back(s);
    }
    if (!decoder.exhausted()) throw FormatError("trailing bytes after range coder payload");
    return out;
}

// -log2 of the product of the quantized conditionals the coder actually
// uses for seq.
template <SequentialModel M>
double quantized_code_length(M model, std::span<const Symbol> seq) {
    std::vector<double> dist(model.alphabet_size());
    double bits = 0.0;
    for (Symbol s : seq) {
        model.distribution(dist);
        const QuantizedCdf cdf = quantize(dist);
        bits += static_cast<double>(kCdfBits) - std::log2(static_cast<double>(cdf.freq(s)));
        model.update(s);
    }
    return bits;
}

// -log2 p(seq) under the model, in bits.
template <SequentialModel M>
double ideal_code_length(const M& model, std::span<const Symbol> seq) {
    return -sequence_log2prob(model, seq);
}

CompressedContainer encode_sequence(ModelKind kind, std::uint32_t alphabet_size, std::span<const Symbol> seq);

// `model` must be fresh and match the container's model and alphabet
// size, otherwise ModelMismatchError. On return it holds the state the
// encoder ended in.
std::vector<Symbol> decode_sequence(const CompressedContainer& container, Model& model);
std::vector<Symbol> decode_sequence(const CompressedContainer& container);

}  // namespace sparsedc
