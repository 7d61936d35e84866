#include "sparsedc/codec.hpp"

#include <algorithm>
#include <string>

namespace sparsedc {

namespace {

template <class T>
void put_le(std::vector<std::uint8_t>& out, T value) {
    for (std::size_t i = 0; i < sizeof(T); ++i) out.push_back(static_cast<std::uint8_t>(value >> (8 * i)));
}

template <class T>
T get_le(std::span<const std::uint8_t> bytes, std::size_t offset) {
    T value = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) value |= static_cast<T>(bytes[offset + i]) << (8 * i);
    return value;
}

}  // namespace

std::vector<std::uint8_t> CompressedContainer::serialize() const {
    std::vector<std::uint8_t> out;
    out.reserve(kHeaderSize + payload.size());
    out.insert(out.end(), kMagic.begin(), kMagic.end());
    out.push_back(kVersion);
    out.push_back(static_cast<std::uint8_t>(model));
    put_le<std::uint32_t>(out, alphabet_size);
    put_le<std::uint64_t>(out, length);
    out.insert(out.end(), payload.begin(), payload.end());
    return out;
}

CompressedContainer CompressedContainer::parse(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < kMagic.size() || !std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) {
        throw FormatError("not an SSDC container (bad magic)");
    }
    if (bytes.size() < kHeaderSize) throw TruncatedError("container header truncated");
    if (bytes[4] != kVersion) throw FormatError("unsupported container version " + std::to_string(bytes[4]));
    const auto kind = model_kind_from_id(bytes[5]);
    if (!kind) throw FormatError("unknown model id " + std::to_string(bytes[5]));

    CompressedContainer c;
    c.model = *kind;
    c.alphabet_size = get_le<std::uint32_t>(bytes, 6);
    c.length = get_le<std::uint64_t>(bytes, 10);
    if (c.alphabet_size == 0) throw FormatError("container alphabet size is zero");
    c.payload.assign(bytes.begin() + kHeaderSize, bytes.end());
    return c;
}

CompressedContainer encode_sequence(ModelKind kind, std::uint32_t alphabet_size, std::span<const Symbol> seq) {
    Model model(kind, alphabet_size);
    CompressedContainer c;
    c.model = kind;
    c.alphabet_size = alphabet_size;
    c.length = seq.size();
    c.payload = encode_payload(model, seq);
    return c;
}

std::vector<Symbol> decode_sequence(const CompressedContainer& container, Model& model) {
    if (model.kind() != container.model || model.alphabet_size() != container.alphabet_size) {
        throw ModelMismatchError("decoder model does not match container header");
    }
    if (model != Model(container.model, container.alphabet_size)) {
        throw ModelMismatchError("decoder model has already observed symbols");
    }
    return decode_payload(model, container.payload, container.length);
}

std::vector<Symbol> decode_sequence(const CompressedContainer& container) {
    Model model(container.model, container.alphabet_size);
    return decode_payload(model, container.payload, container.length);
}

}  // namespace sparsedc
