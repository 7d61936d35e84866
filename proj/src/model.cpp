#include "sparsedc/model.hpp"

namespace sparsedc {

namespace {

std::variant<SdcModel, SsdModel, SsaModel> make_impl(ModelKind kind, std::uint32_t alphabet_size) {
    switch (kind) {
        case ModelKind::Sdc: return SdcModel(alphabet_size);
        case ModelKind::Ssd: return SsdModel(alphabet_size);
        case ModelKind::Ssa: return SsaModel(alphabet_size);
    }
    throw ParameterError("unknown model kind");
}

}  // namespace

std::string_view to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::Sdc: return "sdc";
        case ModelKind::Ssd: return "ssd";
        case ModelKind::Ssa: return "ssa";
    }
    return "?";
}

std::optional<ModelKind> parse_model_kind(std::string_view name) {
    if (name == "sdc") return ModelKind::Sdc;
    if (name == "ssd") return ModelKind::Ssd;
    if (name == "ssa") return ModelKind::Ssa;
    return std::nullopt;
}

std::optional<ModelKind> model_kind_from_id(std::uint8_t id) {
    if (id > 2) return std::nullopt;
    return static_cast<ModelKind>(id);
}

Model::Model(ModelKind kind, std::uint32_t alphabet_size) : impl_(make_impl(kind, alphabet_size)) {}

}  // namespace sparsedc
