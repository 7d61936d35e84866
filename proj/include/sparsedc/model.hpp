#pragma once

#include "sparsedc/estimators.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>

namespace sparsedc {

// Numeric values are the container's model_id byte.
enum class ModelKind : std::uint8_t { Sdc = 0, Ssd = 1, Ssa = 2 };

std::string_view to_string(ModelKind kind);
std::optional<ModelKind> parse_model_kind(std::string_view name);
std::optional<ModelKind> model_kind_from_id(std::uint8_t id);

// Runtime-selected estimator, for the coder and CLI.
class Model {
public:
    Model(ModelKind kind, std::uint32_t alphabet_size);

    ModelKind kind() const { return static_cast<ModelKind>(impl_.index()); }

    std::uint32_t alphabet_size() const {
        return std::visit([](const auto& m) { return m.alphabet_size(); }, impl_);
    }
    Log2Prob conditional(Symbol s) const {
        return std::visit([s](const auto& m) { return m.conditional(s); }, impl_);
    }
    void distribution(std::span<double> out) const {
        std::visit([out](const auto& m) { m.distribution(out); }, impl_);
    }
    void update(Symbol s) {
        std::visit([s](auto& m) { m.update(s); }, impl_);
    }

    bool operator==(const Model&) const = default;

private:
    // alternative order matches ModelKind
    std::variant<SdcModel, SsdModel, SsaModel> impl_;
};

}  // namespace sparsedc
