#pragma once

#include "sparsedc/common.hpp"

#include <cstdint>
#include <unordered_map>

namespace sparsedc {

// Sparse symbol -> occurrence count map. Storage grows with the number of
// distinct symbols seen, never with the alphabet size.
class CountTable {
public:
    void observe(Symbol s) {
        ++counts_[s];
        ++total_;
    }

    std::uint64_t count(Symbol s) const {
        auto it = counts_.find(s);
        return it == counts_.end() ? 0 : it->second;
    }

    bool seen(Symbol s) const { return counts_.contains(s); }

    // number of symbols observed so far (n)
    std::uint64_t total() const { return total_; }

    // number of distinct symbols observed so far (u)
    std::uint64_t distinct() const { return counts_.size(); }

    const std::unordered_map<Symbol, std::uint64_t>& entries() const { return counts_; }

    bool operator==(const CountTable&) const = default;

private:
    std::unordered_map<Symbol, std::uint64_t> counts_;
    std::uint64_t total_ = 0;
};

}  // namespace sparsedc
