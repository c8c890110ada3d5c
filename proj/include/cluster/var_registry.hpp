#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cluster {

// Ordered list of ambient variable names with an invertibility flag per slot.
// Invertible variables may carry negative (Laurent) exponents.
class VarRegistry {
public:
    VarRegistry() = default;

    std::size_t add(const std::string& name, bool invertible = false) {
        if (find(name))
            throw std::invalid_argument("VarRegistry: duplicate variable '" + name + "'");
        names_.push_back(name);
        inv_.push_back(invertible);
        return names_.size() - 1;
    }

    std::size_t size() const { return names_.size(); }

    const std::string& name(std::size_t i) const {
        check(i);
        return names_[i];
    }

    bool invertible(std::size_t i) const {
        check(i);
        return inv_[i];
    }

    std::optional<std::size_t> find(const std::string& name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        return std::nullopt;
    }

    std::size_t index_of(const std::string& name) const {
        auto i = find(name);
        if (!i) throw std::invalid_argument("VarRegistry: unknown variable '" + name + "'");
        return *i;
    }

    std::vector<std::size_t> invertible_indices() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < inv_.size(); ++i)
            if (inv_[i]) out.push_back(i);
        return out;
    }

    std::vector<std::size_t> plain_indices() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < inv_.size(); ++i)
            if (!inv_[i]) out.push_back(i);
        return out;
    }

    bool operator==(const VarRegistry& o) const {
        return names_ == o.names_ && inv_ == o.inv_;
    }

private:
    void check(std::size_t i) const {
        if (i >= names_.size()) throw std::out_of_range("VarRegistry: index out of range");
    }

    std::vector<std::string> names_;
    std::vector<bool> inv_;
};

} // namespace cluster
