#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace altkit {

/// Ordered symbol table shared by every polynomial of one session.
/// The order is what the graded-lexicographic term order refers to,
/// so it is fixed at construction. Variables flagged "laurent" may
/// carry negative exponents (t and z in the default registry).
class VarRegistry {
public:
    VarRegistry(std::vector<std::string> names, std::vector<std::string> laurent_names = {})
        : names_(std::move(names)), laurent_(names_.size(), false) {
        for (std::size_t i = 0; i < names_.size(); ++i)
            for (std::size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j])
                    throw std::invalid_argument("duplicate variable name: " + names_[i]);
        for (const auto& n : laurent_names) laurent_[checked_index(n)] = true;
    }

    int size() const { return static_cast<int>(names_.size()); }

    const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }

    bool is_laurent(int i) const { return laurent_.at(static_cast<std::size_t>(i)); }

    /// -1 when the name is unknown.
    int index_of(std::string_view n) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == n) return static_cast<int>(i);
        return -1;
    }

    int checked_index(std::string_view n) const {
        int i = index_of(n);
        if (i < 0) throw std::invalid_argument("unknown variable: " + std::string(n));
        return i;
    }

    bool operator==(const VarRegistry& o) const {
        return names_ == o.names_ && laurent_ == o.laurent_;
    }

private:
    std::vector<std::string> names_;
    std::vector<bool> laurent_;
};

using Registry = std::shared_ptr<const VarRegistry>;

inline Registry make_registry(std::vector<std::string> names,
                              std::vector<std::string> laurent_names = {}) {
    return std::make_shared<const VarRegistry>(std::move(names), std::move(laurent_names));
}

/// One registry per session: every symbol any module needs, in the order
/// the canonical term order sorts by. t (operator coefficients) and z
/// (densities) are Laurent.
const Registry& default_registry();

inline bool same_registry(const Registry& a, const Registry& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

}  // namespace altkit
