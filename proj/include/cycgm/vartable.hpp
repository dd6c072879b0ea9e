#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cycgm/errors.hpp"

namespace cycgm {

/// Ordered variable names. "x" is the distinguished main variable and always
/// sits at index 0; everything after it is a parameter (t1..tn, u, a, b, c...).
class VarTable {
public:
    explicit VarTable(std::vector<std::string> params = {});

    std::size_t size() const { return names_.size(); }
    static constexpr std::size_t x_index() { return 0; }

    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<std::size_t> index_of(std::string_view name) const;

    bool operator==(const VarTable& other) const { return names_ == other.names_; }
    bool operator!=(const VarTable& other) const { return !(*this == other); }

private:
    std::vector<std::string> names_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

inline VarTablePtr make_table(std::vector<std::string> params = {}) {
    return std::make_shared<VarTable>(std::move(params));
}

/// Tables are compared by content so independently built identical tables mix.
inline bool same_table(const VarTablePtr& a, const VarTablePtr& b) {
    return a == b || (a && b && *a == *b);
}

inline void require_same_table(const VarTablePtr& a, const VarTablePtr& b) {
    if (!same_table(a, b)) throw VarTableMismatch("operands use different variable tables");
}

}  // namespace cycgm
