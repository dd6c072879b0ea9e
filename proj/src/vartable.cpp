#include "cycgm/vartable.hpp"

namespace cycgm {

VarTable::VarTable(std::vector<std::string> params) {
    names_.reserve(params.size() + 1);
    names_.push_back("x");
    for (auto& p : params) {
        if (p == "x") throw Error("\"x\" is reserved for the main variable");
        names_.push_back(std::move(p));
    }
    for (std::size_t i = 0; i < names_.size(); ++i)
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j]) throw Error("duplicate variable name: " + names_[i]);
}

std::optional<std::size_t> VarTable::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

}  // namespace cycgm
