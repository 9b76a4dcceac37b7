#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace stori {

/// Binding of formula identifiers to state-vector indices.
///
/// The state dimension may exceed the number of named variables (e.g. a
/// planar model whose formulas only mention x and y out of four states).
class VariableMap {
public:
    VariableMap() = default;
    VariableMap(std::map<std::string, int> bindings, int state_dim);

    /// Auto-binds names to indices 0,1,2,... in the given order.
    static VariableMap sequential(const std::vector<std::string>& names);

    int state_dim() const noexcept { return state_dim_; }
    bool empty() const noexcept { return by_name_.empty(); }

    std::optional<int> index_of(const std::string& name) const;

    /// Name bound to a state index, or "x{i}" when the index is unnamed.
    std::string name_of(int index) const;

    const std::map<std::string, int>& bindings() const noexcept { return by_name_; }

private:
    std::map<std::string, int> by_name_;
    std::vector<std::string> by_index_;
    int state_dim_ = 0;
};

}  // namespace stori
