#pragma once

#include "parayam/error.hpp"
#include "parayam/expr.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace parayam {

// Symbol table plus derivative rules: the differential context every
// expression of a model lives in.  A model has a fixed number of derivative
// directions (the chart coordinates or the frame vectors).  Each symbol
// carries one ScalarExpr per direction, defaulting to zero, i.e. symbols are
// constants unless told otherwise.  Chart coordinates are symbols whose rules
// are Kronecker deltas.
class SymbolTable {
public:
    explicit SymbolTable(std::size_t directions) : directions_(directions) {}

    std::size_t directions() const { return directions_; }
    std::size_t size() const { return names_.size(); }

    // Declares a new constant symbol.  Names must match
    // [A-Za-z_][A-Za-z0-9_]* and be unique; "exp" is reserved.
    SymbolId declare(std::string name);
    // Declares a symbol that behaves as the coordinate of `direction`:
    // its partial is 1 along that direction and 0 along the others.
    SymbolId declare_coordinate(std::string name, std::size_t direction);

    void set_partial(SymbolId s, std::size_t direction, ScalarExpr rule);

    std::optional<SymbolId> find(std::string_view name) const;
    const std::string& name(SymbolId s) const;
    const ScalarExpr& partial(SymbolId s, std::size_t direction) const;

private:
    std::size_t directions_;
    std::vector<std::string> names_;
    std::map<std::string, SymbolId, std::less<>> index_;
    // partials_[symbol][direction]; empty inner vector = all-zero rules.
    std::vector<std::vector<ScalarExpr>> partials_;
};

bool is_valid_symbol_name(std::string_view name);

} // namespace parayam
