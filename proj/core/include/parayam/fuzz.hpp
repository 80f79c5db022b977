#pragma once

#include "parayam/expr.hpp"
#include "parayam/numeric.hpp"
#include "parayam/symbols.hpp"

#include <cstdint>
#include <memory>
#include <random>

namespace parayam {

// Deterministic random expressions for self-checks: five symbols (three of
// them coordinate directions), small integer coefficients, exponentials of
// linear arguments, guarded division.  A fixed seed always reproduces the
// same stream, keeping every report byte-identical between runs.
class ExprFuzzer {
public:
    explicit ExprFuzzer(std::uint64_t seed);

    const SymbolTable& table() const { return *table_; }
    std::shared_ptr<const SymbolTable> table_ptr() const { return table_; }

    ScalarExpr next(int max_depth = 4);
    // Assigns a small rational to every symbol.
    Assignment next_point();
    // Coordinate direction index in [0, 3).
    std::size_t next_direction();

private:
    std::uint64_t pick(std::uint64_t n); // uniform-ish in [0, n)
    long small_int(long lo, long hi);
    ScalarExpr leaf();
    ScalarExpr linear_argument();

    std::shared_ptr<SymbolTable> table_;
    std::mt19937_64 rng_;
};

} // namespace parayam
