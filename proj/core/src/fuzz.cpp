#include "parayam/fuzz.hpp"

namespace parayam {

ExprFuzzer::ExprFuzzer(std::uint64_t seed) : table_(std::make_shared<SymbolTable>(3)), rng_(seed) {
    table_->declare_coordinate("x", 0);
    table_->declare_coordinate("y", 1);
    table_->declare_coordinate("z", 2);
    table_->declare("a");
    table_->declare("b");
}

std::uint64_t ExprFuzzer::pick(std::uint64_t n) { return rng_() % n; }

long ExprFuzzer::small_int(long lo, long hi) {
    return lo + static_cast<long>(pick(static_cast<std::uint64_t>(hi - lo + 1)));
}

ScalarExpr ExprFuzzer::leaf() {
    if (pick(5) < 2) return ScalarExpr::integer(small_int(-9, 9));
    const std::uint32_t s = static_cast<std::uint32_t>(pick(table_->size()));
    return ScalarExpr::symbol(SymbolId{s});
}

ScalarExpr ExprFuzzer::linear_argument() {
    ScalarExpr arg = ScalarExpr::integer(small_int(-2, 2));
    for (std::uint32_t s = 0; s < 3; ++s)
        arg += ScalarExpr::integer(small_int(-2, 2)) * ScalarExpr::symbol(SymbolId{s});
    return arg;
}

ScalarExpr ExprFuzzer::next(int max_depth) {
    if (max_depth <= 0) return leaf();
    switch (pick(12)) {
    case 0:
    case 1: return leaf();
    case 2:
    case 3: return next(max_depth - 1) + next(max_depth - 1);
    case 4:
    case 5: return next(max_depth - 1) - next(max_depth - 1);
    case 6:
    case 7: return next(max_depth - 1) * next(max_depth - 1);
    case 8: {
        for (int attempt = 0; attempt < 8; ++attempt) {
            ScalarExpr den = next(max_depth - 1);
            if (!den.is_zero()) return next(max_depth - 1) / den;
        }
        return leaf();
    }
    case 9: return next(max_depth - 1).pow(small_int(2, 3));
    case 10: return ScalarExpr::exponential(linear_argument());
    default: return -next(max_depth - 1);
    }
}

Assignment ExprFuzzer::next_point() {
    Assignment point;
    for (std::uint32_t s = 0; s < table_->size(); ++s)
        point[SymbolId{s}] = Rational(small_int(-3, 3), small_int(1, 3));
    return point;
}

std::size_t ExprFuzzer::next_direction() { return static_cast<std::size_t>(pick(3)); }

} // namespace parayam
