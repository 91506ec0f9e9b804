#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "prodtw/budget.hpp"
#include "prodtw/product.hpp"

namespace prodtw {

enum class Provenance { exact, certified, heuristic, formula, vacuous };

std::string to_string(Provenance p);

struct BoundValue {
    int value = 0;
    Provenance provenance = Provenance::formula;
};

/// One row of the bounds table. Lower bounds are clamped at 0 for display;
/// lower_formula_raw keeps the unclamped k(n-2k+2)-1.
struct BoundsReport {
    std::string instance;
    int n = 0;
    int k = 0;
    int kappa_g = 0;
    int kappa_h = 0;
    int lower_formula_raw = 0;
    bool vacuous = false;
    BoundValue lower_formula;
    std::optional<BoundValue> lower_certified; // refuter battery passed
    std::optional<BoundValue> upper_ordering;
    std::optional<BoundValue> upper_heuristic;
    std::optional<BoundValue> upper_lift; // both factors chordal
    std::optional<BoundValue> exact;
    std::string note;

    int best_lower() const;
    int best_upper() const;
};

struct BoundsOptions {
    int exact_ceiling = 0;     // 0 = solver default
    int budget_ms = 0;         // wall clock for the exact solvers
    std::int64_t max_steps = 0;
    std::uint64_t seed = 1;
    int battery = 200;         // refuter battery size for the certified bound
};

/// Computes every applicable bound for p with connectivity parameter k.
/// Throws precondition_error (naming the factor) if k exceeds a factor's
/// connectivity, and std::logic_error if the assembled row ever violates
/// lower <= exact <= upper.
BoundsReport compute_bounds(const ProductGraph& p, int k, const std::string& instance_name,
                            const BoundsOptions& opt = {});

} // namespace prodtw
