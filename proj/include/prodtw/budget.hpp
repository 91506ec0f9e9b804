#pragma once

#include <cstdint>

namespace prodtw {

/// Resource limits for the exact solvers. Zero means "use the operation's
/// default" for vertex_ceiling and "unlimited" for the step/time fields.
/// Step budgets are deterministic; the time budget is a wall-clock fallback.
struct Budget {
    int vertex_ceiling = 0;
    std::int64_t max_steps = 0;
    int time_ms = 0;
};

} // namespace prodtw
