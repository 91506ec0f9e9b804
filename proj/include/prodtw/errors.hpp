#pragma once

#include <stdexcept>
#include <string>

namespace prodtw {

// Tree edges that do not form a tree, empty bramble elements, non-bijective
// orderings: the input is malformed beyond what a validation report covers.
struct structural_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact solver exceeded its vertex ceiling, step budget, or time budget.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A theorem precondition does not hold (e.g. a factor is not k-connected).
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An ElementSpec violates its own invariants (sizes, budgets, copy membership).
struct spec_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct parse_error : std::runtime_error {
    parse_error(int line_no, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
    int line;
};

} // namespace prodtw
