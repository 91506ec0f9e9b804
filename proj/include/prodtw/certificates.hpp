#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "prodtw/bramble.hpp"
#include "prodtw/budget.hpp"
#include "prodtw/product.hpp"
#include "prodtw/product_bramble.hpp"

namespace prodtw {

struct VerifyReport {
    std::vector<std::string> violations;
    std::string summary;
    bool ok() const { return violations.empty(); }
};

/// Bramble certificate: `bramble <element_count> <host_n>` then one line per
/// element listing 1-based vertex ids in increasing order. `c` comments
/// allowed.
void write_bramble_certificate(std::ostream& out, const Bramble& b);

struct BrambleCertificate {
    int host_n = 0;
    std::vector<std::vector<int>> elements; // 0-based
};
BrambleCertificate read_bramble_certificate(std::istream& in);

/// Re-checks bramble validity against the host and, when asked, a claimed
/// order lower bound: either via a provided list of pairwise disjoint element
/// indices (0-based) or by re-running the exact hitting-set solver.
VerifyReport verify_bramble_certificate(const Graph& host, const BrambleCertificate& cert,
                                        std::optional<int> claimed_order,
                                        const std::vector<int>& disjoint_indices,
                                        const Budget& budget = {});

/// Refutation transcript: line-oriented key/value text, 1-based ids.
void write_refutation(std::ostream& out, const RefutationOutcome& outcome);
RefutationOutcome read_refutation(std::istream& in);

/// Recovers the factors of a flat product graph laid out as v*h_size + w and
/// checks the edge set matches cartesian_product(G, H) exactly. Throws
/// std::invalid_argument when the graph is not such a product.
ProductGraph reconstruct_product(const Graph& flat, int g_size, int h_size);

/// Re-checks a refutation transcript against the product it talks about:
/// preconditions, S0/T0 recomputation, and the outcome's own invariants.
VerifyReport verify_refutation(const ProductGraph& p, const RefutationOutcome& outcome);

} // namespace prodtw
