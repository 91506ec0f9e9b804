#pragma once

#include <cstdint>
#include <map>
#include <variant>
#include <vector>

#include "prodtw/errors.hpp"
#include "prodtw/product.hpp"

namespace prodtw {

/// Recipe for one element X of the product bramble: pick 2k-1 G-vertices S
/// and 2k-1 H-vertices T, take the union of the copies H_v (v in S) and G_w
/// (w in T), then delete at most k-1 vertices from each named copy. The
/// budget applies to the union of all deletion lists: a deleted core vertex
/// (v, w) with v in S and w in T counts against both copies.
struct ElementSpec {
    int k = 0;
    std::vector<int> s; // G-vertices, ascending, |s| = 2k-1
    std::vector<int> t; // H-vertices, ascending, |t| = 2k-1
    std::map<int, std::vector<int>> h_copy_deletions; // v in s -> flat ids inside H_v
    std::map<int, std::vector<int>> g_copy_deletions; // w in t -> flat ids inside G_w

    std::vector<int> all_deletions() const; // sorted union
};

struct TheoremBound {
    int value = 0;       // k(n-2k+2) - 1; may be negative
    bool vacuous = false; // n <= 2k-2
};

/// The paper's lower bound on tw(G box H) for k-connected factors with at
/// least n vertices each.
TheoremBound theorem_bound(int k, int n);

/// Verifies spec invariants and the k-connectivity preconditions, then
/// returns the element's flat vertex ids (ascending). The result is asserted
/// connected. Throws spec_error / precondition_error.
std::vector<int> make_element(const ProductGraph& p, const ElementSpec& spec);

struct QGraphReport {
    int min_degree = 0;
    bool connected = false;
};

/// The bipartite graph Q on S u T with an edge vw iff flat(v, w) survived in
/// x. Under the spec invariants, min degree >= k and Q is connected.
QGraphReport q_graph_check(const ProductGraph& p, const ElementSpec& spec,
                           const std::vector<int>& x);

/// A flat vertex (v, w) in S_a x T_b that survived both deletion processes;
/// the least such id. Existence is guaranteed by counting: each side deletes
/// at most (2k-1)(k-1) of the (2k-1)^2 candidates.
int touching_certificate(const ProductGraph& p, const ElementSpec& a, const ElementSpec& b);

enum class CopyAxis { rows, columns }; // rows = H-copies (indexed by G), columns = G-copies

struct AvoidingElement {
    ElementSpec spec;
    std::vector<int> vertices; // disjoint from J, connected
};

struct SizeCertificate {
    CopyAxis axis;
    std::vector<int> copies; // copy ids with >= k vertices of J each
    int implied_bound = 0;   // k * |copies| <= |J|
};

struct RefutationOutcome {
    int k = 0;
    int n = 0; // min(|V(G)|, |V(H)|)
    int g_size = 0;
    int h_size = 0;
    std::vector<int> j; // the candidate hitting set, ascending flat ids
    int s0_size = 0;    // |{v : |H_v cap J| <= k-1}|
    int t0_size = 0;
    std::variant<AvoidingElement, SizeCertificate> result;

    bool avoided() const { return std::holds_alternative<AvoidingElement>(result); }
};

/// The constructive order argument: either J misses some bramble element
/// (returned explicitly) or enough disjoint copies are k-hit to force
/// |J| >= k(n-2k+2).
RefutationOutcome refute_hitting_set(const ProductGraph& p, int k, const std::vector<int>& j);

enum class DeletionPolicy { none, adversarial, random_draws };

/// Seeded element corpus for property tests. The adversarial policy deletes
/// exactly k-1 vertices per copy, all inside the S x T core.
std::vector<std::pair<ElementSpec, std::vector<int>>> sample_elements(const ProductGraph& p,
                                                                      int k, int count,
                                                                      DeletionPolicy policy,
                                                                      std::uint64_t seed);

} // namespace prodtw
