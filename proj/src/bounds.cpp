#include "prodtw/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "prodtw/chordal.hpp"
#include "prodtw/connectivity.hpp"
#include "prodtw/elimination.hpp"
#include "prodtw/errors.hpp"
#include "prodtw/exact_treewidth.hpp"
#include "prodtw/ordering.hpp"
#include "prodtw/product_bramble.hpp"
#include "prodtw/rng.hpp"

namespace prodtw {

std::string to_string(Provenance p) {
    switch (p) {
    case Provenance::exact: return "exact";
    case Provenance::certified: return "certified";
    case Provenance::heuristic: return "heuristic";
    case Provenance::formula: return "formula";
    case Provenance::vacuous: return "vacuous";
    }
    return "?";
}

int BoundsReport::best_lower() const {
    int lo = lower_formula.value;
    if (lower_certified)
        lo = std::max(lo, lower_certified->value);
    if (exact)
        lo = std::max(lo, exact->value);
    return lo;
}

int BoundsReport::best_upper() const {
    int hi = n * n; // trivial: |V| - 1 would do; callers only use it when a bound exists
    bool any = false;
    auto fold = [&](const std::optional<BoundValue>& b) {
        if (b) {
            hi = any ? std::min(hi, b->value) : b->value;
            any = true;
        }
    };
    fold(upper_ordering);
    fold(upper_heuristic);
    fold(upper_lift);
    fold(exact);
    return hi;
}

namespace {

// Product ordering induced by per-factor orderings: position spreads the
// G-ordering across blocks of size |V(H)|. Width = max(width_h, n_h*width_g)
// realized on the product's actual edges.
VertexOrdering composed_ordering(const ProductGraph& p, const VertexOrdering& og,
                                 const VertexOrdering& oh) {
    VertexOrdering o;
    o.positions.resize(p.product.vertex_count());
    for (int v = 0; v < p.g_size(); ++v)
        for (int w = 0; w < p.h_size(); ++w)
            o.positions[p.flat(v, w)] =
                (og.positions[v] - 1) * p.h_size() + oh.positions[w];
    return o;
}

VertexOrdering factor_ordering(const Graph& factor, const BoundsOptions& opt) {
    Budget b;
    b.max_steps = opt.max_steps;
    b.time_ms = opt.budget_ms;
    try {
        BandwidthResult r = exact_bandwidth(factor, b);
        return r.ordering;
    } catch (const resource_error&) {
        return identity_ordering(factor.vertex_count());
    }
}

} // namespace

BoundsReport compute_bounds(const ProductGraph& p, int k, const std::string& instance_name,
                            const BoundsOptions& opt) {
    BoundsReport row;
    row.instance = instance_name;
    row.k = k;
    row.n = std::min(p.g_size(), p.h_size());

    row.kappa_g = p.g_size() >= 2 ? vertex_connectivity(p.g) : 0;
    row.kappa_h = p.h_size() >= 2 ? vertex_connectivity(p.h) : 0;
    if (k > row.kappa_g)
        throw precondition_error("factor G has connectivity " + std::to_string(row.kappa_g) +
                                 " < k = " + std::to_string(k));
    if (k > row.kappa_h)
        throw precondition_error("factor H has connectivity " + std::to_string(row.kappa_h) +
                                 " < k = " + std::to_string(k));

    TheoremBound tb = theorem_bound(k, row.n);
    row.lower_formula_raw = tb.value;
    row.vacuous = tb.vacuous;
    row.lower_formula = {std::max(0, tb.value),
                         tb.vacuous ? Provenance::vacuous : Provenance::formula};

    // Certified lower bound: seeded refuter battery at |J| = k(n-2k+2)-1.
    if (!tb.vacuous && tb.value >= 0 && p.g_size() >= 2 * k - 1 && p.h_size() >= 2 * k - 1) {
        const int target = tb.value; // = k(n-2k+2) - 1
        Rng rng(opt.seed);
        bool all_avoided = true;
        const int total = p.product.vertex_count();
        for (int trial = 0; trial < opt.battery && all_avoided; ++trial) {
            std::vector<int> pool(total);
            for (int i = 0; i < total; ++i)
                pool[i] = i;
            std::vector<int> j;
            for (int i = 0; i < target && i < total; ++i) {
                int pick = i + rng.below(total - i);
                std::swap(pool[i], pool[pick]);
                j.push_back(pool[i]);
            }
            all_avoided = refute_hitting_set(p, k, j).avoided();
        }
        if (all_avoided)
            row.lower_certified = BoundValue{std::max(0, tb.value), Provenance::certified};
        else
            row.note = "refuter battery found a hitting J below the bound (library bug)";
    }

    // Ordering upper bound via composed factor bandwidth orderings.
    {
        VertexOrdering og = factor_ordering(p.g, opt);
        VertexOrdering oh = factor_ordering(p.h, opt);
        VertexOrdering product_order = composed_ordering(p, og, oh);
        row.upper_ordering =
            BoundValue{ordering_width(p.product, product_order), Provenance::heuristic};
    }

    // Greedy elimination upper bound (best of the two strategies).
    {
        auto [w_fill, td_fill] = heuristic_upper_bound(p.product, EliminationStrategy::min_fill);
        auto [w_deg, td_deg] = heuristic_upper_bound(p.product, EliminationStrategy::min_degree);
        row.upper_heuristic = BoundValue{std::min(w_fill, w_deg), Provenance::heuristic};
    }

    // Chordal lift upper bound when both factors are chordal.
    {
        ChordalityResult cg = is_chordal(p.g);
        ChordalityResult ch = is_chordal(p.h);
        if (cg.chordal && ch.chordal && p.g_size() > 0) {
            TreeDecomposition td_g =
                normalize(decomposition_from_elimination(p.g, cg.peo));
            TreeDecomposition lifted = chordal_lift(td_g, p.g, p.h);
            row.upper_lift = BoundValue{width(lifted), Provenance::heuristic};
        }
    }

    // Exact treewidth when within the ceiling and budget.
    {
        Budget b;
        b.vertex_ceiling = opt.exact_ceiling;
        b.max_steps = opt.max_steps;
        b.time_ms = opt.budget_ms;
        try {
            auto [tw, td] = exact_treewidth(p.product, b);
            row.exact = BoundValue{tw, Provenance::exact};
        } catch (const resource_error& e) {
            if (!row.note.empty())
                row.note += "; ";
            row.note += std::string("exact: ") + e.what();
        }
    }

    const int lo = row.best_lower();
    const int hi = row.best_upper();
    if (row.exact && (row.exact->value < row.lower_formula.value || hi < row.exact->value))
        throw std::logic_error("bounds row violates lower <= exact <= upper for " +
                               row.instance);
    if (lo > hi)
        throw std::logic_error("bounds row violates lower <= upper for " + row.instance);
    return row;
}

} // namespace prodtw
