#include "prodtw/product_bramble.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "prodtw/connectivity.hpp"
#include "prodtw/rng.hpp"

namespace prodtw {

namespace {

void require_preconditions(const ProductGraph& p, int k) {
    if (k < 1)
        throw precondition_error("k must be >= 1");
    const int need = 2 * k - 1;
    if (p.g_size() < need)
        throw precondition_error("factor G has " + std::to_string(p.g_size()) +
                                 " vertices, needs at least 2k-1 = " + std::to_string(need));
    if (p.h_size() < need)
        throw precondition_error("factor H has " + std::to_string(p.h_size()) +
                                 " vertices, needs at least 2k-1 = " + std::to_string(need));
    if (!is_k_connected(p.g, k))
        throw precondition_error("factor G is not " + std::to_string(k) + "-connected");
    if (!is_k_connected(p.h, k))
        throw precondition_error("factor H is not " + std::to_string(k) + "-connected");
}

void check_distinct_sorted(const std::vector<int>& ids, int limit, const char* what) {
    for (size_t i = 0; i < ids.size(); ++i) {
        if (ids[i] < 0 || ids[i] >= limit)
            throw spec_error(std::string(what) + ": vertex out of range");
        if (i > 0 && ids[i] <= ids[i - 1])
            throw spec_error(std::string(what) + ": ids must be strictly ascending");
    }
}

// Validates everything about the spec that does not need connectivity checks:
// sizes, membership, per-copy budgets on the union of deletions.
void validate_spec(const ProductGraph& p, const ElementSpec& spec) {
    const int k = spec.k;
    if (k < 1)
        throw spec_error("spec k must be >= 1");
    const size_t need = static_cast<size_t>(2 * k - 1);
    if (spec.s.size() != need)
        throw spec_error("|S| must be 2k-1 = " + std::to_string(need) + ", got " +
                         std::to_string(spec.s.size()));
    if (spec.t.size() != need)
        throw spec_error("|T| must be 2k-1 = " + std::to_string(need) + ", got " +
                         std::to_string(spec.t.size()));
    check_distinct_sorted(spec.s, p.g_size(), "S");
    check_distinct_sorted(spec.t, p.h_size(), "T");

    for (const auto& [v, dels] : spec.h_copy_deletions) {
        if (!std::binary_search(spec.s.begin(), spec.s.end(), v))
            throw spec_error("deletion copy H_" + std::to_string(v) + " not in S");
        for (int id : dels)
            if (id < 0 || id >= p.product.vertex_count() || p.coords(id).first != v)
                throw spec_error("deletion " + std::to_string(id) + " not inside H_" +
                                 std::to_string(v));
    }
    for (const auto& [w, dels] : spec.g_copy_deletions) {
        if (!std::binary_search(spec.t.begin(), spec.t.end(), w))
            throw spec_error("deletion copy G_" + std::to_string(w) + " not in T");
        for (int id : dels)
            if (id < 0 || id >= p.product.vertex_count() || p.coords(id).second != w)
                throw spec_error("deletion " + std::to_string(id) + " not inside G_" +
                                 std::to_string(w));
    }

    const std::vector<int> deleted = spec.all_deletions();
    for (int v : spec.s) {
        int count = 0;
        for (int id : deleted)
            count += p.coords(id).first == v;
        if (count > k - 1)
            throw spec_error("deletion budget exceeded in H_" + std::to_string(v) + ": " +
                             std::to_string(count) + " > k-1 = " + std::to_string(k - 1));
    }
    for (int w : spec.t) {
        int count = 0;
        for (int id : deleted)
            count += p.coords(id).second == w;
        if (count > k - 1)
            throw spec_error("deletion budget exceeded in G_" + std::to_string(w) + ": " +
                             std::to_string(count) + " > k-1 = " + std::to_string(k - 1));
    }
}

std::vector<int> element_vertices(const ProductGraph& p, const ElementSpec& spec) {
    std::vector<char> in_x(p.product.vertex_count(), 0);
    for (int v : spec.s)
        for (int w = 0; w < p.h_size(); ++w)
            in_x[p.flat(v, w)] = 1;
    for (int w : spec.t)
        for (int v = 0; v < p.g_size(); ++v)
            in_x[p.flat(v, w)] = 1;
    for (int id : spec.all_deletions())
        in_x[id] = 0;
    std::vector<int> x;
    for (int id = 0; id < p.product.vertex_count(); ++id)
        if (in_x[id])
            x.push_back(id);
    return x;
}

} // namespace

std::vector<int> ElementSpec::all_deletions() const {
    std::set<int> ids;
    for (const auto& [v, dels] : h_copy_deletions)
        ids.insert(dels.begin(), dels.end());
    for (const auto& [w, dels] : g_copy_deletions)
        ids.insert(dels.begin(), dels.end());
    return {ids.begin(), ids.end()};
}

TheoremBound theorem_bound(int k, int n) {
    if (k < 1 || n < 1)
        throw std::invalid_argument("theorem_bound requires k >= 1 and n >= 1");
    return {k * (n - 2 * k + 2) - 1, n <= 2 * k - 2};
}

std::vector<int> make_element(const ProductGraph& p, const ElementSpec& spec) {
    validate_spec(p, spec);
    require_preconditions(p, spec.k);
    std::vector<int> x = element_vertices(p, spec);
    if (!is_connected_subset(p.product, x))
        throw std::logic_error("make_element produced a disconnected element");
    return x;
}

QGraphReport q_graph_check(const ProductGraph& p, const ElementSpec& spec,
                           const std::vector<int>& x) {
    const int m = static_cast<int>(spec.s.size());
    std::vector<char> in_x(p.product.vertex_count(), 0);
    for (int id : x)
        in_x[id] = 1;
    // Q nodes: 0..m-1 are S, m..2m-1 are T.
    std::vector<std::vector<int>> adj(2 * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (in_x[p.flat(spec.s[i], spec.t[j])]) {
                adj[i].push_back(m + j);
                adj[m + j].push_back(i);
            }
    QGraphReport report;
    report.min_degree = static_cast<int>(adj[0].size());
    for (const auto& nb : adj)
        report.min_degree = std::min(report.min_degree, static_cast<int>(nb.size()));
    std::vector<char> seen(2 * m, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 0;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        ++reached;
        for (int w : adj[u])
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    report.connected = reached == 2 * m;
    return report;
}

int touching_certificate(const ProductGraph& p, const ElementSpec& a, const ElementSpec& b) {
    std::vector<int> xa = make_element(p, a);
    std::vector<int> xb = make_element(p, b);
    std::vector<char> in_a(p.product.vertex_count(), 0), in_b(p.product.vertex_count(), 0);
    for (int id : xa)
        in_a[id] = 1;
    for (int id : xb)
        in_b[id] = 1;
    int best = -1;
    for (int v : a.s)
        for (int w : b.t) {
            const int id = p.flat(v, w);
            if (in_a[id] && in_b[id] && (best < 0 || id < best))
                best = id;
        }
    if (best < 0)
        throw std::logic_error("touching certificate missing: counting invariant violated");
    return best;
}

RefutationOutcome refute_hitting_set(const ProductGraph& p, int k, const std::vector<int>& j) {
    require_preconditions(p, k);
    std::vector<char> in_j(p.product.vertex_count(), 0);
    for (int id : j) {
        if (id < 0 || id >= p.product.vertex_count())
            throw std::out_of_range("refute_hitting_set: J vertex out of range");
        in_j[id] = 1;
    }
    RefutationOutcome outcome;
    outcome.k = k;
    outcome.n = std::min(p.g_size(), p.h_size());
    outcome.g_size = p.g_size();
    outcome.h_size = p.h_size();
    for (int id = 0; id < p.product.vertex_count(); ++id)
        if (in_j[id])
            outcome.j.push_back(id);

    std::vector<int> row_hits(p.g_size(), 0), col_hits(p.h_size(), 0);
    for (int id : outcome.j) {
        auto [v, w] = p.coords(id);
        ++row_hits[v];
        ++col_hits[w];
    }
    std::vector<int> s0, t0;
    for (int v = 0; v < p.g_size(); ++v)
        if (row_hits[v] <= k - 1)
            s0.push_back(v);
    for (int w = 0; w < p.h_size(); ++w)
        if (col_hits[w] <= k - 1)
            t0.push_back(w);
    outcome.s0_size = static_cast<int>(s0.size());
    outcome.t0_size = static_cast<int>(t0.size());

    const int need = 2 * k - 1;
    if (outcome.s0_size <= 2 * k - 2 || outcome.t0_size <= 2 * k - 2) {
        SizeCertificate cert;
        cert.axis = outcome.s0_size <= 2 * k - 2 ? CopyAxis::rows : CopyAxis::columns;
        if (cert.axis == CopyAxis::rows) {
            for (int v = 0; v < p.g_size(); ++v)
                if (row_hits[v] >= k)
                    cert.copies.push_back(v);
        } else {
            for (int w = 0; w < p.h_size(); ++w)
                if (col_hits[w] >= k)
                    cert.copies.push_back(w);
        }
        cert.implied_bound = k * static_cast<int>(cert.copies.size());
        outcome.result = std::move(cert);
        return outcome;
    }

    AvoidingElement avoiding;
    avoiding.spec.k = k;
    avoiding.spec.s.assign(s0.begin(), s0.begin() + need);
    avoiding.spec.t.assign(t0.begin(), t0.begin() + need);
    for (int v : avoiding.spec.s) {
        std::vector<int> dels;
        for (int w = 0; w < p.h_size(); ++w)
            if (in_j[p.flat(v, w)])
                dels.push_back(p.flat(v, w));
        if (!dels.empty())
            avoiding.spec.h_copy_deletions[v] = std::move(dels);
    }
    for (int w : avoiding.spec.t) {
        std::vector<int> dels;
        for (int v = 0; v < p.g_size(); ++v)
            if (in_j[p.flat(v, w)])
                dels.push_back(p.flat(v, w));
        if (!dels.empty())
            avoiding.spec.g_copy_deletions[w] = std::move(dels);
    }
    avoiding.vertices = make_element(p, avoiding.spec);
    for (int id : avoiding.vertices)
        if (in_j[id])
            throw std::logic_error("refuter element intersects J");
    outcome.result = std::move(avoiding);
    return outcome;
}

std::vector<std::pair<ElementSpec, std::vector<int>>> sample_elements(const ProductGraph& p,
                                                                      int k, int count,
                                                                      DeletionPolicy policy,
                                                                      std::uint64_t seed) {
    require_preconditions(p, k);
    if (count < 0)
        throw std::invalid_argument("sample_elements: negative count");
    Rng rng(seed);
    const int m = 2 * k - 1;

    auto sample_distinct = [&rng](int limit, int how_many) {
        std::vector<int> pool(limit);
        for (int i = 0; i < limit; ++i)
            pool[i] = i;
        for (int i = 0; i < how_many; ++i) {
            int pick = i + rng.below(limit - i);
            std::swap(pool[i], pool[pick]);
        }
        std::vector<int> chosen(pool.begin(), pool.begin() + how_many);
        std::sort(chosen.begin(), chosen.end());
        return chosen;
    };

    std::vector<std::pair<ElementSpec, std::vector<int>>> out;
    out.reserve(count);
    for (int c = 0; c < count; ++c) {
        ElementSpec spec;
        spec.k = k;
        spec.s = sample_distinct(p.g_size(), m);
        spec.t = sample_distinct(p.h_size(), m);

        if (policy == DeletionPolicy::adversarial && k > 1) {
            // k-1 cyclic shifts of the core diagonal: every copy loses exactly
            // k-1 vertices, all inside S x T.
            for (int i = 0; i < m; ++i) {
                std::vector<int> dels;
                for (int d = 0; d < k - 1; ++d)
                    dels.push_back(p.flat(spec.s[i], spec.t[(i + d) % m]));
                std::sort(dels.begin(), dels.end());
                spec.h_copy_deletions[spec.s[i]] = std::move(dels);
            }
        } else if (policy == DeletionPolicy::random_draws && k > 1) {
            std::vector<int> row_del(p.g_size(), 0), col_del(p.h_size(), 0);
            std::vector<char> in_s(p.g_size(), 0), in_t(p.h_size(), 0);
            for (int v : spec.s)
                in_s[v] = 1;
            for (int w : spec.t)
                in_t[w] = 1;
            // Random draws inside the union, accepted only while every
            // per-copy budget stays at most k-1.
            std::set<int> chosen;
            const int attempts = 4 * m * (k - 1);
            for (int a = 0; a < attempts; ++a) {
                const int id = (a % 2 == 0)
                                   ? p.flat(spec.s[rng.below(m)], rng.below(p.h_size()))
                                   : p.flat(rng.below(p.g_size()), spec.t[rng.below(m)]);
                auto [rv, rw] = p.coords(id);
                if (chosen.count(id))
                    continue;
                if (in_s[rv] && row_del[rv] >= k - 1)
                    continue;
                if (in_t[rw] && col_del[rw] >= k - 1)
                    continue;
                chosen.insert(id);
                if (in_s[rv])
                    ++row_del[rv];
                if (in_t[rw])
                    ++col_del[rw];
            }
            for (int id : chosen) {
                auto [v, w] = p.coords(id);
                if (in_s[v])
                    spec.h_copy_deletions[v].push_back(id);
                else
                    spec.g_copy_deletions[w].push_back(id);
            }
        }
        std::vector<int> x = make_element(p, spec);
        out.emplace_back(std::move(spec), std::move(x));
    }
    return out;
}

} // namespace prodtw
