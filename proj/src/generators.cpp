#include "prodtw/generators.hpp"

#include <stdexcept>
#include <string>

#include "prodtw/product.hpp"
#include "prodtw/rng.hpp"

namespace prodtw {

namespace {

void require_positive(int n) {
    if (n < 1)
        throw std::invalid_argument("family size must be >= 1, got " + std::to_string(n));
}

} // namespace

Graph path(int n) {
    require_positive(n);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

Graph cycle(int n) {
    require_positive(n);
    if (n <= 2)
        return path(n);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(edges));
}

Graph complete(int n) {
    require_positive(n);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

Graph path_power(int n, int k) {
    require_positive(n);
    if (k < 1 || k >= n)
        throw std::invalid_argument("path_power requires 1 <= k < n, got n=" + std::to_string(n) +
                                    " k=" + std::to_string(k));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n && j - i <= k; ++j)
            edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

Graph grid(int n) {
    require_positive(n);
    if (n == 1)
        return path(1);
    return cartesian_product(path(n), path(n)).product;
}

Graph random_ktree(int n, int k, std::uint64_t seed) {
    require_positive(n);
    if (k < 1 || k >= n)
        throw std::invalid_argument("random_ktree requires 1 <= k < n, got n=" +
                                    std::to_string(n) + " k=" + std::to_string(k));
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            edges.emplace_back(i, j);
    // all k-subsets of the initial (k+1)-clique
    std::vector<std::vector<int>> cliques;
    for (int skip = 0; skip <= k; ++skip) {
        std::vector<int> c;
        for (int i = 0; i <= k; ++i)
            if (i != skip)
                c.push_back(i);
        cliques.push_back(std::move(c));
    }
    for (int v = k + 1; v < n; ++v) {
        std::vector<int> chosen = cliques[rng.below(static_cast<int>(cliques.size()))];
        for (int u : chosen)
            edges.emplace_back(u, v);
        for (int drop = 0; drop < k; ++drop) {
            std::vector<int> c;
            for (int i = 0; i < k; ++i)
                if (i != drop)
                    c.push_back(chosen[i]);
            c.push_back(v);
            cliques.push_back(std::move(c));
        }
    }
    return Graph(n, std::move(edges));
}

} // namespace prodtw
