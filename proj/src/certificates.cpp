#include "prodtw/certificates.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "prodtw/connectivity.hpp"
#include "prodtw/hitting_set.hpp"

namespace prodtw {

namespace {

std::vector<int> parse_id_list(std::istringstream& ss, int count, long long limit, int line_no) {
    std::vector<int> ids;
    long long v;
    while (ss >> v) {
        if (v < 1 || v > limit)
            throw parse_error(line_no, "id " + std::to_string(v) + " out of range [1," +
                                           std::to_string(limit) + "]");
        ids.push_back(static_cast<int>(v) - 1);
    }
    if (count >= 0 && static_cast<int>(ids.size()) != count)
        throw parse_error(line_no, "expected " + std::to_string(count) + " ids, found " +
                                       std::to_string(ids.size()));
    return ids;
}

void write_ids(std::ostream& out, const std::vector<int>& ids) {
    for (int id : ids)
        out << ' ' << id + 1;
    out << "\n";
}

} // namespace

void write_bramble_certificate(std::ostream& out, const Bramble& b) {
    out << "bramble " << b.elements.size() << ' ' << b.host.vertex_count() << "\n";
    for (const auto& el : b.elements) {
        bool first = true;
        for (int v : el) {
            out << (first ? "" : " ") << v + 1;
            first = false;
        }
        out << "\n";
    }
}

BrambleCertificate read_bramble_certificate(std::istream& in) {
    std::string line;
    int line_no = 0;
    long long element_count = -1, host_n = -1;
    BrambleCertificate cert;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c')
            continue;
        std::istringstream ss(line);
        if (element_count < 0) {
            std::string tok;
            if (!(ss >> tok >> element_count >> host_n) || tok != "bramble" ||
                element_count < 1 || host_n < 1)
                throw parse_error(line_no, "expected header 'bramble <elements> <host_n>'");
            cert.host_n = static_cast<int>(host_n);
            continue;
        }
        std::vector<int> el = parse_id_list(ss, -1, host_n, line_no);
        if (el.empty())
            throw parse_error(line_no, "empty element line");
        for (size_t i = 1; i < el.size(); ++i)
            if (el[i] <= el[i - 1])
                throw parse_error(line_no, "element ids must be strictly increasing");
        cert.elements.push_back(std::move(el));
    }
    if (element_count < 0)
        throw parse_error(line_no, "missing 'bramble' header");
    if (static_cast<long long>(cert.elements.size()) != element_count)
        throw parse_error(line_no,
                          "element count mismatch: header says " + std::to_string(element_count) +
                              ", found " + std::to_string(cert.elements.size()));
    return cert;
}

VerifyReport verify_bramble_certificate(const Graph& host, const BrambleCertificate& cert,
                                        std::optional<int> claimed_order,
                                        const std::vector<int>& disjoint_indices,
                                        const Budget& budget) {
    VerifyReport report;
    if (cert.host_n != host.vertex_count()) {
        report.violations.push_back("certificate host size " + std::to_string(cert.host_n) +
                                    " does not match graph (" +
                                    std::to_string(host.vertex_count()) + ")");
        return report;
    }
    Bramble b;
    try {
        b = make_bramble(host, cert.elements);
    } catch (const std::exception& e) {
        report.violations.push_back(e.what());
        return report;
    }
    ValidationReport validity = validate_bramble(b);
    for (const auto& v : validity.violations)
        report.violations.push_back(v);
    if (!report.ok())
        return report;

    if (!disjoint_indices.empty()) {
        for (int idx : disjoint_indices)
            if (idx < 0 || idx >= static_cast<int>(cert.elements.size())) {
                report.violations.push_back("disjoint witness index " + std::to_string(idx) +
                                            " out of range");
                return report;
            }
        for (size_t a = 0; a < disjoint_indices.size(); ++a)
            for (size_t c = a + 1; c < disjoint_indices.size(); ++c) {
                const auto& x = cert.elements[disjoint_indices[a]];
                const auto& y = cert.elements[disjoint_indices[c]];
                std::vector<int> common;
                std::set_intersection(x.begin(), x.end(), y.begin(), y.end(),
                                      std::back_inserter(common));
                if (!common.empty())
                    report.violations.push_back(
                        "witness elements " + std::to_string(disjoint_indices[a]) + " and " +
                        std::to_string(disjoint_indices[c]) + " are not disjoint");
            }
        if (!report.ok())
            return report;
        const int proven = static_cast<int>(disjoint_indices.size());
        if (claimed_order && proven < *claimed_order) {
            report.violations.push_back("disjoint witness proves order >= " +
                                        std::to_string(proven) + ", claim was " +
                                        std::to_string(*claimed_order));
            return report;
        }
        report.summary = "valid bramble; " + std::to_string(proven) +
                         " pairwise disjoint elements prove order >= " + std::to_string(proven);
        return report;
    }

    if (claimed_order) {
        HittingSet hs = bramble_order(b, budget);
        if (!hs.certified_minimum)
            throw resource_error("hitting-set solver budget exhausted while verifying claim");
        const int order = static_cast<int>(hs.vertices.size());
        if (order < *claimed_order) {
            report.violations.push_back("exact order is " + std::to_string(order) +
                                        ", claim was >= " + std::to_string(*claimed_order));
            return report;
        }
        report.summary = "valid bramble of exact order " + std::to_string(order);
        return report;
    }
    report.summary = "valid bramble";
    return report;
}

void write_refutation(std::ostream& out, const RefutationOutcome& outcome) {
    out << "refutation " << (outcome.avoided() ? "avoiding" : "size_certificate") << "\n";
    out << "k " << outcome.k << "\n";
    out << "n " << outcome.n << "\n";
    out << "g " << outcome.g_size << "\n";
    out << "h " << outcome.h_size << "\n";
    out << "j " << outcome.j.size();
    write_ids(out, outcome.j);
    out << "s0 " << outcome.s0_size << "\n";
    out << "t0 " << outcome.t0_size << "\n";
    if (outcome.avoided()) {
        const auto& a = std::get<AvoidingElement>(outcome.result);
        out << "s";
        write_ids(out, a.spec.s);
        out << "t";
        write_ids(out, a.spec.t);
        out << "element " << a.vertices.size();
        write_ids(out, a.vertices);
    } else {
        const auto& c = std::get<SizeCertificate>(outcome.result);
        out << "axis " << (c.axis == CopyAxis::rows ? "rows" : "columns") << "\n";
        out << "copies " << c.copies.size();
        write_ids(out, c.copies);
        out << "implied_bound " << c.implied_bound << "\n";
    }
    out << "end\n";
}

RefutationOutcome read_refutation(std::istream& in) {
    std::string line;
    int line_no = 0;
    RefutationOutcome outcome;
    bool have_header = false, avoiding = false, have_end = false;
    AvoidingElement avoid;
    SizeCertificate cert;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c')
            continue;
        std::istringstream ss(line);
        std::string key;
        ss >> key;
        if (!have_header) {
            std::string kind;
            if (key != "refutation" || !(ss >> kind) ||
                (kind != "avoiding" && kind != "size_certificate"))
                throw parse_error(line_no, "expected 'refutation avoiding|size_certificate'");
            avoiding = kind == "avoiding";
            have_header = true;
            continue;
        }
        if (key == "k")
            ss >> outcome.k;
        else if (key == "n")
            ss >> outcome.n;
        else if (key == "g")
            ss >> outcome.g_size;
        else if (key == "h")
            ss >> outcome.h_size;
        else if (key == "s0")
            ss >> outcome.s0_size;
        else if (key == "t0")
            ss >> outcome.t0_size;
        else if (key == "j") {
            int count;
            if (!(ss >> count))
                throw parse_error(line_no, "bad j line");
            outcome.j = parse_id_list(ss, count,
                                      static_cast<long long>(outcome.g_size) * outcome.h_size,
                                      line_no);
        } else if (key == "s")
            avoid.spec.s = parse_id_list(ss, -1, outcome.g_size, line_no);
        else if (key == "t")
            avoid.spec.t = parse_id_list(ss, -1, outcome.h_size, line_no);
        else if (key == "element") {
            int count;
            if (!(ss >> count))
                throw parse_error(line_no, "bad element line");
            avoid.vertices = parse_id_list(
                ss, count, static_cast<long long>(outcome.g_size) * outcome.h_size, line_no);
        } else if (key == "axis") {
            std::string axis;
            ss >> axis;
            if (axis == "rows")
                cert.axis = CopyAxis::rows;
            else if (axis == "columns")
                cert.axis = CopyAxis::columns;
            else
                throw parse_error(line_no, "axis must be rows or columns");
        } else if (key == "copies") {
            int count;
            if (!(ss >> count))
                throw parse_error(line_no, "bad copies line");
            const long long limit = cert.axis == CopyAxis::rows ? outcome.g_size : outcome.h_size;
            cert.copies = parse_id_list(ss, count, limit, line_no);
        } else if (key == "implied_bound")
            ss >> cert.implied_bound;
        else if (key == "end") {
            have_end = true;
            break;
        } else
            throw parse_error(line_no, "unknown key '" + key + "'");
        if (ss.fail())
            throw parse_error(line_no, "malformed value for key '" + key + "'");
    }
    if (!have_header || !have_end)
        throw parse_error(line_no, "transcript truncated");
    if (outcome.k < 1 || outcome.g_size < 1 || outcome.h_size < 1)
        throw parse_error(line_no, "missing k/g/h fields");
    if (avoiding) {
        avoid.spec.k = outcome.k;
        // deletions are implied: everything of J inside the chosen copies
        outcome.result = std::move(avoid);
    } else {
        outcome.result = std::move(cert);
    }
    return outcome;
}

ProductGraph reconstruct_product(const Graph& flat, int g_size, int h_size) {
    if (g_size < 1 || h_size < 1 ||
        flat.vertex_count() != g_size * h_size)
        throw std::invalid_argument("product dimensions do not match vertex count");
    std::vector<std::pair<int, int>> g_edges, h_edges;
    for (int v = 0; v < g_size; ++v)
        for (int v2 = v + 1; v2 < g_size; ++v2)
            if (flat.has_edge(v * h_size, v2 * h_size))
                g_edges.emplace_back(v, v2);
    for (int w = 0; w < h_size; ++w)
        for (int w2 = w + 1; w2 < h_size; ++w2)
            if (flat.has_edge(w, w2))
                h_edges.emplace_back(w, w2);
    ProductGraph p = cartesian_product(Graph(g_size, std::move(g_edges)),
                                       Graph(h_size, std::move(h_edges)));
    if (p.product.edges() != flat.edges())
        throw std::invalid_argument(
            "graph is not the cartesian product of its copy-0 factors in this layout");
    return p;
}

VerifyReport verify_refutation(const ProductGraph& p, const RefutationOutcome& outcome) {
    VerifyReport report;
    auto fail = [&](const std::string& msg) { report.violations.push_back(msg); };

    if (outcome.g_size != p.g_size() || outcome.h_size != p.h_size()) {
        fail("transcript dimensions do not match product");
        return report;
    }
    const int k = outcome.k;
    if (outcome.n != std::min(p.g_size(), p.h_size()))
        fail("transcript n is not min(|V(G)|,|V(H)|)");
    try {
        if (!is_k_connected(p.g, k))
            fail("factor G is not k-connected");
        if (!is_k_connected(p.h, k))
            fail("factor H is not k-connected");
    } catch (const std::exception& e) {
        fail(e.what());
    }
    if (p.g_size() < 2 * k - 1 || p.h_size() < 2 * k - 1)
        fail("factors smaller than 2k-1");
    if (!report.ok())
        return report;

    std::vector<char> in_j(p.product.vertex_count(), 0);
    for (int id : outcome.j)
        in_j[id] = 1;
    std::vector<int> row_hits(p.g_size(), 0), col_hits(p.h_size(), 0);
    for (int id : outcome.j) {
        auto [v, w] = p.coords(id);
        ++row_hits[v];
        ++col_hits[w];
    }
    int s0 = 0, t0 = 0;
    for (int v = 0; v < p.g_size(); ++v)
        s0 += row_hits[v] <= k - 1;
    for (int w = 0; w < p.h_size(); ++w)
        t0 += col_hits[w] <= k - 1;
    if (s0 != outcome.s0_size)
        fail("recomputed |S0| = " + std::to_string(s0) + ", transcript says " +
             std::to_string(outcome.s0_size));
    if (t0 != outcome.t0_size)
        fail("recomputed |T0| = " + std::to_string(t0) + ", transcript says " +
             std::to_string(outcome.t0_size));

    if (outcome.avoided()) {
        const auto& a = std::get<AvoidingElement>(outcome.result);
        if (static_cast<int>(a.spec.s.size()) != 2 * k - 1)
            fail("|S| is not 2k-1");
        if (static_cast<int>(a.spec.t.size()) != 2 * k - 1)
            fail("|T| is not 2k-1");
        for (int v : a.spec.s)
            if (v < 0 || v >= p.g_size() || row_hits[v] > k - 1)
                fail("S contains " + std::to_string(v) + " outside S0");
        for (int w : a.spec.t)
            if (w < 0 || w >= p.h_size() || col_hits[w] > k - 1)
                fail("T contains " + std::to_string(w) + " outside T0");
        if (!report.ok())
            return report;
        // expected element: the copy union minus J
        std::vector<char> expect(p.product.vertex_count(), 0);
        for (int v : a.spec.s)
            for (int w = 0; w < p.h_size(); ++w)
                expect[p.flat(v, w)] = 1;
        for (int w : a.spec.t)
            for (int v = 0; v < p.g_size(); ++v)
                expect[p.flat(v, w)] = 1;
        for (int id = 0; id < p.product.vertex_count(); ++id)
            if (in_j[id])
                expect[id] = 0;
        std::vector<int> expected_vertices;
        for (int id = 0; id < p.product.vertex_count(); ++id)
            if (expect[id])
                expected_vertices.push_back(id);
        if (expected_vertices != a.vertices) {
            fail("element vertices are not the copy union minus J");
            return report;
        }
        for (int id : a.vertices)
            if (in_j[id])
                fail("element intersects J at flat id " + std::to_string(id));
        if (!is_connected_subset(p.product, a.vertices))
            fail("element is not connected");
        if (report.ok())
            report.summary = "valid avoiding element: J (size " +
                             std::to_string(outcome.j.size()) + ") hits no bramble element";
        return report;
    }

    const auto& c = std::get<SizeCertificate>(outcome.result);
    const auto& hits = c.axis == CopyAxis::rows ? row_hits : col_hits;
    std::set<int> seen;
    for (int copy : c.copies) {
        if (!seen.insert(copy).second)
            fail("duplicate copy id " + std::to_string(copy));
        else if (hits[copy] < k)
            fail("copy " + std::to_string(copy) + " has only " + std::to_string(hits[copy]) +
                 " hits, needs >= k");
    }
    const int min_copies = outcome.n - (2 * k - 2);
    if (static_cast<int>(c.copies.size()) < min_copies)
        fail("certificate lists " + std::to_string(c.copies.size()) +
             " copies, needs >= n-(2k-2) = " + std::to_string(min_copies));
    if (c.implied_bound != k * static_cast<int>(c.copies.size()))
        fail("implied_bound is not k * copies");
    if (c.implied_bound > static_cast<int>(outcome.j.size()))
        fail("implied_bound exceeds |J|");
    if (report.ok())
        report.summary = "valid size certificate: |J| >= " + std::to_string(c.implied_bound);
    return report;
}

} // namespace prodtw
