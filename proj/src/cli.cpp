#include "prodtw/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "prodtw/bounds.hpp"
#include "prodtw/certificates.hpp"
#include "prodtw/connectivity.hpp"
#include "prodtw/decomposition.hpp"
#include "prodtw/generators.hpp"
#include "prodtw/pace_io.hpp"
#include "prodtw/product_bramble.hpp"
#include "prodtw/rng.hpp"

namespace prodtw {

namespace {

using nlohmann::json;

// ---- family specs ----------------------------------------------------------

struct FamilySpec {
    std::string family; // path|cycle|complete|pathpower|grid|ktree|file
    std::map<std::string, long long> params;
    std::string file;
};

const std::vector<std::string> kFamilies = {"path",      "cycle", "complete",
                                            "pathpower", "grid",  "ktree", "file"};

bool is_family_token(const std::string& tok) {
    auto colon = tok.find(':');
    if (colon == std::string::npos)
        return false;
    std::string name = tok.substr(0, colon);
    return std::find(kFamilies.begin(), kFamilies.end(), name) != kFamilies.end();
}

FamilySpec parse_family(const std::string& text) {
    FamilySpec spec;
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("family spec '" + text + "' missing ':'");
    spec.family = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);
    if (spec.family == "file") {
        spec.file = rest;
        if (spec.file.empty())
            throw std::invalid_argument("file: spec needs a path");
        return spec;
    }
    if (std::find(kFamilies.begin(), kFamilies.end(), spec.family) == kFamilies.end())
        throw std::invalid_argument("unknown family '" + spec.family + "'");
    std::istringstream ss(rest);
    std::string token;
    while (std::getline(ss, token, ',')) {
        auto eq = token.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("bad parameter '" + token + "' (expected key=value)");
        spec.params[token.substr(0, eq)] = std::stoll(token.substr(eq + 1));
    }
    return spec;
}

long long param(const FamilySpec& s, const std::string& key, std::optional<long long> def = {}) {
    auto it = s.params.find(key);
    if (it != s.params.end())
        return it->second;
    if (def)
        return *def;
    throw std::invalid_argument("family '" + s.family + "' needs parameter " + key);
}

Graph build_family(const FamilySpec& s) {
    if (s.family == "path")
        return path(static_cast<int>(param(s, "n")));
    if (s.family == "cycle")
        return cycle(static_cast<int>(param(s, "n")));
    if (s.family == "complete")
        return complete(static_cast<int>(param(s, "n")));
    if (s.family == "pathpower")
        return path_power(static_cast<int>(param(s, "n")), static_cast<int>(param(s, "k")));
    if (s.family == "grid")
        return grid(static_cast<int>(param(s, "n")));
    if (s.family == "ktree")
        return random_ktree(static_cast<int>(param(s, "n")), static_cast<int>(param(s, "k")),
                            static_cast<std::uint64_t>(param(s, "seed", 1)));
    if (s.family == "file")
        return read_gr_file(s.file);
    throw std::invalid_argument("unknown family '" + s.family + "'");
}

std::string family_name(const FamilySpec& s) {
    auto num = [&](const std::string& key) { return std::to_string(param(s, key)); };
    if (s.family == "path")
        return "P" + num("n");
    if (s.family == "cycle")
        return "C" + num("n");
    if (s.family == "complete")
        return "K" + num("n");
    if (s.family == "pathpower")
        return "P" + num("n") + "^" + num("k");
    if (s.family == "grid")
        return "Grid" + num("n");
    if (s.family == "ktree")
        return "KT(" + num("n") + "," + num("k") + ",s" +
               std::to_string(param(s, "seed", 1)) + ")";
    if (s.family == "file") {
        auto slash = s.file.find_last_of('/');
        return slash == std::string::npos ? s.file : s.file.substr(slash + 1);
    }
    return s.family;
}

// `product:<famA>,<famB>` where each factor is a family spec; a comma starts a
// new factor only when followed by a family name and ':'.
std::pair<FamilySpec, FamilySpec> parse_product(const std::string& text) {
    const std::string prefix = "product:";
    if (text.rfind(prefix, 0) != 0)
        throw std::invalid_argument("expected 'product:<factor>,<factor>'");
    std::string rest = text.substr(prefix.size());
    std::vector<std::string> tokens;
    std::istringstream ss(rest);
    std::string token;
    while (std::getline(ss, token, ','))
        tokens.push_back(token);
    std::vector<std::string> parts;
    for (const auto& tok : tokens) {
        if (is_family_token(tok) || parts.empty())
            parts.push_back(tok);
        else
            parts.back() += "," + tok;
    }
    if (parts.size() != 2)
        throw std::invalid_argument("product spec needs exactly two factors, got " +
                                    std::to_string(parts.size()));
    return {parse_family(parts[0]), parse_family(parts[1])};
}

// ---- output helpers --------------------------------------------------------

std::string bound_text(const std::optional<BoundValue>& b) {
    if (!b)
        return "-";
    return std::to_string(b->value) + " (" + to_string(b->provenance) + ")";
}

json bound_json(const std::optional<BoundValue>& b) {
    if (!b)
        return nullptr;
    return json{{"value", b->value}, {"provenance", to_string(b->provenance)}};
}

json report_json(const BoundsReport& r) {
    return json{{"instance", r.instance},
                {"n", r.n},
                {"k", r.k},
                {"kappa_g", r.kappa_g},
                {"kappa_h", r.kappa_h},
                {"vacuous", r.vacuous},
                {"lower_formula_raw", r.lower_formula_raw},
                {"lower_formula", bound_json(r.lower_formula)},
                {"lower_certified", bound_json(r.lower_certified)},
                {"upper_ordering", bound_json(r.upper_ordering)},
                {"upper_heuristic", bound_json(r.upper_heuristic)},
                {"upper_lift", bound_json(r.upper_lift)},
                {"exact", bound_json(r.exact)},
                {"note", r.note}};
}

void print_report_text(std::ostream& out, const BoundsReport& r) {
    out << "instance: " << r.instance << "\n";
    out << "n: " << r.n << "\n";
    out << "k: " << r.k << "\n";
    out << "kappa_g: " << r.kappa_g << "\n";
    out << "kappa_h: " << r.kappa_h << "\n";
    out << "lower_formula: " << bound_text(r.lower_formula)
        << (r.vacuous ? " [vacuous]" : "") << "\n";
    out << "lower_formula_raw: " << r.lower_formula_raw << "\n";
    out << "lower_certified: " << bound_text(r.lower_certified) << "\n";
    out << "upper_ordering: " << bound_text(r.upper_ordering) << "\n";
    out << "upper_heuristic: " << bound_text(r.upper_heuristic) << "\n";
    out << "upper_lift: " << bound_text(r.upper_lift) << "\n";
    out << "exact: " << bound_text(r.exact) << "\n";
    if (!r.note.empty())
        out << "note: " << r.note << "\n";
}

std::vector<int> parse_csv_ids(const std::string& text, int base) {
    std::vector<int> ids;
    if (text.empty())
        return ids;
    std::istringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ','))
        ids.push_back(std::stoi(token) - base);
    return ids;
}

// ---- subcommands -----------------------------------------------------------

int cmd_gen(const std::string& spec_text, const std::string& output, std::ostream& out,
            std::ostream& err) {
    Graph g;
    std::string comment = spec_text;
    try {
        if (spec_text.rfind("product:", 0) == 0) {
            auto [fa, fb] = parse_product(spec_text);
            g = cartesian_product(build_family(fa), build_family(fb)).product;
            comment = family_name(fa) + "x" + family_name(fb);
        } else {
            g = build_family(parse_family(spec_text));
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    if (output.empty()) {
        write_gr(out, g, comment);
    } else {
        write_gr_file(output, g, comment);
        out << "wrote " << output << " (" << g.vertex_count() << " vertices, " << g.edge_count()
            << " edges)\n";
    }
    return 0;
}

struct BoundsArgs {
    std::string product_spec;
    std::string g_spec, h_spec;
    int k = 0;
    std::uint64_t seed = 1;
    int budget_ms = 0;
    int exact_ceiling = 0;
    int battery = 200;
    std::string format = "text";
    std::string emit_certificate;
    std::string refute_j;
};

int cmd_bounds(const BoundsArgs& a, std::ostream& out, std::ostream& err) {
    ProductGraph p;
    std::string name;
    try {
        FamilySpec fg, fh;
        if (!a.product_spec.empty()) {
            std::tie(fg, fh) = parse_product(a.product_spec);
        } else if (!a.g_spec.empty() && !a.h_spec.empty()) {
            fg = parse_family(a.g_spec);
            fh = parse_family(a.h_spec);
        } else {
            err << "error: give either a product:<...> spec or --factor-g and --factor-h\n";
            return 2;
        }
        p = cartesian_product(build_family(fg), build_family(fh));
        name = family_name(fg) + "x" + family_name(fh);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    int k = a.k;
    try {
        if (k == 0)
            k = std::min(vertex_connectivity(p.g), vertex_connectivity(p.h));
        if (k < 1) {
            err << "error: factors are disconnected; supply --k >= 1 on a connected product\n";
            return 2;
        }

        BoundsOptions opt;
        opt.seed = a.seed;
        opt.budget_ms = a.budget_ms;
        opt.exact_ceiling = a.exact_ceiling;
        opt.battery = a.battery;
        BoundsReport report = compute_bounds(p, k, name, opt);

        if (a.format == "json")
            out << report_json(report).dump(2) << "\n";
        else
            print_report_text(out, report);

        if (!a.emit_certificate.empty() || !a.refute_j.empty()) {
            std::vector<int> j;
            if (!a.refute_j.empty()) {
                j = parse_csv_ids(a.refute_j, 1);
            } else {
                // canonical seeded J of size k(n-2k+2)-1
                TheoremBound tb = theorem_bound(k, std::min(p.g_size(), p.h_size()));
                const int target = std::max(0, tb.value);
                Rng rng(a.seed);
                std::vector<int> pool(p.product.vertex_count());
                for (int i = 0; i < p.product.vertex_count(); ++i)
                    pool[i] = i;
                for (int i = 0; i < target && i < p.product.vertex_count(); ++i) {
                    int pick = i + rng.below(p.product.vertex_count() - i);
                    std::swap(pool[i], pool[pick]);
                    j.push_back(pool[i]);
                }
            }
            RefutationOutcome outcome = refute_hitting_set(p, k, j);
            if (a.emit_certificate.empty()) {
                write_refutation(out, outcome);
            } else {
                std::ofstream file(a.emit_certificate);
                if (!file) {
                    err << "error: cannot write " << a.emit_certificate << "\n";
                    return 2;
                }
                write_refutation(file, outcome);
                out << "refutation transcript written to " << a.emit_certificate << "\n";
            }
        }
        return 0;
    } catch (const precondition_error& e) {
        err << "precondition error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

std::string first_token_of_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c')
            continue;
        std::istringstream ss(line);
        std::string tok;
        ss >> tok;
        return tok;
    }
    throw std::runtime_error(path + " is empty");
}

struct VerifyArgs {
    std::string certificate;
    std::string graph;
    int claim_order = -1;
    int claim_width = -1;
    std::string disjoint;
    int budget_ms = 0;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    try {
        const std::string kind = first_token_of_file(a.certificate);
        if (a.graph.empty()) {
            err << "error: --graph <file.gr> is required\n";
            return 2;
        }
        Graph host = read_gr_file(a.graph);
        std::ifstream cert_in(a.certificate);

        if (kind == "s") { // tree decomposition
            TreeDecomposition td = read_td(cert_in);
            ValidationReport report;
            try {
                report = validate(td, host);
            } catch (const structural_error& e) {
                err << "invalid: " << e.what() << "\n";
                return 1;
            }
            for (const auto& v : report.violations)
                out << "violation: " << v << "\n";
            if (!report.ok())
                return 1;
            const int w = width(td);
            if (a.claim_width >= 0 && w > a.claim_width) {
                out << "violation: width " << w << " exceeds claimed " << a.claim_width << "\n";
                return 1;
            }
            out << "valid tree decomposition, width " << w << "\n";
            return 0;
        }
        if (kind == "bramble") {
            BrambleCertificate cert = read_bramble_certificate(cert_in);
            std::optional<int> claim;
            if (a.claim_order >= 0)
                claim = a.claim_order;
            Budget budget;
            budget.time_ms = a.budget_ms;
            VerifyReport report = verify_bramble_certificate(
                host, cert, claim, parse_csv_ids(a.disjoint, 1), budget);
            for (const auto& v : report.violations)
                out << "violation: " << v << "\n";
            if (!report.ok())
                return 1;
            out << report.summary << "\n";
            return 0;
        }
        if (kind == "refutation") {
            RefutationOutcome outcome = read_refutation(cert_in);
            ProductGraph p = reconstruct_product(host, outcome.g_size, outcome.h_size);
            VerifyReport report = verify_refutation(p, outcome);
            for (const auto& v : report.violations)
                out << "violation: " << v << "\n";
            if (!report.ok())
                return 1;
            out << report.summary << "\n";
            return 0;
        }
        err << "error: unrecognized certificate kind '" << kind << "'\n";
        return 2;
    } catch (const resource_error& e) {
        err << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

struct TableArgs {
    std::vector<std::string> sweeps;
    std::uint64_t seed = 1;
    int budget_ms = 0;
    int exact_ceiling = 0;
    int battery = 100;
    std::string format = "text";
};

struct SweepRow {
    std::string label;
    bool failed = false;
    std::string error;
    BoundsReport report;
};

// `family:n=A..B[,k=K][,seed=S]`; each row is a self-product.
std::vector<SweepRow> run_sweep(const std::string& sweep, const TableArgs& args) {
    auto colon = sweep.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("sweep '" + sweep + "' missing ':'");
    const std::string family = sweep.substr(0, colon);
    std::istringstream ss(sweep.substr(colon + 1));
    std::string token;
    long long n_lo = -1, n_hi = -1, k_param = -1, seed = 1;
    while (std::getline(ss, token, ',')) {
        auto eq = token.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("bad sweep parameter '" + token + "'");
        const std::string key = token.substr(0, eq);
        std::string value = token.substr(eq + 1);
        if (key == "n") {
            auto dots = value.find("..");
            if (dots == std::string::npos) {
                n_lo = n_hi = std::stoll(value);
            } else {
                n_lo = std::stoll(value.substr(0, dots));
                n_hi = std::stoll(value.substr(dots + 2));
            }
        } else if (key == "k") {
            k_param = std::stoll(value);
        } else if (key == "seed") {
            seed = std::stoll(value);
        } else {
            throw std::invalid_argument("unknown sweep parameter '" + key + "'");
        }
    }
    if (n_lo < 1 || n_hi < n_lo)
        throw std::invalid_argument("sweep needs n=A..B");

    std::vector<SweepRow> rows;
    for (long long n = n_lo; n <= n_hi; ++n) {
        SweepRow row;
        try {
            Graph a, b;
            int k = 1;
            std::string name;
            if (family == "grid" || family == "path") {
                a = b = path(static_cast<int>(n));
                k = 1;
                name = "P" + std::to_string(n) + "xP" + std::to_string(n);
            } else if (family == "cycle") {
                a = b = cycle(static_cast<int>(n));
                k = k_param > 0 ? static_cast<int>(k_param) : 2;
                name = "C" + std::to_string(n) + "xC" + std::to_string(n);
            } else if (family == "pathpower") {
                if (k_param < 1)
                    throw std::invalid_argument("pathpower sweep needs k=");
                a = b = path_power(static_cast<int>(n), static_cast<int>(k_param));
                k = static_cast<int>(k_param);
                name = "P" + std::to_string(n) + "^" + std::to_string(k_param) + " squared";
            } else if (family == "complete") {
                a = b = complete(static_cast<int>(n));
                k = k_param > 0 ? static_cast<int>(k_param) : static_cast<int>(n) - 1;
                name = "K" + std::to_string(n) + "xK" + std::to_string(n);
            } else if (family == "ktree") {
                if (k_param < 1)
                    throw std::invalid_argument("ktree sweep needs k=");
                a = random_ktree(static_cast<int>(n), static_cast<int>(k_param),
                                 static_cast<std::uint64_t>(seed));
                b = random_ktree(static_cast<int>(n), static_cast<int>(k_param),
                                 static_cast<std::uint64_t>(seed) + 1000);
                k = static_cast<int>(k_param);
                name = "KT(" + std::to_string(n) + "," + std::to_string(k_param) + ") pair";
            } else {
                throw std::invalid_argument("unknown sweep family '" + family + "'");
            }
            row.label = name;
            BoundsOptions opt;
            opt.seed = args.seed;
            opt.budget_ms = args.budget_ms;
            opt.exact_ceiling = args.exact_ceiling;
            opt.battery = args.battery;
            row.report = compute_bounds(cartesian_product(a, b), k, name, opt);
        } catch (const std::exception& e) {
            row.failed = true;
            row.error = e.what();
            if (row.label.empty())
                row.label = family + ":n=" + std::to_string(n);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

int cmd_table(const TableArgs& a, std::ostream& out, std::ostream& err) {
    std::vector<SweepRow> rows;
    try {
        for (const auto& sweep : a.sweeps) {
            auto part = run_sweep(sweep, a);
            rows.insert(rows.end(), part.begin(), part.end());
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    if (a.format == "json") {
        json doc = json::array();
        for (const auto& row : rows) {
            if (row.failed)
                doc.push_back(json{{"instance", row.label}, {"failed", true}, {"error", row.error}});
            else
                doc.push_back(report_json(row.report));
        }
        out << doc.dump(2) << "\n";
        return 0;
    }
    auto cell = [](const std::optional<BoundValue>& b) {
        return b ? std::to_string(b->value) : std::string("-");
    };
    out << std::left << std::setw(22) << "instance" << std::right << std::setw(4) << "n"
        << std::setw(3) << "k" << std::setw(4) << "kG" << std::setw(4) << "kH" << std::setw(7)
        << "lower" << std::setw(6) << "cert" << std::setw(7) << "ord" << std::setw(6) << "heur"
        << std::setw(6) << "lift" << std::setw(7) << "exact"
        << "  note\n";
    for (const auto& row : rows) {
        if (row.failed) {
            out << std::left << std::setw(22) << row.label << "  failed: " << row.error << "\n";
            continue;
        }
        const auto& r = row.report;
        out << std::left << std::setw(22) << r.instance << std::right << std::setw(4) << r.n
            << std::setw(3) << r.k << std::setw(4) << r.kappa_g << std::setw(4) << r.kappa_h
            << std::setw(7)
            << (std::to_string(r.lower_formula.value) + (r.vacuous ? "*" : ""))
            << std::setw(6) << cell(r.lower_certified) << std::setw(7) << cell(r.upper_ordering)
            << std::setw(6) << cell(r.upper_heuristic) << std::setw(6) << cell(r.upper_lift)
            << std::setw(7) << cell(r.exact) << "  " << r.note << "\n";
    }
    out << "(* = vacuous regime n <= 2k-2; lower bounds clamped at 0)\n";
    return 0;
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"treewidth bounds for cartesian products of k-connected graphs"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph family as PACE .gr");
    std::string gen_spec, gen_output;
    gen->add_option("spec", gen_spec,
                    "family spec, e.g. pathpower:n=5,k=2 or product:path:n=3,path:n=3")
        ->required();
    gen->add_option("-o,--output", gen_output, "output path (default stdout)");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "lower/upper treewidth bounds for a product");
    BoundsArgs bargs;
    bounds->add_option("product", bargs.product_spec, "product:<factor>,<factor> spec");
    bounds->add_option("--factor-g", bargs.g_spec, "first factor family spec");
    bounds->add_option("--factor-h", bargs.h_spec, "second factor family spec");
    bounds->add_option("--k", bargs.k, "connectivity parameter (default min factor kappa)");
    bounds->add_option("--seed", bargs.seed, "seed for the refuter battery");
    bounds->add_option("--budget-ms", bargs.budget_ms, "time budget for exact solvers");
    bounds->add_option("--exact-ceiling", bargs.exact_ceiling, "exact treewidth vertex ceiling");
    bounds->add_option("--battery", bargs.battery, "refuter battery size");
    bounds->add_option("--format", bargs.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    bounds->add_option("--emit-certificate", bargs.emit_certificate,
                       "write a refutation transcript to this path");
    bounds->add_option("--refute-j", bargs.refute_j,
                       "comma-separated 1-based flat ids to refute explicitly");

    // verify
    auto* verify = app.add_subcommand("verify", "verify a certificate file against a graph");
    VerifyArgs vargs;
    verify->add_option("certificate", vargs.certificate, "certificate file (.td, bramble, refutation)")
        ->required();
    verify->add_option("--graph", vargs.graph, "host graph .gr file")->required();
    verify->add_option("--claim-order", vargs.claim_order, "claimed bramble order lower bound");
    verify->add_option("--claim-width", vargs.claim_width, "claimed decomposition width");
    verify->add_option("--disjoint", vargs.disjoint,
                       "comma-separated 1-based element indices, pairwise disjoint witness");
    verify->add_option("--budget-ms", vargs.budget_ms, "time budget for the exact solver");

    // table
    auto* table = app.add_subcommand("table", "bounds table over family sweeps");
    TableArgs targs;
    table->add_option("--sweep", targs.sweeps, "sweep spec family:n=A..B[,k=K][,seed=S]")
        ->required()
        ->take_all();
    table->add_option("--seed", targs.seed, "seed for refuter batteries");
    table->add_option("--budget-ms", targs.budget_ms, "time budget per exact solve");
    table->add_option("--exact-ceiling", targs.exact_ceiling, "exact treewidth vertex ceiling");
    table->add_option("--battery", targs.battery, "refuter battery size per row");
    table->add_option("--format", targs.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    if (gen->parsed())
        return cmd_gen(gen_spec, gen_output, out, err);
    if (bounds->parsed())
        return cmd_bounds(bargs, out, err);
    if (verify->parsed())
        return cmd_verify(vargs, out, err);
    if (table->parsed())
        return cmd_table(targs, out, err);
    err << "usage error: no subcommand\n";
    return 2;
}

} // namespace prodtw
