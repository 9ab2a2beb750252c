#include "mkc_cli/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "mkc/charax.hpp"
#include "mkc/errors.hpp"
#include "mkc/families.hpp"
#include "mkc/graph_io.hpp"
#include "mkc/kcut.hpp"
#include "mkc/spectra.hpp"
#include "mkc_cli/report_json.hpp"

namespace mkc::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string num(double x) {
    std::ostringstream os;
    os << std::setprecision(10) << x;
    return os.str();
}

std::string read_text(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream outf(path, std::ios::binary);
    if (!outf) throw InputError("cannot write '" + path + "'");
    outf << text;
}

WeightedGraph load_graph(const std::string& path) {
    try {
        return parse_graph(read_text(path));
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    } catch (const mkc::Error& e) {
        throw InputError(path + ": " + e.what());
    }
}

struct PartitionArgs {
    std::string blocks;
    std::string file;

    bool given() const { return !blocks.empty() || !file.empty(); }

    VertexPartition load(std::size_t n) const {
        std::string spec = blocks;
        if (!file.empty()) {
            spec = read_text(file);
            if (auto nl = spec.find('\n'); nl != std::string::npos) spec = spec.substr(0, nl);
        }
        try {
            return parse_partition_spec(spec, n);
        } catch (const mkc::Error& e) {
            throw UsageError(std::string("blocks are not a partition: ") + e.what());
        }
    }
};

void add_partition_options(CLI::App* sub, PartitionArgs& p) {
    sub->add_option("--blocks", p.blocks, "Partition spec, e.g. \"0,1;2,3;4\"");
    sub->add_option("--partition-file", p.file, "File whose first line is a partition spec");
}

std::size_t env_budget_or(double fallback, double& budget) {
    if (const char* env = std::getenv("KCUT_BUDGET")) {
        try {
            budget = std::stod(env);
            return 1;
        } catch (const std::exception&) {
            throw UsageError("KCUT_BUDGET is not a number");
        }
    }
    budget = fallback;
    return 0;
}

void print_verdict(std::ostream& out, const CharaxVerdict& v, MatrixKind kind) {
    if (v.is_eigenvector) {
        out << "eigenvector of " << to_string(kind) << ", eigenvalue " << num(*v.eigenvalue) << '\n';
        return;
    }
    out << "not an eigenvector of " << to_string(kind) << " (" << v.violations.size() << " violations)\n";
    for (const auto& x : v.violations) {
        out << "  vertex " << x.vertex << " [" << x.condition << "]: " << num(x.lhs) << " != " << num(x.rhs) << '\n';
    }
}

void print_bound(std::ostream& out, const BoundReport& r) {
    const char* eig = r.kind == BoundKind::Adjacency ? "lambda_n" : r.kind == BoundKind::Laplacian ? "mu_1" : "q_n";
    out << std::left << std::setw(5) << to_string(r.kind) << std::right << std::setw(18) << num(r.bound)
        << std::setw(10) << (r.integer_bound ? std::to_string(*r.integer_bound) : std::string("-")) << "   " << eig
        << " = " << num(r.extreme_eigenvalue) << " (mult " << r.extreme_multiplicity << ")\n";
}

void print_certificate(std::ostream& out, const TightnessCertificate& c) {
    out << (c.certified ? "certified" : "not certified") << ": " << to_string(c.bound.kind)
        << " k=" << c.partition.block_count() << " cut=" << num(c.cut) << " bound=" << num(c.bound.bound)
        << " extreme eigenvalue=" << num(c.bound.extreme_eigenvalue) << '\n';
    if (!c.certified) out << "  reason: " << c.reason << '\n';
}

// --------------------------------------------------------------------------

struct BoundsCmd {
    std::string graph;
    std::size_t k = 2;
};

int cmd_bounds(const BoundsCmd& c, bool as_json, std::ostream& out) {
    const auto g = load_graph(c.graph);
    if (c.k < 2) throw UsageError("--k must be >= 2");
    BoundComparison cmp;
    try {
        cmp = compare_bounds(g, c.k);
    } catch (const UnsupportedInput& e) {
        throw InputError(e.what());
    } catch (const ParameterError& e) {
        throw UsageError(e.what());
    }
    if (as_json) {
        auto doc = to_json(cmp);
        doc["n"] = g.order();
        doc["m"] = g.adjacency_mass() / 2.0;
        doc["k"] = c.k;
        out << doc.dump() << '\n';
        return kOk;
    }
    out << "n=" << g.order() << " m=" << num(g.adjacency_mass() / 2.0) << " k=" << c.k << '\n';
    out << "bound            value  integer   extreme eigenvalue\n";
    for (const auto* r : {&cmp.bo1, &cmp.bo2, &cmp.bo3}) print_bound(out, *r);
    out << "minimal:";
    for (auto k : cmp.minimal) out << ' ' << to_string(k);
    out << '\n';
    return kOk;
}

struct CheckCmd {
    std::string graph;
    PartitionArgs partition;
    std::string matrix = "A";
    std::string values;
    std::size_t svector = 0;
    bool structure = false;
};

std::pair<double, double> parse_values(const std::string& spec, std::size_t blocks) {
    auto numbers = [](std::string_view s) {
        std::vector<double> v;
        std::size_t pos = 0;
        while (pos <= s.size()) {
            auto comma = s.find(',', pos);
            if (comma == std::string_view::npos) comma = s.size();
            try {
                v.push_back(std::stod(std::string(s.substr(pos, comma - pos))));
            } catch (const std::exception&) {
                throw UsageError("bad number in --values");
            }
            pos = comma + 1;
        }
        return v;
    };
    if (spec.empty()) return {1.0, 1.0};
    if (spec.rfind("c1,c2:", 0) == 0) {
        const auto v = numbers(std::string_view(spec).substr(6));
        if (v.size() != 2) throw UsageError("--values c1,c2:<c1>,<c2> needs two numbers");
        return {v[0], v[1]};
    }
    const auto v = numbers(spec);
    if (v.size() != blocks) throw UsageError("--values needs one value per block");
    if (!(v[0] > 0.0) || !(v[1] < 0.0) || (v.size() == 3 && v[2] != 0.0)) {
        throw UsageError("--values must look like c1,-c2[,0] with c1, c2 > 0");
    }
    return {v[0], -v[1]};
}

int cmd_check(const CheckCmd& c, bool as_json, std::ostream& out) {
    const auto g = load_graph(c.graph);
    const auto kind = parse_matrix_kind(c.matrix);
    if (!kind) throw UsageError("--matrix must be A, Q or L");
    if (!c.partition.given()) throw UsageError("check needs --blocks or --partition-file");
    const auto partition = c.partition.load(g.order());

    json doc;
    CharaxVerdict verdict;
    if (c.svector > 0) {
        if (c.svector > partition.block_count()) throw UsageError("--svector index exceeds block count");
        try {
            verdict = check_svector(g, partition, *kind);
        } catch (const ParameterError& e) {
            throw UsageError(e.what());
        }
        doc["svector"] = c.svector;
        if (verdict.is_eigenvector) {
            const auto m = graph_matrix(g, *kind);
            const bool numeric = verify_eigenpair(m, *verdict.eigenvalue, svector(partition, c.svector - 1), 1e-8);
            doc["numeric_check"] = numeric;
        }
        if (c.structure) doc["structure"] = to_json(svector_structure_checks(g, partition));
    } else {
        const auto [c1, c2] = parse_values(c.values, partition.block_count());
        try {
            verdict = check_tripartition(g, PartitionVector(partition, c1, c2), *kind);
        } catch (const ParameterError& e) {
            throw UsageError(e.what());
        }
        doc["c1"] = c1;
        doc["c2"] = c2;
    }

    if (as_json) {
        doc["matrix"] = std::string(to_string(*kind));
        doc["partition"] = to_json(partition);
        doc["verdict"] = to_json(verdict);
        out << doc.dump() << '\n';
    } else {
        if (c.svector > 0) out << "s-vector s^(" << c.svector << ") over k=" << partition.block_count() << " blocks\n";
        print_verdict(out, verdict, *kind);
        if (doc.contains("structure")) {
            const auto& s = doc["structure"];
            out << "structure: applicable=" << s["applicable"] << " equal_sizes=" << s["equal_block_sizes"]
                << " cross_regular=" << s["cross_regular"] << " uniform_cross=" << s["uniform_cross_degrees"] << '\n';
        }
    }
    return verdict.is_eigenvector ? kOk : kRefused;
}

struct GenerateCmd {
    std::string family;
    std::size_t k = 3;
    std::size_t r = 0;
    std::size_t n1 = 4;
    std::string add;
    std::string remove;
    std::string out;
    std::string cert;
    std::string format = "edges";
};

std::vector<std::pair<Vertex, Vertex>> parse_edge_pairs(const std::string& spec) {
    std::vector<std::pair<Vertex, Vertex>> out;
    if (spec.empty()) return out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto dash = item.find('-');
        if (dash == std::string::npos) throw UsageError("edge '" + item + "' must look like u-v");
        try {
            out.emplace_back(std::stoul(item.substr(0, dash)), std::stoul(item.substr(dash + 1)));
        } catch (const std::exception&) {
            throw UsageError("edge '" + item + "' must look like u-v");
        }
    }
    return out;
}

int cmd_generate(const GenerateCmd& c, bool as_json, std::ostream& out) {
    FamilyInstance inst;
    try {
        if (c.family == "bo1") {
            inst = gen_bo1_family(c.k, c.r == 0 ? c.k + 4 : c.r);
        } else if (c.family == "bo3") {
            inst = gen_bo3_family(c.n1);
        } else if (c.family == "bo2") {
            const auto additions = parse_edge_pairs(c.add);
            inst = gen_bo2_family(c.k, c.r == 0 ? 2 : c.r, additions);
            const auto removals = parse_edge_pairs(c.remove);
            if (!removals.empty()) inst = remove_intra_block_edges(inst, removals);
        } else {
            throw UsageError("family must be bo1, bo2 or bo3");
        }
    } catch (const ParameterError& e) {
        throw UsageError(e.what());
    } catch (const ContractError& e) {
        throw UsageError(e.what());
    }
    if (c.format != "edges" && c.format != "json") throw UsageError("--format must be edges or json");

    const auto cert = certify(inst);
    const std::string graph_text = c.format == "json" ? emit_graph_json(inst.graph) + "\n" : emit_edge_list(inst.graph);
    auto cert_doc = to_json(cert);
    cert_doc["family"] = inst.family;
    cert_doc["parameters"] = inst.parameters;
    cert_doc["expected_extreme_eigenvalue"] = inst.expected_extreme_eigenvalue;
    cert_doc["n"] = inst.graph.order();
    cert_doc["m"] = inst.graph.size();

    if (c.out.empty()) {
        out << graph_text;
        if (!c.cert.empty()) write_text(c.cert, cert_doc.dump(2) + "\n");
    } else {
        write_text(c.out, graph_text);
        write_text(c.out + ".partition", format_partition_spec(inst.partition) + "\n");
        write_text(c.cert.empty() ? c.out + ".cert.json" : c.cert, cert_doc.dump(2) + "\n");
        if (as_json) {
            out << cert_doc.dump() << '\n';
        } else {
            out << inst.family << " instance: n=" << inst.graph.order() << " m=" << inst.graph.size() << '\n';
            print_certificate(out, cert);
        }
    }
    return cert.certified ? kOk : kRefused;
}

struct ExactCmd {
    std::string graph;
    std::size_t k = 2;
    std::optional<double> budget;
    unsigned threads = 1;
};

int cmd_exact(const ExactCmd& c, bool as_json, std::ostream& out, std::ostream& err) {
    const auto g = load_graph(c.graph);
    if (c.k < 1) throw UsageError("--k must be >= 1");
    double budget = kDefaultExactBudget;
    if (c.budget) {
        budget = *c.budget;
    } else {
        env_budget_or(kDefaultExactBudget, budget);
    }
    try {
        const auto cut = exact_max_kcut(g, c.k, budget, std::max(1u, c.threads));
        if (as_json) {
            auto doc = to_json(cut);
            doc["k"] = c.k;
            out << doc.dump() << '\n';
        } else {
            out << "mc_" << c.k << " = " << num(cut.value) << '\n';
            out << "partition: " << format_partition_spec(cut.partition) << '\n';
        }
        return kOk;
    } catch (const BudgetExceeded& e) {
        if (as_json) {
            out << json{{"refused", true}, {"required", e.required()}, {"budget", e.budget()}}.dump() << '\n';
        }
        err << "refused: " << e.what() << '\n';
        return kRefused;
    }
}

struct CertifyCmd {
    std::string graph;
    PartitionArgs partition;
    std::string bound = "bo1";
};

int cmd_certify(const CertifyCmd& c, bool as_json, std::ostream& out) {
    const auto g = load_graph(c.graph);
    const auto kind = parse_bound_kind(c.bound);
    if (!kind) throw UsageError("--bound must be bo1, bo2 or bo3");
    if (!c.partition.given()) throw UsageError("certify needs --blocks or --partition-file");
    const auto partition = c.partition.load(g.order());
    TightnessCertificate cert;
    try {
        cert = certify_tightness(g, partition, *kind);
    } catch (const UnsupportedInput& e) {
        throw InputError(e.what());
    }
    if (as_json) {
        out << to_json(cert).dump() << '\n';
    } else {
        print_certificate(out, cert);
    }
    return cert.certified ? kOk : kRefused;
}

struct WeylCmd {
    std::string a;
    std::string b;
    std::size_t i = 1;
    std::size_t j = 1;
    std::string probe;
};

SymmetricMatrix load_matrix(const std::string& path) {
    try {
        return parse_matrix_text(read_text(path));
    } catch (const mkc::Error& e) {
        throw InputError(path + ": " + e.what());
    }
}

int cmd_weyl(const WeylCmd& c, bool as_json, std::ostream& out) {
    const auto a = load_matrix(c.a);
    const auto b = load_matrix(c.b);
    std::optional<std::vector<double>> probe;
    if (!c.probe.empty()) {
        const auto text = read_text(c.probe);
        std::istringstream is(text);
        probe.emplace(std::istream_iterator<double>(is), std::istream_iterator<double>());
        if (probe->size() != a.order()) throw InputError("probe vector length differs from matrix order");
    }
    WeylReport r;
    try {
        r = weyl_check(a, b, c.i, c.j, probe);
    } catch (const ParameterError& e) {
        throw UsageError(e.what());
    } catch (const ContractError& e) {
        throw InputError(e.what());
    }
    if (as_json) {
        out << to_json(r).dump() << '\n';
    } else {
        const bool upper = r.inequality == WeylReport::Inequality::UpperSum;
        out << "lambda_" << r.i << "(A) + lambda_" << r.j << "(B) = " << num(r.lhs) << (upper ? " <= " : " >= ")
            << "lambda_" << r.sum_index << "(A+B) = " << num(r.rhs) << ": " << (r.holds ? "holds" : "VIOLATED")
            << (r.equality_candidate ? " (equality candidate)" : "") << '\n';
        if (r.probe_is_common_eigenvector) {
            out << "probe is " << (*r.probe_is_common_eigenvector ? "" : "not ") << "a common eigenvector\n";
        }
    }
    return r.holds ? kOk : kRefused;
}

struct DotCmd {
    std::string graph;
    PartitionArgs partition;
    std::string out;
};

int cmd_export_dot(const DotCmd& c, std::ostream& out) {
    const auto g = load_graph(c.graph);
    std::optional<VertexPartition> p;
    if (c.partition.given()) p = c.partition.load(g.order());
    const auto dot = emit_dot(g, p);
    if (c.out.empty()) {
        out << dot;
    } else {
        write_text(c.out, dot);
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spectral bounds and certificates for the max k-cut problem", "mkc"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Emit a single JSON document");

    BoundsCmd bounds;
    auto* s_bounds = app.add_subcommand("bounds", "Eigenvalue upper bounds bo1, bo2, bo3");
    s_bounds->add_option("graph", bounds.graph, "Graph file (edge list or JSON, '-' for stdin)")->required();
    s_bounds->add_option("--k", bounds.k, "Number of blocks")->capture_default_str();
    s_bounds->add_flag("--json", as_json);

    CheckCmd check;
    auto* s_check = app.add_subcommand("check", "Check a partition-shaped eigenvector from degree conditions");
    s_check->add_option("graph", check.graph)->required();
    add_partition_options(s_check, check.partition);
    s_check->add_option("--matrix", check.matrix, "A, Q or L")->capture_default_str();
    s_check->add_option("--values", check.values, "\"1,-1,0\" or \"c1,c2:3,1\"");
    s_check->add_option("--svector", check.svector, "Check the s-vectors; 1-based index reported");
    s_check->add_flag("--structure", check.structure, "With --svector and L: structural consequences");
    s_check->add_flag("--json", as_json);

    GenerateCmd gen;
    auto* s_gen = app.add_subcommand("generate", "Generate an extremal family instance");
    s_gen->add_option("family", gen.family, "bo1, bo2 or bo3")->required();
    s_gen->add_option("--k", gen.k)->capture_default_str();
    s_gen->add_option("--r", gen.r);
    s_gen->add_option("--n1", gen.n1)->capture_default_str();
    s_gen->add_option("--add", gen.add, "bo2: intra-block edges to add, \"u-v,u-v\"");
    s_gen->add_option("--remove", gen.remove, "bo2: intra-block edges to remove afterwards");
    s_gen->add_option("--out", gen.out, "Graph file; sidecars <out>.partition and <out>.cert.json");
    s_gen->add_option("--cert", gen.cert, "Certificate JSON path");
    s_gen->add_option("--format", gen.format, "edges or json")->capture_default_str();
    s_gen->add_flag("--json", as_json);

    ExactCmd exact;
    auto* s_exact = app.add_subcommand("exact", "Exact max k-cut by exhaustive search");
    s_exact->add_option("graph", exact.graph)->required();
    s_exact->add_option("--k", exact.k)->capture_default_str();
    s_exact->add_option("--budget", exact.budget, "Maximum k^(n-1); default 1e8 or $KCUT_BUDGET");
    s_exact->add_option("--threads", exact.threads)->capture_default_str();
    s_exact->add_flag("--json", as_json);

    CertifyCmd cert;
    auto* s_cert = app.add_subcommand("certify", "Certify that a partition attains a bound");
    s_cert->add_option("graph", cert.graph)->required();
    add_partition_options(s_cert, cert.partition);
    s_cert->add_option("--bound", cert.bound, "bo1, bo2 or bo3")->capture_default_str();
    s_cert->add_flag("--json", as_json);

    WeylCmd weyl;
    auto* s_weyl = app.add_subcommand("weyl", "Check a Weyl inequality for two symmetric matrices");
    s_weyl->add_option("a", weyl.a, "Matrix file (row-major text)")->required();
    s_weyl->add_option("b", weyl.b, "Matrix file (row-major text)")->required();
    s_weyl->add_option("--i", weyl.i)->capture_default_str();
    s_weyl->add_option("--j", weyl.j)->capture_default_str();
    s_weyl->add_option("--probe", weyl.probe, "Candidate common eigenvector file");
    s_weyl->add_flag("--json", as_json);

    DotCmd dot;
    auto* s_dot = app.add_subcommand("export-dot", "Export Graphviz DOT, colouring partition blocks");
    s_dot->add_option("graph", dot.graph)->required();
    add_partition_options(s_dot, dot.partition);
    s_dot->add_option("--out", dot.out);

    std::vector<const char*> argv{"mkc"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (s_bounds->parsed()) return cmd_bounds(bounds, as_json, out);
        if (s_check->parsed()) return cmd_check(check, as_json, out);
        if (s_gen->parsed()) return cmd_generate(gen, as_json, out);
        if (s_exact->parsed()) return cmd_exact(exact, as_json, out, err);
        if (s_cert->parsed()) return cmd_certify(cert, as_json, out);
        if (s_weyl->parsed()) return cmd_weyl(weyl, as_json, out);
        if (s_dot->parsed()) return cmd_export_dot(dot, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInput;
    } catch (const mkc::Error& e) {
        err << "error: " << e.what() << '\n';
        return kInput;
    }
    return kUsage;
}

}  // namespace mkc::cli
