// Command-line front end: every analysis as a subcommand over the text formats.
// Exit codes: 0 = property holds / computation done, 1 = property fails
// (witness printed), 2 = input or guard error.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gmet/canonical.hpp"
#include "gmet/codes.hpp"
#include "gmet/digraph.hpp"
#include "gmet/errors.hpp"
#include "gmet/fq.hpp"
#include "gmet/io.hpp"
#include "gmet/isometry.hpp"
#include "gmet/macwilliams.hpp"
#include "gmet/metric.hpp"
#include "gmet/reconstruct.hpp"

using json = nlohmann::json;

namespace {

struct Options {
    bool json_out = false;
    int guard_exp = 24;

    std::int64_t guard() const { return std::int64_t{1} << guard_exp; }
};

int g_exit = 0;

void emit(const Options& opt, const json& record, const std::string& text) {
    if (opt.json_out)
        std::cout << record.dump() << '\n';
    else
        std::cout << text;
}

gmet::FqVector parse_vector(const std::string& s, int q) {
    std::string cleaned = s;
    for (char& c : cleaned)
        if (c == ',') c = ' ';
    std::istringstream in(cleaned);
    std::vector<int> entries;
    int v;
    while (in >> v) entries.push_back(v);
    return gmet::FqVector(q, entries);
}

gmet::SupportSet parse_support(const std::string& s) {
    std::string cleaned = s;
    for (char& c : cleaned)
        if (c == ',') c = ' ';
    std::istringstream in(cleaned);
    std::vector<int> idx;
    int v;
    while (in >> v) idx.push_back(v);
    return gmet::SupportSet(idx);
}

json code_record(const gmet::LinearCode& c) {
    json j;
    j["q"] = c.q;
    j["n"] = c.n;
    j["k"] = c.k();
    j["basis"] = c.basis;
    return j;
}

std::string code_text(const gmet::LinearCode& c) {
    std::ostringstream out;
    gmet::write_code(out, c);
    return out.str();
}

std::string graph_text(const gmet::Digraph& g) {
    std::ostringstream out;
    gmet::write_graph(out, g);
    return out.str();
}

json graph_record(const gmet::Digraph& g) {
    json j;
    j["n"] = g.n();
    j["edges"] = g.edges();
    return j;
}

std::string map_text(const gmet::LinearMap& t) {
    std::ostringstream out;
    gmet::write_linear_map(out, t);
    return out.str();
}

std::string prediction_text(gmet::Prediction p) {
    switch (p) {
        case gmet::Prediction::holds:
            return "holds";
        case gmet::Prediction::fails:
            return "fails";
        default:
            return "undetermined";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"metrics on F_q^n induced by directed graphs"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.json_out, "emit machine-readable records");
    app.add_option("--guard-exp", opt.guard_exp, "max enumeration exponent (guard = 2^exp)")
        ->check(CLI::Range(1, 40));

    std::string graph_path, graph2_path, code_path, map_path, table_path;
    std::string vector_arg, support_arg;
    int q = 2;
    int dim_cap = 2;
    int max_n_guard = 6;
    bool expanded = false, reduced = false;
    bool brute = false, formula = false;
    bool verify = false;

    auto* weight = app.add_subcommand("weight", "G-weight of a word");
    weight->add_option("graph", graph_path)->required();
    weight->add_option("--word", vector_arg, "residues, e.g. '1 0 1'");
    weight->add_option("--support", support_arg, "support indices, e.g. '0,2'");
    weight->add_option("--q", q);

    auto* table = app.add_subcommand("table", "full weight table");
    table->add_option("graph", graph_path)->required();

    auto* canon = app.add_subcommand("canon", "canonical forms");
    canon->add_option("graph", graph_path)->required();
    canon->add_flag("--expanded", expanded);
    canon->add_flag("--reduced", reduced);

    auto* same = app.add_subcommand("same-metric", "do two graphs induce the same metric?");
    same->add_option("graph1", graph_path)->required();
    same->add_option("graph2", graph2_path)->required();

    auto* iso = app.add_subcommand("isomorphic", "are the two metrics isomorphic?");
    iso->add_option("graph1", graph_path)->required();
    iso->add_option("graph2", graph2_path)->required();

    auto* rec = app.add_subcommand("reconstruct", "graph from a (partial) weight table");
    rec->add_option("table", table_path)->required();

    auto* cert = app.add_subcommand("certificate", "weight entries pinning the metric down");
    cert->add_option("graph", graph_path)->required();
    cert->add_flag("--verify", verify, "scan all graphs to confirm uniqueness (n <= 5)");

    auto* ischk = app.add_subcommand("isometry-check", "is the map a linear isometry?");
    ischk->add_option("graph", graph_path)->required();
    ischk->add_option("map", map_path)->required();

    auto* dec = app.add_subcommand("decompose-isometry", "split into Aut part and N part");
    dec->add_option("graph", graph_path)->required();
    dec->add_option("map", map_path)->required();

    auto* order = app.add_subcommand("group-order", "order of the linear isometry group");
    order->add_option("graph", graph_path)->required();
    order->add_option("--q", q);

    auto* cdec = app.add_subcommand("code-decompose", "G-canonical decomposition of a code");
    cdec->add_option("graph", graph_path)->required();
    cdec->add_option("code", code_path)->required();

    auto* mind = app.add_subcommand("min-distance", "minimum G-distance of a code");
    mind->add_option("graph", graph_path)->required();
    mind->add_option("code", code_path)->required();

    auto* pack = app.add_subcommand("packing-radius", "packing radius of a code");
    pack->add_option("graph", graph_path)->required();
    pack->add_option("code", code_path)->required();
    pack->add_flag("--brute", brute);
    pack->add_flag("--formula", formula);

    auto* enu = app.add_subcommand("enumerator", "G-weight enumerator of a code");
    enu->add_option("graph", graph_path)->required();
    enu->add_option("code", code_path)->required();

    auto* udp = app.add_subcommand("udp", "unique decomposition property");
    udp->add_option("graph", graph_path)->required();

    auto* omega = app.add_subcommand("omega", "condition Omega");
    omega->add_option("graph", graph_path)->required();

    auto* mac = app.add_subcommand("macwilliams-check", "MacWilliams identity over small codes");
    mac->add_option("graph", graph_path)->required();
    mac->add_option("--dim-cap", dim_cap);
    mac->add_option("--max-n", max_n_guard);

    auto* ext = app.add_subcommand("extension-check", "MacWilliams extension property");
    ext->add_option("graph", graph_path)->required();
    ext->add_option("--dim-cap", dim_cap);
    ext->add_option("--max-n", max_n_guard);

    CLI11_PARSE(app, argc, argv);

    try {
        if (weight->parsed()) {
            gmet::Digraph g = gmet::load_graph(graph_path);
            int w;
            if (!vector_arg.empty())
                w = gmet::g_weight(g, parse_vector(vector_arg, q));
            else if (!support_arg.empty())
                w = gmet::g_weight(g, parse_support(support_arg));
            else
                throw gmet::FormatError("weight needs --word or --support");
            emit(opt, json{{"weight", w}}, std::to_string(w) + "\n");
        } else if (table->parsed()) {
            gmet::Digraph g = gmet::load_graph(graph_path);
            gmet::WeightTable t = gmet::full_weight_table(g, opt.guard_exp);
            std::ostringstream out;
            gmet::write_weight_table(out, t);
            json j;
            j["n"] = t.n;
            j["weights"] = json::object();
            for (const auto& [mask, w] : t.weights) j["weights"][gmet::support_to_bitstring(mask, t.n)] = w;
            emit(opt, j, out.str());
        } else if (canon->parsed()) {
            gmet::Digraph g = gmet::load_graph(graph_path);
            if (expanded == reduced) throw gmet::FormatError("choose exactly one of --expanded / --reduced");
            if (expanded) {
                gmet::Digraph e = gmet::expanded_form(g);
                emit(opt, graph_record(e), graph_text(e));
            } else {
                gmet::ReducedForm r = gmet::reduced_form(g);
                std::ostringstream out;
                gmet::write_reduced_form(out, r);
                json j;
                j["m"] = r.m;
                j["h"] = r.height;
                j["L"] = r.L;
                j["level"] = r.level;
                j["pi"] = r.pi;
                j["hasse"] = r.hasse.edges();
                emit(opt, j, out.str());
            }
        } else if (same->parsed()) {
            bool eq = gmet::same_metric(gmet::load_graph(graph_path), gmet::load_graph(graph2_path));
            emit(opt, json{{"same_metric", eq}}, eq ? "same metric\n" : "different metrics\n");
            g_exit = eq ? 0 : 1;
        } else if (iso->parsed()) {
            auto witness = gmet::metric_isomorphism(gmet::load_graph(graph_path), gmet::load_graph(graph2_path));
            if (witness) {
                std::ostringstream out;
                out << "isomorphic; reduced-vertex map:";
                for (int v : *witness) out << ' ' << v;
                out << '\n';
                emit(opt, json{{"isomorphic", true}, {"witness", *witness}}, out.str());
            } else {
                emit(opt, json{{"isomorphic", false}}, "not isomorphic\n");
                g_exit = 1;
            }
        } else if (rec->parsed()) {
            gmet::WeightTable t = gmet::load_weight_table(table_path);
            bool pairs_complete = true;
            for (int i = 0; i < t.n && pairs_complete; ++i)
                for (int j = i + 1; j < t.n && pairs_complete; ++j)
                    if (!t.has((std::uint64_t{1} << i) | (std::uint64_t{1} << j))) pairs_complete = false;
            if (!pairs_complete) t = gmet::recover_matching_weights(t);
            gmet::WeightOracle oracle(t.n, t);
            gmet::Digraph g = gmet::infer_from_weight12(oracle);
            json j = graph_record(g);
            j["queries"] = oracle.queries();
            emit(opt, j, graph_text(g));
        } else if (cert->parsed()) {
            gmet::Digraph g = gmet::load_graph(graph_path);
            gmet::Certificate c = gmet::certificate(g);
            std::ostringstream out;
            json j;
            j["entries"] = json::array();
            for (const auto& [s, w] : c) {
                out << gmet::support_to_bitstring(s.mask(), g.n()) << ' ' << w << '\n';
                j["entries"].push_back({{"support", s.items()}, {"weight", w}});
            }
            if (verify) {
                bool unique = gmet::verify_certificate(c, g.n());
                j["unique"] = unique;
                out << (unique ? "# uniquely determines the metric\n" : "# NOT unique\n");
                if (!unique) g_exit = 1;
            }
            emit(opt, j, out.str());
        } else if (ischk->parsed()) {
            gmet::Digraph g = gmet::load_graph(graph_path);
            gmet::LinearMap t = gmet::load_linear_map(map_path);
            bool ok = gmet::is_isometry(g, t, opt.guard());
            emit(opt, json{{"isometry", ok}}, ok ? "isometry\n" : "not an isometry\n");
            g_exit = ok ? 0 : 1;
        } else if (dec->parsed()) {
            gmet::Digraph g = gmet::load_graph(graph_path);
            gmet::LinearMap t = gmet::load_linear_map(map_path);
            try {
                gmet::IsometryDecomposition d = gmet::decompose_isometry(g, t);
                std::ostringstream out;
                out << "phi";
                for (int v : d.phi.perm) out << ' ' << v;
                out << "\nn_part\n" << map_text(d.nmap);
                emit(opt, json{{"phi", d.phi.perm}, {"n_part", d.nmap.matrix}}, out.str());
            } catch (const gmet::NotAnIsometry& e) {
                emit(opt, json{{"error", e.what()}}, std::string("not an isometry: ") + e.what() + "\n");
                g_exit = 1;
            }
        } else if (order->parsed()) {
            gmet::Digraph g = gmet::load_graph(graph_path);
            std::int64_t n = gmet::group_order(g, q);
            emit(opt, json{{"order", n}}, std::to_string(n) + "\n");
        } else if (cdec->parsed()) {
            gmet::Digraph g = gmet::load_graph(graph_path);
            gmet::LinearCode c = gmet::load_code(code_path);
            try {
                gmet::DecomposedCode d = gmet::canonical_decomposition(g, c);
                std::ostringstream out;
                out << "witness\n" << map_text(d.isometry);
                json j;
                j["witness"] = d.isometry.matrix;
                j["components"] = json::array();
                for (std::size_t lvl = 0; lvl < d.components.size(); ++lvl) {
                    out << "level " << (lvl + 1) << '\n' << code_text(d.components[lvl]);
                    j["components"].push_back(code_record(d.components[lvl]));
                }
                emit(opt, j, out.str());
            } catch (const gmet::NotHierarchical&) {
                gmet::LinearCode w = gmet::non_decomposable_witness(g, c.q);
                json j;
                j["error"] = "not hierarchical";
                j["witness_code"] = code_record(w);
                emit(opt, j, "not hierarchical; non-decomposable witness code:\n" + code_text(w));
                g_exit = 1;
            }
        } else if (mind->parsed()) {
            int d = gmet::min_distance(gmet::load_graph(graph_path), gmet::load_code(code_path), opt.guard());
            emit(opt, json{{"min_distance", d}}, std::to_string(d) + "\n");
        } else if (pack->parsed()) {
            gmet::Digraph g = gmet::load_graph(graph_path);
            gmet::LinearCode c = gmet::load_code(code_path);
            if (brute && formula) throw gmet::FormatError("choose one of --brute / --formula");
            int r = formula ? gmet::packing_radius_formula(g, c, opt.guard())
                            : gmet::packing_radius_bruteforce(g, c, opt.guard());
            emit(opt, json{{"packing_radius", r}, {"method", formula ? "formula" : "brute"}},
                 std::to_string(r) + "\n");
        } else if (enu->parsed()) {
            gmet::Digraph g = gmet::load_graph(graph_path);
            gmet::LinearCode c = gmet::load_code(code_path);
            gmet::WeightEnumerator w = gmet::weight_enumerator(g, c, opt.guard());
            emit(opt, json::parse(gmet::enumerator_to_json(w, c.q, c.n)),
                 gmet::enumerator_to_json(w, c.q, c.n) + "\n");
        } else if (udp->parsed()) {
            gmet::ReducedForm r = gmet::reduced_form(gmet::load_graph(graph_path));
            gmet::UdpResult res = gmet::udp_check(r);
            if (res.holds) {
                emit(opt, json{{"udp", true}}, "UDP holds\n");
            } else {
                std::ostringstream out;
                out << "UDP fails at level " << res.witness->level << ": subsets {";
                for (int v : res.witness->s1) out << ' ' << v;
                out << " } and {";
                for (int v : res.witness->s2) out << ' ' << v;
                out << " } share their L-sum with different L-multisets\n";
                json j{{"udp", false},
                       {"level", res.witness->level},
                       {"s1", res.witness->s1},
                       {"s2", res.witness->s2},
                       {"ls1", res.witness->ls1},
                       {"ls2", res.witness->ls2}};
                emit(opt, j, out.str());
                g_exit = 1;
            }
        } else if (omega->parsed()) {
            gmet::ReducedForm r = gmet::reduced_form(gmet::load_graph(graph_path));
            gmet::OmegaResult res = gmet::omega_check(r);
            if (res.holds) {
                emit(opt, json{{"omega", true}}, "condition Omega holds\n");
            } else {
                std::ostringstream out;
                out << "condition Omega fails at level " << res.witness->level << ": L-value "
                    << res.witness->l_value << " is shared by " << res.witness->vertices.size() << " vertices\n";
                emit(opt,
                     json{{"omega", false},
                          {"level", res.witness->level},
                          {"l_value", res.witness->l_value},
                          {"vertices", res.witness->vertices}},
                     out.str());
                g_exit = 1;
            }
        } else if (mac->parsed()) {
            gmet::Digraph g = gmet::load_graph(graph_path);
            gmet::IdentityResult res = gmet::identity_check(g, dim_cap, max_n_guard);
            std::string pred = prediction_text(gmet::identity_predicted(g));
            if (res.holds) {
                emit(opt, json{{"identity", true}, {"predicted", pred}},
                     "MacWilliams identity holds over the enumerated codes (prediction: " + pred + ")\n");
            } else {
                std::ostringstream out;
                out << "MacWilliams identity fails (prediction: " << pred << ")\nC1:\n"
                    << code_text(res.witness->c1) << "C2:\n"
                    << code_text(res.witness->c2);
                json j{{"identity", false},
                       {"predicted", pred},
                       {"c1", code_record(res.witness->c1)},
                       {"c2", code_record(res.witness->c2)},
                       {"enumerator", res.witness->enumerator.coeffs},
                       {"dual1", res.witness->dual1.coeffs},
                       {"dual2", res.witness->dual2.coeffs}};
                emit(opt, j, out.str());
                g_exit = 1;
            }
        } else if (ext->parsed()) {
            gmet::Digraph g = gmet::load_graph(graph_path);
            gmet::ExtensionResult res = gmet::extension_check(g, dim_cap, max_n_guard);
            std::string pred = prediction_text(gmet::extension_predicted(g));
            if (res.holds) {
                emit(opt, json{{"extension", true}, {"predicted", pred}},
                     "extension property holds over the enumerated codes (prediction: " + pred + ")\n");
            } else {
                std::ostringstream out;
                out << "extension property fails (prediction: " << pred << ")\nC1:\n"
                    << code_text(res.witness->c1) << "C2:\n"
                    << code_text(res.witness->c2) << "map:\n";
                json j{{"extension", false},
                       {"predicted", pred},
                       {"c1", code_record(res.witness->c1)},
                       {"c2", code_record(res.witness->c2)}};
                j["map"] = json::array();
                for (std::size_t i = 0; i < res.witness->basis.size(); ++i) {
                    out << "  ";
                    for (int x : res.witness->basis[i].entries) out << x;
                    out << " -> ";
                    for (int x : res.witness->images[i].entries) out << x;
                    out << '\n';
                    j["map"].push_back(
                        {{"from", res.witness->basis[i].entries}, {"to", res.witness->images[i].entries}});
                }
                emit(opt, j, out.str());
                g_exit = 1;
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return g_exit;
}
