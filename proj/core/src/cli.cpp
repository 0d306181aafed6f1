#include "outf3/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "outf3/case_table.hpp"
#include "outf3/errors.hpp"
#include "outf3/free_group.hpp"
#include "outf3/gersten.hpp"
#include "outf3/graph_action.hpp"
#include "outf3/rep_decomposition.hpp"
#include "outf3/torelli.hpp"

namespace outf3::cli {

namespace {

constexpr const char* kWordHelp =
    "Generator words are whitespace-separated tokens: e1..e3, r12..r32, "
    "l12..l32, s12/s13/s23, s14/s24/s34, D, with ^k for integer powers "
    "(e.g. r21^-1). Juxtaposition composes right to left: in 'a b' the "
    "factor b acts first.";

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("bad JSON in '" + path + "': " + e.what());
    }
    return j;
}

std::string load_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

repdecomp::Representation resolve_representation(const std::string& spec) {
    if (std::filesystem::exists(spec))
        return repdecomp::Representation::parse_json(load_json_file(spec), spec);
    return repdecomp::Representation::pullback(spec);
}

struct IdentityCheck {
    std::string description;
    bool holds;
};

std::vector<IdentityCheck> run_identity_checks() {
    using freegrp::FreeAutomorphism;
    using freegrp::evaluate_word;
    std::vector<IdentityCheck> checks;

    auto check = [&](const std::string& description, const FreeAutomorphism& lhs,
                     const FreeAutomorphism& rhs) {
        checks.push_back({description, freegrp::outer_equal(lhs, rhs)});
    };

    check("e1 s14 = r31 r21", evaluate_word("e1 s14", 3), evaluate_word("r31 r21", 3));

    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            if (i == j) continue;
            std::string si = std::to_string(i), sj = std::to_string(j);
            check("e" + si + " s" + si + sj + " = l" + si + sj + " l" + sj + si + "^-1 r" + si + sj,
                  evaluate_word("e" + si + " s" + si + sj, 3),
                  evaluate_word("l" + si + sj + " l" + sj + si + "^-1 r" + si + sj, 3));
        }

    {
        FreeAutomorphism h = evaluate_word("D s23", 3);
        FreeAutomorphism conj =
            freegrp::compose(freegrp::inverse(h), freegrp::compose(evaluate_word("l21", 3), h));
        check("l21^(D s23) = r31", conj, evaluate_word("r31", 3));
    }

    check("[r23^-1, r31^-1] = r21^-1",
          evaluate_word("r23^-1 r31^-1 r23 r31", 3), evaluate_word("r21^-1", 3));

    return checks;
}

int run_case_table(bool reduced, int rank_bound, int group_order, const std::string& format,
                   CommandOutcome& outcome) {
    auto rows = graphact::enumerate_case_table(rank_bound, group_order, reduced);
    outcome.payload = graphact::case_table_json(rows);
    outcome.text = format == "json" ? outcome.payload->dump(2) + "\n"
                                    : graphact::case_table_csv(rows);
    return 0;
}

int run_verify_gersten(const std::string& target, const std::string& assignment_path,
                       const std::string& format, CommandOutcome& outcome) {
    gersten::Presentation p = gersten::gersten_presentation(3);
    gersten::VerificationReport report;

    if (target == "outer") {
        gersten::OuterGroup group(3);
        report = gersten::verify_homomorphism(p, gersten::identity_assignment(p), group);
    } else if (target == "abelianization") {
        gersten::IntMatrixGroup group(3);
        report = gersten::verify_homomorphism(p, gersten::abelianization_assignment(p), group);
    } else if (target == "file") {
        if (assignment_path.empty())
            throw ParseError("--target file needs --assignment <path>");
        nlohmann::json j = load_json_file(assignment_path);
        if (!j.contains("generators"))
            throw ParseError("assignment JSON needs a 'generators' object");
        gersten::Assignment<exactlin::RationalMatrix> assignment;
        for (const auto& [token, matrix] : j["generators"].items())
            assignment.emplace(token, exactlin::RationalMatrix::from_json(matrix));
        if (assignment.empty())
            throw ParseError("assignment JSON lists no generators");
        gersten::RationalMatrixGroup group(assignment.begin()->second.rows());
        report = gersten::verify_homomorphism(p, assignment, group);
    } else {
        throw ParseError("unknown target '" + target + "'");
    }

    outcome.payload = report.to_json();
    if (format == "json") {
        outcome.text = outcome.payload->dump(2) + "\n";
    } else {
        std::ostringstream out;
        out << "relators: " << report.outcomes.size() << ", pass: " << report.pass_count()
            << ", fail: " << report.fail_count() << "\n";
        for (const auto& o : report.outcomes)
            if (!o.passed) out << "FAIL  " << o.relator << "\n";
        outcome.text = out.str();
    }
    return report.all_passed() ? 0 : 1;
}

int run_decompose(const std::string& rep_spec, const std::string& group,
                  const std::string& format, CommandOutcome& outcome) {
    repdecomp::Representation rep = resolve_representation(rep_spec);
    repdecomp::EigenDecomposition dec = repdecomp::epsilon_decomposition(rep);
    auto levels = repdecomp::level_dimensions(dec);

    nlohmann::json j;
    j["representation"] = rep.name();
    j["dimension"] = rep.dimension();
    j["levels"] = levels;
    nlohmann::json spaces = nlohmann::json::object();
    for (int mask : dec.nonzero_masks())
        spaces[repdecomp::mask_str(mask)] = dec.space(mask).dimension();
    j["eigenspaces"] = spaces;
    j["factors_through_gl3"] = repdecomp::factors_through_gl3(rep);

    std::ostringstream out;
    out << "representation " << rep.name() << " (dim " << rep.dimension() << ")\n";
    out << "levels dim(V0..V3): " << levels[0] << " " << levels[1] << " " << levels[2] << " "
        << levels[3] << "\n";
    for (int mask : dec.nonzero_masks())
        out << "  E_" << repdecomp::mask_str(mask) << " dim " << dec.space(mask).dimension()
            << "\n";
    out << "factors through GL3(Z): "
        << (repdecomp::factors_through_gl3(rep) ? "yes" : "no") << "\n";

    if (!group.empty()) {
        repdecomp::SymGroup which =
            group == "s4" ? repdecomp::SymGroup::S4 : repdecomp::SymGroup::S3;
        auto mult = repdecomp::sym_decompose(rep, which);
        j["irreducibles"] = mult.to_json();
        out << (which == repdecomp::SymGroup::S4 ? "S4" : "S3") << " multiplicities:";
        for (const auto& [name, m] : mult.multiplicity) out << " " << name << "=" << m;
        out << "\n";
    }

    outcome.payload = j;
    outcome.text = format == "json" ? j.dump(2) + "\n" : out.str();
    return 0;
}

int run_diagram(const std::string& rep_spec, const std::string& element,
                const std::string& format, CommandOutcome& outcome) {
    repdecomp::Representation rep = resolve_representation(rep_spec);
    repdecomp::Diagram d = repdecomp::minimal_diagram(rep, element);
    outcome.payload = d.to_json();
    outcome.text = format == "json" ? outcome.payload->dump(2) + "\n" : d.render();
    return 0;
}

int run_torelli(int samples, std::uint64_t seed, const std::string& format,
                CommandOutcome& outcome) {
    torelli::ProbeReport report = torelli::irreducibility_probe(samples, seed);
    outcome.payload = report.to_json();
    if (format == "json") {
        outcome.text = outcome.payload->dump(2) + "\n";
    } else {
        std::ostringstream out;
        out << "closures reaching the full 6-dimensional space: " << report.full_count << "/"
            << report.entries.size() << "\n";
        for (const auto* failure : report.failures())
            out << "NOT FULL  " << failure->label << " (dim " << failure->closure_dim << ")\n";
        outcome.text = out.str();
    }
    return report.all_full() ? 0 : 1;
}

int run_admissible(const std::string& graph_path, const std::string& action_path,
                   CommandOutcome& outcome) {
    graphact::FiniteGraph graph = graphact::FiniteGraph::parse(load_text_file(graph_path));
    graphact::GroupActionOnGraph action =
        graphact::GroupActionOnGraph::parse(graph, load_text_file(action_path));
    bool verdict = graphact::is_admissible(graph, action);
    nlohmann::json j;
    j["admissible"] = verdict;
    j["group_order"] = action.order();
    j["edge_orbits"] = action.edge_orbits().size();
    outcome.payload = j;
    outcome.text = std::string(verdict ? "admissible" : "not admissible") + " (group order " +
                   std::to_string(action.order()) + ", " +
                   std::to_string(action.edge_orbits().size()) + " edge orbits)\n";
    return 0;
}

int run_identities(CommandOutcome& outcome) {
    auto checks = run_identity_checks();
    std::ostringstream out;
    bool all = true;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) {
        out << (c.holds ? "ok    " : "FAIL  ") << c.description << "\n";
        arr.push_back({{"identity", c.description}, {"holds", c.holds}});
        all = all && c.holds;
    }
    out << (all ? "all identities hold\n" : "some identities FAILED\n");
    outcome.payload = arr;
    outcome.text = out.str();
    return all ? 0 : 1;
}

}  // namespace

CommandOutcome execute(const std::vector<std::string>& args) {
    CommandOutcome outcome;

    CLI::App app{"outf3 - exact computations around Out(F3): Nielsen "
                 "automorphisms, presentation certification, eigenspace "
                 "diagrams, graph actions and congruence modules"};
    app.require_subcommand(1);
    app.footer(kWordHelp);

    // case-table
    bool reduced = false;
    int rank_bound = 5;
    int group_order = 48;
    std::string ct_format = "csv";
    auto* ct = app.add_subcommand("case-table",
                                  "Enumerate the valence distributions of edge-transitive "
                                  "quotients");
    ct->add_flag("--reduced", reduced, "Keep only rows with >=3 edges, rank >=2 and edge count "
                                       "dividing the group order");
    ct->add_option("--rank-bound", rank_bound, "Rank bound (default 5)");
    ct->add_option("--group-order", group_order, "Group order for the divisibility filter "
                                                 "(default 48)");
    ct->add_option("--format", ct_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    // verify-gersten
    std::string target = "outer";
    std::string assignment_path;
    std::string vg_format = "text";
    auto* vg = app.add_subcommand("verify-gersten",
                                  "Check every relator of the rank-3 presentation under an "
                                  "assignment");
    vg->add_option("--target", target, "outer, abelianization, or file")
        ->check(CLI::IsMember({"outer", "abelianization", "file"}));
    vg->add_option("--assignment", assignment_path,
                   "JSON file with a 'generators' object (used with --target file)");
    vg->add_option("--format", vg_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // decompose
    std::string rep_spec;
    std::string group;
    std::string dc_format = "text";
    auto* dc = app.add_subcommand("decompose",
                                  "Eigenspace levels of a representation; optional symmetric "
                                  "group decomposition");
    dc->add_option("--rep", rep_spec,
                   "Built-in name (standard, dual, det, sym2, sym2dual, '+'-sums) or a JSON "
                   "file")
        ->required();
    dc->add_option("--group", group, "s3 or s4")->check(CLI::IsMember({"s3", "s4"}));
    dc->add_option("--format", dc_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // diagram
    std::string dg_rep, dg_element;
    std::string dg_format = "text";
    auto* dg = app.add_subcommand("diagram", "Minimal diagram of a group element");
    dg->add_option("--rep", dg_rep, "Representation name or JSON file")->required();
    dg->add_option("--element", dg_element, "Generator word")->required();
    dg->add_option("--format", dg_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // torelli
    int samples = 100;
    std::uint64_t seed = 0;
    std::string tl_format = "text";
    auto* tl = app.add_subcommand("torelli",
                                  "Span closures under the congruence generators on the "
                                  "6-dimensional module");
    tl->add_option("--samples", samples, "Number of random probe vectors (default 100)");
    tl->add_option("--seed", seed, "Random seed (default 0)");
    tl->add_option("--format", tl_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // admissible
    std::string graph_path, action_path;
    auto* ad = app.add_subcommand("admissible",
                                  "Check a graph with a group action for invariant forests");
    ad->add_option("--graph", graph_path, "Graph file: 'vertex <name>' / 'edge <name> <iota> "
                                          "<tau>' lines")
        ->required();
    ad->add_option("--action", action_path,
                   "Action file: 'gen <name>: v a->b ...; e x->y[+|-] ...' lines")
        ->required();

    // identities
    app.add_subcommand("identities", "Verify the curated outer-automorphism identity list");

    std::vector<std::string> argv_copy = args;
    std::reverse(argv_copy.begin(), argv_copy.end());  // CLI11 wants reversed argv
    try {
        app.parse(argv_copy);
    } catch (const CLI::CallForHelp& e) {
        outcome.exit_code = 0;
        outcome.text = app.help();
        return outcome;
    } catch (const CLI::ParseError& e) {
        outcome.exit_code = 2;
        outcome.text = std::string(e.what()) + "\n\n" + app.help();
        return outcome;
    }

    try {
        if (ct->parsed())
            outcome.exit_code = run_case_table(reduced, rank_bound, group_order, ct_format, outcome);
        else if (vg->parsed())
            outcome.exit_code = run_verify_gersten(target, assignment_path, vg_format, outcome);
        else if (dc->parsed())
            outcome.exit_code = run_decompose(rep_spec, group, dc_format, outcome);
        else if (dg->parsed())
            outcome.exit_code = run_diagram(dg_rep, dg_element, dg_format, outcome);
        else if (tl->parsed())
            outcome.exit_code = run_torelli(samples, seed, tl_format, outcome);
        else if (ad->parsed())
            outcome.exit_code = run_admissible(graph_path, action_path, outcome);
        else
            outcome.exit_code = run_identities(outcome);
    } catch (const ParseError& e) {
        outcome.exit_code = 2;
        outcome.text = std::string("input error: ") + e.what() + "\n";
    } catch (const Error& e) {
        outcome.exit_code = 2;
        outcome.text = std::string("error: ") + e.what() + "\n";
    }
    return outcome;
}

}  // namespace outf3::cli
