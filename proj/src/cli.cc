#include <gskit/cli.hh>
#include <gskit/construct.hh>
#include <gskit/core.hh>
#include <gskit/satgen.hh>
#include <gskit/search.hh>
#include <gskit/structure.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

using std::istream;
using std::optional;
using std::ostream;
using std::string;
using std::vector;

using json = nlohmann::ordered_json;

namespace gskit
{
    namespace
    {
        class UsageError : public std::runtime_error
        {
        public:
            using std::runtime_error::runtime_error;
        };

        auto slurp(istream & in) -> string
        {
            return string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        }

        /// "-" is stdin, an existing path is read as a file, anything else is inline text.
        auto read_input(const string & arg, istream & in) -> string
        {
            if (arg == "-")
                return slurp(in);
            std::error_code ec;
            if (std::filesystem::is_regular_file(arg, ec)) {
                std::ifstream file(arg, std::ios::binary);
                if (! file)
                    throw UsageError("cannot open " + arg);
                return slurp(file);
            }
            return arg;
        }

        auto violation_json(const Violation & v) -> json
        {
            json j;
            j["class"] = violation_class_name(v.cls);
            j["triple"] = v.triple ? json::array({v.triple->a, v.triple->b, v.triple->c}) : json(nullptr);
            j["color"] = v.color ? json(*v.color) : json(nullptr);
            j["position"] = v.position ? json(*v.position) : json(nullptr);
            return j;
        }

        auto default_workers() -> int
        {
            if (const char * env = std::getenv("GSKIT_WORKERS")) {
                try {
                    int w = std::stoi(env);
                    if (w >= 1)
                        return w;
                }
                catch (const std::exception &) {
                }
            }
            return 1;
        }

        struct Common
        {
            string kind = "strong";
            bool json = false;
        };

        auto apply_token(const string & token, const Coloring & c) -> Coloring
        {
            if (token == "2")
                return theta2(c);
            if (token == "5")
                return theta5(c);
            if (token == "inv2")
                return inverse_theta2(c);
            if (token == "inv5")
                return inverse_theta5(c);
            throw UsageError("unknown mapping '" + token + "' (expected 2, 5, inv2 or inv5)");
        }
    }

    auto run_cli(const vector<string> & args, istream & in, ostream & out, ostream & err) -> ExitStatus
    {
        CLI::App app{"Gallai-Schur partitions: verify, construct, decompose, search, encode", "gskit"};
        app.require_subcommand(1);
        app.set_help_all_flag("--help-all");

        auto kind_check = CLI::IsMember({"strong", "weak"});

        // verify
        auto * verify = app.add_subcommand("verify", "check a coloring for the (weak) Gallai-Schur property");
        string verify_input;
        Common verify_opts;
        bool all_witnesses = false;
        verify->add_option("input", verify_input, "compact digit string, file path, or - for stdin")->required();
        auto * verify_kind = verify->add_option("--kind", verify_opts.kind, "strong or weak")->check(kind_check);
        verify->add_flag("--all-witnesses", all_witnesses, "report every violation");
        verify->add_flag("--json", verify_opts.json);

        // table
        auto * table = app.add_subcommand("table", "closed-form GS(r) and WGS(r)");
        string table_kind = "strong";
        int max_r = 6;
        bool table_json = false;
        table->add_option("--kind", table_kind, "strong, weak or both")->check(CLI::IsMember({"strong", "weak", "both"}));
        table->add_option("--max-r", max_r);
        table->add_flag("--json", table_json);

        // construct
        auto * construct = app.add_subcommand("construct", "apply TwoFold / FiveFold mappings");
        string base_arg;
        vector<string> apply;
        optional<int> maximal_r;
        Common construct_opts;
        string format = "compact";
        construct->add_option("--base", base_arg, "B1, B2, B3A, B3B, C1, C2, C3, or a coloring");
        construct->add_option("--apply", apply, "mappings applied left to right: 2, 5, inv2, inv5");
        construct->add_option("--maximal", maximal_r, "start from the maximal partition for r colors");
        construct->add_option("--kind", construct_opts.kind)->check(kind_check);
        construct->add_option("--format", format)->check(CLI::IsMember({"compact", "file"}));
        construct->add_flag("--json", construct_opts.json);

        // decompose
        auto * decompose = app.add_subcommand("decompose", "peel mappings until a base partition remains");
        string decompose_input;
        bool decompose_json = false, do_canonicalize = false;
        decompose->add_option("input", decompose_input)->required();
        decompose->add_flag("--canonicalize", do_canonicalize, "relabel non-canonical input first");
        decompose->add_flag("--json", decompose_json);

        // search
        auto * search = app.add_subcommand("search", "exhaustive backtracking search");
        Common search_opts;
        int search_r = 0;
        optional<int> search_n;
        bool want_max_order = false, want_enumerate = false;
        int limit = 255;
        SearchOptions options;
        options.workers = default_workers();
        optional<std::uint64_t> budget;
        optional<double> time_budget;
        search->add_option("--kind", search_opts.kind)->check(kind_check);
        search->add_option("--r", search_r)->required()->check(CLI::Range(1, max_search_colors));
        search->add_option("--n", search_n)->check(CLI::Range(1, max_search_order));
        search->add_flag("--max-order", want_max_order, "find the largest feasible order");
        search->add_flag("--enumerate", want_enumerate, "list every canonical partition (of order n, or of maximal order)");
        search->add_option("--limit", limit, "largest order examined by --max-order")->check(CLI::Range(1, max_search_order));
        search->add_option("--streak", options.infeasibility_streak, "infeasible orders needed to confirm a maximum")
            ->check(CLI::PositiveNumber);
        search->add_option("--workers", options.workers, "worker threads (default $GSKIT_WORKERS or 1)")->check(CLI::PositiveNumber);
        search->add_option("--split-depth", options.split_depth)->check(CLI::NonNegativeNumber);
        search->add_option("--budget", budget, "node budget")->check(CLI::PositiveNumber);
        search->add_option("--time-budget", time_budget, "wall-clock budget in seconds")->check(CLI::PositiveNumber);
        search->add_flag("--json", search_opts.json);

        // cnf
        auto * cnf = app.add_subcommand("cnf", "DIMACS encoding and model decoding");
        cnf->require_subcommand(1);
        int cnf_n = 0, cnf_r = 0;
        string cnf_kind = "strong", model_input = "-";
        bool symmetry = false;
        auto add_cnf_shape = [&](CLI::App * sub) {
            sub->add_option("--n", cnf_n)->required()->check(CLI::PositiveNumber);
            sub->add_option("--r", cnf_r)->required()->check(CLI::PositiveNumber);
            sub->add_option("--kind", cnf_kind)->check(kind_check);
        };
        auto * encode_cmd = cnf->add_subcommand("encode", "write the CNF to stdout");
        add_cnf_shape(encode_cmd);
        encode_cmd->add_flag("--symmetry", symmetry, "add first-occurrence symmetry breaking");
        auto * census_cmd = cnf->add_subcommand("census", "count clauses by class");
        add_cnf_shape(census_cmd);
        census_cmd->add_flag("--symmetry", symmetry);
        auto * decode_cmd = cnf->add_subcommand("decode", "turn solver output into a coloring");
        add_cnf_shape(decode_cmd);
        decode_cmd->add_option("model", model_input, "solver output file, or - for stdin");

        try {
            vector<string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::CallForHelp &) {
            out << app.help();
            return ExitStatus::Ok;
        }
        catch (const CLI::CallForAllHelp &) {
            out << app.help("", CLI::AppFormatMode::All);
            return ExitStatus::Ok;
        }
        catch (const CLI::ParseError & e) {
            err << "gskit: " << e.what() << "\n";
            return ExitStatus::UsageError;
        }

        try {
            if (verify->parsed()) {
                string text = read_input(verify_input, in);
                auto mode = all_witnesses ? CheckMode::Exhaustive : CheckMode::FirstWitness;
                Verdict verdict;
                string shown;
                Kind kind = parse_kind(verify_opts.kind);
                if (is_file_form(text)) {
                    auto file = parse_partition_file(text);
                    if (verify_kind->count() == 0)
                        kind = file.kind;
                    verdict = check_entries(file.entries, file.r, kind, mode);
                    shown = "file n=" + std::to_string(file.entries.size()) + " r=" + std::to_string(file.r);
                }
                else {
                    auto c = parse_coloring(text);
                    verdict = check_partition(c, kind, mode);
                    shown = to_display_string(c);
                }

                if (verify_opts.json) {
                    json j;
                    j["input"] = shown;
                    j["kind"] = kind_name(kind);
                    j["ok"] = verdict.ok;
                    j["violations"] = json::array();
                    for (auto & v : verdict.violations)
                        j["violations"].push_back(violation_json(v));
                    out << j.dump() << "\n";
                }
                else if (verdict.ok)
                    out << "ok\n";
                else
                    for (auto & v : verdict.violations)
                        out << describe(v) << "\n";
                return verdict.ok ? ExitStatus::Ok : ExitStatus::Refuted;
            }

            if (table->parsed()) {
                if (max_r < 1)
                    throw UsageError("--max-r must be at least 1");
                vector<Kind> kinds;
                if (table_kind != "weak")
                    kinds.push_back(Kind::Strong);
                if (table_kind != "strong")
                    kinds.push_back(Kind::Weak);

                if (table_json) {
                    json rows = json::array();
                    for (int r = 1; r <= max_r; ++r) {
                        json row;
                        row["r"] = r;
                        for (auto k : kinds)
                            row[k == Kind::Strong ? "GS" : "WGS"] = gs_number(r, k).value;
                        rows.push_back(row);
                    }
                    out << rows.dump() << "\n";
                }
                else {
                    out << "r";
                    for (auto k : kinds)
                        out << "\t" << (k == Kind::Strong ? "GS(r)" : "WGS(r)");
                    out << "\n";
                    for (int r = 1; r <= max_r; ++r) {
                        out << r;
                        for (auto k : kinds)
                            out << "\t" << gs_number(r, k).value;
                        out << "\n";
                    }
                }
                return ExitStatus::Ok;
            }

            if (construct->parsed()) {
                Kind kind = parse_kind(construct_opts.kind);
                optional<Coloring> current;
                if (maximal_r) {
                    if (! base_arg.empty())
                        throw UsageError("--base and --maximal are mutually exclusive");
                    if (*maximal_r < 1)
                        throw UsageError("--maximal needs r >= 1");
                    current = maximal_partition(*maximal_r, kind);
                }
                else if (! base_arg.empty()) {
                    try {
                        current = base_by_name(base_arg).coloring;
                    }
                    catch (const std::invalid_argument &) {
                        current = parse_coloring(read_input(base_arg, in));
                    }
                }
                else
                    throw UsageError("construct needs --base or --maximal");

                for (auto & token : apply) {
                    try {
                        current = apply_token(token, *current);
                    }
                    catch (const StructuralPatternError & e) {
                        err << "gskit: " << e.what() << "\n";
                        return ExitStatus::Refuted;
                    }
                }

                if (construct_opts.json) {
                    json j;
                    j["coloring"] = to_display_string(*current);
                    j["n"] = current->order();
                    j["r"] = current->num_colors();
                    out << j.dump() << "\n";
                }
                else if (format == "file")
                    out << format_partition_file(*current, kind);
                else
                    out << to_display_string(*current) << "\n";
                return ExitStatus::Ok;
            }

            if (decompose->parsed()) {
                auto c = parse_coloring(read_input(decompose_input, in));
                if (! is_canonical(c)) {
                    if (! do_canonicalize)
                        throw UsageError("input is not canonical (canonical form " + to_display_string(canonicalize(c)) +
                            "); pass --canonicalize to relabel");
                    c = canonicalize(c);
                }
                auto d = decompose_full(c);
                if (decompose_json) {
                    json j;
                    j["base"] = to_display_string(d.base);
                    j["tags"] = json::array();
                    for (auto t : d.tags)
                        j["tags"].push_back(tag_name(t));
                    j["original_order"] = d.original_order;
                    out << j.dump() << "\n";
                }
                else
                    out << format_decomposition(d) << "\n";
                return ExitStatus::Ok;
            }

            if (search->parsed()) {
                Kind kind = parse_kind(search_opts.kind);
                options.node_budget = budget;
                if (time_budget)
                    options.wall_budget = std::chrono::milliseconds(static_cast<long long>(*time_budget * 1000));
                int picked = (want_max_order ? 1 : 0) + (search_n ? 1 : 0);
                if (picked != 1 && ! (want_enumerate && ! want_max_order))
                    throw UsageError("search needs exactly one of --n or --max-order (or --enumerate alone)");

                if (want_max_order) {
                    auto report = max_order(kind, search_r, limit, options);
                    if (search_opts.json)
                        out << report_to_json(report) << "\n";
                    else {
                        out << "m_max " << report.m_max << (report.confirmed ? " confirmed" : " unconfirmed")
                            << " (streak " << report.streak << ", limit " << report.limit << ", nodes " << report.nodes_explored
                            << ")\n";
                        if (! report.exhausted)
                            out << "budget exhausted\n";
                    }
                    return report.confirmed ? ExitStatus::Ok : ExitStatus::Inconclusive;
                }

                if (! search_n) {
                    try {
                        auto found = enumerate_maximal(kind, search_r, options);
                        if (search_opts.json) {
                            json j;
                            j["kind"] = kind_name(kind);
                            j["r"] = search_r;
                            j["n"] = found.empty() ? 0 : found.front().order();
                            j["witnesses"] = json::array();
                            for (auto & w : found)
                                j["witnesses"].push_back(to_display_string(w));
                            out << j.dump() << "\n";
                        }
                        else {
                            out << found.size() << " maximal partition" << (found.size() == 1 ? "" : "s") << " of order "
                                << (found.empty() ? 0 : found.front().order()) << "\n";
                            for (auto & w : found)
                                out << to_display_string(w) << "\n";
                        }
                        return found.empty() ? ExitStatus::Refuted : ExitStatus::Ok;
                    }
                    catch (const PartialEnumeration & e) {
                        err << "gskit: " << e.what() << " (" << e.found().size() << " found so far)\n";
                        return ExitStatus::Inconclusive;
                    }
                }

                SearchConfig cfg{kind, search_r, *search_n, want_enumerate ? SearchMode::EnumerateAll : SearchMode::FirstWitness,
                    options};
                auto report = exists_partition(cfg);
                if (search_opts.json)
                    out << report_to_json(report) << "\n";
                else {
                    if (report.witnesses.empty())
                        out << (report.exhausted ? "infeasible" : "inconclusive: budget exhausted") << "\n";
                    else if (cfg.mode == SearchMode::FirstWitness)
                        out << "witness " << to_display_string(report.witnesses.front()) << "\n";
                    else {
                        out << report.witnesses.size() << " partition" << (report.witnesses.size() == 1 ? "" : "s")
                            << (report.exhausted ? "" : " (budget exhausted, incomplete)") << "\n";
                        for (auto & w : report.witnesses)
                            out << to_display_string(w) << "\n";
                    }
                    out << "nodes " << report.nodes_explored << "\n";
                }
                if (! report.exhausted && (cfg.mode == SearchMode::EnumerateAll || report.witnesses.empty()))
                    return ExitStatus::Inconclusive;
                return report.witnesses.empty() ? ExitStatus::Refuted : ExitStatus::Ok;
            }

            if (encode_cmd->parsed()) {
                out << to_dimacs(encode(cnf_n, cnf_r, parse_kind(cnf_kind), symmetry));
                return ExitStatus::Ok;
            }

            if (census_cmd->parsed()) {
                auto census = clause_census(encode(cnf_n, cnf_r, parse_kind(cnf_kind), symmetry));
                out << "one-color " << census.one_color << "\nmonochromatic " << census.monochromatic << "\nrainbow "
                    << census.rainbow << "\ncolor-used " << census.color_used << "\nsymmetry " << census.symmetry << "\ntotal "
                    << census.total() << "\n";
                return ExitStatus::Ok;
            }

            if (decode_cmd->parsed()) {
                auto solver = parse_solver_output(read_input(model_input, in));
                if (solver.satisfiable == false) {
                    out << "unsatisfiable\n";
                    return ExitStatus::Refuted;
                }
                auto c = decode(solver.literals, cnf_n, cnf_r);
                out << to_display_string(c) << "\n";
                auto verdict = check_partition(c, parse_kind(cnf_kind));
                if (! verdict.ok) {
                    err << "gskit: decoded coloring is not a partition: " << describe(verdict.violations.front()) << "\n";
                    return ExitStatus::Refuted;
                }
                return ExitStatus::Ok;
            }
        }
        catch (const UsageError & e) {
            err << "gskit: " << e.what() << "\n";
            return ExitStatus::UsageError;
        }
        catch (const ParseError & e) {
            err << "gskit: " << e.what() << "\n";
            return ExitStatus::UsageError;
        }
        catch (const DecodeError & e) {
            err << "gskit: " << e.what() << "\n";
            return ExitStatus::UsageError;
        }
        catch (const std::exception & e) {
            err << "gskit: " << e.what() << "\n";
            return ExitStatus::UsageError;
        }

        return ExitStatus::UsageError;
    }
}
