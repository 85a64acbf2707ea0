#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "sincov/atlas.hpp"
#include "sincov/flows.hpp"

namespace sincov::cli
{

namespace
{

CommandResult malformed(std::string message)
{
    return CommandResult{exit_malformed, nullptr, std::move(message)};
}

io::json indices_json(std::set<IndexId> const& ids)
{
    io::json out = io::json::array();
    for (auto const& id : ids)
        out.push_back(id.str());
    return out;
}

io::json invalid_atlas_json(InvalidAtlas const& e)
{
    return io::json{{"error", "InvalidAtlas"}, {"violation", io::to_json(e.violation())}};
}

// Atlases read from files must be validated before use.
std::optional<CommandResult> reject_invalid(Atlas const& atlas, int which)
{
    auto violations = validate_atlas(atlas);
    if (violations.empty())
        return std::nullopt;
    io::json payload{{"error", "InvalidAtlas"}, {"violation", io::to_json(violations.front())}};
    if (which)
        payload["atlas"] = which;
    return CommandResult{exit_violated, std::move(payload),
                         "chart '" + violations.front().index.str() + "' is not a bijection"};
}

std::string read_input(std::string const& path, std::istream& in)
{
    if (path == "-")
        return std::string(std::istreambuf_iterator<char>(in), {});
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw ParseError("cannot open '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(file), {});
}

} // namespace

CommandResult cmd_check(io::json const& system_doc, LawFilter laws)
{
    try {
        auto const system = io::system_from_json(system_doc);
        auto const violations = check_sincov(system, laws);
        return CommandResult{violations.empty() ? exit_ok : exit_violated,
                             io::json{{"violations", io::to_json(violations)}},
                             {}};
    } catch (ParseError const& e) {
        return malformed(e.what());
    }
}

CommandResult cmd_solve(io::json const& system_doc, std::optional<IndexId> gamma)
{
    SincovSystem system;
    try {
        system = io::system_from_json(system_doc);
    } catch (ParseError const& e) {
        return malformed(e.what());
    }

    try {
        if (gamma)
            return CommandResult{exit_ok, io::to_json(solve_via_fixed_index(system, *gamma)), {}};
        return CommandResult{exit_ok, io::to_json(solve_atlas(system)), {}};
    } catch (PreconditionViolated const& e) {
        return CommandResult{
            exit_violated,
            io::json{{"error", "PreconditionViolated"}, {"violations", io::to_json(e.violations())}},
            e.what()};
    } catch (EqualityCaseViolated const& e) {
        io::json indices = io::json::array();
        for (auto const& id : e.indices())
            indices.push_back(id.str());
        io::json payload{{"error", "EqualityCaseViolated"},
                         {"law", to_string(e.law())},
                         {"indices", std::move(indices)}};
        if (e.pair())
            payload["pair"] = io::json::array({e.pair()->first.str(), e.pair()->second.str()});
        return CommandResult{exit_violated, std::move(payload), e.what()};
    } catch (UnknownIndex const& e) {
        return malformed(e.what());
    }
}

CommandResult cmd_reconstruct(io::json const& atlas_doc)
{
    try {
        auto const atlas = io::atlas_from_json(atlas_doc);
        return CommandResult{exit_ok, io::to_json(reconstruct(atlas)), {}};
    } catch (ParseError const& e) {
        return malformed(e.what());
    } catch (InvalidAtlas const& e) {
        return CommandResult{exit_violated, invalid_atlas_json(e), e.what()};
    }
}

CommandResult cmd_iso(io::json const& atlas_doc_1, io::json const& atlas_doc_2)
{
    Atlas a1, a2;
    try {
        a1 = io::atlas_from_json(atlas_doc_1);
        a2 = io::atlas_from_json(atlas_doc_2);
    } catch (ParseError const& e) {
        return malformed(e.what());
    }
    if (auto rejected = reject_invalid(a1, 1))
        return *rejected;
    if (auto rejected = reject_invalid(a2, 2))
        return *rejected;

    try {
        return CommandResult{exit_ok, io::to_json(find_isomorphism(a1, a2)), {}};
    } catch (NotIsomorphic const& e) {
        return CommandResult{exit_violated,
                             io::json{{"error", "NotIsomorphic"},
                                      {"witness", io::to_json(e.witness())}},
                             e.what()};
    } catch (IndexMismatch const& e) {
        return CommandResult{exit_violated,
                             io::json{{"error", "IndexMismatch"},
                                      {"only_first", indices_json(e.only_first())},
                                      {"only_second", indices_json(e.only_second())}},
                             e.what()};
    }
}

CommandResult cmd_axioms(io::json const& atlas_doc)
{
    try {
        auto const report = check_at_axioms(io::atlas_from_json(atlas_doc));
        return CommandResult{report.pass() ? exit_ok : exit_violated, io::to_json(report), {}};
    } catch (ParseError const& e) {
        return malformed(e.what());
    }
}

CommandResult cmd_flow_gen(io::json const& flow_doc)
{
    try {
        auto const flow = io::flow_from_json(flow_doc);
        return CommandResult{exit_ok, io::to_json(build_system(flow.spec, flow.grid, flow.seeds)),
                             {}};
    } catch (ParseError const& e) {
        return malformed(e.what());
    } catch (KindMismatch const& e) {
        return malformed(e.what());
    } catch (InvalidFlow const& e) {
        return malformed(e.what());
    } catch (DomainExceeded const& e) {
        return malformed(e.what());
    }
}

LawFilter parse_laws(std::string const& list)
{
    LawFilter filter{false, false, false};
    std::stringstream stream(list);
    std::string name;
    bool any = false;
    while (std::getline(stream, name, ',')) {
        if (name == "transitivity")
            filter.transitivity = true;
        else if (name == "symmetry")
            filter.symmetry = true;
        else if (name == "identity")
            filter.identity = true;
        else
            throw ParseError("unknown law '" + name + "'");
        any = true;
    }
    if (!any)
        throw ParseError("empty --laws list");
    return filter;
}

int run(std::vector<std::string> const& args, std::istream& in, std::ostream& out,
        std::ostream& err)
{
    CLI::App app{"Solve and verify Sincov's inequality for finite relation systems", "sincov"};
    app.require_subcommand(1);

    bool pretty = false;
    app.add_flag("--pretty", pretty, "Indented output instead of canonical JSON");

    std::string input, second_input, laws, gamma;

    auto* check = app.add_subcommand("check", "Check the three containments of a system");
    check->add_option("system", input, "System JSON file or - for stdin")->required();
    check->add_option("--laws", laws, "Comma-separated subset of transitivity,symmetry,identity");

    auto* solve = app.add_subcommand("solve", "Construct the generating atlas of a system");
    solve->add_option("system", input, "System JSON file or - for stdin")->required();
    solve->add_option("--gamma", gamma, "Use the equality-case solver with this fixed index");

    auto* rebuild = app.add_subcommand("reconstruct", "Rebuild the system induced by an atlas");
    rebuild->add_option("atlas", input, "Atlas JSON file or - for stdin")->required();

    auto* iso = app.add_subcommand("iso", "Find the isomorphism between two atlases");
    iso->add_option("atlas1", input, "First atlas JSON file")->required();
    iso->add_option("atlas2", second_input, "Second atlas JSON file")->required();

    auto* axioms = app.add_subcommand("axioms", "Check the set-level atlas axioms");
    axioms->add_option("atlas", input, "Atlas JSON file or - for stdin")->required();

    auto* flow = app.add_subcommand("flow-gen", "Generate a system from a flow descriptor");
    flow->add_option("flow", input, "Flow descriptor JSON file or - for stdin")->required();

    for (auto* sub : app.get_subcommands({}))
        sub->fallthrough();

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (CLI::ParseError const& e) {
        int const code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_malformed;
    }

    CommandResult result;
    try {
        if (input == "-" && second_input == "-")
            throw ParseError("only one input can be read from stdin");
        auto const doc = io::parse(read_input(input, in));

        if (check->parsed())
            result = cmd_check(doc, laws.empty() ? LawFilter{} : parse_laws(laws));
        else if (solve->parsed())
            result = cmd_solve(doc, gamma.empty() ? std::nullopt
                                                  : std::optional<IndexId>(IndexId(gamma)));
        else if (rebuild->parsed())
            result = cmd_reconstruct(doc);
        else if (iso->parsed())
            result = cmd_iso(doc, io::parse(read_input(second_input, in)));
        else if (axioms->parsed())
            result = cmd_axioms(doc);
        else
            result = cmd_flow_gen(doc);
    } catch (ParseError const& e) {
        result = malformed(e.what());
    }

    if (!result.diagnostic.empty())
        err << "sincov: " << result.diagnostic << '\n';
    if (!result.payload.is_null())
        out << (pretty ? result.payload.dump(2) : io::canonical(result.payload)) << '\n';
    return result.exit_code;
}

} // namespace sincov::cli
