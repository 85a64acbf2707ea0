#ifndef SINCOV_TOOLS_CLI_HPP
#define SINCOV_TOOLS_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sincov/io.hpp"
#include "sincov/sincov.hpp"

namespace sincov::cli
{

enum ExitCode : int
{
    exit_ok = 0,
    exit_violated = 1, // laws violated, not isomorphic, invalid atlas
    exit_malformed = 2,
};

struct CommandResult
{
    int exit_code = exit_ok;
    io::json payload; // null when there is nothing to print
    std::string diagnostic;
};

CommandResult cmd_check(io::json const& system_doc, LawFilter laws = {});
CommandResult cmd_solve(io::json const& system_doc, std::optional<IndexId> gamma = {});
CommandResult cmd_reconstruct(io::json const& atlas_doc);
CommandResult cmd_iso(io::json const& atlas_doc_1, io::json const& atlas_doc_2);
CommandResult cmd_axioms(io::json const& atlas_doc);
CommandResult cmd_flow_gen(io::json const& flow_doc);

// Parses "transitivity,symmetry,identity" (any non-empty subset). Throws
// ParseError.
LawFilter parse_laws(std::string const& list);

// Full command line without the program name. Inputs named "-" are read from
// `in`; the payload goes to `out` and diagnostics to `err`.
int run(std::vector<std::string> const& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace sincov::cli

#endif // SINCOV_TOOLS_CLI_HPP
