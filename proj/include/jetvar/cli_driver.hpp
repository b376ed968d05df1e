#pragma once

#include <string>
#include <vector>

namespace jetvar {

/// One CLI invocation: signature flags plus a subcommand and its input
/// expressions. Forms subcommands are spelled "forms-delta" etc.
struct CliRequest {
    std::vector<std::string> coords{"x"};
    std::vector<std::string> fields{"u"};
    std::string subcommand;
    std::vector<std::string> expressions;
    std::string direction;  // dtotal only
    bool json = false;
    int max_order = 12;
};

struct ResidualEntry {
    std::string i;
    std::string j;
    std::string multiindex;
    std::string coefficient;

    bool operator==(const ResidualEntry&) const = default;
};

/// Result of a request. Serializes both human-readably and as a structured
/// JSON document; the JSON round-trips losslessly.
///
/// Exit status contract: 0 success / variational / zero; 1 definite
/// negative verdict (certificate included); 2 usage or parse error.
struct CliResponse {
    int exit_status = 0;
    std::string subcommand;
    std::string verdict;  // variational|not-variational|zero|nonzero|not-closed|ok|error
    std::vector<std::string> expressions;
    std::vector<ResidualEntry> residual;
    std::string witness;
    std::string message;

    bool operator==(const CliResponse&) const = default;
};

CliResponse run(const CliRequest& request);

std::string render_human(const CliResponse& response);
std::string render_json(const CliResponse& response);
CliResponse response_from_json(const std::string& doc);

}  // namespace jetvar
