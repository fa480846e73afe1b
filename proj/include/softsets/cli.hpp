#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "softsets/io.hpp"

namespace softsets {

// Runs one command line (without the program name). Returns the process exit code:
// 0 success, 1 validation violations, 2 schema, I/O or usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Evaluates a query key against a document. Throws KindMismatch for kinds without queries.
json evaluate(const Document& doc, const json& key);

json ranking_json(const RankingResult& result);

// Flattened `path  value` lines, one per leaf, with the value column aligned.
std::string render_table(const json& report);

}  // namespace softsets
