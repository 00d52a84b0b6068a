#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latcode/codes.hpp"
#include "latcode/rootlattices.hpp"

namespace latcode {

/// Named codes used by the table harness and the tests. Codes whose
/// generator matrices come from the source tables are transcribed verbatim;
/// the classical named codes (Golay, tetracode, octacode, hexacode, ...)
/// are standard matrices from the literature, re-validated by the
/// self-duality and type predicates before use.
Code fixture_code(const std::string& name);
std::vector<std::string> fixture_names();

/// One row of the reproduction tables: construct Gamma_C for (spec, code)
/// and compare the computed root-system label against the published one.
struct TableRow {
    std::string table;          // e.g. "A1/Z2", "D4/F2xF2"
    std::string code_name;      // e.g. "G24", "CRT(C6_1,C6_1-dual)"
    RootLatticeSpec spec;
    std::optional<std::string> fixture;  // fixture to build, absent -> SKIP
    std::string expected_label;          // published label, table notation
    std::string citation;                // provenance of the matrix, or why skipped
};
const std::vector<TableRow>& table_rows();

/// Materialize the code for a row (resolves CRT(...) fixtures).
Code table_row_code(const TableRow& row);

}  // namespace latcode
