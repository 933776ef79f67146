#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "germlab/detideal.hpp"
#include "germlab/jetlin.hpp"

namespace germlab {

struct ParamRange {
    std::string name;
    long long min = 0;
    std::optional<long long> max;  // absent: unbounded
};

// One row family of a classification table. Matrix entries and expected
// values are templates: "{expr}" is replaced by the integer value of expr in
// the row parameters.
struct TableRow {
    std::string table;
    std::string name;
    std::string origin;
    std::vector<std::string> vars;
    std::string kind = "general";
    std::vector<std::string> matrix;  // "[ e1, e2 ]" per row
    std::vector<ParamRange> params;
    std::vector<std::string> where;   // "k <= l", "k < l", "k != l", ...
    std::vector<std::pair<std::string, std::string>> expected;
    std::vector<std::string> checks;
    std::vector<std::pair<std::string, std::string>> recorded;  // column -> "value | reason"
    std::vector<std::string> notes;
    int line = 0;  // first line of the record in its source
};

using ParamValues = std::map<std::string, long long>;

// Throws std::invalid_argument with a "source:line:" locator.
std::vector<TableRow> parse_tables(const std::string& text, const std::string& source = "<text>");
std::vector<TableRow> load_tables(const std::string& path);
std::string format_tables(const std::vector<TableRow>& rows);
void save_tables(const std::string& path, const std::vector<TableRow>& rows);

// Known check kinds and the expected columns each one reads.
const std::map<std::string, std::vector<std::string>>& check_columns();

std::string substitute_braces(const std::string& templ, const ParamValues& params);
// All admissible tuples with every parameter capped at bound, in lexicographic order.
std::vector<ParamValues> parameter_tuples(const TableRow& row, long long bound);
MatrixGerm instantiate(const TableRow& row, const ParamValues& params);
// Value of an expected integer column.
long long expected_int(const TableRow& row, const std::string& column, const ParamValues& params);

enum class Outcome { Pass, Fail, Skipped };
std::string outcome_name(Outcome o);

struct CheckOutcome {
    std::string table;
    std::string row;
    ParamValues params;
    std::string check;
    Outcome outcome = Outcome::Pass;
    std::string expected;
    std::string got;
    std::string reason;
    double seconds = 0;
};

struct VerificationReport {
    std::vector<CheckOutcome> outcomes;
    int passed = 0, failed = 0, skipped = 0;
    double seconds = 0;
};

struct VerifyOptions {
    long long param_bound = 4;
    int jobs = 1;
    ColengthOptions colength;
};

// Runs one check on one instance.
CheckOutcome run_check(const TableRow& row, const ParamValues& params, const std::string& check,
                       const ColengthOptions& opt = {});

VerificationReport verify(const std::vector<TableRow>& rows, const VerifyOptions& opt = {});

std::string params_string(const ParamValues& p);

}  // namespace germlab
