#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twistroot/classify.hpp"
#include "twistroot/json_io.hpp"

namespace twistroot {

// One printed classification row: a degree plus the component data sets in
// column order, exactly as the source table displays them.
struct TableRow {
    i64 degree = 1;
    std::vector<DataSet> entries;

    auto operator<=>(const TableRow&) const = default;
    std::string str() const;
};

struct GoldenTable {
    std::string id;
    std::string caption;
    MulticurveSpec spec;
    std::vector<std::string> columns;  // component selectors, e.g. "n0", "n0.s0"
    bool symmetric = false;            // rows compared up to reversal
    std::vector<TableRow> rows;        // as printed (including defective rows)
};

enum class ErratumKind { InvalidRow, OmittedRow, DuplicateRow };

struct Erratum {
    std::string table;
    ErratumKind kind;
    TableRow row;                      // printed row (Invalid/Duplicate) or computed row (Omitted)
    std::string violated;              // the violated validity invariant / satisfied conditions
    std::string explanation;
    std::optional<TableRow> corrected; // computed row replacing an invalid printed row
};

struct TableIndex {
    std::map<std::string, GoldenTable> tables;
    std::vector<Erratum> errata;
};

// Loads every *.json table under `dir` (recursively) plus `dir`/errata.json.
// `dir` resolution order: explicit argument, TWISTROOT_TABLES, "./tables".
TableIndex load_tables(const std::filesystem::path& dir);
std::filesystem::path default_table_dir(const std::string& override_dir = "");

struct RowOutcome {
    TableRow row;
    bool explained = false;
    std::string note;  // errata reference when explained
};

struct TableReport {
    std::string id;
    i64 printed = 0;
    i64 matched = 0;
    std::vector<TableRow> matched_rows;
    std::vector<RowOutcome> missing;   // printed but not computed
    std::vector<RowOutcome> extra;     // computed but not printed
    i64 errata_hits = 0;
    bool clean() const;                // no unexplained discrepancy
    std::string summary() const;
};

// Runs the classifier for the table's spec and adjudicates the comparison
// against the printed rows using the errata list.
TableReport reproduce_table(const GoldenTable& table, const std::vector<Erratum>& errata,
                            const ClassifyOptions& opts = {});

// Projection of classifier output onto printed-row form for a table.
std::vector<TableRow> project_records(const GoldenTable& table,
                                      const std::vector<RootClassRecord>& records);

// Normalized row representative (reversal applied for symmetric tables).
TableRow normalize_row(const GoldenTable& table, TableRow row);

// Static diagnosis of a printed row against the table's decomposition:
// per-entry data-set validity, component genus and residue bookkeeping,
// degree consistency.  Returns an empty string when nothing static fails.
std::string diagnose_row(const GoldenTable& table, const TableRow& row);

// Draft errata entries (one per unexplained discrepancy) for review.
json draft_errata(const GoldenTable& table, const TableReport& report);

}  // namespace twistroot
