#include "twistroot/tables.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace twistroot {

std::string TableRow::str() const {
    std::ostringstream os;
    os << degree << ":";
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i) os << " | ";
        os << entries[i].str();
    }
    return os.str();
}

namespace {

TableRow row_from_json(const json& j) {
    TableRow row;
    row.degree = j.at("degree").get<i64>();
    for (const auto& e : j.at("entries")) row.entries.push_back(dataset_from_json(e));
    return row;
}

ErratumKind kind_from_string(const std::string& s) {
    if (s == "invalid-row") return ErratumKind::InvalidRow;
    if (s == "omitted-row") return ErratumKind::OmittedRow;
    if (s == "duplicate-row") return ErratumKind::DuplicateRow;
    throw std::invalid_argument("errata: unknown kind " + s);
}

}  // namespace

std::filesystem::path default_table_dir(const std::string& override_dir) {
    if (!override_dir.empty()) return override_dir;
    if (const char* env = std::getenv("TWISTROOT_TABLES")) return env;
    return "tables";
}

TableIndex load_tables(const std::filesystem::path& dir) {
    TableIndex idx;
    if (!std::filesystem::exists(dir))
        throw std::runtime_error("table directory not found: " + dir.string());
    for (const auto& entry : std::filesystem::recursive_directory_iterator(dir)) {
        if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
        if (entry.path().filename() == "errata.json") continue;
        std::ifstream in(entry.path());
        json j = json::parse(in);
        GoldenTable t;
        t.id = j.at("id").get<std::string>();
        t.caption = j.value("caption", std::string{});
        t.spec = spec_from_json(j.at("spec"));
        t.symmetric = j.value("symmetric", false);
        if (j.contains("columns")) t.columns = j["columns"].get<std::vector<std::string>>();
        for (const auto& rj : j.at("rows")) t.rows.push_back(row_from_json(rj));
        idx.tables.emplace(t.id, std::move(t));
    }
    auto errata_path = dir / "errata.json";
    if (std::filesystem::exists(errata_path)) {
        std::ifstream in(errata_path);
        json j = json::parse(in);
        for (const auto& ej : j) {
            Erratum e;
            e.table = ej.at("table").get<std::string>();
            e.kind = kind_from_string(ej.at("kind").get<std::string>());
            e.row = row_from_json(ej.at("row"));
            e.violated = ej.value("violated", std::string{});
            e.explanation = ej.value("explanation", std::string{});
            if (ej.contains("corrected")) e.corrected = row_from_json(ej["corrected"]);
            idx.errata.push_back(std::move(e));
        }
    }
    return idx;
}

TableRow normalize_row(const GoldenTable& table, TableRow row) {
    for (auto& d : row.entries) d = canonicalize(std::move(d));
    if (table.symmetric) {
        TableRow rev = row;
        std::reverse(rev.entries.begin(), rev.entries.end());
        if (rev < row) return rev;
    }
    return row;
}

namespace {

ComponentKey parse_selector(const std::string& sel) {
    // "n<i>" or "n<i>.s<j>"
    if (sel.empty() || sel[0] != 'n') throw std::invalid_argument("bad column selector: " + sel);
    auto dot = sel.find('.');
    ComponentKey key;
    key.node = std::stoll(sel.substr(1, dot == std::string::npos ? std::string::npos : dot - 1));
    if (dot != std::string::npos) {
        if (sel[dot + 1] != 's') throw std::invalid_argument("bad column selector: " + sel);
        key.sat = std::stoll(sel.substr(dot + 2));
    }
    return key;
}

}  // namespace

std::vector<TableRow> project_records(const GoldenTable& table,
                                      const std::vector<RootClassRecord>& records) {
    std::vector<ComponentKey> keys;
    for (const auto& sel : table.columns) keys.push_back(parse_selector(sel));
    std::set<TableRow> seen;
    std::vector<TableRow> out;
    for (const auto& rec : records) {
        TableRow row;
        row.degree = rec.degree;
        for (const auto& key : keys) {
            const PermutingDataSet* pd = rec.find(key);
            if (!pd) throw std::logic_error("projection selector refers to a missing component");
            row.entries.push_back(pd->dataset);
        }
        row = normalize_row(table, std::move(row));
        if (seen.insert(row).second) out.push_back(row);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool TableReport::clean() const {
    for (const auto& r : missing)
        if (!r.explained) return false;
    for (const auto& r : extra)
        if (!r.explained) return false;
    return true;
}

std::string TableReport::summary() const {
    std::ostringstream os;
    os << printed << " rows: " << matched << " matched, " << missing.size() << " missing, "
       << extra.size() << " extra";
    i64 unexplained = 0;
    for (const auto& r : missing)
        if (!r.explained) ++unexplained;
    for (const auto& r : extra)
        if (!r.explained) ++unexplained;
    if (errata_hits > 0 || unexplained > 0)
        os << " (" << errata_hits << " errata hits, " << unexplained << " unexplained)";
    return os.str();
}

namespace {

struct ColumnNeed {
    i64 genus = 0;      // required data-set genus (cut and capped)
    i64 residues = 0;   // required distinguished residue count
    i64 copies = 1;
    bool degree_pinned = false;  // internal curves pin the degree (n or n/copies)
};

ColumnNeed column_need(const MulticurveSpec& spec, const ComponentKey& key) {
    ColumnNeed need;
    if (const auto* ns = std::get_if<NonseparatingSpec>(&spec)) {
        need.genus = ns->genus - ns->curves;
        need.residues = 2 * ns->r;
        return need;
    }
    const auto& chain = std::get<ChainSpec>(spec);
    const auto& nd = chain.nodes.at(key.node);
    if (key.sat < 0) {
        need.genus = nd.genus - nd.internal.curve_count();
        need.residues = 2 * nd.internal.r;
        need.degree_pinned = !nd.internal.empty();
        if (key.node > 0)
            for (i64 s : chain.edges[key.node - 1].sizes)
                if (s == 1) ++need.residues;
        if (static_cast<size_t>(key.node) < chain.edges.size())
            for (i64 s : chain.edges[key.node].sizes)
                if (s == 1) ++need.residues;
        return need;
    }
    const auto& st = nd.satellites.at(key.sat);
    need.genus = st.genus - st.internal.curve_count();
    need.residues = 2 * st.internal.r;
    need.copies = st.copies;
    need.degree_pinned = !st.internal.empty();
    return need;
}

}  // namespace

std::string diagnose_row(const GoldenTable& table, const TableRow& row) {
    std::vector<std::string> problems;
    std::vector<ComponentKey> keys;
    for (const auto& sel : table.columns) keys.push_back(parse_selector(sel));
    i64 order_lcm = 1;
    for (size_t i = 0; i < row.entries.size() && i < keys.size(); ++i) {
        const DataSet& d = row.entries[i];
        std::string tag = "entry " + std::to_string(i + 1) + " " + d.str();
        auto errs = check_dataset(d.n, d.g0, d.residues, d.cones);
        if (!errs.empty()) {
            std::string what;
            for (auto e : errs) what += (what.empty() ? "" : ", ") + to_string(e);
            problems.push_back(tag + " is not a valid data set (" + what + ")");
            continue;
        }
        ColumnNeed need = column_need(table.spec, keys[i]);
        if (genus(d) != need.genus)
            problems.push_back(tag + " has genus " + std::to_string(genus(d)) +
                               " but the cut component requires genus " + std::to_string(need.genus));
        if (d.r() != need.residues)
            problems.push_back(tag + " carries " + std::to_string(d.r()) +
                               " distinguished residues but the gluing consumes " +
                               std::to_string(need.residues));
        order_lcm = lcm_i64(order_lcm, union_order(need.copies, d.n));
    }
    if (problems.empty() && order_lcm != row.degree)
        problems.push_back("component orders assemble to degree " + std::to_string(order_lcm) +
                           ", not the printed degree " + std::to_string(row.degree));
    std::string out;
    for (const auto& p : problems) out += (out.empty() ? "" : "; ") + p;
    return out;
}

json draft_errata(const GoldenTable& table, const TableReport& report) {
    json out = json::array();
    auto row_json = [](const TableRow& r) {
        json entries = json::array();
        for (const auto& d : r.entries) entries.push_back(to_json(d));
        return json{{"degree", r.degree}, {"entries", entries}};
    };
    for (const auto& oc : report.missing) {
        if (oc.explained) continue;
        json e;
        e["table"] = table.id;
        if (oc.note == "printed more than once") {
            e["kind"] = "duplicate-row";
            e["violated"] = "row printed twice";
            e["explanation"] = "the source table repeats this row";
        } else {
            e["kind"] = "invalid-row";
            std::string diag = diagnose_row(table, oc.row);
            e["violated"] = diag.empty()
                                ? "twist condition: no disjoint pairing of the printed components "
                                  "satisfies the angle sums required for a unit twist"
                                : diag;
            e["explanation"] = "printed row cannot arise from a root; see 'violated'";
        }
        e["row"] = row_json(oc.row);
        out.push_back(std::move(e));
    }
    for (const auto& oc : report.extra) {
        if (oc.explained) continue;
        json e;
        e["table"] = table.id;
        e["kind"] = "omitted-row";
        e["row"] = row_json(oc.row);
        e["violated"] = "";
        e["explanation"] =
            "valid root class absent from the source table; every compatibility condition holds "
            "(re-verified by the record audit)";
        out.push_back(std::move(e));
    }
    return out;
}

TableReport reproduce_table(const GoldenTable& table, const std::vector<Erratum>& errata,
                            const ClassifyOptions& opts) {
    TableReport rep;
    rep.id = table.id;
    rep.printed = static_cast<i64>(table.rows.size());

    auto records = classify(table.spec, opts);
    std::vector<TableRow> computed = project_records(table, records);

    // Printed rows normalized, with multiplicity (duplicates possible).
    std::map<TableRow, i64> printed;
    for (const auto& r : table.rows) ++printed[normalize_row(table, r)];

    std::set<TableRow> computed_set(computed.begin(), computed.end());

    // Errata lookup helpers for this table.
    auto find_erratum = [&](const TableRow& row, ErratumKind kind) -> const Erratum* {
        for (const auto& e : errata) {
            if (e.table != table.id || e.kind != kind) continue;
            if (normalize_row(table, e.row) == row) return &e;
        }
        return nullptr;
    };
    auto corrected_by = [&](const TableRow& row) -> const Erratum* {
        for (const auto& e : errata) {
            if (e.table != table.id || !e.corrected) continue;
            if (normalize_row(table, *e.corrected) == row) return &e;
        }
        return nullptr;
    };

    std::set<const Erratum*> used;
    for (auto& [row, mult] : printed) {
        bool found = computed_set.count(row) > 0;
        if (found) {
            ++rep.matched;
            rep.matched_rows.push_back(row);
        } else {
            RowOutcome oc;
            oc.row = row;
            if (const Erratum* e = find_erratum(row, ErratumKind::InvalidRow)) {
                oc.explained = true;
                oc.note = "invalid-row: " + e->violated;
                used.insert(e);
            }
            rep.missing.push_back(std::move(oc));
        }
        // Multiplicity beyond one needs a duplicate-row erratum.
        for (i64 extra = 1; extra < mult; ++extra) {
            RowOutcome oc;
            oc.row = row;
            if (const Erratum* e = find_erratum(row, ErratumKind::DuplicateRow)) {
                oc.explained = true;
                oc.note = "duplicate-row: " + e->explanation;
                used.insert(e);
            } else {
                oc.note = "printed more than once";
            }
            rep.missing.push_back(std::move(oc));
        }
    }
    for (const auto& row : computed) {
        if (printed.count(row)) continue;
        RowOutcome oc;
        oc.row = row;
        if (const Erratum* e = corrected_by(row)) {
            oc.explained = true;
            oc.note = "corrected form of printed row " + e->row.str();
            used.insert(e);
        } else if (const Erratum* e2 = find_erratum(row, ErratumKind::OmittedRow)) {
            oc.explained = true;
            oc.note = "omitted-row: " + e2->explanation;
            used.insert(e2);
        }
        rep.extra.push_back(std::move(oc));
    }
    rep.errata_hits = static_cast<i64>(used.size());
    return rep;
}

}  // namespace twistroot
