#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "audit.hpp"
#include "twistroot/tables.hpp"

using namespace twistroot;

namespace {

TableIndex& tables() {
    static TableIndex idx = load_tables(default_table_dir());
    return idx;
}

}  // namespace

TEST_CASE("golden index loads with captions and specs") {
    auto& idx = tables();
    CHECK(idx.tables.size() >= 40);
    CHECK(idx.tables.count("g3-sep-chain-rk20") == 1);
    CHECK(idx.tables.count("g4-nonsep-m4") == 1);
    CHECK(idx.tables.count("g3-mixed-c3d3") == 1);
    for (const auto& [id, t] : idx.tables) {
        CHECK_FALSE(t.caption.empty());
        CHECK_FALSE(t.columns.empty());
        CHECK_FALSE(t.rows.empty());
        validate_spec(t.spec);
        // The multicurve genus matches the table family.
        i64 g = multicurve_genus(t.spec);
        if (id.rfind("g3", 0) == 0) CHECK(g == 3);
        if (id.rfind("g4", 0) == 0) CHECK(g == 4);
    }
}

TEST_CASE("row normalization respects table symmetry") {
    const auto& t = tables().tables.at("g3-sep-chain-rk20");
    TableRow row;
    row.degree = 6;
    row.entries = {make_dataset(6, 0, {5}, {{1, 2}, {2, 3}}), make_dataset(3, 0, {1, 1}, {{1, 3}}),
                   make_dataset(6, 0, {5}, {{1, 2}, {2, 3}})};
    TableRow rev = row;
    std::reverse(rev.entries.begin(), rev.entries.end());
    CHECK(normalize_row(t, row) == normalize_row(t, rev));
}

TEST_CASE("every golden spec classifies clean under the shipped errata") {
    auto& idx = tables();
    for (const auto& [id, t] : idx.tables) {
        auto rep = reproduce_table(t, idx.errata);
        INFO(id << ": " << rep.summary());
        CHECK(rep.clean());
    }
}

TEST_CASE("every classified record for every golden spec passes the audit") {
    for (const auto& [id, t] : tables().tables) {
        INFO(id);
        audit::audit_all(t.spec, classify(t.spec));
    }
}

TEST_CASE("spec'd reproduce examples") {
    auto& idx = tables();

    // The preserved-chain table matches all seven printed rows.
    auto rep = reproduce_table(idx.tables.at("g3-sep-chain-rk20"), idx.errata);
    CHECK(rep.printed == 7);
    CHECK(rep.matched == 7);
    for (const auto& m : rep.missing) CHECK(m.explained);

    // The m=4 nonseparating table: the printed degree-2 row is flagged with a
    // genus violation.
    rep = reproduce_table(idx.tables.at("g4-nonsep-m4"), idx.errata);
    bool flagged = false;
    for (const auto& m : rep.missing)
        if (m.row.degree == 2 && m.explained && m.note.find("genus") != std::string::npos)
            flagged = true;
    CHECK(flagged);

    // The mixed table with the misprinted degree: the printed degree-2 row is
    // explained and the order-3 class appears as the corrected extra.
    rep = reproduce_table(idx.tables.at("g3-mixed-c3d3"), idx.errata);
    CHECK(rep.clean());
    bool corrected = false;
    for (const auto& e : rep.extra)
        if (e.row.degree == 3 && e.explained) corrected = true;
    CHECK(corrected);
}

TEST_CASE("diagnose_row pinpoints printed defects") {
    const auto& t = tables().tables.at("g4-nonsep-m4");
    TableRow bad;
    bad.degree = 2;
    bad.entries = {make_dataset(2, 1, {}, {{1, 2}, {1, 2}})};
    std::string diag = diagnose_row(t, bad);
    CHECK(diag.find("genus 2") != std::string::npos);
    CHECK(diag.find("requires genus 0") != std::string::npos);

    TableRow good;
    good.degree = 4;
    good.entries = {make_dataset(4, 0, {}, {{1, 4}, {3, 4}})};
    CHECK(diagnose_row(t, good).empty());
}

TEST_CASE("discrepancies without errata are reported unexplained") {
    auto& idx = tables();
    const auto& t = idx.tables.at("g3-sep-chain-rk20");
    auto rep = reproduce_table(t, {});  // no errata
    CHECK_FALSE(rep.clean());
    CHECK(rep.matched == 7);
    CHECK(rep.extra.size() == 9);
}

TEST_CASE("json round trips") {
    for (const auto& [id, t] : tables().tables) {
        // Specs and rows survive a serialization cycle byte-identically.
        CHECK(spec_from_json(to_json(t.spec)) == t.spec);
        for (const auto& row : t.rows)
            for (const auto& d : row.entries) CHECK(dataset_from_json(to_json(d)) == d);
    }
    // Records too, including orbit distributions.
    const auto& t = tables().tables.at("g3-sep-s1s12-rk01");
    for (const auto& rec : classify(t.spec)) {
        for (const auto& c : rec.components) {
            PermutingDataSet back = permuting_from_json(to_json(c.pd));
            CHECK(back == c.pd);
        }
        json j = to_json(rec);
        CHECK(j.at("degree").get<i64>() == rec.degree);
    }
}

TEST_CASE("strict mode only changes compatibility verdicts") {
    // Enumeration and validation are mode-independent; classification in
    // strict mode yields a subset of the default records.
    ClassifyOptions strict;
    strict.mode = CompatMode::Strict;
    for (const auto& id : {"g3-sep-c2-rk01", "g3-sep-chain-rk20", "g4-sep-c3-rk01"}) {
        const auto& t = tables().tables.at(id);
        auto dflt = classify(t.spec);
        auto str = classify(t.spec, strict);
        std::set<std::string> sigs;
        for (const auto& r : dflt) sigs.insert(r.signature);
        for (const auto& r : str) CHECK(sigs.count(r.signature) == 1);
    }
}
