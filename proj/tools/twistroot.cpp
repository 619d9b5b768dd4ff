// Command-line front end for the twist-root engine: validation, enumeration,
// classification, bounds, the power map and golden-table reproduction.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "twistroot/json_io.hpp"
#include "twistroot/tables.hpp"

using namespace twistroot;

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnexplained = 3;

json read_json_input(const std::string& file) {
    if (file.empty() || file == "-") return json::parse(std::cin);
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open " + file);
    return json::parse(in);
}

void emit_datasets(const std::vector<DataSet>& sets, const std::string& format) {
    if (format == "json") {
        json arr = json::array();
        for (const auto& d : sets) arr.push_back(to_json(d));
        std::cout << arr.dump() << "\n";
        return;
    }
    if (format == "csv") {
        std::cout << "n,g0,residues,cones\n";
        for (const auto& d : sets) {
            std::ostringstream res, cones;
            for (size_t i = 0; i < d.residues.size(); ++i) res << (i ? " " : "") << d.residues[i];
            for (size_t i = 0; i < d.cones.size(); ++i)
                cones << (i ? " " : "") << d.cones[i].c << ":" << d.cones[i].b;
            std::cout << d.n << "," << d.g0 << "," << res.str() << "," << cones.str() << "\n";
        }
        return;
    }
    for (const auto& d : sets) std::cout << d.str() << "\n";
}

void emit_permuting(const std::vector<PermutingDataSet>& sets, const std::string& format) {
    if (format == "json") {
        json arr = json::array();
        for (const auto& pd : sets) arr.push_back(to_json(pd));
        std::cout << arr.dump() << "\n";
        return;
    }
    if (format == "csv") {
        std::cout << "n,g0,residues,cones,orbits\n";
        for (const auto& pd : sets) {
            const auto& d = pd.dataset;
            std::ostringstream res, cones, orbs;
            for (size_t i = 0; i < d.residues.size(); ++i) res << (i ? " " : "") << d.residues[i];
            for (size_t i = 0; i < d.cones.size(); ++i)
                cones << (i ? " " : "") << d.cones[i].c << ":" << d.cones[i].b;
            for (size_t i = 0; i < pd.orbits.entries.size(); ++i) {
                const auto& [p, m] = pd.orbits.entries[i];
                orbs << (i ? " " : "") << p.c << ":" << p.b << "x" << m;
            }
            std::cout << d.n << "," << d.g0 << "," << res.str() << "," << cones.str() << ","
                      << orbs.str() << "\n";
        }
        return;
    }
    for (const auto& pd : sets) std::cout << pd.str() << "\n";
}

void emit_records(const std::vector<RootClassRecord>& recs, const std::string& format) {
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : recs) arr.push_back(to_json(r));
        std::cout << arr.dump() << "\n";
        return;
    }
    if (format == "csv") {
        std::cout << "degree,component,copies,dataset\n";
        for (const auto& r : recs)
            for (const auto& c : r.components)
                std::cout << r.degree << "," << c.key.str() << "," << c.copies << ",\""
                          << c.pd.str() << "\"\n";
        return;
    }
    for (const auto& r : recs) {
        std::cout << "deg " << r.degree << ":";
        for (const auto& c : r.components)
            std::cout << "  " << c.key.str()
                      << (c.copies > 1 ? "(x" + std::to_string(c.copies) + ")" : "") << "="
                      << c.pd.str();
        std::cout << "\n";
    }
}

std::vector<Erratum> errata_from_json(const json& j) {
    std::vector<Erratum> out;
    for (const auto& ej : j) {
        Erratum e;
        e.table = ej.at("table").get<std::string>();
        std::string k = ej.at("kind").get<std::string>();
        e.kind = k == "invalid-row"    ? ErratumKind::InvalidRow
                 : k == "omitted-row"  ? ErratumKind::OmittedRow
                                       : ErratumKind::DuplicateRow;
        e.row.degree = ej.at("row").at("degree").get<i64>();
        for (const auto& en : ej.at("row").at("entries")) e.row.entries.push_back(dataset_from_json(en));
        e.violated = ej.value("violated", std::string{});
        e.explanation = ej.value("explanation", std::string{});
        if (ej.contains("corrected")) {
            TableRow c;
            c.degree = ej["corrected"].at("degree").get<i64>();
            for (const auto& en : ej["corrected"].at("entries")) c.entries.push_back(dataset_from_json(en));
            e.corrected = c;
        }
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"twistroot: exact classification of roots of Dehn twists about multicurves"};
    app.require_subcommand(1);

    std::string format = "table";
    bool strict = false;
    int jobs = 1;
    std::string tables_dir;
    app.add_option("--format", format, "output format: json|csv|table")->capture_default_str();
    app.add_flag("--strict-defs", strict, "use the literal textbook angle condition");
    app.add_option("--jobs", jobs, "worker threads")->capture_default_str();
    app.add_option("--tables", tables_dir,
                   "golden table directory (default: $TWISTROOT_TABLES or ./tables)");

    auto* vcmd = app.add_subcommand("validate", "validate a data set from JSON");
    std::string vfile;
    vcmd->add_option("--file", vfile, "JSON file (default stdin)");

    auto* ecmd = app.add_subcommand("enumerate", "enumerate data sets of a genus and degree");
    i64 egenus = 0, edegree = 1, er = 0;
    std::string eorbits;
    ecmd->add_option("--genus", egenus, "surface genus")->required();
    ecmd->add_option("--degree", edegree, "action degree")->required();
    ecmd->add_option("--r", er, "required distinguished residue count");
    ecmd->add_option("--orbit-sizes", eorbits, "comma-separated distinguished orbit sizes");

    auto* pcmd = app.add_subcommand("power", "data set of a power of the action");
    std::string pfile;
    i64 pexp = 1;
    pcmd->add_option("--file", pfile, "JSON file (default stdin)");
    pcmd->add_option("--exp", pexp, "exponent (must divide the degree)")->required();

    auto* bcmd = app.add_subcommand("bounds", "degree bounds");
    bool bnonsep = false, bsep = false, bstable = false;
    i64 bg = 0, bm = 1, br = 0, bgc = 0;
    std::string bspec;
    bcmd->add_flag("--nonseparating", bnonsep, "nonseparating bound");
    bcmd->add_flag("--separating", bsep, "separating bound from g(C)");
    bcmd->add_flag("--stable", bstable, "stable bound from the surface genus");
    bcmd->add_option("--genus", bg, "surface genus");
    bcmd->add_option("--curves", bm, "multicurve size");
    bcmd->add_option("--r", br, "preserved-curve count");
    bcmd->add_option("--gc", bgc, "g(C) for the separating bound");
    bcmd->add_option("--spec", bspec, "multicurve spec JSON file (applicable bound)");

    auto* ccmd = app.add_subcommand("classify", "classify root conjugacy classes for a multicurve spec");
    std::string cspec;
    i64 cmax = 0;
    ccmd->add_option("--spec", cspec, "multicurve spec JSON file (default stdin)");
    ccmd->add_option("--max-degree", cmax, "override the degree cap");

    auto* rcmd = app.add_subcommand("reproduce", "compare classifier output against a golden table");
    std::string rtable, rerrata;
    bool rall = false, rverbose = false;
    rcmd->add_option("table", rtable, "table id (see 'tables')");
    rcmd->add_flag("--all", rall, "reproduce every shipped table");
    rcmd->add_option("--errata", rerrata, "errata JSON file overriding the shipped one");
    rcmd->add_flag("--verbose", rverbose, "print per-row outcomes");
    std::string remit;
    rcmd->add_option("--emit-errata", remit, "write draft errata JSON for unexplained discrepancies");

    auto* tcmd = app.add_subcommand("tables", "list shipped golden tables");

    for (auto* sc : app.get_subcommands([](const CLI::App*) { return true; })) sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    ClassifyOptions opts;
    opts.mode = strict ? CompatMode::Strict : CompatMode::Default;
    opts.jobs = jobs;

    try {
        if (*vcmd) {
            json j;
            try {
                j = read_json_input(vfile);
            } catch (const json::parse_error& e) {
                std::cerr << "parse error: " << e.what() << "\n";
                return kExitUsage;
            }
            DataSet raw = dataset_from_json(j);
            auto errs = check_dataset(raw.n, raw.g0, raw.residues, raw.cones);
            if (errs.empty()) {
                std::cout << raw.str() << " valid, genus " << genus(raw) << "\n";
                return 0;
            }
            for (auto e : errs) {
                std::cout << to_string(e) << ": ";
                switch (e) {
                    case ValidationError::NonDividingModulus:
                        std::cout << "a cone order does not divide the degree"; break;
                    case ValidationError::NonCoprimeResidue:
                        std::cout << "a residue is not coprime to its modulus"; break;
                    case ValidationError::CongruenceSumNonzero:
                        std::cout << "the total monodromy is nonzero mod n"; break;
                    case ValidationError::NonIntegralGenus:
                        std::cout << "the Riemann-Hurwitz genus is not an integer"; break;
                    case ValidationError::NegativeGenus:
                        std::cout << "the Riemann-Hurwitz genus is negative"; break;
                    case ValidationError::NotGenerating:
                        std::cout << "the monodromies do not generate the cyclic group"; break;
                }
                std::cout << "\n";
            }
            return kExitDomain;
        }

        if (*ecmd) {
            EnumQuery q;
            q.genus = egenus;
            q.degree = edegree;
            q.r = er;
            if (!eorbits.empty()) {
                std::stringstream ss(eorbits);
                std::string tok;
                while (std::getline(ss, tok, ',')) q.orbit_sizes.push_back(std::stoll(tok));
                emit_permuting(enumerate_permuting(q), format);
            } else {
                emit_datasets(enumerate_datasets(q), format);
            }
            return 0;
        }

        if (*pcmd) {
            json j = read_json_input(pfile);
            DataSet d = dataset_from_json(j);
            if (!check_dataset(d.n, d.g0, d.residues, d.cones).empty()) {
                std::cerr << "invalid data set\n";
                return kExitDomain;
            }
            if (pexp < 1 || d.n % pexp != 0) {
                std::cerr << "NonDividingExponent: " << pexp << " does not divide " << d.n << "\n";
                return kExitDomain;
            }
            DataSet p = power(d, pexp);
            if (format == "json") std::cout << to_json(p).dump() << "\n";
            else std::cout << p.str() << "\n";
            return 0;
        }

        if (*bcmd) {
            if (!bspec.empty()) {
                MulticurveSpec spec = spec_from_json(read_json_input(bspec));
                validate_spec(spec);
                if (const auto* ns = std::get_if<NonseparatingSpec>(&spec))
                    std::cout << bound_nonseparating(ns->genus, ns->curves, ns->r) << "\n";
                else
                    std::cout << bound_separating(std::get<ChainSpec>(spec)) << "\n";
                return 0;
            }
            if (bnonsep) std::cout << bound_nonseparating(bg, bm, br) << "\n";
            else if (bsep) std::cout << 4 * bgc * bgc + 2 * bgc << "\n";
            else if (bstable) std::cout << stable_bound(bg) << "\n";
            else {
                std::cerr << "choose --nonseparating, --separating, --stable or --spec\n";
                return kExitUsage;
            }
            return 0;
        }

        if (*ccmd) {
            MulticurveSpec spec = spec_from_json(read_json_input(cspec));
            validate_spec(spec);
            opts.max_degree = cmax;
            emit_records(classify(spec, opts), format);
            return 0;
        }

        if (*tcmd) {
            auto idx = load_tables(default_table_dir(tables_dir));
            for (const auto& [id, t] : idx.tables)
                std::cout << id << "  (" << t.rows.size() << " rows)  " << t.caption << "\n";
            return 0;
        }

        if (*rcmd) {
            auto idx = load_tables(default_table_dir(tables_dir));
            if (!rerrata.empty()) idx.errata = errata_from_json(read_json_input(rerrata));
            std::vector<std::string> ids;
            if (rall)
                for (const auto& [id, t] : idx.tables) ids.push_back(id);
            else if (!rtable.empty())
                ids.push_back(rtable);
            else {
                std::cerr << "give a table id or --all\n";
                return kExitUsage;
            }
            bool all_clean = true;
            json drafts = json::array();
            for (const auto& id : ids) {
                auto it = idx.tables.find(id);
                if (it == idx.tables.end()) {
                    std::cerr << "unknown table: " << id << "\n";
                    return kExitUsage;
                }
                auto rep = reproduce_table(it->second, idx.errata, opts);
                std::cout << id << ": " << rep.summary() << "\n";
                if (rverbose) {
                    for (const auto& r : rep.missing)
                        std::cout << "  missing " << r.row.str() << "  ["
                                  << (r.explained ? r.note : "UNEXPLAINED") << "]\n";
                    for (const auto& r : rep.extra)
                        std::cout << "  extra   " << r.row.str() << "  ["
                                  << (r.explained ? r.note : "UNEXPLAINED") << "]\n";
                }
                all_clean = all_clean && rep.clean();
                if (!remit.empty())
                    for (auto& e : draft_errata(it->second, rep)) drafts.push_back(std::move(e));
            }
            if (!remit.empty()) {
                std::ofstream out(remit);
                out << drafts.dump(1) << "\n";
            }
            return all_clean ? 0 : kExitUnexplained;
        }
    } catch (const json::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}
