// Python bindings for the main operations: validation, genus, angles, the
// power map, enumeration, bounds and classification.  Structured values cross
// the boundary as plain dicts/lists mirroring the JSON interchange schema.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "twistroot/json_io.hpp"
#include "twistroot/tables.hpp"

namespace py = pybind11;
using namespace twistroot;

namespace {

py::object json_to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null: return py::none();
        case json::value_t::boolean: return py::bool_(j.get<bool>());
        case json::value_t::number_integer: return py::int_(j.get<i64>());
        case json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
        case json::value_t::number_float: return py::float_(j.get<double>());
        case json::value_t::string: return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const auto& e : j) out.append(json_to_py(e));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

json py_to_json(const py::handle& obj) {
    if (obj.is_none()) return nullptr;
    if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
    if (py::isinstance<py::int_>(obj)) return obj.cast<i64>();
    if (py::isinstance<py::float_>(obj)) return obj.cast<double>();
    if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
    if (py::isinstance<py::dict>(obj)) {
        json out = json::object();
        for (auto item : obj.cast<py::dict>())
            out[item.first.cast<std::string>()] = py_to_json(item.second);
        return out;
    }
    if (py::isinstance<py::sequence>(obj)) {
        json out = json::array();
        for (auto item : obj.cast<py::sequence>()) out.push_back(py_to_json(item));
        return out;
    }
    throw std::invalid_argument("unsupported python value in spec/dataset");
}

DataSet dataset_arg(const py::dict& d) { return dataset_from_json(py_to_json(d)); }

ClassifyOptions options_arg(bool strict, int jobs) {
    ClassifyOptions opts;
    opts.mode = strict ? CompatMode::Strict : CompatMode::Default;
    opts.jobs = jobs;
    return opts;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact classification of roots of Dehn twists about multicurves";

    m.def("validate", [](const py::dict& d) {
        DataSet raw = dataset_arg(d);
        auto errs = check_dataset(raw.n, raw.g0, raw.residues, raw.cones);
        py::list out;
        for (auto e : errs) out.append(py::str(to_string(e)));
        return out;
    }, py::arg("dataset"), "List of violated validity conditions (empty = valid).");

    m.def("genus", [](const py::dict& d) {
        DataSet ds = dataset_arg(d);
        auto errs = check_dataset(ds.n, ds.g0, ds.residues, ds.cones);
        if (!errs.empty()) throw std::invalid_argument("invalid data set");
        return genus(ds);
    }, py::arg("dataset"));

    m.def("canonicalize", [](const py::dict& d) { return json_to_py(to_json(dataset_arg(d))); },
          py::arg("dataset"));

    m.def("theta", [](i64 c, i64 b) {
        TurnAngle t = theta(ConeClass{mod_reduce(c, b), b});
        return py::make_tuple(t.num(), t.den());
    }, py::arg("c"), py::arg("b"), "Stabilizer rotation as a reduced fraction of a full turn.");

    m.def("fixed_angle", [](i64 a, i64 n) {
        TurnAngle t = fixed_angle(a, n);
        return py::make_tuple(t.num(), t.den());
    }, py::arg("a"), py::arg("n"));

    m.def("power", [](const py::dict& d, i64 exponent) {
        return json_to_py(to_json(power(dataset_arg(d), exponent)));
    }, py::arg("dataset"), py::arg("exponent"));

    m.def("enumerate_datasets", [](i64 genus, i64 degree, i64 r) {
        py::list out;
        for (const auto& d : enumerate_datasets({genus, degree, r, {}}))
            out.append(json_to_py(to_json(d)));
        return out;
    }, py::arg("genus"), py::arg("degree"), py::arg("r") = 0);

    m.def("enumerate_permuting", [](i64 genus, i64 degree, std::vector<i64> sizes, i64 r) {
        py::list out;
        for (const auto& pd : enumerate_permuting({genus, degree, r, std::move(sizes)}))
            out.append(json_to_py(to_json(pd)));
        return out;
    }, py::arg("genus"), py::arg("degree"), py::arg("orbit_sizes"), py::arg("r") = 0);

    m.def("bound_nonseparating", &bound_nonseparating, py::arg("g"), py::arg("m"), py::arg("r"));
    m.def("stable_bound", &stable_bound, py::arg("g"));
    m.def("bound_separating", [](const py::dict& spec) {
        MulticurveSpec s = spec_from_json(py_to_json(spec));
        validate_spec(s);
        if (const auto* ns = std::get_if<NonseparatingSpec>(&s))
            return bound_nonseparating(ns->genus, ns->curves, ns->r);
        return bound_separating(std::get<ChainSpec>(s));
    }, py::arg("spec"));

    m.def("classify", [](const py::dict& spec, bool strict, int jobs) {
        MulticurveSpec s = spec_from_json(py_to_json(spec));
        validate_spec(s);
        py::list out;
        for (const auto& r : classify(s, options_arg(strict, jobs)))
            out.append(json_to_py(to_json(r)));
        return out;
    }, py::arg("spec"), py::arg("strict") = false, py::arg("jobs") = 1);

    m.def("multicurve_genus", [](const py::dict& spec) {
        MulticurveSpec s = spec_from_json(py_to_json(spec));
        validate_spec(s);
        return multicurve_genus(s);
    }, py::arg("spec"));

    m.def("reproduce_table", [](const std::string& id, const std::string& tables_dir, bool strict) {
        auto idx = load_tables(default_table_dir(tables_dir));
        auto it = idx.tables.find(id);
        if (it == idx.tables.end()) throw std::invalid_argument("unknown table: " + id);
        ClassifyOptions opts;
        opts.mode = strict ? CompatMode::Strict : CompatMode::Default;
        auto rep = reproduce_table(it->second, idx.errata, opts);
        py::dict out;
        out["id"] = rep.id;
        out["printed"] = rep.printed;
        out["matched"] = rep.matched;
        out["missing"] = py::int_(static_cast<i64>(rep.missing.size()));
        out["extra"] = py::int_(static_cast<i64>(rep.extra.size()));
        out["errata_hits"] = rep.errata_hits;
        out["clean"] = rep.clean();
        out["summary"] = rep.summary();
        return out;
    }, py::arg("id"), py::arg("tables_dir") = "", py::arg("strict") = false);

    m.def("table_ids", [](const std::string& tables_dir) {
        py::list out;
        for (const auto& [id, t] : load_tables(default_table_dir(tables_dir)).tables)
            out.append(py::str(id));
        return out;
    }, py::arg("tables_dir") = "");
}
