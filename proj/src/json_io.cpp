#include "twistroot/json_io.hpp"

namespace twistroot {

json to_json(const DataSet& d) {
    json j;
    j["n"] = d.n;
    j["g0"] = d.g0;
    if (!d.residues.empty()) j["a"] = d.residues;
    if (!d.cones.empty()) {
        json cones = json::array();
        for (const auto& c : d.cones) cones.push_back({c.c, c.b});
        j["cones"] = cones;
    }
    return j;
}

json to_json(const OrbitDistribution& o) {
    json arr = json::array();
    for (const auto& [p, m] : o.entries) arr.push_back({{p.c, p.b}, m});
    return arr;
}

json to_json(const PermutingDataSet& pd) {
    json j = to_json(pd.dataset);
    if (!pd.orbits.entries.empty()) j["orbits"] = to_json(pd.orbits);
    return j;
}

DataSet dataset_from_json(const json& j) {
    DataSet d;
    d.n = j.at("n").get<i64>();
    d.g0 = j.at("g0").get<i64>();
    if (d.n < 1) throw std::invalid_argument("dataset json: n must be >= 1");
    if (j.contains("a"))
        for (const auto& a : j["a"]) d.residues.push_back(mod_reduce(a.get<i64>(), d.n));
    if (j.contains("cones"))
        for (const auto& c : j["cones"]) {
            i64 b = c.at(1).get<i64>();
            if (b < 1) throw std::invalid_argument("dataset json: cone modulus must be >= 1");
            d.cones.emplace_back(mod_reduce(c.at(0).get<i64>(), b), b);
        }
    return canonicalize(std::move(d));
}

PermutingDataSet permuting_from_json(const json& j) {
    PermutingDataSet pd;
    pd.dataset = dataset_from_json(j);
    if (j.contains("orbits"))
        for (const auto& e : j["orbits"]) {
            ConeClass p(e.at(0).at(0).get<i64>(), e.at(0).at(1).get<i64>());
            pd.orbits.add(p, e.at(1).get<i64>());
        }
    return pd;
}

namespace {

InternalSpec internal_from_json(const json& j) {
    InternalSpec s;
    if (j.contains("r")) s.r = j["r"].get<i64>();
    if (j.contains("sizes")) s.sizes = j["sizes"].get<std::vector<i64>>();
    std::sort(s.sizes.begin(), s.sizes.end());
    return s;
}

json internal_to_json(const InternalSpec& s) {
    json j;
    j["r"] = s.r;
    j["sizes"] = s.sizes;
    return j;
}

}  // namespace

MulticurveSpec spec_from_json(const json& j) {
    if (j.contains("nonseparating")) {
        const auto& n = j["nonseparating"];
        NonseparatingSpec s;
        s.genus = n.at("genus").get<i64>();
        s.curves = n.at("curves").get<i64>();
        s.r = n.value("r", i64{0});
        if (n.contains("sizes")) s.sizes = n["sizes"].get<std::vector<i64>>();
        std::sort(s.sizes.begin(), s.sizes.end());
        return s;
    }
    if (!j.contains("chain")) throw std::invalid_argument("spec json: expected 'nonseparating' or 'chain'");
    ChainSpec c;
    for (const auto& nj : j["chain"]) {
        NodeSpec node;
        node.genus = nj.at("g1").get<i64>();
        if (nj.contains("internal")) node.internal = internal_from_json(nj["internal"]);
        if (nj.contains("satellites"))
            for (const auto& sj : nj["satellites"]) {
                SatelliteSpec st;
                st.genus = sj.at("g2").get<i64>();
                st.copies = sj.at("m").get<i64>();
                st.strands = sj.value("k", i64{1});
                if (sj.contains("sizes")) st.sizes = sj["sizes"].get<std::vector<i64>>();
                std::sort(st.sizes.begin(), st.sizes.end());
                if (sj.contains("internal")) st.internal = internal_from_json(sj["internal"]);
                node.satellites.push_back(std::move(st));
            }
        c.nodes.push_back(std::move(node));
    }
    if (j.contains("edges"))
        for (const auto& ej : j["edges"]) {
            EdgeSpec e;
            e.strands = ej.at("k").get<i64>();
            if (ej.contains("sizes")) e.sizes = ej["sizes"].get<std::vector<i64>>();
            std::sort(e.sizes.begin(), e.sizes.end());
            c.edges.push_back(std::move(e));
        }
    return c;
}

json to_json(const MulticurveSpec& spec) {
    if (const auto* ns = std::get_if<NonseparatingSpec>(&spec)) {
        json j;
        j["nonseparating"] = {{"genus", ns->genus}, {"curves", ns->curves}, {"r", ns->r}, {"sizes", ns->sizes}};
        return j;
    }
    const auto& c = std::get<ChainSpec>(spec);
    json chain = json::array();
    for (const auto& node : c.nodes) {
        json nj;
        nj["g1"] = node.genus;
        if (!node.internal.empty()) nj["internal"] = internal_to_json(node.internal);
        if (!node.satellites.empty()) {
            json sats = json::array();
            for (const auto& st : node.satellites) {
                json sj;
                sj["g2"] = st.genus;
                sj["m"] = st.copies;
                sj["k"] = st.strands;
                sj["sizes"] = st.sizes;
                if (!st.internal.empty()) sj["internal"] = internal_to_json(st.internal);
                sats.push_back(std::move(sj));
            }
            nj["satellites"] = std::move(sats);
        }
        chain.push_back(std::move(nj));
    }
    json edges = json::array();
    for (const auto& e : c.edges) edges.push_back({{"k", e.strands}, {"sizes", e.sizes}});
    return json{{"chain", std::move(chain)}, {"edges", std::move(edges)}};
}

json to_json(const PairingWitness& w, const RootClassRecord& rec) {
    json arr = json::array();
    for (const auto& p : w.pairs) {
        auto cls = [&](const ComponentKey& key, const ClassRef& ref) {
            json c;
            c["kind"] = to_string(ref.kind);
            const PermutingDataSet* pd = rec.find(key);
            if (ref.kind == ClassKind::Residue) c["value"] = pd->dataset.residues.at(ref.index);
            else if (ref.kind == ClassKind::Cone) {
                const auto& cone = pd->dataset.cones.at(ref.index);
                c["value"] = {cone.c, cone.b};
            }
            return c;
        };
        arr.push_back({{"side1", p.side1.str()},
                       {"side2", p.side2.str()},
                       {"class1", cls(p.side1, p.class1)},
                       {"class2", cls(p.side2, p.class2)},
                       {"S", p.size},
                       {"tag", p.tag}});
    }
    return arr;
}

json to_json(const RootClassRecord& rec) {
    json comps = json::array();
    for (const auto& c : rec.components) {
        comps.push_back({{"component", c.key.str()}, {"copies", c.copies}, {"dataset", to_json(c.pd)}});
    }
    return json{{"degree", rec.degree}, {"components", std::move(comps)}, {"witness", to_json(rec.witness, rec)}};
}

}  // namespace twistroot
