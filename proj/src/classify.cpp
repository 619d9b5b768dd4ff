#include "twistroot/classify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

namespace twistroot {

namespace {
i64 sum(const std::vector<i64>& v) { return std::accumulate(v.begin(), v.end(), i64{0}); }
}

i64 InternalSpec::curve_count() const { return r + sum(sizes); }

i64 tuple_genus(const NodeSpec& node) {
    i64 g = node.genus;
    for (const auto& s : node.satellites) g += s.copies * (s.genus + s.strands - 1);
    return g;
}

i64 chain_genus(const ChainSpec& chain) {
    i64 g = 0;
    for (const auto& n : chain.nodes) g += tuple_genus(n);
    for (const auto& e : chain.edges) {
        i64 r = 0, alpha = 0;
        for (i64 s : e.sizes) {
            if (s == 1) ++r;
            else alpha += s;
        }
        g += r + alpha - 1;
    }
    return g;
}

i64 multicurve_genus(const MulticurveSpec& spec) {
    if (const auto* ns = std::get_if<NonseparatingSpec>(&spec)) return ns->genus;
    return chain_genus(std::get<ChainSpec>(spec));
}

i64 multicurve_size(const MulticurveSpec& spec) {
    if (const auto* ns = std::get_if<NonseparatingSpec>(&spec)) return ns->curves;
    const auto& chain = std::get<ChainSpec>(spec);
    i64 m = 0;
    for (const auto& e : chain.edges) m += e.strands;
    for (const auto& nd : chain.nodes) {
        m += nd.internal.curve_count();
        for (const auto& s : nd.satellites)
            m += s.copies * (s.strands + s.internal.curve_count());
    }
    return m;
}

void validate_spec(const MulticurveSpec& spec) {
    if (const auto* ns = std::get_if<NonseparatingSpec>(&spec)) {
        if (ns->genus < 0 || ns->curves < 1 || ns->r < 0)
            throw std::invalid_argument("nonseparating spec: negative field");
        if (ns->curves > ns->genus)
            throw std::invalid_argument("nonseparating spec: more curves than genus");
        for (i64 s : ns->sizes)
            if (s < 2) throw std::invalid_argument("nonseparating spec: orbit sizes must be >= 2");
        if (ns->r + sum(ns->sizes) != ns->curves)
            throw std::invalid_argument("nonseparating spec: r + sum(sizes) != curves");
        return;
    }
    const auto& chain = std::get<ChainSpec>(spec);
    if (chain.nodes.empty()) throw std::invalid_argument("chain spec: no nodes");
    if (chain.edges.size() + 1 != chain.nodes.size())
        throw std::invalid_argument("chain spec: edges must be nodes - 1");
    for (const auto& e : chain.edges) {
        if (e.strands < 1 || sum(e.sizes) != e.strands)
            throw std::invalid_argument("chain spec: edge sizes must sum to the strand count");
    }
    for (const auto& nd : chain.nodes) {
        if (nd.genus < 0) throw std::invalid_argument("chain spec: negative node genus");
        if (nd.genus - nd.internal.curve_count() < 0)
            throw std::invalid_argument("chain spec: internal curves exceed node genus");
        for (const auto& s : nd.satellites) {
            if (s.copies < 1 || s.strands < 1 || s.genus < 0)
                throw std::invalid_argument("chain spec: bad satellite");
            if (sum(s.sizes) != s.copies * s.strands)
                throw std::invalid_argument("chain spec: satellite sizes must sum to copies*strands");
            for (i64 v : s.sizes)
                if (v < 1 || v % s.copies != 0)
                    throw std::invalid_argument("chain spec: satellite class sizes must be positive multiples of the copy count");
            if (s.genus - s.internal.curve_count() < 0)
                throw std::invalid_argument("chain spec: satellite internal curves exceed genus");
        }
    }
}

i64 bound_nonseparating(i64 g, i64 m, i64 r) {
    i64 base = (g == m) ? g : 4 * (g - m) + 2;
    if (r == 1) base = std::min(base, 2 * (g - m) + 1);
    if (r >= 2) base = std::min(base, (g - m + r - 1) / (r - 1));
    return base;
}

bool is_degree_admissible(i64 g, i64 m, i64 r, i64 n) {
    if (n < 1 || n > bound_nonseparating(g, m, r)) return false;
    if (r >= 1 && n % 2 == 0) return false;
    if (g == m && m % n != 0) return false;
    return true;
}

i64 g_of_C(const ChainSpec& chain) {
    if (chain.nodes.size() == 1) return tuple_genus(chain.nodes[0]);
    i64 best = -1;
    for (size_t i = 0; i + 1 < chain.nodes.size(); ++i) {
        i64 v = tuple_genus(chain.nodes[i]) + tuple_genus(chain.nodes[i + 1]);
        if (best < 0 || v < best) best = v;
    }
    return best;
}

i64 bound_separating(const ChainSpec& chain) {
    i64 gc = g_of_C(chain);
    return 4 * gc * gc + 2 * gc;
}

i64 stable_bound(i64 g) {
    return (Rational(16, 5) * Rational(g * g) + Rational(12 * g) + Rational(45, 4)).floor();
}

const PermutingDataSet* RootClassRecord::find(const ComponentKey& key) const {
    for (const auto& c : components)
        if (c.key == key) return &c.pd;
    return nullptr;
}

std::vector<DataSet> record_datasets(const RootClassRecord& rec) {
    std::vector<DataSet> out;
    out.reserve(rec.components.size());
    for (const auto& c : rec.components) out.push_back(c.pd.dataset);
    return out;
}

bool chain_palindromic(const ChainSpec& chain) {
    ChainSpec rev = chain;
    std::reverse(rev.nodes.begin(), rev.nodes.end());
    std::reverse(rev.edges.begin(), rev.edges.end());
    return rev == chain;
}

namespace {

std::string class_descriptor(const PermutingDataSet& pd, const ClassRef& ref) {
    switch (ref.kind) {
        case ClassKind::Residue: return "r" + std::to_string(pd.dataset.residues.at(ref.index));
        case ClassKind::Cone: return "c" + pd.dataset.cones.at(ref.index).str();
        case ClassKind::Free: return "f";
    }
    return "?";
}

// Canonical signature of a record; `flip` renumbers nodes i -> N-1-i (for
// palindromic chains, the stored signature is the smaller of the two).
std::string record_signature_impl(const RootClassRecord& rec, i64 node_count, bool flip) {
    auto mapkey = [&](const ComponentKey& k) {
        ComponentKey out = k;
        if (flip) out.node = node_count - 1 - k.node;
        return out;
    };
    std::ostringstream os;
    os << rec.degree << "|";
    std::vector<std::pair<ComponentKey, std::string>> comps;
    for (const auto& c : rec.components)
        comps.emplace_back(mapkey(c.key), std::to_string(c.copies) + "*" + c.pd.str());
    std::sort(comps.begin(), comps.end());
    for (const auto& [k, s] : comps) os << k.str() << "=" << s << ";";
    os << "|";
    std::vector<std::string> pairs;
    for (const auto& p : rec.witness.pairs) {
        const PermutingDataSet* pd1 = rec.find(p.side1);
        const PermutingDataSet* pd2 = rec.find(p.side2);
        std::string d1 = mapkey(p.side1).str() + ":" + class_descriptor(*pd1, p.class1);
        std::string d2 = mapkey(p.side2).str() + ":" + class_descriptor(*pd2, p.class2);
        if (d2 < d1) std::swap(d1, d2);
        // Tags name edges/satellites by position; normalize edge indices under flip.
        std::string tag = p.tag;
        pairs.push_back(tag.substr(0, tag.find(':')) + "@" + std::to_string(p.size) + "[" + d1 +
                        "," + d2 + "]");
    }
    std::sort(pairs.begin(), pairs.end());
    for (const auto& s : pairs) os << s << ";";
    return os.str();
}

std::string record_signature(const RootClassRecord& rec, i64 node_count, bool palindromic) {
    std::string fwd = record_signature_impl(rec, node_count, false);
    if (!palindromic) return fwd;
    std::string rev = record_signature_impl(rec, node_count, true);
    return std::min(fwd, rev);
}

// Shared, memoized data-set enumeration.
class DataSetCache {
public:
    const std::vector<DataSet>& get(i64 genus, i64 degree, i64 r) {
        std::scoped_lock lk(mu_);
        auto key = std::tuple(genus, degree, r);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        EnumQuery q;
        q.genus = genus;
        q.degree = degree;
        q.r = r;
        return cache_.emplace(key, enumerate_datasets(q)).first->second;
    }

private:
    std::mutex mu_;
    std::map<std::tuple<i64, i64, i64>, std::vector<DataSet>> cache_;
};

// Deterministic parallel map over degrees: results merged in input order.
template <typename F>
void parallel_degrees(const std::vector<i64>& degrees, int jobs, F&& work) {
    if (jobs <= 1 || degrees.size() <= 1) {
        for (i64 n : degrees) work(n);
        return;
    }
    std::atomic<size_t> next{0};
    auto runner = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= degrees.size()) break;
            work(degrees[i]);
        }
    };
    std::vector<std::thread> pool;
    int count = std::min<int>(jobs, static_cast<int>(degrees.size()));
    for (int t = 0; t < count; ++t) pool.emplace_back(runner);
    for (auto& t : pool) t.join();
}

struct RecordSink {
    std::mutex mu;
    std::map<std::string, RootClassRecord> by_signature;

    // Representative choice must not depend on thread scheduling: among
    // signature-equal records keep the one with the smallest witness detail.
    static std::string detail(const RootClassRecord& r) {
        std::ostringstream os;
        for (const auto& p : r.witness.pairs)
            os << p.tag << "/" << p.size << "/" << p.side1.str() << "/" << static_cast<int>(p.class1.kind)
               << "/" << p.class1.index << "/" << p.side2.str() << "/" << static_cast<int>(p.class2.kind)
               << "/" << p.class2.index << ";";
        return os.str();
    }

    void add(RootClassRecord rec) {
        std::scoped_lock lk(mu);
        auto it = by_signature.find(rec.signature);
        if (it == by_signature.end()) {
            by_signature.emplace(rec.signature, std::move(rec));
        } else if (detail(rec) < detail(it->second)) {
            it->second = std::move(rec);
        }
    }

    std::vector<RootClassRecord> sorted() {
        std::vector<RootClassRecord> out;
        out.reserve(by_signature.size());
        for (auto& [k, r] : by_signature) out.push_back(std::move(r));
        std::sort(out.begin(), out.end(), [](const RootClassRecord& a, const RootClassRecord& b) {
            if (a.degree != b.degree) return a.degree < b.degree;
            return a.signature < b.signature;
        });
        return out;
    }
};

}  // namespace

std::vector<RootClassRecord> classify_nonseparating(const NonseparatingSpec& spec,
                                                    const ClassifyOptions& opts) {
    validate_spec(MulticurveSpec{spec});
    const i64 g = spec.genus, m = spec.curves, r = spec.r;
    const i64 gC = g - m;
    i64 bound = opts.max_degree > 0 ? opts.max_degree : bound_nonseparating(g, m, r);

    std::vector<i64> doubled = spec.sizes;
    doubled.insert(doubled.end(), spec.sizes.begin(), spec.sizes.end());
    std::sort(doubled.begin(), doubled.end());

    std::vector<i64> degrees;
    for (i64 n = 2; n <= bound; ++n) {
        if (g == m && m % n != 0) continue;
        if (opts.enforce_oddness && r >= 1 && n % 2 == 0) continue;
        bool ok = true;
        for (i64 s : spec.sizes)
            if (s > n || n % s != 0) { ok = false; break; }
        if (ok) degrees.push_back(n);
    }

    RecordSink sink;
    parallel_degrees(degrees, opts.jobs, [&](i64 n) {
        EnumQuery q;
        q.genus = gC;
        q.degree = n;
        q.r = 2 * r;
        for (const auto& d : enumerate_datasets(q)) {
            for (auto& orb : orbit_distributions(d, doubled)) {
                PermutingDataSet pd{d, orb};
                auto w = nonseparating_check(pd, r, spec.sizes, opts.mode);
                if (!w) continue;
                RootClassRecord rec;
                rec.degree = n;
                rec.components.push_back(RecordComponent{ComponentKey{0, -1}, 1, pd});
                rec.witness = *w;
                rec.signature = record_signature(rec, 1, false);
                sink.add(std::move(rec));
            }
        }
    });
    return sink.sorted();
}

namespace {

struct ComponentPlan {
    ComponentKey key;
    i64 copies = 1;         // m (1 for centers)
    i64 ds_genus = 0;       // genus of the cut-and-capped data set
    i64 residues = 0;       // required distinguished residue count
    bool degree_pinned = false;  // internal curves pin the degree
    const SatelliteSpec* sat = nullptr;
    const NodeSpec* node = nullptr;
};

struct ChainProblem {
    const ChainSpec* spec;
    std::vector<ComponentPlan> comps;             // node order, center then satellites
    std::map<ComponentKey, size_t> index;
    std::vector<UnitRequirement> req_templates;   // n_eff filled per degree
};

ChainProblem plan_chain(const ChainSpec& chain) {
    ChainProblem pb;
    pb.spec = &chain;
    for (size_t i = 0; i < chain.nodes.size(); ++i) {
        const auto& nd = chain.nodes[i];
        ComponentPlan center;
        center.key = ComponentKey{static_cast<i64>(i), -1};
        center.copies = 1;
        center.ds_genus = nd.genus - nd.internal.curve_count();
        center.residues = 2 * nd.internal.r;
        center.degree_pinned = !nd.internal.empty();
        center.node = &nd;
        if (i > 0)
            for (i64 s : chain.edges[i - 1].sizes)
                if (s == 1) ++center.residues;
        if (i < chain.edges.size())
            for (i64 s : chain.edges[i].sizes)
                if (s == 1) ++center.residues;
        pb.comps.push_back(center);
        for (size_t j = 0; j < nd.satellites.size(); ++j) {
            const auto& st = nd.satellites[j];
            ComponentPlan sat;
            sat.key = ComponentKey{static_cast<i64>(i), static_cast<i64>(j)};
            sat.copies = st.copies;
            sat.ds_genus = st.genus - st.internal.curve_count();
            sat.residues = 2 * st.internal.r;
            sat.degree_pinned = !st.internal.empty();
            sat.sat = &st;
            pb.comps.push_back(sat);
        }
    }
    for (size_t i = 0; i < pb.comps.size(); ++i) pb.index[pb.comps[i].key] = i;

    // Requirement templates: edges, then satellite gluings, then internals.
    for (size_t e = 0; e < chain.edges.size(); ++e) {
        std::vector<i64> sizes = chain.edges[e].sizes;
        std::sort(sizes.begin(), sizes.end(), std::greater<i64>());
        for (i64 s : sizes) {
            UnitRequirement rq;
            rq.a = ComponentKey{static_cast<i64>(e), -1};
            rq.b = ComponentKey{static_cast<i64>(e) + 1, -1};
            rq.residues = (s == 1);
            rq.size = s;
            rq.tag = "edge:" + std::to_string(e);
            pb.req_templates.push_back(rq);
        }
    }
    for (size_t i = 0; i < chain.nodes.size(); ++i) {
        for (size_t j = 0; j < chain.nodes[i].satellites.size(); ++j) {
            std::vector<i64> sizes = chain.nodes[i].satellites[j].sizes;
            std::sort(sizes.begin(), sizes.end(), std::greater<i64>());
            for (i64 s : sizes) {
                UnitRequirement rq;
                rq.a = ComponentKey{static_cast<i64>(i), -1};
                rq.b = ComponentKey{static_cast<i64>(i), static_cast<i64>(j)};
                rq.residues = (s == 1);
                rq.size = s;
                rq.tag = "sat:" + std::to_string(i) + "." + std::to_string(j);
                pb.req_templates.push_back(rq);
            }
        }
    }
    return pb;
}

// Internal requirements are degree-dependent only through n_eff (component
// degree), so they are appended per assignment.
void append_internal_reqs(std::vector<UnitRequirement>& reqs, const ComponentKey& key,
                          const InternalSpec& internal, i64 comp_degree) {
    for (i64 i = 0; i < internal.r; ++i) {
        UnitRequirement rq;
        rq.a = key;
        rq.b = key;
        rq.residues = true;
        rq.size = 1;
        rq.n_eff = comp_degree;
        rq.tag = "internal:" + key.str();
        reqs.push_back(rq);
    }
    std::vector<i64> sizes = internal.sizes;
    std::sort(sizes.begin(), sizes.end(), std::greater<i64>());
    for (i64 s : sizes) {
        UnitRequirement rq;
        rq.a = key;
        rq.b = key;
        rq.residues = false;
        rq.size = s;
        rq.n_eff = comp_degree;
        rq.tag = "internal:" + key.str();
        reqs.push_back(rq);
    }
}

// Satellite blocks of one node with identical specs are interchangeable, so
// two records differing only by such a swap are one conjugacy class.  Reorder
// the blocks into a canonical position (by data set, distribution and the
// consumed classes) and rewrite the witness keys accordingly.
void relabel_identical_satellites(const ChainSpec& chain, RootClassRecord& rec) {
    bool any = false;
    std::map<ComponentKey, ComponentKey> rename;
    for (size_t i = 0; i < chain.nodes.size(); ++i) {
        const auto& sats = chain.nodes[i].satellites;
        // Group contiguous satellites with equal specs.
        size_t j = 0;
        while (j < sats.size()) {
            size_t k = j + 1;
            while (k < sats.size() && sats[k] == sats[j]) ++k;
            if (k - j > 1) {
                struct Entry { std::string content; i64 old_sat; };
                std::vector<Entry> group;
                for (size_t s = j; s < k; ++s) {
                    ComponentKey key{static_cast<i64>(i), static_cast<i64>(s)};
                    const PermutingDataSet* pd = rec.find(key);
                    std::vector<std::string> own;
                    for (const auto& p : rec.witness.pairs) {
                        if (p.side1 == key || p.side2 == key) {
                            const ClassRef& mine = p.side1 == key ? p.class1 : p.class2;
                            own.push_back(std::to_string(p.size) + "/" + to_string(mine.kind) + "/" +
                                          std::to_string(mine.index));
                        }
                    }
                    std::sort(own.begin(), own.end());
                    std::string content = pd->str();
                    for (const auto& o : own) content += ";" + o;
                    group.push_back({content, static_cast<i64>(s)});
                }
                std::vector<Entry> sorted = group;
                std::stable_sort(sorted.begin(), sorted.end(),
                                 [](const Entry& a, const Entry& b) { return a.content < b.content; });
                for (size_t s = 0; s < sorted.size(); ++s) {
                    if (sorted[s].old_sat != group[s].old_sat) any = true;
                    rename[ComponentKey{static_cast<i64>(i), sorted[s].old_sat}] =
                        ComponentKey{static_cast<i64>(i), group[s].old_sat};
                }
            }
            j = k;
        }
    }
    if (!any) return;
    auto map_key = [&](const ComponentKey& k) {
        auto it = rename.find(k);
        return it == rename.end() ? k : it->second;
    };
    for (auto& c : rec.components) c.key = map_key(c.key);
    std::sort(rec.components.begin(), rec.components.end(),
              [](const RecordComponent& a, const RecordComponent& b) { return a.key < b.key; });
    for (auto& p : rec.witness.pairs) {
        p.side1 = map_key(p.side1);
        p.side2 = map_key(p.side2);
        if (p.tag.rfind("sat:", 0) == 0) {
            ComponentKey side = p.side2.sat >= 0 ? p.side2 : p.side1;
            p.tag = "sat:" + std::to_string(side.node) + "." + std::to_string(side.sat);
        } else if (p.tag.rfind("internal:", 0) == 0) {
            p.tag = "internal:" + p.side1.str();
        }
    }
}

// Quick feasibility filter: the data set must offer enough units of each
// required size (free units are unlimited when the free class matches).
bool units_available(const DataSet& d, i64 copies, const std::map<i64, i64>& size_needs) {
    for (const auto& [S, need] : size_needs) {
        bool free_ok = lcm_i64(copies, d.n) == S;
        if (free_ok) continue;
        i64 have = 0;
        for (const auto& c : d.cones)
            if (lcm_i64(copies, d.n / c.b) == S) ++have;
        if (have < need) return false;
    }
    return true;
}

}  // namespace

std::vector<RootClassRecord> classify_mixed(const ChainSpec& chain, const ClassifyOptions& opts) {
    validate_spec(MulticurveSpec{chain});
    ChainProblem pb = plan_chain(chain);
    const bool palin = chain_palindromic(chain);
    const i64 node_count = static_cast<i64>(chain.nodes.size());
    i64 bound = opts.max_degree > 0 ? opts.max_degree : bound_separating(chain);

    // Per-component required orbit-unit sizes (excluding residue consumption),
    // for feasibility pre-filtering.
    std::map<ComponentKey, std::map<i64, i64>> size_needs;
    for (const auto& rq : pb.req_templates) {
        if (rq.residues) continue;
        ++size_needs[rq.a][rq.size];
        ++size_needs[rq.b][rq.size];
    }
    for (const auto& cp : pb.comps) {
        const InternalSpec* internal = cp.sat ? &cp.sat->internal : &cp.node->internal;
        for (i64 s : internal->sizes) size_needs[cp.key][s] += 2;
    }

    DataSetCache cache;
    RecordSink sink;
    std::vector<i64> degrees;
    for (i64 n = 2; n <= bound; ++n) degrees.push_back(n);

    parallel_degrees(degrees, opts.jobs, [&](i64 n) {
        const auto divs = divisors_of(n);
        // Candidate degrees per component.
        std::vector<std::vector<i64>> cand(pb.comps.size());
        for (size_t i = 0; i < pb.comps.size(); ++i) {
            const auto& cp = pb.comps[i];
            if (cp.degree_pinned) {
                i64 q = cp.sat ? (n % cp.copies == 0 ? n / cp.copies : 0) : n;
                if (q >= 1) cand[i].push_back(q);
            } else {
                cand[i] = divs;
            }
            if (cand[i].empty()) return;
        }

        // Assign degrees with the lcm constraints, then data sets, then match.
        std::vector<i64> deg(pb.comps.size(), 0);
        std::vector<const DataSet*> pick(pb.comps.size(), nullptr);

        std::function<void(size_t)> assign_ds = [&](size_t ci) {
            if (ci == pb.comps.size()) {
                std::map<ComponentKey, Side> sides;
                for (size_t i = 0; i < pb.comps.size(); ++i) {
                    Side s;
                    s.pd.dataset = *pick[i];
                    s.copies = pb.comps[i].copies;
                    sides[pb.comps[i].key] = s;
                }
                std::vector<UnitRequirement> reqs = pb.req_templates;
                for (auto& rq : reqs) rq.n_eff = n;
                for (const auto& cp : pb.comps) {
                    const InternalSpec* internal = cp.sat ? &cp.sat->internal : &cp.node->internal;
                    if (!internal->empty())
                        append_internal_reqs(reqs, cp.key, *internal, deg[pb.index.at(cp.key)]);
                }
                match_units_all(sides, reqs, opts.mode, [&](const PairingWitness& w) {
                    RootClassRecord rec;
                    rec.degree = n;
                    for (size_t i = 0; i < pb.comps.size(); ++i) {
                        RecordComponent rc;
                        rc.key = pb.comps[i].key;
                        rc.copies = pb.comps[i].copies;
                        rc.pd.dataset = *pick[i];
                        rec.components.push_back(std::move(rc));
                    }
                    // Orbit distributions from the consumed units.
                    for (const auto& p : w.pairs) {
                        auto add_unit = [&](const ComponentKey& key, const ClassRef& ref) {
                            if (ref.kind == ClassKind::Residue) return;
                            for (auto& rc : rec.components) {
                                if (!(rc.key == key)) continue;
                                if (ref.kind == ClassKind::Free) rc.pd.orbits.add(free_class());
                                else rc.pd.orbits.add(rc.pd.dataset.cones.at(ref.index));
                            }
                        };
                        add_unit(p.side1, p.class1);
                        add_unit(p.side2, p.class2);
                    }
                    rec.witness = w;
                    relabel_identical_satellites(chain, rec);
                    rec.signature = record_signature(rec, node_count, palin);
                    sink.add(std::move(rec));
                    return true;  // keep enumerating witnesses
                });
                return;
            }
            const auto& cp = pb.comps[ci];
            static const std::map<i64, i64> kNoNeeds;
            auto needs_it = size_needs.find(cp.key);
            const auto& needs = needs_it == size_needs.end() ? kNoNeeds : needs_it->second;
            for (const DataSet& d : cache.get(cp.ds_genus, deg[ci], cp.residues)) {
                if (!units_available(d, cp.copies, needs)) continue;
                pick[ci] = &d;
                assign_ds(ci + 1);
                pick[ci] = nullptr;
            }
        };

        std::function<void(size_t)> assign_deg = [&](size_t ci) {
            if (ci == pb.comps.size()) {
                // lcm constraints: every edge and satellite gluing must realize n.
                for (size_t e = 0; e < chain.edges.size(); ++e) {
                    i64 qa = deg[pb.index.at(ComponentKey{static_cast<i64>(e), -1})];
                    i64 qb = deg[pb.index.at(ComponentKey{static_cast<i64>(e) + 1, -1})];
                    if (lcm_i64(qa, qb) != n) return;
                }
                for (size_t i = 0; i < chain.nodes.size(); ++i) {
                    i64 qc = deg[pb.index.at(ComponentKey{static_cast<i64>(i), -1})];
                    for (size_t j = 0; j < chain.nodes[i].satellites.size(); ++j) {
                        const auto& st = chain.nodes[i].satellites[j];
                        i64 qs = deg[pb.index.at(ComponentKey{static_cast<i64>(i), static_cast<i64>(j)})];
                        if (lcm_i64(qc, union_order(st.copies, qs)) != n) return;
                    }
                }
                assign_ds(0);
                return;
            }
            for (i64 q : cand[ci]) {
                deg[ci] = q;
                assign_deg(ci + 1);
            }
        };
        assign_deg(0);
    });
    return sink.sorted();
}

std::vector<RootClassRecord> classify_separating(const ChainSpec& chain,
                                                 const ClassifyOptions& opts) {
    for (const auto& nd : chain.nodes) {
        if (!nd.internal.empty()) throw std::invalid_argument("classify_separating: internal curves present (use classify_mixed)");
        for (const auto& st : nd.satellites)
            if (!st.internal.empty()) throw std::invalid_argument("classify_separating: internal curves present (use classify_mixed)");
    }
    return classify_mixed(chain, opts);
}

std::vector<RootClassRecord> classify(const MulticurveSpec& spec, const ClassifyOptions& opts) {
    if (const auto* ns = std::get_if<NonseparatingSpec>(&spec)) return classify_nonseparating(*ns, opts);
    return classify_mixed(std::get<ChainSpec>(spec), opts);
}

}  // namespace twistroot
