// tuttec: compute Tutte-style invariants of small combinatorial structures,
// verify their deletion-contraction and convolution identities, and inspect
// Grothendieck monoid presentations.
//
// Exit codes: 0 success, 1 identity failure (a witness is printed), 2 input
// or usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>
#include <variant>

#include "tutte/arithmetic.hpp"
#include "tutte/colored.hpp"
#include "tutte/delta.hpp"
#include "tutte/graph.hpp"
#include "tutte/matroid.hpp"
#include "tutte/relative.hpp"
#include "tutte/set_system.hpp"
#include "tutte/submodular.hpp"

using json = nlohmann::json;
using namespace tutte;

namespace {

// ---------------------------------------------------------------------------
// Input parsing

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

uint32_t mask_from_list(const json& j, int n) {
    uint32_t m = 0;
    for (const auto& v : j) {
        int e = v.get<int>();
        if (e < 0 || e >= n) throw InputError("element index out of range");
        m |= 1u << e;
    }
    return m;
}

RankTable parse_matroid(const json& j) {
    int n = j.at("n").get<int>();
    if (j.contains("rank")) {
        std::vector<int> rk;
        for (const auto& v : j.at("rank")) rk.push_back(v.get<int>());
        return RankTable(n, std::move(rk));
    }
    if (j.contains("bases")) {
        std::vector<uint32_t> bases;
        for (const auto& b : j.at("bases")) bases.push_back(mask_from_list(b, n));
        return matroid_from_bases(n, bases);
    }
    throw InputError("matroid needs \"rank\" or \"bases\"");
}

using Structure = std::variant<RankTable, EdgeGraph, FeasibleFamily, Perspective,
                               DMPerspective, RelMatroid, SubmodTable, ColoredMatroid,
                               ArithMatroid>;

Structure parse_structure(const json& j) {
    std::string type = j.at("type").get<std::string>();
    if (type == "matroid") return parse_matroid(j);
    if (type == "graph") {
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : j.at("edges"))
            edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        return EdgeGraph(j.at("vertices").get<int>(), std::move(edges));
    }
    if (type == "delta") {
        int n = j.at("n").get<int>();
        std::vector<uint32_t> fs;
        for (const auto& f : j.at("feasible")) fs.push_back(mask_from_list(f, n));
        return FeasibleFamily(n, std::move(fs));
    }
    if (type == "perspective")
        return Perspective(parse_matroid(j.at("M")), parse_matroid(j.at("Mprime")));
    if (type == "dmp") {
        const json& d = j.at("D");
        int n = d.at("n").get<int>();
        std::vector<uint32_t> fs;
        for (const auto& f : d.at("feasible")) fs.push_back(mask_from_list(f, n));
        return DMPerspective(parse_matroid(j.at("M")), FeasibleFamily(n, std::move(fs)),
                             parse_matroid(j.at("Mprime")));
    }
    if (type == "relative") {
        RankTable m = parse_matroid(j.at("matroid"));
        return RelMatroid(m, mask_from_list(j.at("zero_set"), m.n));
    }
    if (type == "submodular") {
        int n = j.at("n").get<int>();
        std::vector<int> rk;
        for (const auto& v : j.at("rank")) rk.push_back(v.get<int>());
        SubmodTable t(n, std::move(rk));
        if (j.value("polymatroid", false) && !t.is_polymatroid)
            throw InputError("table is not monotone");
        return t;
    }
    if (type == "colored") {
        std::vector<std::string> names;
        for (const auto& c : j.at("colors")) names.push_back(c.get<std::string>());
        std::vector<std::string> palette = names;
        std::sort(palette.begin(), palette.end());
        palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
        std::vector<int> color;
        for (const auto& c : names)
            color.push_back(
                (int)(std::find(palette.begin(), palette.end(), c) - palette.begin()));
        return ColoredMatroid(parse_matroid(j.at("matroid")), std::move(color),
                              std::move(palette));
    }
    if (type == "arithmetic") {
        std::vector<BigInt> mult;
        for (const auto& v : j.at("multiplicity")) mult.push_back(BigInt(v.get<long long>()));
        return ArithMatroid(parse_matroid(j.at("matroid")), std::move(mult));
    }
    if (type == "arithmetic_presentation") {
        std::vector<BigInt> torsion;
        for (const auto& v : j.at("torsion")) torsion.push_back(BigInt(v.get<long long>()));
        std::vector<std::vector<BigInt>> cols;
        for (const auto& c : j.at("columns")) {
            cols.emplace_back();
            for (const auto& v : c) cols.back().push_back(BigInt(v.get<long long>()));
        }
        return from_presentation(AbelianPresentation(j.at("free_rank").get<int>(),
                                                     std::move(torsion), std::move(cols)));
    }
    throw InputError("unknown input type '" + type + "'");
}

Structure load_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    json j;
    in >> j;
    return parse_structure(j);
}

// ---------------------------------------------------------------------------
// Rendering

json poly_to_json(const Poly& p, const std::string& invariant) {
    const MonoidSig& sig = *p.sig();
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        json mono = json::object();
        for (size_t i = 0; i < sig.axes.size(); ++i) {
            if (m.exps[i] == 0) continue;
            if (sig.axes[i].half && m.exps[i] % 2)
                mono[sig.axes[i].name] = std::to_string(m.exps[i]) + "/2";
            else
                mono[sig.axes[i].name] = sig.axes[i].half ? m.exps[i] / 2 : m.exps[i];
        }
        for (size_t i = 0; i < sig.prime_axes.size(); ++i) {
            if (m.primes[i].empty()) continue;
            std::ostringstream os;
            bool first = true;
            for (const auto& [q, k] : m.primes[i]) {
                if (!first) os << "*";
                first = false;
                os << q << "^" << k;
            }
            mono["[" + sig.prime_axes[i].name + "]"] = os.str();
        }
        terms.push_back({{"coeff", c.str()}, {"monomial", mono}});
    }
    return json{{"invariant", invariant}, {"terms", terms}};
}

// parse "x=2,y=1/3" into constant assignments on the polynomial's signature
Poly apply_vars(const Poly& p, const std::string& vars) {
    if (vars.empty()) return p;
    Specialization s;
    s.target = p.sig();
    std::stringstream ss(vars);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw InputError("bad --vars entry '" + item + "'");
        std::string name = item.substr(0, eq), val = item.substr(eq + 1);
        BigInt num, den = 1;
        auto slash = val.find('/');
        try {
            num = BigInt(slash == std::string::npos ? val : val.substr(0, slash));
            if (slash != std::string::npos) den = BigInt(val.substr(slash + 1));
        } catch (const std::exception&) {
            throw InputError("bad rational '" + val + "'");
        }
        if (den == 0) throw InputError("zero denominator in --vars");
        s.axis_values.emplace(p.sig()->axis_index(name),
                              Poly::constant(s.target, Coeff(BigRat(num, den))));
    }
    return p.specialize(s);
}

// ---------------------------------------------------------------------------
// compute

struct ComputeResult {
    Poly poly;
    std::vector<std::pair<std::string, std::string>> legend;  // axis -> meaning
};

ComputeResult dispatch_compute(const Structure& st, const std::string& inv,
                               long long prime) {
    ComputeResult r{Poly::zero(SigBuilder().build()), {}};
    if (const auto* m = std::get_if<RankTable>(&st)) {
        if (inv == "tutte") r.poly = tutte_classical(*m);
        else if (inv == "universal") r.poly = tutte_universal(*m);
        else if (inv == "multivariate") r.poly = tutte_multivariate(*m);
        else if (inv == "corank-nullity") r.poly = tutte_corank_nullity(*m);
        else throw InputError("matroid invariants: tutte, universal, multivariate, corank-nullity");
    } else if (const auto* g = std::get_if<EdgeGraph>(&st)) {
        if (inv == "dichromatic") r.poly = dichromatic(*g);
        else if (inv == "chromatic") {
            SigPtr sig = SigBuilder().axis("q").build();
            r.poly = chromatic(*g, sig, Poly::var(sig, "q"));
        } else if (inv == "universal") r.poly = graph_universal(*g);
        else throw InputError("graph invariants: dichromatic, chromatic, universal");
    } else if (const auto* d = std::get_if<FeasibleFamily>(&st)) {
        if (inv == "br") r.poly = bollobas_riordan(*d);
        else if (inv == "universal") r.poly = delta_universal(*d);
        else throw InputError("delta invariants: br, universal");
    } else if (const auto* p = std::get_if<Perspective>(&st)) {
        if (inv == "las-vergnas") r.poly = las_vergnas(*p);
        else if (inv == "universal") r.poly = matper_universal(*p);
        else throw InputError("perspective invariants: las-vergnas, universal");
    } else if (const auto* t = std::get_if<DMPerspective>(&st)) {
        if (inv == "krushkal") r.poly = krushkal(*t);
        else if (inv == "universal") r.poly = dmp_universal(*t);
        else throw InputError("dmp invariants: krushkal, universal");
    } else if (const auto* x = std::get_if<RelMatroid>(&st)) {
        R0Legend legend = rel_twist_legend(*x);
        if (inv == "relative-tutte") {
            SigPtr sig = rel_sig(legend, {"x", "y", "z"});
            r.poly = relative_tutte(*x, sig, legend);
        } else if (inv == "pointed-lv") {
            r.poly = pointed_las_vergnas(*x);
            legend = R0Legend{};
        } else if (inv == "universal") {
            SigPtr sig = rel_sig(legend, {"u1", "v1", "w1", "u2", "v2", "w2"});
            r.poly = relative_universal(*x, sig, legend);
        } else throw InputError("relative invariants: relative-tutte, pointed-lv, universal");
        for (size_t i = 0; i < legend.axis_names.size(); ++i)
            r.legend.emplace_back(legend.axis_names[i], legend.component_keys[i]);
    } else if (const auto* s = std::get_if<SubmodTable>(&st)) {
        if (inv == "t-sf") r.poly = t_sf(*s);
        else if (inv == "image") r.poly = sf_universal_image(*s);
        else throw InputError("submodular invariants: t-sf, image");
    } else if (const auto* c = std::get_if<ColoredMatroid>(&st)) {
        if (inv == "colored-tutte") r.poly = colored_tutte(*c);
        else if (inv == "universal") r.poly = colored_universal(*c);
        else throw InputError("colored invariants: colored-tutte, universal");
    } else if (const auto* a = std::get_if<ArithMatroid>(&st)) {
        if (inv == "arith-tutte") r.poly = universal_arith_tutte(*a);
        else if (inv == "arith-tutte-full")
            r.poly = arith_specialize(universal_arith_tutte(*a), ArithMode::Full);
        else if (inv == "arith-tutte-forget")
            r.poly = arith_specialize(universal_arith_tutte(*a), ArithMode::Forget);
        else if (inv == "arith-tutte-plocal")
            r.poly = arith_specialize(universal_arith_tutte(*a), ArithMode::PLocal, prime);
        else if (inv == "universal") r.poly = universal_arith_tutte(*a);
        else throw InputError(
            "arithmetic invariants: arith-tutte, arith-tutte-full, arith-tutte-forget, "
            "arith-tutte-plocal");
    }
    return r;
}

// ---------------------------------------------------------------------------
// verify

// run a per-index check in parallel; the report is ordered by index and thus
// independent of the schedule
template <class F>
int run_parallel(size_t count, int threads, const std::string& name, F&& check) {
    std::vector<std::optional<Witness>> results(count);
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
            results[i] = check(i);
    };
    int t = std::max(1, threads);
    std::vector<std::thread> pool;
    for (int i = 1; i < t; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    for (size_t i = 0; i < count; ++i)
        if (results[i]) {
            std::cout << "FAIL " << name << " at instance " << i << "\n"
                      << "  " << results[i]->context << "\n"
                      << "  lhs = " << results[i]->lhs << "\n"
                      << "  rhs = " << results[i]->rhs << "\n";
            return 1;
        }
    std::cout << "PASS " << count << " instances (" << name << ")\n";
    return 0;
}

template <class T, class F>
int run_over(const std::vector<T>& xs, int threads, const std::string& name, F&& check) {
    return run_parallel(xs.size(), threads, name,
                        [&](size_t i) { return check(xs[i]); });
}

std::vector<RankTable> matroid_pool(int bound, std::mt19937& rng, int randoms) {
    std::vector<RankTable> pool;
    for (int n = 0; n <= std::min(bound, 4); ++n)
        for (auto& m : enumerate_matroids(n)) pool.push_back(std::move(m));
    for (int i = 0; i < randoms; ++i)
        pool.push_back(random_matroid(rng, std::max(5, bound)));
    return pool;
}

std::vector<ArithMatroid> arith_pool(std::mt19937& rng, int randoms) {
    std::vector<ArithMatroid> pool = {
        arith_coloop(2), arith_loop(6),
        from_presentation(AbelianPresentation(1, {}, {{1}, {2}})),
        from_presentation(AbelianPresentation(0, {6}, {{1}, {2}})),
        from_presentation(AbelianPresentation(2, {}, {{2, 0}, {0, 3}, {1, 1}})),
        from_presentation(AbelianPresentation(1, {4}, {{1, 1}, {0, 2}, {2, 0}, {1, 3}}))};
    for (int i = 0; i < randoms; ++i) {
        int r = 1 + (int)(rng() % 2);
        std::vector<BigInt> torsion;
        if (rng() % 2) torsion.push_back(2 + (int)(rng() % 5));
        std::vector<std::vector<BigInt>> cols(2 + rng() % 3);
        for (auto& c : cols) {
            c.resize(r + torsion.size());
            for (auto& v : c) v = (int)(rng() % 7) - 3;
        }
        pool.push_back(from_presentation(AbelianPresentation(r, torsion, cols)));
    }
    return pool;
}

std::optional<Witness> duality_check(const RankTable& m) {
    SigPtr sig = xy_sig();
    Poly x = Poly::var(sig, "x"), y = Poly::var(sig, "y");
    Poly lhs = tutte_eval(dual(m), x, y), rhs = tutte_eval(m, y, x);
    if (lhs == rhs) return std::nullopt;
    return Witness{"duality failed on " + rank_table_key(canonical_form(m)), lhs, rhs};
}

std::optional<Witness> relative_lv_check(const RelMatroid& x) {
    Poly lhs = pointed_las_vergnas(x);
    SigPtr sig = xyz_sig();
    int re = x.rank_e(full_mask(x.esize()));
    Poly rhs = Poly::var(sig, "z").pow(x.m.rank() - re) * las_vergnas(to_perspective(x), sig);
    if (lhs == rhs) return std::nullopt;
    return Witness{"pointed LV mismatch on " + RelSystem::key(x), lhs, rhs};
}

template <class S>
std::optional<Witness> engine_check(const typename S::Value& x,
                                    const CharacterSpec<S>& spec) {
    Poly a = tutte_character<S>(x, spec);
    std::map<std::string, Poly> memo;
    Poly b = delcon_evaluate<S>(x, spec, &memo);
    if (a == b) return std::nullopt;
    return Witness{"deletion-contraction disagrees on " + S::key(x), a, b};
}

int cmd_verify(const std::string& identity, const std::string& input, int bound,
               unsigned seed, int threads) {
    std::mt19937 rng(seed);
    if (identity == "duality" || identity == "kung" || identity == "krs" ||
        identity == "iterated" || identity == "signflip") {
        std::vector<RankTable> pool;
        if (!input.empty()) pool.push_back(std::get<RankTable>(load_input(input)));
        else pool = matroid_pool(bound, rng, 20);
        auto check = [&](const RankTable& m) {
            if (identity == "duality") return duality_check(m);
            if (identity == "kung") return kung_check(m);
            if (identity == "krs") return krs_check(m);
            if (identity == "iterated") return iterated_check(m, 3);
            return signflip_check(m);
        };
        return run_over(pool, threads, identity, check);
    }
    if (identity == "chromatic-conv") {
        std::vector<EdgeGraph> pool;
        if (!input.empty()) pool.push_back(std::get<EdgeGraph>(load_input(input)));
        else for (int k = 0; k <= std::min(bound, 4); ++k)
            for (auto& g : graphs_with_edges(k)) pool.push_back(std::move(g));
        return run_over(pool, threads, identity, chromatic_convolution_check);
    }
    if (identity == "lv-conv" || identity == "lv-krs") {
        std::vector<Perspective> pool;
        if (!input.empty()) pool.push_back(std::get<Perspective>(load_input(input)));
        else for (int n = 0; n <= std::min(bound, 3); ++n)
            for (auto& p : enumerate_perspectives(n)) pool.push_back(std::move(p));
        auto check = [&](const Perspective& p) {
            return identity == "lv-conv" ? lv_convolution_check(p) : lv_krs_check(p);
        };
        return run_over(pool, threads, identity, check);
    }
    if (identity == "br-conv") {
        std::vector<FeasibleFamily> pool;
        if (!input.empty()) pool.push_back(std::get<FeasibleFamily>(load_input(input)));
        else for (int n = 0; n <= std::min(bound, 3); ++n)
            for (auto& d : enumerate_deltas(n)) pool.push_back(std::move(d));
        return run_over(pool, threads, identity, br_convolution_check);
    }
    if (identity == "relative-lv") {
        std::vector<RelMatroid> pool;
        if (!input.empty()) pool.push_back(std::get<RelMatroid>(load_input(input)));
        else for (int n = 0; n <= std::min(bound, 4); ++n)
            for (auto& x : enumerate_relative(n)) pool.push_back(std::move(x));
        return run_over(pool, threads, identity, relative_lv_check);
    }
    if (identity == "arith-conv" || identity == "backman-lenz") {
        std::vector<ArithMatroid> pool;
        if (!input.empty()) pool.push_back(std::get<ArithMatroid>(load_input(input)));
        else pool = arith_pool(rng, 10);
        auto check = [&](const ArithMatroid& a) {
            if (identity == "backman-lenz") return backman_lenz_check(a);
            ArithMatroid ones(a.m, std::vector<BigInt>(a.mult.size(), 1));
            auto w = arith_convolution_check(a, a);
            return w ? w : arith_convolution_check(a, ones);
        };
        return run_over(pool, threads, identity, check);
    }
    if (identity.rfind("delcon-", 0) == 0) {
        std::string fam = identity.substr(7);
        if (fam == "mat") {
            SigPtr sig = mat_universal_sig();
            auto spec = CharacterSpec<MatroidSystem>::make(sig, mat_norm(sig, "u1", "v1"),
                                                           mat_norm(sig, "u2", "v2"));
            return run_over(matroid_pool(bound, rng, 20), threads, identity,
                            [&](const RankTable& m) { return engine_check(m, spec); });
        }
        if (fam == "graph") {
            std::vector<EdgeGraph> pool;
            for (int k = 0; k <= std::min(bound, 4); ++k)
                for (auto& g : graphs_with_edges(k)) pool.push_back(std::move(g));
            SigPtr sig = gra_universal_sig();
            auto spec = CharacterSpec<GraphSystem>::make(sig, gra_norm(sig, "u1", "v1"),
                                                         gra_norm(sig, "u2", "v2"),
                                                         gra_twist(sig));
            return run_over(pool, threads, identity,
                            [&](const EdgeGraph& g) { return engine_check(g, spec); });
        }
        if (fam == "delta") {
            std::vector<FeasibleFamily> pool;
            for (int n = 0; n <= std::min(bound, 3); ++n)
                for (auto& d : enumerate_deltas(n)) pool.push_back(std::move(d));
            SigPtr sig = delta_universal_sig();
            auto spec = CharacterSpec<DeltaSystem>::make(sig, delta_norm(sig, "u1", "v1", "w1"),
                                                         delta_norm(sig, "u2", "v2", "w2"));
            return run_over(pool, threads, identity,
                            [&](const FeasibleFamily& d) { return engine_check(d, spec); });
        }
        if (fam == "arith") {
            SigPtr sig = arith_sig();
            auto spec = arith_character_spec(sig);
            return run_over(arith_pool(rng, 10), threads, identity,
                            [&](const ArithMatroid& a) { return engine_check(a, spec); });
        }
        throw InputError("delcon families: mat, graph, delta, arith");
    }
    if (identity == "delta-count" || identity == "dmp-count" ||
        identity == "perspective-count" || identity == "matroid-count") {
        size_t count = 0;
        if (identity == "delta-count") count = enumerate_deltas(bound).size();
        else if (identity == "dmp-count") count = enumerate_dmps(bound).size();
        else if (identity == "perspective-count") count = enumerate_perspectives(bound).size();
        else count = count_canonical_matroids(bound);
        std::cout << identity << " at size " << bound << ": " << count << "\n";
        return 0;
    }
    throw InputError("unknown identity '" + identity + "'");
}

// ---------------------------------------------------------------------------
// grothendieck

void print_presentation(const GrothendieckPresentation& p) {
    std::cout << "generators (" << p.generators.size() << "):\n";
    for (const auto& g : p.generators) std::cout << "  " << g << "\n";
    if (p.relations.empty()) {
        std::cout << "relations: none\n";
        return;
    }
    std::cout << "relations (" << p.relations.size() << "):\n";
    for (const auto& r : p.relations)
        std::cout << "  [" << r.lhs.first << "]*[" << r.lhs.second << "] = ["
                  << r.rhs.first << "]*[" << r.rhs.second << "]   (from " << r.source
                  << ")\n";
}

int cmd_grothendieck(const std::string& system) {
    if (system == "mat") {
        print_presentation(grothendieck_relations<MatroidSystem>(
            enumerate_labeled_matroids(1), enumerate_labeled_matroids(2)));
    } else if (system == "gra") {
        print_presentation(grothendieck_relations<GraphSystem>(graphs_with_edges(1),
                                                               graphs_with_edges(2)));
    } else if (system == "delta") {
        print_presentation(
            grothendieck_relations<DeltaSystem>(enumerate_deltas(1), enumerate_deltas(2)));
    } else if (system == "matper") {
        print_presentation(grothendieck_relations<MatPerSystem>(enumerate_perspectives(1),
                                                                enumerate_perspectives(2)));
    } else if (system == "dmp") {
        print_presentation(
            grothendieck_relations<DMPSystem>(enumerate_dmps(1), enumerate_dmps(2)));
    } else if (system == "colored") {
        std::vector<std::string> palette = {"a", "b"};
        print_presentation(grothendieck_relations<ColoredSystem>(
            enumerate_colored(1, palette), enumerate_colored(2, palette)));
    } else if (system == "sf") {
        std::cout << "enumeration unsupported; built-in monoid x^N y^Z "
                     "(restricted image: 1 and x^a y^b with a > 0)\n";
    } else if (system == "amat") {
        std::cout << "infinitely many generators; built-in embedding into "
                     "Q_{>0} x u^N v^N: [c_a] -> a*u, [l_a] -> (1/a)*v\n";
    } else {
        throw InputError("systems: mat, gra, delta, matper, dmp, colored, sf, amat");
    }
    return 0;
}

// ---------------------------------------------------------------------------
// enumerate

int cmd_enumerate(const std::string& family, int bound) {
    size_t count = 0;
    if (family == "matroid") count = enumerate_labeled_matroids(bound).size();
    else if (family == "matroid-iso") count = count_canonical_matroids(bound);
    else if (family == "delta") count = enumerate_deltas(bound).size();
    else if (family == "perspective") count = enumerate_perspectives(bound).size();
    else if (family == "dmp") count = enumerate_dmps(bound).size();
    else if (family == "relative") count = enumerate_relative(bound).size();
    else if (family == "graph") count = graphs_with_edges(bound).size();
    else throw InputError(
        "families: matroid, matroid-iso, delta, perspective, dmp, relative, graph");
    std::cout << family << " structures at size " << bound << ": " << count << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"universal Tutte characters of minors systems"};
    app.require_subcommand(1);

    std::string input, invariant, vars, format = "text", identity, system, family;
    int bound = 4, threads = 1;
    long long prime = 2;
    unsigned seed = 1;

    CLI::App* compute = app.add_subcommand("compute", "evaluate an invariant");
    compute->add_option("--input", input, "JSON structure file")->required();
    compute->add_option("--invariant", invariant, "invariant name")->required();
    compute->add_option("--vars", vars, "comma-separated rational substitutions");
    compute->add_option("--format", format, "text or json");
    compute->add_option("--prime", prime, "prime for arith-tutte-plocal");

    CLI::App* verify = app.add_subcommand("verify", "check an identity");
    verify->add_option("--identity", identity, "identity name")->required();
    verify->add_option("--input", input, "JSON structure file");
    verify->add_option("--enumerate", bound, "enumeration size bound");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--threads", threads, "worker threads");

    CLI::App* groth = app.add_subcommand("grothendieck", "print a monoid presentation");
    groth->add_option("--system", system, "minors system name")->required();

    CLI::App* enumer = app.add_subcommand("enumerate", "count structures");
    enumer->add_option("--family", family, "structure family")->required();
    enumer->add_option("--enumerate", bound, "size");

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) {
            ComputeResult r = dispatch_compute(load_input(input), invariant, prime);
            Poly p = apply_vars(r.poly, vars);
            if (format == "json") {
                json out = poly_to_json(p, invariant);
                if (!r.legend.empty()) {
                    json leg = json::object();
                    for (const auto& [axis, meaning] : r.legend) leg[axis] = meaning;
                    out["legend"] = leg;
                }
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << p << "\n";
                for (const auto& [axis, meaning] : r.legend)
                    std::cout << "  " << axis << " = [" << meaning << "]\n";
            }
            return 0;
        }
        if (verify->parsed()) return cmd_verify(identity, input, bound, seed, threads);
        if (groth->parsed()) return cmd_grothendieck(system);
        if (enumer->parsed()) return cmd_enumerate(family, bound);
    } catch (const Witness&) {
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
