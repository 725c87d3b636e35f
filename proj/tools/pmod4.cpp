// pmod4: partition congruences, class groups, Hilbert class polynomials and
// mod-4 relation search from the command line.  All machine output is JSON on
// stdout; diagnostics and --stats go to stderr.

#include <CLI11.hpp>
#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "pmod4/cache.hpp"
#include "pmod4/classical.hpp"
#include "pmod4/congruence.hpp"
#include "pmod4/hilbert.hpp"
#include "pmod4/mock_theta.hpp"
#include "pmod4/relations.hpp"
#include "pmod4/serialize.hpp"

using namespace pmod4;
using nlohmann::json;

namespace {

struct GlobalOpts {
    std::string cache_dir;
    bool stats = false;
    int jobs = 0;
};

std::optional<CacheStore> open_cache(const GlobalOpts& g) {
    std::string root = g.cache_dir;
    if (root.empty()) {
        if (const char* env = std::getenv("PARTITION_MOD4_CACHE")) root = env;
    }
    if (root.empty()) return std::nullopt;
    return CacheStore(root);
}

void print_stats(const GlobalOpts& g, const std::optional<CacheStore>& cache) {
    if (!g.stats) return;
    long h = cache ? cache->hits() : 0;
    long m = cache ? cache->misses() : 0;
    std::cerr << "cache hits: " << h << "\ncache misses: " << m << "\n";
}

const char* ring_token(int mod) {
    switch (mod) {
        case 0: return "z";
        case 2: return "mod2";
        case 4: return "mod4";
    }
    throw std::invalid_argument("--mod must be 0, 2 or 4");
}

// class group with cache; Hilbert polynomial with cache.
ClassGroupData load_class_group(long long D, std::optional<CacheStore>& cache) {
    std::string key = "classgroup/D=" + std::to_string(D) + ".json";
    if (cache) {
        if (auto j = cache->load(key)) return classgroup_from_json(*j);
    }
    auto cg = reduced_forms(D);
    if (cache) cache->store(key, classgroup_to_json(cg));
    return cg;
}

HilbertResult load_hilbert(long long D, const ClassGroupData& cg,
                           std::optional<CacheStore>& cache) {
    std::string key = "hilbert/D=" + std::to_string(D) + ".json";
    if (cache) {
        if (auto j = cache->load(key)) return hilbert_from_json(*j);
    }
    auto hr = hilbert_poly(D, cg);
    if (cache) cache->store(key, hilbert_to_json(D, cg.class_number(), hr));
    return hr;
}

int cmd_partition(long long n, long upto, bool table, int mod) {
    if (!table) {
        if (n < 0) throw std::domain_error("partition: n must be non-negative");
        auto p = partition_table<mpz_class>(long(n));
        mpz_class v = p.back();
        if (mod != 0) v = mpz_fdiv_ui(v.get_mpz_t(), (unsigned long)mod);
        std::cout << v.get_str() << "\n";
        return 0;
    }
    if (upto < 0) throw std::domain_error("partition: --upto must be non-negative");
    auto p = partition_table<mpz_class>(upto);
    for (long i = 0; i <= upto; ++i) {
        mpz_class v = p[std::size_t(i)];
        if (mod != 0) v = mpz_fdiv_ui(v.get_mpz_t(), (unsigned long)mod);
        std::cout << (i ? "," : "") << v.get_str();
    }
    std::cout << "\n";
    return 0;
}

template <class R>
json build_series(const std::string& kind, long N, long long D) {
    if (kind == "P") {
        if (D == 0) throw std::domain_error("series P requires --D");
        return series_to_json(twisted_series<R>(D, N).series);
    }
    if (kind == "f") return series_to_json(f_series<R>(N));
    if (kind == "omega") return series_to_json(omega_series<R>(N));
    if (kind == "delta") return series_to_json(delta_series<R>(N));
    if (kind == "j") return series_to_json(j_series<R>(N));
    if (kind == "invdelta") return series_to_json(inverse_delta_series<R>(N));
    throw std::domain_error("unknown series kind: " + kind);
}

int cmd_series(const std::string& kind, long N, int mod, long long D,
               std::optional<CacheStore>& cache) {
    std::string key = "series/" + kind + (D ? "-D" + std::to_string(D) : "") + "-" +
                      ring_token(mod) + "-" + std::to_string(N) + ".json";
    json out;
    std::optional<json> hit = cache ? cache->load(key) : std::nullopt;
    if (hit) {
        out = *hit;
    } else {
        switch (mod) {
            case 0: out = build_series<mpz_class>(kind, N, D); break;
            case 2: out = build_series<Mod2>(kind, N, D); break;
            case 4: out = build_series<Mod4>(kind, N, D); break;
        }
        if (cache) cache->store(key, out);
    }
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_verify(long long D, long N, const std::string& source) {
    CrSource src;
    if (source == "fast")
        src = CrSource::Fast;
    else if (source == "definition")
        src = CrSource::Definition;
    else
        throw std::domain_error("--source must be fast or definition");
    auto rep = verify_theorem1(D, N, src);
    std::cout << report_to_json(rep).dump() << "\n";
    return rep.ok() ? 0 : 1;
}

// Deterministic synthetic rows with an engineered dependency: rows 0 and 1
// are the same series, row 2 is independent.  Exercises the full relation
// pipeline without any large computation.
int cmd_find_relations_fixture(long N_check, const std::string& out_file) {
    const long B = sturm_bound(1);
    auto g = [](long N) {
        return partition_series<Mod4>(N);
    };
    auto h = [](long N) { return delta_series<Mod4>(N); };
    RowBuilder build = [&](long long label, long N) {
        return label == 2 ? h(N) : g(N);
    };
    auto rels = find_relations_in_rows({0, 1, 2}, build, B, N_check);
    json jr = json::array();
    for (const auto& r : rels) jr.push_back(relation_to_json(r));
    json out = {{"schema", kSchemaVersion},
                {"fixture", true},
                {"h_S", 1},
                {"bound_B", B},
                {"relations", jr}};
    std::string text = out.dump();
    std::cout << text << "\n";
    if (!out_file.empty()) {
        std::ofstream f(out_file);
        f << text << "\n";
    }
    return 0;
}

int cmd_find_relations(const std::vector<long long>& S, long N_check,
                       const std::string& out_file) {
    auto res = find_relations(S, N_check);
    json jr = json::array();
    for (const auto& r : res.relations) jr.push_back(relation_to_json(r));
    json out = {{"schema", kSchemaVersion},
                {"S", S},
                {"h_S", res.h_S},
                {"bound_B", res.bound_B},
                {"relations", jr}};
    std::string text = out.dump();
    std::cout << text << "\n";
    if (!out_file.empty()) {
        std::ofstream f(out_file);
        f << text << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"partition function mod 4: congruences, class polynomials, relations"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--cache-dir", g.cache_dir, "cache root (overrides PARTITION_MOD4_CACHE)");
    app.add_flag("--stats", g.stats, "print cache hit/miss counters to stderr");
    app.add_option("--jobs", g.jobs, "worker thread count for parallel regions");

    auto* c_part = app.add_subcommand("partition", "partition numbers p(n)");
    long long part_n = -1;
    long part_upto = -1;
    int part_mod = 0;
    auto* n_opt = c_part->add_option("n", part_n, "single index");
    auto* upto_opt = c_part->add_option("--upto", part_upto, "CSV table p(0..N)");
    c_part->add_option("--mod", part_mod, "reduce mod 2 or 4 (0 = exact)")
        ->check(CLI::IsMember({0, 2, 4}));
    n_opt->excludes(upto_opt);

    auto* c_class = app.add_subcommand("class", "reduced binary quadratic forms of discriminant -D");
    long long class_D = 0;
    c_class->add_option("D", class_D, "positive discriminant, square-free, == 23 (mod 24)")
        ->required();

    auto* c_hilb = app.add_subcommand("hilbert", "Hilbert class polynomial H_{-D}");
    long long hilb_D = 0;
    c_hilb->add_option("D", hilb_D)->required();

    auto* c_series = app.add_subcommand("series", "q-expansions as JSON");
    std::string ser_kind;
    long ser_terms = 0;
    int ser_mod = 0;
    long long ser_D = 0;
    c_series->add_option("kind", ser_kind, "P, f, omega, delta, j or invdelta")->required();
    c_series->add_option("--terms", ser_terms, "truncation order")->required();
    c_series->add_option("--mod", ser_mod, "coefficient ring (0 = integers)")
        ->check(CLI::IsMember({0, 2, 4}));
    c_series->add_option("--D", ser_D, "discriminant (kind P only)");

    auto* c_verify = app.add_subcommand("verify-thm1", "twisted series == log-derivative mod 4");
    long long ver_D = 0;
    long ver_terms = 100;
    std::string ver_source = "fast";
    c_verify->add_option("D", ver_D)->required();
    c_verify->add_option("--terms", ver_terms, "check through q^N");
    c_verify->add_option("--source", ver_source, "fast | definition");

    auto* c_rel = app.add_subcommand("find-relations", "mod-4 dependencies among normalized series");
    std::vector<long long> rel_set;
    long rel_check = 0;
    std::string rel_out;
    bool rel_fixture = false;
    auto* set_opt =
        c_rel->add_option("--set", rel_set, "discriminants (comma separated)")->delimiter(',');
    c_rel->add_option("--check-terms", rel_check, "verify relations through q^N");
    c_rel->add_option("--out", rel_out, "also write the JSON result to this file");
    auto* fix_opt = c_rel->add_flag("--fixture", rel_fixture,
                                    "run on the built-in synthetic row set");
    fix_opt->excludes(set_opt);

    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    if (g.jobs > 0) omp_set_num_threads(g.jobs);
#endif

    auto cache = open_cache(g);
    int rc = 0;
    try {
        if (*c_part) {
            if (part_n < 0 && part_upto < 0)
                throw std::domain_error("partition: give n or --upto N");
            rc = cmd_partition(part_n, part_upto, part_upto >= 0, part_mod);
        } else if (*c_class) {
            require_qualifying(class_D);
            std::cout << classgroup_to_json(load_class_group(class_D, cache)).dump() << "\n";
        } else if (*c_hilb) {
            require_qualifying(hilb_D);
            auto cg = load_class_group(hilb_D, cache);
            auto hr = load_hilbert(hilb_D, cg, cache);
            std::cout << hilbert_to_json(hilb_D, cg.class_number(), hr).dump() << "\n";
        } else if (*c_series) {
            rc = cmd_series(ser_kind, ser_terms, ser_mod, ser_D, cache);
        } else if (*c_verify) {
            rc = cmd_verify(ver_D, ver_terms, ver_source);
        } else if (*c_rel) {
            if (rel_check <= 0)
                throw std::domain_error("find-relations: --check-terms must be positive");
            if (rel_fixture)
                rc = cmd_find_relations_fixture(rel_check, rel_out);
            else if (!rel_set.empty())
                rc = cmd_find_relations(rel_set, rel_check, rel_out);
            else
                throw std::domain_error("find-relations: give --set or --fixture");
        }
    } catch (const std::exception& e) {
        print_stats(g, cache);
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    print_stats(g, cache);
    return rc;
}
