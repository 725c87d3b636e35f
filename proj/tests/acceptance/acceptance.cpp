// Acceptance suite: one PASS/FAIL line per criterion, exit code = number of
// failures.  Everything here re-derives its expectations from independent
// oracles (brute force, classical formulas) or from frozen desk-checked
// values; the unit tests cover the fine-grained cases.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pmod4/binary_qf.hpp"
#include "pmod4/cache.hpp"
#include "pmod4/classical.hpp"
#include "pmod4/congruence.hpp"
#include "pmod4/hilbert.hpp"
#include "pmod4/kronecker.hpp"
#include "pmod4/mock_theta.hpp"
#include "pmod4/relations.hpp"
#include "pmod4/z4linalg.hpp"

using namespace pmod4;
namespace fs = std::filesystem;
using clk = std::chrono::steady_clock;

namespace {

int failures = 0;

void criterion(int number, const std::string& what, const std::function<bool()>& body) {
    auto t0 = clk::now();
    bool ok = false;
    std::string err;
    try {
        ok = body();
    } catch (const std::exception& e) {
        err = e.what();
    }
    double secs = std::chrono::duration<double>(clk::now() - t0).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1fs", secs);
    std::cout << "criterion " << number << ": " << (ok ? "PASS" : "FAIL") << " ("
              << timing << ") " << what;
    if (!err.empty()) std::cout << " [exception: " << err << "]";
    std::cout << std::endl;
    if (!ok) ++failures;
}

std::vector<long long> qualifying_below(long long limit) {
    std::vector<long long> out;
    for (long long D = 23; D < limit; D += 24)
        if (is_qualifying_discriminant(D)) out.push_back(D);
    return out;
}

// --- helpers for criterion 7 (brute-force Z/4 kernel oracle) ---

using Row = std::vector<std::uint8_t>;

std::set<Row> combos(const Z4Matrix& m, bool kernel_only) {
    std::set<Row> out;
    std::size_t total = 1;
    for (std::size_t i = 0; i < m.rows; ++i) total *= 4;
    for (std::size_t code = 0; code < total; ++code) {
        Row c(m.rows);
        std::size_t x = code;
        for (std::size_t i = 0; i < m.rows; ++i, x /= 4) c[i] = std::uint8_t(x % 4);
        if (kernel_only) {
            Row prod = row_combination(m, c);
            bool zero = true;
            for (auto v : prod) zero = zero && v == 0;
            if (zero) out.insert(c);
        } else {
            out.insert(row_combination(m, c));
        }
    }
    return out;
}

std::set<Row> kernel_span(const Z4Matrix& m) {
    auto gens = kernel_mod4(m);
    Z4Matrix g(gens.size(), m.rows);
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < m.rows; ++j) g.at(i, j) = gens[i][j];
    return combos(g, false);
}

// --- CLI driving for criterion 9 ---

struct RunResult {
    int exit_code = -1;
    std::string out, err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args, const fs::path& tmp) {
    fs::path so = tmp / "stdout.txt", se = tmp / "stderr.txt";
    std::string cmd = std::string(PMOD4_CLI_PATH) + " " + args + " > " + so.string() +
                      " 2> " + se.string();
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = slurp(so);
    r.err = slurp(se);
    return r;
}

}  // namespace

int main() {
    // 1. mock theta f(q) agrees with the partition series mod 4
    criterion(1, "f(q) == P(q) mod 4 through q^50000", [] {
        const long N = 50000;
        auto f = f_series<Mod4>(N);
        auto p = partition_table<Mod4>(N);
        for (long n = 0; n <= N; ++n)
            if (!(f.coeff(n) == p[std::size_t(n)])) return false;
        return true;
    });

    // 2. twisted series == Borcherds log-derivative mod 4
    criterion(2, "P(D;q) == L_D mod 4 (fast x8, definition x2)", [] {
        for (long long D : {23LL, 47LL, 71LL})
            if (!verify_theorem1(D, 500, CrSource::Fast).ok()) return false;
        for (long long D : {95LL, 119LL, 143LL, 167LL, 191LL})
            if (!verify_theorem1(D, 200, CrSource::Fast).ok()) return false;
        for (long long D : {23LL, 47LL})
            if (!verify_theorem1(D, 100, CrSource::Definition).ok()) return false;
        return true;
    });

    // 3. exact structural identities
    criterion(3, "Euler product, j == 1/Delta mod 4, dlog Delta, character identity", [] {
        {
            auto prod = partition_series<mpz_class>(2000) * eta_quotient_unit<mpz_class>(2000);
            if (!(prod == Series<mpz_class>::one(2000))) return false;
        }
        {
            auto j4 = reduce_mod<Mod4>(j_series<mpz_class>(1000));
            auto inv = reduce_mod<Mod4>(inverse_delta_series<mpz_class>(1000));
            if (!(j4 == inv)) return false;
        }
        {
            auto dl = delta_series<mpz_class>(501).dlog().truncated(500);
            auto s1 = sigma_table(500, 1);
            if (dl.coeff(0) != 1) return false;
            for (long n = 1; n <= 500; ++n)
                if (dl.coeff(n) != mpz_class(-24 * (long)s1[std::size_t(n)])) return false;
        }
        for (long long m = 1; m <= 10000; ++m) {
            if (std::gcd(m, 12LL) != 1) continue;
            long lhs = ((kronecker(-12, m) * m) % 4 + 4) % 4;
            long rhs = ((long)kronecker(12, m) % 4 + 4) % 4;
            if (lhs != rhs) return false;
        }
        return true;
    });

    // 4. class numbers against the Dirichlet formula and the analytic bound
    criterion(4, "h(-D) == Dirichlet oracle and bound, all qualifying D < 2000", [] {
        for (long long D : qualifying_below(2000)) {
            auto cg = reduced_forms(D);
            if (cg.class_number() != dirichlet_class_number(D)) return false;
            if (!class_number_bound_check(cg)) return false;
        }
        return true;
    });

    // 5. Hilbert class polynomials: degree, idempotence, residuals, CM spots
    criterion(5, "Hilbert polynomials for all qualifying D < 500", [] {
        {
            const mpfr_prec_t prec = 256;
            BigComplex i_pt(prec);
            i_pt.im = BigFloat(1L, prec);
            auto ji = j_eval(i_pt, prec);
            double tol = std::ldexp(1.0, -(int)prec + 16);
            if ((ji.re - BigFloat(1728L, prec)).abs().to_double() >= tol) return false;
            if (ji.im.abs().to_double() >= tol) return false;
            BigComplex rho(prec);
            rho.re = BigFloat(-1L, prec) / BigFloat(2L, prec);
            rho.im = BigFloat(3L, prec).sqrt() / BigFloat(2L, prec);
            if (j_eval(rho, prec).abs().to_double() >= tol) return false;
        }
        for (long long D : qualifying_below(500)) {
            auto cg = reduced_forms(D);
            auto hr = hilbert_poly(D, cg);
            if (hr.poly.degree() != cg.class_number()) return false;
            auto hr2 = hilbert_poly(D, cg, 2 * hr.prec_used);
            if (!(hr.poly == hr2.poly)) return false;
            // residual tolerance, log2 scale (doubles overflow at large D):
            // root error amplified by conditioning (|H'(z)| ~ |z|^{h-1} at
            // the dominant root) or evaluation round-off (largest Horner
            // term times 2^-prec), whichever dominates
            mpfr_prec_t prec = hr.prec_used;
            auto log2_abs = [](const BigFloat& x) {
                if (mpfr_zero_p(x.raw())) return -1e300;
                return (double)mpfr_get_exp(x.raw());
            };
            for (const auto& f : cg.forms) {
                auto z = j_eval(heegner_point(f, prec), prec);
                double lz = std::max(0.0, log2_abs(z.abs()));
                double log_resid = log2_abs(eval_abs(hr.poly, z));
                double log_max_term = 0.0;
                for (std::size_t k = 0; k < hr.poly.coeffs.size(); ++k)
                    log_max_term = std::max(
                        log_max_term,
                        (double)mpz_sizeinbase(hr.poly.coeffs[k].get_mpz_t(), 2) +
                            (double)k * lz);
                double log_tol =
                    std::max((double)cg.class_number() * lz - (double)prec / 2,
                             log_max_term - (double)prec + 24);
                if (log_resid >= log_tol) return false;
            }
        }
        return true;
    });

    // 6. Gauss sum norm and twisted-sum identity
    criterion(6, "Gauss sums for D in {23,47,71,95}, 50 samples each", [] {
        for (long long D : {23LL, 47LL, 71LL, 95LL}) {
            auto rep = gauss_sum_check(D, 50);
            if (!rep.ok) return false;
            if (rep.norm_error >= 1e-9 * (double)D) return false;
        }
        return true;
    });

    // 7. kernel solver vs brute force
    criterion(7, "Z/4 kernel: span equality x200, cardinality x1000, soundness", [] {
        std::mt19937 rng(20260823);
        for (int t = 0; t < 200; ++t) {
            Z4Matrix m(1 + rng() % 5, 1 + rng() % 8);
            for (auto& v : m.a) v = std::uint8_t(rng() % 4);
            if (kernel_span(m) != combos(m, true)) return false;
        }
        for (int t = 0; t < 1000; ++t) {
            std::size_t c = 1 + rng() % 6;
            Z4Matrix m(c + 1 + rng() % 3, c);
            for (auto& v : m.a) v = std::uint8_t(rng() % 4);
            auto gens = kernel_mod4(m);
            if (gens.empty()) return false;
            for (const auto& g : gens) {
                Row prod = row_combination(m, g);
                for (auto v : prod)
                    if (v != 0) return false;
            }
        }
        return true;
    });

    // 8. Sturm persistence and the exploratory relation search
    criterion(8, "relations at the Sturm bound persist to 10x; exploratory 20-D run", [] {
        // engineered dependencies among genuine normalized rows (D = 23, 47)
        const long h_S = 5, B = sturm_bound(h_S), N10 = 10 * B;
        std::vector<Series<Mod4>> base;
        for (long long D : {23LL, 47LL}) {
            auto cg = reduced_forms(D);
            auto hp = hilbert_mod<Mod4>(hilbert_poly(D, cg).poly);
            auto P = twisted_series<Mod4>(D, N10);
            base.push_back(normalized_series<Mod4>(D, h_S, N10, hp, P).series);
        }
        std::vector<Series<Mod4>> rows{base[0], base[1], base[0],
                                       base[0].scaled(Mod4{2}) + base[1].scaled(Mod4{2})};
        RowBuilder build = [&](long long lab, long N) {
            return rows[std::size_t(lab)].truncated(N);
        };
        auto rels = find_relations_in_rows({0, 1, 2, 3}, build, B, N10);
        if (rels.empty()) return false;  // the duplicate must be found
        for (const auto& r : rels)
            if (!r.verified()) return false;

        // exploratory run over the first 20 qualifying discriminants
        auto S = qualifying_below(500);
        if (S.size() != 20) return false;
        auto res = find_relations(S, 10 * sturm_bound(25));
        if (res.bound_B != 302) return false;
        for (const auto& r : res.relations)
            if (!r.verified()) return false;
        return true;
    });

    // 9. CLI determinism and cache behaviour
    criterion(9, "CLI byte-identical reruns; cache hits skip recomputation", [] {
        fs::path tmp = fs::temp_directory_path() /
                       ("pmod4-accept-" + std::to_string(::getpid()));
        fs::remove_all(tmp);
        fs::create_directories(tmp);
        std::string cache = (tmp / "cache").string();

        auto h1 = run_cli("--stats --cache-dir " + cache + " hilbert 23", tmp);
        auto h2 = run_cli("--stats --cache-dir " + cache + " hilbert 23", tmp);
        if (h1.exit_code != 0 || h2.exit_code != 0) return false;
        if (h1.out != h2.out || h1.out.empty()) return false;
        if (h1.err.find("cache hits: 0") == std::string::npos) return false;
        if (h2.err.find("cache hits: 2") == std::string::npos) return false;
        if (h2.err.find("cache misses: 0") == std::string::npos) return false;

        auto v = run_cli("verify-thm1 23 --terms 200", tmp);
        if (v.exit_code != 0) return false;

        auto r1 = run_cli("find-relations --set 23 --check-terms 400", tmp);
        auto r2 = run_cli("find-relations --set 23 --check-terms 400", tmp);
        if (r1.exit_code != 0 || r1.out != r2.out || r1.out.empty()) return false;

        auto fx = run_cli("find-relations --fixture --check-terms 140", tmp);
        if (fx.exit_code != 0) return false;
        if (fx.out.find("\"relations\":[]") != std::string::npos) return false;

        auto bad = run_cli("class 24", tmp);
        if (bad.exit_code == 0) return false;

        auto p = run_cli("partition --upto 10 --mod 4", tmp);
        if (p.exit_code != 0 || p.out != "1,1,2,3,1,3,3,3,2,2,2\n") return false;

        fs::remove_all(tmp);
        return true;
    });

    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES PRESENT")
              << " (" << failures << " failed)" << std::endl;
    return failures;
}
