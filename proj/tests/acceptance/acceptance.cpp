// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "support/continuity.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"
#include "support/properties.hpp"

#include "cli.hpp"
#include "doflab/alignment.hpp"
#include "doflab/dof_formulas.hpp"
#include "doflab/genie_chain.hpp"
#include "doflab/multilook.hpp"
#include "doflab/rng.hpp"
#include "doflab/subspace.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

using namespace doflab;

namespace {

struct Criterion {
    std::vector<std::string> failures;
    void check(bool cond, const std::string& what) {
        if (!cond)
            failures.push_back(what);
    }
    void absorb(const std::string& name, const properties::Result& r) {
        check(r.instances >= properties::kInstances, name + ": only " + std::to_string(r.instances) + " instances");
        for (const auto& f : r.failures)
            failures.push_back(name + ": " + f);
    }
};

constexpr int kSeeds = 5;

Criterion subspace_golden() {
    Criterion c;
    const Subspace a = fixtures::plane_one(), b = fixtures::plane_two();
    c.check(a.backend() == Backend::rational, "inputs are not rational");
    c.check(oracle::span_equal(complement(a), oracle::line({3, -3, -2})), "complement of the first plane");
    c.check(oracle::span_equal(complement(b), fixtures::rational_line({make_rational(-11, 2), 5, 4})),
            "complement of the second plane");
    c.check(oracle::span_equal(intersect(a, b), oracle::line({4, 2, 3})), "intersection");
    c.check(oracle::span_equal(subtract(a, b), oracle::line({5, 17, -18})), "set-minus");
    return c;
}

Criterion multilook_example() {
    Criterion c;
    const MultilookResult r = build_full_sets(fixtures::packing_instance(), 3);
    c.check(r.l_sigma == 3, "l_sigma is " + std::to_string(r.l_sigma));
    std::vector<Subspace> parts;
    for (const auto& set : r.sets)
        for (const auto& p : set)
            parts.push_back(p.part);
    for (const auto& p : r.discarded)
        parts.push_back(p.part);
    for (const auto& v : std::vector<std::vector<long>>{{1, 1, -1}, {1, 2, 3}, {3, 6, -5}}) {
        bool found = false;
        for (const auto& p : parts)
            found = found || oracle::span_equal(p, oracle::line(v));
        c.check(found, "no split part spans the expected line");
    }
    c.check(l_sigma_generic({1, 2, 1, 1, 3, 2}, 3) == 3, "l_sigma_generic");
    return c;
}

Criterion exposed_numeric() {
    Criterion c;
    const Network net = fixtures::example_2x5_network();
    const Subspace at2 = exposed_subspace(net, 2, 1), at3 = exposed_subspace(net, 3, 1);
    c.check(at2.dim() == 1 && collinearity_error(at2, fixtures::kExposedAtRx2) < 1e-3, "exposed direction at RX 2");
    c.check(at3.dim() == 1 && collinearity_error(at3, fixtures::kExposedAtRx3) < 1e-3, "exposed direction at RX 3");
    return c;
}

Criterion chain_bounds() {
    Criterion c;
    const std::vector<std::pair<std::string, Rational>> expected{
        {"ex1_2x5", make_rational(10, 7)},     {"ex2_3x7", make_rational(21, 10)},
        {"ex2alt_3x7", make_rational(21, 10)}, {"ex3_3x8", make_rational(24, 11)},
        {"chain_8_21", make_rational(168, 29)}, {"recip_8x3", make_rational(24, 11)},
        {"kuser_5_4_15", make_rational(60, 19)}, {"five_to_one_2x5", make_rational(10, 7)},
        {"xch_2x3", make_rational(1, 2)}};
    const auto record = [&](const std::string& name, std::uint64_t seed, const ChainLedger& l, const Rational& want) {
        const std::string tag = name + " seed " + std::to_string(seed);
        c.check(!l.degraded, tag + " degraded");
        try {
            const Rational got = ledger_bound(l);
            c.check(got == want, tag + " gave " + to_string(got));
        } catch (const std::exception& e) {
            c.check(false, tag + " " + e.what());
        }
    };
    for (const auto& [name, bound] : expected)
        for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
            const ChainScript s = builtin_script(name);
            record(name, seed, run_script(network_for_script(s, seed), s), bound);
        }
    for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
        record("algorithm1 (3,5)", seed, run_algorithm1(generate_generic(Topology::full_ic, 4, 3, 5, seed)),
               make_rational(15, 8));
        record("algorithm2 (2,5)", seed, run_algorithm2(generate_generic(Topology::full_ic, 4, 2, 5, seed)),
               make_rational(10, 7));
    }
    return c;
}

Criterion structured_certificates() {
    Criterion c;
    const auto half = certify_points(CertRegime::half, 40);
    c.check(!half.empty(), "no half-regime points");
    for (auto [M, N] : half) {
        const Rational g = make_rational(M, N);
        c.check(g >= make_rational(2, 5) && g < make_rational(1, 2), "point outside [2/5, 1/2)");
        c.check(certify_structured(M, N, CertRegime::half).pass,
                "half (" + std::to_string(M) + "," + std::to_string(N) + ")");
    }
    // Every (M, N) with M/N in [2/5, 1/2) and N <= 40 must be on the list.
    std::size_t expected = 0;
    for (int N = 1; N <= 40; ++N)
        for (int M = 1; M <= N; ++M)
            expected += 5 * M >= 2 * N && 2 * M < N;
    c.check(half.size() == expected, "half-regime enumeration is incomplete");

    const auto p3 = certify_points(CertRegime::p3, 40);
    std::size_t forms = 0;
    for (int k = 2; 5 * k - 2 <= 40; ++k)
        for (int g = 1; g * (5 * k - 2) <= 40; ++g)
            ++forms;
    c.check(p3.size() == forms, "p3 enumeration has " + std::to_string(p3.size()) + " points");
    for (auto [M, N] : p3)
        c.check(certify_structured(M, N, CertRegime::p3).pass, "p3 (" + std::to_string(M) + "," + std::to_string(N) + ")");
    for (auto pt : std::vector<std::pair<int, int>>{{3, 8}, {5, 13}, {7, 18}, {9, 23}, {11, 28}, {13, 33}, {15, 38}})
        c.check(std::find(p3.begin(), p3.end(), pt) != p3.end(), "p3 list misses a primitive point");
    return c;
}

Criterion formula_suite() {
    Criterion c;
    c.check(counting_bound(4, 2, 5) == make_rational(7, 5), "counting(4,2,5)");
    c.check(decomposition_bound(2, 5) == make_rational(10, 7), "decomposition(2,5)");
    Rng rng(derive_seed(6, "k3"));
    for (int i = 0; i < 50; ++i) {
        const long M = 1 + static_cast<long>(rng.next() % 100), N = 1 + static_cast<long>(rng.next() % 100);
        const oracle::Q closed = oracle::Q((N - M) * (N - M)) / oracle::Q(4 * (M + N));
        c.check(k3_gap_identity(static_cast<int>(M), static_cast<int>(N)) == parse_rational(closed.str()),
                "k3 gap identity");
    }
    for (int K = 4; K <= 8; ++K) {
        const auto f = [K](int M, int N) { return dstar(K, M, N); };
        const long k2 = static_cast<long>(K) * K - K - 1;
        c.check(continuity::continuous_at(f, 1, K, true), "dstar at 1/K");
        c.check(continuity::continuous_at(f, 1, K - 1, true), "dstar at 1/(K-1)");
        c.check(continuity::continuous_at(f, K, k2, true), "dstar at K/(K^2-K-1)");
        c.check(continuity::continuous_at(f, K - 1, static_cast<long>(K) * (K - 2), false), "dstar at its limit");
    }
    for (auto [p, q] : std::vector<std::pair<long, long>>{{1, 4}, {1, 3}, {4, 9}, {1, 2}, {3, 5}, {2, 3}, {5, 6}})
        c.check(continuity::continuous_at(four_to_one_dof, p, q, true), "four_to_one continuity");
    c.check(many_to_one_counting(5, 2, 5) == make_rational(13, 9), "many_to_one_counting(5,2,5)");
    c.check(many_to_one_counting(5, 2, 5) > make_rational(10, 7), "many-to-one counting exceeds 10/7");
    c.check(dstar(5, 4, 15) == make_rational(60, 19), "dstar(5,4,15)");
    c.check(classify(4, 11, 29).status == ProofStatus::open, "classify(4,11,29) is not open");
    return c;
}

Criterion alignment_designs() {
    Criterion c;
    for (int K : {4, 5})
        for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
            const Network net = generate_generic(Topology::full_ic, K, K, K * K - K - 1, seed);
            const PrecoderSet p = design_k_user(net, 1);
            const AlignmentReport rep = verify_alignment(net, p, p.d);
            const std::string tag = "K=" + std::to_string(K) + " seed " + std::to_string(seed);
            c.check(rep.pass, tag + " fails");
            for (const auto& rc : rep.receivers)
                c.check(rc.interference_dim == static_cast<std::size_t>((K - 1) * (K - 1) - 1), tag + " interference dim");
        }
    const std::vector<std::tuple<FourToOneCase, int, int, std::size_t>> cases{
        {FourToOneCase::c4_9, 4, 9, 6}, {FourToOneCase::c3_5, 3, 5, 3}, {FourToOneCase::c5_6, 5, 6, 3}};
    for (const auto& [fc, M, N, idim] : cases)
        for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
            const Network net = generate_generic(Topology::many_to_one, 4, M, N, seed);
            const PrecoderSet p = design_four_to_one(net, fc, seed);
            const AlignmentReport rep = verify_alignment(net, p, p.d);
            const std::string tag = four_to_one_case_name(fc) + " seed " + std::to_string(seed);
            c.check(rep.pass, tag + " fails");
            c.check(!rep.receivers.empty() && rep.receivers.front().interference_dim == idim, tag + " interference dim");
        }
    return c;
}

Criterion property_suites() {
    Criterion c;
    c.absorb("modular law", properties::modular_law());
    c.absorb("generic intersection", properties::generic_intersection());
    c.absorb("resolve_exposed law", properties::resolve_exposed_law());
    c.absorb("telescoping", properties::telescoping());
    c.absorb("rank agreement", properties::rank_agreement());
    return c;
}

Criterion determinism() {
    Criterion c;
    const auto run = [](const std::vector<std::string>& args, int& code) {
        std::ostringstream out, err;
        code = cli::run(args, out, err);
        return out.str();
    };
    int c1 = -1, c2 = -1, c3 = -1, c4 = -1;
    const std::string first = run({"chain", "--script", "ex3_3x8", "--seed", "11"}, c1);
    const std::string second = run({"chain", "--script", "ex3_3x8", "--seed", "11"}, c2);
    c.check(c1 == 0 && c2 == 0, "chain exit code");
    c.check(!first.empty() && first == second, "repeat runs differ");
    c.check(first.find("\"bound\": \"24/11\"") != std::string::npos, "bound missing from the ledger JSON");
    const std::vector<std::string> sweep{"chain", "--script", "ex3_3x8", "--seed", "11", "--seeds", "8"};
    auto serial = sweep, parallel = sweep;
    serial.insert(serial.end(), {"--jobs", "1"});
    parallel.insert(parallel.end(), {"--jobs", "4"});
    const std::string s = run(serial, c3), p = run(parallel, c4);
    c.check(c3 == 0 && c4 == 0, "sweep exit code");
    c.check(!s.empty() && s == p, "serial and parallel sweeps differ");
    return c;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, Criterion (*)()>> criteria{
        {"subspace golden values", subspace_golden},
        {"multiple-look packing example", multilook_example},
        {"exposed directions of the printed channels", exposed_numeric},
        {"chain bounds over 5 seeds", chain_bounds},
        {"structured certificates up to N = 40", structured_certificates},
        {"formula suite", formula_suite},
        {"alignment designs over 5 seeds", alignment_designs},
        {"property suites", property_suites},
        {"determinism", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Criterion result;
        try {
            result = criteria[i].second();
        } catch (const std::exception& e) {
            result.failures.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool pass = result.failures.empty();
        failed += !pass;
        std::cout << "criterion " << i + 1 << ": " << (pass ? "PASS" : "FAIL") << "  " << criteria[i].first << "  ("
                  << std::fixed;
        std::cout.precision(2);
        std::cout << secs << " s)\n";
        for (std::size_t k = 0; k < result.failures.size() && k < 10; ++k)
            std::cout << "    " << result.failures[k] << '\n';
        if (result.failures.size() > 10)
            std::cout << "    ... " << result.failures.size() - 10 << " more\n";
    }
    std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << '\n';
    return failed == 0 ? 0 : 1;
}
