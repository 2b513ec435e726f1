#pragma once

// Seeded property checks shared by the property suite and the acceptance runner.
// Each returns how many instances it drew and a description of every failure.

#include "support/oracle.hpp"

#include "doflab/exact_linalg.hpp"
#include "doflab/genie_chain.hpp"
#include "doflab/multilook.hpp"
#include "doflab/rng.hpp"
#include "doflab/subspace.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace properties {

using namespace doflab;

struct Result {
    int instances = 0;
    std::vector<std::string> failures;
    bool ok(int minimum) const { return failures.empty() && instances >= minimum; }
};

inline constexpr int kInstances = 100;

namespace detail {

inline std::uint64_t seed_for(std::string_view tag, int i) { return derive_seed(20240601, tag, {std::uint64_t(i)}); }

inline std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) { return lo + rng.next() % (hi - lo + 1); }

class Recorder {
public:
    explicit Recorder(Result& r) : r_(r) {}
    void check(bool cond, const std::string& what) {
        if (!cond)
            r_.failures.push_back(what);
    }

private:
    Result& r_;
};

template <typename... Ts>
std::string describe(const Ts&... parts) {
    std::ostringstream s;
    ((s << parts << ' '), ...);
    return s.str();
}

}  // namespace detail

inline Result modular_law(int n = kInstances) {
    using namespace detail;
    Result res;
    Recorder rec(res);
    for (int i = 0; i < n; ++i, ++res.instances) {
        Rng rng(seed_for("modular", i));
        const std::size_t M = pick(rng, 2, 8);
        const Backend backend = i % 2 == 0 ? Backend::rational : Backend::floating;
        // A shared piece makes the intersection nontrivial more often than chance would.
        const std::size_t dc = pick(rng, 0, M / 2);
        const Subspace shared = random_generic(M, dc, rng.next(), backend);
        const Subspace a = union_span(shared, random_generic(M, pick(rng, 0, M - dc), rng.next(), backend));
        const Subspace b = union_span(shared, random_generic(M, pick(rng, 0, M - dc), rng.next(), backend));
        const Subspace meet = intersect(a, b);
        const std::string tag = describe("modular instance", i, "M", M);
        rec.check(meet.dim() + union_span(a, b).dim() == a.dim() + b.dim(), tag + "rank law");
        rec.check(contains(meet, shared), tag + "shared part lost");
        if (backend == Backend::rational)
            rec.check(oracle::contains(a, meet) && oracle::contains(b, meet), tag + "oracle containment");
    }
    return res;
}

inline Result generic_intersection(int n = kInstances) {
    using namespace detail;
    Result res;
    Recorder rec(res);
    for (int i = 0; i < n; ++i, ++res.instances) {
        Rng rng(seed_for("generic", i));
        const std::size_t M = pick(rng, 1, 10);
        const std::size_t d1 = pick(rng, 0, M), d2 = pick(rng, 0, M);
        const Backend backend = i % 3 == 0 ? Backend::rational : Backend::floating;
        const Subspace a = random_generic(M, d1, rng.next(), backend);
        const Subspace b = random_generic(M, d2, rng.next(), backend);
        const std::size_t expected = d1 + d2 >= M ? d1 + d2 - M : 0;
        rec.check(intersect(a, b).dim() == expected, describe("generic M", M, "d1", d1, "d2", d2));
    }
    return res;
}

inline Result resolve_exposed_law(int n = kInstances) {
    using namespace detail;
    Result res;
    Recorder rec(res);
    for (int i = 0; i < n; ++i, ++res.instances) {
        Rng rng(seed_for("resolve", i));
        const int K = i % 2 == 0 ? 4 : 5;
        const int mt = static_cast<int>(pick(rng, 1, 6));
        const int mr = static_cast<int>(pick(rng, 1, static_cast<std::size_t>(K * mt)));
        const Network net = generate_generic(Topology::full_ic, K, mt, mr, rng.next());
        const int rx = static_cast<int>(pick(rng, 1, static_cast<std::size_t>(K)));
        const auto others = net.interferers(rx);
        const int tx = others[pick(rng, 0, others.size() - 1)];

        const std::size_t width = others.size() * static_cast<std::size_t>(mt);
        std::vector<Matrix> rows{Matrix(0, width, net.backend())};
        int g = 0;
        for (int j : others) {
            if (j == tx)
                continue;
            const int dims = static_cast<int>(pick(rng, 0, static_cast<std::size_t>(mt)));
            g += dims;
            if (dims > 0)
                rows.push_back(embed_genie_rows(net, rx, j, random_generic(mt, dims, rng.next()).rows()));
        }
        const long law = std::min<long>(mt, std::max<long>(0, mr + g - (K - 2) * mt));
        const long got = static_cast<long>(resolve_exposed(net, rx, tx, vstack(rows)).dim());
        rec.check(got == law, describe("resolve K", K, "M_T", mt, "M_R", mr, "g", g, "got", got, "want", law));
    }
    return res;
}

// Every registered term cancels, except residual positives (charged to the
// log coefficient) and residual negatives that the packing turns entirely
// into complete sets. The literal reciprocal transcription is excluded: it
// is kept precisely because its residual does not pack.
inline Result telescoping(int n = kInstances) {
    using namespace detail;
    Result res;
    Recorder rec(res);
    std::vector<std::string> names;
    for (const auto& name : builtin_script_names())
        if (name != "recip_8x3_literal")
            names.push_back(name);
    for (std::uint64_t seed = 1; res.instances < n; ++seed)
        for (const auto& name : names) {
            ++res.instances;
            const std::string tag = describe(name, "seed", seed);
            const ChainScript s = builtin_script(name);
            const ChainLedger l = run_script(network_for_script(s, seed), s);
            rec.check(!l.degraded, tag + "degraded");
            std::map<std::string, int> net;
            for (const auto& ineq : l.inequalities)
                for (const auto& t : ineq.terms) {
                    rec.check(l.registry.count(t.id) == 1, tag + "unregistered term " + t.id);
                    net[t.id] += t.sign;
                }
            const BoundBreakdown b = ledger_breakdown(l);
            const auto has = [](const std::vector<std::string>& v, const std::string& id) {
                return std::find(v.begin(), v.end(), id) != v.end();
            };
            for (const auto& [id, v] : net) {
                rec.check(v >= -1 && v <= 1, tag + "term used twice with one sign: " + id);
                rec.check(has(b.residual_positive, id) == (v > 0), tag + "positive residual " + id);
                rec.check(has(b.residual_negative, id) == (v < 0), tag + "negative residual " + id);
            }
            std::map<int, std::vector<Subspace>> by_tx;
            for (const auto& id : b.residual_negative)
                by_tx[l.registry.at(id).tx].push_back(l.registry.at(id).space);
            std::size_t credit = 0;
            for (const auto& [tx, spaces] : by_tx) {
                const MultilookResult r = build_full_sets(spaces, static_cast<std::size_t>(l.mt));
                rec.check(r.discarded.empty(), tag + "negative residual left unpacked on TX " + std::to_string(tx));
                credit += r.l_sigma;
            }
            rec.check(credit == b.multilook_credit, tag + "multilook credit");
        }
    return res;
}

inline Result rank_agreement(int n = kInstances) {
    using namespace detail;
    Result res;
    Recorder rec(res);
    for (int i = 0; i < n; ++i, ++res.instances) {
        Rng rng(seed_for("rank", i));
        const std::size_t r = pick(rng, 1, 60), c = pick(rng, 1, 60);
        std::vector<std::vector<long>> rows(r, std::vector<long>(c));
        if (i % 2 == 0) {
            for (auto& row : rows)
                for (auto& x : row)
                    x = static_cast<long>(rng.next() % 2001) - 1000;
        } else {
            // Low rank: integer product of r x k and k x c factors.
            const std::size_t k = pick(rng, 0, std::min(r, c));
            std::vector<std::vector<long>> left(r, std::vector<long>(k)), right(k, std::vector<long>(c));
            for (auto& row : left)
                for (auto& x : row)
                    x = static_cast<long>(rng.next() % 21) - 10;
            for (auto& row : right)
                for (auto& x : row)
                    x = static_cast<long>(rng.next() % 21) - 10;
            for (std::size_t a = 0; a < r; ++a)
                for (std::size_t b = 0; b < c; ++b)
                    for (std::size_t t = 0; t < k; ++t)
                        rows[a][b] += left[a][t] * right[t][b];
        }
        const Matrix q = Matrix::from_ints(rows);
        const std::size_t exact = rank(q);
        const std::string tag = describe("rank", r, "x", c);
        rec.check(rank(q.to_float()) == exact, tag + "float rank differs");
        if (r * c <= 400)
            rec.check(oracle::rank(q) == exact, tag + "oracle rank differs");
    }
    return res;
}

inline Result multilook_tight(int n = kInstances) {
    using namespace detail;
    Result res;
    Recorder rec(res);
    for (int i = 0; i < n; ++i, ++res.instances) {
        Rng rng(seed_for("multilook", i));
        const std::size_t M = pick(rng, 1, 8);
        const std::size_t count = pick(rng, 1, 10);
        std::vector<Subspace> spaces;
        std::vector<std::size_t> dims;
        std::size_t total = 0;
        for (std::size_t k = 0; k < count; ++k) {
            const std::size_t d = pick(rng, 0, M);
            dims.push_back(d);
            total += d;
            spaces.push_back(random_generic(M, d, rng.next()));
        }
        const MultilookResult r = build_full_sets(spaces, M);
        const std::string tag = describe("multilook M", M, "count", count);
        rec.check(r.l_sigma == total / M, tag + "l_sigma");
        rec.check(l_sigma_generic(dims, M) == total / M, tag + "l_sigma_generic");
        for (const auto& set : r.sets) {
            Subspace span(M, Backend::floating);
            for (const auto& p : set)
                span = union_span(span, p.part);
            rec.check(span.dim() == M, tag + "incomplete set");
        }
    }
    return res;
}

inline Result complement_involution(int n = kInstances) {
    using namespace detail;
    Result res;
    Recorder rec(res);
    for (int i = 0; i < n; ++i, ++res.instances) {
        Rng rng(seed_for("complement", i));
        const std::size_t M = pick(rng, 1, 9);
        const Backend backend = i % 2 == 0 ? Backend::rational : Backend::floating;
        const Subspace a = random_generic(M, pick(rng, 0, M), rng.next(), backend);
        const Subspace c = complement(a);
        const std::string tag = describe("complement M", M, "dim", a.dim());
        rec.check(c.dim() + a.dim() == M, tag + "dimension");
        rec.check(span_equal(complement(c), a), tag + "involution");
        if (backend == Backend::rational)
            rec.check(oracle::orthogonal(a, c), tag + "orthogonality");
    }
    return res;
}

inline Result subtract_orthogonal(int n = kInstances) {
    using namespace detail;
    Result res;
    Recorder rec(res);
    for (int i = 0; i < n; ++i, ++res.instances) {
        Rng rng(seed_for("subtract", i));
        const std::size_t M = pick(rng, 2, 8);
        const Backend backend = i % 2 == 0 ? Backend::rational : Backend::floating;
        const Subspace shared = random_generic(M, pick(rng, 0, M / 2), rng.next(), backend);
        const Subspace a = union_span(shared, random_generic(M, pick(rng, 0, M / 2), rng.next(), backend));
        const Subspace b = union_span(shared, random_generic(M, pick(rng, 0, M / 2), rng.next(), backend));
        const Subspace meet = intersect(a, b);
        const Subspace diff = subtract(a, b);
        const std::string tag = describe("subtract instance", i, "M", M);
        rec.check(diff.dim() == a.dim() - meet.dim(), tag + "dimension");
        rec.check(contains(a, diff), tag + "containment");
        rec.check(intersect(diff, meet).dim() == 0, tag + "overlap");
        rec.check(span_equal(union_span(diff, meet), a), tag + "reassembly");
        if (backend == Backend::rational)
            rec.check(oracle::orthogonal(diff, meet), tag + "orthogonality");
    }
    return res;
}

}  // namespace properties
