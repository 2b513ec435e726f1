#include "doflab/genie_chain.hpp"

#include "doflab/exact_linalg.hpp"
#include "doflab/multilook.hpp"
#include "doflab/rng.hpp"

#include <algorithm>
#include <numeric>

namespace doflab {

namespace {

int wrap(int k, int K) { return ((k - 1) % K + K) % K + 1; }

int lhs_users(const Network& net) {
    return net.topology == Topology::x_channel ? net.K * net.K : net.K;
}

std::size_t block_position(const Network& net, int rx, int tx) {
    const auto intf = net.interferers(rx);
    auto it = std::find(intf.begin(), intf.end(), tx);
    if (it == intf.end())
        throw std::invalid_argument("TX " + std::to_string(tx) + " is not an interferer at RX " + std::to_string(rx));
    return static_cast<std::size_t>(it - intf.begin());
}

bool row_touches_block(const Matrix& m, std::size_t r, std::size_t c0, std::size_t width) {
    for (std::size_t c = c0; c < c0 + width; ++c)
        if (!m.is_zero(r, c))
            return true;
    return false;
}

std::string part_label(const GeniePart& p) {
    switch (p.kind) {
    case GenieKind::generic:
        return "X" + std::to_string(p.tx) + "_(" + std::to_string(p.dims) + ")";
    case GenieKind::ref:
        return "ref " + p.id;
    case GenieKind::full:
        return "full X" + std::to_string(p.tx) + (p.credit != 1 ? " x" + std::to_string(p.credit) : "");
    }
    return "?";
}

class Runner {
public:
    Runner(const Network& net, std::string name) : net_(net) {
        ledger.name = std::move(name);
        ledger.mt = net.mt;
    }

    const RegisteredSpace& lookup(const std::string& id) const {
        auto it = ledger.registry.find(id);
        if (it == ledger.registry.end())
            throw std::invalid_argument("unregistered subspace id: " + id);
        return it->second;
    }

    void execute(const ChainStep& step);

    ChainLedger ledger;

private:
    void record(const std::string& id, int tx, std::string provenance, Subspace s) {
        if (!ledger.registry.count(id))
            ledger.registry_order.push_back(id);
        ledger.registry[id] = RegisteredSpace{tx, std::move(provenance), std::move(s)};
    }

    const Network& net_;
    std::size_t consecutive_ = 0;
};

void Runner::execute(const ChainStep& step) {
    const std::size_t index = ledger.trace.size() + 1;
    const std::size_t mt = static_cast<std::size_t>(net_.mt);
    StepRecord rec;
    rec.index = index;
    rec.rx = step.rx;
    rec.target = step.target;
    Inequality ineq;
    ineq.lhs = lhs_users(net_);
    ineq.log = net_.mr;
    ineq.rate = 0;

    if (step.rx < 1 || step.rx > net_.K)
        throw std::invalid_argument("receiver index out of range");

    if (step.single_user) {
        ineq.lhs = 1;
        ineq.log = std::min(net_.mt, net_.mr);
        rec.action = "single_user";
        consecutive_ = 0;
        ledger.inequalities.push_back(std::move(ineq));
        ledger.trace.push_back(std::move(rec));
        return;
    }

    const auto intf = net_.interferers(step.rx);
    const std::size_t width = intf.size() * mt;
    const Backend be = net_.backend();

    std::vector<Matrix> all_rows;
    std::vector<Matrix> off_target;
    std::vector<Matrix> on_target;
    std::size_t on_target_generic_dims = 0;
    bool has_ref = false;

    for (std::size_t p = 0; p < step.genie.size(); ++p) {
        const GeniePart& part = step.genie[p];
        int tx = part.tx;
        Matrix rows;
        rec.genie.push_back(part_label(part));
        switch (part.kind) {
        case GenieKind::generic: {
            if (part.dims < 0 || static_cast<std::size_t>(part.dims) > mt)
                throw std::invalid_argument("generic genie dimension out of range");
            if (part.dims == 0)
                continue;
            const auto seed = derive_seed(net_.seed, "genie", {index, p});
            rows = random_generic(mt, static_cast<std::size_t>(part.dims), seed, be).rows();
            if (tx == step.target) {
                on_target_generic_dims += static_cast<std::size_t>(part.dims);
            } else {
                const std::string id = "G" + std::to_string(index) + "." + std::to_string(p + 1);
                record(id, tx, "generic", Subspace::span(rows.transpose()));
                ineq.terms.push_back({id, +1});
            }
            break;
        }
        case GenieKind::ref: {
            const RegisteredSpace& reg = lookup(part.id);
            tx = reg.tx;
            rows = reg.space.rows();
            has_ref = true;
            if (reg.space.dim() > 0)
                ineq.terms.push_back({part.id, +1});
            if (rows.rows() == 0)
                continue;
            break;
        }
        case GenieKind::full:
            rows = Matrix::identity(mt, be);
            ineq.rate += part.credit;
            break;
        }
        const Matrix embedded = embed_genie_rows(net_, step.rx, tx, rows);
        all_rows.push_back(embedded);
        if (tx == step.target)
            on_target.push_back(rows);
        else
            off_target.push_back(embedded);
    }

    const Matrix genie = all_rows.empty() ? Matrix(0, width, be) : vstack(all_rows);
    rec.genie_rows = genie.rows();
    if (static_cast<std::size_t>(net_.mr) + genie.rows() < width) {
        rec.genie_too_small = true;
        rec.acceptable = false;
        rec.note = "genie too small";
    } else {
        rec.acceptable = genie_acceptable(net_, step.rx, genie);
        if (!rec.acceptable)
            rec.note = "genie not independent of the receiver's observation";
    }

    bool step_degraded = !rec.acceptable;
    bool intersected = false;

    if (step.target != 0) {
        block_position(net_, step.rx, step.target);
        const Matrix off = off_target.empty() ? Matrix(0, width, be) : vstack(off_target);
        const Subspace obs = resolve_exposed(net_, step.rx, step.target, off);
        rec.observed_dim = obs.dim();
        rec.observation = obs.basis();
        if (be == Backend::rational)
            rec.clean_index_set = coordinate_support(exposed_subspace(net_, step.rx, step.target));
        const Matrix helpers = on_target.empty() ? Matrix(0, mt, be) : vstack(on_target);
        rec.combined_rank = rank(hstack({obs.basis(), helpers.transpose()}));
        const std::string out = step.out.empty() ? "O" + std::to_string(index) : step.out;
        rec.out = out;
        rec.action = step.intersect_with.empty() ? "expose" : "intersect";

        if (!rec.acceptable || rec.combined_rank != mt) {
            step_degraded = true;
            if (rec.acceptable)
                rec.note = "observation and genie do not span the target's signal space";
            // The target's genie rows are charged at their dimension instead.
            ineq.log += static_cast<long>(on_target_generic_dims);
            record(out, step.target, "observation", obs);
        } else {
            ineq.rate += step.target_credit;
            if (obs.dim() == mt) {
                ineq.rate -= 1;
                rec.note = "observation spans the whole signal space";
                record(out, step.target, "observation", obs);
            } else if (!step.intersect_with.empty()) {
                const RegisteredSpace prev = lookup(step.intersect_with);
                if (prev.tx != step.target)
                    throw std::invalid_argument("intersection partner lives on a different transmitter");
                if (union_span(prev.space, obs).dim() == mt) {
                    const Subspace inter = intersect(prev.space, obs);
                    rec.intersection_dim = inter.dim();
                    ineq.rate -= 1;
                    ineq.terms.push_back({step.intersect_with, +1});
                    ineq.terms.push_back({out, -1});
                    record(out, step.target, "intersection", inter);
                    intersected = true;
                } else {
                    step_degraded = true;
                    rec.note = "observations do not span the signal space; no intermediate bound";
                    ineq.terms.push_back({out, -1});
                    record(out, step.target, "observation", obs);
                }
            } else {
                ineq.terms.push_back({out, -1});
                record(out, step.target, "observation", obs);
            }
        }
    } else {
        rec.action = has_ref ? "close" : "direct";
    }

    consecutive_ = intersected ? consecutive_ + 1 : 0;
    ledger.max_consecutive_intersections = std::max(ledger.max_consecutive_intersections, consecutive_);
    if (step_degraded)
        ledger.degraded = true;
    ledger.inequalities.push_back(std::move(ineq));
    ledger.trace.push_back(std::move(rec));
}

GeniePart generic_part(int tx, int dims) { return {GenieKind::generic, tx, dims, "", 1}; }
GeniePart ref_part(const std::string& id) { return {GenieKind::ref, 0, 0, id, 1}; }
GeniePart full_part(int tx, int credit = 1) { return {GenieKind::full, tx, 0, "", credit}; }

ChainStep make_step(int rx, std::vector<GeniePart> genie, int target = 0, std::string out = "",
                    std::string intersect_with = "") {
    ChainStep s;
    s.rx = rx;
    s.genie = std::move(genie);
    s.target = target;
    s.out = std::move(out);
    s.intersect_with = std::move(intersect_with);
    return s;
}

void require_k4_full(const Network& net) {
    if (net.topology != Topology::full_ic || net.K != 4)
        throw std::invalid_argument("the chain algorithms need a 4-user full interference channel");
    if (net.mt >= net.mr)
        throw std::invalid_argument("the chain algorithms need M_T < M_R");
}

std::size_t max_chain_steps(const Network& net) { return 64 + 4 * static_cast<std::size_t>(net.mr); }

}  // namespace

Matrix interference_rows(const Network& net, int rx) {
    const auto intf = net.interferers(rx);
    if (intf.empty())
        return Matrix(static_cast<std::size_t>(net.mr), 0, net.backend());
    std::vector<Matrix> blocks;
    for (int i : intf)
        blocks.push_back(net.channel(rx, i));
    return hstack(blocks);
}

Matrix embed_genie_rows(const Network& net, int rx, int tx, const Matrix& rows) {
    const std::size_t mt = static_cast<std::size_t>(net.mt);
    if (rows.cols() != mt)
        throw std::invalid_argument("genie rows must have M_T columns");
    const std::size_t pos = block_position(net, rx, tx);
    Matrix out(rows.rows(), net.interferers(rx).size() * mt, common_backend(rows, interference_rows(net, rx)));
    out.set_block(0, pos * mt, rows);
    return out;
}

Subspace resolve_exposed(const Network& net, int rx, int tx, const Matrix& genie_rows) {
    const std::size_t mt = static_cast<std::size_t>(net.mt);
    const std::size_t pos = block_position(net, rx, tx);
    const Matrix h = interference_rows(net, rx);
    if (genie_rows.rows() > 0 && genie_rows.cols() != h.cols())
        throw std::invalid_argument("genie rows do not match the receiver's interference variables");

    std::vector<Matrix> kept{h};
    for (std::size_t r = 0; r < genie_rows.rows(); ++r)
        if (!row_touches_block(genie_rows, r, pos * mt, mt))
            kept.push_back(genie_rows.block(r, 0, 1, genie_rows.cols()));
    const Matrix a = vstack(kept);

    std::vector<Matrix> others;
    const std::size_t n = h.cols() / mt;
    for (std::size_t b = 0; b < n; ++b)
        if (b != pos)
            others.push_back(a.block(0, b * mt, a.rows(), mt));
    const Matrix annihilators =
        others.empty() ? Matrix::identity(a.rows(), a.backend()) : null_space(hstack(others).transpose());
    if (annihilators.cols() == 0)
        return Subspace(mt, a.backend());
    const Matrix target_cols = a.block(0, pos * mt, a.rows(), mt);
    return Subspace::span(target_cols.transpose() * annihilators);
}

Subspace exposed_subspace(const Network& net, int rx, int tx) {
    const std::size_t width = net.interferers(rx).size() * static_cast<std::size_t>(net.mt);
    return resolve_exposed(net, rx, tx, Matrix(0, width, net.backend()));
}

bool genie_acceptable(const Network& net, int rx, const Matrix& genie_rows) {
    const Matrix h = interference_rows(net, rx);
    if (genie_rows.rows() > 0 && genie_rows.cols() != h.cols())
        throw std::invalid_argument("genie rows do not match the receiver's interference variables");
    if (h.rows() + genie_rows.rows() < h.cols())
        throw GenieTooSmall("genie too small: " + std::to_string(h.rows() + genie_rows.rows()) + " equations for " +
                            std::to_string(h.cols()) + " interference variables");
    if (h.cols() == 0)
        return true;
    const Matrix stacked = genie_rows.rows() > 0 ? vstack({h, genie_rows}) : h;
    return rank(stacked) == h.cols();
}

ChainLedger run_script(const Network& net, const ChainScript& script) {
    if (net.topology != script.topology || net.K != script.K || net.mt != script.mt || net.mr != script.mr)
        throw std::invalid_argument("network does not match the script's topology and sizes");
    Runner runner(net, script.name);
    for (const auto& step : script.steps)
        runner.execute(step);
    return std::move(runner.ledger);
}

ChainLedger run_algorithm1(const Network& net) {
    require_k4_full(net);
    const int M = net.mt;
    const int N = net.mr;
    if (2 * M < N)
        throw std::invalid_argument("Algorithm 1 needs M/N in [1/2, 1)");
    const int K = net.K;
    const int m0 = N - M;
    const int need = M - m0;

    Runner runner(net, "alg1");
    runner.execute(make_step(2, {full_part(3), generic_part(1, need)}, 1, "O1"));
    std::string o = "O1";
    int r = 2;
    if (runner.ledger.dim_of(o) == static_cast<std::size_t>(M) || runner.ledger.degraded)
        return std::move(runner.ledger);

    for (std::size_t guard = 0; guard < max_chain_steps(net); ++guard) {
        const int size = static_cast<int>(runner.ledger.dim_of(o));
        const int rx = wrap(r + 1, K);
        const int helper = wrap(r + 2, K);
        const std::string next = "O" + std::to_string(runner.ledger.trace.size() + 1);
        if (size == need) {
            runner.execute(make_step(rx, {full_part(helper), ref_part(o)}));
            return std::move(runner.ledger);
        }
        if (size < need)
            runner.execute(make_step(rx, {full_part(helper), ref_part(o), generic_part(r, need - size)}, r, next));
        else
            runner.execute(make_step(rx, {ref_part(o), generic_part(r, 2 * M - m0 - size)}, r, next));
        o = next;
        r = rx;
        if (runner.ledger.degraded && runner.ledger.dim_of(o) == 0)
            return std::move(runner.ledger);
    }
    throw std::logic_error("Algorithm 1 did not close within the step limit");
}

ChainLedger run_algorithm2(const Network& net) {
    require_k4_full(net);
    const int M = net.mt;
    const int N = net.mr;
    const int g0 = std::gcd(M, N);
    const bool is_8_21 = (M / g0 == 8 && N / g0 == 21);
    if (!in_half_regime(M, N) && p3_index(M, N) == 0 && !is_8_21)
        throw std::invalid_argument("Algorithm 2 needs M/N in [2/5, 1/2), 8/21 or (2c-1)/(5c-2)");
    const int K = net.K;
    const int g = 3 * M - N;

    Runner runner(net, "alg2");
    runner.execute(make_step(2, {generic_part(1, g)}, 1, "O1"));
    std::string o = "O1";
    int r = 2;
    int t = 1;

    auto next_rx = [&](int from, std::initializer_list<int> excluded) {
        const Subspace& current = runner.ledger.registry.at(o).space;
        for (int k = 0; k < K; ++k) {
            const int rx = wrap(from + k, K);
            if (std::find(excluded.begin(), excluded.end(), rx) != excluded.end())
                continue;
            if (contains(exposed_subspace(net, rx, t), current))
                continue;
            return rx;
        }
        throw std::logic_error("no receiver can extend the chain");
    };

    for (std::size_t guard = 0; guard < max_chain_steps(net); ++guard) {
        const int size = static_cast<int>(runner.ledger.dim_of(o));
        const std::size_t idx = runner.ledger.trace.size() + 1;
        if (size == g) {
            runner.execute(make_step(next_rx(r + 1, {t}), {ref_part(o)}));
            return std::move(runner.ledger);
        }
        if (size < g) {
            const int rx = next_rx(r + 1, {t, r});
            const std::string next = "O" + std::to_string(idx);
            runner.execute(make_step(rx, {ref_part(o), generic_part(r, g - size)}, r, next));
            t = r;
            r = rx;
            o = next;
        } else {
            const int rx = next_rx(r + 1, {t});
            const std::string next = "I" + std::to_string(idx);
            runner.execute(make_step(rx, {generic_part(t, g)}, t, next, o));
            r = rx;
            o = next;
        }
        if (runner.ledger.degraded && runner.ledger.dim_of(o) == 0)
            return std::move(runner.ledger);
    }
    throw std::logic_error("Algorithm 2 did not close within the step limit");
}

BoundBreakdown ledger_breakdown(const ChainLedger& ledger) {
    if (ledger.inequalities.empty())
        throw std::invalid_argument("empty ledger");
    BoundBreakdown b;
    b.lhs = 0;
    b.log = 0;
    b.rate = 0;
    std::map<std::string, int> net;
    for (const auto& ineq : ledger.inequalities) {
        b.lhs += ineq.lhs;
        b.log += ineq.log;
        b.rate += ineq.rate;
        for (const auto& t : ineq.terms)
            net[t.id] += t.sign;
    }

    std::map<int, std::vector<Subspace>> negatives;
    for (const auto& id : ledger.registry_order) {
        auto it = net.find(id);
        if (it == net.end() || it->second == 0)
            continue;
        const RegisteredSpace& reg = ledger.registry.at(id);
        if (it->second > 0) {
            b.residual_positive.push_back(id);
            b.log += static_cast<long>(it->second) * static_cast<long>(reg.space.dim());
        } else {
            b.residual_negative.push_back(id);
            for (int k = 0; k < -it->second; ++k)
                negatives[reg.tx].push_back(reg.space);
        }
    }
    // Leftover negative terms on one transmitter are lower-bounded through the
    // multiple-look packing: every complete set of them is worth at least nR.
    for (const auto& [tx, spaces] : negatives) {
        const auto result = build_full_sets(spaces, static_cast<std::size_t>(ledger.mt));
        b.multilook_credit += result.l_sigma;
    }
    b.rate -= static_cast<long>(b.multilook_credit);

    const Rational denom = b.lhs - b.rate;
    if (sgn(denom) <= 0)
        throw ChainDoesNotClose("chain does not close: the rate coefficients cancel the left-hand side");
    b.bound = b.log / denom;
    b.bound.canonicalize();
    return b;
}

Rational ledger_bound(const ChainLedger& ledger) { return ledger_breakdown(ledger).bound; }

std::vector<std::size_t> coordinate_support(const Subspace& s) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < s.ambient(); ++i) {
        Matrix e(s.ambient(), 1, s.backend());
        if (s.backend() == Backend::rational)
            e.q(i, 0) = 1;
        else
            e.f(i, 0) = 1.0;
        if (contains(s, Subspace::span(e)))
            out.push_back(i);
    }
    return out;
}

std::string cert_regime_name(CertRegime r) { return r == CertRegime::half ? "half" : "p3"; }

CertRegime parse_cert_regime(const std::string& name) {
    if (name == "half")
        return CertRegime::half;
    if (name == "p3")
        return CertRegime::p3;
    throw std::invalid_argument("unknown certification regime: " + name);
}

CertReport certify_structured(int M, int N, CertRegime regime, std::uint64_t seed) {
    CertReport rep;
    rep.M = M;
    rep.N = N;
    rep.regime = regime;
    const Network net =
        regime == CertRegime::half ? structured_channels_half(M, N, seed) : structured_channels_p3(M, N, seed);
    rep.a = regime == CertRegime::half ? std::gcd(M, N) : 2 * N - 5 * M;
    const ChainLedger ledger = run_algorithm2(net);
    bool all = !ledger.degraded;
    for (const auto& rec : ledger.trace) {
        CertStep cs;
        cs.index = rec.index;
        cs.rx = rec.rx;
        cs.target = rec.target;
        cs.action = rec.action;
        cs.clean_dims = rec.clean_index_set.size();
        cs.observed_dim = rec.observed_dim;
        cs.combined_rank = rec.combined_rank;
        cs.acceptable = rec.acceptable;
        cs.full_rank = rec.acceptable && rec.note.empty() &&
                       (rec.target == 0 || rec.combined_rank == static_cast<std::size_t>(M));
        cs.clean_index_set = rec.clean_index_set;
        all = all && cs.full_rank;
        rep.steps.push_back(std::move(cs));
    }
    rep.bound = ledger_bound(ledger);
    const Rational target = make_rational(static_cast<long>(M) * N, M + N);
    rep.pass = all && rep.bound == target;
    return rep;
}

std::vector<std::pair<int, int>> certify_points(CertRegime regime, int max_n) {
    std::vector<std::pair<int, int>> pts;
    for (int n = 1; n <= max_n; ++n)
        for (int m = 1; m < n; ++m) {
            const bool ok = regime == CertRegime::half ? in_half_regime(m, n) : p3_index(m, n) > 0;
            if (ok)
                pts.emplace_back(m, n);
        }
    return pts;
}

P1Verification verify_p1(int M, int N, int trials, std::uint64_t seed) {
    P1Verification v;
    v.M = M;
    v.N = N;
    v.trials = trials;
    const Rational target = make_rational(static_cast<long>(M) * N, M + N);
    for (int t = 0; t < trials; ++t) {
        const Network net = generate_generic(Topology::full_ic, 4, M, N, derive_seed(seed, "p1", {std::uint64_t(t)}));
        const ChainLedger ledger = run_algorithm1(net);
        if (ledger.degraded || ledger_bound(ledger) != target)
            ++v.failures;
    }
    v.verified = trials > 0 && v.failures == 0;
    return v;
}

ChainScript four_to_one_script(int M, int N) {
    if (M < 1 || M > N)
        throw std::invalid_argument("four-to-one script needs 1 <= M <= N");
    ChainScript s;
    s.name = "four_to_one_" + std::to_string(M) + "x" + std::to_string(N);
    s.topology = Topology::many_to_one;
    s.K = 4;
    s.mt = M;
    s.mr = N;
    const Rational gamma = make_rational(M, N);
    auto upto = [&](long p, long q) { return gamma <= make_rational(p, q); };
    if (upto(1, 4)) {
        ChainStep st;
        st.rx = 1;
        st.single_user = true;
        s.steps.push_back(st);
    } else if (upto(1, 3)) {
        s.steps.push_back(make_step(1, {}));
    } else if (upto(4, 9)) {
        s.steps.push_back(make_step(1, {generic_part(2, 3 * M - N)}));
    } else if (upto(1, 2)) {
        s.steps.push_back(make_step(1, {full_part(2)}));
    } else if (upto(3, 5)) {
        s.steps.push_back(make_step(1, {full_part(2), generic_part(3, 2 * M - N)}));
    } else if (upto(2, 3)) {
        s.steps.push_back(make_step(1, {full_part(2), generic_part(3, 2 * M - N)}, 3, "O"));
        s.steps.push_back(make_step(1, {full_part(4), ref_part("O")}));
    } else if (upto(5, 6)) {
        s.steps.push_back(make_step(1, {full_part(2), generic_part(3, 2 * M - N)}, 3, "O"));
        s.steps.push_back(make_step(1, {full_part(4), ref_part("O"), generic_part(3, 3 * M - 2 * N)}));
    } else {
        s.steps.push_back(make_step(1, {full_part(2), full_part(3)}));
    }
    return s;
}

std::vector<std::string> builtin_script_names() {
    return {"ex1_2x5",          "ex2_3x7",          "ex2alt_3x7",       "ex3_3x8",          "chain_8_21",
            "recip_8x3",        "kuser_5_4_15",     "five_to_one_2x5",  "xch_2x3",          "four_to_one_2x5",
            "four_to_one_5x11", "four_to_one_4x7",  "four_to_one_5x8",  "four_to_one_3x4",  "four_to_one_6x7",
            "recip_8x3_literal"};
}

ChainScript builtin_script(const std::string& name) {
    ChainScript s;
    s.name = name;
    auto sizes = [&](Topology t, int K, int mt, int mr) {
        s.topology = t;
        s.K = K;
        s.mt = mt;
        s.mr = mr;
    };
    if (name == "ex1_2x5") {
        sizes(Topology::full_ic, 4, 2, 5);
        s.steps = {make_step(2, {generic_part(1, 1)}, 1, "O1"), make_step(3, {ref_part("O1")})};
    } else if (name == "ex2_3x7") {
        sizes(Topology::full_ic, 4, 3, 7);
        s.steps = {make_step(2, {generic_part(1, 2)}, 1, "O1"), make_step(3, {ref_part("O1"), generic_part(2, 1)}, 2, "O2"),
                   make_step(4, {ref_part("O2")})};
    } else if (name == "ex2alt_3x7") {
        sizes(Topology::full_ic, 4, 3, 7);
        s.steps = {make_step(2, {generic_part(1, 2)}, 1, "O2"), make_step(3, {generic_part(1, 2)}, 1, "O3"),
                   make_step(4, {ref_part("O2"), ref_part("O3")})};
    } else if (name == "ex3_3x8") {
        sizes(Topology::full_ic, 4, 3, 8);
        s.steps = {make_step(2, {generic_part(1, 1)}, 1, "O1"), make_step(3, {generic_part(1, 1)}, 1, "I", "O1"),
                   make_step(4, {ref_part("I")})};
    } else if (name == "chain_8_21") {
        sizes(Topology::full_ic, 4, 8, 21);
        s.steps = {make_step(2, {generic_part(1, 3)}, 1, "O1"),
                   make_step(3, {generic_part(1, 3)}, 1, "I1", "O1"),
                   make_step(4, {ref_part("I1"), generic_part(3, 1)}, 3, "O2"),
                   make_step(1, {generic_part(3, 3)}, 3, "I2", "O2"),
                   make_step(2, {generic_part(3, 3)}, 3, "I3", "I2"),
                   make_step(4, {ref_part("I3"), generic_part(2, 2)}, 2, "O3"),
                   make_step(1, {generic_part(2, 3)}, 2, "I4", "O3"),
                   make_step(3, {ref_part("I4")})};
    } else if (name == "recip_8x3_literal") {
        // Steps 6-8 reuse TX 4 and RX 1, so the last observation falls inside the
        // span of step 4's and the leftover TX 2 terms only cover 7 of 8 dimensions.
        sizes(Topology::full_ic, 4, 8, 3);
        s.steps = {make_step(2, {generic_part(1, 5), full_part(3), full_part(4)}, 1, "A"),
                   make_step(3, {generic_part(1, 5), full_part(2), full_part(4)}, 1, "B"),
                   make_step(4, {ref_part("A"), ref_part("B"), generic_part(2, 7), full_part(3)}, 2, "C"),
                   make_step(1, {generic_part(2, 5), full_part(3), full_part(4)}, 2, "D"),
                   make_step(3, {generic_part(2, 5), full_part(1), full_part(4)}, 2, "E"),
                   make_step(2, {generic_part(4, 5), full_part(1), full_part(3)}, 4, "F"),
                   make_step(3, {generic_part(4, 5), full_part(1), full_part(2)}, 4, "G"),
                   make_step(1, {ref_part("F"), ref_part("G"), generic_part(2, 7), full_part(3)}, 2, "H")};
    } else if (name == "recip_8x3") {
        sizes(Topology::full_ic, 4, 8, 3);
        s.steps = {make_step(2, {generic_part(1, 5), full_part(3), full_part(4)}, 1, "A"),
                   make_step(3, {generic_part(1, 5), full_part(2), full_part(4)}, 1, "B"),
                   make_step(4, {ref_part("A"), ref_part("B"), generic_part(2, 7), full_part(3)}, 2, "C"),
                   make_step(1, {generic_part(2, 5), full_part(3), full_part(4)}, 2, "D"),
                   make_step(3, {generic_part(2, 5), full_part(1), full_part(4)}, 2, "E"),
                   make_step(1, {generic_part(3, 5), full_part(2), full_part(4)}, 3, "F"),
                   make_step(2, {generic_part(3, 5), full_part(1), full_part(4)}, 3, "G"),
                   make_step(4, {ref_part("F"), ref_part("G"), generic_part(2, 7), full_part(1)}, 2, "H")};
    } else if (name == "kuser_5_4_15") {
        sizes(Topology::full_ic, 5, 4, 15);
        s.steps = {make_step(2, {generic_part(1, 1)}, 1, "O1"), make_step(3, {generic_part(1, 1)}, 1, "I2", "O1"),
                   make_step(4, {generic_part(1, 1)}, 1, "I3", "I2"), make_step(5, {ref_part("I3")})};
    } else if (name == "five_to_one_2x5") {
        sizes(Topology::many_to_one, 5, 2, 5);
        s.steps = {make_step(1, {generic_part(2, 1), full_part(3)}, 2, "O"), make_step(1, {ref_part("O"), full_part(4)})};
    } else if (name == "xch_2x3") {
        sizes(Topology::x_channel, 3, 2, 3);
        ChainStep first = make_step(1, {generic_part(2, 1), full_part(3, 2)}, 2, "O");
        first.target_credit = 2;
        s.steps = {first, make_step(1, {ref_part("O"), full_part(1, 2)})};
    } else if (name.rfind("four_to_one_", 0) == 0) {
        const auto rest = name.substr(12);
        const auto x = rest.find('x');
        if (x == std::string::npos)
            throw std::invalid_argument("unknown builtin script: " + name);
        return four_to_one_script(std::stoi(rest.substr(0, x)), std::stoi(rest.substr(x + 1)));
    } else {
        throw std::invalid_argument("unknown builtin script: " + name);
    }
    return s;
}

Network network_for_script(const ChainScript& script, std::uint64_t seed) {
    return generate_generic(script.topology, script.K, script.mt, script.mr, seed);
}

}  // namespace doflab
