#include "doflab/alignment.hpp"

#include "doflab/dof_formulas.hpp"
#include "doflab/exact_linalg.hpp"
#include "doflab/rng.hpp"
#include "doflab/subspace.hpp"

#include <stdexcept>

namespace doflab {

namespace {

Matrix null_basis_of_dim(const Matrix& system, std::size_t expected, const char* what) {
    const Matrix n = null_space(system);
    if (n.cols() != expected)
        throw std::runtime_error(std::string(what) + ": null space has dimension " + std::to_string(n.cols()) +
                                 ", expected " + std::to_string(expected));
    return n;
}

}  // namespace

PrecoderSet design_k_user(const Network& net, int beta) {
    const int K = net.K;
    if (net.topology != Topology::full_ic || beta < 1 || net.mt != beta * K || net.mr != beta * (K * K - K - 1))
        throw std::invalid_argument("design_k_user needs a full_ic network with (M_T, M_R) = (beta K, beta (K^2-K-1))");
    const std::size_t mt = static_cast<std::size_t>(net.mt);
    const std::size_t b = static_cast<std::size_t>(beta);

    // blocks[i][idx] is V^[i]_idx, idx = 1..K-1.
    std::map<int, std::map<int, Matrix>> blocks;
    for (int k = 1; k <= K; ++k) {
        std::vector<Matrix> cols;
        std::vector<int> txs;
        for (int i = 1; i <= K; ++i)
            if (i != k) {
                cols.push_back(net.channel(k, i));
                txs.push_back(i);
            }
        const Matrix v = null_basis_of_dim(hstack(cols), b, "alignment system");
        for (std::size_t p = 0; p < txs.size(); ++p) {
            const int i = txs[p];
            const int idx = k < i ? k : k - 1;
            blocks[i][idx] = v.block(p * mt, 0, mt, b);
        }
    }
    PrecoderSet out;
    out.d = beta * (K - 1);
    for (auto& [i, per] : blocks) {
        std::vector<Matrix> ordered;
        for (auto& [idx, m] : per)
            ordered.push_back(m);
        out.V[i] = hstack(ordered);
    }
    return out;
}

std::string four_to_one_case_name(FourToOneCase c) {
    switch (c) {
    case FourToOneCase::c4_9:
        return "4/9";
    case FourToOneCase::c3_5:
        return "3/5";
    case FourToOneCase::c5_6:
        return "5/6";
    }
    return "?";
}

FourToOneCase parse_four_to_one_case(const std::string& name) {
    if (name == "4/9" || name == "4x9")
        return FourToOneCase::c4_9;
    if (name == "3/5" || name == "3x5")
        return FourToOneCase::c3_5;
    if (name == "5/6" || name == "5x6")
        return FourToOneCase::c5_6;
    throw std::invalid_argument("unknown four-to-one case: " + name);
}

PrecoderSet design_four_to_one(const Network& net, FourToOneCase c, std::uint64_t seed) {
    if (net.topology != Topology::many_to_one || net.K != 4)
        throw std::invalid_argument("design_four_to_one needs a 4-user many-to-one network");
    int pm = 0, pn = 0, pd = 0;
    switch (c) {
    case FourToOneCase::c4_9:
        pm = 4, pn = 9, pd = 3;
        break;
    case FourToOneCase::c3_5:
        pm = 3, pn = 5, pd = 2;
        break;
    case FourToOneCase::c5_6:
        pm = 5, pn = 6, pd = 3;
        break;
    }
    if (net.mt % pm != 0 || net.mt / pm < 1 || net.mr != (net.mt / pm) * pn)
        throw std::invalid_argument("network sizes do not match the four-to-one case " + four_to_one_case_name(c));
    const std::size_t beta = static_cast<std::size_t>(net.mt / pm);
    const std::size_t mt = static_cast<std::size_t>(net.mt);
    const std::size_t mr = static_cast<std::size_t>(net.mr);
    const Matrix& h2 = net.channel(1, 2);
    const Matrix& h3 = net.channel(1, 3);
    const Matrix& h4 = net.channel(1, 4);

    PrecoderSet out;
    out.d = static_cast<int>(beta) * pd;
    const std::size_t d = static_cast<std::size_t>(out.d);
    switch (c) {
    case FourToOneCase::c4_9: {
        const Matrix v = null_basis_of_dim(hstack({h2, h3, h4}), 3 * beta, "four-to-one 4/9 system");
        out.V[2] = v.block(0, 0, mt, d);
        out.V[3] = v.block(mt, 0, mt, d);
        out.V[4] = v.block(2 * mt, 0, mt, d);
        break;
    }
    case FourToOneCase::c3_5: {
        auto pair = [&](const Matrix& a, const Matrix& b) {
            return null_basis_of_dim(hstack({a, b}), beta, "four-to-one 3/5 pairwise system");
        };
        const Matrix v23 = pair(h2, h3);
        const Matrix v24 = pair(h2, h4);
        const Matrix v34 = pair(h3, h4);
        out.V[2] = hstack({v23.block(0, 0, mt, beta), v24.block(0, 0, mt, beta)});
        out.V[3] = hstack({v23.block(mt, 0, mt, beta), v34.block(0, 0, mt, beta)});
        out.V[4] = hstack({v24.block(mt, 0, mt, beta), v34.block(mt, 0, mt, beta)});
        break;
    }
    case FourToOneCase::c5_6: {
        Matrix sys(2 * mr, 3 * mt, net.backend());
        sys.set_block(0, 0, h2);
        sys.set_block(0, mt, h3);
        sys.set_block(mr, 0, h2);
        sys.set_block(mr, 2 * mt, h4);
        const Matrix v = null_basis_of_dim(sys, 3 * beta, "four-to-one 5/6 system");
        out.V[2] = v.block(0, 0, mt, d);
        out.V[3] = v.block(mt, 0, mt, d);
        out.V[4] = v.block(2 * mt, 0, mt, d);
        break;
    }
    }
    out.V[1] = random_generic(mt, d, derive_seed(seed, "precoder", {1}), net.backend()).basis();
    return out;
}

AlignmentReport verify_alignment(const Network& net, const PrecoderSet& precoders, int d) {
    AlignmentReport rep;
    rep.d = d;
    const std::size_t dd = static_cast<std::size_t>(std::max(d, 0));
    const std::size_t mr = static_cast<std::size_t>(net.mr);
    rep.precoders_full_rank = true;
    for (int k = 1; k <= net.K; ++k) {
        auto it = precoders.V.find(k);
        if (it == precoders.V.end() || it->second.cols() != dd || it->second.rows() != static_cast<std::size_t>(net.mt) ||
            rank(it->second) != dd)
            rep.precoders_full_rank = false;
    }
    rep.pass = rep.precoders_full_rank;
    if (!rep.precoders_full_rank)
        return rep;

    for (int k = 1; k <= net.K; ++k) {
        ReceiverCheck rc;
        rc.rx = k;
        Subspace interference(mr, net.backend());
        for (int j = 1; j <= net.K; ++j) {
            if (j == k || !net.has_link(k, j))
                continue;
            interference = union_span(interference, Subspace::span(net.channel(k, j) * precoders.V.at(j)));
        }
        rc.interference_dim = interference.dim();
        const Matrix desired = net.channel(k, k) * precoders.V.at(k);
        rc.desired_rank = rank(hstack({desired, interference.basis()}));
        rc.separable = rc.desired_rank == dd + rc.interference_dim;
        rc.pass = rc.interference_dim + dd <= mr && rc.separable;
        rep.pass = rep.pass && rc.pass;
        rep.receivers.push_back(rc);
    }
    return rep;
}

std::map<int, Matrix> receive_filters(const Network& net, const PrecoderSet& precoders) {
    std::map<int, Matrix> out;
    const std::size_t mr = static_cast<std::size_t>(net.mr);
    for (int k = 1; k <= net.K; ++k) {
        Subspace interference(mr, net.backend());
        for (int j = 1; j <= net.K; ++j) {
            if (j == k || !net.has_link(k, j))
                continue;
            interference = union_span(interference, Subspace::span(net.channel(k, j) * precoders.V.at(j)));
        }
        out[k] = complement(interference).basis();
    }
    return out;
}

bool proper_test(int K, int M, int N, const Rational& d, Topology topology) {
    switch (topology) {
    case Topology::full_ic:
        return d <= counting_bound(K, M, N);
    case Topology::many_to_one:
        return d <= many_to_one_counting(K, M, N);
    case Topology::x_channel:
        break;
    }
    throw std::invalid_argument("no properness test for the X channel");
}

}  // namespace doflab
