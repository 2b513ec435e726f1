#include "doflab/network.hpp"

#include "doflab/rng.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace doflab {

std::string topology_name(Topology t) {
    switch (t) {
    case Topology::full_ic:
        return "full_ic";
    case Topology::many_to_one:
        return "many_to_one";
    case Topology::x_channel:
        return "x_channel";
    }
    return "unknown";
}

Topology parse_topology(const std::string& name) {
    if (name == "full_ic")
        return Topology::full_ic;
    if (name == "many_to_one")
        return Topology::many_to_one;
    if (name == "x_channel")
        return Topology::x_channel;
    throw std::invalid_argument("unknown topology: " + name);
}

const Matrix& Network::channel(int rx, int tx) const {
    auto it = channels.find({rx, tx});
    if (it == channels.end())
        throw std::invalid_argument("no link from TX " + std::to_string(tx) + " to RX " + std::to_string(rx));
    return it->second;
}

Backend Network::backend() const {
    for (const auto& [key, m] : channels)
        if (!m.is_rational())
            return Backend::floating;
    return Backend::rational;
}

std::vector<int> Network::interferers(int rx) const {
    std::vector<int> out;
    for (int i = 1; i <= K; ++i) {
        if (i == rx && topology != Topology::x_channel)
            continue;
        if (has_link(rx, i))
            out.push_back(i);
    }
    return out;
}

RegimePoint make_regime_point(int K, int mt, int mr) {
    if (mt < 1 || mr < 1)
        throw std::invalid_argument("antenna counts must be positive");
    RegimePoint p;
    p.K = K;
    p.M = std::min(mt, mr);
    p.N = std::max(mt, mr);
    p.gamma = make_rational(p.M, p.N);
    return p;
}

namespace {

bool link_present(Topology t, int rx, int tx) {
    if (t == Topology::many_to_one)
        return rx == 1 || rx == tx;
    return true;
}

Matrix gaussian_matrix(int rows, int cols, std::uint64_t seed, Backend backend) {
    Rng rng(seed);
    Matrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols), backend);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            const double z = rng.normal();
            if (backend == Backend::rational)
                m.q(r, c) = Rational(mpz_class(std::lround(z * 1024.0)), mpz_class(1024));
            else
                m.f(r, c) = z;
        }
    if (backend == Backend::rational)
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                m.q(r, c).canonicalize();
    return m;
}

}  // namespace

Network generate_generic(Topology topology, int K, int mt, int mr, std::uint64_t seed) {
    if (K < 2 || mt < 1 || mr < 1)
        throw std::invalid_argument("network needs K >= 2 and positive antenna counts");
    Network net;
    net.topology = topology;
    net.K = K;
    net.mt = mt;
    net.mr = mr;
    net.seed = seed;
    for (int j = 1; j <= K; ++j)
        for (int i = 1; i <= K; ++i)
            if (link_present(topology, j, i))
                net.channels.emplace(std::make_pair(j, i),
                                     gaussian_matrix(mr, mt, derive_seed(seed, "channel", {std::uint64_t(j), std::uint64_t(i)}),
                                                     Backend::floating));
    return net;
}

StructuredBlocks structured_blocks(int M, int N, int a) {
    StructuredBlocks b;
    b.M = M;
    b.N = N;
    b.a = a;
    b.c1 = N - 2 * M;
    b.c2 = N - 2 * M - a;
    b.c3 = 5 * M - 2 * N + a;
    b.g = 3 * M - N;
    if (M < 1 || a < 1 || b.c1 < 0 || b.c2 < 0 || b.c3 < 0 || b.g < 0)
        throw std::invalid_argument("structured channel block sizes are negative for (M, N, a) = (" +
                                    std::to_string(M) + ", " + std::to_string(N) + ", " + std::to_string(a) + ")");
    return b;
}

Network structured_channels(int M, int N, int a, std::uint64_t seed) {
    const StructuredBlocks b = structured_blocks(M, N, a);
    const auto n = static_cast<std::size_t>(N);
    const auto m = static_cast<std::size_t>(M);

    Matrix next(n, m, Backend::rational);
    Matrix next2(n, m, Backend::rational);
    for (std::size_t t = 0; t < m; ++t) {
        next.q(t, t) = 1;
        next2.q(m + t, t) = 1;
    }

    // Row groups: A = [0, M) in four bands (c2, c3, c2, a), B = [M, 2M) with
    // an identity over columns c2 ∪ c3 on its first 3M - N rows, C = [2M, N)
    // with an identity over columns c1. Column order is c1, c2, c3.
    Matrix prev(n, m, Backend::rational);
    for (int t = 0; t < b.c3; ++t)
        prev.q(b.c2 + t, b.c1 + b.c2 + t) = 1;
    for (int t = 0; t < b.c2; ++t)
        prev.q(b.c2 + b.c3 + t, b.c1 + t) = 1;
    for (int t = 0; t < b.g; ++t)
        prev.q(M + t, b.c1 + t) = 1;
    for (int t = 0; t < b.c1; ++t)
        prev.q(2 * M + t, t) = 1;

    Network net;
    net.topology = Topology::full_ic;
    net.K = 4;
    net.mt = M;
    net.mr = N;
    net.seed = seed;
    auto wrap = [](int k) { return ((k - 1) % 4 + 4) % 4 + 1; };
    for (int k = 1; k <= 4; ++k) {
        net.channels.emplace(std::make_pair(k, wrap(k + 1)), next);
        net.channels.emplace(std::make_pair(k, wrap(k + 2)), next2);
        net.channels.emplace(std::make_pair(k, wrap(k - 1)), prev);
        net.channels.emplace(std::make_pair(k, k),
                             gaussian_matrix(N, M, derive_seed(seed, "desired", {std::uint64_t(k)}), Backend::rational));
    }
    return net;
}

bool in_half_regime(int M, int N) {
    return M >= 1 && 5 * M >= 2 * N && 2 * M < N;
}

int p3_index(int M, int N) {
    if (M < 1 || N < 1)
        return 0;
    const int g = std::gcd(M, N);
    const int p = M / g;
    const int q = N / g;
    if (p % 2 == 0)
        return 0;
    const int c = (p + 1) / 2;
    return (c >= 2 && q == 5 * c - 2) ? c : 0;
}

Network structured_channels_half(int M, int N, std::uint64_t seed) {
    if (!in_half_regime(M, N))
        throw std::invalid_argument("M/N must lie in [2/5, 1/2) for the half-regime construction");
    return structured_channels(M, N, std::gcd(M, N), seed);
}

Network structured_channels_p3(int M, int N, std::uint64_t seed) {
    if (p3_index(M, N) == 0)
        throw std::invalid_argument("M/N must equal (2c-1)/(5c-2) with c >= 2");
    const int a = 2 * N - 5 * M;
    if (a != std::gcd(M, N))
        throw std::logic_error("2N - 5M differs from gcd(M, N)");
    return structured_channels(M, N, a, seed);
}

Network reciprocal(const Network& net) {
    if (net.topology != Topology::full_ic)
        throw std::invalid_argument("reciprocal is defined for full_ic networks only");
    Network r;
    r.topology = net.topology;
    r.K = net.K;
    r.mt = net.mr;
    r.mr = net.mt;
    r.seed = net.seed;
    for (const auto& [key, m] : net.channels)
        r.channels.emplace(std::make_pair(key.second, key.first), m.transpose());
    return r;
}

}  // namespace doflab
