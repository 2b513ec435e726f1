#pragma once

#include "doflab/matrix.hpp"
#include "doflab/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace doflab {

enum class Topology { full_ic, many_to_one, x_channel };

std::string topology_name(Topology t);
Topology parse_topology(const std::string& name);

// Transmitters and receivers are numbered 1..K. channels[{j, i}] is H^[ji],
// an M_R x M_T matrix from TX i to RX j.
struct Network {
    Topology topology = Topology::full_ic;
    int K = 0;
    int mt = 0;
    int mr = 0;
    std::uint64_t seed = 0;
    std::map<std::pair<int, int>, Matrix> channels;

    bool has_link(int rx, int tx) const { return channels.count({rx, tx}) != 0; }
    const Matrix& channel(int rx, int tx) const;
    Backend backend() const;

    // Transmitters whose signals remain at `rx` once its own messages are
    // removed, ascending. The X channel keeps every transmitter here, since
    // each one also carries messages for other receivers.
    std::vector<int> interferers(int rx) const;
};

struct RegimePoint {
    int K = 0;
    int M = 0;
    int N = 0;
    Rational gamma;
};
RegimePoint make_regime_point(int K, int mt, int mr);

Network generate_generic(Topology topology, int K, int mt, int mr, std::uint64_t seed);

// Block sizes of the 0/1 cross channel H^[k,k-1]; all must be nonnegative.
struct StructuredBlocks {
    int M = 0, N = 0, a = 0;
    int c1 = 0, c2 = 0, c3 = 0, g = 0;
};
StructuredBlocks structured_blocks(int M, int N, int a);

// K = 4, M_T = M, M_R = N. Cross links are 0/1 matrices, desired links are
// generic; everything is on the rational backend.
Network structured_channels_half(int M, int N, std::uint64_t seed = 0);
Network structured_channels_p3(int M, int N, std::uint64_t seed = 0);
Network structured_channels(int M, int N, int a, std::uint64_t seed);

bool in_half_regime(int M, int N);
// c >= 2 with (M, N) = g (2c-1, 5c-2); returns 0 when (M, N) is not of that form.
int p3_index(int M, int N);

Network reciprocal(const Network& net);

}  // namespace doflab
