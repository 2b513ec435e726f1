#pragma once

#include "doflab/network.hpp"
#include "doflab/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace doflab {

struct PrecoderSet {
    int d = 0;
    std::map<int, Matrix> V;  // per transmitter, M_T x d
};

// (M_T, M_R) = (beta K, beta (K^2 - K - 1)) full interference channel; d = beta (K - 1).
PrecoderSet design_k_user(const Network& net, int beta);

enum class FourToOneCase { c4_9, c3_5, c5_6 };
std::string four_to_one_case_name(FourToOneCase c);
FourToOneCase parse_four_to_one_case(const std::string& name);

// Many-to-one K = 4 with (M, N) = beta (4, 9), beta (3, 5) or beta (5, 6).
PrecoderSet design_four_to_one(const Network& net, FourToOneCase c, std::uint64_t seed = 0);

struct ReceiverCheck {
    int rx = 0;
    std::size_t interference_dim = 0;
    std::size_t desired_rank = 0;
    bool separable = false;
    bool pass = false;
};

struct AlignmentReport {
    int d = 0;
    bool precoders_full_rank = false;
    bool pass = false;
    std::vector<ReceiverCheck> receivers;
};

AlignmentReport verify_alignment(const Network& net, const PrecoderSet& precoders, int d);

// Zero-forcing receive filters: U^[k] spans the complement of rx k's interference.
std::map<int, Matrix> receive_filters(const Network& net, const PrecoderSet& precoders);

bool proper_test(int K, int M, int N, const Rational& d, Topology topology);

}  // namespace doflab
