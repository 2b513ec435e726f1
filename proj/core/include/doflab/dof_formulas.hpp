#pragma once

#include "doflab/network.hpp"
#include "doflab/rational.hpp"

#include <optional>
#include <string>

namespace doflab {

Rational counting_bound(int K, int M, int N);
Rational decomposition_bound(int M, int N);
Rational k3_gap_identity(int M, int N);
Rational dstar(int K, int M, int N);
Rational four_to_one_dof(int M, int N);
Rational many_to_one_counting(int K, int M, int N);

// Upper end of the range where dstar is defined: (K-1)/(K(K-2)).
Rational dstar_limit(int K);
// (K-2)/(K^2-3K+1): above it the decomposition value is conjectured.
Rational conjecture_threshold(int K);

bool in_p1(int M, int N);
bool in_p2(int M, int N);
bool in_p3(int M, int N);

enum class ProofStatus { proven_dstar, proven_decomposition, conjectured, open };
std::string status_name(ProofStatus s);

struct DoFReport {
    RegimePoint point;
    Rational counting;
    Rational decomposition;
    std::optional<Rational> dstar;
    std::optional<Rational> four_to_one;
    std::optional<Rational> many_to_one_counting;
    Rational best_known;
    ProofStatus status = ProofStatus::open;
    int regime = 1;  // 1 when counting >= decomposition, else 2
};

DoFReport classify(int K, int mt, int mr);

}  // namespace doflab
