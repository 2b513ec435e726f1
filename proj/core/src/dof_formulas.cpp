#include "doflab/dof_formulas.hpp"

#include <numeric>
#include <stdexcept>

namespace doflab {

namespace {

Rational frac(long p, long q) { return make_rational(p, q); }

void require_positive(int M, int N) {
    if (M < 1 || N < 1)
        throw std::invalid_argument("antenna counts must be positive");
}

}  // namespace

Rational counting_bound(int K, int M, int N) {
    if (K < 2)
        throw std::invalid_argument("counting bound needs K >= 2");
    return frac(M + N, K + 1);
}

Rational decomposition_bound(int M, int N) {
    require_positive(M, N);
    return frac(static_cast<long>(M) * N, M + N);
}

Rational k3_gap_identity(int M, int N) {
    require_positive(M, N);
    Rational gap = frac(M + N, 4) - decomposition_bound(M, N);
    gap.canonicalize();
    return gap;
}

Rational dstar_limit(int K) { return frac(K - 1, static_cast<long>(K) * (K - 2)); }

Rational conjecture_threshold(int K) { return frac(K - 2, static_cast<long>(K) * K - 3L * K + 1); }

Rational dstar(int K, int M, int N) {
    if (K < 4)
        throw std::invalid_argument("dstar is defined for K >= 4");
    require_positive(M, N);
    const Rational gamma = frac(M, N);
    const long k2 = static_cast<long>(K) * K - K - 1;
    if (gamma <= frac(1, K))
        return Rational(M);
    if (gamma <= frac(1, K - 1))
        return frac(N, K);
    if (gamma <= frac(K, k2))
        return frac(static_cast<long>(K - 1) * M, K);
    if (gamma <= dstar_limit(K))
        return frac(static_cast<long>(K - 1) * N, k2);
    throw std::invalid_argument("M/N is above (K-1)/(K(K-2)); dstar is not defined there");
}

Rational four_to_one_dof(int M, int N) {
    require_positive(M, N);
    if (M > N)
        throw std::invalid_argument("four_to_one_dof needs M <= N");
    const Rational gamma = frac(M, N);
    if (gamma <= frac(1, 4))
        return Rational(M);
    if (gamma <= frac(1, 3))
        return frac(N, 4);
    if (gamma <= frac(4, 9))
        return frac(3L * M, 4);
    if (gamma <= frac(1, 2))
        return frac(N, 3);
    if (gamma <= frac(3, 5))
        return frac(2L * M, 3);
    if (gamma <= frac(2, 3))
        return frac(2L * N, 5);
    if (gamma <= frac(5, 6))
        return frac(3L * M, 5);
    return frac(N, 2);
}

Rational many_to_one_counting(int K, int M, int N) {
    if (K < 2)
        throw std::invalid_argument("many-to-one counting bound needs K >= 2");
    return frac(static_cast<long>(K - 1) * M + N, 2L * K - 1);
}

bool in_p1(int M, int N) { return 2 * M >= N && M < N && N <= 20; }

bool in_p2(int M, int N) { return in_half_regime(M, N); }

bool in_p3(int M, int N) {
    const int g = std::gcd(M, N);
    return (M / g == 8 && N / g == 21) || p3_index(M, N) > 0;
}

std::string status_name(ProofStatus s) {
    switch (s) {
    case ProofStatus::proven_dstar:
        return "proven_dstar";
    case ProofStatus::proven_decomposition:
        return "proven_decomposition";
    case ProofStatus::conjectured:
        return "conjectured";
    case ProofStatus::open:
        return "open";
    }
    return "unknown";
}

DoFReport classify(int K, int mt, int mr) {
    if (K < 4)
        throw std::invalid_argument("classification covers K >= 4 only");
    DoFReport rep;
    rep.point = make_regime_point(K, mt, mr);
    const int M = rep.point.M;
    const int N = rep.point.N;
    rep.counting = counting_bound(K, M, N);
    rep.decomposition = decomposition_bound(M, N);
    rep.many_to_one_counting = many_to_one_counting(K, M, N);
    if (K == 4)
        rep.four_to_one = four_to_one_dof(M, N);
    rep.regime = rep.counting >= rep.decomposition ? 1 : 2;

    const Rational& gamma = rep.point.gamma;
    if (gamma <= dstar_limit(K)) {
        rep.dstar = dstar(K, M, N);
        rep.status = ProofStatus::proven_dstar;
        rep.best_known = *rep.dstar;
        return rep;
    }
    rep.best_known = rep.decomposition;
    if (in_p1(M, N) || in_p2(M, N) || in_p3(M, N))
        rep.status = ProofStatus::proven_decomposition;
    else if (gamma >= conjecture_threshold(K))
        rep.status = ProofStatus::conjectured;
    else
        rep.status = ProofStatus::open;
    return rep;
}

}  // namespace doflab
