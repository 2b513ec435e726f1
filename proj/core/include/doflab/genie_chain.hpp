#pragma once

#include "doflab/network.hpp"
#include "doflab/rational.hpp"
#include "doflab/subspace.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace doflab {

class GenieTooSmall : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ChainDoesNotClose : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// One part of a genie handed to a receiver.
//   generic: `dims` generic combinations of TX `tx`'s symbols (X^[tx]_(dims))
//   ref:     the rows of a previously registered observation or intersection
//   full:    the whole signal of TX `tx`, obtained from its messages; this
//            charges `credit` units of nR and creates no subspace term
enum class GenieKind { generic, ref, full };

struct GeniePart {
    GenieKind kind = GenieKind::generic;
    int tx = 0;
    int dims = 0;
    std::string id;
    int credit = 1;
};

struct ChainStep {
    int rx = 0;
    std::vector<GeniePart> genie;
    int target = 0;  // 0: no target, the step only consumes its genie
    int target_credit = 1;
    std::string intersect_with;
    std::string out;
    bool single_user = false;  // R <= min(M_T, M_R) log(rho); no genie involved
};

struct ChainScript {
    std::string name;
    Topology topology = Topology::full_ic;
    int K = 4;
    int mt = 0;
    int mr = 0;
    std::vector<ChainStep> steps;
};

struct Term {
    std::string id;
    int sign = 1;
};

// lhs * nR <= log * n log(rho) + rate * nR + sum of signed entropy terms
struct Inequality {
    int lhs = 0;
    Rational log;
    Rational rate;
    std::vector<Term> terms;
};

struct RegisteredSpace {
    int tx = 0;
    std::string provenance;
    Subspace space;
};

struct StepRecord {
    std::size_t index = 0;
    int rx = 0;
    int target = 0;
    std::string action;  // expose, intersect, close, direct, single_user
    std::vector<std::string> genie;
    std::size_t genie_rows = 0;
    bool genie_too_small = false;
    bool acceptable = true;
    std::size_t observed_dim = 0;
    std::size_t combined_rank = 0;
    std::size_t intersection_dim = 0;
    std::string out;
    std::string note;
    std::vector<std::size_t> clean_index_set;  // coordinates of the target seen without genie help
    std::optional<Matrix> observation;         // basis of the new observation, if any
};

struct ChainLedger {
    std::string name;
    int mt = 0;
    std::vector<Inequality> inequalities;
    std::map<std::string, RegisteredSpace> registry;
    std::vector<std::string> registry_order;
    bool degraded = false;
    std::vector<StepRecord> trace;
    std::size_t max_consecutive_intersections = 0;

    std::size_t dim_of(const std::string& id) const { return registry.at(id).space.dim(); }
};

struct BoundBreakdown {
    Rational lhs;
    Rational log;
    Rational rate;
    std::size_t multilook_credit = 0;
    std::vector<std::string> residual_positive;
    std::vector<std::string> residual_negative;
    Rational bound;
};

// Rows of the interference variables seen at `rx`: [H^[rx,i1] ... H^[rx,in]].
Matrix interference_rows(const Network& net, int rx);

// Embeds `rows` (k x M_T, on TX `tx`) into k x (n M_T) over rx's interference variables.
Matrix embed_genie_rows(const Network& net, int rx, int tx, const Matrix& rows);

Subspace exposed_subspace(const Network& net, int rx, int tx);
Subspace resolve_exposed(const Network& net, int rx, int tx, const Matrix& genie_rows);
bool genie_acceptable(const Network& net, int rx, const Matrix& genie_rows);

ChainLedger run_script(const Network& net, const ChainScript& script);
ChainLedger run_algorithm1(const Network& net);
ChainLedger run_algorithm2(const Network& net);

BoundBreakdown ledger_breakdown(const ChainLedger& ledger);
Rational ledger_bound(const ChainLedger& ledger);

// Indices i with e_i inside s.
std::vector<std::size_t> coordinate_support(const Subspace& s);

enum class CertRegime { half, p3 };
std::string cert_regime_name(CertRegime r);
CertRegime parse_cert_regime(const std::string& name);

struct CertStep {
    std::size_t index = 0;
    int rx = 0;
    int target = 0;
    std::string action;
    std::size_t clean_dims = 0;
    std::size_t observed_dim = 0;
    std::size_t combined_rank = 0;
    bool acceptable = true;
    bool full_rank = true;
    std::vector<std::size_t> clean_index_set;
};

struct CertReport {
    int M = 0;
    int N = 0;
    CertRegime regime = CertRegime::half;
    int a = 0;
    bool pass = false;
    Rational bound;
    std::vector<CertStep> steps;
};

CertReport certify_structured(int M, int N, CertRegime regime, std::uint64_t seed = 0);

// (M, N) pairs of a regime with N <= max_n, ordered by N then M.
std::vector<std::pair<int, int>> certify_points(CertRegime regime, int max_n);

struct P1Verification {
    int M = 0;
    int N = 0;
    int trials = 0;
    int failures = 0;
    bool verified = false;
};
P1Verification verify_p1(int M, int N, int trials = 20, std::uint64_t seed = 0);

std::vector<std::string> builtin_script_names();
ChainScript builtin_script(const std::string& name);
ChainScript four_to_one_script(int M, int N);
Network network_for_script(const ChainScript& script, std::uint64_t seed);

}  // namespace doflab
