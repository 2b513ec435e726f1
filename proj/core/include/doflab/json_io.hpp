#pragma once

#include "json.hpp"

#include "doflab/alignment.hpp"
#include "doflab/dof_formulas.hpp"
#include "doflab/genie_chain.hpp"
#include "doflab/multilook.hpp"
#include "doflab/network.hpp"
#include "doflab/subspace.hpp"

namespace doflab {

using json = nlohmann::ordered_json;

// Floats are rounded to 12 significant digits; rationals become "p/q" strings.
double round12(double x);

json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

json to_json(const Subspace& s);
Subspace subspace_from_json(const json& j);

json to_json(const Network& net);
json to_json(const MultilookResult& r);
json to_json(const ChainLedger& ledger);
json to_json(const CertReport& rep);
json to_json(const DoFReport& rep);
json to_json(const PrecoderSet& p);
json to_json(const AlignmentReport& rep);

json to_json(const ChainScript& s);
ChainScript script_from_json(const json& j);

}  // namespace doflab
