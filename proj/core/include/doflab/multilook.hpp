#pragma once

#include "doflab/subspace.hpp"

#include <cstddef>
#include <vector>

namespace doflab {

struct MultilookPart {
    std::size_t source = 0;  // index into the input list
    Subspace part;
};

struct MultilookResult {
    std::size_t l_sigma = 0;
    std::vector<std::vector<MultilookPart>> sets;  // complete sets only
    std::vector<MultilookPart> discarded;
};

// Greedy packing in input order. Each incoming subspace P is split against the
// span S of the set under construction: P\(P∩S) joins the set, P∩S is carried
// to the front of the next set. With generic inputs this is the overflow split
// of the sequential procedure; leftovers of the unfinished last set are
// reported as discarded.
MultilookResult build_full_sets(const std::vector<Subspace>& subspaces, std::size_t M);

std::size_t l_sigma_generic(const std::vector<std::size_t>& dims, std::size_t M);

}  // namespace doflab
