#include "doflab/multilook.hpp"

#include <deque>
#include <numeric>
#include <stdexcept>

namespace doflab {

MultilookResult build_full_sets(const std::vector<Subspace>& subspaces, std::size_t M) {
    Backend backend = Backend::rational;
    for (const auto& s : subspaces) {
        if (s.ambient() != M)
            throw std::invalid_argument("multilook: subspace ambient dimension differs from M");
        if (s.backend() == Backend::floating)
            backend = Backend::floating;
    }

    std::deque<MultilookPart> pending;
    for (std::size_t i = 0; i < subspaces.size(); ++i)
        pending.push_back({i, subspaces[i]});

    MultilookResult result;
    std::vector<MultilookPart> current;
    std::vector<MultilookPart> carry;
    Subspace span(M, backend);

    while (!pending.empty()) {
        MultilookPart item = std::move(pending.front());
        pending.pop_front();
        if (item.part.dim() == 0)
            continue;
        const Subspace overlap = intersect(item.part, span);
        const Subspace rest = overlap.dim() == 0 ? item.part : subtract(item.part, overlap);
        if (rest.dim() > 0) {
            span = union_span(span, rest);
            current.push_back({item.source, rest});
        }
        if (overlap.dim() > 0)
            carry.push_back({item.source, overlap});
        if (span.dim() == M) {
            result.sets.push_back(std::move(current));
            current.clear();
            span = Subspace(M, backend);
            for (auto it = carry.rbegin(); it != carry.rend(); ++it)
                pending.push_front(std::move(*it));
            carry.clear();
        }
    }
    for (auto& p : current)
        result.discarded.push_back(std::move(p));
    for (auto& p : carry)
        result.discarded.push_back(std::move(p));
    result.l_sigma = result.sets.size();
    return result;
}

std::size_t l_sigma_generic(const std::vector<std::size_t>& dims, std::size_t M) {
    if (M == 0)
        throw std::invalid_argument("M must be positive");
    for (std::size_t d : dims)
        if (d > M)
            throw std::invalid_argument("subspace dimension exceeds M");
    return std::accumulate(dims.begin(), dims.end(), std::size_t{0}) / M;
}

}  // namespace doflab
