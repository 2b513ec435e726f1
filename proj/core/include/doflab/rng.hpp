#pragma once

#include <cstdint>
#include <initializer_list>
#include <string_view>

namespace doflab {

std::uint64_t splitmix64(std::uint64_t& state);

// Sub-seed for a (tag, index...) path below a master seed. Tags are hashed
// with FNV-1a so the mapping is fixed across platforms.
std::uint64_t derive_seed(std::uint64_t master, std::string_view tag,
                          std::initializer_list<std::uint64_t> path = {});

// xoshiro256** seeded through splitmix64. Normals use the cosine branch of
// Box-Muller on two 53-bit uniforms, one normal per pair; std::normal_distribution
// is avoided because its output differs between standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next();
    double uniform();  // (0, 1]
    double normal();

private:
    std::uint64_t s_[4];
};

}  // namespace doflab
