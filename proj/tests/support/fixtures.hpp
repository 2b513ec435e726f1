#pragma once

#include "doflab/matrix.hpp"
#include "doflab/network.hpp"
#include "doflab/rational.hpp"
#include "doflab/subspace.hpp"

#include <vector>

namespace fixtures {

using doflab::Matrix;
using doflab::Subspace;

// Worked 3-D example: two planes, their complements, meet and set-minus.
inline Subspace plane_one() { return doflab::from_columns(3, std::vector<std::vector<long>>{{1, 1, 0}, {2, 0, 3}}); }
inline Subspace plane_two() { return doflab::from_columns(3, std::vector<std::vector<long>>{{2, -1, 4}, {-2, -3, 1}}); }

inline Subspace rational_line(const std::vector<doflab::Rational>& v) { return doflab::from_columns(v.size(), {v}); }

// Six-subspace packing instance in R^3 with dims (1, 2, 1, 1, 3, 2).
inline std::vector<Subspace> packing_instance() {
    using V = std::vector<std::vector<long>>;
    return {doflab::from_columns(3, V{{1, 1, 1}}),
            doflab::from_columns(3, V{{0, 2, 3}, {0, 1, -1}}),
            doflab::from_columns(3, V{{1, -1, 0}}),
            doflab::from_columns(3, V{{1, 0, 1}}),
            doflab::from_columns(3, V{{1, -1, 3}, {1, 0, 0}, {0, 1, 0}}),
            doflab::from_columns(3, V{{0, 0, 1}, {1, 2, -4}})};
}

// Printed channel realizations of the (M_T, M_R) = (2, 5) walk-through. Only the
// links into RX 2 and RX 3 are given; the rest stay generic.
inline doflab::Network example_2x5_network() {
    using R = std::vector<std::vector<double>>;
    doflab::Network net = doflab::generate_generic(doflab::Topology::full_ic, 4, 2, 5, 2024);
    net.channels[{2, 1}] = Matrix::from_rows(
        R{{0.5888, -0.3927}, {1.0095, -1.5730}, {-0.4297, -1.3400}, {0.3536, 0.4674}, {-1.4046, 0.6240}});
    net.channels[{2, 3}] = Matrix::from_rows(
        R{{-2.4617, 0.1171}, {1.9378, 1.5657}, {0.8237, 0.5253}, {-0.8099, 1.5186}, {0.4344, -0.6581}});
    net.channels[{2, 4}] = Matrix::from_rows(
        R{{-0.5819, -1.4890}, {0.2349, 0.1483}, {-0.0988, 0.9539}, {-0.1352, 2.2932}, {-1.8865, -0.1452}});
    net.channels[{3, 1}] = Matrix::from_rows(
        R{{0.0720, -1.9399}, {0.7140, 2.4346}, {1.2446, 0.3470}, {0.4961, -0.9756}, {0.5580, 0.4654}});
    net.channels[{3, 2}] = Matrix::from_rows(
        R{{-0.0999, -0.9784}, {-0.2805, -1.1571}, {0.4136, -0.0548}, {0.2967, 1.1387}, {1.1556, 0.7722}});
    net.channels[{3, 4}] = Matrix::from_rows(
        R{{0.6760, 0.0171}, {-0.8062, -0.3684}, {0.0049, -0.3526}, {0.8783, 0.3086}, {-0.9020, 0.3290}});
    return net;
}

inline const std::vector<double> kExposedAtRx2{0.3227, 1.2639};
inline const std::vector<double> kExposedAtRx3{0.7366, 1.0464};

}  // namespace fixtures
