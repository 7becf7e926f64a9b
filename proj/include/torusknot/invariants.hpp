#pragma once

#include "torusknot/surgery.hpp"

namespace torusknot {

struct RotationData {
    Int r_m = 0;
    Int r_n = 0;
    Int R = 0;
};

// r_m sums eps_i ((p_{i+1} - p_i) . 1/0) over P1, r_n sums eps'_i ((q_{i+1} - q_i) . 0/1)
// over P2, both on raw vector differences; R = p r_n + q r_m.
RotationData rotation_data(const KnotModel& model, const DecoratedPathPair& d);

bool cross_check_rot(const KnotModel& model, const DecoratedPathPair& d);

// d3 after a half Lutz twist along the transverse push-off.
Int half_lutz_d3(const KnotModel& model, const DecoratedPathPair& d, Int d3_value);

Int self_linking(Int tb, Int rot);

bool parity_ok(int pq_sign, bool torsion_is_half_integer, Int d3_value);

}  // namespace torusknot
