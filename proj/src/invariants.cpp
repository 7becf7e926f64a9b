#include "torusknot/invariants.hpp"

#include <cstdlib>
#include <stdexcept>

namespace torusknot {

RotationData rotation_data(const KnotModel& model, const DecoratedPathPair& d) {
    const auto& v1 = model.pair.p1.vertices;
    const auto& v2 = model.pair.p2.vertices;
    if (d.signs1.size() + 1 != v1.size() || d.signs2.size() + 1 != v2.size()) {
        throw std::invalid_argument("decoration does not match the path pair");
    }
    RotationData out;
    for (std::size_t i = 0; i + 1 < v1.size(); ++i) {
        Int dden = checked_sub(v1[i + 1].den, v1[i].den);
        out.r_m = checked_add(out.r_m, checked_mul(d.signs1[i], -dden));
    }
    for (std::size_t i = 0; i + 1 < v2.size(); ++i) {
        Int dnum = checked_sub(v2[i + 1].num, v2[i].num);
        out.r_n = checked_add(out.r_n, checked_mul(d.signs2[i], dnum));
    }
    const Knot& k = model.knot();
    out.R = checked_add(checked_mul(k.p, out.r_n), checked_mul(k.q, out.r_m));
    return out;
}

bool cross_check_rot(const KnotModel& model, const DecoratedPathPair& d) {
    return rotation_data(model, d).R == rot_surgered(compile_diagram(model, d), 0);
}

Int half_lutz_d3(const KnotModel& model, const DecoratedPathPair& d, Int d3_value) {
    if (!classify_consistency(model, d).totally_2_inconsistent) {
        throw std::invalid_argument("half Lutz twist needs a totally 2-inconsistent decoration");
    }
    Int r = std::llabs(rotation_data(model, d).R);
    Int pq = model.knot().pq();
    return model.knot().positive() ? checked_sub(checked_add(d3_value, r), pq) : checked_sub(checked_sub(d3_value, r), pq);
}

Int self_linking(Int tb, Int rot) { return checked_sub(tb, rot); }

bool parity_ok(int pq_sign, bool torsion_is_half_integer, Int d3_value) {
    bool odd = (d3_value % 2) != 0;
    bool want_odd = (pq_sign > 0) != torsion_is_half_integer;
    return odd == want_odd;
}

}  // namespace torusknot
