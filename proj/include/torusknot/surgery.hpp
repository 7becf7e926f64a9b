#pragma once

#include <vector>

#include "torusknot/decorations.hpp"
#include "torusknot/exact_matrix.hpp"

namespace torusknot {

struct SurgeryComponent {
    Slope contact_coefficient;  // -1 for chain components, +1 for the two push-offs
    Slope smooth_coefficient;   // tb + contact coefficient
    Int tb = -1;
    Int rotation = 0;
    Int stabilizations = 0;
    int chain = 0;     // 0 for the -p/p' chain, 1 for the -q/(q-q') chain, 2 for the (+1) pair
    int position = 0;  // 1-based position inside its chain
    bool is_plus_one = false;
};

struct SurgeryDiagram {
    Slope p_coefficient;  // -p/p'
    Slope q_coefficient;  // -q/(q-q')
    std::vector<SurgeryComponent> components;
    IntMatrix linking_matrix;
    int plus_one_count = 2;

    std::vector<Int> rotation_vector() const;
};

// Stabilization counts |r_i + 2| of the chain realising contact r-surgery, r < -1,
// with r_1 = a_1 - 1 and r_i = a_i afterwards.
std::vector<Int> chain_stabilizations(const Slope& r);

SurgeryDiagram compile_diagram(const KnotModel& model, const DecoratedPathPair& d);

struct SignatureEuler {
    int sigma = 0;
    int chi = 0;
};

SignatureEuler signature_euler(const SurgeryDiagram& diag);

// The linking matrix depends only on (p, q), so its inverse, signature and
// Euler characteristic are shared by every decoration of one knot.
struct SurgeryFrame {
    IntMatrix linking_matrix;
    RatMatrix inverse;
    SignatureEuler se;
    RatVector lk_image;  // M^-1 applied to the all -1 vector
    int plus_one_count = 2;
};

SurgeryFrame make_frame(const SurgeryDiagram& diag);
SurgeryFrame make_frame(const KnotModel& model);

// Throws std::logic_error when the formula does not land on an integer.
Int d3(const SurgeryDiagram& diag);
Int d3(const SurgeryFrame& frame, const std::vector<Int>& rot);

// rot0 - rot^T M^-1 lk with lk the all -1 vector.
Int rot_surgered(const SurgeryDiagram& diag, Int rot0 = 0);
Int rot_surgered(const SurgeryFrame& frame, const std::vector<Int>& rot, Int rot0 = 0);

}  // namespace torusknot
