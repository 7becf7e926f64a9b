#include "torusknot/surgery.hpp"

#include <cstdlib>
#include <stdexcept>

namespace torusknot {

std::vector<Int> SurgeryDiagram::rotation_vector() const {
    std::vector<Int> rot;
    for (const auto& c : components) rot.push_back(c.rotation);
    return rot;
}

std::vector<Int> chain_stabilizations(const Slope& r) {
    auto e = cf_expand(r);
    if (e.regime != Regime::negative) throw std::domain_error("chain coefficient must be < -1");
    std::vector<Int> stabs;
    for (std::size_t i = 0; i < e.digits.size(); ++i) {
        Int ri = i == 0 ? checked_sub(e.digits[i], 1) : e.digits[i];
        stabs.push_back(std::llabs(checked_add(ri, 2)));
    }
    return stabs;
}

namespace {

struct Chain {
    std::vector<Int> stabs;
    std::vector<Int> tbs;
    std::vector<Int> rots;
};

Chain build_chain(const Slope& r, const std::vector<const Block*>& blocks, const std::vector<int>& signs, int orient) {
    Chain c;
    c.stabs = chain_stabilizations(r);
    Int tb = -1;
    for (Int s : c.stabs) {
        tb = checked_sub(tb, s);
        c.tbs.push_back(tb);
    }
    std::size_t next = 0;
    Int acc = 0;
    for (Int s : c.stabs) {
        if (s > 0) {
            if (next >= blocks.size()) throw std::logic_error("more stabilized components than blocks");
            const Block& b = *blocks[next++];
            if (static_cast<Int>(b.length()) != s) throw std::logic_error("block length differs from stabilization count");
            Int net = 0;
            for (auto e : b.edges) net += signs[e];
            acc = checked_add(acc, orient * net);
        }
        c.rots.push_back(acc);
    }
    if (next != blocks.size()) throw std::logic_error("fewer stabilized components than blocks");
    return c;
}

}  // namespace

SurgeryDiagram compile_diagram(const KnotModel& model, const DecoratedPathPair& raw) {
    DecoratedPathPair d = canonicalize(model, raw.signs1, raw.signs2);
    if (!(d == raw)) throw std::invalid_argument("decoration is not in canonical form");

    const Knot& k = model.knot();
    const Slope& nb = model.pair.p2.vertices.at(1);  // q'/p'
    SurgeryDiagram diag;
    diag.p_coefficient = make_slope(-k.p, nb.den);
    diag.q_coefficient = make_slope(-k.q, checked_sub(k.q, nb.num));

    std::vector<const Block*> a_blocks, b_blocks;
    for (const auto& b : model.blocks.blocks) (b.side == Side::A ? a_blocks : b_blocks).push_back(&b);
    if (model.blocks.suffix) b_blocks.push_back(&*model.blocks.suffix);

    // P2 basic slices enter with the opposite orientation.
    Chain chains[2] = {build_chain(diag.p_coefficient, a_blocks, d.signs1, 1),
                       build_chain(diag.q_coefficient, b_blocks, d.signs2, -1)};

    const Slope minus_one = make_slope(-1, 1), plus_one = make_slope(1, 1);
    for (int ch = 0; ch < 2; ++ch) {
        const Chain& c = chains[ch];
        for (std::size_t i = c.tbs.size(); i-- > 0;) {
            SurgeryComponent comp;
            comp.contact_coefficient = minus_one;
            comp.tb = c.tbs[i];
            comp.smooth_coefficient = make_slope(checked_sub(c.tbs[i], 1), 1);
            comp.rotation = c.rots[i];
            comp.stabilizations = c.stabs[i];
            comp.chain = ch;
            comp.position = static_cast<int>(i) + 1;
            diag.components.push_back(comp);
        }
    }
    for (int j = 0; j < 2; ++j) {
        SurgeryComponent comp;
        comp.contact_coefficient = plus_one;
        comp.tb = -1;
        comp.smooth_coefficient = make_slope(0, 1);
        comp.chain = 2;
        comp.position = j + 1;
        comp.is_plus_one = true;
        diag.components.push_back(comp);
    }

    std::size_t n = diag.components.size();
    diag.linking_matrix.assign(n, std::vector<Int>(n, -1));
    for (std::size_t a = 0; a < n; ++a) {
        const auto& ca = diag.components[a];
        diag.linking_matrix[a][a] = ca.smooth_coefficient.num;
        for (std::size_t b = 0; b < n; ++b) {
            const auto& cb = diag.components[b];
            if (a == b || ca.is_plus_one || cb.is_plus_one || ca.chain != cb.chain) continue;
            // A push-off links its predecessor tb(earlier) times.
            diag.linking_matrix[a][b] = ca.position < cb.position ? ca.tb : cb.tb;
        }
    }
    return diag;
}

SignatureEuler signature_euler(const SurgeryDiagram& diag) {
    if (abs(determinant(diag.linking_matrix)) != 1) throw std::logic_error("linking matrix is not unimodular");
    return {signature(diag.linking_matrix), static_cast<int>(diag.components.size()) + 1};
}

SurgeryFrame make_frame(const SurgeryDiagram& diag) {
    SurgeryFrame f;
    f.linking_matrix = diag.linking_matrix;
    f.se = signature_euler(diag);
    f.inverse = inverse(diag.linking_matrix);
    f.lk_image = multiply(f.inverse, std::vector<Int>(diag.components.size(), -1));
    f.plus_one_count = diag.plus_one_count;
    return f;
}

SurgeryFrame make_frame(const KnotModel& model) {
    return make_frame(compile_diagram(model, enumerate_decorations(model).front()));
}

Int d3(const SurgeryFrame& frame, const std::vector<Int>& rot) {
    if (rot.size() != frame.inverse.size()) throw std::invalid_argument("rotation vector does not match the frame");
    mpq_class c2 = dot(rot, multiply(frame.inverse, rot));
    mpq_class val = (c2 - 3 * frame.se.sigma - 2 * (frame.se.chi - 1)) / 4 + frame.plus_one_count;
    if (val.get_den() != 1) throw std::logic_error("d3 is not an integer: " + val.get_str());
    return val.get_num().get_si();
}

Int rot_surgered(const SurgeryFrame& frame, const std::vector<Int>& rot, Int rot0) {
    if (rot.size() != frame.lk_image.size()) throw std::invalid_argument("rotation vector does not match the frame");
    mpq_class val = mpq_class(static_cast<long>(rot0)) - dot(rot, frame.lk_image);
    if (val.get_den() != 1) throw std::logic_error("rotation number is not an integer: " + val.get_str());
    return val.get_num().get_si();
}

Int d3(const SurgeryDiagram& diag) { return d3(make_frame(diag), diag.rotation_vector()); }

Int rot_surgered(const SurgeryDiagram& diag, Int rot0) {
    return rot_surgered(make_frame(diag), diag.rotation_vector(), rot0);
}

}  // namespace torusknot
