#include "torusknot/decorations.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace torusknot {

std::vector<const Block*> KnotModel::all_blocks() const {
    std::vector<const Block*> out;
    for (const auto& b : blocks.blocks) out.push_back(&b);
    if (blocks.suffix) out.push_back(&*blocks.suffix);
    return out;
}

KnotModel make_model(Int p, Int q) {
    KnotModel m;
    m.pair = build_pair(p, q);
    m.blocks = decompose_blocks(m.pair);
    m.far = block_far_slopes(m.pair, m.blocks);
    return m;
}

namespace {

std::vector<int>& side_signs(DecoratedPathPair& d, Side s) { return s == Side::A ? d.signs1 : d.signs2; }
const std::vector<int>& side_signs(const DecoratedPathPair& d, Side s) { return s == Side::A ? d.signs1 : d.signs2; }

int count_plus(const DecoratedPathPair& d, const Block& b) {
    int n = 0;
    for (auto e : b.edges) n += side_signs(d, b.side)[e] > 0;
    return n;
}

// +1 or -1 when every edge of the block carries that sign, 0 when mixed.
int uniform_sign(int plus, std::size_t len) {
    if (plus == static_cast<int>(len)) return 1;
    if (plus == 0) return -1;
    return 0;
}

}  // namespace

std::vector<int> plus_counts(const KnotModel& model, const DecoratedPathPair& d) {
    std::vector<int> out;
    for (const Block* b : model.all_blocks()) out.push_back(count_plus(d, *b));
    return out;
}

DecoratedPathPair from_plus_counts(const KnotModel& model, const std::vector<int>& counts) {
    auto blocks = model.all_blocks();
    if (counts.size() != blocks.size()) throw std::invalid_argument("one + count per block required");
    DecoratedPathPair d;
    d.signs1.assign(model.pair.p1.edge_count(), -1);
    d.signs2.assign(model.pair.p2.edge_count(), -1);
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        const Block& b = *blocks[k];
        if (counts[k] < 0 || counts[k] > static_cast<int>(b.length())) throw std::invalid_argument("+ count out of range");
        for (std::size_t j = 0; j < b.edges.size(); ++j) {
            side_signs(d, b.side)[b.edges[j]] = static_cast<int>(j) < counts[k] ? 1 : -1;
        }
    }
    return d;
}

DecoratedPathPair canonicalize(const KnotModel& model, std::vector<int> signs1, std::vector<int> signs2) {
    if (signs1.size() != model.pair.p1.edge_count() || signs2.size() != model.pair.p2.edge_count()) {
        throw std::invalid_argument("decoration length does not match the path pair");
    }
    for (int s : signs1)
        if (s != 1 && s != -1) throw std::invalid_argument("signs must be +1 or -1");
    for (int s : signs2)
        if (s != 1 && s != -1) throw std::invalid_argument("signs must be +1 or -1");
    DecoratedPathPair raw{std::move(signs1), std::move(signs2)};
    return from_plus_counts(model, plus_counts(model, raw));
}

DecoratedPathPair negate(const KnotModel& model, const DecoratedPathPair& d) {
    auto s1 = d.signs1, s2 = d.signs2;
    for (auto& s : s1) s = -s;
    for (auto& s : s2) s = -s;
    // Flipping puts - first inside each block; canonicalize restores + first.
    return canonicalize(model, std::move(s1), std::move(s2));
}

std::string to_string(const DecoratedPathPair& d) {
    std::string s = "P1:";
    for (int x : d.signs1) s += x > 0 ? '+' : '-';
    s += "|P2:";
    for (int x : d.signs2) s += x > 0 ? '+' : '-';
    return s;
}

std::string to_tuple(const DecoratedPathPair& d) {
    std::string s = "(";
    bool first = true;
    auto put = [&](int x) {
        if (!first) s += ',';
        first = false;
        s += x > 0 ? '+' : '-';
    };
    for (auto it = d.signs1.rbegin(); it != d.signs1.rend(); ++it) put(*it);
    for (int x : d.signs2) put(x);
    return s + ")";
}

namespace {

// Pulls + and - out of text, treating U+2212 as minus and skipping U+00B1.
std::vector<int> sign_chars(const std::string& text) {
    std::vector<int> out;
    for (std::size_t i = 0; i < text.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c == '+') {
            out.push_back(1);
        } else if (c == '-') {
            out.push_back(-1);
        } else if (c == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x88 &&
                   static_cast<unsigned char>(text[i + 2]) == 0x92) {
            out.push_back(-1);
            i += 2;
        } else if (c == 0xC2 && i + 1 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0xB1) {
            ++i;
        } else if (c == '(' || c == ')' || c == ',' || c == ' ' || c == '.') {
            continue;
        } else {
            throw std::invalid_argument("unexpected character in decoration '" + text + "'");
        }
    }
    return out;
}

}  // namespace

DecoratedPathPair parse_decoration(const KnotModel& model, const std::string& text) {
    std::size_t n1 = model.pair.p1.edge_count(), n2 = model.pair.p2.edge_count();
    auto bar = text.find('|');
    if (text.rfind("P1:", 0) == 0 && bar != std::string::npos) {
        std::string right = text.substr(bar + 1);
        if (right.rfind("P2:", 0) != 0) throw std::invalid_argument("expected P2: after '|'");
        auto s1 = sign_chars(text.substr(3, bar - 3));
        auto s2 = sign_chars(right.substr(3));
        return canonicalize(model, std::move(s1), std::move(s2));
    }
    auto all = sign_chars(text);
    if (all.size() != n1 + n2) {
        throw std::invalid_argument("decoration needs " + std::to_string(n1 + n2) + " signs, got " +
                                    std::to_string(all.size()));
    }
    std::vector<int> s1(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(n1));
    std::reverse(s1.begin(), s1.end());
    std::vector<int> s2(all.begin() + static_cast<std::ptrdiff_t>(n1), all.end());
    return canonicalize(model, std::move(s1), std::move(s2));
}

std::vector<DecoratedPathPair> enumerate_decorations(const KnotModel& model) {
    auto blocks = model.all_blocks();
    std::vector<int> counts(blocks.size(), 0);
    std::vector<DecoratedPathPair> out;
    while (true) {
        out.push_back(from_plus_counts(model, counts));
        // Odometer with the first block slowest.
        bool advanced = false;
        for (std::size_t k = blocks.size(); k-- > 0;) {
            if (counts[k] < static_cast<int>(blocks[k]->length())) {
                ++counts[k];
                advanced = true;
                break;
            }
            counts[k] = 0;
        }
        if (!advanced) return out;
    }
}

ConsistencyClass classify_consistency(const KnotModel& model, const DecoratedPathPair& d) {
    ConsistencyClass c;
    const auto& blocks = model.blocks.blocks;
    int s0 = 0;
    for (const auto& b : blocks) {
        int u = uniform_sign(count_plus(d, b), b.length());
        if (b.index == 1) s0 = u;
        if (u == 0 || u != s0) {
            c.level = b.index;
            break;
        }
    }
    if (blocks.size() >= 2) {
        int u1 = uniform_sign(count_plus(d, blocks[0]), blocks[0].length());
        int u2 = uniform_sign(count_plus(d, blocks[1]), blocks[1].length());
        c.totally_2_inconsistent = u1 != 0 && u2 == -u1;
    }
    c.tight = c.level == 0 && !model.knot().positive();
    return c;
}

std::optional<DecoratedPathPair> shuffle_down(const KnotModel& model, const DecoratedPathPair& d) {
    auto cls = classify_consistency(model, d);
    const auto& blocks = model.blocks.blocks;
    auto counts = plus_counts(model, d);
    auto full = [&](std::size_t k, int sign) { return sign > 0 ? static_cast<int>(blocks[k].length()) : 0; };

    if (cls.level == 2 || cls.tight) return std::nullopt;
    if (cls.level == 0) {
        // Positive knot, all one sign s: every edge except the final edge of
        // P2 (the one ending at infinity) switches to -s.
        int s = uniform_sign(counts[0], blocks[0].length());
        std::size_t last_b = blocks.size();
        for (std::size_t k = 0; k < blocks.size(); ++k)
            if (blocks[k].side == Side::B) last_b = k;
        for (std::size_t k = 0; k < blocks.size(); ++k)
            counts[k] = k == last_b ? (s > 0 ? 1 : static_cast<int>(blocks[k].length()) - 1) : full(k, -s);
        return from_plus_counts(model, counts);
    }

    std::size_t i = static_cast<std::size_t>(cls.level) - 1;  // zero-based D_i
    int s = uniform_sign(counts[0], blocks[0].length());
    for (std::size_t k = 0; k + 2 <= i; ++k) counts[k] = full(k, -s);
    int len = static_cast<int>(blocks[i - 1].length());
    counts[i - 1] = s > 0 ? 1 : len - 1;
    counts[i] += s > 0 ? 1 : -1;
    return from_plus_counts(model, counts);
}

std::vector<Orbit> compatibility_orbits(const KnotModel& model) {
    std::map<DecoratedPathPair, Orbit> by_key;
    for (const auto& d : enumerate_decorations(model)) {
        auto cls = classify_consistency(model, d);
        if (cls.tight) continue;
        DecoratedPathPair cur = d;
        int guard = 0;
        while (auto next = shuffle_down(model, cur)) {
            cur = *next;
            if (++guard > 1000) throw std::logic_error("compatibility shuffle does not terminate");
        }
        auto& orbit = by_key[cur];
        orbit.key = cur;
        orbit.members.push_back(d);
        orbit.levels.push_back(cls.level);
    }
    std::vector<Orbit> out;
    for (auto& [key, orbit] : by_key) {
        std::vector<std::size_t> idx(orbit.members.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        auto rank = [&](std::size_t i) { return orbit.levels[i] == 0 ? 1 << 30 : orbit.levels[i]; };
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return rank(a) < rank(b); });
        Orbit sorted;
        sorted.key = key;
        for (auto i : idx) {
            sorted.members.push_back(orbit.members[i]);
            sorted.levels.push_back(orbit.levels[i]);
        }
        out.push_back(std::move(sorted));
    }
    return out;
}

Orbit compatibility_orbit(const KnotModel& model, const DecoratedPathPair& d) {
    DecoratedPathPair c = canonicalize(model, d.signs1, d.signs2);
    auto cls = classify_consistency(model, c);
    if (cls.tight) return Orbit{c, {c}, {0}};
    for (auto& o : compatibility_orbits(model)) {
        if (std::find(o.members.begin(), o.members.end(), c) != o.members.end()) return o;
    }
    throw std::logic_error("decoration not found in any orbit");
}

namespace {

Int abs_product_plus_one(const std::vector<Int>& d, std::size_t upto) {
    Int prod = 1;
    for (std::size_t i = 0; i < upto && i < d.size(); ++i) prod = checked_mul(prod, checked_add(d[i], 1));
    return std::llabs(prod);
}

}  // namespace

Int count_m(Int p, Int q) {
    Knot k = validate_knot(p, q);
    return checked_mul(tight_count_solid_torus_upper(k.slope()), tight_count_solid_torus_lower(k.slope()));
}

Int count_n(Int p, Int q) {
    Knot k = validate_knot(p, q);
    auto a = upper_digits(k.slope()), b = lower_digits(k.slope());
    return checked_mul(abs_product_plus_one(a, a.size()), abs_product_plus_one(b, b.size()));
}

Int count_totally_2_inconsistent(Int p, Int q) {
    Knot k = validate_knot(p, q);
    auto a = upper_digits(k.slope()), b = lower_digits(k.slope());
    Int pa = abs_product_plus_one(a, a.empty() ? 0 : a.size() - 1);
    Int pb = abs_product_plus_one(b, b.empty() ? 0 : b.size() - 1);
    return checked_mul(2, checked_mul(pa, pb));
}

Int tight_count_lens(Int p, Int q) { return count_n(p, q); }

}  // namespace torusknot
