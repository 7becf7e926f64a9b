#include "torusknot/json_io.hpp"

#include <stdexcept>

namespace torusknot {

namespace {

Json bound_to_json(const std::optional<Int>& v, const char* marker) {
    if (v) return *v;
    return marker;
}

std::optional<Int> bound_from_json(const Json& j, const char* marker) {
    if (j.is_string()) {
        if (j.get<std::string>() != marker) throw std::invalid_argument("unexpected tb marker " + j.dump());
        return std::nullopt;
    }
    return j.get<Int>();
}

Json knot_json(const Knot& k) { return Json{{"p", k.p}, {"q", k.q}}; }

template <typename F>
auto guarded(const char* what, F&& f) {
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed ") + what + ": " + e.what());
    }
}

}  // namespace

Json to_json(const KnotFamilyRecord& f) {
    Json offsets = Json::array();
    for (const auto& [k, d] : f.merge_offsets) offsets.push_back(Json::array({k, d}));
    auto rot_top = f.rot_at_tbmax();
    return Json{{"kind", to_string(f.kind)},
                {"label", f.label},
                {"group", f.group},
                {"tb_max", bound_to_json(f.tb_max, "+inf")},
                {"tb_min", bound_to_json(f.tb_min, "-inf")},
                {"rot_at_tbmax", rot_top ? Json(*rot_top) : Json(nullptr)},
                {"rot_slope", f.rot_slope},
                {"rot_intercept", f.rot_intercept},
                {"torsion2", f.torsion2},
                {"torsion_unbounded", f.torsion_unbounded},
                {"stab_plus", f.stab_plus},
                {"stab_minus", f.stab_minus},
                {"merge_offsets", offsets},
                {"depth", f.depth},
                {"sigma", f.sigma},
                {"floor", f.floor}};
}

KnotFamilyRecord family_from_json(const Json& j) {
    return guarded("family", [&] {
        KnotFamilyRecord f;
        f.kind = family_kind_from_string(j.at("kind").get<std::string>());
        f.label = j.at("label").get<std::string>();
        f.group = j.at("group").get<int>();
        f.tb_max = bound_from_json(j.at("tb_max"), "+inf");
        f.tb_min = bound_from_json(j.at("tb_min"), "-inf");
        f.rot_slope = j.at("rot_slope").get<int>();
        f.rot_intercept = j.at("rot_intercept").get<Int>();
        f.torsion2 = j.at("torsion2").get<int>();
        f.torsion_unbounded = j.at("torsion_unbounded").get<bool>();
        f.stab_plus = j.at("stab_plus").get<std::string>();
        f.stab_minus = j.at("stab_minus").get<std::string>();
        for (const auto& o : j.at("merge_offsets")) f.merge_offsets.push_back({o.at(0).get<int>(), o.at(1).get<Int>()});
        f.depth = j.at("depth").get<int>();
        f.sigma = j.at("sigma").get<int>();
        f.floor = j.at("floor").get<Int>();
        if (f.rot_at_tbmax() != (j.at("rot_at_tbmax").is_null() ? std::nullopt : std::optional<Int>(j.at("rot_at_tbmax").get<Int>()))) {
            throw std::invalid_argument("rot_at_tbmax disagrees with the rot law of " + f.label);
        }
        return f;
    });
}

Json to_json(const StructureRecord& s) {
    Json families = Json::array();
    for (const auto& f : s.families) families.push_back(to_json(f));
    return Json{{"d3", s.d3},
                {"exceptional", s.exceptional},
                {"role", to_string(s.role)},
                {"orbits", s.orbits},
                {"families", families},
                {"notes", s.notes}};
}

StructureRecord structure_from_json(const Json& j) {
    return guarded("structure", [&] {
        StructureRecord s;
        s.d3 = j.at("d3").get<Int>();
        s.exceptional = j.at("exceptional").get<bool>();
        s.role = structure_role_from_string(j.at("role").get<std::string>());
        s.orbits = j.at("orbits").get<std::vector<std::string>>();
        for (const auto& f : j.at("families")) s.families.push_back(family_from_json(f));
        s.notes = j.at("notes").get<std::vector<std::string>>();
        return s;
    });
}

Json to_json(const TransverseRecord& t) {
    Json classes = Json::array();
    for (const auto& c : t.classes) {
        classes.push_back(Json{{"sl", c.sl}, {"torsion2", c.torsion2}, {"next", c.next}, {"origin", c.origin}});
    }
    return Json{{"d3", t.d3}, {"classes", classes}};
}

TransverseRecord transverse_from_json(const Json& j) {
    return guarded("transverse record", [&] {
        TransverseRecord t;
        t.d3 = j.at("d3").get<Int>();
        for (const auto& c : j.at("classes")) {
            t.classes.push_back({c.at("sl").get<Int>(), c.at("torsion2").get<int>(), c.at("next").get<std::string>(),
                                 c.at("origin").get<std::string>()});
        }
        return t;
    });
}

Json to_json(const Atlas& atlas) {
    Json structures = Json::array(), transverse = Json::array();
    for (const auto& s : atlas.structures) structures.push_back(to_json(s));
    for (const auto& t : atlas.transverse) transverse.push_back(to_json(t));
    return Json{{"schema", kAtlasSchema},
                {"knot", knot_json(atlas.knot)},
                {"counts", {{"m", atlas.counts.m}, {"n", atlas.counts.n}, {"totally2", atlas.counts.totally2}}},
                {"max_torsion2", atlas.max_torsion2},
                {"structures", structures},
                {"transverse", transverse}};
}

Atlas atlas_from_json(const Json& j) {
    return guarded("atlas", [&] {
        if (j.at("schema").get<std::string>() != kAtlasSchema) throw std::invalid_argument("not an atlas-v1 document");
        Atlas a;
        a.knot = validate_knot(j.at("knot").at("p").get<Int>(), j.at("knot").at("q").get<Int>());
        const auto& c = j.at("counts");
        a.counts = {c.at("m").get<Int>(), c.at("n").get<Int>(), c.at("totally2").get<Int>()};
        a.max_torsion2 = j.at("max_torsion2").get<int>();
        for (const auto& s : j.at("structures")) a.structures.push_back(structure_from_json(s));
        for (const auto& t : j.at("transverse")) a.transverse.push_back(transverse_from_json(t));
        return a;
    });
}

Json to_json(const MountainRange& range) {
    Json points = Json::array();
    for (const auto& p : range.points) {
        points.push_back(Json{{"rot", p.rot},
                              {"tb", p.tb},
                              {"multiplicity", p.multiplicity},
                              {"towers", p.towers},
                              {"extra", p.extra},
                              {"refs", p.refs}});
    }
    const Window& w = range.window;
    return Json{{"schema", kMountainSchema},
                {"knot", knot_json(range.knot)},
                {"d3", range.d3},
                {"window", {{"tb_min", w.tb_min}, {"tb_max", w.tb_max}, {"rot_min", w.rot_min}, {"rot_max", w.rot_max}}},
                {"points", points},
                {"notes", range.notes}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace torusknot
