#include "fano/serialize.hpp"

#include <sstream>

namespace fano {

namespace {

std::string to_string(const Int& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

}  // namespace

json rat_json(const Rat& q) {
    if (den(q) == 1) return int_json(num(q));
    return to_string(num(q)) + "/" + to_string(den(q));
}

json int_json(const Int& x) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (x >= lo && x <= hi) return static_cast<std::int64_t>(x);
    return to_string(x);
}

json qvec_json(const QVec& v) {
    json a = json::array();
    for (const Rat& q : v) a.push_back(rat_json(q));
    return a;
}

json zvec_json(const ZVec& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(int_json(x));
    return a;
}

std::string side_name(Side s) { return s == Side::Z ? "Z" : "X"; }

json class_json(const LatticeClass& x) {
    json j;
    j["space"] = {{"n", x.space()->n()}, {"side", side_name(x.space()->side())}};
    j["basis"] = x.basis();
    j["coords"] = qvec_json(x.coords());
    return j;
}

json weyl_json(const WeylElement& w) {
    json j;
    json perm = json::array();
    for (int p : w.perm) perm.push_back(p + 1);  // 1-based on the wire
    json flips = json::array();
    for (int i = 0; i < w.N; ++i)
        if (w.signs[std::size_t(i)] < 0) flips.push_back(i + 1);
    j["perm"] = std::move(perm);
    j["flips"] = std::move(flips);
    return j;
}

json cone_json(const RationalCone& c) {
    json j;
    j["dim"] = c.dim;
    json rays = json::array(), facets = json::array();
    for (const ZVec& r : c.rays) rays.push_back(zvec_json(r));
    for (const ZVec& f : c.facets) facets.push_back(zvec_json(f));
    j["rays"] = std::move(rays);
    j["facets"] = std::move(facets);
    return j;
}

json polytope_json(const AffinePolytope& p) {
    json j;
    j["dim"] = p.N;
    json verts = json::array(), facets = json::array();
    std::vector<QVec> sorted_vertices = p.vertices;
    std::sort(sorted_vertices.begin(), sorted_vertices.end());
    for (const QVec& v : sorted_vertices) verts.push_back(qvec_json(v));
    for (const ZVec& f : p.facets) facets.push_back(zvec_json(f));
    j["vertices"] = std::move(verts);
    j["facets"] = std::move(facets);
    return j;
}

json label_json(const PlaneLabel& L) {
    json a = json::array();
    for (int i : L.rep) a.push_back(i);
    return a;
}

namespace {

json special_variety_json(const SpecialVariety& v) {
    json a = json::array();
    for (int i : v.I) a.push_back(i);
    return json{{"I", std::move(a)}, {"s", v.s}, {"dim", v.dim()}};
}

}  // namespace

json wall_json(const WallDescriptor& w, const WallKind& kind) {
    json j;
    json I = json::array();
    for (int i : w.I) I.push_back(i);
    j["I"] = std::move(I);
    j["k"] = w.k;
    if (const auto* d = std::get_if<DivisorialWall>(&kind)) {
        j["kind"] = "divisorial";
        json e = json::array();
        for (int i : d->exceptional_I) e.push_back(i);
        j["exceptional_I"] = std::move(e);
        j["exceptional_class"] = class_json(d->exceptional_class);
    } else if (const auto* f = std::get_if<FlipWall>(&kind)) {
        j["kind"] = "flip";
        j["from_dim"] = f->from_dim;
        j["to_dim"] = f->to_dim;
        j["locus"] = special_variety_json(f->locus);
        j["locus_on_nef_side"] = f->locus_on_nef_side;
    } else if (const auto* b = std::get_if<FiberWall>(&kind)) {
        j["kind"] = "fibration";
        j["i"] = b->i;
        j["sign"] = b->sign;
        j["fiber"] = b->fiber;
    }
    return j;
}

json chamber_json(const ChamberDescriptor& d, int n) {
    json j;
    j["effective"] = d.effective;
    if (!d.sample.empty()) j["slice_point"] = qvec_json(d.sample);
    if (!d.effective) return j;
    j["in_mov"] = d.in_mov;
    j["in_nef"] = d.in_nef;
    j["in_fano"] = d.in_fano;
    const auto& walls = arrangement(n);
    json signs = json::array(), on_walls = json::array();
    for (std::size_t i = 0; i < walls.size(); ++i) {
        signs.push_back(d.signs[i]);
        if (d.signs[i] == 0) on_walls.push_back(wall_json(walls[i], classify_wall(walls[i], n)));
    }
    j["signs"] = std::move(signs);
    j["on_walls"] = std::move(on_walls);
    return j;
}

json factorization_json(const FactorizationReport& r) {
    json j;
    json steps = json::array();
    for (std::size_t i = 0; i < r.steps.size(); ++i) {
        json flipped = json::array();
        for (const SpecialVariety& v : r.steps[i]) flipped.push_back(special_variety_json(v));
        steps.push_back(json{{"step", i + 1}, {"flipped", std::move(flipped)}, {"count", r.steps[i].size()}});
    }
    j["steps"] = std::move(steps);
    j["terminal_counts"] = {{"dim_m", int_json(r.terminal_m)}, {"dim_m_minus_1", int_json(r.terminal_m_minus_1)}};
    return j;
}

json ray_inventory_json(const RationalCone& c, int n) {
    json a = json::array();
    for (const ZVec& r : c.rays) {
        json e;
        e["ray"] = zvec_json(r);
        std::string name = name_ray(r, n);
        if (!name.empty()) e["name"] = name;
        a.push_back(std::move(e));
    }
    return a;
}

json envelope(const std::string& object, int n, json payload) {
    json j;
    j["schema"] = 1;
    j["object"] = object;
    j["n"] = n;
    j["data"] = std::move(payload);
    return j;
}

}  // namespace fano
