#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "fano/serialize.hpp"
#include "fano/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

constexpr int kDefaultCap = 8;

struct Options {
    int n = 2;
    std::string suite = "all";
    std::string format = "json";
    std::string out;
    bool unsafe_cap = false;
    std::string object;
    std::string coords;
    std::string basis = "HE";
};

int fail_usage(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return kExitUsage;
}

bool check_n(const Options& o, std::string& err) {
    if (o.n < 2 || o.n % 2 != 0) {
        err = "--n must be an even integer >= 2";
        return false;
    }
    if (!o.unsafe_cap && o.n > kDefaultCap) {
        err = "--n exceeds the default cap " + std::to_string(kDefaultCap) +
              " (pass --unsafe-cap to override)";
        return false;
    }
    return true;
}

int write_output(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return kExitOk;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open " << o.out << "\n";
        return kExitUsage;
    }
    f << text;
    return kExitOk;
}

std::string reports_text(const std::vector<fano::Report>& reports) {
    std::ostringstream os;
    for (const fano::Report& r : reports) {
        os << "suite " << r.suite << " (n=" << r.n << "): " << (r.ok() ? "PASS" : "FAIL") << "\n";
        for (const fano::CheckResult& c : r.checks) {
            os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.id << ": " << c.detail << "\n";
            if (!c.pass) os << "      expected: " << c.expected << "\n      computed: " << c.computed << "\n";
        }
    }
    return os.str();
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string reports_csv(const std::vector<fano::Report>& reports) {
    std::ostringstream os;
    os << "suite,n,id,detail,expected,computed,pass\n";
    for (const fano::Report& r : reports)
        for (const fano::CheckResult& c : r.checks)
            os << r.suite << "," << r.n << "," << csv_escape(c.id) << "," << csv_escape(c.detail) << ","
               << csv_escape(c.expected) << "," << csv_escape(c.computed) << ","
               << (c.pass ? "true" : "false") << "\n";
    return os.str();
}

int cmd_verify(const Options& o) {
    std::string err;
    if (!check_n(o, err)) return fail_usage(err);
    if (o.suite != "all" && !fano::known_suite(o.suite)) return fail_usage("unknown suite '" + o.suite + "'");
    if (o.format != "json" && o.format != "csv" && o.format != "text")
        return fail_usage("unknown format '" + o.format + "'");

    std::vector<fano::Report> reports;
    try {
        if (o.suite == "all")
            reports = fano::verify_all(o.n);
        else
            reports.push_back(fano::verify_suite(o.suite, o.n));
    } catch (const std::exception& ex) {
        return fail_usage(ex.what());
    }

    std::string text;
    if (o.format == "json") {
        fano::json j;
        j["schema"] = 1;
        j["n"] = o.n;
        fano::json arr = fano::json::array();
        bool all = true;
        for (const fano::Report& r : reports) {
            all = all && r.ok();
            arr.push_back(fano::report_json(r));
        }
        j["pass"] = all;
        j["reports"] = std::move(arr);
        text = j.dump(2) + "\n";
    } else if (o.format == "csv") {
        text = reports_csv(reports);
    } else {
        text = reports_text(reports);
    }
    int rc = write_output(o, text);
    if (rc != kExitOk) return rc;
    for (const fano::Report& r : reports)
        if (!r.ok()) return kExitFail;
    return kExitOk;
}

bool parse_rat(const std::string& tok, fano::Rat& out) {
    try {
        std::string t = tok;
        t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }), t.end());
        if (t.empty()) return false;
        out = fano::Rat(t);
        return true;
    } catch (...) {
        return false;
    }
}

int cmd_chamber(const Options& o) {
    std::string err;
    if (!check_n(o, err)) return fail_usage(err);
    fano::SpacePtr x = fano::make_space(o.n, fano::Side::X);
    if (!x->has_basis(o.basis)) return fail_usage("unknown X-side basis '" + o.basis + "'");

    fano::QVec coords;
    std::stringstream ss(o.coords);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        fano::Rat q;
        if (!parse_rat(tok, q)) return fail_usage("cannot parse coordinate '" + tok + "'");
        coords.push_back(q);
    }
    if (coords.size() != x->rank())
        return fail_usage("expected " + std::to_string(x->rank()) + " comma-separated coordinates");

    fano::LatticeClass cls(x, o.basis, coords);
    fano::json j;
    try {
        fano::ChamberDescriptor d = fano::chamber_of(cls);
        j = fano::envelope("chamber", o.n, fano::chamber_json(d, o.n));
        j["data"]["class"] = fano::class_json(cls);
        if (d.effective) {
            // nearest arrangement walls: smallest nonzero |H_I - k|
            const auto& walls = fano::arrangement(o.n);
            fano::Rat best = 0;
            bool have = false;
            std::vector<std::size_t> close;
            for (std::size_t i = 0; i < walls.size(); ++i) {
                fano::Rat dist = fano::eval_H(walls[i].I, d.sample) - walls[i].k;
                if (dist < 0) dist = -dist;
                if (dist == 0) continue;
                if (!have || dist < best) {
                    best = dist;
                    close.assign(1, i);
                    have = true;
                } else if (dist == best) {
                    close.push_back(i);
                }
            }
            fano::json near = fano::json::array();
            for (std::size_t i : close)
                near.push_back(fano::wall_json(walls[i], fano::classify_wall(walls[i], o.n)));
            j["data"]["nearest_walls"] = std::move(near);
        }
    } catch (const std::exception& ex) {
        return fail_usage(ex.what());
    }
    return write_output(o, j.dump(2) + "\n");
}

fano::json export_payload(const Options& o) {
    using fano::json;
    const std::string& obj = o.object;
    if (obj == "cones.E") return fano::cone_json(fano::cone_E(fano::make_space(o.n, fano::Side::Z)));
    if (obj == "cones.Edual")
        return fano::cone_json(fano::cone_E_dual(fano::make_space(o.n, fano::Side::Z)));
    if (obj == "cones.Edual.rays")
        return fano::ray_inventory_json(fano::cone_E_dual(fano::make_space(o.n, fano::Side::Z)), o.n);
    if (obj == "polytope.delta") return fano::polytope_json(fano::named_cones(o.n).delta);
    if (obj == "polytope.mov") return fano::polytope_json(fano::named_cones(o.n).mov);
    if (obj == "polytope.nef") return fano::polytope_json(fano::named_cones(o.n).nef);
    if (obj == "polytope.fano") return fano::polytope_json(fano::named_cones(o.n).fano);
    if (obj == "factorization") return fano::factorization_json(fano::factorization(o.n));
    if (obj == "walls") {
        json a = json::array();
        for (const fano::WallDescriptor& w : fano::arrangement(o.n))
            a.push_back(fano::wall_json(w, fano::classify_wall(w, o.n)));
        return a;
    }
    if (obj == "weyl.generators") {
        json a = json::array();
        for (const fano::WeylElement& w : fano::elements(fano::wprime_group(o.n)))
            a.push_back(fano::weyl_json(w));
        return a;
    }
    if (obj == "gcones") {
        fano::GCones g = fano::g_cones(o.n);
        json j;
        j["ne"] = fano::ray_inventory_json(g.ne, o.n);
        j["nef"] = fano::ray_inventory_json(g.nef, o.n);
        j["eff"] = fano::ray_inventory_json(g.eff, o.n);
        j["mov_curves"] = fano::ray_inventory_json(g.mov_curves, o.n);
        j["mov_div"] = fano::cone_json(g.mov_div);
        j["mov_div_dual"] = fano::ray_inventory_json(g.mov_div_dual, o.n);
        return j;
    }
    if (obj == "fano.inequalities") {
        json a = json::array();
        for (const fano::ZVec& r : fano::fano_cone_inequalities_KE(o.n)) a.push_back(fano::zvec_json(r));
        return a;
    }
    throw std::invalid_argument("unknown export object '" + obj + "'");
}

std::string export_csv(const Options& o, const fano::json& payload) {
    std::ostringstream os;
    auto vec_row = [&os](const fano::json& v) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) os << ",";
            if (v[i].is_string())
                os << csv_escape(v[i].get<std::string>());
            else
                os << v[i].dump();
        }
        os << "\n";
    };
    if (payload.contains("rays") && payload.contains("facets")) {
        os << "kind,coordinates...\n";
        for (const auto& r : payload["rays"]) {
            os << "ray,";
            vec_row(r);
        }
        for (const auto& f : payload["facets"]) {
            os << "facet,";
            vec_row(f);
        }
        return os.str();
    }
    if (o.object == "factorization") {
        os << "step,I,s,dim\n";
        for (const auto& step : payload["steps"])
            for (const auto& v : step["flipped"])
                os << step["step"].dump() << "," << csv_escape(v["I"].dump()) << "," << v["s"].dump()
                   << "," << v["dim"].dump() << "\n";
        return os.str();
    }
    if (o.object == "weyl.generators") {
        os << "perm,flips\n";
        for (const auto& w : payload)
            os << csv_escape(w["perm"].dump()) << "," << csv_escape(w["flips"].dump()) << "\n";
        return os.str();
    }
    throw std::invalid_argument("csv format is not available for object '" + o.object + "'");
}

int cmd_export(const Options& o) {
    std::string err;
    if (!check_n(o, err)) return fail_usage(err);
    if (o.format != "json" && o.format != "csv" && o.format != "text")
        return fail_usage("unknown format '" + o.format + "'");
    try {
        fano::json payload = export_payload(o);
        std::string text;
        if (o.format == "csv")
            text = export_csv(o, payload);
        else
            text = fano::envelope(o.object, o.n, std::move(payload)).dump(o.format == "text" ? 2 : -1) + "\n";
        return write_output(o, text);
    } catch (const std::exception& ex) {
        return fail_usage(ex.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact calculator for the shared birational geometry of the two-quadric "
                 "plane variety and the blown-up projective space"};
    app.require_subcommand(1);

    Options o;

    CLI::App* verify = app.add_subcommand("verify", "Run invariant suites");
    verify->add_option("--n", o.n, "Even dimension parameter n = 2m")->required();
    verify->add_option("--suite", o.suite, "lattice | cones | mcd | bridge | all");
    verify->add_option("--format", o.format, "json | csv | text");
    verify->add_option("--out", o.out, "Write the report to this path");
    verify->add_flag("--unsafe-cap", o.unsafe_cap, "Lift the default size caps");

    CLI::App* chamber = app.add_subcommand("chamber", "Locate a divisor class in the chamber decomposition");
    chamber->add_option("--n", o.n, "Even dimension parameter n = 2m")->required();
    chamber->add_option("--coords", o.coords, "Comma-separated rational coordinates")->required();
    chamber->add_option("--basis", o.basis, "X-side basis of the coordinates: HE | KE | Keps");
    chamber->add_option("--format", o.format, "json");
    chamber->add_option("--out", o.out, "Write the report to this path");
    chamber->add_flag("--unsafe-cap", o.unsafe_cap, "Lift the default size caps");

    CLI::App* exp = app.add_subcommand("export", "Export an object as JSON or CSV");
    exp->add_option("object", o.object, "cones.E | cones.Edual | cones.Edual.rays | polytope.{delta,mov,nef,fano} | "
                                        "factorization | walls | weyl.generators | gcones | fano.inequalities")
        ->required();
    exp->add_option("--n", o.n, "Even dimension parameter n = 2m")->required();
    exp->add_option("--format", o.format, "json | csv | text");
    exp->add_option("--out", o.out, "Write the export to this path");
    exp->add_flag("--unsafe-cap", o.unsafe_cap, "Lift the default size caps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    if (verify->parsed()) return cmd_verify(o);
    if (chamber->parsed()) return cmd_chamber(o);
    if (exp->parsed()) return cmd_export(o);
    return kExitUsage;
}
