// hilb2: positivity on the Hilbert square of a polarized K3 surface and
// surjectivity certificates for higher Gaussian maps.
//
// Subcommands: pell, nef-cone, gauss (surface|curve), positivity, kva,
// hminus, table. Exit codes: 0 query answered (including Unknown
// verdicts), 2 invalid input, 3 search cap exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hilb2/gauss.hpp"
#include "hilb2/lattice_io.hpp"
#include "hilb2/sweeps.hpp"

using json = nlohmann::ordered_json;
using namespace hilb2;

namespace {

constexpr int kFormatVersion = 1;

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hash_hex(const std::string& s) {
    std::ostringstream os;
    os << std::hex << fnv1a(s);
    return os.str();
}

json machine_record(const std::string& command, const std::string& input_echo) {
    json j;
    j["format_version"] = kFormatVersion;
    j["command"] = command;
    j["input_hash"] = hash_hex(input_echo);
    return j;
}

json json_of_pell(const PellSolution& s) {
    return json{{"a", s.a.get_str()}, {"b", s.b.get_str()}, {"n", s.n.get_str()},
                {"c", s.c.get_str()}};
}

std::string str_of_pell(const PellSolution& s) {
    return "(" + s.a.get_str() + ", " + s.b.get_str() + ")";
}

json json_of_witness(const Witness& w) {
    json j;
    if (const auto* o = std::get_if<ObstructionWitness>(&w)) {
        j["type"] = to_string(o->kind);
        j["kappa_surf"] = json::array();
        for (const auto& c : o->kappa.surf.coords) j["kappa_surf"].push_back(c.get_str());
        j["kappa_b"] = o->kappa.a.get_str();
        j["pairing"] = o->pairing.get_str();
        j["d_part"] = json::array();
        for (const auto& c : o->d_part.coords) j["d_part"].push_back(c.get_str());
    } else if (const auto* kw = std::get_if<KnutsenWitness>(&w)) {
        j["type"] = "KnutsenWindow";
        j["d"] = json::array();
        for (const auto& c : kw->d.coords) j["d"].push_back(c.get_str());
        j["square"] = kw->square.get_str();
        j["degree"] = kw->deg.get_str();
        j["k"] = kw->k.get_str();
    } else if (const auto* ds = std::get_if<DegreeShortfall>(&w)) {
        j["type"] = "DegreeShortfall";
        j["lhs"] = ds->lhs.get_str();
        j["rhs"] = ds->rhs.get_str();
        j["what"] = ds->what;
    }
    return j;
}

std::string str_of_witness(const Witness& w) {
    if (const auto* o = std::get_if<ObstructionWitness>(&w)) {
        return std::string(to_string(o->kind)) + " witness kappa = " + o->kappa.str() +
               ", pairing " + o->pairing.get_str();
    }
    if (const auto* kw = std::get_if<KnutsenWitness>(&w)) {
        return "window witness D = " + kw->d.str() + " with D^2 = " + kw->square.get_str() +
               ", L.D = " + kw->deg.get_str() + " (k = " + kw->k.get_str() + ")";
    }
    const auto& ds = std::get<DegreeShortfall>(w);
    return ds.what + " (" + ds.lhs.get_str() + " vs " + ds.rhs.get_str() + ")";
}

json json_of_verdict(const PositivityVerdict& v) {
    json j;
    j["verdict"] = to_string(v.kind);
    if (v.witness) j["witness"] = json_of_witness(*v.witness);
    if (!v.pending.empty()) {
        j["pending"] = json::array();
        for (const auto& d : v.pending) {
            json c = json::array();
            for (const auto& x : d.coords) c.push_back(x.get_str());
            j["pending"].push_back(c);
        }
    }
    return j;
}

std::string str_of_verdict(const PositivityVerdict& v) {
    switch (v.kind) {
        case PositivityVerdict::Kind::Yes: return "Yes";
        case PositivityVerdict::Kind::No: return "No, " + str_of_witness(*v.witness);
        case PositivityVerdict::Kind::Indeterminate: {
            std::string s = "Indeterminate, pending effectivity of:";
            for (const auto& d : v.pending) s += " " + d.str();
            return s;
        }
    }
    return "?";
}

json json_of_gauss(const GaussVerdict& g) {
    json j;
    j["surjective"] = g.surjective ? "Yes" : "Unknown";
    if (g.vanishing) j["vanishing_certificate"] = to_string(*g.vanishing);
    if (g.positivity) j["positivity"] = json_of_verdict(*g.positivity);
    if (g.bounds) {
        j["bound_threshold"] = g.bounds->threshold.get_str();
        j["bound_actual"] = g.bounds->actual.get_str();
        j["bound_holds"] = g.bounds->holds();
    }
    if (!g.reason.empty()) j["reason"] = g.reason;
    return j;
}

std::string str_of_gauss(const GaussVerdict& g) {
    if (g.surjective) {
        std::string cert;
        if (g.vanishing)
            cert = to_string(*g.vanishing);
        else if (g.bounds)
            cert = "bound " + g.bounds->threshold.get_str() + " <= " + g.bounds->actual.get_str();
        else
            cert = "big-and-nef route";
        return "surjective (" + cert + ")";
    }
    return "unknown (" + g.reason + ")";
}

void emit(bool as_json, const json& record, const std::string& human) {
    if (as_json)
        std::cout << record.dump() << "\n";
    else
        std::cout << human << "\n";
}

struct Range {
    long lo, hi;
};

Range parse_range(const std::string& s) {
    auto pos = s.find("..");
    try {
        if (pos == std::string::npos) {
            long v = std::stol(s);
            return {v, v};
        }
        long lo = std::stol(s.substr(0, pos));
        long hi = std::stol(s.substr(pos + 2));
        if (hi < lo) throw std::invalid_argument("range: empty range " + s);
        return {lo, hi};
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("range: value out of range in " + s);
    }
}

int cmd_table(const std::string& d_range, const std::string& k_range, const std::string& format,
              const std::string& out_path, bool serial) {
    Range dr = parse_range(d_range);
    Range kr = parse_range(k_range);
    if (dr.lo < 1) throw std::invalid_argument("table: d range must start at 1 or above");
    if (kr.lo < 0) throw std::invalid_argument("table: k range must start at 0 or above");
    long n_lo = kr.lo + 2, n_hi = kr.hi + 2;
    auto rows = serial ? certificate_sweep_serial(dr.lo, dr.hi, n_lo, n_hi)
                       : certificate_sweep_parallel(dr.lo, dr.hi, n_lo, n_hi);

    std::ostringstream os;
    if (format == "csv") {
        os << "d,nef_slope,dual_slope,case";
        for (long k = kr.lo; k <= kr.hi; ++k) os << ",cert_k" << k;
        os << "\n";
        for (const auto& row : rows) {
            os << row.d << "," << row.cone.nef_slope.get_str() << ","
               << row.cone.dual_slope.get_str() << "," << to_string(row.cone.case_tag);
            for (const auto& c : row.certs) os << "," << to_string(c);
            os << "\n";
        }
    } else if (format == "json") {
        json doc;
        doc["format_version"] = kFormatVersion;
        doc["k_lo"] = kr.lo;
        doc["rows"] = json::array();
        for (const auto& row : rows) {
            json r;
            r["d"] = row.d;
            r["nef_slope"] = row.cone.nef_slope.get_str();
            r["dual_slope"] = row.cone.dual_slope.get_str();
            r["case"] = to_string(row.cone.case_tag);
            if (row.cone.witness) r["witness"] = json_of_pell(*row.cone.witness);
            r["certs"] = json::array();
            for (const auto& c : row.certs) r["certs"].push_back(to_string(c));
            doc["rows"].push_back(std::move(r));
        }
        os << doc.dump(2) << "\n";
    } else {
        throw std::invalid_argument("table: unknown format '" + format + "'");
    }

    if (out_path.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::invalid_argument("table: cannot open output file " + out_path);
        f << os.str();
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"positivity and Gaussian-map certificates on the Hilbert square of a K3"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    // pell
    auto* pell = app.add_subcommand("pell", "minimal positive solution of x^2 - n y^2 = c");
    std::string pell_n, pell_c = "1";
    pell->add_option("--n", pell_n, "form coefficient (positive non-square)")->required();
    pell->add_option("--c", pell_c, "right-hand side (positive)");

    // nef-cone
    auto* nefc = app.add_subcommand("nef-cone", "nef cone of the Hilbert square, Picard rank 1");
    long nef_d = 0;
    nefc->add_option("--d", nef_d, "half the degree of the polarization")->required();

    // gauss surface|curve
    auto* gauss = app.add_subcommand("gauss", "surjectivity of higher Gaussian maps");
    gauss->require_subcommand(1);
    auto* gsurf = gauss->add_subcommand("surface", "Gaussian maps of the polarization");
    auto* gcurve = gauss->add_subcommand("curve", "Gaussian maps of a hyperplane section");
    long gs_d = 0, gs_k = -1, gc_d = 0, gc_k = -1;
    std::string gs_lat, gc_lat;
    gsurf->add_option("--d", gs_d, "half degree (cyclic Picard group)");
    gsurf->add_option("--lat", gs_lat, "lattice file (uses its ample class)");
    gsurf->add_option("--k", gs_k, "Gaussian map index")->required();
    gcurve->add_option("--d", gc_d, "half degree (cyclic Picard group)");
    gcurve->add_option("--lat", gc_lat, "lattice file (uses its ample class)");
    gcurve->add_option("--k", gc_k, "Gaussian map index (k > 1)")->required();

    // positivity
    auto* pos = app.add_subcommand("positivity", "movable / big-nef / ample for L - a*delta");
    std::string pos_lat, pos_mode;
    long pos_a = 0;
    pos->add_option("--lat", pos_lat, "lattice file")->required();
    pos->add_option("--a", pos_a, "coefficient of delta")->required();
    pos->add_option("--mode", pos_mode, "movable | bignef | ample")->required();

    // kva
    auto* kva = app.add_subcommand("kva", "k-very ampleness of the ample class");
    std::string kva_lat;
    long kva_k = -1;
    kva->add_option("--lat", kva_lat, "lattice file")->required();
    kva->add_option("--k", kva_k, "k")->required();

    // hminus
    auto* hm = app.add_subcommand("hminus", "ampleness of L - delta or L - 2*delta");
    std::string hm_lat;
    int hm_which = 0;
    hm->add_option("--lat", hm_lat, "lattice file")->required();
    hm->add_option("--which", hm_which, "1 for L - delta, 2 for L - 2*delta")->required();

    // table
    auto* tab = app.add_subcommand("table", "certificate table over d and k ranges");
    std::string tab_d, tab_k, tab_fmt = "csv", tab_out;
    bool tab_serial = false;
    tab->add_option("--d", tab_d, "d range, e.g. 1..50")->required();
    tab->add_option("--k", tab_k, "k range, e.g. 0..5")->required();
    tab->add_option("--format", tab_fmt, "csv | json");
    tab->add_option("--out", tab_out, "output file (default stdout)");
    tab->add_flag("--serial", tab_serial, "use the serial reference kernel");

    CLI11_PARSE(app, argc, argv);

    try {
        if (pell->parsed()) {
            Int n(pell_n), c(pell_c);
            std::string cmd = "pell --n " + n.get_str() + " --c " + c.get_str();
            std::optional<PellSolution> sol;
            if (c == 1)
                sol = pell_unit_min(n);
            else
                sol = pell_general_min(n, c);
            json rec = machine_record(cmd, cmd);
            rec["solution"] = sol ? json_of_pell(*sol) : json(nullptr);
            emit(as_json, rec, sol ? str_of_pell(*sol) : "none");
            return 0;
        }
        if (nefc->parsed()) {
            std::string cmd = "nef-cone --d " + std::to_string(nef_d);
            ConeDescription cone = nef_cone(Int(nef_d));
            json rec = machine_record(cmd, cmd);
            rec["nef_slope"] = cone.nef_slope.get_str();
            rec["dual_slope"] = cone.dual_slope.get_str();
            rec["case"] = to_string(cone.case_tag);
            if (cone.witness) rec["witness"] = json_of_pell(*cone.witness);
            std::string human = "nef slope " + cone.nef_slope.get_str() + ", dual slope " +
                                cone.dual_slope.get_str() + ", case " +
                                to_string(cone.case_tag);
            if (cone.witness) human += ", witness " + str_of_pell(*cone.witness);
            emit(as_json, rec, human);
            return 0;
        }
        if (gsurf->parsed() || gcurve->parsed()) {
            bool surface = gsurf->parsed();
            long k = surface ? gs_k : gc_k;
            long dflag = surface ? gs_d : gc_d;
            std::string latfile = surface ? gs_lat : gc_lat;
            if ((dflag > 0) == !latfile.empty())
                throw std::invalid_argument("gauss: give exactly one of --d or --lat");
            GaussVerdict g;
            std::string cmd = std::string("gauss ") + (surface ? "surface" : "curve") + " --k " +
                              std::to_string(k);
            std::string echo = cmd;
            if (dflag > 0) {
                cmd += " --d " + std::to_string(dflag);
                echo = cmd;
                if (surface) {
                    Rank1Gauss r = gauss_surjective_rank1(Int(dflag), Int(k));
                    g.surjective = r.surjective;
                    g.vanishing = r.cert;
                    if (!r.surjective) g.reason = "no vanishing certificate at n = k + 2";
                } else {
                    g = curve_gauss_rank1(Int(dflag), Int(k));
                }
            } else {
                PicLattice lat = load_lattice_file(latfile);
                cmd += " --lat " + latfile;
                echo = cmd + "\n" + serialize_lattice(lat);
                g = surface ? gauss_surjective_k3(lat, lat.ample(), Int(k))
                            : curve_gauss_general(lat, lat.ample(), Int(k));
            }
            json rec = machine_record(cmd, echo);
            rec["result"] = json_of_gauss(g);
            emit(as_json, rec, str_of_gauss(g));
            return 0;
        }
        if (pos->parsed()) {
            PicLattice lat = load_lattice_file(pos_lat);
            std::string cmd = "positivity --lat " + pos_lat + " --a " + std::to_string(pos_a) +
                              " --mode " + pos_mode;
            PositivityVerdict v;
            if (pos_mode == "movable")
                v = is_movable(lat, lat.ample(), Int(pos_a));
            else if (pos_mode == "bignef")
                v = is_positive(lat, lat.ample(), Int(pos_a), PositivityMode::BigNef);
            else if (pos_mode == "ample")
                v = is_positive(lat, lat.ample(), Int(pos_a), PositivityMode::Ample);
            else
                throw std::invalid_argument("positivity: unknown mode '" + pos_mode + "'");
            json rec = machine_record(cmd, cmd + "\n" + serialize_lattice(lat));
            rec["result"] = json_of_verdict(v);
            emit(as_json, rec, pos_mode + ": " + str_of_verdict(v));
            return 0;
        }
        if (kva->parsed()) {
            PicLattice lat = load_lattice_file(kva_lat);
            std::string cmd = "kva --lat " + kva_lat + " --k " + std::to_string(kva_k);
            PositivityVerdict v = knutsen_k_very_ample(lat, lat.ample(), Int(kva_k));
            json rec = machine_record(cmd, cmd + "\n" + serialize_lattice(lat));
            rec["result"] = json_of_verdict(v);
            emit(as_json, rec, str_of_verdict(v));
            return 0;
        }
        if (hm->parsed()) {
            PicLattice lat = load_lattice_file(hm_lat);
            if (hm_which != 1 && hm_which != 2)
                throw std::invalid_argument("hminus: --which must be 1 or 2");
            std::string cmd = "hminus --lat " + hm_lat + " --which " + std::to_string(hm_which);
            PositivityVerdict v = hm_which == 1 ? h_minus_delta_ample(lat, lat.ample())
                                                : h_minus_2delta_ample(lat, lat.ample());
            json rec = machine_record(cmd, cmd + "\n" + serialize_lattice(lat));
            rec["result"] = json_of_verdict(v);
            emit(as_json, rec, "ample: " + str_of_verdict(v));
            return 0;
        }
        if (tab->parsed()) {
            return cmd_table(tab_d, tab_k, tab_fmt, tab_out, tab_serial);
        }
    } catch (const CapExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const DegenerateSquareError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BoundNotMetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
