#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "hilb2/lattice_io.hpp"
#include "hilb2/positivity.hpp"
#include "hilb2/rank1.hpp"

using json = nlohmann::json;
using namespace hilb2;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd = env_prefix + std::string(HILB2_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

std::string write_temp_lattice(const std::string& name, const std::string& body) {
    std::string path = std::string("/tmp/hilb2_test_") + name + ".lat";
    std::ofstream f(path);
    f << body;
    return path;
}

}  // namespace

TEST_CASE("lattice format round-trips bit-exactly") {
    PicLattice lat(2, {Int(6), Int(1), Int(1), Int(-2)}, {{Int(1), Int(0)}}, {"L", "C"});
    std::string text = serialize_lattice(lat);
    PicLattice back = parse_lattice_string(text);
    CHECK(back.rank() == lat.rank());
    CHECK(back.gram() == lat.gram());
    CHECK(back.ample().coords == lat.ample().coords);
    CHECK(back.labels() == lat.labels());
    CHECK(serialize_lattice(back) == text);

    PicLattice nolabel(1, {Int(8)}, {{Int(1)}});
    CHECK(serialize_lattice(parse_lattice_string(serialize_lattice(nolabel))) ==
          serialize_lattice(nolabel));
}

TEST_CASE("lattice parser accepts comments and flexible whitespace") {
    PicLattice lat = parse_lattice_string(
        "# a lattice with one node\nrank 2\ngram\n 6 1\n 1 -2\nample 1 0\n");
    CHECK(lat.rank() == 2);
    CHECK(lat.gram_at(1, 1) == -2);
}

TEST_CASE("lattice parser rejects malformed input") {
    CHECK_THROWS_AS(parse_lattice_string(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_lattice_string("rank 2\ngram\n6 1\n1\nample 1 0\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_lattice_string("rank x\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_lattice_string("gram 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_lattice_string("rank 1\ngram\n6\nample 1\nextra 1\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_lattice_string("rank 1\ngram\n6\nample 1\nlabels a b\n"),
                    std::invalid_argument);
    // valid syntax, invalid lattice
    CHECK_THROWS_AS(parse_lattice_string("rank 1\ngram\n-2\nample 1\n"), std::invalid_argument);
}

TEST_CASE("cli pell") {
    CHECK(run_cli("pell --n 2 --c 1").out == "(3, 2)\n");
    CHECK(run_cli("pell --n 8 --c 5").out == "none\n");
    CHECK(run_cli("pell --n 4 --c 1").exit_code == 2);
    CHECK(run_cli("pell --n 2 --c 1").exit_code == 0);
}

TEST_CASE("cli nef-cone") {
    auto r = run_cli("nef-cone --d 11");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("22/7") != std::string::npos);
    CHECK(r.out.find("Pell5") != std::string::npos);
    CHECK(r.out.find("(7, 1)") != std::string::npos);

    auto sq = run_cli("nef-cone --d 4");
    CHECK(sq.out.find("SquareNoPell5") != std::string::npos);

    CHECK(run_cli("nef-cone --d 0").exit_code == 2);
}

TEST_CASE("cli gauss") {
    auto surf = run_cli("gauss surface --d 2 --k 1");
    CHECK(surf.exit_code == 0);
    CHECK(surf.out.find("surjective (Verbitsky)") != std::string::npos);

    auto curve = run_cli("gauss curve --d 66 --k 2");
    CHECK(curve.exit_code == 0);
    CHECK(curve.out.find("surjective") != std::string::npos);
    CHECK(curve.out.find("261/4") != std::string::npos);

    auto unknown = run_cli("gauss curve --d 65 --k 2");
    CHECK(unknown.exit_code == 0);
    CHECK(unknown.out.find("unknown") != std::string::npos);

    CHECK(run_cli("gauss curve --d 66 --k 1").exit_code == 2);
}

TEST_CASE("cli positivity, kva, hminus on lattice files") {
    std::string ell = write_temp_lattice("elliptic", "rank 2\ngram\n4 1\n1 0\nample 1 0\n");
    std::string d3 = write_temp_lattice("rank1d3", "rank 1\ngram\n6\nample 1\n");
    std::string d4 = write_temp_lattice("rank1d4", "rank 1\ngram\n8\nample 1\n");

    auto mv = run_cli("positivity --lat " + ell + " --a 1 --mode movable");
    CHECK(mv.exit_code == 0);
    CHECK(mv.out.find("No") != std::string::npos);
    CHECK(mv.out.find("(0, 1)") != std::string::npos);

    auto kv = run_cli("kva --lat " + d4 + " --k 2");
    CHECK(kv.exit_code == 0);
    CHECK(kv.out.find("Yes") != std::string::npos);

    auto hm = run_cli("hminus --lat " + d3 + " --which 1");
    CHECK(hm.exit_code == 0);
    CHECK(hm.out.find("ample: Yes") != std::string::npos);

    CHECK(run_cli("positivity --lat /nonexistent.lat --a 1 --mode movable").exit_code == 2);
    CHECK(run_cli("positivity --lat " + ell + " --a 1 --mode sideways").exit_code == 2);
}

TEST_CASE("cli table") {
    auto csv = run_cli("table --d 1..50 --k 0..5 --format csv");
    CHECK(csv.exit_code == 0);
    size_t lines = std::count(csv.out.begin(), csv.out.end(), '\n');
    CHECK(lines == 51);  // header + 50 rows
    CHECK(csv.out.rfind("d,nef_slope,dual_slope,case,cert_k0,cert_k1,cert_k2,cert_k3,cert_k4,cert_k5\n",
                        0) == 0);

    auto js = run_cli("table --d 11..11 --k 1..1 --format json");
    CHECK(js.exit_code == 0);
    CHECK(js.out.find("\"22/7\"") != std::string::npos);
    CHECK(js.out.find("\"format_version\": 1") != std::string::npos);

    CHECK(run_cli("table --d 5..1 --k 0..2 --format csv").exit_code == 2);
    CHECK(run_cli("table --d 1..5 --k 0..2 --format yaml").exit_code == 2);
}

TEST_CASE("cli rendered certificates re-validate through the library") {
    auto nef = run_cli("--json nef-cone --d 11");
    json j = json::parse(nef.out);
    CHECK(j["format_version"] == 1);
    Int a(j["witness"]["a"].get<std::string>());
    Int b(j["witness"]["b"].get<std::string>());
    CHECK(a * a - 44 * b * b == 5);
    CHECK(make_rat(22 * b, a) == Rat(j["nef_slope"].get<std::string>()));
    CHECK(nef_cone(Int(11)).nef_slope == Rat(j["nef_slope"].get<std::string>()));

    auto pell = run_cli("--json pell --n 7 --c 1");
    json pj = json::parse(pell.out);
    Int pa(pj["solution"]["a"].get<std::string>());
    Int pb(pj["solution"]["b"].get<std::string>());
    CHECK(pa * pa - 7 * pb * pb == 1);
    CHECK(pa == pell_unit_min(Int(7)).a);

    auto tab = run_cli("table --d 3..9 --k 0..4 --format json");
    json tj = json::parse(tab.out);
    REQUIRE(tj["rows"].size() == 7);
    for (const auto& row : tj["rows"]) {
        long d = row["d"].get<long>();
        ConeDescription cone = nef_cone(Int(d));
        CHECK(cone.nef_slope == Rat(row["nef_slope"].get<std::string>()));
        CHECK(cone.dual_slope == Rat(row["dual_slope"].get<std::string>()));
        CHECK(std::string(to_string(cone.case_tag)) == row["case"].get<std::string>());
        for (size_t i = 0; i < row["certs"].size(); ++i) {
            auto cert = vanishing_certificate(Int(d), Int(2 + (long)i));
            CHECK(std::string(to_string(cert)) == row["certs"][i].get<std::string>());
        }
    }

    auto pos = run_cli("--json positivity --lat " +
                       write_temp_lattice("revalidate", "rank 2\ngram\n6 1\n1 -2\nample 1 0\n") +
                       " --a 1 --mode ample");
    json vj = json::parse(pos.out);
    CHECK(vj["result"]["verdict"] == "No");
    CHECK(vj["result"]["witness"]["type"] == "MinusTen");
    // kappa = 2C - delta against L - delta: q = -10, pairing 0
    PicLattice ln(2, {Int(6), Int(1), Int(1), Int(-2)}, {{Int(1), Int(0)}});
    std::vector<Int> ks;
    for (const auto& s : vj["result"]["witness"]["kappa_surf"]) ks.emplace_back(s.get<std::string>());
    Hilb2Class kappa{SurfaceClass{ks}, Int(vj["result"]["witness"]["kappa_b"].get<std::string>())};
    CHECK(ln.q_self(kappa) == -10);
    CHECK(ln.q_pair({{{Int(1), Int(0)}}, Int(1)}, kappa) ==
          Int(vj["result"]["witness"]["pairing"].get<std::string>()));
}

TEST_CASE("cli rank cap exceeded maps to exit 3") {
    std::string body = "rank 7\ngram\n";
    for (int i = 0; i < 7; ++i) {
        for (int j = 0; j < 7; ++j)
            body += (i == j ? (i == 0 ? "8" : "-6") : "0") + std::string(j < 6 ? " " : "");
        body += "\n";
    }
    body += "ample 1 0 0 0 0 0 0\n";
    std::string path = write_temp_lattice("rank7", body);
    CHECK(run_cli("kva --lat " + path + " --k 1").exit_code == 3);
    // raising the cap through the environment makes the query answerable
    CliResult ok = run_cli("kva --lat " + path + " --k 1", "HILB2_RANK_CAP=8 ");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("Yes") != std::string::npos);
}

TEST_CASE("cli machine output is deterministic and round-trips") {
    auto a = run_cli("--json nef-cone --d 11");
    auto b = run_cli("--json nef-cone --d 11");
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"input_hash\"") != std::string::npos);
    CHECK(a.out.find("\"format_version\":1") != std::string::npos);

    // parallel and serial table output are byte-identical
    auto par = run_cli("table --d 1..80 --k 0..4 --format csv");
    auto ser = run_cli("table --d 1..80 --k 0..4 --format csv --serial");
    CHECK(par.out == ser.out);
    auto parj = run_cli("table --d 1..30 --k 0..3 --format json");
    auto serj = run_cli("table --d 1..30 --k 0..3 --format json --serial");
    CHECK(parj.out == serj.out);
}
