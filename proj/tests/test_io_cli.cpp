#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "oscalg/io.hpp"

using namespace oscalg;

namespace {

struct cli_result {
    int status = -1;
    std::string out;
};

cli_result run_cli(const std::string& args)
{
    const char* bin = std::getenv("OSCALG_CLI");
    REQUIRE(bin != nullptr);
    const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    cli_result res;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) res.out.append(buf, got);
    const int rc = pclose(pipe);
    res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return res;
}

std::string write_temp(const std::string& name, const std::string& body)
{
    const std::string path = "/tmp/" + name;
    std::ofstream(path) << body;
    return path;
}

}  // namespace

TEST_CASE("family JSON round-trips")
{
    const auto sys = jacobi(1, 2);
    const auto again = family_from_json(family_to_json(sys));
    CHECK(again.label == sys.label);
    for (long n = 0; n < 16; ++n) {
        CHECK(seq_eval(again.a, n) == seq_eval(sys.a, n));
        CHECK(seq_eval(again.b2, n) == seq_eval(sys.b2, n));
    }

    const json doc = json::parse(R"({
        "label": "mixed",
        "a": {"num": ["1", "1/2"], "den": ["1"], "table": ["7"]},
        "b2": {"num": ["1", "1"]}
    })");
    const auto mixed = family_from_json(doc);
    CHECK(seq_eval(mixed.a, 0) == rational(7));
    CHECK(seq_eval(mixed.a, 2) == rational(2));
    CHECK(seq_eval(mixed.b2, 3) == rational(4));
}

TEST_CASE("malformed family documents")
{
    CHECK_THROWS_AS(family_from_json(json::parse(R"({"label": "x"})")), error);
    CHECK_THROWS_AS(family_from_json(json::parse(R"({"a": {"num": ["1"]}, "b2": {}})")), error);
    CHECK_THROWS_AS(
        family_from_json(json::parse(R"({"a": {"num": ["1.5"]}, "b2": {"num": ["1"]}})")), error);
    CHECK_THROWS_AS(
        family_from_json(json::parse(R"({"a": {"num": [2]}, "b2": {"num": ["1"]}})")), error);
    CHECK_THROWS_AS(
        family_from_json(json::parse(R"({"a": {"num": ["1"], "den": ["0"]}, "b2": {"num": ["1"]}})")),
        error);
}

TEST_CASE("moment JSON documents")
{
    const auto mom = moments_from_json(json::parse(R"({"moments": ["1", "0", "1", "0", "3"]})"));
    CHECK(mom.values.size() == 5);
    CHECK(mom.values[4] == rational(3));
    CHECK_THROWS_AS(moments_from_json(json::parse(R"({"moments": ["1", "0"]})")), error);
    CHECK_THROWS_AS(moments_from_json(json::parse(R"({"moments": ["2", "0", "1"]})")), error);
    CHECK_THROWS_AS(moments_from_json(json::parse(R"({})")), error);
}

TEST_CASE("report serialization shapes")
{
    const auto cls = classification_to_json(classify(laguerre(0)));
    CHECK(cls.at("verdict") == "Finite");
    CHECK(cls.at("alpha") == json::array({"1", "2", "1"}));
    CHECK(cls.at("beta") == json::array({"1", "2"}));
    CHECK(cls.at("boundary_consistent") == true);

    const auto inf = classification_to_json(classify(jacobi(1, 2)));
    CHECK(inf.at("verdict") == "Infinite");
    CHECK(inf.at("p_a") == "unbounded");

    closure_config config;
    config.truncation = 96;
    config.cap = 8;
    const auto rep = closure_to_json(lie_closure(hermite_prob(), config));
    CHECK(rep.at("status") == "Finite");
    CHECK(rep.at("dim") == 4);
    CHECK(rep.at("basis").size() == 4);
    CHECK(rep.contains("structure_constants"));
    CHECK(rep.at("residual").get<double>() < 1e-8);
}

TEST_CASE("operator CSV dump")
{
    const auto op = build_operator(operator_kind::number, laguerre(0), 4);
    CHECK(operator_to_csv(op) == "row,col,value\n1,1,1\n2,2,2\n3,3,3\n");
}

TEST_CASE("cli: classify")
{
    const auto res = run_cli("classify laguerre --alpha 0");
    REQUIRE(res.status == 0);
    const json doc = json::parse(res.out);
    CHECK(doc.at("verdict") == "Finite");
    CHECK(doc.at("alpha") == json::array({"1", "2", "1"}));
    CHECK(doc.at("beta") == json::array({"1", "2"}));
}

TEST_CASE("cli: closure on jacobi exceeds the cap")
{
    const auto res = run_cli("closure jacobi --alpha 1 --beta 2 --cap 12");
    REQUIRE(res.status == 0);
    const json doc = json::parse(res.out);
    CHECK(doc.at("status") == "ExceededCap");
    CHECK(doc.at("cap") == 12);
}

TEST_CASE("cli: moment conversions")
{
    const auto res = run_cli("rec2moments laguerre --alpha 0 -K 4");
    REQUIRE(res.status == 0);
    CHECK(json::parse(res.out).at("moments") == json::array({"1", "1", "2", "6", "24"}));

    const auto path =
        write_temp("oscalg_moments.json", R"({"moments": ["1", "1", "2", "6", "24", "120"]})");
    const auto back = run_cli("moments2rec " + path);
    REQUIRE(back.status == 0);
    const json doc = json::parse(back.out);
    CHECK(doc.at("a") == json::array({"1", "3"}));
    CHECK(doc.at("b2") == json::array({"1", "4"}));
}

TEST_CASE("cli: custom family file")
{
    const auto path = write_temp("oscalg_family.json", R"({
        "label": "shifted-hermite",
        "a": {"num": ["1"]},
        "b2": {"num": ["1", "1"]}
    })");
    const auto res = run_cli("classify " + path);
    REQUIRE(res.status == 0);
    CHECK(json::parse(res.out).at("verdict") == "Finite");
}

TEST_CASE("cli: input error paths exit with code 2")
{
    CHECK(run_cli("classify nosuchfamily").status == 2);
    CHECK(run_cli("classify laguerre --alpha nonsense").status == 2);
    CHECK(run_cli("classify laguerre").status == 2);          // missing --alpha
    CHECK(run_cli("classify laguerre --alpha -1").status == 2);
    CHECK(run_cli("rec2moments jacobi --alpha 1").status == 2);  // missing --beta

    const auto small = write_temp("oscalg_short.json", R"({"moments": ["1", "1"]})");
    CHECK(run_cli("moments2rec " + small).status == 2);  // K too small

    const auto broken = write_temp("oscalg_broken.json", R"({"a": oops)");
    CHECK(run_cli("classify " + broken).status == 2);

    CHECK(run_cli("dump-op hermite_prob --op Zeta").status == 2);
}

TEST_CASE("cli: verify exits 0 below tolerance and 3 above")
{
    CHECK(run_cli("verify hermite_prob --truncation 64").status == 0);
    CHECK(run_cli("verify hermite_prob --truncation 64 --tol 1e-30").status == 3);
}

TEST_CASE("cli: dump-op emits deterministic CSV")
{
    const auto res = run_cli("dump-op laguerre --alpha 0 --op N --truncation 4");
    REQUIRE(res.status == 0);
    CHECK(res.out == "row,col,value\n1,1,1\n2,2,2\n3,3,3\n");
}

TEST_CASE("cli: report agrees with itself and with the theory")
{
    const auto first = run_cli("report laguerre --alpha 0");
    const auto second = run_cli("report laguerre --alpha 0");
    REQUIRE(first.status == 0);
    CHECK(first.out == second.out);  // byte-for-byte determinism

    const json doc = json::parse(first.out);
    CHECK(doc.at("summary").at("agreement") == true);
    CHECK(doc.at("summary").at("dim") == 4);
    CHECK(doc.at("gram_deviation").get<double>() < 1e-8);

    const auto jac = json::parse(run_cli("report jacobi --alpha 1 --beta 1").out);
    CHECK(jac.at("summary").at("agreement") == true);
    CHECK(jac.at("summary").at("prediction") == "Infinite");
    CHECK(jac.at("summary").at("dim") == ">=13");

    const json beck = json::parse(run_cli("report beckers --lambda 3/2").out);
    CHECK(beck.at("summary").at("agreement") == true);
    const auto& slot = beck.at("closure").at("structure_constants")[1][2];
    CHECK(std::abs(slot[0].get<double>() - 1.0) < 1e-10);
}
