#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "ordlim/io.hpp"
#include "ordlim/recognition.hpp"

using namespace ordlim;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int s = cli::run(args, out, err);
    return {s, out.str(), err.str()};
}

std::filesystem::path scratch()
{
    auto dir = std::filesystem::temp_directory_path() / "ordlim_cli_test";
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("recognize")
{
    const auto h = (scratch() / "h.poset").string();
    write_file(h, "poset 4\n1 2\n3 4\n");
    const auto r = run({"recognize", "--in", h});
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["interval_order"] == false);
    CHECK(j["semiorder"] == false);
    CHECK(nlohmann::json::parse(run({"recognize", "--in", "chain4"}).out)["semiorder"] == true);
}

TEST_CASE("sample writes a semiorder that reads back")
{
    const auto path = (scratch() / "p.poset").string();
    const auto r = run({"sample", "--kernel", "gc", "--c", "3/10", "--n", "100", "--seed", "7", "--out", path});
    REQUIRE(r.status == 0);
    const auto p = parse_poset(read_file(path));
    CHECK(p.size() == 100);
    CHECK(is_semiorder(p));
    const auto first = read_file(path);
    run({"sample", "--kernel", "gc", "--c", "3/10", "--n", "100", "--seed", "7", "--out", path});
    CHECK(read_file(path) == first);
}

TEST_CASE("density")
{
    const auto r = run({"density", "--q", "chain2", "--p", "chain2", "--kind", "hom"});
    CHECK(r.status == 0);
    CHECK(r.out == "1/4\n");
    CHECK(run({"density", "--q", "h", "--p", "h", "--kind", "ind"}).out == "1/12\n");
    CHECK(run({"density", "--q", "q3-", "--p", "antichain3", "--kind", "hom"}).out == "0/1\n");
}

TEST_CASE("exit codes")
{
    CHECK(run({}).status == 2);
    CHECK(run({"bogus"}).status == 2);
    CHECK(run({"density", "--q", "chain2"}).status == 2);
    CHECK(run({"density", "--q", "nope", "--p", "chain2"}).status == 2);
    CHECK(run({"represent", "--in", "h"}).status == 2);
    CHECK(run({"sample", "--kernel", "gc", "--n", "5"}).status == 2);
    const auto r = run({"sample", "--kernel", "gc", "--c", "1/2", "--n", "5", "--out", "/nonexistent/dir/x"});
    CHECK(r.status == 2);
    CHECK(r.err.find("--out") != std::string::npos);
    CHECK(run({"--help"}).status == 0);
}

TEST_CASE("represent, project and equiv")
{
    const auto rep = run({"represent", "--in", "chain2"});
    CHECK(rep.out == "index,rank,a,b\n1,1,1/2,1/2\n2,2,1/1,1/1\n");

    const auto m = (scratch() / "m.sm").string();
    write_file(m, "stepmeasure 3\n0 1/4 : 1/2 1\n1/4 1/2 : 3/4 1\n1/2 1 : 1 1\n");
    const auto pr = run({"project", "--in", m});
    CHECK(pr.status == 0);
    CHECK(parse_step_measure(pr.out).cells().size() == 2);

    const auto star = (scratch() / "star.sm").string();
    write_file(star, pr.out);
    CHECK(nlohmann::json::parse(run({"equiv", "--a", m, "--b", star}).out)["equivalent"] == true);
    const auto one = (scratch() / "one.sm").string();
    write_file(one, "stepmeasure 1\n0 1 : 1 1\n");
    CHECK(nlohmann::json::parse(run({"equiv", "--a", m, "--b", one}).out)["equivalent"] == false);
}

TEST_CASE("nu, fingerprint, rgo and converge")
{
    const auto nu = run({"nu", "--in", "chain2", "--sign", "minus"});
    CHECK(nu.out == "x,left,right\n0/1,0/1,1/2\n1/2,1/2,1/1\n1/1,1/1,1/1\n");
    const auto fp = run({"fingerprint", "--in", "h", "--max-q", "4", "--format", "json"});
    bool found = false;
    for (const auto& row : nlohmann::json::parse(fp.out))
        if (row["exact"] == "1/12" && row["size"] == 4) found = true;
    CHECK(found);
    const auto g = run({"rgo", "--n", "200", "--c", "0.3", "--seed", "2"});
    CHECK(nlohmann::json::parse(g.out)["c_parameter"].get<double>() == doctest::Approx(0.3));
    const auto c = run({"converge", "--kernel", "gc", "--c", "3/10", "--ns", "100,200", "--format", "json"});
    CHECK(c.status == 0);
    CHECK(nlohmann::json::parse(c.out)["rows"].size() == 2);
}
