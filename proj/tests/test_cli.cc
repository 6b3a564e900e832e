#include <cli.hh>
#include <tba/construct.hh>
#include <tba/io.hh>

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <sstream>

namespace
{
    struct Result
    {
        int code;
        std::string out, err;
    };

    auto run_tba(std::vector<std::string> args) -> Result
    {
        args.insert(args.begin(), "tba");
        std::ostringstream out, err;
        int code = tba::cli::run(args, out, err);
        return {code, out.str(), err.str()};
    }

    struct TempDir
    {
        std::filesystem::path path = std::filesystem::temp_directory_path() / "tba_cli_test";
        TempDir() { std::filesystem::create_directories(path); }
        ~TempDir() { std::filesystem::remove_all(path); }

        auto model(const std::string & name) const -> std::string
        {
            auto p = path / (name + ".tba");
            tba::save_model(tba::catalog_model(name), p);
            return p.string();
        }
    };
}

TEST_CASE("check")
{
    TempDir dir;
    auto n4 = dir.model("n4paper");
    auto r = run_tba({"check", n4, "--eq", "x*y = y*x"});
    CHECK(r.code == 1);
    CHECK(r.out.find("counterexample x=u y=v lhs=0 rhs=u") != std::string::npos);

    r = run_tba({"check", n4, "--eq", "x + x = 0"});
    CHECK(r.code == 0);

    r = run_tba({"check", n4, "--eq", "x + = 0"});
    CHECK(r.code == 2);
    CHECK(r.err.find("column") != std::string::npos);
}

TEST_CASE("axioms and laws")
{
    TempDir dir;
    auto gf4 = dir.model("gf4");
    CHECK(run_tba({"axioms", gf4}).code == 0);
    CHECK(run_tba({"laws", gf4}).code == 0);
    CHECK(run_tba({"laws", gf4, "--law", "L7"}).code == 0);
    CHECK(run_tba({"laws", gf4, "--law", "L99"}).code == 2);
    CHECK(run_tba({"laws", (dir.path / "missing.tba").string()}).code == 2);
}

TEST_CASE("classify text and json agree")
{
    TempDir dir;
    for (auto name : {"gf2", "ut2gf2", "n4paper"}) {
        auto path = dir.model(name);
        auto text = run_tba({"classify", path});
        auto json = run_tba({"classify", path, "--format", "json"});
        CHECK(text.code == 0);
        CHECK(json.code == 0);
        auto j = nlohmann::json::parse(json.out);
        CHECK(j["schema"] == "1");
        bool b = j["verdicts"]["boolean"], r = j["verdicts"]["ring2"], n = j["verdicts"]["nearRing2"];
        auto tf = [](bool x) { return x ? "true" : "false"; };
        auto line = std::string("verdicts boolean=") + tf(b) + " ring2=" + tf(r) + " nearRing2=" + tf(n) + "\n";
        CHECK(text.out.find(line) != std::string::npos);
        CHECK(run_tba({"classify", path, "--format", "json"}).out == json.out);
    }
    CHECK(run_tba({"classify", dir.model("gf2"), "--format", "xml"}).code == 2);
}

TEST_CASE("build and from-near-ring")
{
    TempDir dir;
    auto out = (dir.path / "n4.tba").string();
    CHECK(run_tba({"build", "n4paper", "-o", out}).code == 0);
    CHECK(tba::load_model(out) == tba::catalog_model("n4paper"));
    CHECK(run_tba({"build", "gf9"}).code == 2);

    auto r = run_tba({"from-near-ring", TBA_TEST_DATA "/n4.nr", "--formula", "ring2"});
    CHECK(r.code == 1);
    CHECK(r.err.find("T3") != std::string::npos);
    CHECK(run_tba({"from-near-ring", TBA_TEST_DATA "/n4.nr", "--formula", "nearring2"}).code == 0);
    CHECK(run_tba({"from-near-ring", TBA_TEST_DATA "/z4.nr", "--formula", "affine"}).code == 0);
    CHECK(run_tba({"from-near-ring", TBA_TEST_DATA "/z4.nr", "--formula", "nearring2"}).code == 2);
}

TEST_CASE("enumerate")
{
    auto r = run_tba({"enumerate", "--size", "2", "--up-to-iso"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("size 2: 1 labelled models, 1 up to isomorphism\n", 0) == 0);

    r = run_tba({"enumerate", "--size", "4", "--up-to-iso", "--classify"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("size 4: 17 labelled models, 10 up to isomorphism\n", 0) == 0);
    CHECK(run_tba({"enumerate", "--size", "4", "--up-to-iso", "--classify", "--jobs", "3"}).out == r.out);

    CHECK(run_tba({"enumerate", "--size", "5", "--budget-nodes", "5"}).code == 3);
    CHECK(run_tba({"enumerate", "--size", "9"}).code == 2);
    CHECK(run_tba({"enumerate"}).code == 2);

    TempDir dir;
    CHECK(run_tba({"enumerate", "--size", "4", "--up-to-iso", "-o", (dir.path / "out").string()}).code == 0);
    std::size_t files = 0;
    for ([[maybe_unused]] const auto & e : std::filesystem::directory_iterator(dir.path / "out"))
        ++files;
    CHECK(files == 10);
}

TEST_CASE("usage")
{
    CHECK(run_tba({}).code == 2);
    CHECK(run_tba({"frobnicate"}).code == 2);
    CHECK(run_tba({"--help"}).code == 0);
}
