/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <doctest.h>

#include <pathforge/certificate.hh>
#include <pathforge/io.hh>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

using namespace pathforge;
namespace fs = std::filesystem;

namespace
{
    struct Run
    {
        int code = -1;
        std::string out, err;
    };

    // Per-process working directory, removed at exit.
    struct Scratch
    {
        fs::path dir;

        Scratch() :
            dir(fs::temp_directory_path() / ("pathforge-cli-test-" + std::to_string(::getpid())))
        {
            fs::create_directories(dir);
        }

        ~Scratch()
        {
            std::error_code ignored;
            fs::remove_all(dir, ignored);
        }
    };

    auto scratch() -> const fs::path &
    {
        static const Scratch s;
        return s.dir;
    }

    auto slurp(const fs::path & p) -> std::string
    {
        std::ifstream in{p};
        std::stringstream s;
        s << in.rdbuf();
        return s.str();
    }

    auto put(const std::string & name, const std::string & text) -> std::string
    {
        auto p = scratch() / name;
        std::ofstream{p} << text;
        return p.string();
    }

    // Runs the command line with the binary in front, inside the scratch
    // directory; env is a prefix of VAR=value assignments.
    auto run(const std::string & args, const std::string & input = "", const std::string & env = "") -> Run
    {
        auto in = put("stdin.txt", input);
        auto out = scratch() / "stdout.txt", err = scratch() / "stderr.txt";
        auto command = "cd '" + scratch().string() + "' && env -u PATHFORGE_BUDGET " + env + " '" PATHFORGE_CLI_PATH "' "
            + args + " < '" + in + "' > '" + out.string() + "' 2> '" + err.string() + "'";
        int status = std::system(command.c_str());
        return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
    }

    auto trim(std::string s) -> std::string
    {
        while (! s.empty() && (s.back() == '\n' || s.back() == ' '))
            s.pop_back();
        return s;
    }
}

TEST_SUITE("cli")
{
    TEST_CASE("tree width of a generated tree")
    {
        auto t3 = run("gen cbt 3");
        REQUIRE(t3.code == 0);
        CHECK(parse_edge_list(t3.out).order() == 15);
        auto w = run("width tree", t3.out);
        CHECK(w.code == 0);
        CHECK(trim(w.out) == "2");
        CHECK(trim(run("width exact", t3.out).out) == "2");
    }

    TEST_CASE("hat trees have no triangle")
    {
        auto hat = run("gen hat 2");
        REQUIRE(hat.code == 0);
        auto r = run("recognize --shape complete --n 3", hat.out);
        CHECK(r.code == 1);
        CHECK(trim(r.out) == "absent");
    }

    TEST_CASE("decision over a set of files")
    {
        std::string files;
        files += put("k3.el", write_edge_list(complete_graph(3))) + " ";
        files += put("k33.el", write_edge_list(complete_bipartite_graph(3, 3))) + " ";
        files += put("claw.el", write_edge_list(claw_graph())) + " ";
        files += put("net.el", write_edge_list(net_graph()));
        auto r = run("decide --strictness inclusive " + files);
        CHECK(r.code == 0);
        auto out = trim(r.out);
        CHECK(out.substr(out.rfind('\n') + 1) == "bounded");
        CHECK(out.find("tripod: " + scratch().string() + "/claw.el") != std::string::npos);
        auto c5 = run("decide " + put("c5.el", write_edge_list(cycle_graph(5))));
        CHECK(c5.code == 1);

        // inclusive unless asked otherwise
        auto k2 = put("k2.el", write_edge_list(complete_graph(2)));
        CHECK(run("decide " + k2).code == 0);
        CHECK(run("decide --strict " + k2).code == 1);
        CHECK(run("decide --strictness strict " + k2).code == 1);
    }

    TEST_CASE("exit codes")
    {
        auto t3 = write_edge_list(complete_binary_tree(3).graph());
        CHECK(run("find induced --pattern claw", t3).code == 0);
        CHECK(run("find induced --pattern cycle:3", t3).code == 1);
        CHECK(run("find subdivision --pattern cbt:2 --budget 5", t3).code == 2);
        CHECK(run("width tree", "0 1\n1 q\n").code == 3);
        CHECK(run("width tree --in does-not-exist.el").code == 3);
        CHECK(run("gen nonsense").code == 3);
        CHECK(run("width exact", write_edge_list(cycle_graph(30))).code == 2);
    }

    TEST_CASE("input errors carry line numbers")
    {
        auto r = run("width tree", "# header\n0 1\n1 q\n");
        CHECK(r.code == 3);
        CHECK(r.err.find("line 3") != std::string::npos);
    }

    TEST_CASE("budget from the environment")
    {
        auto t3 = write_edge_list(complete_binary_tree(3).graph());
        CHECK(run("find subdivision --pattern cbt:2", t3, "PATHFORGE_BUDGET=5").code == 2);
        CHECK(run("find subdivision --pattern cbt:2", t3, "PATHFORGE_BUDGET=100000000").code == 0);
        // the flag wins over the environment
        CHECK(run("find subdivision --pattern cbt:2 --budget 100000000", t3, "PATHFORGE_BUDGET=5").code == 0);
        CHECK(run("find subdivision --pattern cbt:2", t3, "PATHFORGE_BUDGET=lots").code == 3);
    }

    TEST_CASE("identical seeds give identical bytes")
    {
        auto t4 = write_edge_list(complete_binary_tree(4).graph());
        auto a = run("gen subdivide --max-length 5 --seed 42", t4);
        auto b = run("gen subdivide --max-length 5 --seed 42", t4);
        auto c = run("gen subdivide --max-length 5 --seed 43", t4);
        REQUIRE(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(a.out != c.out);

        auto hat = run("gen hat 1");
        auto j1 = run("extract pipeline-deg --k 1 --max-degree 3 --seed 9 --json", a.out);
        auto j2 = run("extract pipeline-deg --k 1 --max-degree 3 --seed 9 --json", a.out);
        CHECK(j1.out == j2.out);
        CHECK(j1.code == j2.code);
    }

    TEST_CASE("json reports")
    {
        auto t3 = write_edge_list(complete_binary_tree(3).graph());
        auto r = run("find induced --pattern claw --json", t3);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j["status"] == "found");
        CHECK(j["exit"] == 0);
        CHECK(j["map"].size() == 4);
        auto bad = run("width tree --json", "0 x\n");
        CHECK(bad.code == 3);
        auto e = nlohmann::json::parse(bad.out);
        CHECK(e["exit"] == 3);
        CHECK(e["error"].get<std::string>().find("line 1") != std::string::npos);
    }

    TEST_CASE("graph6 in and out")
    {
        auto g6 = run("gen cbt 2 --format graph6");
        REQUIRE(g6.code == 0);
        CHECK(decode_graph6(trim(g6.out)) == complete_binary_tree(2).graph());
        CHECK(trim(run("width tree --format graph6", g6.out).out) == "1");
    }

    TEST_CASE("certificates written by commands verify")
    {
        auto t3 = put("t3.el", write_edge_list(complete_binary_tree(3).graph()));
        auto t4 = put("t4.el", write_edge_list(complete_binary_tree(4).graph()));

        REQUIRE(run("width exact --in " + t3 + " --out pd.cert").code == 0);
        CHECK(run("verify pd.cert " + t3).code == 0);
        CHECK(run("verify pd.cert " + t4).code != 0);

        REQUIRE(run("gen hat 1 --out hat.el --cert hat.cert").code == 0);
        put("t2.el", write_edge_list(complete_binary_tree(2).graph()));
        CHECK(run("verify hat.cert hat.el").code == 1);
        CHECK(run("verify hat.cert hat.el t2.el").code == 0);

        REQUIRE(run("gen wattle 3 --triangles 1,2 --out w.el --cert w.cert").code == 0);
        CHECK(run("verify w.cert w.el").code == 0);
        REQUIRE(run("extract to-subgraph --in w.el --wattle w.cert --k 1 --out x.cert").code == 0);
        put("t1.el", write_edge_list(complete_binary_tree(1).graph()));
        CHECK(run("verify x.cert w.el t1.el").code == 0);

        REQUIRE(run("partition --in " + t4 + " --out p.cert").code == 0);
        CHECK(run("verify p.cert --in " + t4).code == 0);

        REQUIRE(run("find minor --in " + t4 + " --pattern path:4 --out m.cert").code == 0);
        put("p4.el", write_edge_list(path_graph(4)));
        CHECK(run("verify m.cert p4.el " + t4).code == 0);

        // a tampered certificate fails verification
        auto text = slurp(scratch() / "pd.cert");
        text.replace(text.find("width 2"), 7, "width 1");
        put("bad.cert", text);
        CHECK(run("verify bad.cert " + t3).code == 1);
        CHECK(run("verify missing.cert " + t3).code == 3);
    }

    TEST_CASE("every subcommand family answers")
    {
        auto t4 = put("t4b.el", write_edge_list(complete_binary_tree(4).graph()));
        put("id.cert", to_string(certificate_for(identity_model(complete_binary_tree(4).graph()))));
        for (auto args : {"gen cbt-plus 2", "gen kary 2", "gen linegraph --in T", "gen net-replace 1 --in T",
                    "width lower --in T --pattern cbt:2", "find induced-minor --in T --pattern path:3",
                    "recognize --shape fork --in T", "model validate --in T --pattern cbt:4 --model id.cert",
                    "partition --in T", "contract-balls --in T --centres 0", "extract mono-cbt --k 1 --height 3 --seed 3",
                    "extract wattle --in T --model id.cert --pattern cbt:4 --k 1", "extract pipeline-minorfree --in T --k 2 --n 4"}) {
            std::string a = args;
            if (auto at = a.find(" T"); at != std::string::npos)
                a.replace(at + 1, 1, t4);
            auto r = run(a);
            CHECK_MESSAGE((r.code == 0 || r.code == 1), a, " -> ", r.code, " ", r.err);
        }
    }
}
