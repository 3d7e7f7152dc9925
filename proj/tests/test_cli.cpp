#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <cli.hpp>

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = nachbin::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(NACHBIN_SAMPLES_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& contents) {
    auto path = std::string(std::filesystem::temp_directory_path() / name);
    std::ofstream(path) << contents;
    return path;
}

} // namespace

TEST_CASE("validate") {
    auto ok = run({"validate", "--poset", sample("chain2.json")});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("valid poset") != std::string::npos);

    auto bad = run({"validate", "--poset", sample("r2_analog.json")});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("counterexample") != std::string::npos);
    CHECK(run({"validate", "--quasi", "--poset", sample("r2_analog.json")}).code == 0);

    CHECK(run({"validate", "--poset", sample("missing.json")}).code == 2);
    CHECK(run({"validate", "--poset", temp_file("nachbin_bad.json", "{\"elements\": [")}).code == 2);
    CHECK(run({"validate"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("envelope and prox") {
    auto e = run({"envelope", "--poset", sample("chain2.json"), "--function", sample("f_chain2_down.json")});
    CHECK(e.code == 0);
    CHECK(e.out.find("\"q\": \"1\"") != std::string::npos);
    auto lower = run({"envelope", "--poset", sample("chain2.json"), "--function", sample("f_chain2_down.json"),
                      "--direction", "lower"});
    CHECK(lower.code == 0);
    CHECK(lower.out.find("\"p\": \"0\"") != std::string::npos);
    CHECK(run({"envelope", "--poset", sample("vposet.json"), "--function", sample("f_chain2_down.json")}).code == 2);

    auto yes = run({"prox", "--poset", sample("chain2.json"), "--lower", sample("f_chain2_down.json"), "--upper",
                    sample("g_chain2_ones.json")});
    CHECK(yes.code == 0);
    CHECK(yes.out.find("\"proximal\": true") != std::string::npos);
    auto no = run({"prox", "--poset", sample("chain2.json"), "--lower", sample("f_chain2_down.json"), "--upper",
                   sample("g_chain2_half.json")});
    CHECK(no.code == 0);
    CHECK(no.out.find("\"proximal\": false") != std::string::npos);
    CHECK(run({"prox", "--poset", sample("chain2.json"), "--oracle", "r2", "--lower", sample("f_chain2_down.json"),
               "--upper", sample("g_chain2_ones.json")})
              .code == 2);
}

TEST_CASE("axioms") {
    auto r2 = run({"axioms", "--oracle", "r2", "--samples", "300", "--seed", "42"});
    CHECK(r2.code == 0);
    auto chain = run({"axioms", "--poset", sample("chain2.json"), "--samples", "300", "--devries"});
    CHECK(chain.code == 0);
    CHECK(chain.out.find("P11") != std::string::npos);
    CHECK(run({"axioms", "--skeleton", sample("skeleton_generators.json"), "--samples", "100"}).code == 0);
    CHECK(run({"axioms", "--oracle", "r3"}).code == 2);
    CHECK(run({"axioms", "--oracle", "r2", "--samples", "0"}).code == 2);
    // Same seed, same report.
    CHECK(run({"axioms", "--oracle", "r2", "--samples", "100", "--seed", "9", "--json"}).out ==
          run({"axioms", "--oracle", "r2", "--samples", "100", "--seed", "9", "--json"}).out);
}

TEST_CASE("spectrum and induced order") {
    auto s = run({"spectrum", "--poset", sample("vposet.json"), "--algebra", sample("algebra_blocks.json")});
    CHECK(s.code == 0);
    CHECK(s.out.find("M_{b,c}") != std::string::npos);
    CHECK(run({"spectrum", "--poset", sample("r2_analog.json")}).code == 2);

    CHECK(run({"induced-order", "--poset", sample("chain2.json")}).code == 0);
    CHECK(run({"induced-order", "--poset", sample("chain2.json"), "--expect-quasi"}).code == 1);
    CHECK(run({"induced-order", "--oracle", "r2"}).code == 1);
    auto quasi = run({"induced-order", "--oracle", "r2", "--expect-quasi"});
    CHECK(quasi.code == 0);
    CHECK(quasi.out.find("fails antisymmetry") != std::string::npos);
}

TEST_CASE("roundtrip") {
    auto chain = run({"roundtrip", "--poset", sample("chain3.json"), "--samples", "200"});
    CHECK(chain.code == 0);
    CHECK(chain.out.find("order-isomorphism") != std::string::npos);
    CHECK(run({"roundtrip", "--oracle", "r2", "--samples", "50"}).code == 1);
    CHECK(run({"roundtrip", "--oracle", "r2", "--samples", "50", "--expect-quasi"}).code == 0);
    CHECK(run({"roundtrip", "--poset", sample("vposet.json"), "--algebra", sample("algebra_blocks.json")}).code == 0);
}

TEST_CASE("sw-approx and dieudonne") {
    auto sw = run({"sw-approx", "--poset", sample("vposet.json"), "--function", sample("f_vposet.json"), "--eps", "1/8"});
    CHECK(sw.code == 0);
    CHECK(sw.out.find("certificate verified") != std::string::npos);
    CHECK(run({"sw-approx", "--poset", sample("chain2.json"), "--function", sample("f_chain2_down.json"), "--eps",
               "1/8"})
              .code == 2);
    CHECK(run({"sw-approx", "--poset", sample("vposet.json"), "--function", sample("f_vposet.json"), "--eps", "0"})
              .code == 2);
    CHECK(run({"sw-approx", "--poset", sample("vposet.json"), "--function", sample("f_vposet.json"), "--eps", "0.1"})
              .code == 2);

    auto d = run({"dieudonne", "--poset", sample("chain2.json"), "--lower", sample("f_chain2_down.json"), "--upper",
                  sample("g_chain2_ones.json"), "--steps", "20"});
    CHECK(d.code == 0);
    CHECK(run({"dieudonne", "--poset", sample("chain2.json"), "--lower", sample("f_chain2_down.json"), "--upper",
               sample("g_chain2_ones.json"), "--stream", "perturbed"})
              .code == 0);
    auto none = run({"dieudonne", "--poset", sample("chain2.json"), "--lower", sample("f_chain2_down.json"),
                     "--upper", sample("g_chain2_half.json")});
    CHECK(none.code == 1);
    CHECK(none.out.find("counterexample") != std::string::npos);
    CHECK(run({"dieudonne", "--poset", sample("chain2.json"), "--lower", sample("f_chain2_down.json"), "--upper",
               sample("g_chain2_ones.json"), "--stream", "wobbly"})
              .code == 2);
}

TEST_CASE("adjunction and pq-roundtrip") {
    auto a = run({"adjunction", "--poset", sample("chain2.json")});
    CHECK(a.code == 0);
    CHECK(a.out.find("\"algebra_morphisms\": 3") != std::string::npos);
    CHECK(a.out.find("\"monotone_maps\": 3") != std::string::npos);
    CHECK(run({"adjunction", "--poset", sample("vposet.json"), "--target", sample("chain2.json")}).code == 0);

    CHECK(run({"pq-roundtrip", "--poset", sample("vposet.json"), "--samples", "50"}).code == 0);
    CHECK(run({"pq-roundtrip", "--oracle", "r2"}).code == 2);
}
