#include <doctest.h>
#include <json.hpp>

#include "rowmotion/cli.hpp"
#include "rowmotion/expr.hpp"

using namespace rowmotion;
using namespace rowmotion::cli;

namespace {

Command command(std::string name) {
    Command c;
    c.name = std::move(name);
    c.timing = false;
    return c;
}

const CheckResult* find_check(const RunResult& r, const std::string& prefix) {
    for (const CheckResult& c : r.checks)
        if (c.name.starts_with(prefix)) return &c;
    return nullptr;
}

}  // namespace

TEST_CASE("verify-grid 2 3 passes and lists two orbits") {
    Command c = command("verify-grid");
    c.m = 2;
    c.n = 3;
    const RunResult r = run(c);
    CHECK(r.ok());
    CHECK(r.orbits.size() == 2);
    CHECK(r.n_elements == 6);
    CHECK(r.max_rank == 4);
    CHECK(emit(r, Format::Table).find("2 orbits") != std::string::npos);
    CHECK(emit(r, Format::Json).find("\"avg_size\": \"6/5\"") != std::string::npos);
}

TEST_CASE("verify-grid 3 7 reproduces the worked word table") {
    Command c = command("verify-grid");
    c.m = 3;
    c.n = 7;
    c.word = "0011101111";
    const RunResult r = run(c);
    CHECK(r.ok());
    REQUIRE(r.rows.size() == 11);
    CHECK(r.rows[1][1].second == "0101110111");
    CHECK(r.rows[3][1].second == "1101011101");
    CHECK(r.rows[10][1].second == "0011101111");
    c.word = "0101";
    CHECK_THROWS_AS(run(c), std::invalid_argument);
}

TEST_CASE("verify-k 2 3 passes with average 12/7 and order 7") {
    Command c = command("verify-k");
    c.m = 2;
    c.n = 3;
    const RunResult r = run(c);
    CHECK(r.ok());
    for (const OrbitRow& o : r.orbits) CHECK(to_string(o.avg_size) == "12/7");
    REQUIRE(find_check(r, "rowmotion has order"));
    CHECK(find_check(r, "rowmotion has order")->detail == "order 7");
    c.n = 1;
    CHECK_THROWS_AS(run(c), std::invalid_argument);
}

TEST_CASE("step-word follows ψ and ψ̄") {
    Command c = command("step-word");
    c.word = "0011101111";
    c.steps = 3;
    const RunResult r = run(c);
    REQUIRE(r.rows.size() == 4);
    CHECK(r.rows.back()[1].second == "1101011101");

    c.word = "1*0110";
    c.steps = 5;
    const RunResult starred = run(c);
    CHECK(starred.ok());
    CHECK(starred.rows.back()[1].second == "1*0110");  // m + 2n - 1 = 5
    c.word = "1*01*0";
    CHECK_THROWS_AS(run(c), std::invalid_argument);
}

TEST_CASE("encode and decode through both codecs") {
    Command c = command("encode");
    c.target = "grid";
    c.m = 2;
    c.n = 3;
    c.word = "10110";
    const RunResult grid = run(c);
    REQUIRE(grid.rows.size() == 1);
    CHECK(grid.rows[0][1].second == "10110");
    c.word.clear();
    c.ideal_bits = grid.rows[0][0].second;
    CHECK(run(c).rows[0][1].second == "10110");

    c = command("encode");
    c.target = "k";
    c.m = 3;
    c.n = 4;
    c.word = "1110*001111";
    const RunResult k = run(c);
    CHECK(k.ok());
    CHECK(k.rows[0][1].second == "1110*001111");
    c.target = "tree";
    CHECK_THROWS_AS(run(c), std::invalid_argument);
}

TEST_CASE("orbits of a catalog entry and from a seed") {
    Command c = command("orbits");
    c.target = "K(1)";
    const RunResult all = run(c);
    CHECK(all.ok());
    CHECK(all.orbits.size() == 2);
    c.seed_ideal = "1100";
    const RunResult one = run(c);
    REQUIRE(one.orbits.size() == 1);
    CHECK(one.orbits[0].length == 2);
    c.seed_ideal = "0100";
    CHECK_THROWS_AS(run(c), std::invalid_argument);
    c.seed_ideal = "110";
    CHECK_THROWS_AS(run(c), std::invalid_argument);
    c.seed_ideal.reset();
    c.target = "chain(0)";
    CHECK_THROWS_AS(run(c), ParseError);
}

TEST_CASE("verify-delta1 and conjectures on catalog entries") {
    Command c = command("verify-delta1");
    c.target = "[2]×H_4";
    CHECK(run(c).ok());
    c.target = "H(3)";
    CHECK(run(c).ok());

    c = command("conjectures");
    c.target = "layer(F4,4)";
    const RunResult r = run(c);
    CHECK(r.ok());
    CHECK(r.witnesses.empty());
    c.target = "prod(chain(2),chain(3))";
    CHECK_THROWS_AS(run(c), std::invalid_argument);
}

TEST_CASE("cap and budget") {
    Command c = command("verify-delta1");
    c.target = "[α_1] in E_8";
    c.cap = 100;
    try {
        run(c);
        FAIL("expected the cap to be exceeded");
    } catch (const CapExceeded& e) {
        CHECK(std::string(e.what()).find("100") != std::string::npos);
        CHECK(e.estimate() > 100);
    }
    c.budget = 5;
    const RunResult r = run(c);
    CHECK(r.ok());
    CHECK(r.checks.front().name.find("sampled") != std::string::npos);
}

TEST_CASE("catalog listing") {
    const RunResult r = run(command("catalog"));
    CHECK(r.ok());
    std::size_t exceptional = 0;
    for (const Row& row : r.rows) exceptional += row[0].second == "exceptional";
    CHECK(exceptional == 20);
    CHECK(emit(r, Format::Csv).starts_with("kind,name,realization"));
}

TEST_CASE("JSON has the stable keys and round-trips") {
    Command c = command("verify-grid");
    c.m = 2;
    c.n = 2;
    RunResult r = run(c);
    const auto j = nlohmann::json::parse(emit(r, Format::Json));
    for (const char* key : {"command", "poset", "n_elements", "max_rank", "orbits", "checks", "witnesses", "elapsed_ms"})
        CHECK(j.contains(key));
    CHECK(j["elapsed_ms"].is_null());
    CHECK(parse_json(emit(r, Format::Json)) == r);

    r.elapsed_ms = 12.5;
    r.witnesses.push_back({"N_O(p) = N_O(p*)", 1, "0101", 4, "(1,2)", "(2,1)", 3, 1});
    r.rows.push_back({{"step", "0"}, {"word", "0011"}});
    CHECK_FALSE(r.ok());
    CHECK(parse_json(emit(r, Format::Json)) == r);
}

TEST_CASE("empty orbit lists serialize as empty arrays") {
    RunResult r;
    r.command = "orbits";
    const auto j = nlohmann::json::parse(emit(r, Format::Json));
    CHECK(j["orbits"].is_array());
    CHECK(j["orbits"].empty());
    CHECK(emit(r, Format::Csv) == "orbit_id,length,avg_size,sizes\n");
}

TEST_CASE("identical invocations give identical output") {
    Command c = command("verify-k");
    c.m = 3;
    c.n = 2;
    CHECK(emit(run(c), Format::Json) == emit(run(c), Format::Json));
    c.threads = 4;
    Command serial = c;
    serial.threads = 1;
    CHECK(emit(run(c), Format::Json) == emit(run(serial), Format::Json));
    CHECK(emit(run(c), Format::Csv).starts_with("orbit_id,length,avg_size,sizes\n"));
    CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}
