#include "doctest.h"
#include "qstretch/cli/commands.hpp"

#include <fstream>
#include <sstream>

using namespace qstretch::cli;

namespace {

std::string read(const std::string& name) {
    std::ifstream in(std::string(QSTRETCH_FIXTURE_DIR) + "/" + name + ".alg");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const qstretch::CheckRecord& find(const Report& r, const std::string& name) {
    for (const auto& rec : r.records) {
        if (rec.name == name) return rec;
    }
    FAIL("missing record " << name);
    return r.records.front();
}

Options command(std::string c, std::size_t A = 1) {
    Options o;
    o.command = std::move(c);
    o.A = A;
    return o;
}

}  // namespace

TEST_SUITE("commands") {
    TEST_CASE("digest") {
        CHECK(fnv1a_digest("") == "cbf29ce484222325");
        CHECK(fnv1a_digest("a") == "af63dc4c8601ec8c");
    }

    TEST_CASE("full report on the two-cycle") {
        auto o = command("report", 2);
        o.all = true;
        auto r = run(o, read("fg2"));
        CHECK(r.exit_code == 0);
        CHECK(find(r, "d-koszul").computed == "d=3");
        CHECK(find(r, "d-koszul").status_string() == "UP-TO(6)");
        CHECK(find(r, "stacked").computed == "(6,2)");
        CHECK(find(r, "stacked").predicted == "(6,2)");
        CHECK(find(r, "stratifying.tensor").status_string() == "PASS");
        CHECK(find(r, "bimodule.envelope.pdim").computed == "2");
        CHECK(find(r, "idim").computed == "2");
        CHECK(r.json["version"] == kToolVersion);
        CHECK(r.json["records"].size() == r.records.size());
    }

    TEST_CASE("reports are deterministic apart from timing") {
        auto o = command("verify transport", 2);
        o.n_max = 4;
        auto a = run(o, read("example_1_5"));
        auto b = run(o, read("example_1_5"));
        a.json.erase("timing");
        b.json.erase("timing");
        CHECK(a.to_json() == b.to_json());
        CHECK(a.exit_code == 0);
        CHECK(a.json.contains("betti"));
        CHECK(a.json.contains("stretched_betti"));
    }

    TEST_CASE("failing records set the exit code") {
        auto o = command("check d-koszul");
        o.d = 2;
        auto r = run(o, read("fg2"));
        CHECK(r.exit_code == 1);
        REQUIRE(r.first_failure());
        CHECK(r.first_failure()->name == "d-koszul");
    }

    TEST_CASE("stretch emits a re-parseable file") {
        auto path = std::string("stretch_emit_test.alg");
        auto o = command("stretch", 2);
        o.emit = path;
        auto r = run(o, read("example_1_5"));
        CHECK(r.exit_code == 0);
        std::ifstream in(path);
        std::ostringstream buf;
        buf << in.rdbuf();
        auto p = parse_algebra_file(buf.str());
        CHECK(p.quiver.vertex_count() == 3);
        CHECK(p.relations.size() == 3);
        std::remove(path.c_str());
    }

    TEST_CASE("other commands") {
        CHECK(run(command("basis"), read("example_1_5")).json["basis"].size() == 4);
        CHECK(run(command("dims"), read("ungraded_f7")).json["dimensions"]["loewy_length"] == 4);
        auto dual = command("resolve");
        dual.module = "dual";
        CHECK(run(dual, read("fg2")).json["injective_dimension"] == "0");
        auto eps = command("resolve", 2);
        eps.module = "quotient-eps";
        eps.n_max = 3;
        CHECK(run(eps, read("truncated_x2")).json["bimodule_resolution"]["pdim"] == "2");
        auto idim = command("verify idim", 2);
        CHECK(find(run(idim, read("fg2")), "idim").status_string() == "PASS");
        CHECK(run(command("check stacked", 2), read("fg2")).exit_code == 0);
        CHECK(run(command("verify bimodule", 2), read("example_1_5")).exit_code == 0);
        CHECK(run(command("verify stratifying", 3), read("fg2")).exit_code == 0);
    }

    TEST_CASE("errors") {
        CHECK_THROWS_AS(run(command("basis"), "vertices v\narrow x : v -> v\nrelation x*z\n"), ParseError);
        CHECK_THROWS_AS(run(command("frobnicate"), read("fg2")), qstretch::Error);
        CHECK_THROWS_AS(run(command("stretch", 0), read("fg2")), qstretch::Error);
        CHECK_THROWS_AS(run(command("basis"), "vertices v\narrow x : v -> v\n"), qstretch::Error);
    }
}
