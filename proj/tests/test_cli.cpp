#include <doctest.h>

#include <regex>
#include <unistd.h>

#include "cli_runner.hpp"
#include "hyperalg/format.hpp"

using namespace hyperalg;

TEST_CASE("enumerate writes one file per survivor and a summary") {
    cli::ScratchDir dir{"enum"};
    const auto r = cli::run("enumerate --order 2 --out " + dir.file("out"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("candidates=3 survivors=2 rejects=1\n") != std::string::npos);
    std::size_t files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir.file("out"))) {
        ++files;
        CHECK_NOTHROW(parse_hypergroup(read_file(entry.path().string())));
    }
    CHECK(files == 2);
    const auto canonical = cli::run("enumerate --order 3 --canonical");
    CHECK(canonical.output.find("survivors=15") != std::string::npos);
    CHECK(canonical.output.find("classes=10") != std::string::npos);
    CHECK(cli::run("enumerate --order 3 --strategy naive").output.find("survivors=15") != std::string::npos);
}

TEST_CASE("check") {
    cli::ScratchDir dir{"check"};
    write_file(dir.file("c2.hg"), "hypergroup v1\nname C2\norder 2\ncell 0 0 : 0\ncell 0 1 : 1\ncell 1 0 : 1\ncell 1 1 : 0\n");
    const auto ok = cli::run("check " + dir.file("c2.hg"));
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("axioms = ok") != std::string::npos);

    // C3 with 1.1 enlarged to {1,2}
    write_file(dir.file("bad.hg"), "hypergroup v1\nname bad\norder 3\n"
                                   "cell 0 0 : 0\ncell 0 1 : 1\ncell 0 2 : 2\n"
                                   "cell 1 0 : 1\ncell 1 1 : 1 2\ncell 1 2 : 0\n"
                                   "cell 2 0 : 2\ncell 2 1 : 0\ncell 2 2 : 1\n");
    const auto bad = cli::run("check " + dir.file("bad.hg"));
    CHECK(bad.exit_code == 1);
    CHECK(std::regex_search(bad.output, std::regex{R"(Violation\(\d+,\d+,\d+\))"}));
    CHECK(cli::run("check " + dir.file("missing.hg")).exit_code == 1);
}

TEST_CASE("analyze") {
    cli::ScratchDir dir{"analyze"};
    write_file(dir.file("n.hg"), "hypergroup v1\nname n\norder 2\ncell 0 0 : 0\ncell 0 1 : 1\ncell 1 0 : 1\ncell 1 1 : 0 1\n");
    const auto machine = cli::run("analyze " + dir.file("n.hg") + " --report machine");
    CHECK(machine.exit_code == 0);
    CHECK(machine.output.find("inv_hypercenter = 0,1\n") != std::string::npos);
    CHECK(machine.output.find("nilpotent = no\n") != std::string::npos);
    const auto text = cli::run("analyze " + dir.file("n.hg"));
    CHECK(text.exit_code == 0);
    CHECK(text.output.find("verify:\n") != std::string::npos);
    CHECK(cli::run("analyze " + dir.file("n.hg") + " --report xml").exit_code == 2);
}

TEST_CASE("quotient") {
    cli::ScratchDir dir{"quotient"};
    const auto s3 = cli::run("from-group --builtin S3");
    REQUIRE(s3.exit_code == 0);
    write_file(dir.file("s3.hg"), s3.output);
    const auto q = cli::run("quotient " + dir.file("s3.hg") + " --kernel 0,1,2");
    CHECK(q.exit_code == 0);
    const auto parsed = parse_hypergroup(q.output);
    CHECK(parsed.hypergroup.order() == 2);
    CHECK(is_thin(parsed.hypergroup));
    CHECK(cli::run("quotient " + dir.file("s3.hg") + " --kernel 0,1").exit_code == 1);
    CHECK(cli::run("quotient " + dir.file("s3.hg") + " --kernel 0,9").exit_code == 2);
}

TEST_CASE("from-group") {
    cli::ScratchDir dir{"group"};
    write_file(dir.file("c2.grp"), "group v1\nname C2\norder 2\nrow 0 : 0 1\nrow 1 : 1 0\n");
    const auto ok = cli::run("from-group " + dir.file("c2.grp"));
    CHECK(ok.exit_code == 0);
    CHECK(ok.output == "hypergroup v1\nname C2\norder 2\ncell 0 0 : 0\ncell 0 1 : 1\ncell 1 0 : 1\ncell 1 1 : 0\n");
    write_file(dir.file("bad.grp"), "group v1\nname bad\norder 2\nrow 0 : 0 1\nrow 1 : 1 1\n");
    const auto bad = cli::run("from-group " + dir.file("bad.grp"));
    CHECK(bad.exit_code == 1);
    CHECK(bad.output.find("NotAGroup") != std::string::npos);
    CHECK(cli::run("from-group --builtin A5").exit_code == 0);
    CHECK(cli::run("from-group --builtin Z99").exit_code == 2);
}

TEST_CASE("verify") {
    const auto r = cli::run("verify --order 3 --groups-up-to 8");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("violated = 0\n") != std::string::npos);
    const auto some = cli::run("verify --order 2 --groups-up-to 4 --statements thm-center,lem-com");
    CHECK(some.exit_code == 0);
    CHECK(some.output.find("lem-com: holds=") != std::string::npos);
    CHECK(cli::run("verify --statements bogus").exit_code == 2);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(cli::run("").exit_code == 2);
    CHECK(cli::run("frobnicate").exit_code == 2);
    CHECK(cli::run("check").exit_code == 2);
    CHECK(cli::run("enumerate --order 7").exit_code == 2);
    CHECK(cli::run("enumerate --order 2 --bogus").exit_code == 2);
    CHECK(cli::run("enumerate --order 2", "HYPERALG_JOBS=0").exit_code == 2);
    CHECK(cli::run("enumerate --order 2", "HYPERALG_JOBS=2").exit_code == 0);
    CHECK(cli::run("--help").exit_code == 0);
}
