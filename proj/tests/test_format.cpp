#include <doctest.h>

#include "fixtures.hpp"
#include "hyperalg/enumerate.hpp"
#include "hyperalg/format.hpp"
#include "hyperalg/report.hpp"

using namespace hyperalg;
using namespace fixtures;

namespace {

const char* const c2_file = "hypergroup v1\n"
                            "name C2\n"
                            "order 2\n"
                            "cell 0 0 : 0\n"
                            "cell 0 1 : 1\n"
                            "cell 1 0 : 1\n"
                            "cell 1 1 : 0\n";

FormatErrorKind kind_of(std::string_view text) {
    try {
        parse_hypergroup(text);
    } catch (const FormatError& e) {
        return e.kind();
    }
    FAIL("parsed");
    return FormatErrorKind::syntax_error;
}

std::size_t line_of(std::string_view text) {
    try {
        parse_hypergroup(text);
    } catch (const FormatError& e) {
        return e.line();
    }
    return 0;
}

} // namespace

TEST_CASE("C2 round trip is byte exact") {
    const auto parsed = parse_hypergroup(c2_file);
    CHECK(parsed.name == "C2");
    CHECK(parsed.hypergroup == c2_thin());
    CHECK(serialize_hypergroup(parsed.hypergroup, parsed.name) == c2_file);
}

TEST_CASE("comments, blank lines and cell order are free") {
    const auto parsed = parse_hypergroup("# order-2, a.a = {1,a}\n\n"
                                         "hypergroup v1\nname nonthin   # trailing\norder 2\n"
                                         "cell 1 1 : 0 1\n\ncell 0 0 : 0\ncell 1 0 : 1\ncell 0 1 : 1\n");
    CHECK(parsed.hypergroup == order2_nonthin());
    CHECK(serialize_hypergroup(parsed.hypergroup, "nonthin") ==
          "hypergroup v1\nname nonthin\norder 2\ncell 0 0 : 0\ncell 0 1 : 1\ncell 1 0 : 1\ncell 1 1 : 0 1\n");
}

TEST_CASE("format errors") {
    const std::string head = "hypergroup v1\nname x\norder 2\n";
    CHECK(kind_of(head + "cell 0 0 : 0\ncell 0 1 : 1\ncell 1 0 : 1\n") == FormatErrorKind::missing_cell);
    CHECK(kind_of(head + "cell 0 0 : 0\ncell 0 0 : 0\n") == FormatErrorKind::duplicate_cell);
    CHECK(line_of(head + "cell 0 0 : 0\ncell 0 0 : 0\n") == 5);
    CHECK(kind_of(head + "cell 0 2 : 0\n") == FormatErrorKind::index_out_of_range);
    CHECK(kind_of(head + "cell 0 1 : 2\n") == FormatErrorKind::index_out_of_range);
    CHECK(kind_of(head + "cell 0 1 : 1 0\n") == FormatErrorKind::syntax_error);
    CHECK(kind_of(head + "cell 0 1 : 1 1\n") == FormatErrorKind::syntax_error);
    CHECK(kind_of(head + "cell 0 1 1\n") == FormatErrorKind::syntax_error);
    CHECK(kind_of(head + "cell 0 x : 1\n") == FormatErrorKind::syntax_error);
    CHECK(kind_of("hypergroup v2\nname x\norder 2\n") == FormatErrorKind::syntax_error);
    CHECK(kind_of("hypergroup v1\norder 2\nname x\n") == FormatErrorKind::syntax_error);
    CHECK(kind_of("hypergroup v1\nname x\norder 0\n") == FormatErrorKind::syntax_error);
    CHECK(kind_of("hypergroup v1\nname x\norder 65\n") == FormatErrorKind::syntax_error);
    CHECK(kind_of("") == FormatErrorKind::syntax_error);
}

TEST_CASE("axiom failures point at the witness cell") {
    const std::string text = "hypergroup v1\nname bad\norder 2\n"
                             "cell 0 0 : 0\ncell 0 1 : 1\ncell 1 0 : 1\ncell 1 1 : 1\n";
    CHECK(kind_of(text) == FormatErrorKind::invalid_hypergroup);
    CHECK(line_of(text) == 6); // row 1 starts at cell (1,0)
    try {
        parse_hypergroup(text);
    } catch (const FormatError& e) {
        CHECK(std::string(e.what()).find("NoInverse(1)") != std::string::npos);
    }
}

TEST_CASE("round trip on every enumerated table and group import") {
    std::vector<Hypergroup> corpus;
    for (std::size_t n = 2; n <= 4; ++n)
        for (auto& h : enumerate_hypergroups(n, false).hypergroups) corpus.push_back(std::move(h));
    for (const auto& g : builtin_groups(60)) corpus.push_back(from_group(g));
    for (const auto& h : corpus) {
        const auto text = serialize_hypergroup(h, "h");
        const auto back = parse_hypergroup(text);
        CHECK(back.hypergroup == h);
        CHECK(serialize_hypergroup(back.hypergroup, back.name) == text);
    }
}

TEST_CASE("group files") {
    const auto s3 = builtin_group("S3");
    const auto text = serialize_group(s3);
    const auto back = parse_group(text);
    CHECK(back.name == "S3");
    CHECK(back.mul == s3.mul);
    CHECK(serialize_group(back) == text);
    const std::string broken = "group v1\nname bad\norder 2\nrow 0 : 0 1\nrow 1 : 1 1\n";
    try {
        parse_group(broken);
        FAIL("parsed");
    } catch (const FormatError& e) {
        CHECK(e.kind() == FormatErrorKind::not_a_group);
    }
    try {
        parse_group("group v1\nname g\norder 2\nrow 0 : 0 1\n");
        FAIL("parsed");
    } catch (const FormatError& e) {
        CHECK(e.kind() == FormatErrorKind::missing_cell);
    }
}

TEST_CASE("machine report") {
    const auto report = make_report(Analysis{order2_nonthin()}, "nonthin");
    const auto text = render_machine(report);
    CHECK(text.find("axioms = ok\n") != std::string::npos);
    CHECK(*report.get("thin_part") == "0");
    CHECK(*report.get("closed_subsets") == "2");
    CHECK(*report.get("nilpotent") == "no");
    CHECK(*report.get("inv_hypercenter") == "0,1");
    CHECK(*report.get("thin_residue") == "0,1");
    CHECK(*report.get("solvable") == "no");
    CHECK(*report.get("rt") == "no");
    CHECK(*report.get("verify.thm-ct") == "holds");
    CHECK(report.violated == 0);

    const auto c6 = make_report(Analysis{group("C6")}, "C6");
    CHECK(*c6.get("nilpotency_class") == "1");
    CHECK(*c6.get("solvable.chain.0") == "0");
    CHECK(*c6.get("valency") == "6");
    CHECK(*c6.get("sylow.2.0") == "0,3");
    CHECK(*c6.get("sylow.3.0") == "0,2,4");
    CHECK(c6.get("no-such-key") == nullptr);
    CHECK(render_text(c6).find("sylow:\n") != std::string::npos);
}
