#include <doctest.h>

#include <random>

#include "arrbound/arrangement.hpp"
#include "oracles.hpp"

using namespace arrbound;

TEST_CASE("parse a small central arrangement") {
    auto a = parse_arrangement("vars: x y z\nx\ny\nz\nx+y+z\n");
    CHECK(a.ambient_dim == 3);
    CHECK(a.d() == 4);
    CHECK(a.forms[3].coeffs == std::vector<Int>{1, 1, 1});
}

TEST_CASE("parser accepts comments, blank lines, rationals, and vectors") {
    auto a = parse_arrangement(
        "# a comment\n\nvars: x y z\n\n1/2x + y\n[1, -2, 1]\n2*x - 4z\n# done\n");
    CHECK(a.d() == 3);
    CHECK(a.forms[0].coeffs == std::vector<Int>{1, 2, 0});
    CHECK(a.forms[1].coeffs == std::vector<Int>{1, -2, 1});
    CHECK(a.forms[2].coeffs == std::vector<Int>{1, 0, -2});
}

TEST_CASE("four-variable input") {
    auto a = parse_arrangement("vars: x y z w\nx\nw\nx - 3/2w\n");
    CHECK(a.ambient_dim == 4);
    CHECK(a.forms[2].coeffs == std::vector<Int>{2, 0, 0, -3});
}

TEST_CASE("parser error cases carry kind and location") {
    auto kind_of = [](const std::string& text) {
        try {
            parse_arrangement(text);
        } catch (const parse_error& e) {
            return e.error_kind;
        }
        return parse_error::kind::syntax;  // unreachable for the inputs below
    };
    CHECK(kind_of("vars: x y z\nx\n2x\n") == parse_error::kind::duplicate_hyperplane);
    CHECK(kind_of("vars: x y z\nx\n-x\n") == parse_error::kind::duplicate_hyperplane);
    CHECK(kind_of("vars: x y z\nx+1\n") == parse_error::kind::non_homogeneous);
    CHECK(kind_of("vars: x y z\nx - x\n") == parse_error::kind::zero_form);
    CHECK(kind_of("vars: x y\nx\n") == parse_error::kind::bad_variable_count);
    CHECK(kind_of("vars: x y z v w\nx\n") == parse_error::kind::bad_variable_count);
    CHECK(kind_of("vars: x y z\nx + q\n") == parse_error::kind::syntax);
    CHECK(kind_of("vars: x y z\nx ++ y\n") == parse_error::kind::syntax);
    CHECK(kind_of("vars: x y z\n[1,2]\n") == parse_error::kind::syntax);
    CHECK(kind_of("x\ny\n") == parse_error::kind::syntax);  // missing header
    CHECK_THROWS_AS(parse_arrangement("vars: x y z\n"), parse_error);  // no forms

    try {
        parse_arrangement("vars: x y z\nx\ny + 3\n");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.error_kind == parse_error::kind::non_homogeneous);
        CHECK(e.line == 3);
        CHECK(e.column == 5);
    }
}

TEST_CASE("normalization is scale- and sign-invariant, and idempotent") {
    auto a = parse_arrangement("vars: x y z\n2x - 4y\n");
    auto b = parse_arrangement("vars: x y z\nx - 2y\n");
    auto c = parse_arrangement("vars: x y z\n-1/3x + 2/3y\n");
    CHECK(a.forms[0] == b.forms[0]);
    CHECK(c.forms[0].coeffs == std::vector<Int>{1, -2, 0});
    auto renorm = LinearForm::from_rationals(
        {Rational(a.forms[0].coeffs[0]), Rational(a.forms[0].coeffs[1]), Rational(a.forms[0].coeffs[2])});
    CHECK(renorm == a.forms[0]);
}

TEST_CASE("print then parse is the identity on normalized arrangements") {
    std::mt19937 rng(23);
    for (int round = 0; round < 40; ++round) {
        int ambient = round % 2 ? 3 : 4;
        auto a = oracle::random_arrangement(rng, ambient, 1 + static_cast<int>(rng() % 7));
        auto b = parse_arrangement(print_arrangement(a));
        CHECK(a.forms == b.forms);
        CHECK(a.var_names == b.var_names);
    }
}

TEST_CASE("builtin arrangements have the documented sizes") {
    CHECK(builtin("A3").d() == 6);
    CHECK(builtin("B3").d() == 9);
    CHECK(builtin("ex52").d() == 6);
    CHECK(builtin("pappus1").d() == 9);
    CHECK(builtin("pappus2").d() == 9);
    CHECK(builtin("boolean3").d() == 3);
    CHECK(builtin("boolean4").d() == 4);
    CHECK(builtin("boolean4").ambient_dim == 4);
    CHECK(builtin("pencil(2)").d() == 2);
    CHECK(builtin("pencil(7)").d() == 7);
    CHECK(builtin("generic4(5)").d() == 5);
    CHECK(builtin("generic4(5)").ambient_dim == 4);
    CHECK_THROWS_AS(builtin("nope"), unknown_example);
    CHECK_THROWS_AS(builtin("pencil(1)"), unknown_example);
    CHECK_THROWS_AS(builtin("pencil(x)"), unknown_example);
    CHECK_THROWS_AS(builtin("generic4(0)"), unknown_example);
}

TEST_CASE("pencil forms all contain the common line x=y=0") {
    for (int k : {2, 3, 4, 6}) {
        auto a = builtin("pencil(" + std::to_string(k) + ")");
        REQUIRE(a.d() == k);
        for (const auto& f : a.forms) CHECK(f.coeffs[2] == 0);
    }
}
