#include <doctest.h>

#include "ctab/errors.hpp"
#include "ctab/eval.hpp"
#include "ctab/laws.hpp"
#include "ctab/parser.hpp"
#include "support/build.hpp"
#include "support/random_logic.hpp"

using namespace ctab;
using testing::row;
using testing::table;
using testing::v;

namespace {

Structure small_structure() {
    Relation r;
    r.arity = 2;
    r.tuples = {{Value("a"), Value("b")}};
    return Structure::make(Base::letters("ab"), {{"R", r}});
}

}  // namespace

TEST_CASE("parsing atoms") {
    CHECK(parse_formula("x1 = x2") == Formula::eq(v(1), v(2)));
    CHECK(parse_formula("true") == Formula::truth());
    CHECK(parse_formula("false") == Formula::falsity());
    CHECK(parse_formula("R(x1, x2)") == Formula::rel("R", {v(1), v(2)}));
    CHECK(parse_formula("R(x1, x1)") == Formula::rel("R", {v(1), v(1)}));
    CHECK(parse_formula("y = z") ==
          Formula::eq(Variable::named("y"), Variable::named("z")));
}

TEST_CASE("parsing precedence and quantifiers") {
    Formula f = parse_formula("exists x2 . R(x1,x2) & x2 = x3");
    CHECK(f == Formula::exists(v(2), Formula::conj(Formula::rel("R", {v(1), v(2)}),
                                                   Formula::eq(v(2), v(3)))));

    CHECK(parse_formula("exists x1, x2 . true") ==
          Formula::exists(v(1), Formula::exists(v(2), Formula::truth())));

    // '&' is left-associative.
    CHECK(parse_formula("true & false & true") ==
          Formula::conj(Formula::conj(Formula::truth(), Formula::falsity()),
                        Formula::truth()));

    // Parentheses confine the quantifier.
    CHECK(parse_formula("(exists x1 . x1 = x2) & x2 = x2") ==
          Formula::conj(Formula::exists(v(1), Formula::eq(v(1), v(2))),
                        Formula::eq(v(2), v(2))));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_WITH_AS(parse_formula("x1 ="), doctest::Contains("1:5"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_formula("exists . true"),
                         doctest::Contains("expected a variable"), ParseError);
    CHECK_THROWS_WITH_AS(parse_formula("R(x1"), doctest::Contains("')'"),
                         ParseError);
    CHECK_THROWS_AS(parse_formula("x1 = x2 x3"), ParseError);
    CHECK_THROWS_AS(parse_formula("x1 ? x2"), ParseError);
    CHECK_THROWS_AS(parse_formula(""), ParseError);
    try {
        parse_formula("x1 =\n= x2");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 1);
    }
}

TEST_CASE("printing round-trips") {
    laws::Rng rng(61);
    Structure s = small_structure();
    for (int i = 0; i < 200; ++i) {
        Formula f = testing::gen_formula(rng, s, laws::default_pool(), 4);
        CHECK(parse_formula(f.to_string()) == f);
    }
    CHECK(parse_formula("exists x1, x2 . true").to_string() ==
          "exists x1, x2 . true");
}

TEST_CASE("free variables") {
    CHECK(Formula::truth().free_variables().empty());
    CHECK(Formula::falsity().free_variables().empty());
    CHECK(parse_formula("exists x2 . R(x1,x2) & x2 = x3").free_variables() ==
          VarSet{v(1), v(3)});
    // The bound occurrence shadows; nothing stays free.
    CHECK(parse_formula("exists x1 . x1 = x1").free_variables().empty());
    CHECK(parse_formula("x1 = x1 & (exists x1 . true)").free_variables() ==
          VarSet{v(1)});
}

TEST_CASE("evaluation of the worked example") {
    Structure s = small_structure();
    TableAlgebra alg(s.base());
    Formula f = parse_formula("exists x2 . R(x1,x2)");
    Table expected = table({1}, {row({{1, "a"}})});
    CHECK(evaluate_oracle(f, s) == expected);
    CHECK(evaluate(f, s, alg) == expected);
}

TEST_CASE("evaluation of atoms") {
    Structure s = small_structure();
    TableAlgebra alg(s.base());

    CHECK(evaluate(parse_formula("x1 = x2"), s, alg) ==
          alg.equality_table(v(1), v(2)));
    CHECK(evaluate(parse_formula("true"), s, alg) == Table::unit());
    CHECK(evaluate(parse_formula("false"), s, alg) == Table::empty());
    CHECK(evaluate(parse_formula("R(x1, x2)"), s, alg) ==
          table({1, 2}, {row({{1, "a"}, {2, "b"}})}));

    // A repeated argument keeps only the consistent tuples: (a,b) never
    // assigns x1 twice the same value, so the atom is unsatisfiable.
    CHECK(evaluate(parse_formula("R(x1, x1)"), s, alg) == Table::empty());
    CHECK(evaluate_oracle(parse_formula("R(x1, x1)"), s) == Table::empty());

    SUBCASE("repeated arguments with a diagonal tuple") {
        Relation r;
        r.arity = 2;
        r.tuples = {{Value("a"), Value("a")}, {Value("a"), Value("b")}};
        Structure s2 = Structure::make(Base::letters("ab"), {{"R", r}});
        Table expected = table({1}, {row({{1, "a"}})});
        CHECK(evaluate(parse_formula("R(x1, x1)"), s2, TableAlgebra(s2.base())) ==
              expected);
        CHECK(evaluate_oracle(parse_formula("R(x1, x1)"), s2) == expected);
    }
}

TEST_CASE("evaluation errors") {
    Structure s = small_structure();
    TableAlgebra alg(s.base());
    CHECK_THROWS_WITH_AS(evaluate(parse_formula("S(x1)"), s, alg),
                         doctest::Contains("S(x1)"), EvalError);
    CHECK_THROWS_WITH_AS(evaluate(parse_formula("R(x1)"), s, alg),
                         doctest::Contains("arity"), EvalError);
    CHECK_THROWS_AS(evaluate_oracle(parse_formula("exists x1 . S(x1)"), s),
                    EvalError);
    CHECK_THROWS_AS(evaluate(parse_formula("true"), s,
                             TableAlgebra(Base::letters("abc"))),
                    EvalError);
}

TEST_CASE("oracle edge cases") {
    Structure s = small_structure();
    // No free variables and satisfiable: the unit table.
    CHECK(evaluate_oracle(parse_formula("exists x1, x2 . R(x1, x2)"), s) ==
          Table::unit());
    // Unsatisfiable atom over an empty relation.
    Relation empty_rel;
    empty_rel.arity = 1;
    Structure s2 = Structure::make(Base::letters("ab"), {{"Q", empty_rel}});
    CHECK(evaluate_oracle(parse_formula("Q(x1)"), s2) == Table::empty());
}

TEST_CASE("quantifying an absent variable is the identity") {
    Structure s = small_structure();
    TableAlgebra alg(s.base());
    Formula body = parse_formula("R(x1, x2)");
    Table t = evaluate(body, s, alg);
    CHECK(evaluate(Formula::exists(v(4), body), s, alg) == t);
    CHECK(evaluate_oracle(Formula::exists(v(4), body), s) == t);
}

TEST_CASE("evaluator agrees with the direct semantics") {
    laws::Rng rng(67);
    int checked = 0;
    for (int i = 0; i < 150; ++i) {
        Structure s = testing::gen_structure(rng);
        TableAlgebra alg(s.base());
        Formula f =
            testing::gen_formula(rng, s, laws::default_pool(), 4);
        Table compiled = evaluate(f, s, alg);
        Table direct = evaluate_oracle(f, s);
        CAPTURE(f.to_string());
        CHECK(compiled == direct);
        if (!compiled.is_empty())
            CHECK(compiled.columns() == f.free_variables());
        ++checked;
    }
    CHECK(checked == 150);
}

TEST_CASE("compilation is compositional") {
    laws::Rng rng(71);
    for (int i = 0; i < 100; ++i) {
        Structure s = testing::gen_structure(rng);
        TableAlgebra alg(s.base());
        Formula f = testing::gen_formula(rng, s, laws::default_pool(), 2);
        Formula g = testing::gen_formula(rng, s, laws::default_pool(), 2);
        Variable x = laws::gen_var(rng, laws::default_pool());
        CHECK(evaluate(Formula::conj(f, g), s, alg) ==
              join(evaluate(f, s, alg), evaluate(g, s, alg)));
        CHECK(evaluate(Formula::exists(x, f), s, alg) ==
              delete_column(x, evaluate(f, s, alg)));
    }
}
