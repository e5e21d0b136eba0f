#include <doctest.h>

#include "ctab/algebra.hpp"
#include "ctab/errors.hpp"
#include "ctab/laws.hpp"
#include "support/build.hpp"
#include "support/oracles.hpp"

using namespace ctab;
using testing::join_oracle;
using testing::row;
using testing::table;
using testing::v;

namespace {
const Base kAB = Base::letters("ab");
const TableAlgebra kAlg(kAB);
}  // namespace

TEST_CASE("join absorbs the empty table and is idempotent") {
    Table t = table({1}, {row({{1, "a"}})});
    CHECK(join(t, Table::empty()) == Table::empty());
    CHECK(join(Table::empty(), t) == Table::empty());
    CHECK(join(t, t) == t);
    CHECK(join(t, Table::unit()) == t);
    CHECK(join(Table::unit(), Table::unit()) == Table::unit());
}

TEST_CASE("join on disjoint schemas is the cross product") {
    Table t1 = table({1}, {row({{1, "a"}})});
    Table t2 = table({2}, {row({{2, "a"}}), row({{2, "b"}})});
    Table expected = table({1, 2}, {row({{1, "a"}, {2, "a"}}),
                                    row({{1, "a"}, {2, "b"}})});
    CHECK(join_oracle(t1, t2, kAB) == expected);
    CHECK(join(t1, t2) == expected);
}

TEST_CASE("join filters on shared columns") {
    Table t1 = table({1, 2}, {row({{1, "a"}, {2, "a"}}),
                              row({{1, "b"}, {2, "b"}})});
    Table t2 = table({2, 3}, {row({{2, "a"}, {3, "b"}})});
    Table expected = table({1, 2, 3}, {row({{1, "a"}, {2, "a"}, {3, "b"}})});
    CHECK(join(t1, t2) == expected);
    CHECK(join_oracle(t1, t2, kAB) == expected);
}

TEST_CASE("hash join matches the enumerate-and-filter definition") {
    laws::Rng rng(23);
    for (const char* letters : {"a", "ab", "abc"}) {
        Base base = Base::letters(letters);
        for (int i = 0; i < 100; ++i) {
            Table t1 = laws::gen_table(rng, laws::default_pool(), base);
            Table t2 = laws::gen_table(rng, laws::default_pool(), base);
            CHECK(join(t1, t2) == join_oracle(t1, t2, base));
        }
    }
}

TEST_CASE("column deletion") {
    CHECK(delete_column(v(1), Table::empty()) == Table::empty());

    Table t = table({1, 2}, {row({{1, "a"}, {2, "a"}}),
                             row({{1, "a"}, {2, "b"}})});
    CHECK(delete_column(v(3), t) == t);  // absent column: unchanged
    CHECK(delete_column(v(2), t) == table({1}, {row({{1, "a"}})}));

    SUBCASE("generalized deletion") {
        CHECK(delete_columns({}, t) == t);
        CHECK(delete_columns({v(1), v(2)}, t) ==
              delete_columns({v(2), v(1)}, t));
        CHECK(delete_columns(t.columns(), t) == Table::unit());
    }
}

TEST_CASE("equality tables") {
    CHECK(kAlg.equality_table(v(1), v(1)) ==
          table({1}, {row({{1, "a"}}), row({{1, "b"}})}));
    CHECK(kAlg.equality_table(v(1), v(2)) ==
          table({1, 2}, {row({{1, "a"}, {2, "a"}}),
                         row({{1, "b"}, {2, "b"}})}));
    CHECK(TableAlgebra(Base()).equality_table(v(1), v(2)) == Table::empty());
}

TEST_CASE("generalized equality tables") {
    CHECK(kAlg.equality_table(std::vector<VarPair>{}) == Table::unit());

    std::vector<VarPair> chain{{v(1), v(2)}, {v(2), v(3)}};
    Table expected = table({1, 2, 3}, {row({{1, "a"}, {2, "a"}, {3, "a"}}),
                                       row({{1, "b"}, {2, "b"}, {3, "b"}})});
    CHECK(kAlg.equality_table(chain) == expected);
    CHECK(kAlg.equality_table(chain) ==
          join_oracle(kAlg.equality_table(v(1), v(2)),
                      kAlg.equality_table(v(2), v(3)), kAB));

    SUBCASE("nonempty over a nonempty base") {
        laws::Rng rng(29);
        for (int i = 0; i < 100; ++i) {
            std::vector<VarPair> rho;
            for (std::uint64_t k = rng.below(5); k > 0; --k)
                rho.emplace_back(laws::gen_var(rng, laws::default_pool()),
                                 laws::gen_var(rng, laws::default_pool()));
            CHECK_FALSE(kAlg.equality_table(rho).is_empty());
        }
    }
}

TEST_CASE("projection") {
    Table t = table({1, 2}, {row({{1, "a"}, {2, "b"}})});
    CHECK(project(t.columns(), t) == t);
    CHECK(project({}, t) == Table::unit());
    CHECK(project({v(1)}, t) == table({1}, {row({{1, "a"}})}));
    CHECK(project({v(3)}, Table::empty()) == Table::empty());
    CHECK_THROWS_WITH_AS(project({v(1), v(3)}, t), doctest::Contains("x3"),
                         SchemaError);
}

TEST_CASE("duplication") {
    CHECK(kAlg.duplicate(v(1), v(2), table({1}, {row({{1, "a"}})})) ==
          table({1, 2}, {row({{1, "a"}, {2, "a"}})}));
    CHECK(kAlg.duplicate(v(1), v(2), Table::empty()) == Table::empty());

    SUBCASE("delete of the copy restores the table") {
        laws::Rng rng(31);
        for (int i = 0; i < 100; ++i) {
            Table t = laws::gen_table(rng, laws::default_pool(), kAB);
            if (t.is_empty() || t.columns().empty()) continue;
            Variable x = laws::gen_var(rng, t.columns());
            VarSet outside = laws::default_pool().minus(t.columns());
            if (outside.empty()) continue;
            Variable y = laws::gen_var(rng, outside);
            CHECK(delete_column(y, kAlg.duplicate(x, y, t)) == t);
        }
    }

    SUBCASE("preconditions") {
        Table t = table({1}, {row({{1, "a"}})});
        CHECK_THROWS_AS(kAlg.duplicate(v(1), v(1), t), SchemaError);
        CHECK_THROWS_AS(kAlg.duplicate(v(2), v(3), t), SchemaError);
        CHECK_THROWS_AS(kAlg.duplicate(v(1), v(1), Table::empty()),
                        SchemaError);
        Table t2 = table({1, 2}, {row({{1, "a"}, {2, "b"}})});
        CHECK_THROWS_AS(kAlg.duplicate(v(1), v(2), t2), SchemaError);
    }
}

TEST_CASE("renaming") {
    Table t = table({1}, {row({{1, "a"}})});
    CHECK(kAlg.rename(v(1), v(2), t) == table({2}, {row({{2, "a"}})}));
    CHECK(kAlg.rename(v(2), v(1), kAlg.rename(v(1), v(2), t)) == t);
    CHECK(kAlg.rename(v(1), v(2), Table::empty()) == Table::empty());
    CHECK_THROWS_AS(kAlg.rename(v(3), v(2), t), SchemaError);
}

TEST_CASE("equality selection") {
    Table t = table({1, 2}, {row({{1, "a"}, {2, "b"}}),
                             row({{1, "a"}, {2, "a"}})});
    CHECK(select_eq(v(1), v(1), t) == t);
    CHECK(select_eq(v(1), v(2), t) == table({1, 2}, {row({{1, "a"}, {2, "a"}})}));
    CHECK(select_eq(v(1), v(2), t) == join(t, kAlg.equality_table(v(1), v(2))));
    CHECK(select_eq(v(1), v(2), Table::empty()) == Table::empty());
    CHECK_THROWS_AS(select_eq(v(1), v(3), t), SchemaError);

    // The interdefinability identity, on a worked instance.
    CHECK(select_eq(v(1), v(2), t) ==
          join(t, kAlg.duplicate(v(1), v(2), project({v(1)}, t))));
}

TEST_CASE("constant selection") {
    Table t = table({1}, {row({{1, "a"}}), row({{1, "b"}})});
    CHECK(kAlg.select_const(v(1), Value("a"), t) == table({1}, {row({{1, "a"}})}));
    CHECK(kAlg.select_const(v(1), Value("a"), Table::empty()) == Table::empty());
    CHECK(kAlg.select_const(v(1), Value("a"), table({1}, {row({{1, "b"}})})) ==
          Table::empty());
    CHECK_THROWS_AS(kAlg.select_const(v(1), Value("z"), t), ValueError);
    CHECK_THROWS_AS(kAlg.select_const(v(2), Value("a"), t), SchemaError);
}

TEST_CASE("table order") {
    Table t = table({1}, {row({{1, "a"}})});
    CHECK(table_leq(Table::empty(), t));
    CHECK(table_leq(t, Table::unit()));
    CHECK_FALSE(table_leq(Table::unit(), Table::empty()));

    Table t1 = table({1, 2}, {row({{1, "a"}, {2, "a"}})});
    Table t2 = table({1}, {row({{1, "a"}})});
    CHECK(table_leq(t1, t2));
    // Characterization: schema containment plus projected rows.
    CHECK(t2.columns().subset_of(t1.columns()));
    CHECK(t2.contains_row(t1.rows()[0].restricted(t2.columns())));
    CHECK_FALSE(table_leq(t2, t1));
}

TEST_CASE("domain and dimension") {
    CHECK(dom(Table::empty()).is_all());
    CHECK(dim(Table::empty()).empty());
    CHECK(dim(Table::unit()).empty());

    Table t = table({2, 4}, {row({{2, "a"}, {4, "b"}})});
    CHECK(dom(t) == Schema::finite({v(2), v(4)}));
    CHECK(dim(t) == t.columns());
    CHECK(dim(t, {v(1), v(2), v(3)}) == VarSet{v(2)});

    SUBCASE("dimension equals the schema on random tables") {
        laws::Rng rng(37);
        for (int i = 0; i < 100; ++i) {
            Table u = laws::gen_table(rng, laws::default_pool(), kAB);
            if (u.is_empty()) continue;
            VarSet probe = u.columns();
            for (Variable x : fresh_variables(probe, 2)) probe = probe.with(x);
            CHECK(dim(u, probe) == u.columns());
        }
    }
}

TEST_CASE("degenerate base") {
    TableAlgebra degenerate((Base()));
    CHECK(degenerate.equality_table(v(1), v(1)) == Table::empty());
    CHECK(degenerate.bottom() == Table::empty());
    CHECK(degenerate.top() == Table::unit());
    // Only the two constants are expressible over the empty base.
    CHECK(enumerate_tuples({v(1)}, Base()).empty());
    CHECK(enumerate_tuples({}, Base()).size() == 1);
}
