#include <doctest.h>

#include "ctab/errors.hpp"
#include "ctab/laws.hpp"
#include "ctab/mapping.hpp"
#include "ctab/transform.hpp"
#include "support/build.hpp"

using namespace ctab;
using testing::row;
using testing::table;
using testing::v;

namespace {
const Base kAB = Base::letters("ab");
const TableAlgebra kAlg(kAB);

Mapping constant_map(std::initializer_list<std::uint64_t> dom_ids,
                     std::uint64_t target) {
    std::vector<Variable> dom;
    std::vector<VarPair> graph;
    for (auto k : dom_ids) {
        dom.push_back(v(k));
        graph.emplace_back(v(k), v(target));
    }
    return Mapping::make(VarSet(std::move(dom)), {v(target)}, std::move(graph));
}
}  // namespace

TEST_CASE("mapping construction and classifiers") {
    CHECK_THROWS_AS(Mapping::make({v(1), v(2)}, {v(3)}, {{v(1), v(3)}}),
                    ConstructionError);  // not total
    CHECK_THROWS_AS(Mapping::make({v(1)}, {v(3)}, {{v(1), v(4)}}),
                    ConstructionError);  // lands outside the codomain
    CHECK_THROWS_AS(Mapping::make({v(1)}, {v(3), v(4)},
                                  {{v(1), v(3)}, {v(1), v(4)}}),
                    ConstructionError);  // two images

    Mapping id = Mapping::identity({v(1), v(2)});
    CHECK(id.is_inclusion());
    CHECK(id.is_bijection());
    CHECK(id.is_folding());
    CHECK_FALSE(id.is_domain_disjoint());

    Mapping incl = Mapping::inclusion({v(1)}, {v(1), v(2)});
    CHECK(incl.is_inclusion());
    CHECK_FALSE(incl.is_bijection());
    CHECK_THROWS_AS(Mapping::inclusion({v(3)}, {v(1)}), ConstructionError);

    Mapping swap =
        Mapping::make({v(1), v(2)}, {v(3), v(4)}, {{v(1), v(4)}, {v(2), v(3)}});
    CHECK(swap.is_bijection());
    CHECK(swap.is_domain_disjoint());
    CHECK(swap.inverse()(v(3)) == v(2));
    CHECK_THROWS_AS(constant_map({1, 2}, 3).inverse(), ComposeError);

    Mapping fold = Mapping::make({v(1), v(2)}, {v(1)},
                                 {{v(1), v(1)}, {v(2), v(1)}});
    CHECK(fold.is_folding());
    CHECK_FALSE(fold.is_inclusion());
}

TEST_CASE("mapping composition") {
    Mapping mu = Mapping::make({v(1)}, {v(3)}, {{v(1), v(3)}});
    Mapping nu = Mapping::make({v(3)}, {v(2)}, {{v(3), v(2)}});
    Mapping composed = compose(nu, mu);
    CHECK(composed.dom() == VarSet{v(1)});
    CHECK(composed.cod() == VarSet{v(2)});
    CHECK(composed(v(1)) == v(2));

    CHECK(compose(Mapping::identity(mu.cod()), mu) == mu);
    CHECK(compose(nu, Mapping::identity(nu.dom())) == nu);
    CHECK_THROWS_AS(compose(mu, nu), ComposeError);
}

TEST_CASE("decomposition of mappings") {
    SUBCASE("identity factors into identities") {
        Mapping id = Mapping::identity({v(1), v(2)});
        Decomposition d = decompose(id);
        CHECK(d.folding == id);
        CHECK(d.bijection == id);
        CHECK(d.inclusion == id);
    }

    SUBCASE("constant map folds onto the least fiber element") {
        Decomposition d = decompose(constant_map({1, 2}, 9));
        CHECK(d.folding ==
              Mapping::make({v(1), v(2)}, {v(1)}, {{v(1), v(1)}, {v(2), v(1)}}));
        CHECK(d.bijection == Mapping::make({v(1)}, {v(9)}, {{v(1), v(9)}}));
        CHECK(d.inclusion == Mapping::identity({v(9)}));
    }

    SUBCASE("domain-disjoint bijections pass through") {
        Mapping sigma =
            Mapping::make({v(1), v(2)}, {v(3), v(4)}, {{v(1), v(4)}, {v(2), v(3)}});
        Decomposition d = decompose(sigma);
        CHECK(d.folding == Mapping::identity(sigma.dom()));
        CHECK(d.bijection == sigma);
        CHECK(d.inclusion == Mapping::identity(sigma.cod()));
    }

    SUBCASE("random recomposition") {
        laws::Rng rng(41);
        for (int i = 0; i < 200; ++i) {
            Mapping lambda = laws::gen_mapping(rng, laws::default_pool());
            Decomposition d = decompose(lambda);
            CHECK(d.folding.is_folding());
            CHECK(d.bijection.is_bijection());
            CHECK(d.inclusion.is_inclusion());
            CHECK(compose(d.inclusion, compose(d.bijection, d.folding)) ==
                  lambda);
        }
    }
}

TEST_CASE("outer composition on rows") {
    Table t = table({1}, {row({{1, "a"}}), row({{1, "b"}})});

    SUBCASE("inclusions are projections") {
        Table wide = table({1, 2}, {row({{1, "a"}, {2, "b"}})});
        Mapping iota = Mapping::inclusion({v(1)}, {v(1), v(2)});
        CHECK(table_compose(wide, iota) == project({v(1)}, wide));
    }

    SUBCASE("constant mappings copy the column") {
        Mapping lambda = Mapping::make({v(2), v(3)}, {v(1)},
                                       {{v(2), v(1)}, {v(3), v(1)}});
        CHECK(table_compose(t, lambda) ==
              table({2, 3}, {row({{2, "a"}, {3, "a"}}),
                             row({{2, "b"}, {3, "b"}})}));
    }

    SUBCASE("composition sequentializes") {
        laws::Rng rng(43);
        for (int i = 0; i < 100; ++i) {
            Table u = laws::gen_table(rng, laws::default_pool(), kAB);
            if (u.is_empty()) continue;
            VarSet Z = u.columns();
            VarSet Y = Z.empty() ? VarSet{}
                                 : laws::gen_subset(rng, laws::default_pool());
            std::vector<VarPair> nu_graph;
            for (Variable y : Y) nu_graph.emplace_back(y, laws::gen_var(rng, Z));
            Mapping nu = Mapping::make(Y, Z, std::move(nu_graph));
            VarSet X = Y.empty() ? VarSet{}
                                 : laws::gen_subset(rng, laws::default_pool());
            std::vector<VarPair> mu_graph;
            for (Variable x : X) mu_graph.emplace_back(x, laws::gen_var(rng, Y));
            Mapping mu = Mapping::make(X, Y, std::move(mu_graph));
            CHECK(table_compose(u, compose(nu, mu)) ==
                  table_compose(table_compose(u, nu), mu));
        }
    }

    SUBCASE("codomain must match the schema") {
        CHECK_THROWS_AS(table_compose(t, Mapping::identity({v(2)})),
                        SchemaError);
        CHECK(table_compose(Table::empty(), Mapping::identity({v(2)})) ==
              Table::empty());
    }
}

TEST_CASE("fresh schemes") {
    FreshScheme scheme;
    VarSet X{v(1), v(3)};
    VarSet Y{v(2), v(5)};
    Mapping xi = scheme.fresh_bijection(X, Y);
    CHECK(xi.dom() == VarSet{v(4), v(6)});
    CHECK(xi.cod() == Y);
    CHECK(xi.is_bijection());
    CHECK(xi.dom().intersected(X.unioned(Y)).empty());
    CHECK(scheme.fresh_bijection(X, Y) == xi);  // deterministic

    Mapping alt = FreshScheme::with_offset(3).fresh_bijection(X, Y);
    CHECK(alt.dom().intersected(X.unioned(Y)).empty());
    CHECK(alt.dom() != xi.dom());
}

TEST_CASE("outer composition through the algebra") {
    SUBCASE("domain-disjoint bijections cancel") {
        Mapping sigma = Mapping::make({v(3), v(4)}, {v(1), v(2)},
                                      {{v(3), v(1)}, {v(4), v(2)}});
        Table u = table({1, 2}, {row({{1, "a"}, {2, "b"}})});
        Table moved = outer_compose(u, sigma, kAlg);
        CHECK(moved == table({3, 4}, {row({{3, "a"}, {4, "b"}})}));
        CHECK(outer_compose(moved, sigma.inverse(), kAlg) == u);
    }

    SUBCASE("foldings join with their equality table") {
        Mapping delta = Mapping::make({v(1), v(2)}, {v(1)},
                                      {{v(1), v(1)}, {v(2), v(1)}});
        Table u = table({1}, {row({{1, "a"}})});
        CHECK(outer_compose(u, delta, kAlg) ==
              join(u, kAlg.equality_table(std::vector<VarPair>(
                          delta.graph().begin(), delta.graph().end()))));
    }

    SUBCASE("agrees with the row-level definition") {
        laws::Rng rng(47);
        for (int i = 0; i < 200; ++i) {
            VarSet Y = laws::gen_subset(rng, laws::default_pool());
            Table u = laws::gen_table_over(rng, Y, kAB);
            if (u.is_empty()) continue;
            VarSet X = Y.empty() ? VarSet{}
                                 : laws::gen_subset(rng, laws::default_pool());
            std::vector<VarPair> graph;
            for (Variable x : X) graph.emplace_back(x, laws::gen_var(rng, Y));
            Mapping lambda = Mapping::make(X, Y, std::move(graph));
            CHECK(outer_compose(u, lambda, kAlg) == table_compose(u, lambda));
        }
    }

    SUBCASE("needs a nonempty table with the right schema") {
        CHECK_THROWS_AS(outer_compose(Table::empty(),
                                      Mapping::identity({v(1)}), kAlg),
                        SchemaError);
        Table u = table({1}, {row({{1, "a"}})});
        CHECK_THROWS_AS(outer_compose(u, Mapping::identity({v(2)}), kAlg),
                        SchemaError);
    }
}

TEST_CASE("finite partial transformations") {
    auto lam = FinPartialTransform::of({{v(2), v(1)}});
    auto mu = FinPartialTransform::of({{v(3), v(2)}});

    CHECK_THROWS_AS(FinPartialTransform::of({{v(1), v(2)}, {v(1), v(3)}}),
                    ConstructionError);
    CHECK(FinPartialTransform::of({{v(1), v(2)}, {v(1), v(2)}}).pairs().size() ==
          1);

    SUBCASE("relation composition") {
        CHECK(fpt_compose(lam, mu) == FinPartialTransform::of({{v(3), v(1)}}));
        auto pi_xy = FinPartialTransform::local_identity({v(1), v(2)});
        auto pi_yz = FinPartialTransform::local_identity({v(2), v(3)});
        CHECK(fpt_compose(pi_xy, pi_yz) ==
              FinPartialTransform::local_identity({v(2)}));
        CHECK(fpt_compose(lam, FinPartialTransform::local_identity(
                                   lam.domain())) == lam);
        auto global = FinPartialTransform::global_identity();
        CHECK(fpt_compose(global, lam) == lam);
        CHECK(fpt_compose(lam, global) == lam);
    }

    SUBCASE("restriction to a schema") {
        Mapping r = restrict_to(FinPartialTransform::local_identity({v(1), v(2)}),
                                {v(2), v(3)});
        CHECK(r == Mapping::inclusion({v(2)}, {v(2), v(3)}));

        Mapping s = restrict_to(
            FinPartialTransform::of({{v(2), v(1)}, {v(3), v(5)}}), {v(1)});
        CHECK(s == Mapping::make({v(2)}, {v(1)}, {{v(2), v(1)}}));

        Mapping e = restrict_to(FinPartialTransform(), {v(1)});
        CHECK(e.dom().empty());
        CHECK(e.cod() == VarSet{v(1)});

        CHECK(restrict_to(FinPartialTransform::global_identity(), {v(4)}) ==
              Mapping::identity({v(4)}));
    }

    SUBCASE("restriction respects composition") {
        laws::Rng rng(53);
        for (int i = 0; i < 200; ++i) {
            auto f = laws::gen_fpt(rng, laws::default_pool());
            auto g = laws::gen_fpt(rng, laws::default_pool());
            if (f.is_global_identity() || g.is_global_identity()) continue;
            VarSet Y = laws::gen_subset(rng, laws::default_pool());
            CHECK(restrict_to(fpt_compose(f, g), Y) ==
                  compose(restrict_to(f, Y), restrict_to(g, f.preimage(Y))));
        }
    }
}

TEST_CASE("the monoid action on tables") {
    Table u = table({1}, {row({{1, "a"}})});

    CHECK(act(Table::empty(), FinPartialTransform::of({{v(1), v(2)}}), kAlg) ==
          Table::empty());
    CHECK(act(u, FinPartialTransform::local_identity(u.columns()), kAlg) == u);
    CHECK(act(u, FinPartialTransform::global_identity(), kAlg) == u);
    CHECK(act(u, FinPartialTransform(), kAlg) == Table::unit());
    CHECK(act(u, FinPartialTransform::of({{v(2), v(1)}}), kAlg) ==
          table({2}, {row({{2, "a"}})}));

    SUBCASE("result schema is the preimage of the domain") {
        laws::Rng rng(59);
        for (int i = 0; i < 100; ++i) {
            Table t = laws::gen_table(rng, laws::default_pool(), kAB);
            if (t.is_empty()) continue;
            auto lambda = laws::gen_fpt(rng, laws::default_pool());
            Table moved = act(t, lambda, kAlg);
            REQUIRE_FALSE(moved.is_empty());
            CHECK(moved.columns() == lambda.preimage(t.columns()));
        }
    }
}
