#include <doctest.h>

#include "gaiakit/elements.hpp"
#include "testers.hpp"

using namespace gaiakit;
using namespace gaiakit::fincat;
using namespace gaiakit::elements;

namespace {

// Graph schema: objects V, E; morphisms s, t: E -> V.
FinCategory graph_schema() {
    return FinCategory::make(
        {"E", "V"},
        {{"id_E", "E", "E"}, {"id_V", "V", "V"}, {"src", "E", "V"}, {"tgt", "E", "V"}},
        {{"E", "id_E"}, {"V", "id_V"}},
        {{{"id_E", "id_E"}, "id_E"},
         {{"id_V", "id_V"}, "id_V"},
         {{"src", "id_E"}, "src"},
         {{"id_V", "src"}, "src"},
         {{"tgt", "id_E"}, "tgt"},
         {{"id_V", "tgt"}, "tgt"}});
}

SetInstance two_cycle() {
    SetInstance g;
    g.schema = graph_schema();
    g.tables = {{"E", {"e1", "e2"}}, {"V", {"v1", "v2"}}};
    g.actions = {{"id_E", {{"e1", "e1"}, {"e2", "e2"}}},
                 {"id_V", {{"v1", "v1"}, {"v2", "v2"}}},
                 {"src", {{"e1", "v1"}, {"e2", "v2"}}},
                 {"tgt", {{"e1", "v2"}, {"e2", "v1"}}}};
    return g;
}

FinFunctor collapse_two_points() {
    FinFunctor F;
    F.source = discrete_category({"a", "b"});
    F.target = discrete_category({"c"});
    F.object_map = {{"a", "c"}, {"b", "c"}};
    F.morphism_map = {{"id_a", "id_c"}, {"id_b", "id_c"}};
    return F;
}

} // namespace

TEST_CASE("category of elements of a graph instance") {
    auto inst = two_cycle();
    REQUIRE(validate_instance(inst).ok());
    auto el = category_of_elements(inst);
    CHECK(el.category.objects.size() == 4);
    // each edge contributes its src and tgt arrows; identities are extra
    int non_identity = 0;
    for (const auto& m : el.category.morphisms)
        if (!el.category.is_identity(m.id)) non_identity++;
    CHECK(non_identity == 4);
    CHECK(validate_category(el.category).ok());
    CHECK(validate_functor(el.projection).ok());
}

TEST_CASE("category of elements: degenerate cases") {
    SetInstance empty;
    empty.schema = graph_schema();
    empty.tables = {{"E", {}}, {"V", {}}};
    empty.actions = {{"id_E", {}}, {"id_V", {}}, {"src", {}}, {"tgt", {}}};
    CHECK(category_of_elements(empty).category.objects.empty());

    SetInstance three;
    three.schema = discrete_category({"s"});
    three.tables = {{"s", {"1", "2", "3"}}};
    three.actions = {{"id_s", {{"1", "1"}, {"2", "2"}, {"3", "3"}}}};
    auto el = category_of_elements(three);
    CHECK(el.category.objects.size() == 3);
    CHECK(el.category.morphisms.size() == 3); // identities only
}

TEST_CASE("pullback migration") {
    auto F = collapse_two_points();
    SetInstance eps;
    eps.schema = F.target;
    eps.tables = {{"c", {"1", "2"}}};
    eps.actions = {{"id_c", {{"1", "1"}, {"2", "2"}}}};

    auto delta = pullback_migration(F, eps);
    CHECK(delta.table("a") == std::vector<Id>{"1", "2"});
    CHECK(delta.table("b") == std::vector<Id>{"1", "2"});
    CHECK(validate_instance(delta).ok());

    // identity functor: Δ_id = id
    auto idf = identity_functor(F.target);
    auto same = pullback_migration(idf, eps);
    CHECK(same.tables == eps.tables);
}

TEST_CASE("left Kan migration: collapse example and identity") {
    auto F = collapse_two_points();
    SetInstance delta;
    delta.schema = F.source;
    delta.tables = {{"a", {"1", "2"}}, {"b", {"3"}}};
    delta.actions = {{"id_a", {{"1", "1"}, {"2", "2"}}}, {"id_b", {{"3", "3"}}}};
    REQUIRE(validate_instance(delta).ok());

    auto sigma = left_kan_migration(F, delta);
    CHECK(sigma.table("c").size() == 3); // disjoint union over the discrete comma
    CHECK(validate_instance(sigma).ok());

    auto idf = identity_functor(F.source);
    auto back = left_kan_migration(idf, delta);
    CHECK(back.table("a").size() == delta.table("a").size());
    CHECK(back.table("b").size() == delta.table("b").size());
    CHECK(validate_instance(back).ok());

    SetInstance empty;
    empty.schema = F.source;
    empty.tables = {{"a", {}}, {"b", {}}};
    empty.actions = {{"id_a", {}}, {"id_b", {}}};
    auto none = left_kan_migration(F, empty);
    CHECK(none.table("c").empty());
}

TEST_CASE("right Kan migration: collapse example, identity, empty comma") {
    auto F = collapse_two_points();
    SetInstance delta;
    delta.schema = F.source;
    delta.tables = {{"a", {"1", "2"}}, {"b", {"3"}}};
    delta.actions = {{"id_a", {{"1", "1"}, {"2", "2"}}}, {"id_b", {{"3", "3"}}}};

    auto pi = right_kan_migration(F, delta);
    CHECK(pi.table("c").size() == 2); // product 2 * 1 over the discrete comma
    CHECK(validate_instance(pi).ok());

    auto idf = identity_functor(F.source);
    auto back = right_kan_migration(idf, delta);
    CHECK(back.table("a").size() == 2);
    CHECK(back.table("b").size() == 1);

    // empty comma category gives a one-element table (empty limit)
    FinFunctor incl;
    incl.source = discrete_category({"a"});
    incl.target = discrete_category({"c", "d"});
    incl.object_map = {{"a", "c"}};
    incl.morphism_map = {{"id_a", "id_c"}};
    SetInstance da;
    da.schema = incl.source;
    da.tables = {{"a", {"x"}}};
    da.actions = {{"id_a", {{"x", "x"}}}};
    auto pi2 = right_kan_migration(incl, da);
    CHECK(pi2.table("c").size() == 1); // comma c↓F nonempty: the identity leg
    CHECK(pi2.table("d").size() == 1); // empty comma: terminal
}

TEST_CASE("migration along an isomorphism is relabeling") {
    // swap functor on a discrete 2-object category
    FinFunctor swap;
    swap.source = discrete_category({"a", "b"});
    swap.target = discrete_category({"a", "b"});
    swap.object_map = {{"a", "b"}, {"b", "a"}};
    swap.morphism_map = {{"id_a", "id_b"}, {"id_b", "id_a"}};
    SetInstance d;
    d.schema = swap.source;
    d.tables = {{"a", {"1", "2"}}, {"b", {"3"}}};
    d.actions = {{"id_a", {{"1", "1"}, {"2", "2"}}}, {"id_b", {{"3", "3"}}}};

    auto s = left_kan_migration(swap, d);
    CHECK(s.table("a").size() == 1);
    CHECK(s.table("b").size() == 2);
    auto p = right_kan_migration(swap, d);
    CHECK(p.table("a").size() == 1);
    CHECK(p.table("b").size() == 2);
}

TEST_CASE("natural transformation counting and the adjunction bijections") {
    auto F = collapse_two_points();
    SetInstance delta;
    delta.schema = F.source;
    delta.tables = {{"a", {"1", "2"}}, {"b", {"3"}}};
    delta.actions = {{"id_a", {{"1", "1"}, {"2", "2"}}}, {"id_b", {{"3", "3"}}}};
    SetInstance eps;
    eps.schema = F.target;
    eps.tables = {{"c", {"u", "v"}}};
    eps.actions = {{"id_c", {{"u", "u"}, {"v", "v"}}}};

    auto sigma = left_kan_migration(F, delta);
    auto pulled = pullback_migration(F, eps);
    CHECK(natural_transformations(sigma, eps).size() ==
          natural_transformations(delta, pulled).size());

    auto pi = right_kan_migration(F, delta);
    CHECK(natural_transformations(eps, pi).size() ==
          natural_transformations(pulled, delta).size());
}

TEST_CASE("adjunction bijections on a schema with a real arrow") {
    // F: [1] -> [2] sending 0, 1 to 0, 2.
    FinFunctor F;
    F.source = poset_category(1);
    F.target = poset_category(2);
    F.object_map = {{"0", "0"}, {"1", "2"}};
    F.morphism_map = {{"0<=0", "0<=0"}, {"0<=1", "0<=2"}, {"1<=1", "2<=2"}};
    REQUIRE(validate_functor(F).ok());

    SetInstance delta;
    delta.schema = F.source;
    delta.tables = {{"0", {"x", "y"}}, {"1", {"z"}}};
    delta.actions = {{"0<=0", {{"x", "x"}, {"y", "y"}}},
                     {"0<=1", {{"x", "z"}, {"y", "z"}}},
                     {"1<=1", {{"z", "z"}}}};
    REQUIRE(validate_instance(delta).ok());

    SetInstance eps;
    eps.schema = F.target;
    eps.tables = {{"0", {"p"}}, {"1", {"q", "r"}}, {"2", {"s"}}};
    eps.actions = {{"0<=0", {{"p", "p"}}},
                   {"0<=1", {{"p", "q"}}},
                   {"0<=2", {{"p", "s"}}},
                   {"1<=1", {{"q", "q"}, {"r", "r"}}},
                   {"1<=2", {{"q", "s"}, {"r", "s"}}},
                   {"2<=2", {{"s", "s"}}}};
    REQUIRE(validate_instance(eps).ok());

    auto sigma = left_kan_migration(F, delta);
    REQUIRE(validate_instance(sigma).ok());
    auto pi = right_kan_migration(F, delta);
    REQUIRE(validate_instance(pi).ok());
    auto pulled = pullback_migration(F, eps);

    CHECK(natural_transformations(sigma, eps).size() ==
          natural_transformations(delta, pulled).size());
    CHECK(natural_transformations(eps, pi).size() ==
          natural_transformations(pulled, delta).size());
}

TEST_CASE("adjunction transpositions are explicit bijections") {
    // F: [1] -> [2] endpoint inclusion, instances with a real arrow action.
    FinFunctor F;
    F.source = poset_category(1);
    F.target = poset_category(2);
    F.object_map = {{"0", "0"}, {"1", "2"}};
    F.morphism_map = {{"0<=0", "0<=0"}, {"0<=1", "0<=2"}, {"1<=1", "2<=2"}};

    SetInstance delta;
    delta.schema = F.source;
    delta.tables = {{"0", {"x", "y"}}, {"1", {"z"}}};
    delta.actions = {{"0<=0", {{"x", "x"}, {"y", "y"}}},
                     {"0<=1", {{"x", "z"}, {"y", "z"}}},
                     {"1<=1", {{"z", "z"}}}};
    SetInstance eps;
    eps.schema = F.target;
    eps.tables = {{"0", {"p"}}, {"1", {"q", "r"}}, {"2", {"s", "t"}}};
    eps.actions = {{"0<=0", {{"p", "p"}}},
                   {"0<=1", {{"p", "q"}}},
                   {"0<=2", {{"p", "s"}}},
                   {"1<=1", {{"q", "q"}, {"r", "r"}}},
                   {"1<=2", {{"q", "s"}, {"r", "t"}}},
                   {"2<=2", {{"s", "s"}, {"t", "t"}}}};
    REQUIRE(validate_instance(delta).ok());
    REQUIRE(validate_instance(eps).ok());

    auto sigma = left_kan_migration(F, delta);
    auto pi = right_kan_migration(F, delta);
    auto pulled = pullback_migration(F, eps);

    // left adjunction: transpose every α and land bijectively in Nat(δ, Δε)
    auto upstairs = natural_transformations(sigma, eps);
    auto downstairs = natural_transformations(delta, pulled);
    std::set<InstanceMap> down_set(downstairs.begin(), downstairs.end());
    std::set<InstanceMap> images;
    for (const auto& alpha : upstairs) {
        auto hat = transpose_left(F, delta, eps, alpha);
        CHECK(down_set.count(hat) == 1);
        images.insert(hat);
    }
    CHECK(images.size() == upstairs.size());   // injective
    CHECK(upstairs.size() == downstairs.size()); // counts equal => bijection

    // right adjunction: β: ε -> Πδ transposes into Nat(Δε, δ)
    auto up_r = natural_transformations(eps, pi);
    auto down_r = natural_transformations(pulled, delta);
    std::set<InstanceMap> down_r_set(down_r.begin(), down_r.end());
    std::set<InstanceMap> images_r;
    for (const auto& beta : up_r) {
        auto hat = transpose_right(F, delta, eps, beta);
        CHECK(down_r_set.count(hat) == 1);
        images_r.insert(hat);
    }
    CHECK(images_r.size() == up_r.size());
    CHECK(up_r.size() == down_r.size());
}

TEST_CASE("elements pullback square") {
    auto F = collapse_two_points();
    SetInstance eps;
    eps.schema = F.target;
    eps.tables = {{"c", {"1", "2"}}};
    eps.actions = {{"id_c", {{"1", "1"}, {"2", "2"}}}};
    auto chk = verify_elements_pullback(F, eps);
    CHECK(chk.holds);
    CHECK(chk.lhs.objects.size() == 4); // two fiber objects over each of a, b

    // identity functor: isomorphism is identity-shaped
    auto idchk = verify_elements_pullback(identity_functor(F.target), eps);
    CHECK(idchk.holds);

    // empty instance: both sides empty
    SetInstance empty;
    empty.schema = F.target;
    empty.tables = {{"c", {}}};
    empty.actions = {{"id_c", {}}};
    auto echk = verify_elements_pullback(F, empty);
    CHECK(echk.holds);
    CHECK(echk.lhs.objects.empty());
}

TEST_CASE("projection is surjective on objects when tables are nonempty") {
    auto inst = two_cycle();
    auto el = category_of_elements(inst);
    std::set<Id> hit;
    for (const auto& [oid, sx] : el.object_pairs) hit.insert(sx.first);
    CHECK(hit.size() == inst.schema.objects.size());
}
