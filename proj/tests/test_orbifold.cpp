#include "voa24/scenario.hpp"

#include <doctest.h>

using namespace voa24;

namespace {

Scenario scenario(const char* file)
{
    return load_scenario(std::string(VOA24_SCENARIO_DIR) + "/" + file);
}

SimpleType T(const char* s)
{
    return SimpleType::parse(s);
}

std::vector<SeedSubalgebra> seeds_of(const FixedSubalgebra& f, std::initializer_list<const char*> names)
{
    std::vector<SeedSubalgebra> pool = f.components, out;
    for (const char* n : names) {
        Ideal want = SemisimpleShape::parse(n).ideals.at(0);
        auto it = std::find_if(pool.begin(), pool.end(),
                               [&](const SeedSubalgebra& c) { return c.type == want.type && c.level == want.level; });
        REQUIRE(it != pool.end());
        out.push_back(*it);
        pool.erase(it);
    }
    return out;
}

}

TEST_CASE("shapes parse and print")
{
    SemisimpleShape s = SemisimpleShape::parse("D5,3 G2,1 A1,1^2 A1,3^2 U1");
    CHECK(s.dim() == 45 + 14 + 3 * 4 + 1);
    CHECK(s.rank() == 5 + 2 + 4 + 1);
    CHECK(SemisimpleShape::parse(s.name()) == s);
    CHECK(SemisimpleShape::parse("A1,3^2 A1,1^2 D5,3 U1 G2,1") == s);
    CHECK_THROWS(SemisimpleShape::parse("D5"));
    CHECK_THROWS(SemisimpleShape::parse("Q5,1"));
}

TEST_CASE("fixed-point subalgebras")
{
    struct Row {
        const char* file;
        const char* shape;
        long dim;
    };
    for (Row r : {Row{"m1.scn", "D5,3 A1,1^2 A1,3^2 G2,1 U1", 72}, Row{"m2.scn", "D6,3 A3,1 A1,1 A1,3 U1", 88},
                  Row{"m3.scn", "A7,3 A2,1^2 U1", 80}, Row{"m4.scn", "A4,6 A1,6 A1,2 U1^2", 32}}) {
        Scenario s = scenario(r.file);
        FixedSubalgebra f = fixed_subalgebra(s.ambient, s.h);
        CAPTURE(r.file);
        CHECK(f.shape == SemisimpleShape::parse(r.shape));
        CHECK(f.shape.dim() == r.dim);
        int ranks = f.shape.center_dim;
        for (const auto& c : f.components) ranks += c.type.rank;
        CHECK(ranks == s.ambient.rank());
    }
    Scenario m1 = scenario("m1.scn");
    HVector zero;
    for (const auto& x : m1.h) zero.push_back(QVec(x.size(), Q(0)));
    FixedSubalgebra full = fixed_subalgebra(m1.ambient, zero);
    CHECK(full.shape == SemisimpleShape::parse("E6,3 G2,1^3"));
    CHECK(full.shape.center_dim == 0);
}

TEST_CASE("order-2 condition and the CFT precondition per scenario")
{
    for (const char* file : {"m1.scn", "m2.scn", "m3.scn", "m4.scn"}) {
        Scenario s = scenario(file);
        bool moves = false;
        for (std::size_t i = 0; i < s.ambient.factors.size(); ++i) {
            const RootDatum& d = build_root_datum(s.ambient.factors[i].type);
            for (const IVec& r : d.roots()) {
                Q p = d.form(s.h[i], r);
                CHECK(is_half_integer(p));
                moves = moves || !is_integer(p);
            }
        }
        CHECK(moves);
        Report rep = run_scenario(s);
        for (const Check& c : rep.checks) {
            if (c.step == "cft") CHECK(c.pass);
        }
    }
}

TEST_CASE("level transfer")
{
    ProductAlgebra g = parse_product_algebra("G2,1");
    SeedSubalgebra shortA1{T("A1"), 1, {}, false, frac(2, 3), ""};
    SeedSubalgebra longA1{T("A1"), 1, {}, true, Q(2), ""};
    CHECK(level_transfer(shortA1, g.factors[0]) == 3);
    CHECK(level_transfer(longA1, g.factors[0]) == 1);
    SeedSubalgebra longA4{T("A4"), 1, {}, true, Q(2), ""};
    CHECK(level_transfer(longA4, parse_product_algebra("C5,3").factors[0]) == 3);
    SeedSubalgebra shortA4{T("A4"), 1, {}, false, Q(1), ""};
    CHECK(level_transfer(shortA4, parse_product_algebra("C5,3").factors[0]) == 6);
    CHECK_THROWS_AS(level_transfer(shortA4, parse_product_algebra("D7,3").factors[0]), Failure);
    SeedSubalgebra bad{T("A1"), 1, {}, false, frac(2, 3), ""};
    CHECK_THROWS_AS(level_transfer(bad, parse_product_algebra("C5,3").factors[0]), Failure);
}

TEST_CASE("twisted-sector roots and the A3 subsystem")
{
    Scenario s = scenario("m1.scn");
    std::vector<QVec> mus;
    for (const auto& b : s.base_weights) mus.push_back(b.mu);
    auto tw = twisted_sector_roots(s.ambient, s.h, mus);
    REQUIRE(tw.size() == 4);
    const Q half = frac(1, 2);
    // (1/2)(3L1 - 3L6, L2, L2, 0)
    QVec first{3 * half, 0, 0, 0, 0, -3 * half, 0, half, 0, half, 0, 0};
    CHECK(tw[0] == first);
    QVec second = first;
    second[7] = -half;
    CHECK(tw[1] == second);

    FixedSubalgebra f = fixed_subalgebra(s.ambient, s.h);
    std::vector<QVec> fixed_roots;
    for (const auto& c : f.components) fixed_roots.insert(fixed_roots.end(), c.roots.begin(), c.roots.end());
    SeedSubalgebra psi = assemble_root_subsystem(fixed_roots, tw, dual_form_space(s.ambient));
    CHECK(psi.type == T("A3"));
    CHECK(psi.level == 1);
    CHECK(psi.roots.size() == 12);

    FormSpace dual = dual_form_space(s.ambient);
    QVec a{0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0};
    QVec b{0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0};
    QVec c{3 * half, 0, 0, 0, 0, -3 * half, 0, -half, 0, -half, 0, 0};
    CHECK(is_simple_system({a, b, c}, psi.roots, dual));
    CHECK(classify_cartan(cartan_of({a, b, c}, dual)) == T("A3"));

    HVector zero;
    for (const auto& x : s.h) zero.push_back(QVec(x.size(), Q(0)));
    CHECK(twisted_sector_roots(s.ambient, zero, {mus[1]})[0] == mus[1]);
}

TEST_CASE("a single root pair assembles to A1")
{
    FormSpace s{{{Q(2), Q(0)}, {Q(0), Q(2)}}};
    QVec r{Q(1), Q(0)};
    QVec neg{Q(-1), Q(0)};
    SeedSubalgebra one = assemble_root_subsystem({r, neg}, {r}, s);
    CHECK(one.type == T("A1"));
    CHECK(one.roots.size() == 2);
    CHECK(one.level == 1);
    // without a fixed-sector long root the level is not determined
    CHECK_THROWS_AS(assemble_root_subsystem({}, {r}, s), Failure);
    std::string why;
    CHECK_FALSE(is_root_system({QVec{Q(1), Q(0)}, QVec{Q(-1), Q(0)}, QVec{Q(1), Q(1)}, QVec{Q(-1), Q(-1)}}, s, &why));
    CHECK_FALSE(why.empty());
}

TEST_CASE("embeddings")
{
    CHECK(embeds(T("A3"), T("D7"), false));
    CHECK(embeds(T("D6"), T("E7"), false));
    CHECK(embeds({T("A3"), T("A3")}, T("D6"), false));
    CHECK_FALSE(embeds({T("A3"), T("A3")}, T("A6"), false));
    CHECK_FALSE(embeds(T("E6"), T("D7"), false));
    CHECK(embeds_short({T("A1"), T("A1")}, T("C2")));
    CHECK(embeds(T("A4"), T("C5"), true) == false);
    for (const char* t : {"A1", "A5", "B3", "C4", "D5", "E6", "E7", "F4", "G2"}) {
        CAPTURE(t);
        CHECK(embeds(T(t), T(t), false));
    }
}

TEST_CASE("identification is unique per scenario")
{
    Scenario m2 = scenario("m2.scn"), m3 = scenario("m3.scn"), m4 = scenario("m4.scn");
    auto f2 = fixed_subalgebra(m2.ambient, m2.h);
    auto f3 = fixed_subalgebra(m3.ambient, m3.h);
    auto f4 = fixed_subalgebra(m4.ambient, m4.h);

    auto r2 = identify(12, 168, seeds_of(f2, {"D6,3", "A3,1"}));
    REQUIRE(r2.size() == 1);
    CHECK(r2[0] == SemisimpleShape::parse("E7,3 A5,1"));
    auto r3 = identify(12, 96, seeds_of(f3, {"A7,3", "A2,1", "A2,1"}));
    REQUIRE(r3.size() == 1);
    CHECK(r3[0] == SemisimpleShape::parse("A8,3 A2,1^2"));
    auto r4 = identify(8, 48, seeds_of(f4, {"A4,6", "A1,2"}));
    REQUIRE(r4.size() == 1);
    CHECK(r4[0] == SemisimpleShape::parse("A5,6 C2,3 A1,2"));

    // adding seeds never enlarges the candidate set
    auto none = identify(12, 168, {});
    auto one = identify(12, 168, seeds_of(f2, {"D6,3"}));
    CHECK(none.size() >= one.size());
    CHECK(one.size() >= r2.size());
    for (const auto& s : one) CHECK(std::find(none.begin(), none.end(), s) != none.end());
}

TEST_CASE("Verlinde simple-current check")
{
    for (int a : {1, -1}) {
        Fusion n = verlinde_simple_current(a);
        for (int p = 0; p < 4; ++p) {
            for (int r = 0; r < 4; ++r) {
                CHECK(n[p][p][r] == (r == 0 ? 1 : 0));
                CHECK(n[0][p][r] == (r == p ? 1 : 0));
            }
            int total = 0;
            for (int q = 0; q < 4; ++q)
                for (int r = 0; r < 4; ++r) {
                    CHECK(n[p][q][r] >= 0);
                    total += n[p][q][r];
                }
            CHECK(total == 4);   // each fusion product is a single irreducible
        }
    }
    CHECK_THROWS_AS(verlinde_simple_current(0), std::invalid_argument);
}
