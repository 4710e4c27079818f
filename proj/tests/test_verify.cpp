#include <doctest.h>

#include <json.hpp>

#include <set>
#include <sstream>
#include <stdexcept>

#include "coverreg/cover.hpp"
#include "coverreg/graph.hpp"
#include "coverreg/report_io.hpp"
#include "coverreg/verify.hpp"

using namespace coverreg;

TEST_SUITE("verify") {

TEST_CASE("reduce_isolated") {
    Graph g(5, {{1, 3}});
    Graph r = reduce_isolated(g);
    CHECK(r.n() == 2);
    CHECK(r.m() == 1);
    CHECK(r.labels() == std::vector<std::string>{"x2", "x4"});
    CHECK(reduce_isolated(path(3)).n() == 3);
}

TEST_CASE("degree lemma check") {
    MonomialIdeal j = cover_ideal(path(3));
    IdentityReport r = check_degree_lemma(j, 2, "P3");
    CHECK(r.pass);
    CHECK(r.identity == "degree_lemma");
    CHECK(r.graph_id == "P3");
    CHECK(r.parameters == "k=2");
    CHECK(r.witness.empty());
    CHECK_THROWS_AS(check_degree_lemma(MonomialIdeal::zero(2), 1), std::invalid_argument);
    CHECK_THROWS_AS(check_degree_lemma(j, 0), std::invalid_argument);
    MonomialIdeal not_squarefree(2, {Monomial({2, 0})});
    CHECK_THROWS_AS(check_degree_lemma(not_squarefree, 1), std::invalid_argument);
}

TEST_CASE("bounds: frozen reports") {
    BoundsReport p3_1 = check_bounds(path(3), 1, FieldTag::gf2());
    CHECK(p3_1.graph_id == "P3");
    CHECK(p3_1.n == 3);
    CHECK(p3_1.deg == 2);
    CHECK(p3_1.reg == 2);
    CHECK(p3_1.lower == 2);
    CHECK(p3_1.upper == 2);
    CHECK(p3_1.holds);
    CHECK(p3_1.lower_tight);
    CHECK(p3_1.upper_tight);
    CHECK(p3_1.bipartite);
    CHECK_FALSE(p3_1.unmixed);
    CHECK(p3_1.claw_free);
    CHECK(p3_1.in_class());
    CHECK(p3_1.defect() == 0);

    BoundsReport p3_2 = check_bounds(path(3), 2, FieldTag::gf2());
    CHECK(p3_2.reg == 4);
    CHECK(p3_2.lower == 4);
    CHECK(p3_2.upper == 4);
    CHECK(p3_2.holds);
    CHECK(p3_2.lower_tight);
    CHECK(p3_2.upper_tight);

    BoundsReport k4_2 = check_bounds(complete(4), 2, FieldTag::gf2());
    CHECK(k4_2.deg == 3);
    CHECK(k4_2.reg == 6);
    CHECK(k4_2.lower == 6);
    CHECK(k4_2.upper == 6);
    CHECK(k4_2.holds);
    CHECK_FALSE(k4_2.bipartite);
    CHECK(k4_2.unmixed);
    CHECK(k4_2.claw_free);

    BoundsReport c5_2 = check_bounds(cycle(5), 2, FieldTag::gf2());
    CHECK(c5_2.deg == 3);
    CHECK(c5_2.reg == 6);
    CHECK(c5_2.lower == 6);
    CHECK(c5_2.upper == 7);
    CHECK(c5_2.holds);
    CHECK(c5_2.lower_tight);
    CHECK_FALSE(c5_2.upper_tight);
    CHECK(c5_2.defect() == 0);

    // Isolated vertices are dropped: P3 plus two spare vertices behaves as P3.
    Graph padded(5, {{0, 1}, {1, 2}}, "padded");
    BoundsReport pad = check_bounds(padded, 1, FieldTag::gf2());
    CHECK(pad.graph_id == "padded");
    CHECK(pad.n == 3);
    CHECK(pad.upper == 2);

    CHECK_THROWS_AS(check_bounds(Graph(3, {}), 1, FieldTag::gf2()), std::invalid_argument);
    CHECK_THROWS_AS(check_bounds(path(3), 0, FieldTag::gf2()), std::invalid_argument);
}

TEST_CASE("restriction identity") {
    for (const Graph& g : {path(3), path(5), cycle(5), complete(4), star(3),
                           complete_bipartite(2, 3)}) {
        for (int v = 0; v < g.n(); ++v) {
            IdentityReport r = check_restriction_identity(g, v);
            CAPTURE(g.id());
            CAPTURE(v);
            CHECK(r.pass);
            CHECK(r.identity == "restriction");
        }
    }
    IdentityReport r = check_restriction_identity(complete(3), 0);
    CHECK(r.parameters == "v=1");
    CHECK_THROWS_AS(check_restriction_identity(path(3), 3), std::invalid_argument);
}

TEST_CASE("colon identity") {
    for (int k = 2; k <= 4; ++k) {
        IdentityReport r = check_colon_identity(path(3), k);
        CAPTURE(k);
        CHECK(r.pass);
    }
    CHECK(check_colon_identity(cycle(5), 2).pass);
    CHECK(check_colon_identity(cycle(5), 3).pass);
    CHECK(check_colon_identity(complete(4), 2).pass);
    CHECK(check_colon_identity(star(3), 3).pass);
    CHECK_THROWS_AS(check_colon_identity(path(3), 1), std::invalid_argument);
    CHECK_THROWS_AS(check_colon_identity(Graph(2, {}), 2), std::invalid_argument);
}

TEST_CASE("bipartite power equality") {
    for (const Graph& g : {path(4), cycle(4), cycle(6), star(3),
                           complete_bipartite(3, 3)}) {
        for (int k = 2; k <= 3; ++k) {
            IdentityReport r = check_bipartite_power_equality(g, k);
            CAPTURE(g.id());
            CAPTURE(k);
            CHECK(r.pass);
        }
    }
    CHECK_THROWS_AS(check_bipartite_power_equality(complete(3), 2), std::invalid_argument);
}

TEST_CASE("half-cover condition") {
    CHECK(check_half_cover_condition(path(3)).pass);
    CHECK(check_half_cover_condition(cycle(5)).pass);
    CHECK(check_half_cover_condition(complete(4)).pass);
    CHECK(check_half_cover_condition(star(3)).pass);

    IdentityReport g33 = check_half_cover_condition(pendant_blowup(3, 3));
    CHECK_FALSE(g33.pass);
    CHECK(g33.witness == "largest minimal cover has 5 of 12 vertices");

    CHECK_THROWS_AS(check_half_cover_condition(Graph(3, {{0, 1}})), std::invalid_argument);
}

TEST_CASE("sharpness: stars, completes, cones") {
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 3; ++k) {
            IdentityReport r = check_star_sharpness(n, k, FieldTag::gf2());
            CAPTURE(n);
            CAPTURE(k);
            CHECK(r.pass);
            CHECK(r.identity == "sharpness");
        }
    CHECK(check_star_sharpness(2, 2, FieldTag::gf2()).parameters == "kind=star,k=2");

    for (int n = 2; n <= 4; ++n)
        for (int k = 1; k <= 3; ++k) {
            IdentityReport r = check_complete_sharpness(n, k, FieldTag::gf2());
            CAPTURE(n);
            CAPTURE(k);
            CHECK(r.pass);
        }

    CHECK(check_cone_sharpness(cycle(5), 1, FieldTag::gf2()).pass);
    CHECK(check_cone_sharpness(cycle(5), 2, FieldTag::gf2()).pass);
    CHECK(check_cone_sharpness(cycle(4), 2, FieldTag::gf2()).pass);
    CHECK(check_cone_sharpness(path(3), 2, FieldTag::gf2()).pass);
    CHECK(check_cone_sharpness(complete(3), 2, FieldTag::gf2()).pass);
    // C6 has independent sets of size 3: out of scope.
    CHECK_THROWS_AS(check_cone_sharpness(cycle(6), 1, FieldTag::gf2()),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_star_sharpness(0, 1, FieldTag::gf2()), std::invalid_argument);
    CHECK_THROWS_AS(check_complete_sharpness(1, 1, FieldTag::gf2()), std::invalid_argument);
}

TEST_CASE("bound comparison") {
    for (const Graph& g : {path(3), path(4), cycle(6), star(3),
                           complete_bipartite(2, 3)})
        for (int k = 1; k <= 3; ++k) {
            IdentityReport r = check_bound_comparison(g, k, FieldTag::gf2());
            CAPTURE(g.id());
            CAPTURE(k);
            CHECK(r.pass);
        }
    // Edgeless graphs reduce to the trivial comparison -1 <= -1.
    CHECK(check_bound_comparison(Graph(3, {}), 2, FieldTag::gf2()).pass);
    CHECK_THROWS_AS(check_bound_comparison(complete(3), 1, FieldTag::gf2()),
                    std::invalid_argument);
}

TEST_CASE("random squarefree ideals are deterministic and minimal") {
    MonomialIdeal a = random_squarefree_ideal(5, 6, 7);
    MonomialIdeal b = random_squarefree_ideal(5, 6, 7);
    CHECK(a == b);
    CHECK(a.is_squarefree());
    CHECK(a.generators().size() <= 6);
    CHECK_FALSE(a.is_zero());

    std::set<std::string> distinct;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        MonomialIdeal i = random_squarefree_ideal(5, 6, seed);
        CHECK(i.is_squarefree());
        CHECK(i.generators().size() <= 6);
        distinct.insert(i.to_text());
    }
    CHECK(distinct.size() > 20);
    CHECK_THROWS_AS(random_squarefree_ideal(0, 6, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_squarefree_ideal(31, 6, 1), std::invalid_argument);
}

TEST_CASE("family materialization") {
    FamilySpec stars;
    stars.kind = FamilySpec::Kind::star;
    stars.n_min = 1;
    stars.n_max = 4;
    auto star_graphs = stars.materialize();
    REQUIRE(star_graphs.size() == 4);
    CHECK(star_graphs[0].id() == "K1,1");
    CHECK(star_graphs[3].id() == "K1,4");

    FamilySpec all;
    all.kind = FamilySpec::Kind::all;
    all.n_min = 1;
    all.n_max = 4;
    CHECK(all.materialize().size() == 1 + 2 + 4 + 11);

    FamilySpec kab;
    kab.kind = FamilySpec::Kind::complete_bipartite;
    kab.a_min = 1;
    kab.a_max = 2;
    kab.b_min = 2;
    kab.b_max = 3;
    auto kab_graphs = kab.materialize();
    REQUIRE(kab_graphs.size() == 4);
    CHECK(kab_graphs[0].id() == "K1,2");
    CHECK(kab_graphs[3].id() == "K2,3");

    FamilySpec cones;
    cones.kind = FamilySpec::Kind::cone_cycle;
    cones.n_min = 3;
    cones.n_max = 5;
    auto cone_graphs = cones.materialize();
    REQUIRE(cone_graphs.size() == 3);
    CHECK(cone_graphs[2].id() == "cone(C5)");

    FamilySpec rnd;
    rnd.kind = FamilySpec::Kind::random;
    rnd.n_min = 5;
    rnd.n_max = 6;
    rnd.count = 3;
    rnd.seed = 11;
    auto rnd_graphs = rnd.materialize();
    REQUIRE(rnd_graphs.size() == 6);
    CHECK(rnd_graphs[0].id() == "rand(5,1/2,11)");
    CHECK(rnd_graphs[5].id() == "rand(6,1/2,16)");
}

TEST_CASE("sweep over paths finds no failures") {
    SweepOptions options;
    options.family.kind = FamilySpec::Kind::path;
    options.family.n_min = 2;
    options.family.n_max = 4;
    options.k_max = 2;
    SweepResult result = sweep(options);
    CHECK(result.violations == 0);
    CHECK(result.observations == 0);
    CHECK(result.errors.empty());
    // Bounds for three paths, two k each.
    CHECK(result.bounds.size() == 6);
    bool saw_restriction = false, saw_colon = false, saw_power = false;
    for (const IdentityReport& r : result.identities) {
        CHECK(r.pass);
        if (r.identity == "restriction") saw_restriction = true;
        if (r.identity == "colon") saw_colon = true;
        if (r.identity == "bipartite_power") saw_power = true;
    }
    CHECK(saw_restriction);
    CHECK(saw_colon);
    CHECK(saw_power);
}

TEST_CASE("sweep records out-of-class bound failures as observations") {
    SweepOptions options;
    options.family.kind = FamilySpec::Kind::pendant_blowup;
    options.family.n_min = 3;
    options.family.n_max = 3;
    options.family.s_min = 3;
    options.family.s_max = 3;
    options.checks = {Check::half_cover};
    SweepResult result = sweep(options);
    CHECK(result.violations == 0);
    CHECK(result.observations == 1);
    REQUIRE(result.identities.size() == 1);
    CHECK_FALSE(result.identities[0].pass);
    CHECK(result.identities[0].graph_id == "G3,3");
}

TEST_CASE("sweep rejects sharpness on a non-sharpness family") {
    SweepOptions options;
    options.family.kind = FamilySpec::Kind::path;
    options.checks = {Check::sharpness};
    CHECK_THROWS_AS(sweep(options), std::runtime_error);
}

TEST_CASE("sweep sharpness families") {
    SweepOptions options;
    options.family.kind = FamilySpec::Kind::complete;
    options.family.n_min = 2;
    options.family.n_max = 4;
    options.k_max = 2;
    options.checks = {Check::sharpness};
    SweepResult result = sweep(options);
    CHECK(result.violations == 0);
    CHECK(result.errors.empty());
    CHECK(result.identities.size() == 6);
    for (const IdentityReport& r : result.identities) CHECK(r.pass);
}

TEST_CASE("sweep propagates family materialization failures") {
    SweepOptions options;
    options.family.kind = FamilySpec::Kind::file;
    options.family.path = "/nonexistent/graph.txt";
    CHECK_THROWS_AS(sweep(options), std::runtime_error);
}

TEST_CASE("sweep captures per-item errors without aborting") {
    SweepOptions options;
    options.family.kind = FamilySpec::Kind::cone_cycle;
    options.family.n_min = 5;
    options.family.n_max = 6;  // cone over C6 is out of scope for sharpness
    options.checks = {Check::sharpness};
    SweepResult result = sweep(options);
    REQUIRE(result.errors.size() == 1);
    CHECK(result.errors[0].find("cone(C6)") != std::string::npos);
    REQUIRE(result.identities.size() == 1);
    CHECK(result.identities[0].pass);
    CHECK(result.identities[0].graph_id == "cone(C5)");
    CHECK(result.violations == 0);
}

TEST_CASE("json report shape") {
    SweepOptions options;
    options.family.kind = FamilySpec::Kind::path;
    options.family.n_min = 3;
    options.family.n_max = 3;
    options.k_max = 2;
    SweepResult result = sweep(options);
    nlohmann::json doc = nlohmann::json::parse(report_json(result));
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["records"].size() == result.bounds.size() + result.identities.size());
    CHECK(doc["errors"].empty());
    CHECK(doc["summary"]["violations"] == 0);
    CHECK(doc["summary"]["bounds_records"] == result.bounds.size());
    CHECK(doc["summary"]["identity_records"] == result.identities.size());
    bool saw_bounds = false;
    for (const auto& rec : doc["records"]) {
        if (rec["record_type"] == "bounds") {
            saw_bounds = true;
            CHECK(rec["graph_id"] == "P3");
            CHECK(rec["deg"] == 2);
            CHECK(rec["holds"] == true);
            CHECK(rec.contains("defect"));
            CHECK(rec["field"] == "gf2");
        } else {
            CHECK(rec["record_type"] == "identity");
            CHECK(rec.contains("pass"));
        }
    }
    CHECK(saw_bounds);
}

TEST_CASE("csv report shape") {
    SweepOptions options;
    options.family.kind = FamilySpec::Kind::path;
    options.family.n_min = 3;
    options.family.n_max = 3;
    SweepResult result = sweep(options);
    std::string csv = report_csv(result);
    std::istringstream lines(csv);
    std::string header;
    REQUIRE(std::getline(lines, header));
    CHECK(header ==
          "record_type,graph_id,identity,parameters,n,k,bipartite,unmixed,claw_free,"
          "deg,reg,lower,upper,defect,field,holds,lower_tight,upper_tight,pass,witness");
    std::size_t rows = 0;
    std::string row;
    while (std::getline(lines, row))
        if (!row.empty()) ++rows;
    CHECK(rows == result.bounds.size() + result.identities.size());
}

TEST_CASE("reports are deterministic") {
    SweepOptions options;
    options.family.kind = FamilySpec::Kind::cycle;
    options.family.n_min = 4;
    options.family.n_max = 5;
    options.k_max = 2;
    std::string first = report_json(sweep(options));
    std::string second = report_json(sweep(options));
    CHECK(first == second);
    CHECK(report_text(sweep(options)).find("summary:") != std::string::npos);
}

TEST_CASE("violations surface in the json summary") {
    SweepResult synthetic;
    IdentityReport bad{"half_cover", "G3,3", "", false,
                       "largest minimal cover has 5 of 12 vertices"};
    synthetic.identities.push_back(bad);
    synthetic.violations = 1;
    nlohmann::json doc = nlohmann::json::parse(report_json(synthetic));
    CHECK(doc["summary"]["violations"] == 1);
    CHECK(doc["records"][0]["pass"] == false);
    CHECK(doc["records"][0]["witness"] ==
          "largest minimal cover has 5 of 12 vertices");
    std::string csv = report_csv(synthetic);
    CHECK(csv.find("largest minimal cover has 5 of 12 vertices") != std::string::npos);
}

}  // TEST_SUITE
