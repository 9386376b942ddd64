#include "doctest.h"

#include <set>
#include <string>

#include "ttk/equations.hpp"

using namespace ttk;

TEST_CASE("schema table") {
    std::set<std::string> names;
    for (Schema s : all_schemas()) names.insert(std::string(schema_name(s)));
    CHECK(names.size() == kSchemaCount);
}

TEST_CASE("instances hold by conversion") {
    GenConfig cfg;
    cfg.seed = 5;
    Generator g(cfg);
    for (Schema s : all_schemas()) {
        for (int i = 0; i < 5; ++i) {
            EqInstance e = gen_eq_instance(g, s);
            CAPTURE(e.describe());
            CHECK(e.schema == s);
            CHECK(verify_equation(e));
        }
    }
}

TEST_CASE("termified instances hold") {
    GenConfig cfg;
    cfg.seed = 6;
    cfg.max_nodes = 6;
    Generator g(cfg);
    for (Schema s : all_schemas()) {
        EqInstance e = gen_eq_instance(g, s);
        CAPTURE(e.describe());
        CHECK(verify_termified_equation(e));
    }
}

TEST_CASE("a broken instance is rejected") {
    GenConfig cfg;
    Generator g(cfg);
    EqInstance e = gen_eq_instance(g, Schema::BoolBeta1);
    REQUIRE(e.sort == EntitySort::Tm);
    REQUIRE(verify_equation(e));
    // if C u v true = u; replace u on the right by a different literal
    e.lhs_tm = ite(boolty(), truelit(), falselit(), truelit());
    e.rhs_tm = falselit();
    e.ctx = Ctx{};
    e.ty = boolty();
    CHECK_FALSE(verify_equation(e));
    CHECK_FALSE(verify_termified_equation(e));
}
