#include "doctest.h"

#include "ttk/conversion.hpp"
#include "ttk/generate.hpp"

using namespace ttk;

TEST_CASE("size zero contexts are empty") {
    GenConfig cfg;
    cfg.max_nodes = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        cfg.seed = seed;
        CHECK(Generator(cfg).ctx().empty());
    }
}

TEST_CASE("same seed, same output") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        GenConfig cfg;
        cfg.seed = seed;
        Generator a(cfg), b(cfg);
        CHECK(equal(*a.tm(Ctx{}, boolty()), *b.tm(Ctx{}, boolty())));
        Ctx ga = a.ctx(), gb = b.ctx();
        CHECK(equal(ga, gb));
        CHECK(equal(*a.ty(ga), *b.ty(gb)));
    }
}

TEST_CASE("closed Bool terms typecheck") {
    GenConfig cfg;
    cfg.seed = 7;
    Generator g(cfg);
    for (int i = 0; i < 100; ++i) {
        TmPtr t = g.tm(Ctx{}, boolty());
        CHECK_NOTHROW(check_tm(Ctx{}, t, boolty()));
    }
}

TEST_CASE("every sort typechecks and stays within size") {
    GenConfig cfg;
    cfg.seed = 11;
    Generator g(cfg);
    for (int i = 0; i < 100; ++i) {
        Ctx c = g.ctx();
        REQUIRE_NOTHROW(check_ctx(c));
        TyPtr a = g.ty(c);
        CHECK_NOTHROW(infer_ty(c, a));
        auto [s, d] = g.sub(c);
        CHECK_NOTHROW(check_sub(c, s, d));
        auto [t, ta] = g.tm_any(c);
        CHECK_NOTHROW(check_tm(c, t, ta));
    }
}

TEST_CASE("operator coverage over many draws") {
    GenConfig cfg;
    cfg.seed = 3;
    Generator g(cfg);
    for (int i = 0; i < 1000; ++i) {
        Ctx c = g.ctx();
        g.ty(c);
        g.sub(c);
        g.tm_any(c);
    }
    CHECK(g.coverage().missing().empty());
}
