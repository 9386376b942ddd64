#include "doctest.h"

#include "ttk/conversion.hpp"
#include "ttk/equations.hpp"
#include "ttk/error.hpp"
#include "ttk/param.hpp"

using namespace ttk;

namespace {

const Ctx kEmpty{};
const Ctx kBool{{boolty()}};

}  // namespace

TEST_CASE("empty context predicate") {
    ParamEntity r = param(con_entity(kEmpty));
    CHECK(equal(*r.ty, *top()));
    CHECK(r.level == Level{0});
    CHECK(infer_ty(kEmpty, r.ty) == Level{0});
}

TEST_CASE("literals") {
    for (const TmPtr& b : {truelit(), falselit()}) {
        ParamEntity r = param(tm_entity(kEmpty, b));
        REQUIRE(r.tm);
        Ctx want_ctx{{top()}};
        CHECK(equal(r.ctx, want_ctx));
        // Boolᴾ at a literal is ⊤, so the witness is tt.
        CHECK(conv_ty(r.ctx, r.classifier, top()));
        CHECK(conv_tm(r.ctx, r.classifier, r.tm, tt()));
        Parametricity p;
        TyPtr boolp = p.ty(kEmpty, boolty());
        check_tm(r.ctx, r.tm, tysub(boolp, ext(id_sub(), tysub(boolty(), wk()), tmsub(b, wk()))));
    }
}

TEST_CASE("universe predicate") {
    ParamEntity r = param(ty_entity(kEmpty, univ(Level{0})));
    CHECK(r.level == Level{1});
    CHECK(infer_ty(r.ctx, r.ty) == Level{1});
    // predicates over a code a are maps El a ⇒ U 0
    CHECK(conv_ty(r.ctx, r.ty, arrow(el(var0()), univ(Level{0}))));

    Ctx g{{boolty()}};
    ParamEntity over = param(ty_entity(g, univ(Level{0})));
    CHECK(over.ctx.size() == 3);
    CHECK(infer_ty(over.ctx, over.ty) == Level{1});
}

TEST_CASE("every sort translates to a well-typed result") {
    Parametricity p;
    Ctx g{{univ(Level{0}), el(var0())}};
    CHECK(infer_ty(g, p.con(g)) == Level{1});
    ParamEntity s = param(sub_entity(g, wk()));
    check_tm(s.ctx, s.tm, s.classifier);
    ParamEntity t = param(tm_entity(g, var0()));
    check_tm(t.ctx, t.tm, t.classifier);
    ParamEntity j = param(tm_entity(Ctx{{boolty()}}, jelim(boolty(), truelit(), refl(var0()))));
    check_tm(j.ctx, j.tm, j.classifier);
}

TEST_CASE("translations respect equations") {
    GenConfig cfg;
    cfg.seed = 4;
    cfg.max_nodes = 6;
    Generator g(cfg);
    for (Schema s : all_schemas()) {
        EqInstance e = gen_eq_instance(g, s);
        CAPTURE(e.describe());
        CHECK(verify_param_equation(e));
    }
}

TEST_CASE("ill-typed input is refused") {
    CHECK_THROWS_AS(param(tm_entity(kEmpty, var0())), KernelError);
    CHECK_THROWS_AS(param(ty_entity(kBool, el(var0()))), KernelError);
}
