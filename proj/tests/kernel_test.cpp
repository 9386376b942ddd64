#include "doctest.h"

#include "ttk/conversion.hpp"
#include "ttk/error.hpp"
#include "ttk/print.hpp"

using namespace ttk;

namespace {

const Ctx kEmpty{};
const Ctx kBool{{boolty()}};

TmPtr f_if() { return lam(boolty(), ite(boolty(), truelit(), falselit(), var0())); }
TmPtr g_id() { return lam(boolty(), var0()); }

ErrorClass class_of(auto&& thunk) {
    try {
        thunk();
    } catch (const KernelError& e) {
        return e.error_class();
    }
    FAIL("no kernel error raised");
    return ErrorClass::InternalStuck;
}

}  // namespace

TEST_CASE("context levels") {
    CHECK(check_ctx(kEmpty) == Level{0});
    CHECK(check_ctx(kBool) == Level{0});
    // U 0 lives at 1, El q at 0, so the context sits at max(max(0, 1), 0).
    CHECK(check_ctx(Ctx{{univ(Level{0}), el(var0())}}) == Level{1});
}

TEST_CASE("type levels") {
    CHECK(infer_ty(kEmpty, boolty()) == Level{0});
    CHECK(infer_ty(kEmpty, univ(Level{0})) == Level{1});
    CHECK(infer_ty(kEmpty, univ(Level{3})) == Level{4});
    CHECK(infer_ty(kEmpty, pi(univ(Level{0}), el(var0()))) == Level{1});
    CHECK(infer_ty(kBool, idty(boolty(), var0(), truelit())) == Level{0});
}

TEST_CASE("substitution codomains") {
    CHECK(equal(synth_sub(kEmpty, id_sub()), kEmpty));
    CHECK(equal(synth_sub(kBool, wk()), kEmpty));
    CHECK(equal(synth_sub(kEmpty, ext(eps(), boolty(), truelit())), kBool));
}

TEST_CASE("term types") {
    CHECK(equal(*synth_tm(kEmpty, truelit()), *boolty()));
    CHECK(equal(*synth_tm(kBool, var0()), *tysub(boolty(), wk())));
    TmPtr idfun = lam(univ(Level{0}), lam(el(var0()), var0()));
    TyPtr want = pi(univ(Level{0}), pi(el(var0()), el(var(1))));
    CHECK(conv_ty(kEmpty, synth_tm(kEmpty, idfun), want));
    CHECK(print(*normalize_ty(kEmpty, synth_tm(kEmpty, idfun))) == "(pi (u 0) (pi (el (q)) (el (v 1))))");
    CHECK(conv_ty(kEmpty, synth_tm(kEmpty, apply1(lam(boolty(), var0()), boolty(), truelit())), boolty()));
}

TEST_CASE("derived forms") {
    CHECK(equal(*var(0), *var0()));
    CHECK(equal(*var(1), *tmsub(var0(), wk())));
    CHECK(var_index(*var(3)) == 3);
    CHECK(wk_depth(*wk_n(2)) == 2);
    Ctx g{{boolty(), univ(Level{0})}};
    CHECK(conv_sub(g, g, lift(id_sub(), univ(Level{0})), id_sub()));
}

TEST_CASE("typing errors") {
    CHECK(class_of([] { synth_tm(kEmpty, var0()); }) == ErrorClass::VarInEmptyContext);
    CHECK(class_of([] { synth_sub(kEmpty, wk()); }) == ErrorClass::ProjectionOfEmpty);
    CHECK(class_of([] { check_tm(kEmpty, truelit(), top()); }) == ErrorClass::TypeMismatch);
    // app splits off the last entry, leaving q to be typed in •
    CHECK(class_of([] { synth_tm(kBool, app(var0())); }) == ErrorClass::VarInEmptyContext);
    CHECK(class_of([] { synth_tm(Ctx{{boolty(), boolty()}}, app(var0())); }) == ErrorClass::TypeMismatch);
    CHECK(class_of([] { check_ctx(Ctx{{el(truelit())}}); }) == ErrorClass::IllFormedEntry);
}

TEST_CASE("evaluation") {
    CHECK(eval(nullptr, *apply1(lam(boolty(), var0()), boolty(), truelit()))->kind == ValKind::True);
    CHECK(eval(nullptr, *ite(boolty(), falselit(), truelit(), truelit()))->kind == ValKind::False);
    CHECK(eval(nullptr, *tysub(boolty(), eps()))->kind == TyValKind::Bool);
}

TEST_CASE("readback") {
    TyScope one{vtop()};
    CHECK(equal(*readback(one, fresh(0), vtop()), *tt()));
    TyScope b{vbool()};
    CHECK(equal(*readback(b, fresh(0), vbool()), *var0()));
    // lam x. f x for a variable f reads back as f itself.
    Ctx fctx{{pi(boolty(), boolty())}};
    TmPtr expanded = lam(boolty(), apply1(var(1), boolty(), var0()));
    Scope sc = Scope::of(fctx);
    TyPtr bb = tysub(pi(boolty(), boolty()), wk());
    CHECK(equal(*normalize_at(sc, *expanded, *bb), *normalize_at(sc, *var0(), *bb)));
    // normal forms at Π are η-long
    CHECK(print(*normalize_at(sc, *var0(), *bb)) == "(lam (bool) (tmsub (app (v 1)) (ext (id) (bool) (q))))");
    TmPtr beta = lam(boolty(), apply1(lam(boolty(), var0()), boolty(), var0()));
    CHECK(equal(*normalize(kEmpty, beta), *lam(boolty(), var0())));
}

TEST_CASE("normalization") {
    CHECK(equal(*normalize(kEmpty, tmsub(truelit(), eps())), *truelit()));
    CHECK(equal(*normalize(kBool, var0()), *var0()));
    CHECK(equal(*normalize(kEmpty, tmsub(tmsub(truelit(), id_sub()), id_sub())), *truelit()));
    // normal forms are fixed points
    TmPtr t = apply1(f_if(), boolty(), falselit());
    TmPtr n = normalize(kEmpty, t);
    CHECK(equal(*normalize(kEmpty, n), *n));
}

TEST_CASE("conversion") {
    CHECK(conv_tm(kEmpty, boolty(), ite(boolty(), truelit(), falselit(), truelit()), truelit()));
    CHECK_FALSE(conv_tm(kEmpty, pi(boolty(), boolty()), f_if(), g_id()));
    CHECK(conv_tm(kEmpty, pi(boolty(), boolty()), g_id(), g_id()));
    CHECK(conv_sub(kBool, kEmpty, comp(id_sub(), wk()), wk()));
}
