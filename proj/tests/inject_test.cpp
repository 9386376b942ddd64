#include "doctest.h"

#include "ttk/conversion.hpp"
#include "ttk/generate.hpp"
#include "ttk/inject.hpp"

using namespace ttk;

namespace {

const Ctx kEmpty{};
const Ctx kBool{{boolty()}};

TmPtr f_if() { return lam(boolty(), ite(boolty(), truelit(), falselit(), var0())); }
TmPtr g_id() { return lam(boolty(), var0()); }

}  // namespace

TEST_CASE("context isomorphisms") {
    CtxIso e = build_ctx_iso(kEmpty);
    CHECK(equal(*e.fwd, *ext(eps(), el(code(top())), tt())));
    CHECK(equal(*e.bwd, *eps()));
    CHECK(e.fwd_bwd_ok);
    CHECK(e.bwd_fwd_ok);
    for (const Ctx& g : {kBool, Ctx{{boolty(), boolty()}}, Ctx{{univ(Level{0}), el(var0())}}}) {
        CtxIso iso = build_ctx_iso(g);
        CHECK(iso.fwd_bwd_ok);
        CHECK(iso.bwd_fwd_ok);
    }
}

TEST_CASE("embedding obligations") {
    CHECK(check_embedding(tm_entity(kEmpty, truelit())).accept);
    CHECK(check_embedding(ty_entity(kEmpty, boolty())).accept);
    CHECK(check_embedding(sub_entity(kBool, wk())).accept);
    for (const NamedCase& c : operator_cases()) {
        CAPTURE(c.name);
        CHECK(check_embedding(c.entity).accept);
    }
    CHECK(operator_cases().size() == kOpCount);
}

TEST_CASE("probe") {
    Injector inj;
    ProbeResult same = inj.probe(tm_entity(kEmpty, truelit()), tm_entity(kEmpty, truelit()));
    CHECK(same.termified_equal);
    CHECK_FALSE(same.counterexample());

    ProbeResult fg = inj.probe(tm_entity(kEmpty, f_if()), tm_entity(kEmpty, g_id()));
    CHECK_FALSE(fg.termified_equal);
    CHECK_FALSE(fg.equal);
    CHECK_FALSE(fg.counterexample());

    GenConfig cfg;
    cfg.seed = 9;
    Generator g(cfg);
    for (int i = 0; i < 100; ++i) {
        ProbeResult r = inj.probe(tm_entity(kEmpty, g.tm(kEmpty, boolty())), tm_entity(kEmpty, g.tm(kEmpty, boolty())));
        CHECK_FALSE(r.counterexample());
    }
}

TEST_CASE("a wrong backward map is caught") {
    // Replacing Γ₂ by a map that forgets the stored boolean breaks Γ₂ ∘ Γ₁ = id.
    CtxIso iso = build_ctx_iso(kBool);
    SubPtr broken = ext(eps(), boolty(), truelit());
    CHECK(conv_sub(kBool, kBool, comp(iso.bwd, iso.fwd), id_sub()));
    CHECK_FALSE(conv_sub(kBool, kBool, comp(broken, iso.fwd), id_sub()));
}
