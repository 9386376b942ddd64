#include "doctest.h"

#include "ttk/canon.hpp"
#include "ttk/error.hpp"
#include "ttk/generate.hpp"

using namespace ttk;

TEST_CASE("verdicts") {
    CanonVerdict t = canonicity_verdict(truelit());
    CHECK(t.value);
    CHECK(t.certified);

    CanonVerdict f = canonicity_verdict(ite(boolty(), falselit(), truelit(), truelit()));
    CHECK_FALSE(f.value);
    CHECK(f.certified);

    CanonVerdict a = canonicity_verdict(apply1(lam(boolty(), var0()), boolty(), falselit()));
    CHECK_FALSE(a.value);
    CHECK(a.certified);

    CanonVerdict j = canonicity_verdict(jelim(boolty(), ite(boolty(), falselit(), truelit(), truelit()), refl(truelit())));
    CHECK_FALSE(j.value);
    CHECK(j.certified);

    CanonVerdict s = canonicity_verdict(snd(pair(top(), boolty(), tt(), truelit())));
    CHECK(s.value);
}

TEST_CASE("generated closed terms") {
    GenConfig cfg;
    cfg.seed = 2;
    Generator g(cfg);
    for (int i = 0; i < 100; ++i) {
        TmPtr t = g.tm(Ctx{}, boolty());
        CanonVerdict v = canonicity_verdict(t);
        CHECK(v.certified);
        CHECK(canonicity_verdict(t).value == v.value);
    }
}

TEST_CASE("refusals") {
    CHECK_THROWS_AS(canonicity_verdict(Ctx{{boolty()}}, var0()), OpenTerm);
    CHECK_THROWS_AS(canonicity_verdict(tt()), KernelError);
}
