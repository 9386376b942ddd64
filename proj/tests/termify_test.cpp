#include "doctest.h"

#include "ttk/conversion.hpp"
#include "ttk/print.hpp"
#include "ttk/termify.hpp"

using namespace ttk;

namespace {

const Ctx kEmpty{};
const Ctx kBool{{boolty()}};

bool same_termified(const Entity& x, const Entity& y) {
    TermifiedEntity a = termify(x);
    TermifiedEntity b = termify(y);
    REQUIRE(conv_ty(kEmpty, a.classifier, b.classifier));
    return conv_tm(kEmpty, a.classifier, a.term, b.term);
}

}  // namespace

TEST_CASE("termified contexts") {
    TermifiedEntity e = termify(con_entity(kEmpty));
    CHECK(equal(*e.term, *code(top())));
    CHECK(equal(*e.classifier, *univ(Level{0})));

    // Composed by hand from the clauses for •, Bool and ▷.
    TyPtr decoded_empty = el(code(top()));
    TmPtr want = code(sigma(decoded_empty, el(app(lam(decoded_empty, code(boolty()))))));
    TermifiedEntity b = termify(con_entity(kBool));
    CHECK(equal(*b.term, *want));
    check_tm(kEmpty, want, univ(Level{0}));
}

TEST_CASE("termified substitutions and terms") {
    TermifiedEntity e = termify(sub_entity(kEmpty, id_sub()));
    CHECK(equal(*e.term, *lam(el(code(top())), var0())));
    check_tm(kEmpty, e.term, e.classifier);

    TermifiedEntity t = termify(tm_entity(kBool, ite(boolty(), falselit(), truelit(), var0())));
    check_tm(kEmpty, t.term, t.classifier);
    CHECK(print(*normalize_ty(kEmpty, t.classifier)) == "(pi (sigma (top) (bool)) (bool))");
}

TEST_CASE("termified equations") {
    // idl with σ = p over • ▷ Bool
    CHECK(same_termified(sub_entity(kBool, comp(id_sub(), wk())), sub_entity(kBool, wk())));
    // Bool[] with σ = ε
    CHECK(same_termified(ty_entity(kEmpty, tysub(boolty(), eps())), ty_entity(kEmpty, boolty())));
    // Πη on a termified function
    TermifiedEntity f = termify(tm_entity(kEmpty, lam(boolty(), var0())));
    TyPtr dom = el(code(top()));
    CHECK(conv_tm(kEmpty, f.classifier, lam(dom, app(f.term)), f.term));
    // Distinct terms stay distinct.
    CHECK_FALSE(same_termified(tm_entity(kEmpty, truelit()), tm_entity(kEmpty, falselit())));
}

TEST_CASE("termify rejects ill-typed input") {
    CHECK_THROWS(termify(tm_entity(kEmpty, var0())));
    CHECK_THROWS(termify(ty_entity(kEmpty, el(truelit()))));
}
