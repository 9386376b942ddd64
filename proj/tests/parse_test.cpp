#include "doctest.h"

#include <string>
#include <vector>

#include "ttk/error.hpp"
#include "ttk/parse.hpp"
#include "ttk/print.hpp"

using namespace ttk;

TEST_CASE("reading terms") {
    TmPtr t = parse_tm("(lam (bool) (q))");
    REQUIRE(t->kind == TmKind::Lam);
    CHECK(equal(*t, *lam(boolty(), var0())));
    CHECK(equal(*parse_tm("(v 1)"), *tmsub(var0(), wk())));
    CHECK(equal(*parse_tm("(v 0)"), *var0()));
    CHECK(equal(*parse_tm("(lam (u 0) (lam (el (q)) (q)))"), *lam(univ(Level{0}), lam(el(var0()), var0()))));
}

TEST_CASE("printing") {
    CHECK(print(*truelit()) == "(true)");
    CHECK(print(*tmsub(var0(), comp(wk(), wk()))) == "(v 2)");
    CHECK(print(*tmsub(var0(), wk())) == "(v 1)");
    CHECK(print(Ctx{{boolty(), univ(Level{2})}}) == "(ctx (bool) (u 2))");
}

TEST_CASE("print after parse canonicalizes") {
    const std::vector<std::pair<std::string, std::string>> cases = {
        {"(lam   (bool)\n (q))", "(lam (bool) (q))"},
        {"(tmsub (q) (comp (p) (p)))", "(v 2)"},
        {"(tmsub (q) (p)) ; trailing comment", "(v 1)"},
        {"(if (bool) (true) (false) (v 0))", "(if (bool) (true) (false) (q))"},
        {"(pair (bool) (top) (true) (tt))", "(pair (bool) (top) (true) (tt))"},
        {"(j (idt (bool) (v 3) (v 1)) (refl (v 1)) (q))", "(j (idt (bool) (v 3) (v 1)) (refl (v 1)) (q))"},
    };
    for (const auto& [src, want] : cases) {
        std::string once = print(*parse_tm(src));
        CHECK(once == want);
        CHECK(print(*parse_tm(once)) == once);
    }
    for (const char* s : {"(pi (u 0) (pi (el (q)) (el (v 1))))", "(sigma (bool) (idt (bool) (q) (true)))",
                          "(tysub (el (code (top))) (ext (eps) (bool) (false)))"}) {
        CHECK(print(*parse_ty(s)) == s);
    }
    for (const char* s : {"(id)", "(comp (p) (ext (id) (bool) (true)))", "(lift (p) (bool))"}) {
        CHECK(print(*parse_ty(std::string("(tysub (bool) ") + s + ")")) ==
              print(*tysub(boolty(), parse_sub(s))));
    }
}

TEST_CASE("directives") {
    Directive d = parse_directive("(conv-sub (ctx (bool)) (ctx) (comp (id) (p)) (p))");
    CHECK(d.kind == DirectiveKind::ConvSub);
    CHECK(equal(d.cod, Ctx{}));
    d = parse_directive("(inject (tm (ctx (bool)) (q)))");
    CHECK(d.kind == DirectiveKind::Inject);
    CHECK(d.entity.sort == EntitySort::Tm);
    d = parse_directive("(canon (true))");
    CHECK(d.kind == DirectiveKind::Canon);
}

TEST_CASE("malformed input") {
    for (const char* s : {"(lam (bool)", "(lam (bool) (q) (q))", "(frob)", "(true", "(v x)", ")"}) {
        CAPTURE(s);
        try {
            parse_tm(s);
            FAIL("accepted");
        } catch (const KernelError& e) {
            CHECK(e.error_class() == ErrorClass::ParseError);
        }
    }
    CHECK_THROWS_AS(parse_directive("(nf (ctx) (true)) (nf (ctx) (true))"), KernelError);
}
