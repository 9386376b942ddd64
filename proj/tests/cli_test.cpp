#include "doctest.h"

#include <sstream>
#include <string>

#include "ttk/cli.hpp"

using namespace ttk;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& src) {
    std::ostringstream out;
    int code = run_source(src, out);
    return {code, out.str()};
}

std::string last_line(const std::string& s) {
    std::string t = s.substr(0, s.size() - 1);
    return t.substr(t.rfind('\n') + 1);
}

}  // namespace

TEST_CASE("accepting directives") {
    Run r = run("(check-tm (ctx) (lam (u 0) (lam (el (q)) (q))))");
    CHECK(r.code == 0);
    CHECK(r.out.find("(pi (u 0) (pi (el (q)) (el (v 1))))") != std::string::npos);
    CHECK(last_line(r.out) == "RESULT: accept");

    CHECK(run("(check-ty (ctx) (u 0))").code == 0);
    CHECK(run("(nf (ctx) (if (bool) (false) (true) (true)))").out.find("nf: (false)") != std::string::npos);
    CHECK(run("(conv-ty (ctx) (tysub (bool) (eps)) (bool))").code == 0);
    CHECK(run("(conv-sub (ctx (bool)) (ctx) (comp (id) (p)) (p))").code == 0);
    CHECK(run("(termify (ctx (bool)))").code == 0);
    CHECK(run("(param (tm (ctx) (true)))").code == 0);
    CHECK(run("(inject (tm (ctx) (true)))").code == 0);
    CHECK(run("(canon (snd (pair (top) (bool) (tt) (false))))").out.find("value: false") != std::string::npos);
}

TEST_CASE("rejections") {
    Run r = run("(conv-tm (ctx) (pi (bool) (bool)) (lam (bool) (if (bool) (true) (false) (q))) (lam (bool) (q)))");
    CHECK(r.code == 1);
    CHECK(r.out.find("lhs nf:") != std::string::npos);
    CHECK(last_line(r.out) == "RESULT: reject");
}

TEST_CASE("errors") {
    Run p = run("(check-tm (ctx) (lam (bool)");
    CHECK(p.code == 2);
    CHECK(last_line(p.out) == "RESULT: error ParseError");
    CHECK(run("(frob (ctx))").code == 2);

    Run t = run("(check-tm (ctx) (app (true)))");
    CHECK(t.code == 3);
    CHECK(last_line(t.out).rfind("RESULT: error", 0) == 0);
    CHECK(run("(check-tm (ctx (bool)) (app (q)))").code == 3);
    CHECK(run("(canon (tt))").code == 3);
    Run o = run("(canon (ctx (bool)) (q))");
    CHECK(o.code == 3);
    CHECK(last_line(o.out) == "RESULT: error OpenTerm");
}
