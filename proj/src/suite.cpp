#include "ttk/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>

#include "ttk/canon.hpp"
#include "ttk/conversion.hpp"
#include "ttk/equations.hpp"
#include "ttk/error.hpp"
#include "ttk/inject.hpp"
#include "ttk/param.hpp"
#include "ttk/print.hpp"

namespace ttk {

namespace {

constexpr std::string_view kNames[] = {"equations", "termified", "inject", "canon", "param", "hygiene", "witnesses"};

// splitmix64 over the user seed and a per-stream tag, so every suite and
// schema draws from its own deterministic stream.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t tag, std::uint64_t index) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (tag * 1000003ULL + index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

GenConfig config(const SuiteOptions& o, std::uint64_t tag, std::uint64_t index) {
    GenConfig cfg;
    cfg.seed = stream_seed(o.seed, tag, index);
    cfg.max_nodes = o.max_nodes;
    return cfg;
}

std::string entity_text(const Entity& x) {
    std::string out = "in " + print(x.ctx);
    if (x.ty) out += ": " + print(*x.ty);
    if (x.sub) out += ": " + print(*x.sub);
    if (x.tm) out += ": " + print(*x.tm);
    return out;
}

// Runs one property check; exceptions count as failures with their message.
class Recorder {
public:
    Recorder(SuiteReport& r, std::string name) : r_(r), index_(r.rows.size()) {
        r_.rows.push_back(SuiteRow{.name = std::move(name), .note = {}});
    }

    SuiteRow& row() { return r_.rows[index_]; }

    void check(const std::function<bool()>& prop, const std::function<std::string()>& what) {
        std::string detail;
        try {
            if (prop()) {
                ++row().passed;
                return;
            }
        } catch (const std::exception& e) {
            detail = std::string(" (") + e.what() + ")";
        }
        ++row().failed;
        if (row().failed <= 3) r_.failures.push_back(row().name + ": " + what() + detail);
    }

private:
    SuiteReport& r_;
    std::size_t index_;
};

using Verifier = bool (*)(const EqInstance&);

// Looks for a small rejected instance of the schema: sizes grow from 1, with
// a handful of fresh seeds per size.
std::optional<EqInstance> shrink(Schema s, Verifier verify, const SuiteOptions& o) {
    for (unsigned nodes = 1; nodes <= o.max_nodes; ++nodes) {
        for (unsigned k = 0; k < 16; ++k) {
            GenConfig cfg = config(o, 99, nodes * 100 + k);
            cfg.max_nodes = nodes;
            Generator g(cfg);
            try {
                EqInstance e = gen_eq_instance(g, s);
                if (!verify(e)) return e;
            } catch (const std::exception&) {
                continue;
            }
        }
    }
    return std::nullopt;
}

void equation_suite(SuiteReport& r, const SuiteOptions& o, Verifier verify, std::uint64_t tag) {
    unsigned idx = 0;
    for (Schema s : all_schemas()) {
        Generator g(config(o, tag, idx++));
        SuiteRow row{.name = std::string(schema_name(s)), .note = {}};
        std::optional<EqInstance> first_reject;
        for (unsigned i = 0; i < o.count; ++i) {
            try {
                EqInstance e = gen_eq_instance(g, s);
                if (verify(e)) {
                    ++row.passed;
                } else {
                    ++row.failed;
                    if (!first_reject) first_reject = e;
                }
            } catch (const std::exception& e) {
                ++row.failed;
                r.failures.push_back(row.name + ": " + e.what());
            }
        }
        if (first_reject) {
            std::optional<EqInstance> small = shrink(s, verify, o);
            const EqInstance& show = small && small->size() < first_reject->size() ? *small : *first_reject;
            r.failures.push_back(row.name + ": rejected " + show.describe());
        }
        r.rows.push_back(std::move(row));
    }
}

Entity lhs_entity(const EqInstance& e) {
    switch (e.sort) {
        case EntitySort::Ty: return ty_entity(e.ctx, e.lhs_ty);
        case EntitySort::Sub: return sub_entity(e.ctx, e.lhs_sub);
        default: return tm_entity(e.ctx, e.lhs_tm);
    }
}

Entity rhs_entity(const EqInstance& e) {
    switch (e.sort) {
        case EntitySort::Ty: return ty_entity(e.ctx, e.rhs_ty);
        case EntitySort::Sub: return sub_entity(e.ctx, e.rhs_sub);
        default: return tm_entity(e.ctx, e.rhs_tm);
    }
}

void inject_suite(SuiteReport& r, const SuiteOptions& o) {
    Injector inj;
    Generator g(config(o, 3, 0));
    {
        Recorder rec(r, "ctx iso");
        for (unsigned i = 0; i < o.count; ++i) {
            Ctx c = g.ctx();
            rec.check([&] {
                const CtxIso& iso = inj.ctx_iso(c);
                return iso.fwd_bwd_ok && iso.bwd_fwd_ok;
            }, [&] { return print(c); });
        }
    }
    auto embed = [&](const char* name, const std::function<Entity()>& draw) {
        Recorder rec(r, name);
        for (unsigned i = 0; i < o.count; ++i) {
            Entity x = draw();
            EmbedResult res;
            rec.check([&] { return (res = inj.check_embedding(x)).accept; },
                      [&] { return entity_text(x) + " nf " + res.lhs_nf + " vs " + res.rhs_nf; });
        }
    };
    embed("embed ty", [&] {
        Ctx c = g.ctx();
        return ty_entity(c, g.ty(c));
    });
    embed("embed sub", [&] {
        Ctx c = g.ctx();
        return sub_entity(c, g.sub(c).first);
    });
    embed("embed tm", [&] {
        Ctx c = g.ctx();
        return tm_entity(c, g.tm_any(c).first);
    });
    {
        Recorder rec(r, "operator cases");
        for (const auto& c : operator_cases())
            rec.check([&] { return inj.check_embedding(c.entity).accept; }, [&] { return c.name; });
    }
    {
        // Equal pairs from equation instances and normal forms, unrelated
        // pairs of closed booleans.
        Recorder rec(r, "probe");
        unsigned equal_pairs = 0;
        Generator pg(config(o, 3, 1));
        for (unsigned i = 0; i < o.count; ++i) {
            Entity x, y;
            if (i % 3 == 0) {
                EqInstance e = gen_eq_instance(pg, all_schemas()[(i / 3) % kSchemaCount]);
                x = lhs_entity(e);
                y = rhs_entity(e);
            } else if (i % 3 == 1) {
                x = tm_entity(Ctx{}, pg.tm(Ctx{}, boolty()));
                y = tm_entity(Ctx{}, pg.tm(Ctx{}, boolty()));
            } else {
                Ctx c = pg.ctx();
                auto [t, a] = pg.tm_any(c);
                x = tm_entity(c, t);
                y = tm_entity(c, normalize_at(Scope::of(c), *t, *a));
            }
            rec.check([&] {
                ProbeResult p = inj.probe(x, y);
                equal_pairs += p.termified_equal;
                return !p.counterexample();
            }, [&] { return "counterexample " + entity_text(x) + " and " + entity_text(y); });
        }
        rec.row().note = std::to_string(equal_pairs) + " termified-equal";
    }
}

bool has_redex(const Tm& t);

bool has_redex(const Sub& s) {
    switch (s.kind) {
        case SubKind::Comp: return has_redex(*s.f) || has_redex(*s.g);
        case SubKind::Ext: return has_redex(*s.f) || has_redex(*s.tm);
        default: return false;
    }
}

bool has_redex(const Tm& t) {
    switch (t.kind) {
        case TmKind::App:
            if (t.t->kind == TmKind::Lam) return true;
            break;
        case TmKind::Fst:
        case TmKind::Snd:
            if (t.t->kind == TmKind::Pair) return true;
            break;
        case TmKind::If:
            if (t.v->kind == TmKind::True || t.v->kind == TmKind::False) return true;
            break;
        case TmKind::J:
            if (t.u->kind == TmKind::Refl) return true;
            break;
        default: break;
    }
    for (const TmPtr* c : {&t.t, &t.u, &t.v})
        if (*c && has_redex(**c)) return true;
    return t.sub && has_redex(*t.sub);
}

bool uses(const Tm& t, Op op) {
    Coverage c;
    c.add(t);
    return c.counts[static_cast<std::size_t>(op)] > 0;
}

void canon_suite(SuiteReport& r, const SuiteOptions& o) {
    Generator g(config(o, 4, 0));
    unsigned with_if = 0, with_j = 0, with_proj = 0, with_redex = 0;
    Recorder rec(r, "certified");
    std::vector<std::pair<TmPtr, bool>> seen;
    for (unsigned i = 0; i < o.count; ++i) {
        TmPtr t = g.tm(Ctx{}, boolty());
        with_if += uses(*t, Op::If);
        with_j += uses(*t, Op::J);
        with_proj += uses(*t, Op::Fst) || uses(*t, Op::Snd);
        with_redex += has_redex(*t);
        rec.check([&] {
            CanonVerdict v = canonicity_verdict(t);
            seen.emplace_back(t, v.value);
            return v.certified;
        }, [&] { return print(*t); });
    }
    rec.row().note = "if " + std::to_string(with_if) + ", J " + std::to_string(with_j) + ", fst/snd " +
                     std::to_string(with_proj) + ", redex " + std::to_string(with_redex);
    Recorder det(r, "deterministic");
    for (const auto& [t, value] : seen)
        det.check([&] { return canonicity_verdict(t).value == value; }, [&] { return print(*t); });
    Recorder other(r, "not both literals");
    for (const auto& [t, value] : seen)
        other.check([&] { return !conv_tm(Ctx{}, boolty(), t, value ? falselit() : truelit()); },
                    [&] { return print(*t); });
    // Terms that must mention each interesting former.
    Recorder mix(r, "coverage");
    for (auto [name, n] : {std::pair{"if", with_if}, {"J", with_j}, {"fst/snd", with_proj}, {"redex", with_redex}})
        mix.check([&] { return n > 0; }, [&] { return std::string("no closed Bool term used ") + name; });
}

void param_suite(SuiteReport& r, const SuiteOptions& o) {
    Generator g(config(o, 5, 0));
    Coverage inputs;
    auto sort = [&](const char* name, const std::function<Entity()>& draw) {
        Recorder rec(r, name);
        for (unsigned i = 0; i < o.count; ++i) {
            Entity x = draw();
            rec.check([&] {
                param(x);
                inputs.add(x.ctx);
                if (x.ty) inputs.add(*x.ty);
                if (x.sub) inputs.add(*x.sub);
                if (x.tm) inputs.add(*x.tm);
                return true;
            }, [&] { return entity_text(x); });
        }
    };
    sort("con", [&] { return con_entity(g.ctx()); });
    sort("ty", [&] {
        Ctx c = g.ctx();
        return ty_entity(c, g.ty(c));
    });
    sort("sub", [&] {
        Ctx c = g.ctx();
        return sub_entity(c, g.sub(c).first);
    });
    sort("tm", [&] {
        Ctx c = g.ctx();
        return tm_entity(c, g.tm_any(c).first);
    });
    {
        Recorder rec(r, "operator cases");
        for (const auto& c : operator_cases()) {
            rec.check([&] {
                param(c.entity);
                inputs.add(c.entity.ctx);
                if (c.entity.ty) inputs.add(*c.entity.ty);
                if (c.entity.sub) inputs.add(*c.entity.sub);
                if (c.entity.tm) inputs.add(*c.entity.tm);
                return true;
            }, [&] { return c.name; });
        }
    }
    {
        Recorder rec(r, "equations");
        const unsigned per = std::max(1u, o.count / 20);
        unsigned idx = 0;
        for (Schema s : all_schemas()) {
            Generator eg(config(o, 6, idx++));
            for (unsigned i = 0; i < per; ++i) {
                EqInstance e = gen_eq_instance(eg, s);
                rec.check([&] { return verify_param_equation(e); }, [&] { return e.describe(); });
            }
        }
    }
    Recorder cov(r, "coverage");
    cov.check([&] { return inputs.missing().empty(); }, [&] {
        std::string out = "no translated input used";
        for (Op op : inputs.missing()) out += " " + std::string(op_name(op));
        return out;
    });
}

void hygiene_suite(SuiteReport& r, const SuiteOptions& o) {
    Generator g(config(o, 7, 0));
    Recorder idem(r, "nf idempotent");
    Recorder typed(r, "nf well typed");
    Recorder refl_(r, "conv reflexive");
    for (unsigned i = 0; i < o.count; ++i) {
        Ctx c = g.ctx();
        auto [t, a] = g.tm_any(c);
        TyPtr b = g.ty(c);
        Scope sc = Scope::of(c);
        auto what = [&] { return "in " + print(c) + ": " + print(*t) + " : " + print(*a); };
        idem.check([&] {
            TmPtr n1 = normalize_at(sc, *t, *a);
            TyPtr m1 = normalize_ty(sc, *b);
            return equal(*n1, *normalize_at(sc, *n1, *a)) && equal(*m1, *normalize_ty(sc, *m1));
        }, what);
        typed.check([&] {
            check_tm(c, normalize_at(sc, *t, *a), a);
            infer_ty(c, normalize_ty(sc, *b));
            return true;
        }, what);
        refl_.check([&] { return conv_tm(c, a, t, t) && conv_ty(c, b, b); }, what);
    }
    Recorder sym(r, "conv symmetric");
    Recorder trans(r, "conv transitive");
    Recorder cong(r, "conv congruence");
    Generator eg(config(o, 7, 1));
    for (unsigned i = 0; i < o.count; ++i) {
        // Only term equations here; congruence wraps both sides.
        EqInstance e;
        do {
            e = gen_eq_instance(eg, all_schemas()[eg.below(kSchemaCount)]);
        } while (e.sort != EntitySort::Tm);
        auto what = [&] { return e.describe(); };
        sym.check([&] { return conv_tm(e.ctx, e.ty, e.lhs_tm, e.rhs_tm) == conv_tm(e.ctx, e.ty, e.rhs_tm, e.lhs_tm); },
                  what);
        trans.check([&] {
            TmPtr n = normalize_at(Scope::of(e.ctx), *e.rhs_tm, *e.ty);
            bool lr = conv_tm(e.ctx, e.ty, e.lhs_tm, e.rhs_tm);
            bool rn = conv_tm(e.ctx, e.ty, e.rhs_tm, n);
            return !(lr && rn) || conv_tm(e.ctx, e.ty, e.lhs_tm, n);
        }, what);
        cong.check([&] {
            bool ok = conv_tm(e.ctx, idty(e.ty, e.lhs_tm, e.lhs_tm), refl(e.lhs_tm), refl(e.rhs_tm));
            Ctx wider = e.ctx.extend(boolty());
            ok = ok && conv_tm(wider, tysub(e.ty, wk()), tmsub(e.lhs_tm, wk()), tmsub(e.rhs_tm, wk()));
            if (!e.ctx.empty()) {
                Ctx tail = e.ctx.prefix(e.ctx.size() - 1);
                const TyPtr& dom = e.ctx.last();
                ok = ok && conv_tm(tail, pi(dom, e.ty), lam(dom, e.lhs_tm), lam(dom, e.rhs_tm));
            }
            return ok;
        }, what);
    }
    Recorder gold(r, "golden eta");
    gold.check([] { return conv_tm(Ctx{{top()}}, top(), var0(), tt()); }, [] { return std::string("top eta"); });
    gold.check([] {
        TyPtr f = pi(boolty(), boolty());
        return conv_tm(Ctx{{f}}, tysub(f, wk()), var0(), lam(boolty(), app(var0())));
    }, [] { return std::string("pi eta"); });
}

void witness_suite(SuiteReport& r) {
    Recorder rec(r, "witness examples");
    rec.check([] {
        TmPtr idfun = lam(univ(Level{0}), lam(el(var0()), var0()));
        TyPtr want = pi(univ(Level{0}), pi(el(var0()), el(var(1))));
        check_tm(Ctx{}, idfun, want);
        return equal(*normalize_ty(Ctx{}, synth_tm(Ctx{}, idfun)), *want);
    }, [] { return std::string("idfun type"); });
    TyPtr bb = pi(boolty(), boolty());
    TmPtr f = lam(boolty(), ite(boolty(), truelit(), falselit(), var0()));
    TmPtr g = lam(boolty(), var0());
    rec.check([&] { return !conv_tm(Ctx{}, bb, f, g); }, [] { return std::string("f and g convertible"); });
    for (TmPtr b : {truelit(), falselit()}) {
        rec.check([&] {
            CanonVerdict vf = canonicity_verdict(apply1(f, boolty(), b));
            CanonVerdict vg = canonicity_verdict(apply1(g, boolty(), b));
            return vf.certified && vg.certified && vf.value == vg.value;
        }, [&] { return "f and g differ on " + print(*b); });
    }
    rec.check([&] {
        ProbeResult p = Injector{}.probe(tm_entity(Ctx{}, f), tm_entity(Ctx{}, g));
        return !p.termified_equal && !p.equal;
    }, [] { return std::string("termified f and g convertible"); });
}

}  // namespace

std::string_view suite_name(Suite s) { return kNames[static_cast<int>(s)]; }

bool parse_suite(std::string_view name, Suite& out) {
    for (int i = 0; i < 7; ++i) {
        if (kNames[i] == name) {
            out = static_cast<Suite>(i);
            return true;
        }
    }
    return false;
}

unsigned SuiteReport::passed() const {
    unsigned n = 0;
    for (const auto& row : rows) n += row.passed;
    return n;
}

unsigned SuiteReport::failed() const {
    unsigned n = 0;
    for (const auto& row : rows) n += row.failed;
    return n;
}

SuiteReport run_suite(Suite s, const SuiteOptions& opts) {
    SuiteReport r{.suite = s, .rows = {}, .failures = {}};
    auto start = std::chrono::steady_clock::now();
    try {
        switch (s) {
            case Suite::Equations: equation_suite(r, opts, verify_equation, 1); break;
            case Suite::Termified: equation_suite(r, opts, verify_termified_equation, 2); break;
            case Suite::Inject: inject_suite(r, opts); break;
            case Suite::Canon: canon_suite(r, opts); break;
            case Suite::Param: param_suite(r, opts); break;
            case Suite::Hygiene: hygiene_suite(r, opts); break;
            case Suite::Witnesses: witness_suite(r); break;
        }
    } catch (const std::exception& e) {
        // Generation giving up mid-suite; the suite is incomplete, so it fails.
        r.failures.push_back(std::string("aborted: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::string format_report(const SuiteReport& r) {
    std::string out;
    char line[256];
    std::snprintf(line, sizeof line, "%s (%.1fs)\n", std::string(suite_name(r.suite)).c_str(), r.seconds);
    out += line;
    for (const auto& row : r.rows) {
        // Pad by code points; schema names carry non-ASCII symbols.
        std::size_t width = 0;
        for (unsigned char c : row.name) width += (c & 0xC0) != 0x80;
        out += "  " + row.name + std::string(width < 22 ? 22 - width : 1, ' ');
        std::snprintf(line, sizeof line, "%5u/%-5u %s", row.passed, row.passed + row.failed, row.note.c_str());
        std::string tail = line;
        while (!tail.empty() && tail.back() == ' ') tail.pop_back();
        out += tail + "\n";
    }
    for (const auto& f : r.failures) out += "  FAIL " + f + "\n";
    return out;
}

}  // namespace ttk
