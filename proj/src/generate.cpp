#include "ttk/generate.hpp"

#include <algorithm>
#include <functional>
#include <vector>

#include "ttk/conversion.hpp"
#include "ttk/error.hpp"

namespace ttk {

namespace {

struct OutOfFuel {};

TyPtr nf(const Scope& sc, const TyValPtr& v) {
    TyScope types = sc.types;
    return readback(types, v);
}

TmPtr nf(const Scope& sc, const ValPtr& v, const TyValPtr& ty) {
    TyScope types = sc.types;
    return readback(types, v, ty);
}

bool same_ty(const Scope& sc, const TyValPtr& a, const TyValPtr& b) {
    TyScope types = sc.types;
    return conv_ty(types, a, b);
}

}  // namespace

// Internal recursion. Every function takes a node budget and returns null on
// failure; callers try other candidates.
class GenImpl {
public:
    explicit GenImpl(Generator& g) : g_(g) {}

    using Candidate = std::pair<unsigned, std::function<TmPtr()>>;

    TmPtr first_success(std::vector<Candidate> cands) {
        while (!cands.empty()) {
            unsigned total = 0;
            for (const auto& c : cands) total += c.first;
            if (total == 0) return nullptr;
            unsigned pick = g_.below(total);
            std::size_t k = 0;
            while (pick >= cands[k].first) pick -= cands[k++].first;
            if (TmPtr t = cands[k].second()) return t;
            cands.erase(cands.begin() + static_cast<std::ptrdiff_t>(k));
        }
        return nullptr;
    }

    void burn() {
        if (g_.fuel_ == 0) throw OutOfFuel{};
        --g_.fuel_;
    }

    // Terms ------------------------------------------------------------------

    TmPtr tm(const Scope& sc, const TyValPtr& goal, int size) {
        burn();
        const unsigned elim = size >= 3 ? g_.cfg_.elim_weight : 0;
        std::vector<Candidate> cands;
        cands.push_back({4, [&] { return variable(sc, goal); }});
        cands.push_back({5, [&] { return intro(sc, goal, size); }});
        cands.push_back({elim, [&] { return spine(sc, goal, size); }});
        cands.push_back({elim, [&] { return beta(sc, goal, size); }});
        cands.push_back({elim, [&] { return proj_redex(sc, goal, size); }});
        cands.push_back({elim, [&] { return if_redex(sc, goal, size); }});
        cands.push_back({elim, [&] { return j_redex(sc, goal, size); }});
        cands.push_back({elim, [&] { return raw_app(sc, goal, size); }});
        cands.push_back({size >= 2 ? 1u : 0u, [&] { return explicit_sub(sc, goal, size); }});
        return first_success(std::move(cands));
    }

    TmPtr variable(const Scope& sc, const TyValPtr& goal) {
        std::vector<unsigned> fits;
        for (std::size_t lvl = 0; lvl < sc.depth(); ++lvl)
            if (same_ty(sc, sc.types[lvl], goal)) fits.push_back(static_cast<unsigned>(sc.depth() - 1 - lvl));
        if (fits.empty()) return nullptr;
        return var(fits[g_.below(static_cast<unsigned>(fits.size()))]);
    }

    TmPtr intro(const Scope& sc, const TyValPtr& goal, int size) {
        switch (goal->kind) {
            case TyValKind::Pi: {
                if (size < 2) return nullptr;
                TyPtr dom = nf(sc, goal->dom);
                Scope inner = sc.extend(dom);
                TmPtr body = tm(inner, instantiate(goal->cod, fresh(sc.depth())), size - 1);
                return body ? lam(dom, body) : nullptr;
            }
            case TyValKind::Sigma: {
                if (size < 3) return nullptr;
                TyPtr dom = nf(sc, goal->dom);
                TyPtr cod;
                {
                    TyScope types = sc.types;
                    types.push_back(goal->dom);
                    cod = readback(types, instantiate(goal->cod, fresh(sc.depth())));
                }
                TmPtr u = tm(sc, goal->dom, (size - 1) / 2);
                if (!u) return nullptr;
                TmPtr v = tm(sc, instantiate(goal->cod, eval(sc.env, *u)), (size - 1) / 2);
                return v ? pair(dom, cod, u, v) : nullptr;
            }
            case TyValKind::Top: return tt();
            case TyValKind::Bool: return g_.chance(50) ? truelit() : falselit();
            case TyValKind::U: {
                if (size < 2) return nullptr;
                TyPtr a = ty(sc, goal->level, size - 1);
                return a ? code(a) : nullptr;
            }
            case TyValKind::Id: {
                TyScope types = sc.types;
                if (!conv_val(types, goal->lhs, goal->rhs, goal->dom)) return nullptr;
                return refl(nf(sc, goal->lhs, goal->dom));
            }
            case TyValKind::ElNe: return nullptr;
        }
        return nullptr;
    }

    // Eliminate a variable (apply, project) until its type matches the goal.
    TmPtr spine(const Scope& sc, const TyValPtr& goal, int size) {
        if (sc.depth() == 0) return nullptr;
        unsigned n = g_.below(static_cast<unsigned>(sc.depth()));
        TmPtr head = var(n);
        ValPtr hv = eval(sc.env, *head);
        TyValPtr hty = sc.types[sc.depth() - 1 - n];
        int budget = size - 1;
        for (int step = 0; step < 3; ++step) {
            switch (hty->kind) {
                case TyValKind::Pi: {
                    TmPtr arg = tm(sc, hty->dom, std::max(1, budget / 2));
                    if (!arg) return nullptr;
                    budget -= 2;
                    ValPtr av = eval(sc.env, *arg);
                    head = apply1(head, nf(sc, hty->dom), arg);
                    hv = vapply(hv, av);
                    hty = instantiate(hty->cod, av);
                    break;
                }
                case TyValKind::Sigma:
                    if (g_.chance(50)) {
                        head = fst(head);
                        hv = vfst(hv);
                        hty = hty->dom;
                    } else {
                        hty = instantiate(hty->cod, vfst(hv));
                        head = snd(head);
                        hv = vsnd(hv);
                    }
                    --budget;
                    break;
                default: return nullptr;
            }
            if (same_ty(sc, hty, goal)) return head;
            if (budget <= 0) return nullptr;
        }
        return nullptr;
    }

    // (lam X body) $ arg, with body non-dependent on the bound variable.
    TmPtr beta(const Scope& sc, const TyValPtr& goal, int size) {
        TyPtr x = ty(sc, g_.random_level(), std::max(1, size / 4));
        if (!x) return nullptr;
        TmPtr body = tm(sc.extend(x), goal, size / 2);
        if (!body) return nullptr;
        TmPtr arg = tm(sc, eval(sc.env, *x), size / 4);
        if (!arg) return nullptr;
        if (g_.chance(30)) return tmsub(body, ext(id_sub(), x, arg));
        return apply1(lam(x, body), x, arg);
    }

    TmPtr proj_redex(const Scope& sc, const TyValPtr& goal, int size) {
        TyPtr x = ty(sc, g_.random_level(), std::max(1, size / 4));
        if (!x) return nullptr;
        TmPtr other = tm(sc, eval(sc.env, *x), size / 4);
        if (!other) return nullptr;
        TmPtr t = tm(sc, goal, size / 2);
        if (!t) return nullptr;
        TyPtr g = nf(sc, goal);
        if (g_.chance(50)) return fst(pair(g, tysub(x, wk()), t, other));
        return snd(pair(x, tysub(g, wk()), other, t));
    }

    TmPtr if_redex(const Scope& sc, const TyValPtr& goal, int size) {
        TmPtr b = tm(sc, vbool(), size / 4);
        if (!b) return nullptr;
        TmPtr on_true = tm(sc, goal, size / 3);
        if (!on_true) return nullptr;
        TmPtr on_false = tm(sc, goal, size / 3);
        if (!on_false) return nullptr;
        return ite(tysub(nf(sc, goal), wk()), on_true, on_false, b);
    }

    TmPtr j_redex(const Scope& sc, const TyValPtr& goal, int size) {
        TyPtr x = ty(sc, g_.random_level(), std::max(1, size / 5));
        if (!x) return nullptr;
        TyValPtr xv = eval(sc.env, *x);
        TmPtr u = tm(sc, xv, size / 5);
        if (!u) return nullptr;
        ValPtr uv = eval(sc.env, *u);
        TmPtr e = tm(sc, vid(xv, uv, uv), size / 5);
        if (!e) return nullptr;
        TmPtr w = tm(sc, goal, size / 3);
        if (!w) return nullptr;
        return jelim(tysub(nf(sc, goal), wk_n(2)), w, e);
    }

    // app (lam A t) where A is the last context entry.
    TmPtr raw_app(const Scope& sc, const TyValPtr& goal, int size) {
        if (sc.depth() == 0) return nullptr;
        TmPtr t = tm(sc, goal, size - 2);
        if (!t) return nullptr;
        return app(lam(sc.ctx.last(), t));
    }

    TmPtr explicit_sub(const Scope& sc, const TyValPtr& goal, int size) {
        TmPtr t = tm(sc, goal, size - 1);
        if (!t) return nullptr;
        return tmsub(t, id_sub());
    }

    // Types ------------------------------------------------------------------

    TyPtr ty(const Scope& sc, Level j, int size) {
        burn();
        std::vector<std::pair<unsigned, std::function<TyPtr()>>> cands;
        if (j.value == 0) {
            cands.push_back({3, [] { return boolty(); }});
            cands.push_back({2, [] { return top(); }});
        } else {
            cands.push_back({3, [&] { return univ(Level{j.value - 1}); }});
        }
        if (size >= 2) {
            cands.push_back({2, [&] { return decode(sc, j, size); }});
            cands.push_back({3, [&] { return binder(sc, j, size, true); }});
            cands.push_back({2, [&] { return binder(sc, j, size, false); }});
            cands.push_back({1, [&] { return identity(sc, j, size); }});
            cands.push_back({1, [&] { return substituted(sc, j, size); }});
        }
        while (!cands.empty()) {
            unsigned total = 0;
            for (const auto& c : cands) total += c.first;
            unsigned pick = g_.below(total);
            std::size_t k = 0;
            while (pick >= cands[k].first) pick -= cands[k++].first;
            if (TyPtr a = cands[k].second()) return a;
            cands.erase(cands.begin() + static_cast<std::ptrdiff_t>(k));
        }
        return nullptr;
    }

    TyPtr decode(const Scope& sc, Level j, int size) {
        if (j.value + 1 > g_.cfg_.max_level) return nullptr;
        TmPtr a = tm(sc, vuniv(j), size - 1);
        return a ? el(a) : nullptr;
    }

    TyPtr binder(const Scope& sc, Level j, int size, bool is_pi) {
        if (size < 3) return nullptr;
        // One side reaches level j exactly, the other stays at or below it.
        Level i = j, k = Level{g_.below(j.value + 1)};
        if (g_.chance(50)) std::swap(i, k);
        TyPtr a = ty(sc, i, (size - 1) / 2);
        if (!a) return nullptr;
        TyPtr b = ty(sc.extend(a), k, (size - 1) / 2);
        if (!b) return nullptr;
        return is_pi ? pi(a, b) : sigma(a, b);
    }

    TyPtr identity(const Scope& sc, Level j, int size) {
        if (size < 4) return nullptr;
        TyPtr a = ty(sc, j, size / 3);
        if (!a) return nullptr;
        TyValPtr av = eval(sc.env, *a);
        TmPtr u = tm(sc, av, size / 3);
        if (!u) return nullptr;
        if (g_.chance(50)) return idty(a, u, u);
        TmPtr v = tm(sc, av, size / 3);
        return v ? idty(a, u, v) : nullptr;
    }

    TyPtr substituted(const Scope& sc, Level j, int size) {
        auto [s, d] = sub(sc, size / 3);
        if (!s) return nullptr;
        TyPtr a = ty(Scope::of(d), j, size / 2);
        return a ? tysub(a, s) : nullptr;
    }

    // Substitutions ---------------------------------------------------------

    std::pair<SubPtr, Ctx> sub(const Scope& sc, int size) {
        burn();
        unsigned roll = g_.below(10);
        if (size <= 1 || roll < 2) return {id_sub(), sc.ctx};
        if (roll < 3) return {eps(), Ctx{}};
        if (roll < 5 && !sc.ctx.empty()) return {wk(), sc.ctx.prefix(sc.ctx.size() - 1)};
        if (roll < 7) {
            auto [d, mid] = sub(sc, size / 2);
            if (!d) return {nullptr, {}};
            auto [s, cod] = sub(Scope::of(mid), size / 2);
            if (!s) return {nullptr, {}};
            return {comp(s, d), cod};
        }
        auto [s, d] = sub(sc, size / 2);
        if (!s) return {nullptr, {}};
        if (d.size() >= g_.cfg_.max_ctx_len + 1) return {s, d};
        TyPtr a = ty(Scope::of(d), g_.random_level(), std::max(1, size / 3));
        if (!a) return {nullptr, {}};
        TmPtr t = tm(sc, eval(eval(sc.env, *s), *a), size / 3);
        if (!t) return {nullptr, {}};
        return {ext(s, a, t), d.extend(a)};
    }

    SubPtr sub_into(const Scope& sc, const Ctx& d, int size) {
        burn();
        if (conv_ctx(sc.ctx, d) && g_.chance(30)) return id_sub();
        if (!sc.ctx.empty() && g_.chance(30) && conv_ctx(sc.ctx.prefix(sc.ctx.size() - 1), d)) return wk();
        if (size >= 3 && g_.chance(25)) {
            auto [first, mid] = sub(sc, size / 3);
            if (first) {
                if (SubPtr rest = sub_into(Scope::of(mid), d, size / 2)) return comp(rest, first);
            }
        }
        if (d.empty()) return eps();
        SubPtr head = sub_into(sc, d.prefix(d.size() - 1), size - 1);
        if (!head) return nullptr;
        TmPtr t = tm(sc, eval(eval(sc.env, *head), *d.last()), std::max(1, size / 2));
        return t ? ext(head, d.last(), t) : nullptr;
    }

    Ctx ctx(int size) {
        Scope sc;
        if (size <= 0) return sc.ctx;
        unsigned len = g_.below(g_.cfg_.max_ctx_len + 1);
        for (unsigned k = 0; k < len; ++k) {
            TyPtr a = ty(sc, g_.random_level(), std::max(1, size / 3));
            if (!a) break;
            sc = sc.extend(a);
        }
        return sc.ctx;
    }

private:
    Generator& g_;
};

Generator::Generator(GenConfig cfg) : cfg_(cfg), rng_(cfg.seed) {}

namespace {

template <class F>
auto with_retries(Generator& g, F&& attempt) -> decltype(attempt()) {
    for (unsigned tries = 0; tries < g.config().retries; ++tries) {
        try {
            if (auto r = attempt()) return r;
        } catch (const OutOfFuel&) {
        }
    }
    throw GenExhausted("generator ran out of fuel (seed " + std::to_string(g.config().seed) + ")");
}

}  // namespace

Ctx Generator::ctx() {
    refuel();
    Ctx out;
    try {
        out = GenImpl(*this).ctx(static_cast<int>(cfg_.max_nodes));
    } catch (const OutOfFuel&) {
        out = Ctx{};
    }
    coverage_.add(out);
    return out;
}

TyPtr Generator::ty(const Ctx& g, Level j) {
    Scope sc = Scope::of(g);
    TyPtr out = with_retries(*this, [&] {
        refuel();
        return GenImpl(*this).ty(sc, j, static_cast<int>(cfg_.max_nodes));
    });
    coverage_.add(*out);
    return out;
}

TyPtr Generator::ty(const Ctx& g) { return ty(g, random_level()); }

std::pair<SubPtr, Ctx> Generator::sub(const Ctx& g) {
    Scope sc = Scope::of(g);
    Ctx cod;
    SubPtr out = with_retries(*this, [&] {
        refuel();
        auto [s, d] = GenImpl(*this).sub(sc, static_cast<int>(cfg_.max_nodes));
        cod = d;
        return s;
    });
    coverage_.add(*out);
    return {out, cod};
}

SubPtr Generator::sub_into(const Ctx& g, const Ctx& d) {
    Scope sc = Scope::of(g);
    SubPtr out = with_retries(*this, [&] {
        refuel();
        return GenImpl(*this).sub_into(sc, d, static_cast<int>(cfg_.max_nodes));
    });
    coverage_.add(*out);
    return out;
}

TmPtr Generator::tm(const Ctx& g, const TyPtr& a) {
    Scope sc = Scope::of(g);
    TyValPtr goal = eval(sc.env, *a);
    TmPtr out = with_retries(*this, [&] {
        refuel();
        return GenImpl(*this).tm(sc, goal, static_cast<int>(cfg_.max_nodes));
    });
    coverage_.add(*out);
    return out;
}

std::pair<TmPtr, TyPtr> Generator::tm_any(const Ctx& g) {
    Scope sc = Scope::of(g);
    TyPtr ty_out;
    TmPtr out = with_retries(*this, [&]() -> TmPtr {
        refuel();
        GenImpl impl(*this);
        int size = static_cast<int>(cfg_.max_nodes);
        TyPtr a = impl.ty(sc, random_level(), std::max(1, size / 3));
        if (!a) return nullptr;
        TmPtr t = impl.tm(sc, eval(sc.env, *a), size);
        if (t) ty_out = a;
        return t;
    });
    coverage_.add(*out);
    coverage_.add(*ty_out);
    return {out, ty_out};
}

}  // namespace ttk
