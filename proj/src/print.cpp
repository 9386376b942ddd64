#include "ttk/print.hpp"

namespace ttk {

namespace {

class Printer {
public:
    void ty(const Ty& a) {
        switch (a.kind) {
            case TyKind::Sub: open("tysub"), ty(*a.a), sub(*a.sub); break;
            case TyKind::Pi: open("pi"), ty(*a.a), ty(*a.b); break;
            case TyKind::Sigma: open("sigma"), ty(*a.a), ty(*a.b); break;
            case TyKind::Top: open("top"); break;
            case TyKind::U: open("u"), out_ += ' ', out_ += std::to_string(a.level.value); break;
            case TyKind::El: open("el"), tm(*a.t); break;
            case TyKind::Bool: open("bool"); break;
            case TyKind::Id: open("idt"), ty(*a.a), tm(*a.t), tm(*a.u); break;
        }
        out_ += ')';
    }

    void tm(const Tm& t) {
        if (int n = var_index(t); n > 0) {
            open("v");
            out_ += ' ';
            out_ += std::to_string(n);
            out_ += ')';
            return;
        }
        switch (t.kind) {
            case TmKind::Sub: open("tmsub"), tm(*t.t), sub(*t.sub); break;
            case TmKind::Q: open("q"); break;
            case TmKind::Lam: open("lam"), ty(*t.a), tm(*t.t); break;
            case TmKind::App: open("app"), tm(*t.t); break;
            case TmKind::Pair: open("pair"), ty(*t.a), ty(*t.b), tm(*t.t), tm(*t.u); break;
            case TmKind::Fst: open("fst"), tm(*t.t); break;
            case TmKind::Snd: open("snd"), tm(*t.t); break;
            case TmKind::Tt: open("tt"); break;
            case TmKind::Code: open("code"), ty(*t.a); break;
            case TmKind::True: open("true"); break;
            case TmKind::False: open("false"); break;
            case TmKind::If: open("if"), ty(*t.a), tm(*t.t), tm(*t.u), tm(*t.v); break;
            case TmKind::Refl: open("refl"), tm(*t.t); break;
            case TmKind::J: open("j"), ty(*t.a), tm(*t.t), tm(*t.u); break;
        }
        out_ += ')';
    }

    void sub(const Sub& s) {
        switch (s.kind) {
            case SubKind::Id: open("id"); break;
            case SubKind::Comp: open("comp"), sub(*s.f), sub(*s.g); break;
            case SubKind::Eps: open("eps"); break;
            case SubKind::Ext: open("ext"), sub(*s.f), ty(*s.ty), tm(*s.tm); break;
            case SubKind::P: open("p"); break;
        }
        out_ += ')';
    }

    void ctx(const Ctx& g) {
        open("ctx");
        for (const auto& a : g.entries) ty(*a);
        out_ += ')';
    }

    std::string take() { return std::move(out_); }

private:
    // Children are separated from their head by one space.
    void open(const char* head) {
        if (!out_.empty() && out_.back() != '(') out_ += ' ';
        out_ += '(';
        out_ += head;
    }

    std::string out_;
};

}  // namespace

std::string print(const Ty& a) {
    Printer p;
    p.ty(a);
    return p.take();
}
std::string print(const Tm& t) {
    Printer p;
    p.tm(t);
    return p.take();
}
std::string print(const Sub& s) {
    Printer p;
    p.sub(s);
    return p.take();
}
std::string print(const Ctx& g) {
    Printer p;
    p.ctx(g);
    return p.take();
}

}  // namespace ttk
