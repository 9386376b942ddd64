#include "ttk/cli.hpp"

#include <string>

#include "ttk/canon.hpp"
#include "ttk/conversion.hpp"
#include "ttk/error.hpp"
#include "ttk/inject.hpp"
#include "ttk/param.hpp"
#include "ttk/print.hpp"
#include "ttk/termify.hpp"
#include "ttk/typecheck.hpp"

namespace ttk {

namespace {

// Translations print as trees and can be far larger than their normal
// forms; past this size only the normal form is shown.
constexpr std::size_t kPrintLimit = 4000;

int accept(std::ostream& out) {
    out << "RESULT: accept\n";
    return kAccept;
}

int reject(std::ostream& out) {
    out << "RESULT: reject\n";
    return kReject;
}

void show_tm(std::ostream& out, const char* label, const Ctx& g, const TmPtr& t, const TyPtr& a) {
    if (node_count(*t) <= kPrintLimit) out << label << ": " << print(*t) << "\n";
    out << label << " nf: " << print(*normalize_at(Scope::of(g), *t, *a)) << "\n";
}

void show_ty(std::ostream& out, const char* label, const Ctx& g, const TyPtr& a) {
    if (node_count(*a) <= kPrintLimit) out << label << ": " << print(*a) << "\n";
    out << label << " nf: " << print(*normalize_ty(g, a)) << "\n";
}

int run_entity(const Directive& d, std::ostream& out) {
    const Entity& x = d.entity;
    switch (d.kind) {
        case DirectiveKind::Termify: {
            TermifiedEntity r = termify(x);
            show_ty(out, "classifier", Ctx{}, r.classifier);
            show_tm(out, "term", Ctx{}, r.term, r.classifier);
            return accept(out);
        }
        case DirectiveKind::Param: {
            ParamEntity r = param(x);
            out << "context: " << print(r.ctx) << "\n";
            if (r.tm) {
                show_ty(out, "classifier", r.ctx, r.classifier);
                show_tm(out, "term", r.ctx, r.tm, r.classifier);
            } else {
                out << "level: " << r.level.value << "\n";
                show_ty(out, "type", r.ctx, r.ty);
            }
            return accept(out);
        }
        default: {
            check_ctx(x.ctx);
            Injector inj;
            if (x.sort == EntitySort::Con) {
                const CtxIso& iso = inj.ctx_iso(x.ctx);
                out << "fwd: " << print(*iso.fwd) << "\nbwd: " << print(*iso.bwd) << "\n";
                return accept(out);
            }
            EmbedResult r = inj.check_embedding(x);
            if (r.accept) return accept(out);
            out << "lhs nf: " << r.lhs_nf << "\nrhs nf: " << r.rhs_nf << "\n";
            return reject(out);
        }
    }
}

int run_kernel(const Directive& d, std::ostream& out) {
    switch (d.kind) {
        case DirectiveKind::CheckTm: {
            check_ctx(d.ctx);
            TyPtr a = synth_tm(d.ctx, d.tm);
            out << "type: " << print(*normalize_ty(d.ctx, a)) << "\n";
            return accept(out);
        }
        case DirectiveKind::CheckTy:
            check_ctx(d.ctx);
            out << "level: " << infer_ty(d.ctx, d.ty).value << "\n";
            return accept(out);
        case DirectiveKind::Nf: {
            check_ctx(d.ctx);
            TyPtr a = synth_tm(d.ctx, d.tm);
            out << "nf: " << print(*normalize_at(Scope::of(d.ctx), *d.tm, *a)) << "\n";
            return accept(out);
        }
        case DirectiveKind::ConvTm:
            check_ctx(d.ctx);
            if (conv_tm(d.ctx, d.ty, d.tm, d.tm2)) return accept(out);
            out << "lhs nf: " << print(*normalize_at(Scope::of(d.ctx), *d.tm, *d.ty)) << "\n";
            out << "rhs nf: " << print(*normalize_at(Scope::of(d.ctx), *d.tm2, *d.ty)) << "\n";
            return reject(out);
        case DirectiveKind::ConvTy:
            check_ctx(d.ctx);
            if (conv_ty(d.ctx, d.ty, d.ty2)) return accept(out);
            out << "lhs nf: " << print(*normalize_ty(d.ctx, d.ty)) << "\n";
            out << "rhs nf: " << print(*normalize_ty(d.ctx, d.ty2)) << "\n";
            return reject(out);
        case DirectiveKind::ConvSub: {
            check_ctx(d.ctx);
            check_ctx(d.cod);
            if (conv_sub(d.ctx, d.cod, d.sub, d.sub2)) return accept(out);
            Scope sc = Scope::of(d.ctx);
            for (const auto* s : {&d.sub, &d.sub2}) {
                out << (s == &d.sub ? "lhs nf:" : "rhs nf:");
                for (const auto& t : normalize_sub(sc, **s, d.cod)) out << " " << print(*t);
                out << "\n";
            }
            return reject(out);
        }
        case DirectiveKind::Canon: {
            CanonVerdict v = canonicity_verdict(d.ctx, d.tm);
            out << "value: " << (v.value ? "true" : "false") << "\ncertified: " << (v.certified ? "yes" : "no") << "\n";
            return v.certified ? accept(out) : reject(out);
        }
        default: return run_entity(d, out);
    }
}

}  // namespace

int run_directive(const Directive& d, std::ostream& out) {
    try {
        return run_kernel(d, out);
    } catch (const KernelError& e) {
        out << e.what() << "\n";
        out << "RESULT: error " << error_class_name(e.error_class()) << "\n";
        return e.error_class() == ErrorClass::ParseError ? kParseError : kTypeError;
    } catch (const OpenTerm& e) {
        out << e.what() << "\nRESULT: error OpenTerm\n";
        return kTypeError;
    } catch (const std::exception& e) {
        // NonCanonical, IsoFailure, TranslationIllTyped: a property failed.
        out << e.what() << "\n";
        return reject(out);
    }
}

int run_source(std::string_view src, std::ostream& out) {
    Directive d;
    try {
        d = parse_directive(src);
    } catch (const KernelError& e) {
        out << e.what() << "\nRESULT: error " << error_class_name(e.error_class()) << "\n";
        return kParseError;
    }
    return run_directive(d, out);
}

}  // namespace ttk
