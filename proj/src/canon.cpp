#include "ttk/canon.hpp"

#include "ttk/conversion.hpp"
#include "ttk/print.hpp"
#include "ttk/value.hpp"

namespace ttk {

CanonVerdict canonicity_verdict(const Ctx& ctx, const TmPtr& t) {
    if (!ctx.empty()) throw OpenTerm();
    const Ctx empty;
    check_tm(empty, t, boolty());
    ValPtr v = eval(Env{}, *t);
    if (v->kind != ValKind::True && v->kind != ValKind::False) {
        TyScope types;
        throw NonCanonical(print(*readback(types, v, vbool())));
    }
    CanonVerdict out{.value = v->kind == ValKind::True};
    out.certified = conv_tm(empty, boolty(), t, out.value ? truelit() : falselit());
    return out;
}

}  // namespace ttk
