#include "ccbox/testkit/gen.hpp"

#include <functional>
#include <stdexcept>

#include "ccbox/binding.hpp"
#include "ccbox/classify.hpp"
#include "ccbox/printer.hpp"
#include "ccbox/subtyping.hpp"
#include "ccbox/typing.hpp"

namespace ccbox::testkit {

namespace {

void tally(RuleCounter* counter, const char* rule) {
    if (counter) (*counter)[rule] += 1;
}

std::vector<Atom> termAtoms(const Env& g) {
    std::vector<Atom> out;
    for (const Binding& b : g.bindings()) {
        if (const auto* t = std::get_if<TermBinding>(&b)) out.push_back(t->atom);
    }
    return out;
}

std::vector<Atom> typeAtoms(const Env& g) {
    std::vector<Atom> out;
    for (const Binding& b : g.bindings()) {
        if (const auto* t = std::get_if<TypeBinding>(&b)) out.push_back(t->atom);
    }
    return out;
}

CaptureSet genCaptureSet(ChoiceStream& cs, const Env& g) {
    CaptureSet c;
    for (const Atom& a : termAtoms(g)) {
        if (cs.chance(30)) c = c.withAtom(a);
    }
    if (cs.chance(15)) c = c.withUniversal();
    return c;
}

}  // namespace

Type genWfPure(ChoiceStream& cs, const Env& g, AtomSupply& fresh, std::uint32_t maxDepth,
               RuleCounter* counter) {
    std::vector<Atom> tvars = typeAtoms(g);
    if (maxDepth == 0) {
        if (!tvars.empty() && cs.chance(40)) {
            tally(counter, "TVAR-WF");
            return tvar(tvars[cs.next(tvars.size())]);
        }
        tally(counter, "TOP-WF");
        return topType();
    }
    std::uint64_t pick = cs.next(100);
    if (pick < 20) {
        tally(counter, "TOP-WF");
        return topType();
    }
    if (pick < 35 && !tvars.empty()) {
        tally(counter, "TVAR-WF");
        return tvar(tvars[cs.next(tvars.size())]);
    }
    if (pick < 55) {
        tally(counter, "BOX-WF");
        return boxOf(genWfType(cs, g, fresh, maxDepth - 1, counter));
    }
    if (pick < 80) {
        tally(counter, "FUN-WF");
        Type param = genWfType(cs, g, fresh, maxDepth - 1, counter);
        Atom x = fresh.freshTerm();
        Type result = genWfType(cs, g.extendedTerm(x, param), fresh, maxDepth - 1, counter);
        return arrow(param, closeTermVarInType(result, x, 0));
    }
    tally(counter, "TFUN-WF");
    Type bound = genWfPure(cs, g, fresh, maxDepth - 1, counter);
    Atom tv = fresh.freshType();
    Type result = genWfType(cs, g.extendedType(tv, bound), fresh, maxDepth - 1, counter);
    return tall(bound, closeTypeVarInType(result, tv, 0));
}

Type genWfType(ChoiceStream& cs, const Env& g, AtomSupply& fresh, std::uint32_t maxDepth,
               RuleCounter* counter) {
    if (cs.chance(45)) {
        tally(counter, "CAPT-WF");
        return capt(genCaptureSet(cs, g), genWfPure(cs, g, fresh, maxDepth, counter));
    }
    return genWfPure(cs, g, fresh, maxDepth, counter);
}

Env genWfEnv(ChoiceStream& cs, AtomSupply& fresh, std::uint32_t maxBindings,
             std::uint32_t maxTypeDepth) {
    Env g;
    std::uint64_t n = cs.next(maxBindings + 1);
    for (std::uint64_t i = 0; i < n; ++i) {
        if (cs.chance(65)) {
            Atom x = fresh.freshTerm("a" + std::to_string(i));
            g = g.extendedTerm(x, genWfType(cs, g, fresh, maxTypeDepth));
        } else {
            Atom tv = fresh.freshType("T" + std::to_string(i));
            g = g.extendedType(tv, genWfPure(cs, g, fresh, maxTypeDepth));
        }
    }
    return g;
}

namespace {

struct PoolEntry {
    Atom atom;
    Type type;  // inferred type of the definition in the telescope env
};

struct ProgramBuilder {
    ChoiceStream& cs;
    const GenConfig& cfg;
    AtomSupply fresh{0};
    Env env;
    std::vector<PoolEntry> pool;
    std::vector<std::pair<Atom, Term>> defs;

    ProgramBuilder(ChoiceStream& stream, const GenConfig& config)
        : cs(stream), cfg(config) {}

    Type harmlessParam() { return capt(CaptureSet::empty(), topType()); }

    void addDef(Term value) {
        TypingResult r = inferType(env, value);
        if (!r.ok()) {
            throw std::logic_error("generated definition does not type-check: " +
                                   prettyPrint(value) + " -- " + r.error->detail);
        }
        Atom x = fresh.freshTerm("d" + std::to_string(defs.size()));
        defs.emplace_back(x, value);
        env = env.extendedTerm(x, *r.type);
        pool.push_back(PoolEntry{x, *r.type});
    }

    std::optional<PoolEntry> pickEntry(const std::function<bool(const PoolEntry&)>& want) {
        std::vector<const PoolEntry*> candidates;
        for (const PoolEntry& p : pool) {
            if (want(p)) candidates.push_back(&p);
        }
        if (candidates.empty()) return std::nullopt;
        return *candidates[cs.next(candidates.size())];
    }

    std::optional<Type> exposedHead(const PoolEntry& p) {
        return exposePure(env, splitCapturing(p.type).pure);
    }

    // fun (x : T) => x
    void defIdentity(Type param) { addDef(abs(std::move(param), varBound(0))); }

    void defConstLambda() {
        auto entry = pickEntry([](const PoolEntry&) { return true; });
        Type param = genWfType(cs, env, fresh, 2);
        addDef(abs(param, varTerm(entry->atom)));
    }

    // fun (x : P) => f x, for some function f already in the pool
    bool defEtaLambda() {
        auto entry = pickEntry([&](const PoolEntry& p) {
            std::optional<Type> head = exposedHead(p);
            return head && head->is<ArrowType>();
        });
        if (!entry) return false;
        Type param = exposedHead(*entry)->get<ArrowType>()->param;
        addDef(abs(param, app(Var::free(entry->atom), Var::bound(0))));
        return true;
    }

    // tfun [X <: B] => fun (x : {} X) => x
    void defPolyIdentity() {
        Type bound = genWfPure(cs, env, fresh, 2);
        Term inner = abs(capt(CaptureSet::empty(), tvarBound(0)), varBound(0));
        addDef(tabs(bound, inner));
    }

    void defBox() {
        auto entry = pickEntry([](const PoolEntry&) { return true; });
        addDef(boxVal(Var::free(entry->atom)));
    }

    bool defApp() {
        // any (f, a) with f's head a function and typeof(a) below its param
        std::vector<std::pair<const PoolEntry*, const PoolEntry*>> candidates;
        for (const PoolEntry& f : pool) {
            std::optional<Type> head = exposedHead(f);
            const ArrowType* arr = head ? head->get<ArrowType>() : nullptr;
            if (arr == nullptr) continue;
            for (const PoolEntry& a : pool) {
                Type argType = capt(CaptureSet::ofAtom(a.atom), splitCapturing(a.type).pure);
                if (subtype(env, argType, arr->param)) candidates.emplace_back(&f, &a);
            }
        }
        if (candidates.empty()) return false;
        auto [f, a] = candidates[cs.next(candidates.size())];
        addDef(app(Var::free(f->atom), Var::free(a->atom)));
        return true;
    }

    bool defTApp() {
        auto entry = pickEntry([&](const PoolEntry& p) {
            std::optional<Type> head = exposedHead(p);
            return head && head->is<AllType>();
        });
        if (!entry) return false;
        Type bound = exposedHead(*entry)->get<AllType>()->bound;
        Type arg = bound;
        if (bound.is<TopType>() && cs.chance(60)) {
            arg = genWfPure(cs, env, fresh, 2);
        }
        addDef(tapp(Var::free(entry->atom), arg));
        return true;
    }

    bool defUnbox() {
        auto entry = pickEntry([&](const PoolEntry& p) {
            std::optional<Type> head = exposedHead(p);
            return head && head->is<BoxType>();
        });
        if (!entry) return false;
        SplitType inner = splitCapturing(exposedHead(*entry)->get<BoxType>()->inner);
        CaptureSet annotation = inner.captures;
        if (cs.chance(25)) annotation = annotation.withUniversal();
        if (cs.chance(30) && !pool.empty()) {
            annotation = annotation.withAtom(pool[cs.next(pool.size())].atom);
        }
        addDef(unbox(annotation, Var::free(entry->atom)));
        return true;
    }

    // let f = fun (c : {*} ((u : {} Top) -> {} Top)) => body in let r = f id ...
    void defCapabilityApp(const PoolEntry& idEntry) {
        Type capParam = capt(CaptureSet::universal(),
                             arrow(harmlessParam(), harmlessParam()));
        Term body = cs.chance(50) ? varBound(0)
                                  : Term(app(Var::bound(0), Var::free(idEntry.atom)));
        addDef(abs(capParam, body));
        const PoolEntry& capLambda = pool.back();
        addDef(app(Var::free(capLambda.atom), Var::free(idEntry.atom)));
    }

    Term build() {
        // Canonical identity first: guarantees applications (and with them
        // RENAME steps) are always available.
        defIdentity(harmlessParam());
        PoolEntry idEntry = pool.front();

        std::uint64_t extra = 1 + cs.next(cfg.maxTermDepth);
        for (std::uint64_t i = 0; i < extra; ++i) {
            std::uint64_t pick = cs.next(100);
            if (pick < 12) {
                defIdentity(genWfType(cs, env, fresh, 2));
            } else if (pick < 22) {
                defConstLambda();
            } else if (pick < 32) {
                if (!defEtaLambda()) defIdentity(harmlessParam());
            } else if (pick < 42) {
                defPolyIdentity();
            } else if (pick < 56) {
                defBox();
            } else if (pick < 72) {
                if (!defApp()) defBox();
            } else if (pick < 82) {
                if (!defTApp()) defPolyIdentity();
            } else if (pick < 94) {
                if (!defUnbox()) defBox();
            } else {
                defCapabilityApp(idEntry);
            }
        }

        // Closed final value: every let body's type is atom-free, so the
        // avoidance check is satisfied along the whole telescope.
        Term body = abs(harmlessParam(), varBound(0));
        for (std::size_t i = defs.size(); i-- > 0;) {
            body = let(defs[i].second, closeTermVarInTerm(body, defs[i].first, 0));
        }
        return body;
    }
};

}  // namespace

Term genWellTypedProgram(ChoiceStream& cs, const GenConfig& cfg) {
    ProgramBuilder builder{cs, cfg};
    return builder.build();
}

Type mutateSupertype(ChoiceStream& cs, const Env& g, AtomSupply& fresh, const Type& t) {
    SplitType s = splitCapturing(t);
    std::uint64_t pick = cs.next(100);
    if (pick < 30) {
        // widen the capture set
        CaptureSet c = s.captures;
        std::vector<Atom> dom = [&] {
            std::vector<Atom> out;
            for (const Binding& b : g.bindings()) {
                if (const auto* tb = std::get_if<TermBinding>(&b)) out.push_back(tb->atom);
            }
            return out;
        }();
        if (!dom.empty() && cs.chance(60)) {
            c = c.withAtom(dom[cs.next(dom.size())]);
        } else {
            c = c.withUniversal();
        }
        return capt(c, s.pure);
    }
    if (pick < 45) return t;  // reflexive link
    const Type& r = s.pure;
    if (const auto* v = r.get<TVarFree>()) {
        std::optional<Type> bound = g.lookupTypeBound(v->atom);
        if (bound.has_value()) return capt(s.captures, *bound);  // widen to the bound
        return t;
    }
    if (const auto* b = r.get<BoxType>()) {
        return capt(s.captures, boxOf(mutateSupertype(cs, g, fresh, b->inner)));
    }
    if (const auto* a = r.get<ArrowType>()) {
        Type param = mutateSubtype(cs, g, fresh, a->param);
        Atom x = fresh.freshTerm();
        Type opened = openTermVarInType(a->result, 0, x);
        Type result = mutateSupertype(cs, g.extendedTerm(x, param), fresh, opened);
        return capt(s.captures, arrow(param, closeTermVarInType(result, x, 0)));
    }
    if (const auto* f = r.get<AllType>()) {
        // keep the bound; widen the result under it
        Atom tv = fresh.freshType();
        Type opened = openTypeVarInType(f->result, 0, tvar(tv));
        Type result = mutateSupertype(cs, g.extendedType(tv, f->bound), fresh, opened);
        return capt(s.captures, tall(f->bound, closeTypeVarInType(result, tv, 0)));
    }
    return capt(s.captures, topType());  // pure R <: Top
}

Type mutateSubtype(ChoiceStream& cs, const Env& g, AtomSupply& fresh, const Type& t) {
    SplitType s = splitCapturing(t);
    std::uint64_t pick = cs.next(100);
    if (pick < 30) {
        // shrink the capture set
        CaptureSet c = s.captures;
        if (c.isUniversal() && cs.chance(50)) {
            CaptureSet reduced;
            for (const Atom& a : c.frees()) reduced = reduced.withAtom(a);
            c = reduced;
        } else if (!c.frees().empty()) {
            const Atom drop = c.frees()[cs.next(c.frees().size())];
            CaptureSet reduced;
            if (c.isUniversal()) reduced = reduced.withUniversal();
            for (const Atom& a : c.frees()) {
                if (!(a == drop)) reduced = reduced.withAtom(a);
            }
            c = reduced;
        }
        return capt(c, s.pure);
    }
    if (pick < 45) return t;
    const Type& r = s.pure;
    if (r.is<TopType>() && cs.chance(50)) {
        return capt(s.captures, genWfPure(cs, g, fresh, 2));
    }
    if (const auto* b = r.get<BoxType>()) {
        return capt(s.captures, boxOf(mutateSubtype(cs, g, fresh, b->inner)));
    }
    if (const auto* a = r.get<ArrowType>()) {
        Type param = mutateSupertype(cs, g, fresh, a->param);
        Atom x = fresh.freshTerm();
        Type opened = openTermVarInType(a->result, 0, x);
        // original param on the right of the eventual comparison
        Type result = mutateSubtype(cs, g.extendedTerm(x, a->param), fresh, opened);
        return capt(s.captures, arrow(param, closeTermVarInType(result, x, 0)));
    }
    if (const auto* f = r.get<AllType>()) {
        Atom tv = fresh.freshType();
        Type opened = openTypeVarInType(f->result, 0, tvar(tv));
        Type result = mutateSubtype(cs, g.extendedType(tv, f->bound), fresh, opened);
        return capt(s.captures, tall(f->bound, closeTypeVarInType(result, tv, 0)));
    }
    return t;
}

}  // namespace ccbox::testkit
