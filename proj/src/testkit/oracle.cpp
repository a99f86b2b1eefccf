#include "ccbox/testkit/oracle.hpp"

#include <map>

#include "ccbox/binding.hpp"
#include "ccbox/classify.hpp"
#include "ccbox/subtyping.hpp"

namespace ccbox::testkit {

namespace {

bool deriveSet(const Env& g, const CaptureSet& c1, const CaptureSet& c2,
               std::uint32_t depth);

// Γ ⊢ {x} <:C C2: element membership, or (SC-VAR) expansion through the
// declared capture set of x.
bool deriveElem(const Env& g, const Atom& x, const CaptureSet& c2, std::uint32_t depth) {
    if (depth == 0) return false;
    if (c2.containsAtom(x)) return true;
    std::optional<Type> bound = g.lookupTerm(x);
    if (!bound.has_value()) return false;
    return deriveSet(g, splitCapturing(*bound).captures, c2, depth - 1);
}

bool deriveSet(const Env& g, const CaptureSet& c1, const CaptureSet& c2,
               std::uint32_t depth) {
    if (depth == 0) return false;
    if (c2.isUniversal()) return true;  // {*} is the top of the order
    if (c1.isUniversal()) return false;
    if (!c1.isLocallyClosed() || !c2.isLocallyClosed()) return false;
    // (SC-SET): every singleton of c1 must be derivable below c2.
    for (const Atom& x : c1.frees()) {
        if (!deriveElem(g, x, c2, depth)) return false;
    }
    return true;
}

}  // namespace

bool declarativeSubcapture(const Env& g, const CaptureSet& c1, const CaptureSet& c2,
                           std::uint32_t maxDepth) {
    return deriveSet(g, c1, c2, maxDepth);
}

EquivalenceStats compareSubcaptureOnSmallDomain(
    const std::function<bool(const Env&, const CaptureSet&, const CaptureSet&)>& algo,
    std::uint32_t maxBindings, std::uint32_t atomCount) {
    EquivalenceStats stats;

    std::vector<Atom> atoms;
    for (std::uint32_t i = 0; i < atomCount; ++i) {
        atoms.push_back(Atom(i, AtomKind::Term, std::string(1, char('a' + i))));
    }

    // All capture sets over a prefix of the atom list, with and without {*}.
    auto setsOver = [&](std::uint32_t n) {
        std::vector<CaptureSet> out;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            CaptureSet base;
            for (std::uint32_t i = 0; i < n; ++i) {
                if (mask & (1u << i)) base = base.withAtom(atoms[i]);
            }
            out.push_back(base);
            out.push_back(base.withUniversal());
        }
        return out;
    };

    // Telescopes: binding i's capture set mentions earlier atoms only, so
    // the environments are well-formed by construction.
    std::vector<Env> envs;
    std::vector<std::uint32_t> envLens;
    for (std::uint32_t len = 0; len <= maxBindings && len <= atomCount; ++len) {
        std::vector<Env> partial{Env{}};
        for (std::uint32_t i = 0; i < len; ++i) {
            std::vector<Env> next;
            for (const Env& g : partial) {
                for (const CaptureSet& c : setsOver(i)) {
                    next.push_back(g.extendedTerm(atoms[i], capt(c, topType())));
                }
            }
            partial = std::move(next);
        }
        for (Env& g : partial) {
            envs.push_back(std::move(g));
            envLens.push_back(len);
        }
    }

    for (std::size_t e = 0; e < envs.size(); ++e) {
        const Env& g = envs[e];
        std::uint32_t len = envLens[e];
        std::uint32_t depth = len + 2;
        std::vector<CaptureSet> candidates = setsOver(len);
        for (const CaptureSet& c1 : candidates) {
            for (const CaptureSet& c2 : candidates) {
                stats.cases += 1;
                bool got = algo(g, c1, c2);
                bool want = declarativeSubcapture(g, c1, c2, depth);
                if (got != want) stats.disagreements += 1;
            }
        }
    }
    return stats;
}

namespace {

struct Renamer {
    std::map<Atom, Atom> mapping;
    AtomSupply supply{0};

    Atom rename(const Atom& a) {
        auto it = mapping.find(a);
        if (it != mapping.end()) return it->second;
        Atom fresh = a.isTermVar() ? supply.freshTerm("c" + std::to_string(supply.next))
                                   : supply.freshType("C" + std::to_string(supply.next));
        mapping.emplace(a, fresh);
        return fresh;
    }

    Var var(const Var& v) { return v.isFree() ? Var::free(rename(v.atom())) : v; }

    CaptureSet captureSet(const CaptureSet& c) {
        CaptureSet out;
        for (std::uint32_t b : c.bounds()) out = out.withBound(b);
        if (c.isUniversal()) out = out.withUniversal();
        for (const Atom& a : c.frees()) out = out.withAtom(rename(a));
        return out;
    }

    Type type(const Type& t) {
        if (const auto* v = t.get<TVarFree>()) return tvar(rename(v->atom));
        if (t.is<TVarBound>() || t.is<TopType>()) return t;
        if (const auto* b = t.get<BoxType>()) return boxOf(type(b->inner));
        if (const auto* c = t.get<CaptType>()) return capt(captureSet(c->captures), type(c->pure));
        if (const auto* a = t.get<ArrowType>()) return arrow(type(a->param), type(a->result));
        const auto* f = t.get<AllType>();
        return tall(type(f->bound), type(f->result));
    }

    Term term(const Term& e) {
        if (const auto* v = e.get<VarTerm>()) return varTerm(var(v->var));
        if (const auto* a = e.get<AbsTerm>()) return abs(type(a->paramType), term(a->body));
        if (const auto* f = e.get<TAbsTerm>()) return tabs(type(f->bound), term(f->body));
        if (const auto* b = e.get<BoxTerm>()) return boxVal(var(b->operand));
        if (const auto* ap = e.get<AppTerm>()) return app(var(ap->fn), var(ap->arg));
        if (const auto* ta = e.get<TAppTerm>()) return tapp(var(ta->fn), type(ta->typeArg));
        if (const auto* u = e.get<UnboxTerm>())
            return unbox(captureSet(u->captures), var(u->operand));
        const auto* l = e.get<LetTerm>();
        return let(term(l->bound), term(l->body));
    }
};

}  // namespace

Term canonicalizeTerm(const Term& e) {
    Renamer r;
    return r.term(e);
}

bool alphaEquivalentAnswers(const Store& store1, const Term& answer1, const Store& store2,
                            const Term& answer2) {
    if (store1.size() != store2.size()) return false;
    Renamer r1;
    Renamer r2;
    for (std::size_t i = 0; i < store1.size(); ++i) {
        const auto& [x1, v1] = store1.bindings()[i];
        const auto& [x2, v2] = store2.bindings()[i];
        if (r1.rename(x1) != r2.rename(x2)) return false;
        if (r1.term(v1) != r2.term(v2)) return false;
    }
    return r1.term(answer1) == r2.term(answer2);
}

}  // namespace ccbox::testkit
