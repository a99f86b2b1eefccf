#include <doctest.h>

#include "ccbox/testkit/gen.hpp"
#include "helpers.hpp"

using namespace ccbox;

TEST_CASE("openTypeVarInType replaces the bound variable") {
    Atom c = tt::termAtom(1, "c");
    CHECK(openTypeVarInType(tvarBound(0), 0, topType()) == topType());
    CHECK(openTypeVarInType(topType(), 0, capt(CaptureSet::ofAtom(c), topType())) ==
          topType());

    SUBCASE("substituting an impure type into a variable loses purity") {
        Type impure = capt(CaptureSet::ofAtom(c), topType());
        Type opened = openTypeVarInType(tvarBound(0), 0, impure);
        CHECK(opened == impure);
        CHECK_FALSE(checkPure(opened));
    }

    SUBCASE("depth shifts under type binders only") {
        // [X <: Top] -> X0 refers to the inner binder, X1 to the outer slot
        Type inner = tall(topType(), tvarBound(1));
        Type opened = openTypeVarInType(inner, 0, topType());
        CHECK(opened == tall(topType(), topType()));
        Type untouched = tall(topType(), tvarBound(0));
        CHECK(openTypeVarInType(untouched, 0, topType()) == untouched);
    }
}

TEST_CASE("openTermVarInType reaches capture sets") {
    Atom x = tt::termAtom(1, "x");
    Atom y = tt::termAtom(2, "y");
    Type dangling = capt(CaptureSet::ofBound(0), topType());
    CHECK(openTermVarInType(dangling, 0, x) == capt(CaptureSet::ofAtom(x), topType()));
    Type closedSet = capt(CaptureSet::ofAtom(x), topType());
    CHECK(openTermVarInType(closedSet, 0, y) == closedSet);

    SUBCASE("index shifts under the arrow binder") {
        Type t = arrow(tt::emptyTop(), capt(CaptureSet::ofBound(1), topType()));
        CHECK(openTermVarInType(t, 0, x) ==
              arrow(tt::emptyTop(), capt(CaptureSet::ofAtom(x), topType())));
    }
}

TEST_CASE("openTermVarInTerm covers term and annotation positions") {
    Atom y = tt::termAtom(1, "y");
    Atom z = tt::termAtom(2, "z");
    CHECK(openTermVarInTerm(varBound(0), 0, y) == varTerm(y));
    CHECK(openTermVarInTerm(app(Var::bound(0), Var::free(z)), 0, y) ==
          app(Var::free(y), Var::free(z)));

    SUBCASE("let shifts the body index") {
        Term t = let(varBound(0), varBound(1));
        Term opened = openTermVarInTerm(t, 0, y);
        CHECK(opened == let(varTerm(y), varTerm(y)));
        // the inner occurrence still closes back to index 1
        CHECK(closeTermVarInTerm(opened, y, 0) == t);
    }

    SUBCASE("unbox annotations and parameter types participate") {
        Term t = unbox(CaptureSet::ofBound(0), Var::bound(0));
        CHECK(openTermVarInTerm(t, 0, y) == unbox(CaptureSet::ofAtom(y), Var::free(y)));
        Term lam = abs(capt(CaptureSet::ofBound(0), topType()), varBound(1));
        CHECK(openTermVarInTerm(lam, 0, y) ==
              abs(capt(CaptureSet::ofAtom(y), topType()), varTerm(y)));
    }
}

TEST_CASE("openTypeVarInTerm rewrites annotations only") {
    Atom x = tt::termAtom(1, "x");
    CHECK(openTypeVarInTerm(abs(tvarBound(0), varBound(0)), 0, topType()) ==
          abs(topType(), varBound(0)));
    CHECK(openTypeVarInTerm(tapp(Var::free(x), tvarBound(0)), 0, topType()) ==
          tapp(Var::free(x), topType()));
    CHECK(openTypeVarInTerm(varTerm(x), 0, topType()) == varTerm(x));
}

TEST_CASE("substAtomInCaptureSet renames frees") {
    Atom x = tt::termAtom(1, "x");
    Atom y = tt::termAtom(2, "y");
    Atom z = tt::termAtom(3, "z");
    CaptureSet xy = CaptureSet::empty().withAtom(x).withAtom(y);
    CHECK(substAtomInCaptureSet(xy, x, z) == CaptureSet::empty().withAtom(z).withAtom(y));
    CHECK(substAtomInCaptureSet(CaptureSet::universal(), x, z) == CaptureSet::universal());
    // sets collapse
    CaptureSet xz = CaptureSet::empty().withAtom(x).withAtom(z);
    CHECK(substAtomInCaptureSet(xz, x, z) == CaptureSet::ofAtom(z));
}

TEST_CASE("substTypeAtomInType") {
    Atom tv = tt::typeAtom(1, "X");
    Atom c = tt::termAtom(2, "c");
    CHECK(substTypeAtomInType(tvar(tv), tv, topType()) == topType());
    Type impure = capt(CaptureSet::ofAtom(c), topType());
    CHECK(substTypeAtomInType(boxOf(tvar(tv)), tv, impure) == boxOf(impure));
    CHECK(substTypeAtomInType(topType(), tv, impure) == topType());
}

TEST_CASE("purity is stable under pure substitution") {
    using namespace ccbox::testkit;
    ChoiceStream cs(11);
    AtomSupply fresh{0};
    for (int i = 0; i < 300; ++i) {
        Env base = genWfEnv(cs, fresh, 2, 2);
        Atom tv = fresh.freshType("X");
        Env g = base.extendedType(tv, genWfPure(cs, base, fresh, 2));
        Type t = genWfType(cs, g, fresh, 3);
        Type r = genWfPure(cs, base, fresh, 2);
        Type substituted = substTypeAtomInType(t, tv, r);
        if (checkPure(t)) CHECK(checkPure(substituted));
        if (checkType(t)) CHECK(checkType(substituted));
    }

    SUBCASE("the impure counterexample breaks purity") {
        Atom tv = tt::typeAtom(1, "X");
        Atom c = tt::termAtom(2, "c");
        Type t = tvar(tv);
        Type impure = capt(CaptureSet::ofAtom(c), topType());
        CHECK(checkPure(t));
        CHECK_FALSE(checkPure(substTypeAtomInType(t, tv, impure)));
    }
}

TEST_CASE("open and close are mutually inverse for fresh atoms") {
    using namespace ccbox::testkit;
    ChoiceStream cs(13);
    AtomSupply fresh{0};
    for (int i = 0; i < 200; ++i) {
        Env g = genWfEnv(cs, fresh, 2, 2);
        // build a result with genuine index-0 references via closing
        Atom binder = fresh.freshTerm();
        Type raw = genWfType(cs, g.extendedTerm(binder, tt::emptyTop()), fresh, 2);
        Type closed = closeTermVarInType(raw, binder, 0);
        Atom x = fresh.freshTerm();
        CHECK(closeTermVarInType(openTermVarInType(closed, 0, x), x, 0) == closed);
        // substitution for a non-occurring atom is the identity
        Atom ghost = fresh.freshType();
        CHECK(substTypeAtomInType(closed, ghost, topType()) == closed);
        // opening commutes with renaming to another fresh atom
        Atom y = fresh.freshTerm();
        Type viaX = openTermVarInType(closed, 0, x);
        Type direct = openTermVarInType(closed, 0, y);
        CHECK(closeTermVarInType(viaX, x, 0) == closeTermVarInType(direct, y, 0));
    }
}
