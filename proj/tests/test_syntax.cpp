#include <doctest.h>

#include "ccbox/testkit/gen.hpp"
#include "helpers.hpp"

using namespace ccbox;

TEST_CASE("atoms compare by id and kind") {
    Atom x = tt::termAtom(1, "x");
    Atom sameId = tt::termAtom(1, "other-name");
    Atom y = tt::termAtom(2, "x");
    CHECK(x == sameId);  // names are display hints only
    CHECK(x != y);
    CHECK(x != tt::typeAtom(1, "x"));
    CHECK(x.isTermVar());
    CHECK(tt::typeAtom(3, "X").isTypeVar());
}

TEST_CASE("capture sets have set semantics") {
    Atom x = tt::termAtom(1, "x");
    Atom y = tt::termAtom(2, "y");
    CaptureSet a = CaptureSet::empty().withAtom(x).withAtom(y).withAtom(x);
    CaptureSet b = CaptureSet::empty().withAtom(y).withAtom(x);
    CHECK(a == b);
    CHECK(a.frees().size() == 2);
    CHECK(a.containsAtom(x));
    CHECK_FALSE(a.isUniversal());
    CHECK(CaptureSet::universal().isUniversal());
    CHECK_THROWS(CaptureSet::empty().withAtom(tt::typeAtom(9, "X")));

    SUBCASE("local closure is bounds emptiness") {
        CHECK(a.isLocallyClosed());
        CHECK_FALSE(a.withBound(0).isLocallyClosed());
    }
}

TEST_CASE("checkPure follows the pure judgment") {
    Atom x = tt::termAtom(1, "x");
    CHECK(checkPure(topType()));
    CHECK_FALSE(checkPure(capt(CaptureSet::ofAtom(x), topType())));
    CHECK(checkPure(boxOf(capt(CaptureSet::ofAtom(x), topType()))));
    CHECK(checkPure(tvar(tt::typeAtom(2, "X"))));
    CHECK(checkPure(tvarBound(0)));

    SUBCASE("binder bodies are checked opened") {
        // (x : {} Top) -> {x} Top
        Type dependent = arrow(tt::emptyTop(), capt(CaptureSet::ofBound(0), topType()));
        CHECK(checkPure(dependent));
        // [X <: Top] -> {} X
        Type poly = tall(topType(), capt(CaptureSet::empty(), tvarBound(0)));
        CHECK(checkPure(poly));
        // an impure bound disqualifies the type function
        Type badPoly = tall(capt(CaptureSet::empty(), topType()), topType());
        CHECK_FALSE(checkPure(badPoly));
    }
}

TEST_CASE("checkType combines capt and the pure injection") {
    Atom x = tt::termAtom(1, "x");
    CHECK(checkType(capt(CaptureSet::empty(), topType())));
    CHECK_FALSE(checkType(capt(CaptureSet::ofBound(0), topType())));
    CHECK(checkType(arrow(tt::emptyTop(), capt(CaptureSet::ofBound(0), topType()))));
    CHECK(checkType(capt(CaptureSet::ofAtom(x), topType())));
    // nested capturing type under a capture set is not a type
    CHECK_FALSE(checkType(capt(CaptureSet::empty(), capt(CaptureSet::empty(), topType()))));
}

TEST_CASE("isValue classifies machine answers") {
    Atom x = tt::termAtom(1, "x");
    CHECK(isValue(abs(tt::emptyTop(), varBound(0))));
    CHECK(isValue(tabs(topType(), varBound(0))));
    CHECK(isValue(boxVal(Var::free(x))));
    CHECK_FALSE(isValue(app(Var::free(x), Var::free(x))));
    CHECK_FALSE(isValue(varTerm(x)));
    CHECK_FALSE(isValue(let(varTerm(x), varBound(0))));
    CHECK_FALSE(isValue(unbox(CaptureSet::empty(), Var::free(x))));
    CHECK_FALSE(isValue(tapp(Var::free(x), topType())));
}

TEST_CASE("freeAtoms spans term positions, annotations and capture sets") {
    Atom x = tt::termAtom(1, "x");
    Atom a = tt::termAtom(2, "a");
    Atom b = tt::termAtom(3, "b");
    Atom c = tt::termAtom(4, "c");

    CHECK(freeAtoms(capt(CaptureSet::ofAtom(x), topType())) == AtomSet{x});

    Type annotated = capt(CaptureSet::ofAtom(x), topType());
    CHECK(freeAtoms(abs(annotated, varBound(0))) == freeAtoms(annotated));

    Term u = unbox(CaptureSet::empty().withAtom(a).withAtom(b), Var::free(c));
    CHECK(freeAtoms(u) == AtomSet{a, b, c});
}

TEST_CASE("pure injects into type on generated syntax") {
    using namespace ccbox::testkit;
    ChoiceStream cs(7);
    AtomSupply fresh{0};
    for (int i = 0; i < 300; ++i) {
        Env g = genWfEnv(cs, fresh, 3, 2);
        Type t = genWfType(cs, g, fresh, 3);
        if (checkPure(t)) CHECK(checkType(t));
        // at most one of {capt at root, pure} holds
        bool both = t.is<CaptType>() && checkPure(t);
        CHECK_FALSE(both);
    }
}
