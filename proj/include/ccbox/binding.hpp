#pragma once

#include "ccbox/term.hpp"
#include "ccbox/type.hpp"

namespace ccbox {

// Locally-nameless opening, closing and substitution. `depth` names the
// binder being opened; it shifts under binders of the same sort (term
// indices under Arrow/Abs/Let, type indices under All/TAbs) and is
// untouched by binders of the other sort.

// {depth -> r} in types: replace a bound type variable by a type.
Type openTypeVarInType(const Type& t, std::uint32_t depth, const Type& r);

// [depth -> x] in types: bound term indices live only in capture sets.
Type openTermVarInType(const Type& t, std::uint32_t depth, const Atom& x);

// [depth -> x] in terms, covering term positions, annotations and capture
// sets alike.
Term openTermVarInTerm(const Term& e, std::uint32_t depth, const Atom& x);

// {depth -> r} in terms: substitutes into type annotations only.
Term openTypeVarInTerm(const Term& e, std::uint32_t depth, const Type& r);

// Inverses of the opens: free atom becomes bound index `depth`.
Type closeTypeVarInType(const Type& t, const Atom& x, std::uint32_t depth);
Type closeTermVarInType(const Type& t, const Atom& x, std::uint32_t depth);
Term closeTermVarInTerm(const Term& e, const Atom& x, std::uint32_t depth);

// Renaming of free term atoms in capture sets.
CaptureSet substAtomInCaptureSet(const CaptureSet& c, const Atom& from, const Atom& to);

// Substitution of a type for a free type variable; r is expected locally
// closed (no index adjustment is performed).
Type substTypeAtomInType(const Type& t, const Atom& from, const Type& r);

}  // namespace ccbox
