#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ccbox/capture_set.hpp"
#include "ccbox/env.hpp"
#include "ccbox/term.hpp"
#include "ccbox/type.hpp"

namespace ccbox {

enum class TypingErrorKind {
    UnboundVariable,
    NotAFunction,
    NotATypeFunction,
    NotABox,
    ArgumentMismatch,
    ImpureTypeArgument,
    UniversalInstantiation,
    EscapingVariable,
    IllFormedAnnotation,
    UnboxCaptureMismatch,
};

const char* typingErrorKindName(TypingErrorKind kind);

// Path of term-child indices from the root (Let: 0 = bound, 1 = body;
// Abs/TAbs: 0 = body); errors on leaves point at the leaf itself.
using TermPath = std::vector<std::uint32_t>;

struct TypingError {
    TypingErrorKind kind;
    TermPath path;
    std::string detail;
};

struct TypingResult {
    std::optional<Type> type;
    std::optional<TypingError> error;

    bool ok() const { return type.has_value(); }

    static TypingResult success(Type t) { return {std::move(t), std::nullopt}; }
    static TypingResult failure(TypingError e) { return {std::nullopt, std::move(e)}; }
};

// Captured variables of a term. Boxing hides its operand (capture
// tunneling); unbox contributes its annotation; binders drop out for free
// because bound occurrences are indices.
CaptureSet cv(const Term& e);

// Algorithmic term typing for MNF terms. Variables get precise singleton
// capture sets; elimination sites expose the operand's pure head through
// type-variable bounds; lets reject results mentioning the bound variable.
TypingResult inferType(const Env& g, const Term& e);

// Subsumption wrapper: inference followed by a subtype check.
bool checkAgainst(const Env& g, const Term& e, const Type& t);

}  // namespace ccbox
