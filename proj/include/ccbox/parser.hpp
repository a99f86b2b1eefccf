#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ccbox/term.hpp"
#include "ccbox/type.hpp"
#include "ccbox/typing.hpp"

namespace ccbox {

struct Span {
    int line = 1;
    int col = 1;
    int endLine = 1;
    int endCol = 1;
};

enum class Severity { Error, Warning };

struct Diagnostic {
    Severity severity = Severity::Error;
    Span span;
    std::string code;  // stable, e.g. E_ESCAPING_VARIABLE
    std::string message;
    std::string note;
};

std::string formatDiagnostic(const Diagnostic& d);

struct SourceProgram {
    std::string text;
    Term parsed;
    std::map<TermPath, Span> spans;

    Span spanAt(const TermPath& path) const;
};

struct ParseResult {
    std::optional<SourceProgram> program;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return program.has_value(); }
};

// Parses one program. Names resolve to de Bruijn indices; unbound
// identifiers, MNF violations and syntax errors come back as diagnostics.
// The box/unbox/Top/* keywords also accept their glyph forms □ ∘ ⊤ ⋆.
ParseResult parse(std::string_view text);

// Type-expression parser over the same token language (used by tools and
// bindings; programs only ever contain types inside annotations).
struct ParseTypeResult {
    std::optional<Type> type;
    std::vector<Diagnostic> diagnostics;
    bool ok() const { return type.has_value(); }
};
ParseTypeResult parseType(std::string_view text);

// Stable diagnostic code for each typing error kind.
std::string diagnosticCode(TypingErrorKind kind);

}  // namespace ccbox
