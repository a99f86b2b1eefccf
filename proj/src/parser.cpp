#include "ccbox/parser.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace ccbox {

std::string formatDiagnostic(const Diagnostic& d) {
    std::ostringstream out;
    out << (d.severity == Severity::Error ? "error" : "warning");
    out << "[" << d.code << "] " << d.span.line << ":" << d.span.col << ": " << d.message;
    if (!d.note.empty()) out << " (" << d.note << ")";
    return out.str();
}

Span SourceProgram::spanAt(const TermPath& path) const {
    TermPath p = path;
    while (true) {
        auto it = spans.find(p);
        if (it != spans.end()) return it->second;
        if (p.empty()) return Span{};
        p.pop_back();
    }
}

std::string diagnosticCode(TypingErrorKind kind) {
    switch (kind) {
        case TypingErrorKind::UnboundVariable: return "E_UNBOUND_VARIABLE";
        case TypingErrorKind::NotAFunction: return "E_NOT_A_FUNCTION";
        case TypingErrorKind::NotATypeFunction: return "E_NOT_A_TYPE_FUNCTION";
        case TypingErrorKind::NotABox: return "E_NOT_A_BOX";
        case TypingErrorKind::ArgumentMismatch: return "E_ARGUMENT_MISMATCH";
        case TypingErrorKind::ImpureTypeArgument: return "E_IMPURE_TYPE_ARGUMENT";
        case TypingErrorKind::UniversalInstantiation: return "E_UNIVERSAL_INSTANTIATION";
        case TypingErrorKind::EscapingVariable: return "E_ESCAPING_VARIABLE";
        case TypingErrorKind::IllFormedAnnotation: return "E_ILL_FORMED_ANNOTATION";
        case TypingErrorKind::UnboxCaptureMismatch: return "E_UNBOX_CAPTURE_MISMATCH";
    }
    return "E_UNKNOWN";
}

namespace {

enum class Tok {
    Ident,
    KwLet,
    KwIn,
    KwFun,
    KwTfun,
    KwBox,
    KwUnbox,
    KwTop,
    LBrace,
    RBrace,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Colon,
    Arrow,     // ->
    FatArrow,  // =>
    SubOf,     // <:
    Equals,
    Star,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    Span span;
};

struct Lexer {
    std::string_view src;
    std::size_t pos = 0;
    int line = 1;
    int col = 1;
    std::vector<Diagnostic> diags = {};

    bool startsWith(std::string_view s) const { return src.substr(pos, s.size()) == s; }

    void advance(std::size_t n) {
        for (std::size_t i = 0; i < n && pos < src.size(); ++i, ++pos) {
            if (src[pos] == '\n') {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        }
    }

    void error(std::string msg, Span span) {
        diags.push_back(Diagnostic{Severity::Error, span, "E_PARSE", std::move(msg), ""});
    }

    std::vector<Token> lex() {
        std::vector<Token> out;
        while (pos < src.size()) {
            char c = src[pos];
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance(1);
                continue;
            }
            if (startsWith("--")) {  // line comment
                while (pos < src.size() && src[pos] != '\n') advance(1);
                continue;
            }
            Span here{line, col, line, col};
            auto push = [&](Tok kind, std::string text, std::size_t len) {
                advance(len);
                here.endLine = line;
                here.endCol = col;
                out.push_back(Token{kind, std::move(text), here});
            };
            // glyph aliases
            if (startsWith("□")) { push(Tok::KwBox, "box", 3); continue; }      // □
            if (startsWith("∘")) { push(Tok::KwUnbox, "unbox", 3); continue; }  // ∘
            if (startsWith("◦")) { push(Tok::KwUnbox, "unbox", 3); continue; }  // ◦
            if (startsWith("⊤")) { push(Tok::KwTop, "Top", 3); continue; }      // ⊤
            if (startsWith("⋆")) { push(Tok::Star, "*", 3); continue; }         // ⋆
            if (startsWith("->")) { push(Tok::Arrow, "->", 2); continue; }
            if (startsWith("=>")) { push(Tok::FatArrow, "=>", 2); continue; }
            if (startsWith("<:")) { push(Tok::SubOf, "<:", 2); continue; }
            switch (c) {
                case '{': push(Tok::LBrace, "{", 1); continue;
                case '}': push(Tok::RBrace, "}", 1); continue;
                case '(': push(Tok::LParen, "(", 1); continue;
                case ')': push(Tok::RParen, ")", 1); continue;
                case '[': push(Tok::LBracket, "[", 1); continue;
                case ']': push(Tok::RBracket, "]", 1); continue;
                case ',': push(Tok::Comma, ",", 1); continue;
                case ':': push(Tok::Colon, ":", 1); continue;
                case '=': push(Tok::Equals, "=", 1); continue;
                case '*': push(Tok::Star, "*", 1); continue;
                default: break;
            }
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t start = pos;
                while (pos < src.size() &&
                       (std::isalnum(static_cast<unsigned char>(src[pos])) ||
                        src[pos] == '_')) {
                    advance(1);
                }
                std::string text(src.substr(start, pos - start));
                here.endLine = line;
                here.endCol = col;
                Tok kind = Tok::Ident;
                if (text == "let") kind = Tok::KwLet;
                else if (text == "in") kind = Tok::KwIn;
                else if (text == "fun") kind = Tok::KwFun;
                else if (text == "tfun") kind = Tok::KwTfun;
                else if (text == "box") kind = Tok::KwBox;
                else if (text == "unbox") kind = Tok::KwUnbox;
                else if (text == "Top") kind = Tok::KwTop;
                out.push_back(Token{kind, std::move(text), here});
                continue;
            }
            error("unsupported character", here);
            advance(1);
            return out;
        }
        out.push_back(Token{Tok::End, "", Span{line, col, line, col}});
        return out;
    }
};

struct Parser {
    std::vector<Token> toks;
    std::size_t pos = 0;
    std::vector<Diagnostic> diags = {};
    std::vector<std::string> termScope = {};  // back = innermost binder
    std::vector<std::string> typeScope = {};
    std::map<const void*, Span> nodeSpans = {};
    bool failed = false;

    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = pos + ahead;
        return i < toks.size() ? toks[i] : toks.back();
    }
    const Token& advance() { return toks[pos < toks.size() - 1 ? pos++ : pos]; }
    bool at(Tok k) const { return peek().kind == k; }

    void error(std::string msg, std::string code = "E_PARSE") {
        if (failed) return;
        failed = true;
        diags.push_back(
            Diagnostic{Severity::Error, peek().span, std::move(code), std::move(msg), ""});
    }

    bool expect(Tok k, const char* what) {
        if (at(k)) {
            advance();
            return true;
        }
        error(std::string("expected ") + what + ", found '" +
              (peek().kind == Tok::End ? "end of input" : peek().text) + "'");
        return false;
    }

    std::optional<std::string> expectIdent(const char* what) {
        if (at(Tok::Ident)) return advance().text;
        error(std::string("expected ") + what);
        return std::nullopt;
    }

    std::optional<std::uint32_t> resolveTerm(const std::string& name) {
        for (std::size_t i = termScope.size(); i-- > 0;) {
            if (termScope[i] == name) {
                return static_cast<std::uint32_t>(termScope.size() - 1 - i);
            }
        }
        return std::nullopt;
    }
    std::optional<std::uint32_t> resolveType(const std::string& name) {
        for (std::size_t i = typeScope.size(); i-- > 0;) {
            if (typeScope[i] == name) {
                return static_cast<std::uint32_t>(typeScope.size() - 1 - i);
            }
        }
        return std::nullopt;
    }

    std::optional<Var> termVarRef(const char* what) {
        Span sp = peek().span;
        std::optional<std::string> name = expectIdent(what);
        if (!name) return std::nullopt;
        std::optional<std::uint32_t> idx = resolveTerm(*name);
        if (!idx) {
            if (!failed) {
                failed = true;
                diags.push_back(Diagnostic{Severity::Error, sp, "E_UNBOUND_IDENTIFIER",
                                           "unbound identifier: " + *name, ""});
            }
            return std::nullopt;
        }
        return Var::bound(*idx);
    }

    std::optional<CaptureSet> parseCaptureSet() {
        if (!expect(Tok::LBrace, "'{'")) return std::nullopt;
        CaptureSet c;
        if (at(Tok::RBrace)) {
            advance();
            return c;
        }
        while (true) {
            if (at(Tok::Star)) {
                advance();
                c = c.withUniversal();
            } else if (at(Tok::Ident)) {
                Token t = advance();
                std::optional<std::uint32_t> idx = resolveTerm(t.text);
                if (!idx) {
                    std::string note = resolveType(t.text)
                                           ? "type variables cannot appear in capture sets"
                                           : "";
                    if (!failed) {
                        failed = true;
                        diags.push_back(Diagnostic{Severity::Error, t.span,
                                                   "E_UNBOUND_IDENTIFIER",
                                                   "unbound identifier in capture set: " +
                                                       t.text,
                                                   note});
                    }
                    return std::nullopt;
                }
                c = c.withBound(*idx);
            } else {
                error("expected a capture-set element or '}'");
                return std::nullopt;
            }
            if (at(Tok::Comma)) {
                advance();
                continue;
            }
            if (!expect(Tok::RBrace, "'}'")) return std::nullopt;
            return c;
        }
    }

    std::optional<Type> parseTypeExpr() {
        if (at(Tok::LBrace)) {
            std::optional<CaptureSet> c = parseCaptureSet();
            if (!c) return std::nullopt;
            std::optional<Type> pure = parsePureType();
            if (!pure) return std::nullopt;
            return capt(*c, *pure);
        }
        return parsePureType();
    }

    std::optional<Type> parsePureType() {
        if (at(Tok::KwTop)) {
            advance();
            return topType();
        }
        if (at(Tok::Ident)) {
            Token t = advance();
            std::optional<std::uint32_t> idx = resolveType(t.text);
            if (!idx) {
                if (!failed) {
                    failed = true;
                    diags.push_back(Diagnostic{Severity::Error, t.span,
                                               "E_UNBOUND_IDENTIFIER",
                                               "unbound type variable: " + t.text, ""});
                }
                return std::nullopt;
            }
            return tvarBound(*idx);
        }
        if (at(Tok::KwBox)) {
            advance();
            std::optional<Type> inner = parseTypeExpr();
            if (!inner) return std::nullopt;
            return boxOf(*inner);
        }
        if (at(Tok::LParen)) {
            advance();
            std::optional<std::string> name = expectIdent("a parameter name");
            if (!name) return std::nullopt;
            if (!expect(Tok::Colon, "':'")) return std::nullopt;
            std::optional<Type> param = parseTypeExpr();
            if (!param) return std::nullopt;
            if (!expect(Tok::RParen, "')'")) return std::nullopt;
            if (!expect(Tok::Arrow, "'->'")) return std::nullopt;
            termScope.push_back(*name);
            std::optional<Type> result = parseTypeExpr();
            termScope.pop_back();
            if (!result) return std::nullopt;
            return arrow(*param, *result);
        }
        if (at(Tok::LBracket)) {
            advance();
            std::optional<std::string> name = expectIdent("a type-variable name");
            if (!name) return std::nullopt;
            if (!expect(Tok::SubOf, "'<:'")) return std::nullopt;
            std::optional<Type> bound = parsePureType();
            if (!bound) return std::nullopt;
            if (!expect(Tok::RBracket, "']'")) return std::nullopt;
            if (!expect(Tok::Arrow, "'->'")) return std::nullopt;
            typeScope.push_back(*name);
            std::optional<Type> result = parseTypeExpr();
            typeScope.pop_back();
            if (!result) return std::nullopt;
            return tall(*bound, *result);
        }
        error("expected a type");
        return std::nullopt;
    }

    void remember(const Term& e, const Span& start) {
        Span s = start;
        if (pos > 0) {
            s.endLine = toks[pos - 1].span.endLine;
            s.endCol = toks[pos - 1].span.endCol;
        }
        nodeSpans[&e.node()] = s;
    }

    std::optional<Term> parseExpr() {
        Span start = peek().span;
        if (at(Tok::KwLet)) {
            advance();
            std::optional<std::string> name = expectIdent("a binder name");
            if (!name) return std::nullopt;
            if (!expect(Tok::Equals, "'='")) return std::nullopt;
            std::optional<Term> bound = parseExpr();
            if (!bound) return std::nullopt;
            if (!expect(Tok::KwIn, "'in'")) return std::nullopt;
            termScope.push_back(*name);
            std::optional<Term> body = parseExpr();
            termScope.pop_back();
            if (!body) return std::nullopt;
            Term e = let(*bound, *body);
            remember(e, start);
            return e;
        }
        if (at(Tok::KwFun)) {
            advance();
            if (!expect(Tok::LParen, "'('")) return std::nullopt;
            std::optional<std::string> name = expectIdent("a parameter name");
            if (!name) return std::nullopt;
            if (!expect(Tok::Colon, "':'")) return std::nullopt;
            std::optional<Type> param = parseTypeExpr();
            if (!param) return std::nullopt;
            if (!expect(Tok::RParen, "')'")) return std::nullopt;
            if (!expect(Tok::FatArrow, "'=>'")) return std::nullopt;
            termScope.push_back(*name);
            std::optional<Term> body = parseExpr();
            termScope.pop_back();
            if (!body) return std::nullopt;
            Term e = abs(*param, *body);
            remember(e, start);
            return e;
        }
        if (at(Tok::KwTfun)) {
            advance();
            if (!expect(Tok::LBracket, "'['")) return std::nullopt;
            std::optional<std::string> name = expectIdent("a type-variable name");
            if (!name) return std::nullopt;
            if (!expect(Tok::SubOf, "'<:'")) return std::nullopt;
            std::optional<Type> bound = parsePureType();
            if (!bound) return std::nullopt;
            if (!expect(Tok::RBracket, "']'")) return std::nullopt;
            if (!expect(Tok::FatArrow, "'=>'")) return std::nullopt;
            typeScope.push_back(*name);
            std::optional<Term> body = parseExpr();
            typeScope.pop_back();
            if (!body) return std::nullopt;
            Term e = tabs(*bound, *body);
            remember(e, start);
            return e;
        }
        if (at(Tok::KwBox)) {
            advance();
            std::optional<Var> v = termVarRef("a variable after 'box'");
            if (!v) return std::nullopt;
            Term e = boxVal(*v);
            remember(e, start);
            return e;
        }
        if (at(Tok::LBrace)) {
            std::optional<CaptureSet> c = parseCaptureSet();
            if (!c) return std::nullopt;
            if (!expect(Tok::KwUnbox, "'unbox'")) return std::nullopt;
            std::optional<Var> v = termVarRef("a variable after 'unbox'");
            if (!v) return std::nullopt;
            Term e = unbox(*c, *v);
            remember(e, start);
            return e;
        }
        if (at(Tok::Ident)) {
            std::optional<Var> head = termVarRef("a variable");
            if (!head) return std::nullopt;
            if (at(Tok::Ident)) {
                std::optional<Var> arg = termVarRef("an argument variable");
                if (!arg) return std::nullopt;
                Term e = app(*head, *arg);
                remember(e, start);
                return e;
            }
            if (at(Tok::LBracket)) {
                advance();
                // Accept a full (possibly capturing) type here so that the
                // checker, not the grammar, rejects impure arguments.
                std::optional<Type> ty = parseTypeExpr();
                if (!ty) return std::nullopt;
                if (!expect(Tok::RBracket, "']'")) return std::nullopt;
                Term e = tapp(*head, *ty);
                remember(e, start);
                return e;
            }
            if (at(Tok::KwFun) || at(Tok::KwTfun) || at(Tok::KwLet) || at(Tok::KwBox) ||
                at(Tok::LBrace)) {
                error("application operands must be variables", "E_MNF_VIOLATION");
                return std::nullopt;
            }
            Term e = varTerm(*head);
            remember(e, start);
            return e;
        }
        error("expected an expression");
        return std::nullopt;
    }
};

void collectSpans(const Term& e, TermPath& path,
                  const std::map<const void*, Span>& nodeSpans,
                  std::map<TermPath, Span>& out) {
    auto it = nodeSpans.find(&e.node());
    if (it != nodeSpans.end()) out[path] = it->second;
    if (const auto* a = e.get<AbsTerm>()) {
        path.push_back(0);
        collectSpans(a->body, path, nodeSpans, out);
        path.pop_back();
    } else if (const auto* f = e.get<TAbsTerm>()) {
        path.push_back(0);
        collectSpans(f->body, path, nodeSpans, out);
        path.pop_back();
    } else if (const auto* l = e.get<LetTerm>()) {
        path.push_back(0);
        collectSpans(l->bound, path, nodeSpans, out);
        path.pop_back();
        path.push_back(1);
        collectSpans(l->body, path, nodeSpans, out);
        path.pop_back();
    }
}

}  // namespace

ParseResult parse(std::string_view text) {
    Lexer lexer{text};
    std::vector<Token> toks = lexer.lex();
    if (!lexer.diags.empty()) return ParseResult{std::nullopt, lexer.diags};

    Parser p{std::move(toks)};
    std::optional<Term> term = p.parseExpr();
    if (term && !p.at(Tok::End)) {
        p.error("unexpected input after the program");
        term = std::nullopt;
    }
    if (!term) {
        if (p.diags.empty()) {
            p.error("empty program");
        }
        return ParseResult{std::nullopt, p.diags};
    }

    SourceProgram prog{std::string(text), *term, {}};
    TermPath path;
    collectSpans(*term, path, p.nodeSpans, prog.spans);
    return ParseResult{std::move(prog), p.diags};
}

ParseTypeResult parseType(std::string_view text) {
    Lexer lexer{text};
    std::vector<Token> toks = lexer.lex();
    if (!lexer.diags.empty()) return ParseTypeResult{std::nullopt, lexer.diags};

    Parser p{std::move(toks)};
    std::optional<Type> ty = p.parseTypeExpr();
    if (ty && !p.at(Tok::End)) {
        p.error("unexpected input after the type");
        ty = std::nullopt;
    }
    if (!ty) return ParseTypeResult{std::nullopt, p.diags};
    return ParseTypeResult{*ty, p.diags};
}

}  // namespace ccbox
