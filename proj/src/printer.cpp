#include "ccbox/printer.hpp"

#include <sstream>

namespace ccbox {

namespace {

// Binders are named positionally: term binder at depth d prints as "x<d>",
// type binders as "X<d>". At any point each in-scope depth has exactly one
// binder, so the naming is unambiguous and reparses to the same indices.
struct Printer {
    std::ostringstream out;
    std::uint32_t termDepth = 0;
    std::uint32_t typeDepth = 0;

    std::string boundTermName(std::uint32_t index) const {
        if (index >= termDepth) return "#" + std::to_string(index);  // dangling
        return "x" + std::to_string(termDepth - 1 - index);
    }
    std::string boundTypeName(std::uint32_t index) const {
        if (index >= typeDepth) return "#" + std::to_string(index);
        return "X" + std::to_string(typeDepth - 1 - index);
    }

    void captureSet(const CaptureSet& c) {
        out << "{";
        bool first = true;
        auto sep = [&] {
            if (!first) out << ", ";
            first = false;
        };
        for (const Atom& a : c.frees()) {
            sep();
            out << a.display();
        }
        for (std::uint32_t b : c.bounds()) {
            sep();
            out << boundTermName(b);
        }
        if (c.isUniversal()) {
            sep();
            out << "*";
        }
        out << "}";
    }

    void type(const Type& t) {
        if (const auto* c = t.get<CaptType>()) {
            captureSet(c->captures);
            out << " ";
            type(c->pure);
            return;
        }
        if (t.is<TopType>()) {
            out << "Top";
            return;
        }
        if (const auto* v = t.get<TVarFree>()) {
            out << v->atom.display();
            return;
        }
        if (const auto* v = t.get<TVarBound>()) {
            out << boundTypeName(v->index);
            return;
        }
        if (const auto* b = t.get<BoxType>()) {
            out << "box ";
            type(b->inner);
            return;
        }
        if (const auto* a = t.get<ArrowType>()) {
            out << "(x" << termDepth << " : ";
            type(a->param);
            out << ") -> ";
            termDepth += 1;
            type(a->result);
            termDepth -= 1;
            return;
        }
        const auto* f = t.get<AllType>();
        out << "[X" << typeDepth << " <: ";
        type(f->bound);
        out << "] -> ";
        typeDepth += 1;
        type(f->result);
        typeDepth -= 1;
    }

    void var(const Var& v) {
        if (v.isFree()) {
            out << v.atom().display();
        } else {
            out << boundTermName(v.index());
        }
    }

    void term(const Term& e) {
        if (const auto* v = e.get<VarTerm>()) {
            var(v->var);
            return;
        }
        if (const auto* a = e.get<AbsTerm>()) {
            out << "fun (x" << termDepth << " : ";
            type(a->paramType);
            out << ") => ";
            termDepth += 1;
            term(a->body);
            termDepth -= 1;
            return;
        }
        if (const auto* f = e.get<TAbsTerm>()) {
            out << "tfun [X" << typeDepth << " <: ";
            type(f->bound);
            out << "] => ";
            typeDepth += 1;
            term(f->body);
            typeDepth -= 1;
            return;
        }
        if (const auto* b = e.get<BoxTerm>()) {
            out << "box ";
            var(b->operand);
            return;
        }
        if (const auto* ap = e.get<AppTerm>()) {
            var(ap->fn);
            out << " ";
            var(ap->arg);
            return;
        }
        if (const auto* ta = e.get<TAppTerm>()) {
            var(ta->fn);
            out << " [";
            type(ta->typeArg);
            out << "]";
            return;
        }
        if (const auto* u = e.get<UnboxTerm>()) {
            captureSet(u->captures);
            out << " unbox ";
            var(u->operand);
            return;
        }
        const auto* l = e.get<LetTerm>();
        out << "let x" << termDepth << " = ";
        term(l->bound);
        out << " in ";
        termDepth += 1;
        term(l->body);
        termDepth -= 1;
    }
};

}  // namespace

std::string prettyPrint(const Term& e) {
    Printer p;
    p.term(e);
    return p.out.str();
}

std::string prettyPrint(const Type& t) {
    Printer p;
    p.type(t);
    return p.out.str();
}

std::string prettyPrint(const CaptureSet& c) {
    Printer p;
    p.captureSet(c);
    return p.out.str();
}

std::string printState(const MachineState& s) {
    std::ostringstream out;
    out << "⟨";
    if (s.store.size() == 0) {
        out << "∅";
    } else {
        bool first = true;
        for (const auto& [x, v] : s.store.bindings()) {
            if (!first) out << ", ";
            first = false;
            out << x.display() << " = " << prettyPrint(v);
        }
    }
    out << " | ";
    if (s.stack.empty()) {
        out << "∅";
    } else {
        // innermost frame first, matching e :: E
        for (auto it = s.stack.rbegin(); it != s.stack.rend(); ++it) {
            Printer p;
            p.termDepth = 1;  // frame binder prints as x0
            p.term(it->body);
            out << p.out.str() << " :: ";
        }
        out << "∅";
    }
    out << " | " << prettyPrint(s.focus) << "⟩";
    return out.str();
}

}  // namespace ccbox
