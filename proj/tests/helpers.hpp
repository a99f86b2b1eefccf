#pragma once

#include <stdexcept>
#include <string>

#include "ccbox/binding.hpp"
#include "ccbox/classify.hpp"
#include "ccbox/driver.hpp"
#include "ccbox/env.hpp"
#include "ccbox/machine.hpp"
#include "ccbox/parser.hpp"
#include "ccbox/printer.hpp"
#include "ccbox/subtyping.hpp"
#include "ccbox/typing.hpp"

namespace tt {

inline ccbox::Atom termAtom(std::uint64_t id, std::string name) {
    return ccbox::Atom(id, ccbox::AtomKind::Term, std::move(name));
}
inline ccbox::Atom typeAtom(std::uint64_t id, std::string name) {
    return ccbox::Atom(id, ccbox::AtomKind::Type, std::move(name));
}

inline ccbox::Type emptyTop() {
    return ccbox::capt(ccbox::CaptureSet::empty(), ccbox::topType());
}

inline std::string corpusPath(const std::string& name) {
    return std::string(CCBOX_CORPUS_DIR) + "/" + name;
}

inline std::string corpusText(const std::string& name) {
    auto text = ccbox::readFile(corpusPath(name));
    if (!text.has_value()) throw std::runtime_error("missing corpus file: " + name);
    return *text;
}

inline ccbox::Term corpusProgram(const std::string& name) {
    ccbox::ParseResult r = ccbox::parse(corpusText(name));
    if (!r.ok()) throw std::runtime_error("corpus file does not parse: " + name);
    return r.program->parsed;
}

}  // namespace tt
