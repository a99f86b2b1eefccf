#pragma once

#include <string>

#include "ccbox/capture_set.hpp"
#include "ccbox/machine.hpp"
#include "ccbox/term.hpp"
#include "ccbox/type.hpp"

namespace ccbox {

// Deterministic pretty-printer; parse(print(e)) is structural identity on
// locally closed inputs. Binders are named by depth (x0, x1, ... / X0, ...).
std::string prettyPrint(const Term& e);
std::string prettyPrint(const Type& t);
std::string prettyPrint(const CaptureSet& c);

// "⟨store | stack | focus⟩" rendering used by --trace.
std::string printState(const MachineState& s);

}  // namespace ccbox
