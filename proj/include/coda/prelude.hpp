#pragma once

// The installed base context: encodings, marker atoms and the combinatoric
// definitions (pass, null, ap, bool, =, def, while, prod, sum, ...).

#include <string>
#include <string_view>
#include <vector>

#include "coda/atoms.hpp"
#include "coda/engine.hpp"

namespace coda {

// Adds every builtin to `ctx` as base definitions.
Context install_prelude(const Context& ctx = Context{});

// The shared, lazily built prelude context.
const Context& prelude();

// Throws UnknownBuiltin for names not in builtin_names().
Definition builtin(std::string_view name);
const std::vector<std::string>& builtin_names();

// Word ordering used by `sort`: words before other atoms, words by byte
// text, everything else by canonical order.
bool lexical_less(const Coda& a, const Coda& b);

}  // namespace coda
