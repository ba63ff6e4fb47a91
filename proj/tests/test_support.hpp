#pragma once

#include <string>

#include "coda/engine.hpp"
#include "coda/lang.hpp"
#include "coda/prelude.hpp"

namespace test {

// Evaluates source text against the prelude and renders the result.
inline std::string ev(const std::string& source, const coda::Context& ctx = coda::prelude()) {
  return coda::render(coda::evaluate(coda::parse(source), ctx).result);
}

}  // namespace test
