#pragma once

#include <functional>
#include <vector>

#include "bijenum/alphabet.hpp"
#include "bijenum/bignum.hpp"

namespace bijenum {

/// State of the concatenation growth process over binary strings: the
/// current longest element, the fixed length-1 element appended each step,
/// and how many new elements have been produced so far.
struct GrowthState {
  SymbolString sup;
  SymbolString inf;
  Nat count;
};

/// inf = "0", sup = "1", count = 0.
GrowthState init_growth();

/// Appends inf to the right end of sup and counts the discovery; the new
/// sup is strictly longer, so the process never reaches a maximal element.
GrowthState grow_step(const GrowthState& g);

/// Visits the trace init, step 1, ..., step `steps` (steps+1 states).
void run_growth(std::size_t steps, const std::function<void(const GrowthState&)>& visit);

/// Materialized trace; prefer the visitor form for long runs.
std::vector<GrowthState> run_growth(std::size_t steps);

}  // namespace bijenum
