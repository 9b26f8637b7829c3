#include "bijenum/growth.hpp"

namespace bijenum {

GrowthState init_growth() {
  return GrowthState{SymbolString::parse(Alphabet::binary(), "1"),
                     SymbolString::parse(Alphabet::binary(), "0"), Nat(0)};
}

GrowthState grow_step(const GrowthState& g) {
  return GrowthState{concat(g.sup, g.inf), g.inf, g.count + 1};
}

void run_growth(std::size_t steps, const std::function<void(const GrowthState&)>& visit) {
  GrowthState state = init_growth();
  visit(state);
  for (std::size_t i = 0; i < steps; ++i) {
    state = grow_step(state);
    visit(state);
  }
}

std::vector<GrowthState> run_growth(std::size_t steps) {
  std::vector<GrowthState> trace;
  trace.reserve(steps + 1);
  run_growth(steps, [&trace](const GrowthState& g) { trace.push_back(g); });
  return trace;
}

}  // namespace bijenum
