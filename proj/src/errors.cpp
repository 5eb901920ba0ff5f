#include "frames/errors.hpp"

#include <utility>

namespace frames {

namespace {

std::string join_cycle(const std::vector<std::string>& cycle) {
  std::string out = "cover relation has a cycle:";
  for (const auto& name : cycle) out += " " + name;
  return out;
}

}  // namespace

CycleDetected::CycleDetected(std::vector<std::string> cycle)
    : FrameError(join_cycle(cycle)), cycle_(std::move(cycle)) {}

NotALattice::NotALattice(Missing missing, Element x, Element y, const std::string& what)
    : FrameError(what), missing_(missing), x_(x), y_(y) {}

NotDistributive::NotDistributive(std::array<Element, 3> witness, const std::string& what)
    : FrameError(what), witness_(witness) {}

BudgetExceeded::BudgetExceeded(std::size_t limit, const std::string& what)
    : FrameError(what), limit_(limit) {}

}  // namespace frames
