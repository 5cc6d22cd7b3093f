#include "liftreg/fourier_motzkin.hpp"

namespace liftreg {

bool fm_feasible(std::vector<FmConstraint> system, std::size_t nvars) {
  for (std::size_t var = nvars; var-- > 0;) {
    std::vector<FmConstraint> lowers, uppers, rest;
    for (auto& c : system) {
      int s = c.coeff[var].sign();
      if (s > 0) {
        uppers.push_back(std::move(c));
      } else if (s < 0) {
        lowers.push_back(std::move(c));
      } else {
        rest.push_back(std::move(c));
      }
    }
    // combine every lower bound with every upper bound
    for (const auto& lo : lowers) {
      Rat a = -lo.coeff[var];  // positive
      for (const auto& up : uppers) {
        Rat b = up.coeff[var];  // positive
        FmConstraint c;
        c.coeff.assign(nvars, Rat(0));
        for (std::size_t j = 0; j < nvars; ++j)
          c.coeff[j] = b * lo.coeff[j] + a * up.coeff[j];
        c.rhs = b * lo.rhs + a * up.rhs;
        c.strict = lo.strict || up.strict;
        rest.push_back(std::move(c));
      }
    }
    system = std::move(rest);
  }
  for (const auto& c : system) {
    int s = c.rhs.sign();
    if (s < 0 || (s == 0 && c.strict)) return false;
  }
  return true;
}

}  // namespace liftreg
