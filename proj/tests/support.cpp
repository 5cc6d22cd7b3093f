#include "support.hpp"

namespace liftreg::testsupport {

namespace {

// All overlap translates of a facet region by brute force over small
// basis coefficients; independent of the engine's coefficient-bound
// machinery. Range +-8 is ample for the tiny bodies these oracles see.
std::vector<RatVec> brute_translates(const FacetRegion& reg, const RatVec& l_max,
                                     TermOrder order) {
  std::size_t rank = reg.lattice.rank();
  std::vector<RatVec> out;
  if (rank == 0) return out;
  std::vector<RatVec> taus;
  for (const auto& b : reg.lattice.basis()) taus.push_back(reg.mu_of_lattice(b));
  std::vector<long> s(rank, -8);
  while (true) {
    bool all_zero = true;
    for (auto v : s)
      if (v) all_zero = false;
    if (!all_zero) {
      RatVec tau(l_max.size());
      IntVec t(reg.lattice.ambient_dim(), 0);
      for (std::size_t l = 0; l < rank; ++l) {
        tau = add(tau, scaled(Rat(s[l]), taus[l]));
        for (std::size_t j = 0; j < t.size(); ++j)
          t[j] += Int(s[l]) * reg.lattice.basis()[l][j];
      }
      bool overlap = true;
      for (std::size_t j = 0; j < tau.size() && overlap; ++j)
        overlap = tau[j].abs() < l_max[j];
      if (overlap && order_positive(t, order)) out.push_back(std::move(tau));
    }
    std::size_t l = rank;
    bool done = false;
    while (l > 0) {
      --l;
      if (s[l] < 8) {
        ++s[l];
        for (std::size_t j = l + 1; j < rank; ++j) s[j] = -8;
        break;
      }
      if (l == 0) done = true;
    }
    if (done) break;
  }
  return out;
}

struct MuSpace {
  std::vector<RatVec> lambdas;               // positive boxes
  RatVec l_max;
  std::vector<std::pair<RatVec, RatVec>> subs;  // translate boxes (lo, hi)
};

MuSpace mu_space_of(const FacetRegion& reg, TermOrder order) {
  MuSpace ms;
  for (const auto& box : reg.boxes)
    if (box.positive) ms.lambdas.push_back(box.lambda);
  if (ms.lambdas.empty()) return ms;
  std::size_t n = ms.lambdas[0].size();
  ms.l_max.assign(n, Rat(0));
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& l : ms.lambdas) ms.l_max[j] = std::max(ms.l_max[j], l[j]);
  for (const auto& tau : brute_translates(reg, ms.l_max, order))
    for (const auto& l : ms.lambdas) ms.subs.emplace_back(tau, add(tau, l));
  return ms;
}

}  // namespace

Rat signed_formula_facet_measure(const FacetRegion& reg, TermOrder order) {
  MuSpace ms = mu_space_of(reg, order);
  if (ms.lambdas.empty()) return Rat(0);
  std::size_t n = ms.lambdas[0].size();

  std::vector<std::pair<RatVec, RatVec>> kept;
  for (const auto& l : ms.lambdas) kept.emplace_back(RatVec(n), l);

  Rat vol_u = boxes_union_volume(kept);
  if (ms.subs.empty()) return vol_u;
  if (ms.subs.size() > 14)
    fail(ErrorCode::kInternal, "signed-formula oracle instance too large");

  // vol(U cap X) via the product of the two inclusion-exclusion expansions
  Rat vol_ux(0);
  std::size_t ku = kept.size(), kx = ms.subs.size();
  for (std::size_t tmask = 1; tmask < (std::size_t(1) << ku); ++tmask) {
    for (std::size_t smask = 1; smask < (std::size_t(1) << kx); ++smask) {
      std::vector<std::pair<RatVec, RatVec>> chosen;
      for (std::size_t i = 0; i < ku; ++i)
        if (tmask & (std::size_t(1) << i)) chosen.push_back(kept[i]);
      for (std::size_t i = 0; i < kx; ++i)
        if (smask & (std::size_t(1) << i)) chosen.push_back(ms.subs[i]);
      Rat term = boxes_intersection_volume(chosen);
      if (term.is_zero()) continue;
      int sign = ((__builtin_popcountll(tmask) + 1) + (__builtin_popcountll(smask) + 1)) % 2;
      if (sign == 0) vol_ux += term;
      else vol_ux -= term;
    }
  }
  return vol_u - vol_ux;
}

Rat grid_facet_measure(const FacetRegion& reg, TermOrder order) {
  MuSpace ms = mu_space_of(reg, order);
  if (ms.lambdas.empty()) return Rat(0);
  std::size_t n = ms.lambdas[0].size();

  std::vector<std::vector<Rat>> breaks(n);
  for (std::size_t j = 0; j < n; ++j) {
    breaks[j].push_back(Rat(0));
    for (const auto& l : ms.lambdas) breaks[j].push_back(l[j]);
    for (const auto& s : ms.subs) {
      for (const Rat& v : {s.first[j], s.second[j]})
        if (v.sign() > 0 && v < ms.l_max[j]) breaks[j].push_back(v);
    }
    std::sort(breaks[j].begin(), breaks[j].end());
    breaks[j].erase(std::unique(breaks[j].begin(), breaks[j].end()), breaks[j].end());
  }

  Rat total(0);
  std::vector<std::size_t> cell(n, 0);
  while (true) {
    RatVec mid(n);
    Rat vol(1);
    bool valid = true;
    for (std::size_t j = 0; j < n && valid; ++j) {
      if (cell[j] + 1 >= breaks[j].size()) valid = false;
      else {
        mid[j] = (breaks[j][cell[j]] + breaks[j][cell[j] + 1]) / Rat(2);
        vol *= breaks[j][cell[j] + 1] - breaks[j][cell[j]];
      }
    }
    if (valid) {
      bool in_u = false;
      for (const auto& l : ms.lambdas) {
        bool inside = true;
        for (std::size_t j = 0; j < n && inside; ++j)
          inside = mid[j] < l[j];
        if (inside) in_u = true;
      }
      bool in_x = false;
      if (in_u) {
        for (const auto& s : ms.subs) {
          bool inside = true;
          for (std::size_t j = 0; j < n && inside; ++j)
            inside = s.first[j] < mid[j] && mid[j] < s.second[j];
          if (inside) in_x = true;
        }
      }
      if (in_u && !in_x) total += vol;
    }
    std::size_t j = n;
    bool done = false;
    while (j > 0) {
      --j;
      if (cell[j] + 2 < breaks[j].size()) {
        ++cell[j];
        for (std::size_t k = j + 1; k < n; ++k) cell[k] = 0;
        break;
      }
      if (j == 0) done = true;
      cell[j] = 0;
    }
    if (done) break;
  }
  return total;
}

bool parallelotope_interiors_intersect(const RatVec& anchor1, const RatMat& basis1,
                                       const RatVec& lambda1, const RatVec& anchor2,
                                       const RatMat& basis2, const RatVec& lambda2) {
  std::size_t n = anchor1.size();
  RatMat inv2 = inverse(basis2);
  // variables mu in (0, lambda1); image point must satisfy
  // 0 < inv2 (anchor1 + basis1 mu - anchor2) < lambda2
  RatMat chain = inv2.mul(basis1);
  RatVec base = inv2.mul(sub(anchor1, anchor2));
  std::vector<FmConstraint> sys;
  for (std::size_t j = 0; j < n; ++j) {
    FmConstraint lo, hi;
    lo.coeff.assign(n, Rat(0));
    hi.coeff.assign(n, Rat(0));
    lo.coeff[j] = Rat(-1);
    hi.coeff[j] = Rat(1);
    lo.rhs = Rat(0);
    hi.rhs = lambda1[j];
    lo.strict = hi.strict = true;
    sys.push_back(std::move(lo));
    sys.push_back(std::move(hi));
  }
  for (std::size_t j = 0; j < n; ++j) {
    FmConstraint lo, hi;
    lo.coeff.assign(n, Rat(0));
    hi.coeff.assign(n, Rat(0));
    for (std::size_t c = 0; c < n; ++c) {
      lo.coeff[c] = -chain.at(j, c);
      hi.coeff[c] = chain.at(j, c);
    }
    lo.rhs = base[j];
    hi.rhs = lambda2[j] - base[j];
    lo.strict = hi.strict = true;
    sys.push_back(std::move(lo));
    sys.push_back(std::move(hi));
  }
  return fm_feasible(std::move(sys), n);
}

}  // namespace liftreg::testsupport
