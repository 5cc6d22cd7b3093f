#include "liftreg/lifting.hpp"

#include <algorithm>
#include <random>

#include "liftreg/fourier_motzkin.hpp"

namespace liftreg {

bool order_positive(const IntVec& t, TermOrder order) {
  if (order == TermOrder::kLex) {
    for (const auto& x : t) {
      if (x > 0) return true;
      if (x < 0) return false;
    }
    return false;
  }
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    if (*it > 0) return true;
    if (*it < 0) return false;
  }
  return false;
}

RatVec FacetRegion::mu_of_lattice(const IntVec& t) const {
  if (degenerate())
    fail(ErrorCode::kInternal, "mu coordinates undefined for a degenerate facet region");
  return basis_inv->mul(to_rat(t));
}

RatVec barycentric_on_facet(const SimplicialPolytope& p, std::size_t facet,
                            const IntVec& y) {
  const Facet& fc = p.facets().at(facet);
  RatVec yr = to_rat(y);
  if (!p.slack(facet, yr).is_zero())
    fail(ErrorCode::kNotOnFacet, "point is not on the facet hyperplane");
  std::size_t n = p.dim();
  // columns are facet vertices in homogeneous coordinates; the system
  // encodes sum lambda_j v^{ij} = y together with sum lambda_j = 1
  RatMat a(n + 1, n);
  for (std::size_t c = 0; c < n; ++c) {
    const RatVec& v = p.vertices()[fc.incidence[c]];
    for (std::size_t r = 0; r < n; ++r) a.at(r, c) = v[r];
    a.at(n, c) = Rat(1);
  }
  RatVec rhs = yr;
  rhs.push_back(Rat(1));
  GeneralSolution s = solve_general(a, rhs);
  if (!s.consistent || !s.kernel.empty())
    fail(ErrorCode::kInternal, "facet vertices are not affinely independent");
  for (const auto& l : s.particular)
    if (l.sign() < 0)
      fail(ErrorCode::kNotOnFacet, "point is outside the closed facet");
  return s.particular;
}

LiftingRegion build_region(const SimplicialPolytope& p, const RatVec& f,
                           const MaximalityReport* precomputed_report) {
  if (f.size() != p.dim()) fail(ErrorCode::kFOutside, "f has the wrong dimension");
  if (!p.contains(f)) fail(ErrorCode::kFOutside, "f lies outside the body");

  LiftingRegion region;
  region.body = p;
  region.report = precomputed_report ? *precomputed_report : maximality_report(p);
  region.f = f;
  region.boundary_f = !p.strictly_contains(f);

  for (std::size_t i = 0; i < p.facets().size(); ++i) {
    const Facet& fc = p.facets()[i];
    FacetRegion reg;
    reg.facet = i;
    reg.vertex_order = fc.incidence;
    std::vector<RatVec> cols;
    for (auto vi : fc.incidence) cols.push_back(sub(p.vertices()[vi], f));
    reg.basis = RatMat::from_columns(cols);
    Rat d = det(reg.basis);
    reg.absdet = d.abs();
    if (!d.is_zero()) reg.basis_inv = inverse(reg.basis);
    for (const auto& y : region.report.per_facet[i].all) {
      RegionBox box;
      box.point = y;
      box.lambda = barycentric_on_facet(p, i, y);
      box.positive = true;
      for (const auto& l : box.lambda)
        if (l.sign() == 0) box.positive = false;
      reg.boxes.push_back(std::move(box));
    }
    reg.lattice = kernel_lattice(fc.normal);
    region.regions.push_back(std::move(reg));
  }
  return region;
}

namespace {

// x in some box of this facet region, exact; handles the degenerate case
// (f on the facet) through Fourier-Motzkin feasibility.
bool facet_region_contains(const LiftingRegion& region, const FacetRegion& reg,
                           const RatVec& x) {
  RatVec rel = sub(x, region.f);
  if (!reg.degenerate()) {
    RatVec mu = reg.basis_inv->mul(rel);
    for (const auto& box : reg.boxes) {
      bool ok = true;
      for (std::size_t j = 0; j < mu.size() && ok; ++j)
        ok = mu[j].sign() >= 0 && mu[j] <= box.lambda[j];
      if (ok) return true;
    }
    return false;
  }
  // degenerate: region lives in the facet hyperplane through f
  if (!region.body.slack(reg.facet, x).is_zero()) return false;
  GeneralSolution s = solve_general(reg.basis, rel);
  if (!s.consistent) return false;
  std::size_t nvars = s.kernel.size();
  for (const auto& box : reg.boxes) {
    std::vector<FmConstraint> sys;
    for (std::size_t j = 0; j < s.particular.size(); ++j) {
      FmConstraint lo, hi;
      lo.coeff.assign(nvars, Rat(0));
      hi.coeff.assign(nvars, Rat(0));
      for (std::size_t l = 0; l < nvars; ++l) {
        lo.coeff[l] = -s.kernel[l][j];
        hi.coeff[l] = s.kernel[l][j];
      }
      lo.rhs = s.particular[j];
      hi.rhs = box.lambda[j] - s.particular[j];
      sys.push_back(std::move(lo));
      sys.push_back(std::move(hi));
    }
    if (fm_feasible(std::move(sys), nvars)) return true;
  }
  return false;
}

}  // namespace

bool membership(const LiftingRegion& region, const RatVec& x) {
  if (x.size() != region.f.size())
    fail(ErrorCode::kInternal, "membership: dimension mismatch");
  for (const auto& reg : region.regions)
    if (facet_region_contains(region, reg, x)) return true;
  return false;
}

// ---------------------------------------------------------------------
// exact torus volume
// ---------------------------------------------------------------------

namespace {

// Lattice translates whose mu-image can overlap the union of boxes:
// t in the intersection lattice, t positive under the term order, and
// |tau(t)_j| < L_j on every axis (L_j = per-axis maximum of the positive
// boxes). Coefficient bounds come from the exact pseudo-inverse of the
// tau-image of the lattice basis.
std::vector<RatVec> overlap_translates(const FacetRegion& reg, const RatVec& L,
                                       TermOrder order) {
  std::size_t rank = reg.lattice.rank();
  if (rank == 0) return {};
  std::size_t n = L.size();
  std::vector<RatVec> taus;
  for (const auto& b : reg.lattice.basis()) taus.push_back(reg.mu_of_lattice(b));
  RatMat t_mat = RatMat::from_columns(taus);
  RatMat t_t = t_mat.transposed();
  RatMat pseudo = inverse(t_t.mul(t_mat)).mul(t_t);  // rank x n left inverse

  std::vector<long> bound(rank);
  Int candidates = 1;
  for (std::size_t l = 0; l < rank; ++l) {
    Rat b;
    for (std::size_t j = 0; j < n; ++j) b += pseudo.at(l, j).abs() * L[j];
    Int fl = b.floor();
    if (fl < 0) fl = 0;
    if (!fl.fits_slong_p())
      fail(ErrorCode::kEnumerationCap, "translate coefficient bound overflow");
    bound[l] = fl.get_si();
    candidates *= 2 * fl + 1;
  }
  if (candidates > Int(static_cast<unsigned long>(enum_cap())))
    fail(ErrorCode::kEnumerationCap,
         "translate enumeration needs " + candidates.get_str() + " candidates");

  std::vector<RatVec> result;
  std::vector<long> s(rank);
  for (std::size_t l = 0; l < rank; ++l) s[l] = -bound[l];
  while (true) {
    bool all_zero = true;
    for (auto v : s)
      if (v != 0) all_zero = false;
    if (!all_zero) {
      RatVec tau(n);
      for (std::size_t l = 0; l < rank; ++l)
        if (s[l] != 0) tau = add(tau, scaled(Rat(s[l]), taus[l]));
      bool overlaps = true;
      for (std::size_t j = 0; j < n && overlaps; ++j)
        overlaps = tau[j].abs() < L[j];
      if (overlaps) {
        IntVec t(reg.lattice.ambient_dim(), 0);
        for (std::size_t l = 0; l < rank; ++l)
          for (std::size_t j = 0; j < t.size(); ++j)
            t[j] += Int(s[l]) * reg.lattice.basis()[l][j];
        if (order_positive(t, order)) result.push_back(std::move(tau));
      }
    }
    std::size_t l = rank;
    while (l > 0) {
      --l;
      if (s[l] < bound[l]) {
        ++s[l];
        for (std::size_t j = l + 1; j < rank; ++j) s[j] = -bound[j];
        break;
      }
      if (l == 0) return result;
    }
  }
}

template <typename Coord>
Int to_mpz(const Coord& c) {
  return Int(c);
}
template <>
Int to_mpz<long long>(const long long& c) {
  return Int(static_cast<long>(c));
}

// Measure of (union of anchored boxes [0, upper_k]) minus (union of the
// translated boxes), by recursive slab sweep with coordinate-sorted
// breakpoints. All coordinates are pre-scaled integers.
template <typename Coord>
struct SweepData {
  std::size_t n = 0;
  std::vector<std::vector<Coord>> kept;  // upper corners, anchored at 0
  std::vector<std::vector<Coord>> sub_lo, sub_hi;
};

template <typename Coord>
Int sweep_measure(const SweepData<Coord>& data, std::size_t axis,
                  const std::vector<std::size_t>& kept_idx,
                  const std::vector<std::size_t>& sub_idx) {
  if (kept_idx.empty()) return 0;
  if (axis + 1 == data.n) {
    Coord h = data.kept[kept_idx[0]][axis];
    for (auto i : kept_idx) h = std::max(h, data.kept[i][axis]);
    std::vector<std::pair<Coord, Coord>> iv;
    iv.reserve(sub_idx.size());
    for (auto j : sub_idx) {
      Coord lo = std::max(Coord(0), data.sub_lo[j][axis]);
      Coord hi = std::min(h, data.sub_hi[j][axis]);
      if (hi > lo) iv.emplace_back(lo, hi);
    }
    std::sort(iv.begin(), iv.end());
    Coord covered(0), end(0);
    for (const auto& p : iv) {
      if (p.second <= end) continue;
      covered += p.second - std::max(end, p.first);
      end = p.second;
    }
    return to_mpz<Coord>(h - covered);
  }

  Coord max_u = data.kept[kept_idx[0]][axis];
  for (auto i : kept_idx) max_u = std::max(max_u, data.kept[i][axis]);
  std::vector<Coord> bp;
  bp.push_back(Coord(0));
  for (auto i : kept_idx) bp.push_back(data.kept[i][axis]);
  for (auto j : sub_idx) {
    const Coord& lo = data.sub_lo[j][axis];
    const Coord& hi = data.sub_hi[j][axis];
    if (lo > Coord(0) && lo < max_u) bp.push_back(lo);
    if (hi > Coord(0) && hi < max_u) bp.push_back(hi);
  }
  std::sort(bp.begin(), bp.end());
  bp.erase(std::unique(bp.begin(), bp.end()), bp.end());

  Int total = 0;
  std::vector<std::size_t> kept_next, sub_next;
  for (std::size_t s = 0; s + 1 < bp.size(); ++s) {
    const Coord& a = bp[s];
    const Coord& b = bp[s + 1];
    kept_next.clear();
    for (auto i : kept_idx)
      if (data.kept[i][axis] >= b) kept_next.push_back(i);
    if (kept_next.empty()) continue;
    sub_next.clear();
    for (auto j : sub_idx)
      if (data.sub_lo[j][axis] <= a && data.sub_hi[j][axis] >= b)
        sub_next.push_back(j);
    total += to_mpz<Coord>(b - a) * sweep_measure(data, axis + 1, kept_next, sub_next);
  }
  return total;
}

template <typename Coord>
Rat run_sweep(const std::vector<const RatVec*>& lambdas,
              const std::vector<RatVec>& taus, const IntVec& scale,
              std::size_t n) {
  SweepData<Coord> data;
  data.n = n;
  auto coord_of = [](const Rat& v, const Int& d) {
    Rat s = v * Rat(d);
    return s.num();  // integral: d clears the denominator
  };
  for (const auto* l : lambdas) {
    std::vector<Coord> up(n);
    for (std::size_t j = 0; j < n; ++j) up[j] = Coord(coord_of((*l)[j], scale[j]).get_si());
    data.kept.push_back(std::move(up));
  }
  // drop kept boxes dominated by another kept box
  {
    std::sort(data.kept.begin(), data.kept.end());
    data.kept.erase(std::unique(data.kept.begin(), data.kept.end()), data.kept.end());
    std::vector<std::vector<Coord>> pruned;
    for (std::size_t i = 0; i < data.kept.size(); ++i) {
      bool dominated = false;
      for (std::size_t k = 0; k < data.kept.size() && !dominated; ++k) {
        if (k == i || data.kept[k] == data.kept[i]) continue;
        bool le = true;
        for (std::size_t j = 0; j < n && le; ++j) le = data.kept[i][j] <= data.kept[k][j];
        dominated = le;
      }
      if (!dominated) pruned.push_back(data.kept[i]);
    }
    data.kept = std::move(pruned);
  }
  std::vector<Coord> max_u(n, Coord(0));
  for (const auto& up : data.kept)
    for (std::size_t j = 0; j < n; ++j) max_u[j] = std::max(max_u[j], up[j]);

  for (const auto& tau : taus) {
    std::vector<Coord> base(n);
    for (std::size_t j = 0; j < n; ++j) base[j] = Coord(coord_of(tau[j], scale[j]).get_si());
    for (const auto* l : lambdas) {
      std::vector<Coord> lo(n), hi(n);
      bool relevant = true;
      for (std::size_t j = 0; j < n && relevant; ++j) {
        lo[j] = base[j];
        hi[j] = base[j] + Coord(coord_of((*l)[j], scale[j]).get_si());
        relevant = hi[j] > Coord(0) && lo[j] < max_u[j];
      }
      if (!relevant) continue;
      data.sub_lo.push_back(std::move(lo));
      data.sub_hi.push_back(std::move(hi));
    }
  }

  std::vector<std::size_t> kept_idx(data.kept.size()), sub_idx(data.sub_lo.size());
  for (std::size_t i = 0; i < kept_idx.size(); ++i) kept_idx[i] = i;
  for (std::size_t i = 0; i < sub_idx.size(); ++i) sub_idx[i] = i;
  Int raw = sweep_measure(data, 0, kept_idx, sub_idx);
  Int denom = 1;
  for (std::size_t j = 0; j < n; ++j) denom *= scale[j];
  return Rat(raw, denom);
}

// mpz variant needs exact (not get_si) coordinate conversion
template <>
Rat run_sweep<Int>(const std::vector<const RatVec*>& lambdas,
                   const std::vector<RatVec>& taus, const IntVec& scale,
                   std::size_t n) {
  SweepData<Int> data;
  data.n = n;
  auto coord_of = [](const Rat& v, const Int& d) {
    Rat s = v * Rat(d);
    return s.num();
  };
  for (const auto* l : lambdas) {
    IntVec up(n);
    for (std::size_t j = 0; j < n; ++j) up[j] = coord_of((*l)[j], scale[j]);
    data.kept.push_back(std::move(up));
  }
  std::sort(data.kept.begin(), data.kept.end());
  data.kept.erase(std::unique(data.kept.begin(), data.kept.end()), data.kept.end());
  IntVec max_u(n, 0);
  for (const auto& up : data.kept)
    for (std::size_t j = 0; j < n; ++j) max_u[j] = std::max(max_u[j], up[j]);
  for (const auto& tau : taus) {
    IntVec base(n);
    for (std::size_t j = 0; j < n; ++j) base[j] = coord_of(tau[j], scale[j]);
    for (const auto* l : lambdas) {
      IntVec lo(n), hi(n);
      bool relevant = true;
      for (std::size_t j = 0; j < n && relevant; ++j) {
        lo[j] = base[j];
        hi[j] = base[j] + coord_of((*l)[j], scale[j]);
        relevant = hi[j] > 0 && lo[j] < max_u[j];
      }
      if (!relevant) continue;
      data.sub_lo.push_back(std::move(lo));
      data.sub_hi.push_back(std::move(hi));
    }
  }
  std::vector<std::size_t> kept_idx(data.kept.size()), sub_idx(data.sub_lo.size());
  for (std::size_t i = 0; i < kept_idx.size(); ++i) kept_idx[i] = i;
  for (std::size_t i = 0; i < sub_idx.size(); ++i) sub_idx[i] = i;
  Int raw = sweep_measure(data, 0, kept_idx, sub_idx);
  Int denom = 1;
  for (std::size_t j = 0; j < n; ++j) denom *= scale[j];
  return Rat(raw, denom);
}

// mu-space measure of the canonical fundamental part of one facet region:
// (union of positive boxes) minus (union of order-positive lattice
// translates of that union).
Rat facet_mu_measure(const FacetRegion& reg, TermOrder order) {
  std::vector<const RatVec*> lambdas;
  for (const auto& box : reg.boxes)
    if (box.positive) lambdas.push_back(&box.lambda);
  if (lambdas.empty()) return Rat(0);
  std::size_t n = lambdas[0]->size();

  RatVec l_max(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rat m = (*lambdas[0])[j];
    for (const auto* l : lambdas) m = std::max(m, (*l)[j]);
    l_max[j] = m;
  }
  std::vector<RatVec> taus = overlap_translates(reg, l_max, order);

  IntVec scale(n, 1);
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto* l : lambdas)
      mpz_lcm(scale[j].get_mpz_t(), scale[j].get_mpz_t(), (*l)[j].den().get_mpz_t());
    for (const auto& tau : taus)
      mpz_lcm(scale[j].get_mpz_t(), scale[j].get_mpz_t(), tau[j].den().get_mpz_t());
  }

  // int64 path when every scaled coordinate stays tiny enough that a
  // product of n of them cannot overflow
  Int limit = 1;
  limit <<= (60 / static_cast<unsigned>(n));
  bool small = true;
  for (std::size_t j = 0; j < n && small; ++j) {
    Rat extent = (l_max[j] + Rat(1)) * Rat(scale[j]);
    small = extent.num() < limit;
  }
  if (small) return run_sweep<long long>(lambdas, taus, scale, n);
  return run_sweep<Int>(lambdas, taus, scale, n);
}

std::string facet_measure_key(const FacetRegion& reg, TermOrder order) {
  std::string key = order == TermOrder::kLex ? "lex" : "revlex";
  std::vector<std::string> parts;
  for (const auto& box : reg.boxes)
    if (box.positive) parts.push_back(str(box.lambda));
  std::sort(parts.begin(), parts.end());
  for (const auto& s : parts) key += "|" + s;
  key += "#";
  for (const auto& b : reg.lattice.basis())
    key += str(b) + "->" + str(reg.mu_of_lattice(b)) + ";";
  return key;
}

}  // namespace

std::optional<Rat> FacetMeasureCache::lookup(const std::string& key) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void FacetMeasureCache::store(const std::string& key, const Rat& value) {
  std::lock_guard<std::mutex> lock(mutex_);
  entries_.emplace(key, value);
}

Verdict torus_volume_exact(const LiftingRegion& region, TermOrder order,
                           FacetMeasureCache* cache) {
  if (!region.report.lattice_free)
    fail(ErrorCode::kNotLatticeFree, "torus volume requires a lattice-free body");
  Verdict verdict;
  verdict.torus_volume = Rat(0);
  for (const auto& reg : region.regions) {
    Rat contribution;
    bool has_positive = false;
    for (const auto& box : reg.boxes)
      if (box.positive) has_positive = true;
    if (!reg.degenerate() && has_positive) {
      Rat measure;
      if (cache) {
        std::string key = facet_measure_key(reg, order);
        if (auto hit = cache->lookup(key)) {
          measure = *hit;
        } else {
          measure = facet_mu_measure(reg, order);
          cache->store(key, measure);
        }
      } else {
        measure = facet_mu_measure(reg, order);
      }
      contribution = reg.absdet * measure;
    }
    verdict.per_facet.push_back(contribution);
    verdict.torus_volume += contribution;
  }
  if (verdict.torus_volume > Rat(1))
    fail(ErrorCode::kInternal,
         "torus volume " + verdict.torus_volume.str() + " exceeds 1");
  verdict.unique_lifting = verdict.torus_volume == Rat(1);
  return verdict;
}

// ---------------------------------------------------------------------
// grid oracle
// ---------------------------------------------------------------------

OracleReport torus_cover_oracle(const LiftingRegion& region, unsigned resolution) {
  if (resolution < 2)
    fail(ErrorCode::kValidationFailed, "oracle resolution must be at least 2");
  std::size_t n = region.f.size();
  Int cells = 1;
  for (std::size_t j = 0; j < n; ++j) cells *= resolution;
  if (cells > 500'000'000)
    fail(ErrorCode::kEnumerationCap, "oracle grid too large");
  std::size_t total = cells.get_ui();
  std::vector<char> covered(total, 0);
  const Int two_res = Int(2) * Int(resolution);
  const Rat half_step = Rat(Int(1), two_res);
  const Rat two_n = Rat(two_res);

  // grid index range of a rational interval [lo, hi]:
  // x = (2m+1)/(2N) in [lo, hi]  <=>  m in [ (2N lo - 1)/2, (2N hi - 1)/2 ]
  auto m_lo_of = [&](const Rat& lo) { return ((lo * two_n - Rat(1)) / Rat(2)).ceil(); };
  auto m_hi_of = [&](const Rat& hi) { return ((hi * two_n - Rat(1)) / Rat(2)).floor(); };

  // bounding box of the parallelotope f + basis * [0, lambda], in grid steps
  auto box_grid_range = [&](const FacetRegion& reg, const RegionBox& box,
                            std::vector<Int>& mlo, std::vector<Int>& mhi) {
    for (std::size_t axis = 0; axis < n; ++axis) {
      Rat lo = region.f[axis], hi = region.f[axis];
      for (std::size_t j = 0; j < n; ++j) {
        Rat edge = box.lambda[j] * reg.basis.at(axis, j);
        if (edge.sign() < 0) lo += edge;
        else hi += edge;
      }
      mlo[axis] = m_lo_of(lo);
      mhi[axis] = m_hi_of(hi);
      if (mhi[axis] < mlo[axis]) return false;
    }
    return true;
  };

  for (const auto& reg : region.regions) {
    if (!reg.degenerate()) {
      for (const auto& box : reg.boxes) {
        std::vector<Int> mlo(n), mhi(n);
        if (!box_grid_range(reg, box, mlo, mhi)) continue;
        // scaled-integer incremental rasterization: with S clearing every
        // denominator, the grid point x = (2m+1)/(2N) has
        //   mu_scaled(m) = 2N*S * mu(x) = M(2m+1) - R,
        // all integral, so membership is pure integer comparison
        const RatMat& ainv = *reg.basis_inv;
        RatVec c0 = ainv.mul(region.f);
        Int s_den = 1;
        for (std::size_t r = 0; r < n; ++r) {
          mpz_lcm(s_den.get_mpz_t(), s_den.get_mpz_t(), c0[r].den().get_mpz_t());
          for (std::size_t c = 0; c < n; ++c)
            mpz_lcm(s_den.get_mpz_t(), s_den.get_mpz_t(), ainv.at(r, c).den().get_mpz_t());
        }
        std::vector<IntVec> m_int(n, IntVec(n));
        IntVec r_off(n);
        for (std::size_t r = 0; r < n; ++r) {
          for (std::size_t c = 0; c < n; ++c) m_int[r][c] = (ainv.at(r, c) * Rat(s_den)).num();
          r_off[r] = (c0[r] * Rat(s_den)).num() * two_res;
        }
        IntVec hi(n);
        for (std::size_t j = 0; j < n; ++j)
          hi[j] = (box.lambda[j] * Rat(two_res * s_den)).floor();

        // int64 fast path when every intermediate value stays small
        Int bound = 0;
        for (std::size_t r = 0; r < n; ++r) {
          Int row = abs(r_off[r]);
          for (std::size_t c = 0; c < n; ++c) {
            Int span = 2 * abs(mhi[c]) + 2 * abs(mlo[c]) + 1;
            row += abs(m_int[r][c]) * span;
          }
          bound = std::max(bound, row);
        }
        bool small = bound < (Int(1) << 62) && resolution < (1u << 20);

        auto run = [&](auto zero, auto to_coord) {
          using C = decltype(zero);
          std::vector<C> mu(n), base(n);
          std::vector<std::vector<C>> step(n, std::vector<C>(n));
          for (std::size_t r = 0; r < n; ++r) {
            base[r] = zero;
            for (std::size_t c = 0; c < n; ++c) {
              step[c][r] = to_coord(2 * m_int[r][c]);
              base[r] += to_coord(m_int[r][c] * (2 * mlo[c] + 1));
            }
            base[r] -= to_coord(r_off[r]);
          }
          std::vector<C> hic(n);
          for (std::size_t j = 0; j < n; ++j) hic[j] = to_coord(hi[j]);
          std::vector<long> rem(n), rem_start(n);
          for (std::size_t axis = 0; axis < n; ++axis) {
            Int rm;
            mpz_fdiv_r_ui(rm.get_mpz_t(), mlo[axis].get_mpz_t(), resolution);
            rem_start[axis] = rm.get_si();
          }
          std::vector<long> count(n);
          for (std::size_t axis = 0; axis < n; ++axis)
            count[axis] = Int(mhi[axis] - mlo[axis] + 1).get_si();
          auto rec = [&](auto&& self, std::size_t axis, std::vector<C> cur) -> void {
            rem[axis] = rem_start[axis];
            for (long i = 0; i < count[axis]; ++i) {
              if (axis + 1 == n) {
                bool inside = true;
                for (std::size_t j = 0; j < n && inside; ++j)
                  inside = cur[j] >= zero && cur[j] <= hic[j];
                if (inside) {
                  std::size_t idx = 0;
                  for (std::size_t j = 0; j < n; ++j) idx = idx * resolution + rem[j];
                  covered[idx] = 1;
                }
              } else {
                self(self, axis + 1, cur);
              }
              for (std::size_t j = 0; j < n; ++j) cur[j] += step[axis][j];
              if (++rem[axis] == static_cast<long>(resolution)) rem[axis] = 0;
            }
          };
          rec(rec, 0, base);
        };
        if (small) {
          run(static_cast<long long>(0), [](const Int& v) {
            return static_cast<long long>(v.get_si());
          });
        } else {
          run(Int(0), [](const Int& v) { return v; });
        }
      }
    } else {
      // degenerate facet region, confined to the hyperplane c.x = d: grid
      // points on the plane satisfy sum_j c_j (2 m_j + 1) = 2N d, so the
      // pivot coordinate is solved from the others instead of scanned
      const IntVec& c = region.body.facets()[reg.facet].normal;
      Rat plane_scaled = region.body.facets()[reg.facet].offset * two_n;
      if (!plane_scaled.is_integer()) continue;
      Int csum = 0;
      for (std::size_t j = 0; j < n; ++j) csum += c[j];
      Int doubled = plane_scaled.num() - csum;  // = 2 sum_j c_j m_j
      if (doubled % 2 != 0) continue;           // parity: plane misses the grid
      Int rhs_total = doubled / 2;

      RowReduction solver = row_reduce(reg.basis);
      for (const auto& box : reg.boxes) {
        std::vector<Int> mlo(n), mhi(n);
        if (!box_grid_range(reg, box, mlo, mhi)) continue;
        std::size_t pivot = n;
        for (std::size_t j = 0; j < n; ++j) {
          if (c[j] == 0) continue;
          if (pivot == n || mhi[j] - mlo[j] > mhi[pivot] - mlo[pivot]) pivot = j;
        }
        if (pivot == n) continue;

        std::vector<Int> m(n);
        auto test_point = [&]() {
          RatVec x(n);
          for (std::size_t j = 0; j < n; ++j)
            x[j] = (Rat(2) * Rat(m[j]) + Rat(1)) * half_step;
          auto mu0 = solver.particular(sub(x, region.f));
          if (!mu0) return;
          bool feasible;
          if (solver.kernel.empty()) {
            feasible = true;
            for (std::size_t j = 0; j < n && feasible; ++j)
              feasible = (*mu0)[j].sign() >= 0 && (*mu0)[j] <= box.lambda[j];
          } else if (solver.kernel.size() == 1) {
            // one free parameter: intersect the interval bounds directly
            const RatVec& k = solver.kernel[0];
            bool have_lo = false, have_hi = false, ok = true;
            Rat tlo, thi;
            for (std::size_t j = 0; j < n && ok; ++j) {
              if (k[j].is_zero()) {
                ok = (*mu0)[j].sign() >= 0 && (*mu0)[j] <= box.lambda[j];
                continue;
              }
              Rat a = -(*mu0)[j] / k[j];
              Rat b = (box.lambda[j] - (*mu0)[j]) / k[j];
              if (k[j].sign() < 0) std::swap(a, b);
              if (!have_lo || a > tlo) { tlo = a; have_lo = true; }
              if (!have_hi || b < thi) { thi = b; have_hi = true; }
            }
            feasible = ok && (!have_lo || !have_hi || tlo <= thi);
          } else {
            std::vector<FmConstraint> sys;
            std::size_t nvars = solver.kernel.size();
            for (std::size_t j = 0; j < n; ++j) {
              FmConstraint lo, hi;
              lo.coeff.assign(nvars, Rat(0));
              hi.coeff.assign(nvars, Rat(0));
              for (std::size_t l = 0; l < nvars; ++l) {
                lo.coeff[l] = -solver.kernel[l][j];
                hi.coeff[l] = solver.kernel[l][j];
              }
              lo.rhs = (*mu0)[j];
              hi.rhs = box.lambda[j] - (*mu0)[j];
              sys.push_back(std::move(lo));
              sys.push_back(std::move(hi));
            }
            feasible = fm_feasible(std::move(sys), nvars);
          }
          if (!feasible) return;
          std::size_t idx = 0;
          for (std::size_t j = 0; j < n; ++j) {
            Int r;
            mpz_fdiv_r_ui(r.get_mpz_t(), m[j].get_mpz_t(), resolution);
            idx = idx * resolution + r.get_si();
          }
          covered[idx] = 1;
        };
        auto rec = [&](auto&& self, std::size_t axis, Int acc) -> void {
          if (axis == n) {
            // c_pivot * m_pivot = rhs_total - acc
            Int num = rhs_total - acc;
            if (num % c[pivot] != 0) return;
            m[pivot] = num / c[pivot];
            if (m[pivot] < mlo[pivot] || m[pivot] > mhi[pivot]) return;
            test_point();
            return;
          }
          if (axis == pivot) {
            self(self, axis + 1, acc);
            return;
          }
          for (m[axis] = mlo[axis]; m[axis] <= mhi[axis]; ++m[axis])
            self(self, axis + 1, acc + c[axis] * m[axis]);
        };
        rec(rec, 0, Int(0));
      }
    }
  }

  OracleReport report;
  std::size_t count = 0;
  for (char c : covered) count += c;
  report.covered_fraction = Rat(Int(static_cast<unsigned long>(count)), cells);
  for (std::size_t idx = 0; idx < total && report.uncovered.size() < 10; ++idx) {
    if (covered[idx]) continue;
    RatVec x(n);
    std::size_t rest = idx;
    for (std::size_t j = n; j-- > 0;) {
      x[j] = (Rat(2) * Rat(static_cast<long>(rest % resolution)) + Rat(1)) * half_step;
      rest /= resolution;
    }
    report.uncovered.push_back(std::move(x));
  }
  return report;
}

std::optional<RatVec> uncovered_witness(const LiftingRegion& region,
                                        unsigned max_resolution) {
  std::size_t n = region.f.size();
  for (unsigned res = 16; res <= max_resolution; res *= 2) {
    double cell_estimate = 1.0;
    for (std::size_t j = 0; j < n; ++j) cell_estimate *= res;
    if (cell_estimate > 6.8e7) break;
    OracleReport rep = torus_cover_oracle(region, res);
    if (!rep.uncovered.empty()) return rep.uncovered.front();
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------
// analyzer
// ---------------------------------------------------------------------

const char* body_class_name(BodyClass c) {
  return c == BodyClass::kUniqueForAllF ? "UNIQUE_FOR_ALL_F" : "MULTIPLE_FOR_ALL_F";
}

std::vector<RatVec> random_interior_points(const SimplicialPolytope& p,
                                           std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<RatVec> out;
  std::size_t n = p.dim();
  while (out.size() < count) {
    Rat total;
    RatVec acc(n);
    for (const auto& v : p.vertices()) {
      Rat w(static_cast<long>(1 + rng() % 16));
      acc = add(acc, scaled(w, v));
      total += w;
    }
    out.push_back(scaled(total.inv(), acc));
  }
  return out;
}

LiftingAnalyzer::LiftingAnalyzer(SimplicialPolytope body)
    : body_(std::move(body)), report_(maximality_report(body_)) {}

LiftingRegion LiftingAnalyzer::region_at(const RatVec& f) const {
  return build_region(body_, f, &report_);
}

Verdict LiftingAnalyzer::volume_at(const RatVec& f, TermOrder order) {
  return torus_volume_exact(region_at(f), order, &cache_);
}

BodyClass LiftingAnalyzer::classify() {
  std::lock_guard<std::mutex> lock(class_mutex_);
  if (class_) return *class_;
  if (!report_.maximal)
    fail(ErrorCode::kValidationFailed, "classification requires a maximal lattice-free body");
  // cheap vertices first: fewer positive boxes on the non-degenerate facets
  std::vector<std::pair<std::size_t, std::size_t>> order;  // (cost, vertex)
  for (std::size_t v = 0; v < body_.vertices().size(); ++v) {
    std::size_t cost = 0;
    for (std::size_t i = 0; i < body_.facets().size(); ++i) {
      const auto& inc = body_.facets()[i].incidence;
      if (std::find(inc.begin(), inc.end(), v) != inc.end()) continue;
      cost += report_.per_facet[i].relative_interior.size();
    }
    order.emplace_back(cost, v);
  }
  std::sort(order.begin(), order.end());
  BodyClass result = BodyClass::kUniqueForAllF;
  for (const auto& [cost, v] : order) {
    Verdict verdict = torus_volume_exact(region_at(body_.vertices()[v]),
                                         TermOrder::kLex, &cache_);
    if (!verdict.unique_lifting) {
      result = BodyClass::kMultipleForAllF;
      break;
    }
  }
  class_ = result;
  return result;
}

AffineVolume LiftingAnalyzer::affine_volume(std::size_t probes, std::uint64_t seed) {
  std::size_t n = body_.dim();
  // pick n+1 affinely independent vertices (all of them for a simplex)
  std::vector<std::size_t> chosen;
  for (std::size_t v = 0; v < body_.vertices().size() && chosen.size() < n + 1; ++v) {
    chosen.push_back(v);
    RatMat hom(n + 1, chosen.size());
    for (std::size_t c = 0; c < chosen.size(); ++c) {
      for (std::size_t r = 0; r < n; ++r) hom.at(r, c) = body_.vertices()[chosen[c]][r];
      hom.at(n, c) = Rat(1);
    }
    if (!solve_general(hom, RatVec(n + 1)).kernel.empty()) chosen.pop_back();
  }
  if (chosen.size() != n + 1)
    fail(ErrorCode::kInternal, "vertices do not affinely span");

  AffineVolume out;
  for (std::size_t v = 0; v < body_.vertices().size(); ++v)
    out.vertex_volumes.push_back(volume_at(body_.vertices()[v]).torus_volume);

  RatMat system(n + 1, n + 1);
  RatVec rhs(n + 1);
  for (std::size_t r = 0; r <= n; ++r) {
    const RatVec& v = body_.vertices()[chosen[r]];
    for (std::size_t c = 0; c < n; ++c) system.at(r, c) = v[c];
    system.at(r, n) = Rat(1);
    rhs[r] = out.vertex_volumes[chosen[r]];
  }
  RatVec sol = solve(system, rhs);
  out.coefficients.assign(sol.begin(), sol.begin() + n);
  out.constant = sol[n];

  // verify: remaining vertices, the centroid, and random interior probes
  std::vector<RatVec> checks;
  for (std::size_t v = 0; v < body_.vertices().size(); ++v) {
    bool used = std::find(chosen.begin(), chosen.end(), v) != chosen.end();
    if (!used) checks.push_back(body_.vertices()[v]);
  }
  {
    RatVec c(n);
    for (const auto& v : body_.vertices()) c = add(c, v);
    checks.push_back(scaled(Rat(1) / Rat(static_cast<long>(body_.vertices().size())), c));
  }
  for (auto& p : random_interior_points(body_, probes, seed)) checks.push_back(std::move(p));

  out.verified = true;
  for (const auto& f : checks) {
    Rat residual = volume_at(f).torus_volume - out.value(f);
    out.probe_residuals.push_back(residual);
    if (!residual.is_zero()) out.verified = false;
  }
  return out;
}

Rat LiftingAnalyzer::lift_value(const RatVec& f, const RatVec& r) {
  if (classify() != BodyClass::kUniqueForAllF)
    fail(ErrorCode::kMultipleLiftings, "body has multiple liftings; fill-in is not unique");
  if (!body_.strictly_contains(f))
    fail(ErrorCode::kFNotInterior, "lift_value requires interior f");
  LiftingRegion region = region_at(f);
  RatVec target = add(f, r);
  std::size_t n = body_.dim();
  IntBox wbox;
  wbox.lo.resize(n);
  wbox.hi.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rat lo = body_.vertices()[0][j], hi = lo;
    for (const auto& v : body_.vertices()) {
      lo = std::min(lo, v[j]);
      hi = std::max(hi, v[j]);
    }
    wbox.lo[j] = (lo - target[j]).ceil();
    wbox.hi[j] = (hi - target[j]).floor();
  }
  for (const auto& w : enumerate_lattice_points({}, wbox)) {
    RatVec candidate = add(target, to_rat(w));
    if (membership(region, candidate))
      return gauge_psi(body_, f, sub(candidate, f));
  }
  fail(ErrorCode::kInternal, "covering property violated: no translate lands in R(f)");
}

}  // namespace liftreg
