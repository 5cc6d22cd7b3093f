#include "liftreg/classify.hpp"

#include <algorithm>
#include <set>

namespace liftreg {

namespace {

bool is_integral(const RatVec& v) {
  for (const auto& x : v)
    if (!x.is_integer()) return false;
  return true;
}

IntVec to_int(const RatVec& v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].num();
  return out;
}

void require_one_point_per_facet(const SimplicialPolytope& p,
                                 const MaximalityReport& report) {
  if (!p.is_simplex())
    fail(ErrorCode::kHypothesisViolated, "body is not a simplex");
  if (!report.maximal)
    fail(ErrorCode::kHypothesisViolated, "body is not maximal lattice-free");
  for (const auto& fp : report.per_facet)
    if (fp.relative_interior.size() != 1)
      fail(ErrorCode::kHypothesisViolated,
           "a facet has " + std::to_string(fp.relative_interior.size()) +
               " relative-interior lattice points (need exactly 1)");
}

}  // namespace

std::optional<UnimodEquiv> equiv_standard_simplex(const SimplicialPolytope& s,
                                                  const Int& m) {
  if (!s.is_simplex())
    fail(ErrorCode::kHypothesisViolated, "equivalence test needs a simplex");
  std::size_t n = s.dim();
  for (std::size_t base = 0; base <= n; ++base) {
    const RatVec& v0 = s.vertices()[base];
    if (!is_integral(v0)) continue;
    IntMat u(n, IntVec(n));
    std::vector<std::size_t> vmap{base};
    bool ok = true;
    std::size_t col = 0;
    for (std::size_t j = 0; j <= n && ok; ++j) {
      if (j == base) continue;
      RatVec w = scaled(Rat(Int(1), m), sub(s.vertices()[j], v0));
      if (!is_integral(w)) {
        ok = false;
        break;
      }
      for (std::size_t r = 0; r < n; ++r) u[r][col] = w[r].num();
      vmap.push_back(j);
      ++col;
    }
    if (!ok) continue;
    Int d = det(u);
    if (d != 1 && d != -1) continue;
    UnimodEquiv e;
    e.u = u;
    e.b = to_int(v0);
    e.vertex_map = vmap;
    return e;
  }
  return std::nullopt;
}

bool one_point_per_facet(const SimplicialPolytope& p) {
  MaximalityReport report = maximality_report(p);
  if (!report.maximal)
    fail(ErrorCode::kHypothesisViolated, "body is not maximal lattice-free");
  for (const auto& fp : report.per_facet)
    if (fp.relative_interior.size() != 1) return false;
  return true;
}

StructuralVerdict simplex_lifting_verdict(LiftingAnalyzer& analyzer) {
  const SimplicialPolytope& body = analyzer.body();
  require_one_point_per_facet(body, analyzer.report());
  StructuralVerdict verdict;
  verdict.witness = equiv_standard_simplex(body, Int(body.dim()));
  verdict.predicted =
      verdict.witness ? BodyClass::kUniqueForAllF : BodyClass::kMultipleForAllF;
  verdict.cross_check = analyzer.classify() == verdict.predicted;
  return verdict;
}

SymmetricBodyReport symmetric_body_check(const SimplicialPolytope& s,
                                         std::size_t base_vertex) {
  MaximalityReport report = maximality_report(s);
  require_one_point_per_facet(s, report);
  std::size_t n = s.dim();
  if (base_vertex > n)
    fail(ErrorCode::kHypothesisViolated, "base vertex index out of range");

  // the facet opposite the base vertex carries the lattice point that is
  // translated to the origin
  std::size_t opposite = s.facets().size();
  for (std::size_t i = 0; i < s.facets().size(); ++i) {
    const auto& inc = s.facets()[i].incidence;
    if (std::find(inc.begin(), inc.end(), base_vertex) == inc.end()) {
      opposite = i;
      break;
    }
  }
  if (opposite == s.facets().size())
    fail(ErrorCode::kInternal, "simplex vertex lies on every facet");

  IntVec y0 = report.per_facet[opposite].relative_interior[0];
  SimplicialPolytope body = s.translated(neg(y0));
  RatVec f = body.vertices()[base_vertex];

  // S = {x : -d_i <= c_i . x <= d_i} over the facets through the base
  // vertex; after the translation each such offset d_i is positive.
  std::vector<IntVec> normals;
  RatVec offsets;
  for (std::size_t i = 0; i < body.facets().size(); ++i) {
    if (i == opposite) continue;
    if (body.facets()[i].offset.sign() <= 0)
      fail(ErrorCode::kInternal, "origin not strictly inside a side facet");
    normals.push_back(body.facets()[i].normal);
    offsets.push_back(body.facets()[i].offset);
  }
  RatMat c(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j < n; ++j) c.at(r, j) = Rat(normals[r][j]);
  Rat cdet = det(c).abs();
  if (cdet.is_zero()) fail(ErrorCode::kInternal, "facet normals degenerate");

  SymmetricBodyReport out;
  Rat prod(1);
  for (const auto& d : offsets) prod *= d;
  Rat two_pow(1);
  for (std::size_t i = 0; i < n; ++i) two_pow *= Rat(2);
  out.vol_s = two_pow * prod / cdet;

  // R_0 through the engine: at f = base vertex only the opposite facet is
  // non-degenerate and carries a single positive box
  LiftingRegion region = build_region(body, f);
  const FacetRegion& reg = region.regions[opposite];
  Rat r0(0);
  for (const auto& box : reg.boxes) {
    if (!box.positive) continue;
    Rat vol = reg.absdet;
    for (const auto& l : box.lambda) vol *= l;
    r0 += vol;
  }
  out.vol_r0 = r0;
  out.relation_holds = out.vol_s == two_pow * out.vol_r0;
  out.minkowski_bound = out.vol_s <= two_pow;

  // int(S) cap Z^n = {0} by enumeration over the bounding box of S
  RatMat cinv = inverse(c);
  IntBox box;
  box.lo.assign(n, 0);
  box.hi.assign(n, 0);
  for (std::size_t axis = 0; axis < n; ++axis) {
    Rat lo(0), hi(0);
    for (std::size_t j = 0; j < n; ++j) {
      Rat term = cinv.at(axis, j) * offsets[j];
      if (term.sign() < 0) { lo += term; hi -= term; }
      else { lo -= term; hi += term; }
    }
    box.lo[axis] = lo.ceil();
    box.hi[axis] = hi.floor();
  }
  out.lattice_free_interior = true;
  for (const auto& z : enumerate_lattice_points({}, box)) {
    if (is_zero(z)) continue;
    bool interior = true;
    for (std::size_t r = 0; r < n && interior; ++r) {
      Rat val = Rat(dot(normals[r], z)).abs();
      interior = val < offsets[r];
    }
    if (interior) {
      out.lattice_free_interior = false;
      break;
    }
  }
  return out;
}

std::optional<TwoPartition> find_2partition(const SimplicialPolytope& p) {
  MaximalityReport report = maximality_report(p);
  // candidates ordered by descending interior-point count: H1 is the
  // dominant facet; ties broken by facet index
  std::vector<std::size_t> order(p.facets().size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return report.per_facet[a].relative_interior.size() >
           report.per_facet[b].relative_interior.size();
  });
  for (std::size_t i : order) {
    // H1 must carry several lattice points and be a lattice hyperplane
    if (report.per_facet[i].relative_interior.size() < 2) continue;
    if (!p.facets()[i].offset.is_integer()) continue;
    TwoPartition part;
    part.normal = neg(p.facets()[i].normal);
    part.offset = -p.facets()[i].offset.num();
    part.facet_on_h1 = i;
    // the adjacent-level section must be a maximal lattice-free simplex
    try {
      slice_simplex(p, part);
    } catch (const Error&) {
      continue;
    }
    part.two_level = true;
    for (const auto& fp : report.per_facet) {
      for (const auto& z : fp.all) {
        Int level = dot(part.normal, z);
        if (level != part.offset && level != part.offset + 1) part.two_level = false;
      }
    }
    return part;
  }
  return std::nullopt;
}

SliceResult slice_simplex(const SimplicialPolytope& body, const TwoPartition& part) {
  std::size_t n1 = body.dim();
  if (n1 < 2) fail(ErrorCode::kSliceNotSimplex, "ambient dimension too small");
  Int h2_level = part.offset + 1;
  Rat h2 = Rat(h2_level);

  // collect the intersection of every edge with the hyperplane c.x = d+1
  std::vector<RatVec> cut;
  auto push_unique = [&](const RatVec& x) {
    for (const auto& y : cut)
      if (y == x) return;
    cut.push_back(x);
  };
  const auto& verts = body.vertices();
  for (std::size_t a = 0; a < verts.size(); ++a) {
    Rat va = Rat(dot(part.normal, verts[a])) - h2;
    if (va.is_zero()) push_unique(verts[a]);
    for (std::size_t b = a + 1; b < verts.size(); ++b) {
      Rat vb = Rat(dot(part.normal, verts[b])) - h2;
      if (va.sign() * vb.sign() < 0) {
        Rat t = -va / (vb - va);
        push_unique(add(verts[a], scaled(t, sub(verts[b], verts[a]))));
      }
    }
  }
  if (cut.size() != n1)
    fail(ErrorCode::kSliceNotSimplex,
         "hyperplane section has " + std::to_string(cut.size()) + " vertices");

  SliceResult out;
  out.map = unimodular_with_last_row(part.normal);
  out.map_offset.assign(n1, 0);
  out.map_offset[n1 - 1] = -(part.offset + 1);

  std::vector<RatVec> dropped;
  for (const auto& x : cut) {
    RatVec y = to_rat(out.map_offset);
    for (std::size_t r = 0; r < n1; ++r) y[r] += dot(out.map[r], x);
    if (!y[n1 - 1].is_zero())
      fail(ErrorCode::kInternal, "slice map does not flatten the hyperplane");
    y.pop_back();
    dropped.push_back(std::move(y));
  }
  out.slice = SimplicialPolytope::simplex(dropped);
  if (!maximality_report(out.slice).maximal)
    fail(ErrorCode::kValidationFailed, "slice is not maximal lattice-free");
  return out;
}

SlicedVerdict partition_lifting_verdict(LiftingAnalyzer& analyzer) {
  const SimplicialPolytope& body = analyzer.body();
  const MaximalityReport& report = analyzer.report();
  if (!body.is_simplex())
    fail(ErrorCode::kHypothesisViolated, "body is not a simplex");
  if (!report.maximal)
    fail(ErrorCode::kHypothesisViolated, "body is not maximal lattice-free");
  auto part = find_2partition(body);
  if (!part)
    fail(ErrorCode::kHypothesisViolated, "no partition hyperplane candidate");

  SlicedVerdict verdict;
  SliceResult sliced = slice_simplex(body, *part);
  verdict.slice = sliced.slice;
  auto witness = equiv_standard_simplex(verdict.slice, Int(verdict.slice.dim()));
  verdict.predicted = witness ? BodyClass::kUniqueForAllF : BodyClass::kMultipleForAllF;
  verdict.cross_check = analyzer.classify() == verdict.predicted;
  return verdict;
}

}  // namespace liftreg
