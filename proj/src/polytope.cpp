#include "liftreg/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace liftreg {

namespace {

// Primitive outer normal and offset of the hyperplane through `points`
// (n affinely independent points in R^n), oriented so that `inside`
// satisfies c.x < d.
std::pair<IntVec, Rat> supporting_hyperplane(const std::vector<RatVec>& points,
                                             const RatVec& inside,
                                             ErrorCode on_degenerate) {
  std::size_t n = points[0].size();
  if (points.size() != n)
    fail(ErrorCode::kInternal, "hyperplane needs exactly n points");
  RatMat diffs(n - 1 == 0 ? 0 : n - 1, n);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      diffs.at(i - 1, j) = points[i][j] - points[0][j];
  std::vector<RatVec> ker = n == 1 ? std::vector<RatVec>{{Rat(1)}} : kernel_basis(diffs);
  if (ker.size() != 1)
    fail(on_degenerate, "facet points are affinely dependent");
  IntVec c = primitive_vector(ker[0]);
  Rat d = dot(c, points[0]);
  Rat side = dot(c, inside);
  if (side == d) fail(on_degenerate, "interior reference point lies on the facet plane");
  if (side > d) {
    c = neg(c);
    d = -d;
  }
  return {c, d};
}

RatVec centroid(const std::vector<RatVec>& pts) {
  std::size_t n = pts[0].size();
  RatVec c(n);
  for (const auto& p : pts) c = add(c, p);
  Rat inv = Rat(1) / Rat(static_cast<long>(pts.size()));
  return scaled(inv, c);
}

}  // namespace

Rat SimplicialPolytope::slack(std::size_t i, const RatVec& x) const {
  return facets_[i].offset - dot(facets_[i].normal, x);
}

bool SimplicialPolytope::contains(const RatVec& x) const {
  for (std::size_t i = 0; i < facets_.size(); ++i)
    if (slack(i, x).sign() < 0) return false;
  return true;
}

bool SimplicialPolytope::strictly_contains(const RatVec& x) const {
  for (std::size_t i = 0; i < facets_.size(); ++i)
    if (slack(i, x).sign() <= 0) return false;
  return true;
}

IntBox SimplicialPolytope::bounding_box() const {
  IntBox box;
  box.lo.assign(n_, 0);
  box.hi.assign(n_, 0);
  for (std::size_t j = 0; j < n_; ++j) {
    Rat lo = vertices_[0][j], hi = vertices_[0][j];
    for (const auto& v : vertices_) {
      if (v[j] < lo) lo = v[j];
      if (v[j] > hi) hi = v[j];
    }
    box.lo[j] = lo.ceil();
    box.hi[j] = hi.floor();
  }
  return box;
}

SimplicialPolytope SimplicialPolytope::simplex(const std::vector<RatVec>& points) {
  if (points.empty()) fail(ErrorCode::kDegenerate, "no vertices");
  std::size_t n = points[0].size();
  if (points.size() != n + 1)
    fail(ErrorCode::kDegenerate, "simplex in dimension " + std::to_string(n) +
                                     " needs " + std::to_string(n + 1) + " vertices");
  for (const auto& p : points)
    if (p.size() != n) fail(ErrorCode::kDegenerate, "ragged vertex list");

  // affine independence: homogeneous determinant must be nonzero
  RatMat hom(n + 1, n + 1);
  for (std::size_t c = 0; c <= n; ++c) {
    for (std::size_t r = 0; r < n; ++r) hom.at(r, c) = points[c][r];
    hom.at(n, c) = Rat(1);
  }
  if (det(hom).is_zero())
    fail(ErrorCode::kDegenerate, "vertices are affinely dependent");
  SimplicialPolytope p;
  p.n_ = n;
  p.vertices_ = points;
  for (std::size_t omit = 0; omit <= n; ++omit) {
    std::vector<RatVec> face;
    std::vector<std::size_t> inc;
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == omit) continue;
      face.push_back(points[j]);
      inc.push_back(j);
    }
    auto [c, d] = supporting_hyperplane(face, points[omit], ErrorCode::kDegenerate);
    p.facets_.push_back(Facet{inc, std::move(c), std::move(d)});
  }
  return p;
}

SimplicialPolytope SimplicialPolytope::from_data(
    const std::vector<RatVec>& vertices,
    const std::vector<std::vector<std::size_t>>& incidences) {
  if (vertices.empty()) fail(ErrorCode::kDegenerate, "no vertices");
  std::size_t n = vertices[0].size();
  for (const auto& v : vertices)
    if (v.size() != n) fail(ErrorCode::kDegenerate, "ragged vertex list");
  if (incidences.empty()) fail(ErrorCode::kUnbounded, "no facets given");

  SimplicialPolytope p;
  p.n_ = n;
  p.vertices_ = vertices;
  RatVec inside = centroid(vertices);

  for (const auto& inc_in : incidences) {
    std::vector<std::size_t> inc = inc_in;
    std::sort(inc.begin(), inc.end());
    if (inc.size() != n || std::adjacent_find(inc.begin(), inc.end()) != inc.end())
      fail(ErrorCode::kNotSimplicial,
           "facet must list exactly " + std::to_string(n) + " distinct vertices");
    for (auto i : inc)
      if (i >= vertices.size()) fail(ErrorCode::kNotSimplicial, "vertex index out of range");
    std::vector<RatVec> face;
    for (auto i : inc) face.push_back(vertices[i]);
    auto [c, d] = supporting_hyperplane(face, inside, ErrorCode::kNotSupporting);
    p.facets_.push_back(Facet{inc, std::move(c), std::move(d)});
  }

  // every non-incident vertex strictly inside each facet hyperplane
  for (std::size_t i = 0; i < p.facets_.size(); ++i) {
    const Facet& f = p.facets_[i];
    for (std::size_t v = 0; v < vertices.size(); ++v) {
      Rat s = p.slack(i, vertices[v]);
      bool incident = std::binary_search(f.incidence.begin(), f.incidence.end(), v);
      if (incident && !s.is_zero())
        fail(ErrorCode::kNotSupporting, "incident vertex off the facet plane");
      if (!incident && s.sign() <= 0)
        fail(ErrorCode::kNotSupporting,
             "vertex " + std::to_string(v) + " not strictly inside facet " + std::to_string(i));
    }
  }

  // closed boundary: each ridge (n-1 subset of a facet) shared by exactly
  // two facets; otherwise the inequality description is unbounded
  std::map<std::vector<std::size_t>, int> ridge_count;
  for (const auto& f : p.facets_) {
    for (std::size_t skip = 0; skip < f.incidence.size(); ++skip) {
      std::vector<std::size_t> ridge;
      for (std::size_t j = 0; j < f.incidence.size(); ++j)
        if (j != skip) ridge.push_back(f.incidence[j]);
      ridge_count[ridge]++;
    }
  }
  for (const auto& [ridge, cnt] : ridge_count)
    if (cnt != 2)
      fail(ErrorCode::kUnbounded, "boundary is not closed (a ridge lies on " +
                                      std::to_string(cnt) + " facets)");
  return p;
}

SimplicialPolytope SimplicialPolytope::translated(const IntVec& t) const {
  SimplicialPolytope p = *this;
  for (auto& v : p.vertices_) v = add(v, to_rat(t));
  for (auto& f : p.facets_) f.offset = f.offset + Rat(dot(f.normal, t));
  return p;
}

MaximalityReport maximality_report(const SimplicialPolytope& p) {
  MaximalityReport rep;
  rep.per_facet.resize(p.facets().size());
  rep.lattice_free = true;
  std::vector<IntVec> pts = enumerate_lattice_points({}, p.bounding_box());
  for (const auto& z : pts) {
    RatVec x = to_rat(z);
    std::vector<int> signs(p.facets().size());
    bool outside = false;
    for (std::size_t i = 0; i < p.facets().size() && !outside; ++i) {
      signs[i] = p.slack(i, x).sign();
      if (signs[i] < 0) outside = true;
    }
    if (outside) continue;
    bool interior = true;
    for (int s : signs)
      if (s == 0) interior = false;
    if (interior) {
      if (rep.lattice_free) {
        rep.lattice_free = false;
        rep.interior_witness = z;
      }
      continue;
    }
    for (std::size_t i = 0; i < p.facets().size(); ++i) {
      if (signs[i] != 0) continue;
      rep.per_facet[i].all.push_back(z);
      bool relint = true;
      for (std::size_t j = 0; j < p.facets().size(); ++j)
        if (j != i && signs[j] == 0) relint = false;
      if (relint) rep.per_facet[i].relative_interior.push_back(z);
    }
  }
  rep.maximal = rep.lattice_free;
  for (const auto& fp : rep.per_facet)
    if (fp.relative_interior.empty()) rep.maximal = false;
  return rep;
}

std::vector<RatVec> normalized_normals(const SimplicialPolytope& p, const RatVec& f) {
  std::vector<RatVec> out;
  for (std::size_t i = 0; i < p.facets().size(); ++i) {
    Rat s = p.slack(i, f);
    if (s.sign() <= 0)
      fail(ErrorCode::kFNotInterior, "f is not strictly interior (facet " + std::to_string(i) + ")");
    out.push_back(scaled(s.inv(), to_rat(p.facets()[i].normal)));
  }
  return out;
}

Rat gauge_psi(const SimplicialPolytope& p, const RatVec& f, const RatVec& r) {
  std::vector<RatVec> normals = normalized_normals(p, f);
  Rat best = dot(normals[0], r);
  for (std::size_t i = 1; i < normals.size(); ++i) {
    Rat v = dot(normals[i], r);
    if (v > best) best = v;
  }
  return best;
}

}  // namespace liftreg
