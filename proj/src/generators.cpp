#include "liftreg/generators.hpp"

#include <algorithm>

#include "liftreg/classify.hpp"

namespace liftreg {

SimplicialPolytope standard_simplex(std::size_t n, const Int& m) {
  if (n < 1) fail(ErrorCode::kDimensionUnsupported, "dimension must be at least 1");
  if (m <= 0) fail(ErrorCode::kValidationFailed, "scale must be positive");
  std::vector<RatVec> pts;
  pts.push_back(RatVec(n));
  for (std::size_t i = 0; i < n; ++i) {
    RatVec v(n);
    v[i] = Rat(m);
    pts.push_back(std::move(v));
  }
  SimplicialPolytope s = SimplicialPolytope::simplex(pts);
  if (m == Int(n)) {
    MaximalityReport rep = maximality_report(s);
    if (!rep.maximal)
      fail(ErrorCode::kInternal, "dilated standard simplex failed maximality");
    for (const auto& fp : rep.per_facet)
      if (fp.relative_interior.size() != 1)
        fail(ErrorCode::kInternal, "dilated standard simplex facet point count off");
  }
  return s;
}

SimplicialPolytope delta_family(std::size_t n, const RatVec& delta) {
  if (delta.size() != n + 1)
    fail(ErrorCode::kInvalidDelta, "need n+1 delta parameters");
  Rat d(0);
  for (const auto& x : delta) {
    if (x.sign() < 0) fail(ErrorCode::kInvalidDelta, "delta components must be nonnegative");
    d += x;
  }
  if (d.sign() <= 0)
    fail(ErrorCode::kInvalidDelta, "delta sums to zero: the system is a cylinder");

  std::size_t dim = n + 1;
  // rows of the inequality system c.x <= rhs
  std::vector<RatVec> rows;
  RatVec rhs;
  for (std::size_t i = 0; i < n; ++i) {
    RatVec r(dim);
    r[i] = Rat(-1);
    r[n] = delta[i];
    rows.push_back(std::move(r));
    rhs.push_back(Rat(0));
  }
  {
    RatVec top(dim, Rat(1));
    top[n] = delta[n];
    rows.push_back(std::move(top));
    rhs.push_back(Rat(static_cast<long>(n)));
    RatVec bottom(dim);
    bottom[n] = Rat(-1);
    rows.push_back(std::move(bottom));
    rhs.push_back(Rat(1));
  }

  std::vector<RatVec> vertices;
  for (std::size_t omit = 0; omit < rows.size(); ++omit) {
    RatMat a(dim, dim);
    RatVec b(dim);
    std::size_t r = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == omit) continue;
      for (std::size_t c = 0; c < dim; ++c) a.at(r, c) = rows[i][c];
      b[r] = rhs[i];
      ++r;
    }
    RatVec x;
    try {
      x = solve(a, b);
    } catch (const Error&) {
      fail(ErrorCode::kInvalidDelta, "facet system is degenerate");
    }
    if (dot(rows[omit], x) > rhs[omit])
      fail(ErrorCode::kInvalidDelta, "facet system is infeasible or unbounded");
    vertices.push_back(std::move(x));
  }

  SimplicialPolytope body = SimplicialPolytope::simplex(vertices);
  MaximalityReport rep = maximality_report(body);
  if (!rep.lattice_free)
    fail(ErrorCode::kInvalidDelta, "body is not lattice-free");
  if (!rep.maximal)
    fail(ErrorCode::kInvalidDelta, "body is not maximal");
  if (!find_2partition(body))
    fail(ErrorCode::kInvalidDelta, "no partition hyperplane candidate");
  return body;
}

Type3Cone type3_cylinder_cone(const SimplicialPolytope& triangle, const Rat& blowup) {
  if (triangle.dim() != 2 || !triangle.is_simplex())
    fail(ErrorCode::kNotType3, "need a triangle in the plane");
  MaximalityReport trep = maximality_report(triangle);
  if (!trep.maximal)
    fail(ErrorCode::kNotType3, "triangle is not maximal lattice-free");
  for (const auto& fp : trep.per_facet)
    if (fp.relative_interior.size() != 1)
      fail(ErrorCode::kNotType3, "triangle needs exactly one lattice point per side");
  for (const auto& v : triangle.vertices()) {
    bool integral = true;
    for (const auto& c : v)
      if (!c.is_integer()) integral = false;
    if (integral) fail(ErrorCode::kNotType3, "triangle has an integral vertex");
  }
  if (blowup <= Rat(1))
    fail(ErrorCode::kValidationFailed, "blow-up factor must exceed 1");

  RatVec center(2);
  for (const auto& v : triangle.vertices()) center = add(center, v);
  center = scaled(Rat(1, 3), center);

  Rat apex_height = Rat(1) + (blowup - Rat(1)).inv();
  std::vector<RatVec> pts;
  {
    RatVec apex{apex_height, center[0], center[1]};
    pts.push_back(std::move(apex));
  }
  for (const auto& v : triangle.vertices()) {
    RatVec base(3);
    base[0] = Rat(0);
    base[1] = center[0] + blowup * (v[0] - center[0]);
    base[2] = center[1] + blowup * (v[1] - center[1]);
    pts.push_back(std::move(base));
  }

  Type3Cone cone;
  cone.body = SimplicialPolytope::simplex(pts);
  cone.apex_index = 0;
  cone.base_indices = {1, 2, 3};

  MaximalityReport rep = maximality_report(cone.body);
  if (!rep.maximal)
    fail(ErrorCode::kValidationFailed, "cone body is not maximal lattice-free");
  std::size_t base_facet = cone.body.facets().size();
  for (std::size_t i = 0; i < cone.body.facets().size(); ++i)
    if (cone.body.facets()[i].incidence == std::vector<std::size_t>{1, 2, 3})
      base_facet = i;
  if (base_facet == cone.body.facets().size())
    fail(ErrorCode::kInternal, "base facet not found");
  cone.base_facet = base_facet;
  for (std::size_t i = 0; i < rep.per_facet.size(); ++i) {
    std::size_t count = rep.per_facet[i].relative_interior.size();
    if (i == base_facet && count < 2)
      fail(ErrorCode::kValidationFailed,
           "base facet has fewer than two interior lattice points");
    if (i != base_facet && count != 1)
      fail(ErrorCode::kValidationFailed,
           "a side facet does not have exactly one interior lattice point");
  }
  return cone;
}

const char* triangle_type_name(TriangleType t) {
  switch (t) {
    case TriangleType::kType1: return "type1";
    case TriangleType::kType2: return "type2";
    case TriangleType::kType3: return "type3";
    case TriangleType::kOther: return "other";
  }
  return "other";
}

namespace {

long icross(long ax, long ay, long bx, long by) {
  // magnitudes stay far below overflow at desk scale
  return ax * by - ay * bx;
}

int sign_of(long v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }

}  // namespace

std::vector<TaggedSimplex> search_simplices(long q, long box_lo, long box_hi) {
  if (q < 1 || q > 4)
    fail(ErrorCode::kCapExceeded, "denominator bound must be between 1 and 4");
  if (box_hi <= box_lo || box_hi - box_lo > 6)
    fail(ErrorCode::kCapExceeded, "box side must be positive and at most 6");

  // scaled coordinates: every candidate vertex is an integer pair in
  // [q*lo, q*hi]; lattice points are the multiples of q
  long slo = q * box_lo, shi = q * box_hi;
  std::vector<std::pair<long, long>> grid;
  for (long x = slo; x <= shi; ++x)
    for (long y = slo; y <= shi; ++y) grid.emplace_back(x, y);

  std::vector<TaggedSimplex> out;
  std::size_t g = grid.size();
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = i + 1; j < g; ++j) {
      for (std::size_t k = j + 1; k < g; ++k) {
        auto [ax, ay] = grid[i];
        auto [bx, by] = grid[j];
        auto [cx, cy] = grid[k];
        int orient = sign_of(icross(bx - ax, by - ay, cx - ax, cy - ay));
        if (orient == 0) continue;

        // scan lattice points of the triangle's bounding box
        long xmin = std::min({ax, bx, cx}), xmax = std::max({ax, bx, cx});
        long ymin = std::min({ay, by, cy}), ymax = std::max({ay, by, cy});
        auto ceil_div = [](long a, long b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); };
        auto floor_div = [](long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); };
        bool lattice_free = true;
        long edge_count[3] = {0, 0, 0};
        for (long zx = ceil_div(xmin, q); zx <= floor_div(xmax, q) && lattice_free; ++zx) {
          for (long zy = ceil_div(ymin, q); zy <= floor_div(ymax, q); ++zy) {
            long px = q * zx, py = q * zy;
            int s0 = sign_of(icross(bx - ax, by - ay, px - ax, py - ay));  // edge AB
            int s1 = sign_of(icross(cx - bx, cy - by, px - bx, py - by));  // edge BC
            int s2 = sign_of(icross(ax - cx, ay - cy, px - cx, py - cy));  // edge CA
            if (s0 == orient && s1 == orient && s2 == orient) {
              lattice_free = false;
              break;
            }
            // relative interior of one edge: on its line, strictly inside
            // the other two
            if (s0 == 0 && s1 == orient && s2 == orient) edge_count[0]++;
            if (s1 == 0 && s2 == orient && s0 == orient) edge_count[1]++;
            if (s2 == 0 && s0 == orient && s1 == orient) edge_count[2]++;
          }
        }
        if (!lattice_free) continue;
        if (edge_count[0] < 1 || edge_count[1] < 1 || edge_count[2] < 1) continue;

        TaggedSimplex tagged;
        std::vector<RatVec> pts{
            {Rat(ax, q), Rat(ay, q)}, {Rat(bx, q), Rat(by, q)}, {Rat(cx, q), Rat(cy, q)}};
        tagged.body = SimplicialPolytope::simplex(pts);
        MaximalityReport rep = maximality_report(tagged.body);
        if (!rep.maximal)
          fail(ErrorCode::kInternal, "integer prefilter and exact validation disagree");
        for (const auto& fp : rep.per_facet)
          tagged.per_facet_relint.push_back(fp.relative_interior.size());
        tagged.integral_vertices = (ax % q == 0 && ay % q == 0) +
                                   (bx % q == 0 && by % q == 0) +
                                   (cx % q == 0 && cy % q == 0);
        bool one_each = true;
        bool multi = false;
        for (auto c : tagged.per_facet_relint) {
          if (c != 1) one_each = false;
          if (c > 1) multi = true;
        }
        if (multi) tagged.type = TriangleType::kType2;
        else if (one_each && tagged.integral_vertices == 3) tagged.type = TriangleType::kType1;
        else if (one_each && tagged.integral_vertices == 0) tagged.type = TriangleType::kType3;
        else tagged.type = TriangleType::kOther;
        out.push_back(std::move(tagged));
      }
    }
  }
  return out;
}

}  // namespace liftreg
