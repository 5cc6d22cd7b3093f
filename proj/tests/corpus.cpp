#include "corpus.hpp"

namespace liftreg::testcorpus {

const Corpus& corpus() {
  static const Corpus instance = [] {
    Corpus c;
    auto add = [&](const std::string& name, SimplicialPolytope body) {
      c.bodies.push_back({name, std::make_shared<LiftingAnalyzer>(std::move(body))});
    };
    add("standard-2", standard_simplex(2, 2));
    add("standard-3", standard_simplex(3, 3));

    // type-3 triangles need denominator 3: none exist at q = 2 (that
    // search yields only integral-vertex and multi-point-side triangles)
    const TaggedSimplex* type3 = nullptr;
    auto thirds = search_simplices(3, -2, 3);
    for (const auto& t : thirds) {
      if (t.type == TriangleType::kType3) {
        type3 = &t;
        break;
      }
    }
    const TaggedSimplex* multi = nullptr;
    auto halves = search_simplices(2, -2, 3);
    for (const auto& t : halves) {
      if (t.type == TriangleType::kType2) {
        multi = &t;
        break;
      }
    }
    if (!type3 || !multi)
      fail(ErrorCode::kInternal, "search corpus is missing a triangle class");
    c.type3_triangle = type3->body;
    add("type3-triangle", type3->body);
    add("multi-side-triangle", multi->body);

    add("delta-family", delta_family(2, {Rat(1, 2), Rat(1, 2), Rat(0)}));

    c.cone = type3_cylinder_cone(c.type3_triangle, Rat(4));
    add("type3-cone", c.cone.body);

    // a delta parameterization whose boundary lattice points really do sit
    // on just two adjacent lattice hyperplanes
    add("delta-two-level", delta_family(2, {Rat(1, 2), Rat(1, 2), Rat(1, 2)}));
    return c;
  }();
  return instance;
}

}  // namespace liftreg::testcorpus
