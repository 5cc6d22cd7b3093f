#include "liftreg/render.hpp"

#include <sstream>

namespace liftreg {

namespace {

constexpr long kScale = 96;  // pixels per lattice unit

long px_round(const Rat& v) {
  return (v + Rat(1, 2)).floor().get_si();
}

struct Frame {
  Rat xmin, ymax;
  long x(const Rat& v) const { return px_round((v - xmin) * Rat(kScale)); }
  long y(const Rat& v) const { return px_round((ymax - v) * Rat(kScale)); }
};

}  // namespace

std::string render_svg(const LiftingRegion& region) {
  const SimplicialPolytope& body = region.body;
  if (body.dim() != 2)
    fail(ErrorCode::kDimensionUnsupported, "rendering supports only planar bodies");

  Rat margin(3, 2);
  Rat xmin = body.vertices()[0][0], xmax = xmin;
  Rat ymin = body.vertices()[0][1], ymax = ymin;
  for (const auto& v : body.vertices()) {
    xmin = std::min(xmin, v[0]);
    xmax = std::max(xmax, v[0]);
    ymin = std::min(ymin, v[1]);
    ymax = std::max(ymax, v[1]);
  }
  xmin -= margin; xmax += margin;
  ymin -= margin; ymax += margin;
  Frame fr{xmin, ymax};
  long width = px_round((xmax - xmin) * Rat(kScale));
  long height = px_round((ymax - ymin) * Rat(kScale));

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
      << height << "\">\n";
  svg << "<rect width=\"" << width << "\" height=\"" << height
      << "\" fill=\"#ffffff\"/>\n";

  // region parallelograms (dark gray), degenerate ones as segments
  for (const auto& reg : region.regions) {
    for (const auto& box : reg.boxes) {
      RatVec g1 = scaled(box.lambda[0], reg.basis.col(0));
      RatVec g2 = scaled(box.lambda[1], reg.basis.col(1));
      RatVec p0 = region.f;
      RatVec p1 = add(p0, g1);
      RatVec p2 = add(p1, g2);  // equals the lattice point y
      RatVec p3 = add(p0, g2);
      bool flat = reg.degenerate() || !box.positive;
      if (flat) {
        if (p0 == p2) continue;
        svg << "<line x1=\"" << fr.x(p0[0]) << "\" y1=\"" << fr.y(p0[1])
            << "\" x2=\"" << fr.x(p2[0]) << "\" y2=\"" << fr.y(p2[1])
            << "\" stroke=\"#6b6b6b\" stroke-width=\"5\"/>\n";
      } else {
        svg << "<polygon points=\"" << fr.x(p0[0]) << "," << fr.y(p0[1]) << " "
            << fr.x(p1[0]) << "," << fr.y(p1[1]) << " " << fr.x(p2[0]) << ","
            << fr.y(p2[1]) << " " << fr.x(p3[0]) << "," << fr.y(p3[1])
            << "\" fill=\"#8f8f8f\" fill-opacity=\"0.85\" stroke=\"#5a5a5a\" "
               "stroke-width=\"1\"/>\n";
      }
    }
  }

  // body boundary: walk the facet-edge cycle
  {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& f : body.facets()) edges.emplace_back(f.incidence[0], f.incidence[1]);
    std::vector<std::size_t> cycle{edges[0].first, edges[0].second};
    std::vector<bool> used(edges.size(), false);
    used[0] = true;
    while (cycle.size() < body.vertices().size()) {
      std::size_t cur = cycle.back();
      bool advanced = false;
      for (std::size_t e = 0; e < edges.size() && !advanced; ++e) {
        if (used[e]) continue;
        if (edges[e].first == cur) {
          cycle.push_back(edges[e].second);
          used[e] = advanced = true;
        } else if (edges[e].second == cur) {
          cycle.push_back(edges[e].first);
          used[e] = advanced = true;
        }
      }
      if (!advanced) fail(ErrorCode::kInternal, "boundary cycle is broken");
    }
    svg << "<polygon points=\"";
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const RatVec& v = body.vertices()[cycle[i]];
      if (i) svg << " ";
      svg << fr.x(v[0]) << "," << fr.y(v[1]);
    }
    svg << "\" fill=\"none\" stroke=\"#1a1a1a\" stroke-width=\"4\"/>\n";
  }

  // lattice points in view
  for (Int zx = xmin.ceil(); zx <= xmax.floor(); ++zx)
    for (Int zy = ymin.ceil(); zy <= ymax.floor(); ++zy)
      svg << "<circle cx=\"" << fr.x(Rat(zx)) << "\" cy=\"" << fr.y(Rat(zy))
          << "\" r=\"4\" fill=\"#000000\"/>\n";

  // f
  svg << "<circle cx=\"" << fr.x(region.f[0]) << "\" cy=\"" << fr.y(region.f[1])
      << "\" r=\"6\" fill=\"#c62828\"/>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace liftreg
