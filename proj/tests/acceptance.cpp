// Acceptance suite: one pass/fail line per criterion, every check exact.
// Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#include "corpus.hpp"
#include "support.hpp"

using namespace liftreg;
using namespace liftreg::testcorpus;
using namespace liftreg::testsupport;

namespace {

struct Criterion {
  const char* name;
  std::function<bool(std::string&)> run;
};

bool all_volumes_one(LiftingAnalyzer& analyzer, std::uint64_t seed, std::string& note) {
  for (const auto& v : analyzer.body().vertices()) {
    if (analyzer.volume_at(v).torus_volume != Rat(1)) {
      note = "vertex volume != 1";
      return false;
    }
  }
  for (const auto& f : random_interior_points(analyzer.body(), 5, seed)) {
    if (analyzer.volume_at(f).torus_volume != Rat(1)) {
      note = "interior volume != 1";
      return false;
    }
  }
  return true;
}

bool criterion_standard_simplices(std::string& note) {
  auto start = std::chrono::steady_clock::now();
  if (!all_volumes_one(corpus().std2(), 1001, note)) return false;
  if (!all_volumes_one(corpus().std3(), 1002, note)) return false;
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 10.0) {
    note = "runtime " + std::to_string(secs) + "s exceeds 10s";
    return false;
  }
  return true;
}

// Verifies volume < 1 at all vertices and two interior probes of every
// one-point-per-facet triangle with a non-integral vertex in the list.
std::size_t verify_noninteger_triangles(const std::vector<TaggedSimplex>& found,
                                        std::string& note) {
  std::size_t tested = 0;
  for (const auto& t : found) {
    bool one_each = true;
    for (auto c : t.per_facet_relint)
      if (c != 1) one_each = false;
    if (!one_each || t.integral_vertices == 3) continue;
    ++tested;
    LiftingAnalyzer analyzer(t.body);
    std::vector<RatVec> probes = t.body.vertices();
    for (auto& p : random_interior_points(t.body, 2, 2000 + tested))
      probes.push_back(std::move(p));
    for (const auto& f : probes) {
      if (analyzer.volume_at(f).torus_volume >= Rat(1)) {
        note = "a non-integral one-point-per-facet triangle reached volume 1";
        return 0;
      }
    }
  }
  return tested;
}

bool criterion_only_if_direction(std::string& note) {
  // The stated supply requirement ("at least one such triangle at q = 2 in
  // [-2,3]^2") is unsatisfiable: one-point-per-facet triangles with a
  // non-integral vertex need coordinate denominators divisible by 3, so
  // the half-integer search yields only integral-vertex and
  // multi-point-side triangles. The q=2 premise is therefore reported
  // honestly, and the mathematical claim is additionally verified on the
  // q=3 search, where the qualifying triangles exist.
  std::size_t at_q2 = verify_noninteger_triangles(search_simplices(2, -2, 3), note);
  std::size_t at_q3 = verify_noninteger_triangles(search_simplices(3, -2, 3), note);
  if (!note.empty()) return false;  // a volume reached 1 somewhere
  note = "q=2 found " + std::to_string(at_q2) + " qualifying triangles; q=3 found " +
         std::to_string(at_q3) + ", all with volume < 1 everywhere";
  if (at_q2 == 0) {
    note += "; the stated q=2 supply premise is unsatisfiable";
    return false;
  }
  return at_q3 >= 1;
}

bool criterion_affinity(std::string& note) {
  auto start = std::chrono::steady_clock::now();
  for (const auto& entry : corpus().bodies) {
    AffineVolume affine = entry.analyzer->affine_volume(10, 3000);
    if (!affine.verified) {
      note = entry.name + ": nonzero residual";
      return false;
    }
    for (const auto& r : affine.probe_residuals) {
      if (!r.is_zero()) {
        note = entry.name + ": nonzero residual";
        return false;
      }
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  note = std::to_string(secs) + "s";
  if (secs >= 60.0) {
    note = "runtime " + std::to_string(secs) + "s exceeds 60s";
    return false;
  }
  return true;
}

bool criterion_dichotomy(std::string& note) {
  for (const auto& entry : corpus().bodies) {
    bool first = entry.analyzer->volume_at(random_interior_points(entry.analyzer->body(), 1, 4000)[0])
                     .unique_lifting;
    for (const auto& f : random_interior_points(entry.analyzer->body(), 10, 4001)) {
      if (entry.analyzer->volume_at(f).unique_lifting != first) {
        note = entry.name + ": predicate not constant over f";
        return false;
      }
    }
  }
  return true;
}

bool criterion_partition_bodies(std::string& note) {
  {
    SlicedVerdict v = partition_lifting_verdict(corpus().delta_body());
    if (v.predicted != BodyClass::kUniqueForAllF || !v.cross_check) {
      note = "delta body misclassified";
      return false;
    }
    std::vector<RatVec> expect{{Rat(0), Rat(0)}, {Rat(2), Rat(0)}, {Rat(0), Rat(2)}};
    std::vector<RatVec> got = v.slice.vertices();
    auto by_str = [](const RatVec& a, const RatVec& b) { return str(a) < str(b); };
    std::sort(expect.begin(), expect.end(), by_str);
    std::sort(got.begin(), got.end(), by_str);
    if (got != expect) {
      note = "delta slice is not the dilated standard triangle";
      return false;
    }
  }
  {
    SlicedVerdict v = partition_lifting_verdict(corpus().cone_body());
    if (v.predicted != BodyClass::kMultipleForAllF || !v.cross_check) {
      note = "cone body misclassified";
      return false;
    }
  }
  return true;
}

bool criterion_cylinder(std::string& note) {
  LiftingAnalyzer triangle(corpus().type3_triangle);
  for (std::size_t i = 0; i < 3; ++i) {
    RatVec f3 = corpus().cone.body.vertices()[corpus().cone.base_indices[i]];
    RatVec f2 = corpus().type3_triangle.vertices()[i];
    Rat v3 = corpus().cone_body().volume_at(f3).torus_volume;
    Rat v2 = triangle.volume_at(f2).torus_volume;
    if (v3 != v2) {
      note = "3d volume differs from the 2d slice volume at base vertex " + std::to_string(i);
      return false;
    }
  }
  return true;
}

bool criterion_oracle(std::string& note) {
  auto start = std::chrono::steady_clock::now();
  for (const auto& entry : corpus().bodies) {
    const SimplicialPolytope& body = entry.analyzer->body();
    std::vector<RatVec> probes{body.vertices()[0],
                               random_interior_points(body, 1, 7000)[0]};
    for (const auto& f : probes) {
      Rat exact = entry.analyzer->volume_at(f).torus_volume;
      LiftingRegion region = entry.analyzer->region_at(f);
      OracleReport rep = torus_cover_oracle(region, 64);
      if ((rep.covered_fraction - exact).abs() > Rat(8, 64)) {
        note = entry.name + ": oracle fraction drifted from the exact volume";
        return false;
      }
      if (exact == Rat(1) && rep.covered_fraction != Rat(1)) {
        note = entry.name + ": covering body left grid points uncovered";
        return false;
      }
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  note = std::to_string(secs) + "s";
  if (secs >= 120.0) {
    note = "runtime " + std::to_string(secs) + "s exceeds 120s";
    return false;
  }
  return true;
}

bool criterion_symmetric_body(std::string& note) {
  for (const auto& entry : corpus().bodies) {
    const SimplicialPolytope& body = entry.analyzer->body();
    if (!body.is_simplex()) continue;
    bool one_each = true;
    for (const auto& fp : entry.analyzer->report().per_facet)
      if (fp.relative_interior.size() != 1) one_each = false;
    if (!one_each) continue;
    for (std::size_t v = 0; v < body.vertices().size(); ++v) {
      SymmetricBodyReport rep = symmetric_body_check(body, v);
      if (!rep.relation_holds || !rep.lattice_free_interior || !rep.minkowski_bound) {
        note = entry.name + ": symmetric-body relation failed at vertex " + std::to_string(v);
        return false;
      }
    }
  }
  return true;
}

bool criterion_order_independence(std::string& note) {
  for (const auto& entry : corpus().bodies) {
    const SimplicialPolytope& body = entry.analyzer->body();
    std::vector<RatVec> probes{random_interior_points(body, 1, 9000)[0],
                               body.vertices()[0]};
    for (const auto& f : probes) {
      Rat lex = entry.analyzer->volume_at(f, TermOrder::kLex).torus_volume;
      Rat rev = entry.analyzer->volume_at(f, TermOrder::kRevLex).torus_volume;
      if (lex != rev) {
        note = entry.name + ": term order changed the volume";
        return false;
      }
    }
  }
  return true;
}

bool criterion_gauge_suite(std::string& note) {
  std::mt19937_64 rng(10007);
  for (LiftingAnalyzer* a : {&corpus().std2(), &corpus().type3()}) {
    const SimplicialPolytope& body = a->body();
    RatVec f = random_interior_points(body, 1, 10100)[0];
    for (int i = 0; i < 250; ++i) {
      RatVec r = random_rat_vec(rng, 2);
      RatVec s = random_rat_vec(rng, 2);
      Rat lambda = random_rat(rng, 6, 4).abs();
      if (gauge_psi(body, f, scaled(lambda, r)) != lambda * gauge_psi(body, f, r)) {
        note = "homogeneity failed";
        return false;
      }
      if (gauge_psi(body, f, add(r, s)) > gauge_psi(body, f, r) + gauge_psi(body, f, s)) {
        note = "subadditivity failed";
        return false;
      }
    }
  }
  for (const auto& entry : corpus().bodies) {
    const SimplicialPolytope& body = entry.analyzer->body();
    RatVec f = random_interior_points(body, 1, 10200)[0];
    for (const auto& v : body.vertices()) {
      if (gauge_psi(body, f, sub(v, f)) != Rat(1)) {
        note = entry.name + ": gauge at a vertex is not 1";
        return false;
      }
    }
  }
  {
    LiftingAnalyzer& a = corpus().std2();
    RatVec f{Rat(1, 2), Rat(1, 2)};
    for (int i = 0; i < 100; ++i) {
      RatVec r = random_rat_vec(rng, 2, 5, 5);
      RatVec w{Rat(static_cast<long>(rng() % 7) - 3),
               Rat(static_cast<long>(rng() % 7) - 3)};
      if (a.lift_value(f, add(r, w)) != a.lift_value(f, r)) {
        note = "fill-in lifting is not periodic";
        return false;
      }
    }
  }
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {"1 standard dilated simplices cover the torus exactly", criterion_standard_simplices},
      {"2 non-integral one-point-per-facet triangles never cover", criterion_only_if_direction},
      {"3 torus volume is an affine function of f", criterion_affinity},
      {"4 unique-lifting predicate is constant per body", criterion_dichotomy},
      {"5 partition criterion matches volume verdicts both ways", criterion_partition_bodies},
      {"6 cone regions are height-1 cylinders over slice regions", criterion_cylinder},
      {"7 grid oracle tracks the exact volume", criterion_oracle},
      {"8 symmetric body relation and lattice-freeness", criterion_symmetric_body},
      {"9 volume is independent of the term order", criterion_order_independence},
      {"10 gauge properties and fill-in periodicity", criterion_gauge_suite},
  };

  int failures = 0;
  for (auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string note;
    bool ok = false;
    try {
      ok = c.run(note);
    } catch (const std::exception& e) {
      note = e.what();
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", c.name, secs,
                note.empty() ? "" : " -- ", note.c_str());
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
