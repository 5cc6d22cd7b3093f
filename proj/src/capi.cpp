#include "liftreg.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "liftreg/json_io.hpp"
#include "liftreg/render.hpp"

using namespace liftreg;

struct lr_body {
  LiftingAnalyzer analyzer;
  explicit lr_body(SimplicialPolytope p) : analyzer(std::move(p)) {}
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_err(char** err, const std::string& s) {
  if (err) *err = dup_string(s);
}

lr_status status_of(const Error& e) {
  if (e.code() == ErrorCode::kInternal) return LR_E_INTERNAL;
  return e.is_cap_error() ? LR_E_CAP : LR_E_VALIDATION;
}

template <typename Fn>
lr_status guarded(char** err, Fn&& fn) {
  if (err) *err = nullptr;
  try {
    fn();
    return LR_OK;
  } catch (const Error& e) {
    set_err(err, error_json(e).dump(2));
    return status_of(e);
  } catch (const std::exception& e) {
    Error internal(ErrorCode::kInternal, e.what());
    set_err(err, error_json(internal).dump(2));
    return LR_E_INTERNAL;
  }
}

RatVec parse_f(const lr_body* body, const char* f) {
  if (!f) fail(ErrorCode::kParse, "missing point f");
  RatVec v = parse_rat_vec(f);
  if (v.size() != body->analyzer.body().dim())
    fail(ErrorCode::kParse, "f has the wrong dimension");
  return v;
}

Json classify_json(LiftingAnalyzer& analyzer);
Json analyze_json(LiftingAnalyzer& analyzer, const RatVec& f);
Json sweep_json(LiftingAnalyzer& analyzer, std::size_t probes);
Json generate_json(const std::string& family, const std::string& params);

Json analyze_json(LiftingAnalyzer& analyzer, const RatVec& f) {
  LiftingRegion region = analyzer.region_at(f);
  Verdict verdict = analyzer.volume_at(f);
  Json doc;
  doc["n"] = analyzer.body().dim();
  doc["f"] = to_json(f);
  doc["boundary_f"] = region.boundary_f;
  doc["maximality"] = to_json(analyzer.report());
  if (!verdict.unique_lifting) verdict.witness = uncovered_witness(region);
  doc["verdict"] = to_json(verdict);
  return doc;
}

Json sweep_json(LiftingAnalyzer& analyzer, std::size_t probes) {
  AffineVolume affine = analyzer.affine_volume(probes);
  Json doc;
  doc["affine"] = to_json(affine);
  doc["dichotomy"] = body_class_name(analyzer.classify());
  return doc;
}

Json classify_json(LiftingAnalyzer& analyzer) {
  Json doc;
  doc["body_class"] = body_class_name(analyzer.classify());
  bool one_point = true;
  for (const auto& fp : analyzer.report().per_facet)
    if (fp.relative_interior.size() != 1) one_point = false;
  if (analyzer.body().is_simplex() && analyzer.report().maximal && one_point) {
    StructuralVerdict v = simplex_lifting_verdict(analyzer);
    Json j;
    j["predicted"] = body_class_name(v.predicted);
    j["cross_check"] = v.cross_check;
    if (v.witness) j["witness"] = to_json(*v.witness);
    doc["one_point_criterion"] = std::move(j);
  } else {
    doc["one_point_criterion"] = nullptr;
  }
  if (analyzer.body().is_simplex() && analyzer.report().maximal) {
    try {
      SlicedVerdict v = partition_lifting_verdict(analyzer);
      Json j;
      j["predicted"] = body_class_name(v.predicted);
      j["cross_check"] = v.cross_check;
      j["slice"] = body_to_json(v.slice);
      doc["two_partition_criterion"] = std::move(j);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kHypothesisViolated) throw;
      doc["two_partition_criterion"] = nullptr;
    }
  } else {
    doc["two_partition_criterion"] = nullptr;
  }
  return doc;
}

Json generate_json(const std::string& family, const std::string& params_text) {
  Json params = Json::object();
  if (!params_text.empty()) {
    try {
      params = Json::parse(params_text);
    } catch (const std::exception& e) {
      fail(ErrorCode::kParse, std::string("invalid params JSON: ") + e.what());
    }
  }
  if (family == "standard") {
    if (!params.contains("n")) fail(ErrorCode::kParse, "standard family needs \"n\"");
    std::size_t n = params["n"].get<std::size_t>();
    Int scale = params.contains("scale") ? Int(params["scale"].get<long>())
                                         : Int(static_cast<unsigned long>(n));
    return body_to_json(standard_simplex(n, scale));
  }
  if (family == "delta") {
    if (!params.contains("n") || !params.contains("delta"))
      fail(ErrorCode::kParse, "delta family needs \"n\" and \"delta\"");
    std::size_t n = params["n"].get<std::size_t>();
    RatVec delta;
    for (const auto& item : params["delta"]) delta.push_back(Rat::parse(item.get<std::string>()));
    return body_to_json(delta_family(n, delta));
  }
  if (family == "type3cone") {
    Rat blowup = params.contains("blowup") ? Rat::parse(params["blowup"].get<std::string>())
                                           : Rat(4);
    SimplicialPolytope triangle = [&]() {
      if (params.contains("triangle"))
        return body_from_json(params["triangle"].dump());
      // first type-3 triangle of the small search (they need thirds)
      for (const auto& t : search_simplices(3, -2, 3))
        if (t.type == TriangleType::kType3) return t.body;
      fail(ErrorCode::kNotFound, "no type-3 triangle found by the default search");
    }();
    Type3Cone cone = type3_cylinder_cone(triangle, blowup);
    Json doc = body_to_json(cone.body);
    doc["apex_index"] = cone.apex_index;
    doc["base_indices"] = cone.base_indices;
    return doc;
  }
  if (family == "search") {
    long q = params.contains("q") ? params["q"].get<long>() : 2;
    long lo = params.contains("box_lo") ? params["box_lo"].get<long>() : -2;
    long hi = params.contains("box_hi") ? params["box_hi"].get<long>() : 3;
    auto found = search_simplices(q, lo, hi);
    std::string want_type = params.contains("type") ? params["type"].get<std::string>() : "";
    std::vector<const TaggedSimplex*> filtered;
    for (const auto& t : found)
      if (want_type.empty() || want_type == triangle_type_name(t.type))
        filtered.push_back(&t);
    if (filtered.empty()) fail(ErrorCode::kNotFound, "search found no matching triangle");
    std::size_t index = params.contains("index") ? params["index"].get<std::size_t>() : 0;
    if (index >= filtered.size())
      fail(ErrorCode::kNotFound, "search index out of range (found " +
                                     std::to_string(filtered.size()) + ")");
    const TaggedSimplex& t = *filtered[index];
    Json doc = body_to_json(t.body);
    doc["type"] = triangle_type_name(t.type);
    doc["per_facet_relint"] = t.per_facet_relint;
    doc["integral_vertices"] = t.integral_vertices;
    doc["match_count"] = filtered.size();
    return doc;
  }
  fail(ErrorCode::kParse, "unknown family '" + family + "'");
}

}  // namespace

extern "C" {

const char* lr_version(void) { return "liftreg 1.0.0"; }

void lr_set_enum_cap(uint64_t cap) { set_enum_cap(cap); }

void lr_string_free(char* s) { std::free(s); }

lr_status lr_body_parse(const char* json, lr_body** out, char** err) {
  if (!out) return LR_E_VALIDATION;
  *out = nullptr;
  return guarded(err, [&] {
    if (!json) fail(ErrorCode::kParse, "missing body JSON");
    *out = new lr_body(body_from_json(json));
  });
}

void lr_body_free(lr_body* body) { delete body; }

lr_status lr_body_to_json(const lr_body* body, char** out) {
  if (!body || !out) return LR_E_VALIDATION;
  return guarded(nullptr, [&] { *out = dup_string(body_to_json(body->analyzer.body()).dump(2)); });
}

lr_status lr_analyze(const lr_body* body, const char* f, char** report, char** err) {
  if (!body || !report) return LR_E_VALIDATION;
  return guarded(err, [&] {
    auto& analyzer = const_cast<lr_body*>(body)->analyzer;
    *report = dup_string(analyze_json(analyzer, parse_f(body, f)).dump(2));
  });
}

lr_status lr_sweep(const lr_body* body, int32_t probes, char** report, char** err) {
  if (!body || !report) return LR_E_VALIDATION;
  if (probes < 0) probes = 0;
  return guarded(err, [&] {
    auto& analyzer = const_cast<lr_body*>(body)->analyzer;
    *report = dup_string(sweep_json(analyzer, static_cast<std::size_t>(probes)).dump(2));
  });
}

lr_status lr_oracle(const lr_body* body, const char* f, int32_t resolution,
                    char** report, char** err) {
  if (!body || !report) return LR_E_VALIDATION;
  return guarded(err, [&] {
    auto& analyzer = const_cast<lr_body*>(body)->analyzer;
    LiftingRegion region = analyzer.region_at(parse_f(body, f));
    if (resolution < 2) fail(ErrorCode::kValidationFailed, "resolution must be at least 2");
    Json doc = to_json(torus_cover_oracle(region, static_cast<unsigned>(resolution)));
    doc["resolution"] = resolution;
    *report = dup_string(doc.dump(2));
  });
}

lr_status lr_classify(const lr_body* body, char** report, char** err) {
  if (!body || !report) return LR_E_VALIDATION;
  return guarded(err, [&] {
    auto& analyzer = const_cast<lr_body*>(body)->analyzer;
    *report = dup_string(classify_json(analyzer).dump(2));
  });
}

lr_status lr_render(const lr_body* body, const char* f, char** svg, char** err) {
  if (!body || !svg) return LR_E_VALIDATION;
  return guarded(err, [&] {
    auto& analyzer = const_cast<lr_body*>(body)->analyzer;
    *svg = dup_string(render_svg(analyzer.region_at(parse_f(body, f))));
  });
}

lr_status lr_generate(const char* family, const char* params_json, char** out,
                      char** err) {
  if (!out) return LR_E_VALIDATION;
  return guarded(err, [&] {
    if (!family) fail(ErrorCode::kParse, "missing family name");
    *out = dup_string(generate_json(family, params_json ? params_json : "").dump(2));
  });
}

}  // extern "C"
