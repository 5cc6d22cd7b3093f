#include "liftreg/json_io.hpp"

namespace liftreg {

namespace {

RatVec rat_vec_from(const Json& arr) {
  if (!arr.is_array() || arr.empty())
    fail(ErrorCode::kParse, "expected a nonempty array of rationals");
  RatVec v;
  for (const auto& item : arr) {
    if (item.is_number_integer()) {
      v.push_back(Rat(Int(item.get<long>())));
    } else if (item.is_string()) {
      v.push_back(Rat::parse(item.get<std::string>()));
    } else {
      fail(ErrorCode::kParse, "rationals must be strings like \"p/q\"");
    }
  }
  return v;
}

}  // namespace

SimplicialPolytope body_from_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const std::exception& e) {
    fail(ErrorCode::kParse, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("vertices"))
    fail(ErrorCode::kParse, "body needs fields \"n\" and \"vertices\"");
  std::size_t n = doc["n"].get<std::size_t>();
  if (n < 1) fail(ErrorCode::kParse, "dimension must be at least 1");
  std::vector<RatVec> vertices;
  for (const auto& row : doc["vertices"]) {
    RatVec v = rat_vec_from(row);
    if (v.size() != n) fail(ErrorCode::kParse, "vertex dimension mismatch");
    vertices.push_back(std::move(v));
  }
  if (doc.contains("facets") && !doc["facets"].is_null()) {
    std::vector<std::vector<std::size_t>> incidences;
    for (const auto& f : doc["facets"]) {
      if (!f.is_object() || !f.contains("incidence"))
        fail(ErrorCode::kParse, "facet entries need an \"incidence\" list");
      incidences.push_back(f["incidence"].get<std::vector<std::size_t>>());
    }
    return SimplicialPolytope::from_data(vertices, incidences);
  }
  if (vertices.size() != n + 1)
    fail(ErrorCode::kParse,
         "bodies with more than n+1 vertices must supply \"facets\"");
  return SimplicialPolytope::simplex(vertices);
}

Json body_to_json(const SimplicialPolytope& body) {
  Json doc;
  doc["n"] = body.dim();
  Json verts = Json::array();
  for (const auto& v : body.vertices()) verts.push_back(to_json(v));
  doc["vertices"] = std::move(verts);
  Json facets = Json::array();
  for (const auto& f : body.facets()) {
    Json fj;
    fj["incidence"] = f.incidence;
    fj["normal"] = to_json(f.normal);
    fj["offset"] = f.offset.str();
    facets.push_back(std::move(fj));
  }
  doc["facets"] = std::move(facets);
  return doc;
}

Json to_json(const RatVec& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(x.str());
  return arr;
}

Json to_json(const IntVec& v) {
  Json arr = Json::array();
  for (const auto& x : v) {
    if (x.fits_slong_p()) arr.push_back(x.get_si());
    else arr.push_back(x.get_str());
  }
  return arr;
}

Json to_json(const MaximalityReport& report) {
  Json doc;
  doc["lattice_free"] = report.lattice_free;
  doc["maximal"] = report.maximal;
  if (report.interior_witness) doc["interior_witness"] = to_json(*report.interior_witness);
  else doc["interior_witness"] = nullptr;
  Json per = Json::array();
  for (const auto& fp : report.per_facet) {
    Json f;
    Json all = Json::array();
    for (const auto& z : fp.all) all.push_back(to_json(z));
    Json relint = Json::array();
    for (const auto& z : fp.relative_interior) relint.push_back(to_json(z));
    f["all"] = std::move(all);
    f["relative_interior"] = std::move(relint);
    per.push_back(std::move(f));
  }
  doc["per_facet"] = std::move(per);
  return doc;
}

Json to_json(const Verdict& verdict) {
  Json doc;
  doc["torus_volume"] = verdict.torus_volume.str();
  doc["unique_lifting"] = verdict.unique_lifting;
  Json per = Json::array();
  for (const auto& v : verdict.per_facet) per.push_back(v.str());
  doc["per_facet"] = std::move(per);
  if (verdict.witness) doc["witness"] = to_json(*verdict.witness);
  return doc;
}

Json to_json(const OracleReport& report) {
  Json doc;
  doc["covered_fraction"] = report.covered_fraction.str();
  Json unc = Json::array();
  for (const auto& x : report.uncovered) unc.push_back(to_json(x));
  doc["uncovered"] = std::move(unc);
  return doc;
}

Json to_json(const AffineVolume& affine) {
  Json doc;
  doc["coefficients"] = to_json(affine.coefficients);
  doc["constant"] = affine.constant.str();
  doc["verified"] = affine.verified;
  Json vv = Json::array();
  for (const auto& v : affine.vertex_volumes) vv.push_back(v.str());
  doc["vertex_volumes"] = std::move(vv);
  Json res = Json::array();
  for (const auto& r : affine.probe_residuals) res.push_back(r.str());
  doc["probe_residuals"] = std::move(res);
  return doc;
}

Json to_json(const UnimodEquiv& equiv) {
  Json doc;
  Json rows = Json::array();
  for (const auto& r : equiv.u) rows.push_back(to_json(r));
  doc["U"] = std::move(rows);
  doc["b"] = to_json(equiv.b);
  doc["vertex_map"] = equiv.vertex_map;
  return doc;
}

Json error_json(const Error& error) {
  Json doc;
  doc["error"]["code"] = error_code_name(error.code());
  doc["error"]["message"] = error.message();
  return doc;
}

}  // namespace liftreg
