#include "schlicht/domain_json.hpp"

#include <json.hpp>

#include "schlicht/errors.hpp"

namespace schlicht {
namespace {

using nlohmann::json;

json point(Complex z) { return json::array({z.real(), z.imag()}); }

Complex read_point(const json& j) {
  if (!j.is_array() || j.size() != 2) throw PreconditionError("domain json: a point must be [re, im]");
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

}  // namespace

std::string domain_to_json(const Domain& domain) {
  json doc;
  doc["kind"] = kind_name(domain);
  if (const auto* slit = std::get_if<SlitDiskDomain>(&domain)) {
    doc["radial_slits"] = json::array();
    for (const auto& s : slit->radial_slits) doc["radial_slits"].push_back({{"angle", s.angle}, {"inner", s.inner}});
    doc["curve_slits"] = json::array();
    for (const auto& c : slit->curve_slits) {
      doc["curve_slits"].push_back({{"p", c.params.p}, {"p1", c.params.p1}, {"theta", c.params.theta}});
    }
  } else if (const auto* half = std::get_if<HalfPlane>(&domain)) {
    doc["alpha"] = half->alpha;
  } else {
    const auto& ext = std::get<ExteriorDomain>(domain);
    if (const auto* disk = std::get_if<ExcludedDisk>(&ext.excluded)) {
      doc["excluded"] = {{"disk", {{"center", point(disk->center)}, {"radius", disk->radius}}}};
    } else {
      json verts = json::array();
      for (const auto& v : std::get<ExcludedPolygon>(ext.excluded).vertices) verts.push_back(point(v));
      doc["excluded"] = {{"polygon", verts}};
    }
  }
  return doc.dump();
}

Domain domain_from_json(std::string_view text, const NumericSettings& settings) {
  Domain domain;
  try {
    const json doc = json::parse(text);
    const std::string kind = doc.at("kind").get<std::string>();
    if (kind == "slit_disk") {
      SlitDiskDomain slit;
      if (doc.contains("radial_slits")) {
        for (const auto& s : doc.at("radial_slits")) {
          slit.radial_slits.push_back({s.at("angle").get<double>(), s.at("inner").get<double>()});
        }
      }
      if (doc.contains("curve_slits")) {
        for (const auto& c : doc.at("curve_slits")) {
          slit.curve_slits.push_back(CurveSlit::from(TwoSlitParams::make(
              c.at("p").get<double>(), c.at("p1").get<double>(), c.at("theta").get<double>(), settings)));
        }
      }
      domain = std::move(slit);
    } else if (kind == "half_plane") {
      domain = HalfPlane{doc.at("alpha").get<double>()};
    } else if (kind == "exterior") {
      const json& ex = doc.at("excluded");
      if (ex.contains("disk")) {
        domain = ExteriorDomain{ExcludedDisk{read_point(ex.at("disk").at("center")), ex.at("disk").at("radius").get<double>()}};
      } else if (ex.contains("polygon")) {
        ExcludedPolygon poly;
        for (const auto& v : ex.at("polygon")) poly.vertices.push_back(read_point(v));
        domain = ExteriorDomain{std::move(poly)};
      } else {
        throw PreconditionError("domain json: exterior needs a disk or polygon");
      }
    } else {
      throw PreconditionError("domain json: unknown kind '" + kind + "'");
    }
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("domain json: ") + e.what());
  }
  validate(domain);
  return domain;
}

}  // namespace schlicht
