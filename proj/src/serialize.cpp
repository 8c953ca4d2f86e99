#include "rescoh/serialize.hpp"

#include <sstream>

#include "rescoh/root_spec.hpp"

namespace rescoh {

Json rational_json(const Rational& q) { return to_string(q); }

Json weight_json(const Weight& w) {
  Json arr = Json::array();
  for (const auto& c : w.coords()) arr.push_back(to_string(c));
  return arr;
}

Json to_json(const HCDatum& datum) {
  return Json{{"rank", datum.rank()},
              {"chamber", datum.eps().to_string()},
              {"alpha0", format_root(datum.alpha0())},
              {"lambda", weight_json(datum.lambda())}};
}

Json to_json(const std::vector<Violation>& violations) {
  Json arr = Json::array();
  for (const auto& v : violations) arr.push_back(Json{{"condition", v.condition}, {"message", v.message}});
  return arr;
}

namespace {

Json rows_json(const std::array<std::array<int, 3>, 3>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows) arr.push_back(Json::array({r[0], r[1], r[2]}));
  return arr;
}

}  // namespace

Json to_json(const DSPackage& pkg) {
  const CohTable& t = pkg.coh_table;
  const auto deg = t.degrees();
  return Json{
      {"s0", rational_json(pkg.s0)},
      {"blattner_plus", weight_json(pkg.blattner_plus)},
      {"blattner_minus", weight_json(pkg.blattner_minus)},
      {"j_lowest_ktype", weight_json(pkg.j_lowest_ktype)},
      {"e_highest_weight", weight_json(pkg.e_highest_weight)},
      {"d", pkg.d},
      {"m", pkg.m},
      {"coh_table",
       Json{{"degrees", Json::array({deg[0], deg[1], deg[2]})},
            {"left_rows", rows_json(t.left_rows)},
            {"right_rows", rows_json(t.right_rows)},
            {"h_d_d_plus", t.h_d_d_plus},
            {"h_d_d_minus", t.h_d_d_minus}}},
      {"residual_degrees",
       Json{{"nonvanishing_image", t.nonvanishing_image_degree}, {"vanishing_image", t.vanishing_image_degree}}},
  };
}

Json to_json(const LeviParameter& levi) {
  Json j{{"class", to_string(levi.parabolic_class)}};
  j["gl_weight"] = levi.gl_weight ? Json(*levi.gl_weight) : Json(nullptr);
  j["sp_parameter"] = weight_json(levi.sp_parameter);
  j["parity"] = levi.sign_character_odd ? Json(*levi.sign_character_odd ? "odd" : "even") : Json(nullptr);
  return j;
}

Json to_json(const LShape& shape) {
  Json buckets = Json::array();
  for (const auto& b : shape.buckets)
    buckets.push_back(Json{{"level", b.level}, {"dim", b.dim}, {"label", b.label ? Json(*b.label) : Json(nullptr)}});
  Json num = Json::array();
  Json den = Json::array();
  for (const auto& f : shape.numerator_args) num.push_back(f.to_string());
  for (const auto& f : shape.denominator_args) den.push_back(f.to_string());
  return Json{{"class", to_string(shape.parabolic_class)},
              {"rank", shape.rank},
              {"s0", rational_json(shape.s0)},
              {"buckets", buckets},
              {"numerator_args", num},
              {"denominator_args", den}};
}

Json to_json(const PoleCertificate& cert) {
  return Json{{"verdict", to_string(cert.verdict)}, {"reasons", cert.reasons}};
}

Json to_json(const Sl2Report& report, const Sl2Options& options) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json j{{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}};
    if (c.error) j["error"] = *c.error;
    checks.push_back(std::move(j));
  }
  Json j{{"a_plus", rational_json(options.a_plus)},
         {"a_minus", rational_json(options.a_minus)},
         {"normalization", options.normalization.to_string("s")},
         {"germ_depth", options.depth},
         {"checks", checks}};
  j["constant_term_coefficient"] =
      report.constant_term_coefficient ? Json(report.constant_term_coefficient->to_string("r")) : Json(nullptr);
  j["degenerate"] = report.degenerate;
  j["coboundary_established"] = report.coboundary_established;
  return j;
}

Json package_document(const DSPackage& pkg) {
  return Json{{"hc_datum", to_json(pkg.datum)},
              {"package", to_json(pkg)},
              {"levi", to_json(pkg.levi)},
              {"lshape", to_json(l_shape(pkg.datum))}};
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

namespace {

void flatten(const Json& j, const std::string& path, std::ostringstream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, os);
  } else if (j.is_array()) {
    bool scalar = true;
    for (const auto& v : j) scalar = scalar && v.is_primitive();
    if (scalar) {
      std::string cell;
      for (std::size_t i = 0; i < j.size(); ++i)
        cell += (i ? "," : "") + (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
      os << path << '\t' << cell << '\n';
    } else {
      for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "." + std::to_string(i), os);
    }
  } else {
    os << path << '\t' << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

}  // namespace

std::string flatten_tsv(const Json& doc) {
  std::ostringstream os;
  os << "field\tvalue\n";
  flatten(doc, "", os);
  return os.str();
}

std::string weight_cell(const Weight& w) {
  std::string out;
  for (std::size_t i = 0; i < w.rank(); ++i) out += (i ? "," : "") + to_string(w[i]);
  return out;
}

std::string enumerate_tsv(const std::vector<DSPackage>& packages) {
  std::ostringstream os;
  os << "chamber\talpha0\tlambda\ts0\tblattner_plus\tblattner_minus\tj_ktype\te_weight\td\n";
  for (const auto& p : packages) {
    os << p.datum.eps().to_string() << '\t' << format_root(p.datum.alpha0()) << '\t' << weight_cell(p.datum.lambda())
       << '\t' << to_string(p.s0) << '\t' << weight_cell(p.blattner_plus) << '\t' << weight_cell(p.blattner_minus)
       << '\t' << weight_cell(p.j_lowest_ktype) << '\t' << weight_cell(p.e_highest_weight) << '\t' << p.d << '\n';
  }
  return os.str();
}

}  // namespace rescoh
