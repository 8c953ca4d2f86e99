#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rescoh/lshape.hpp"
#include "rescoh/setup.hpp"
#include "rescoh/sl2.hpp"

namespace rescoh {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& q);
Json weight_json(const Weight& w);

Json to_json(const HCDatum& datum);
Json to_json(const std::vector<Violation>& violations);
Json to_json(const DSPackage& pkg);
Json to_json(const LeviParameter& levi);
Json to_json(const LShape& shape);
Json to_json(const PoleCertificate& cert);
Json to_json(const Sl2Report& report, const Sl2Options& options);

/// hc_datum, package, levi and lshape sections of one datum.
Json package_document(const DSPackage& pkg);

/// Two spaces of indentation, trailing newline.
std::string dump(const Json& doc);

/// One "path<TAB>value" line per scalar leaf, after a header row.
std::string flatten_tsv(const Json& doc);

/// Header plus one row per package, in the given order.
std::string enumerate_tsv(const std::vector<DSPackage>& packages);

/// "3,-2" style rendering used in TSV cells.
std::string weight_cell(const Weight& w);

}  // namespace rescoh
