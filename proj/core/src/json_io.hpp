#pragma once

#include <string>

#include <json.hpp>

#include "tw/io.hpp"
#include "tw/model_cover.hpp"
#include "tw/cusp.hpp"
#include "tw/psh.hpp"
#include "tw/reconstruct.hpp"

namespace tw::detail {

using Json = nlohmann::ordered_json;

Json parse_document(const std::string& text);
void require_schema(const Json& doc);

const Json& field(const Json& obj, const std::string& key, const std::string& at);
const Json* optional_field(const Json& obj, const std::string& key);
int get_int(const Json& v, const std::string& at);
long get_long(const Json& v, const std::string& at);
double get_double(const Json& v, const std::string& at);
bool get_bool(const Json& v, const std::string& at);
Triple get_triple(const Json& v, const std::string& at);

Params params_from(const Json& obj, const std::string& at);
TrisectionParams closed_params_from(const Json& obj, const std::string& at);
RelTrisectionParams rel_params_from(const Json& obj, const std::string& at);
TrisectionDiagram diagram_from(const Json& obj, const std::string& at);
BridgeSurfaceData bridge_from(const Json& obj, const std::string& at);
MonodromyRep monodromy_from(const Json& obj, const std::string& at);
GraphSurface graph_from(const Json& obj, const std::string& at);
Scene scene_from(const Json& obj, const std::string& at);

Json to_json(const TrisectionParams& p);
Json to_json(const RelTrisectionParams& p);
Json to_json(const Params& p);
Json to_json(const TrisectionDiagram& d);
Json to_json(const BridgeSurfaceData& s);
Json to_json(const MonodromyRep& rho);
Json to_json(const GraphSurface& g);
Json to_json(const Scene& s);
Json to_json(const Tolerances& t);
Json to_json(const BridgeCertificate& c);
Json to_json(const AbelianGroup& g);
Json to_json(const HeegaardHomology& h);
Json to_json(const PolyCoverReport& r);
Json to_json(const CuspReport& r);
Json to_json(const SectorCoverageReport& r);
Json to_json(const GlueSurvey& s);
Json to_json(const PullbackDetails& d);
Json to_json(const StratumLift& s);
Json to_json(cplx z);

/// Document with the schema tag first.
Json document();
std::string dump(const Json& j);

}  // namespace tw::detail
