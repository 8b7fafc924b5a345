#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tw/bridge.hpp"
#include "tw/cover.hpp"
#include "tw/geometry.hpp"
#include "tw/trisection.hpp"

namespace tw {

inline constexpr const char* kSchemaVersion = "tw/1";

/// Malformed or ill-typed input; `location` is a JSON pointer.
class SchemaError : public std::runtime_error {
public:
  SchemaError(std::string location, const std::string& what)
      : std::runtime_error(location + ": " + what), location_(std::move(location)), message_(what) {}
  const std::string& location() const { return location_; }
  const std::string& message() const { return message_; }

private:
  std::string location_;
  std::string message_;
};

/// {"schema","genus","k"} closed; with "p"/"b" relative.
Params parse_params(const std::string& text);
std::string dump_params(const Params& p);

/// {"schema","genus","b","cut_systems":[[[int]]]}.
TrisectionDiagram parse_diagram(const std::string& text);
std::string dump_diagram(const TrisectionDiagram& d);

/// {"schema","bridge_surface":{...}}.
BridgeSurfaceData parse_bridge_surface(const std::string& text);
std::string dump_bridge_surface(const BridgeSurfaceData& s);

/// {"schema","degree","meridians":[[i,j],...]} with 1-based sheets.
MonodromyRep parse_monodromy(const std::string& text);
std::string dump_monodromy(const MonodromyRep& rho);

struct Scene {
  double M = 100.0;
  double R = 10.0;
  std::vector<GraphSurface> graphs;
  std::optional<BridgeSurfaceData> declared;
};

/// {"schema","M","R","graphs":[...],"declared"?}.
Scene parse_scene(const std::string& text);
std::string dump_scene(const Scene& s);

std::string dump_certificate(const BridgeCertificate& c);

}  // namespace tw
