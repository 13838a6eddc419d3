#pragma once

#include "json.hpp"

#include "equitel/channel.hpp"
#include "equitel/characters.hpp"
#include "equitel/oeb.hpp"
#include "equitel/teleport.hpp"
#include "equitel/ueb.hpp"

namespace equitel {

using nlohmann::json;

json group_to_json(const FiniteGroup& g);
std::shared_ptr<const FiniteGroup> group_from_json(const json& j);

json gset_to_json(const GSet& x);
GSet gset_from_json(const json& j, const FiniteGroup& g);

json rotation_to_json(const Rotation& r);
Rotation rotation_from_json(const json& j);

json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j);

json state_to_json(const PureState& s);
PureState state_from_json(const json& j);

json rep_to_json(const Representation& rho);
Representation rep_from_json(const json& j, const FiniteGroup& g);

json oeb_to_json(const EquivariantOEB& oeb);
json ueb_to_json(const EquivariantUEB& eueb);

// Reload an equivariant basis bundle emitted by ueb_to_json; rediscovers and
// cross-checks the index action.
struct LoadedUeb {
    std::shared_ptr<const FiniteGroup> group;
    Representation rep;
    EquivariantUEB eueb;
};
LoadedUeb ueb_from_json(const json& j);

json channel_to_json(const UnspeakableChannel& ch);
json transcript_to_json(const Transcript& t, const FiniteGroup& g);
json refusal_to_json(const RefusalCertificate& cert);
json class_function_to_json(const ClassFunction& cf);

// Tolerance constants, echoed into every report.
json tolerances_json();

json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace equitel
