#ifndef FANO_SERIALIZE_HPP
#define FANO_SERIALIZE_HPP

#include <nlohmann/json.hpp>

#include "fano/bridge.hpp"
#include "fano/cones.hpp"
#include "fano/lattice.hpp"
#include "fano/mcd.hpp"
#include "fano/planes.hpp"
#include "fano/weyl.hpp"

namespace fano {

using json = nlohmann::ordered_json;

/// Rationals print as "p" or "p/q"; integers as plain numbers when they fit,
/// otherwise as decimal strings. All arrays are emitted in a fixed sorted
/// order so exports are byte-identical across runs.
json rat_json(const Rat& q);
json int_json(const Int& x);
json qvec_json(const QVec& v);
json zvec_json(const ZVec& v);

json class_json(const LatticeClass& x);
json weyl_json(const WeylElement& w);
json cone_json(const RationalCone& c);
json polytope_json(const AffinePolytope& p);
json label_json(const PlaneLabel& L);
json wall_json(const WallDescriptor& w, const WallKind& kind);
json chamber_json(const ChamberDescriptor& d, int n);
json factorization_json(const FactorizationReport& r);

/// Rays of a cone with catalogue names attached where known.
json ray_inventory_json(const RationalCone& c, int n);

/// Wraps a payload with the versioned envelope {"schema": 1, ...}.
json envelope(const std::string& object, int n, json payload);

std::string side_name(Side s);

}  // namespace fano

#endif
