#pragma once

#include <json.hpp>

#include <set>
#include <string>

#include "ztwo/bredon.hpp"
#include "ztwo/indexthy.hpp"
#include "ztwo/lattice.hpp"
#include "ztwo/presets.hpp"
#include "ztwo/realization.hpp"
#include "ztwo/vanishing.hpp"

namespace ztwo::io {

using json = nlohmann::json;

// Integers are emitted as JSON numbers up to 53-bit magnitude and as decimal
// strings beyond, so every value round-trips losslessly; no floats anywhere.
json int_to_json(const Int& x);
Int int_from_json(const json& j);

json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j);

/// {"gram": [[..]], "involution": [[..]]} with the involution defaulting to
/// the identity.
struct LatticeDocument {
  lattice::BilinearLattice form;
  lattice::LatticeInvolution involution;
};
LatticeDocument lattice_from_json(const json& j);

/// {"chi", "sign", "b1", "b_plus", "b_plus_fixed", "spin"}.
indexthy::ManifoldProfile profile_from_json(const json& j);
json profile_to_json(const indexthy::ManifoldProfile& p);

/// {"link": [[..]], "invariant_disks": bool (default true)}.
realization::FramedLinkMatrix link_from_json(const json& j);
json link_to_json(const realization::FramedLinkMatrix& m);

json to_json(const lattice::FormProperties& p);
json to_json(const lattice::FormClass& c);
json to_json(const lattice::EigenlatticeRanks& r);
json to_json(const lattice::TateDims& t);
json to_json(const lattice::DecompositionReport& d);
json to_json(const lattice::EEReport& r);
json to_json(const indexthy::SpinIndices& k);
json to_json(const std::set<long long>& s);
json to_json(const bredon::RepMultiplicities& v);
json to_json(const bredon::FixedDims& d);
json to_json(const bredon::CohomologyGroup& g);
json to_json(const bredon::EquivariantChainComplex& c);
json to_json(const vanishing::ConditionRecord& c);
json to_json(const vanishing::BredonCertificate& c);
json to_json(const vanishing::VanishingVerdict& v);
json to_json(const vanishing::NonsmoothabilityReport& r);

std::string group_name(const bredon::CohomologyGroup& g);

/// Canonical rendering: keys in sorted order, two-space indent, newline at
/// the end. Parsing the output and re-rendering is byte-identical.
std::string render(const json& j);

json load_file(const std::string& path);

}  // namespace ztwo::io
