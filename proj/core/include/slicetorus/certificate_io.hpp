#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "slicetorus/cobordism.hpp"

namespace slicetorus {

using Json = nlohmann::ordered_json;

// Certificate schema:
//   {"start": "<braid text>", "moves": [{"type": "<name>", ...fields}, ...]}
// Move fields by type:
//   saddle_insert          position, letter
//   saddle_delete          position
//   insert_canceling_pair  position, generator, order
//   delete_canceling_pair  position
//   braid_relation         position, direction
//   commutation            position
//   conjugate              letter
//   cyclic_shift           (none)
//   stabilize              sign
//   destabilize            (none)

Json move_to_json(const Move& move);
Move move_from_json(const Json& j);

Json certificate_to_json(const CobordismCertificate& certificate);

/// Throws std::invalid_argument on schema violations.
CobordismCertificate certificate_from_json(const Json& j);

/// A document holding either one certificate object or an array of them.
std::vector<CobordismCertificate> certificates_from_text(std::string_view text);

/// {"start", "end", "saddle_count", "genus" ("n/d" or null), "connected",
///  "start_components", "end_components"}
Json verification_report(const VerifiedCobordism& verified);

}  // namespace slicetorus
