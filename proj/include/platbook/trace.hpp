#pragma once

#include <string>
#include <string_view>

#include "platbook/diagram.hpp"

namespace platbook {

std::string step_tag_name(StepTag t);
StepTag parse_step_tag(std::string_view s);

std::string target_to_string(const Target& t);
Target parse_target(std::string_view s);

// One move per line:
//   BU <id> e=<+1|-1> targets=[<t>,...] step=<tag>
//   BD <id>
//   NM
// Targets: K, U, c<id>, s<strand>, with a leading '-' for sign -1.
std::string serialize_trace(const MoveTrace& t);
MoveTrace parse_trace(std::string_view text);

// Re-applies the moves to d0.  Whether a blow-up consumes the next syllable
// or clasp is derived from its step tag, so file-parsed traces replay the
// same way pipeline-produced ones do.  When regenerated is given it receives
// the replayed moves with their captured payloads (cancelled twists,
// normalization state), which parsed traces lack.
MixedDiagram replay(const MixedDiagram& d0, const MoveTrace& t, MoveTrace* regenerated = nullptr);

} // namespace platbook
