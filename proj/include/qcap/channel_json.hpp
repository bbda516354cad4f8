#pragma once

#include <string>

#include "qcap/channel.hpp"

namespace qcap {

// Channel-spec JSON:
//   {"kind": "amplitude_damping", "params": {"gamma": 0.3},
//    "custom_kraus": [[[[re, im], ...], ...], ...]}   (optional)
// Complex numbers are 2-element arrays; matrix shapes fix the dimensions.
ChannelSpec channel_spec_from_json(const std::string& text);

KrausChannel channel_from_json_file(const std::string& path);

std::string channel_kind_name(ChannelKind kind);

}  // namespace qcap
