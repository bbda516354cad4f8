#include "qcap/channel_json.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qcap {

namespace {

using nlohmann::json;

ChannelKind kind_from_name(const std::string& name) {
  if (name == "unitary") return ChannelKind::unitary;
  if (name == "amplitude_damping") return ChannelKind::amplitude_damping;
  if (name == "gadc") return ChannelKind::gadc;
  if (name == "depolarizing_iso") return ChannelKind::depolarizing_iso;
  if (name == "depolarizing_pauli") return ChannelKind::depolarizing_pauli;
  if (name == "pauli") return ChannelKind::pauli;
  if (name == "custom") return ChannelKind::custom;
  throw std::invalid_argument("channel json: unknown kind '" + name + "'");
}

ComplexMatrix matrix_from_json(const json& rows) {
  if (!rows.is_array() || rows.empty())
    throw std::invalid_argument("channel json: kraus matrix must be a non-empty array of rows");
  const std::size_t nr = rows.size();
  const std::size_t nc = rows.front().size();
  ComplexMatrix m(nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    const auto& row = rows.at(i);
    if (!row.is_array() || row.size() != nc)
      throw std::invalid_argument("channel json: ragged kraus matrix");
    for (std::size_t j = 0; j < nc; ++j) {
      const auto& z = row.at(j);
      if (!z.is_array() || z.size() != 2)
        throw std::invalid_argument("channel json: complex entries must be [re, im]");
      m.at(i, j) = cplx{z.at(0).get<double>(), z.at(1).get<double>()};
    }
  }
  return m;
}

}  // namespace

std::string channel_kind_name(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::unitary: return "unitary";
    case ChannelKind::amplitude_damping: return "amplitude_damping";
    case ChannelKind::gadc: return "gadc";
    case ChannelKind::depolarizing_iso: return "depolarizing_iso";
    case ChannelKind::depolarizing_pauli: return "depolarizing_pauli";
    case ChannelKind::pauli: return "pauli";
    case ChannelKind::custom: return "custom";
  }
  return "unknown";
}

ChannelSpec channel_spec_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("channel json: parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("kind"))
    throw std::invalid_argument("channel json: expected an object with a 'kind' field");

  ChannelSpec spec;
  spec.kind = kind_from_name(j.at("kind").get<std::string>());
  if (j.contains("params")) {
    for (const auto& [key, value] : j.at("params").items())
      spec.params[key] = value.get<double>();
  }
  if (j.contains("custom_kraus")) {
    std::vector<ComplexMatrix> ks;
    for (const auto& mat : j.at("custom_kraus")) ks.push_back(matrix_from_json(mat));
    spec.custom_kraus = std::move(ks);
  }
  return spec;
}

KrausChannel channel_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("channel json: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return build_channel(channel_spec_from_json(buf.str()));
}

}  // namespace qcap
