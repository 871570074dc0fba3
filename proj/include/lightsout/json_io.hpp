#pragma once

#include "json.hpp" // vendored single-header nlohmann/json

#include "lightsout/structure.hpp"

namespace lightsout {

using json = nlohmann::ordered_json;

json to_json(const ChainCertificate& cert);
ChainCertificate chain_from_json(const json& j);

json to_json(const PassCertificate& cert);
PassCertificate pass_from_json(const json& j);

json to_json(const DecompositionCertificate& cert);
DecompositionCertificate decomposition_from_json(const json& j);

enum class CertificateKind { chain, pass, decomposition };

/// Detects the certificate kind from its JSON shape: chains carry
/// "order"/"nullities", partitions "blocks", decompositions "kind".
CertificateKind detect_certificate_kind(const json& j);

} // namespace lightsout
