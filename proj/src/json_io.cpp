#include "lightsout/json_io.hpp"

namespace lightsout {

json to_json(const ChainCertificate& cert) {
    return json{{"order", cert.removal_order}, {"nullities", cert.expected_nullities}};
}

ChainCertificate chain_from_json(const json& j) {
    ChainCertificate cert;
    cert.removal_order = j.at("order").get<std::vector<std::size_t>>();
    cert.expected_nullities = j.at("nullities").get<std::vector<std::size_t>>();
    return cert;
}

json to_json(const PassCertificate& cert) {
    return json{{"blocks", cert.blocks}};
}

PassCertificate pass_from_json(const json& j) {
    PassCertificate cert;
    cert.blocks = j.at("blocks").get<std::vector<std::vector<std::size_t>>>();
    return cert;
}

namespace {

using Cert = DecompositionCertificate;

json node_to_json(const Cert::NodePtr& node) {
    if (!node) throw contract_violation("decomposition: null node");
    if (const auto* leaf = std::get_if<Cert::Leaf>(&node->value))
        return json{{"kind", "leaf"}, {"vertex", leaf->vertex}};
    if (const auto* j01 = std::get_if<Cert::Join01>(&node->value))
        return json{{"kind", "join01"},
                    {"u", j01->u},
                    {"w", j01->w},
                    {"left", node_to_json(j01->left)},
                    {"right", node_to_json(j01->right)}};
    const auto& j111 = std::get<Cert::Join111>(node->value);
    return json{{"kind", "join111"},
                {"x", j111.x},
                {"y", j111.y},
                {"z", j111.z},
                {"first", node_to_json(j111.first)},
                {"middle", node_to_json(j111.middle)},
                {"last", node_to_json(j111.last)}};
}

Cert::NodePtr node_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "leaf")
        return std::make_shared<Cert::Node>(
            Cert::Node{Cert::Leaf{j.at("vertex").get<std::size_t>()}});
    if (kind == "join01")
        return std::make_shared<Cert::Node>(Cert::Node{Cert::Join01{
            node_from_json(j.at("left")), j.at("u").get<std::size_t>(),
            j.at("w").get<std::size_t>(), node_from_json(j.at("right"))}});
    if (kind == "join111")
        return std::make_shared<Cert::Node>(Cert::Node{Cert::Join111{
            node_from_json(j.at("first")), j.at("x").get<std::size_t>(),
            node_from_json(j.at("middle")), j.at("y").get<std::size_t>(),
            node_from_json(j.at("last")), j.at("z").get<std::size_t>()}});
    throw contract_violation("decomposition: unknown node kind '" + kind + "'");
}

} // namespace

json to_json(const DecompositionCertificate& cert) { return node_to_json(cert.root); }

DecompositionCertificate decomposition_from_json(const json& j) {
    return DecompositionCertificate{node_from_json(j)};
}

CertificateKind detect_certificate_kind(const json& j) {
    if (j.contains("order") && j.contains("nullities")) return CertificateKind::chain;
    if (j.contains("blocks")) return CertificateKind::pass;
    if (j.contains("kind")) return CertificateKind::decomposition;
    throw contract_violation("unrecognized certificate shape");
}

} // namespace lightsout
