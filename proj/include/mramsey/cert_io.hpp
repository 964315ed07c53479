#pragma once

#include <filesystem>
#include <string>

#include "mramsey/graph.hpp"

namespace mramsey {

// Certificate file that violates the schema; `field` is a path like "edges[3]".
class CertError : public std::runtime_error {
public:
    CertError(std::string field, const std::string& msg)
        : std::runtime_error("schema error at " + field + ": " + msg), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

// mramsey-cert-v1: single-line JSON, fixed key order, edges in canonical order.
std::string serialize_certificate(const Certificate& cert);
Certificate deserialize_certificate(const std::string& text);  // throws CertError

void write_certificate_file(const std::filesystem::path& path, const Certificate& cert);
Certificate read_certificate_file(const std::filesystem::path& path);

}  // namespace mramsey
