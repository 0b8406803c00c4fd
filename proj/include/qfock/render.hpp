#ifndef QFOCK_RENDER_HPP
#define QFOCK_RENDER_HPP

#include <json.hpp>
#include <string>
#include <vector>

#include "qfock/canonical.hpp"
#include "qfock/fock.hpp"

namespace qfock {

enum class Format { json, csv, table };
/// Throws std::invalid_argument for anything but "json", "csv", "table".
Format parse_format(const std::string& s);

using Provenance = std::vector<std::vector<std::string>>;

/// {h, core, weight, rows, cols, entries}; entries[r][c] is a coefficient
/// string.  With provenance, a parallel "provenance" array is added.
nlohmann::ordered_json matrix_json(const CanonicalBasisMatrix& m, const Provenance* provenance = nullptr);
nlohmann::ordered_json vector_json(const FockVector& v);

/// Zero entries print as "·" in csv and table output.
std::string render_matrix(const CanonicalBasisMatrix& m, Format f,
                          const Provenance* provenance = nullptr);
std::string render_vector(const FockVector& v, Format f);

}  // namespace qfock

#endif  // QFOCK_RENDER_HPP
