#pragma once

#include <json.hpp>

#include "jgwa/aut.hpp"

namespace jgwa {

inline constexpr const char* kFormat = "jacobi-gwa/1";

// Aut record: {format, n, perm (1-based), lambda ["p/q"], u [{"j": exp}], phi}.
// phi is {"matrix": [[alpha, beta, "c"]]} when phi - 1 is a finite matrix, else
// {"word": [factor...]} with factors {"matrix"}, {"slot", "matrix"} (n = 1 matrix
// in one coordinate) or {"elem", "inv"} (printed expressions).
nlohmann::json aut_to_json(const Aut& a);
Aut aut_from_json(const nlohmann::json& j);

// {n, x: [...], y: [...], H: [...]} with expression strings
nlohmann::json images_to_json(const Images& im);
Images images_from_json(const nlohmann::json& j);

nlohmann::json finmat_to_json(const FinMat& m);
FinMat finmat_from_json(const nlohmann::json& entries, int n);

nlohmann::json qaut_to_json(const QAut& q);

}  // namespace jgwa
