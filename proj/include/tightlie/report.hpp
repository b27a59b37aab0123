#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "tightlie/tightness.hpp"

namespace tightlie {

using Json = nlohmann::ordered_json;

/// Row-major array of rows of exact scalar strings.
Json mat_to_json(const Mat& m);
Mat mat_from_json(const Json& j);

/// "sp(2n,R)" | "su(p,q)" | "sl2" | sums joined with '+'; an explicit form
/// overrides the default one (single-factor descriptors only).
Algebra parse_algebra(const std::string& descriptor, const std::optional<Mat>& form = {});

/// Catalog descriptors: diag:<algebra>, irrep:sp(2n), sym2:su12-su24,
/// iA | iB | iA:B | iB:A | ..., corner:p1,q1,p2,q2, compose:<a>,<b>,
/// dsum:<a>+<b>, file:<path> (from_images JSON).
LieHom parse_hom(const std::string& descriptor);

/// from_images JSON schema: {"domain": str, "codomain": str,
/// "domain_form"?: mat, "codomain_form"?: mat, "images": [mat...], "label"?: str}
LieHom load_hom(const std::string& path);
Json hom_to_json(const LieHom& f);

Json report_to_json(const TightnessReport& r);

}  // namespace tightlie
