#include "tightlie/report.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tightlie {

Json mat_to_json(const Mat& m) {
  Json rows = Json::array();
  for (size_t i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (size_t j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat mat_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix JSON must be a row array");
  size_t n = j.size();
  Mat m(n);
  for (size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != n)
      throw std::invalid_argument("matrix JSON must be square, row-major");
    for (size_t k = 0; k < n; ++k) m.at(i, k) = ExactScalar::parse(j[i][k].get<std::string>());
  }
  return m;
}

namespace {

/// Integer parse that rejects trailing characters.
int strict_int(const std::string& s) {
  size_t used = 0;
  int v = std::stoi(s, &used);
  if (used != s.size()) throw std::invalid_argument("trailing characters after integer: '" + s + "'");
  return v;
}

Algebra parse_simple_algebra(const std::string& desc, const std::optional<Mat>& form) {
  if (desc == "sl2" || desc == "sl(2,R)") {
    if (form) throw std::invalid_argument("sl2 descriptor does not take a custom form");
    return sl2();
  }
  if (desc.rfind("sp(", 0) == 0 && desc.back() == ')') {
    std::string args = desc.substr(3, desc.size() - 4);
    auto comma = args.find(',');
    std::string num = comma == std::string::npos ? args : args.substr(0, comma);
    if (comma != std::string::npos && args.substr(comma + 1) != "R")
      throw std::invalid_argument("sp descriptor must read sp(2n,R)");
    int dim = strict_int(num);
    if (dim < 2 || dim % 2) throw std::invalid_argument("sp(2n,R): ambient dimension must be even");
    return Algebra::simple(form ? make_sp(dim / 2, *form) : make_sp(dim / 2));
  }
  if (desc.rfind("su(", 0) == 0 && desc.back() == ')') {
    std::string args = desc.substr(3, desc.size() - 4);
    auto comma = args.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("su(p,q) needs two arguments");
    int p = strict_int(args.substr(0, comma)), q = strict_int(args.substr(comma + 1));
    return Algebra::simple(form ? make_su(p, q, *form) : make_su(p, q));
  }
  throw std::invalid_argument("unknown algebra descriptor: '" + desc +
                              "' (expected sp(2n,R) | su(p,q) | sl2)");
}

// split a+b+c at top level (no parentheses tracking needed: '+' never occurs
// inside a single algebra descriptor)
std::vector<std::string> split_plus(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == '+') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

Algebra parse_algebra(const std::string& descriptor, const std::optional<Mat>& form) {
  auto parts = split_plus(descriptor);
  if (parts.size() == 1) return parse_simple_algebra(parts[0], form);
  if (form) throw std::invalid_argument("custom forms apply to single-factor descriptors only");
  std::vector<Algebra> algs;
  algs.reserve(parts.size());
  for (const auto& p : parts) algs.push_back(parse_simple_algebra(p, {}));
  return Algebra::direct_sum(algs);
}

namespace {

std::optional<LieHom> try_parse_hom(const std::string& desc) {
  try {
    return parse_hom(desc);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

LieHom parse_hom(const std::string& desc) {
  if (desc.rfind("diag:", 0) == 0) return diagonal_disk(parse_algebra(desc.substr(5)));
  if (desc.rfind("irrep:sp(", 0) == 0 && desc.back() == ')') {
    std::string args = desc.substr(9, desc.size() - 10);
    auto comma = args.find(',');
    if (comma != std::string::npos && args.substr(comma + 1) != "R")
      throw std::invalid_argument("irrep descriptor must read irrep:sp(2n) or irrep:sp(2n,R)");
    int dim = strict_int(comma == std::string::npos ? args : args.substr(0, comma));
    if (dim < 2 || dim % 2) throw std::invalid_argument("irrep:sp(2n): even ambient dimension");
    return irreducible_sl2_to_sp(dim / 2);
  }
  if (desc == "sym2:su12-su24") return sym2_su12_to_su24();
  if (desc == "iA" || desc == "iA:A") return sp4_embeddings().iA_in_spA;
  if (desc == "iB" || desc == "iB:A") return sp4_embeddings().iB_in_spA;
  if (desc == "iA:B") return sp4_embeddings().iA_in_spB;
  if (desc == "iB:B") return sp4_embeddings().iB_in_spB;
  if (desc.rfind("corner:", 0) == 0) {
    std::istringstream is(desc.substr(7));
    int v[4];
    char sep;
    for (int k = 0; k < 4; ++k) {
      if (k && !(is >> sep && sep == ',')) throw std::invalid_argument("corner:p1,q1,p2,q2");
      if (!(is >> v[k])) throw std::invalid_argument("corner:p1,q1,p2,q2");
    }
    if (is.peek() != std::istringstream::traits_type::eof())
      throw std::invalid_argument("corner:p1,q1,p2,q2: trailing characters");
    return corner_su(v[0], v[1], v[2], v[3]);
  }
  if (desc.rfind("compose:", 0) == 0) {
    std::string body = desc.substr(8);
    // try each comma split until both sides parse
    for (size_t k = body.find(','); k != std::string::npos; k = body.find(',', k + 1)) {
      auto first = try_parse_hom(body.substr(0, k));
      auto then = try_parse_hom(body.substr(k + 1));
      if (first && then) return compose(*first, *then);
    }
    throw std::invalid_argument("compose:<a>,<b>: could not parse both parts of '" + body + "'");
  }
  if (desc.rfind("dsum:", 0) == 0) {
    std::string body = desc.substr(5);
    // try each '+' split point combination left to right
    std::vector<LieHom> parts;
    size_t start = 0;
    while (start < body.size()) {
      bool matched = false;
      for (size_t end = body.size(); end > start; --end) {
        if (end != body.size() && body[end] != '+') continue;
        auto part = try_parse_hom(body.substr(start, end - start));
        if (part) {
          parts.push_back(*part);
          start = end + (end != body.size() ? 1 : 0);
          matched = true;
          break;
        }
      }
      if (!matched) throw std::invalid_argument("dsum:<a>+<b>: could not parse '" + body + "'");
    }
    return direct_sum_hom(parts);
  }
  if (desc.rfind("file:", 0) == 0) return load_hom(desc.substr(5));
  throw std::invalid_argument("unknown homomorphism descriptor: '" + desc + "'");
}

LieHom load_hom(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open homomorphism file: " + path);
  Json j = Json::parse(in);
  std::optional<Mat> dform, cform;
  if (j.contains("domain_form")) dform = mat_from_json(j["domain_form"]);
  if (j.contains("codomain_form")) cform = mat_from_json(j["codomain_form"]);
  Algebra domain = parse_algebra(j.at("domain").get<std::string>(), dform);
  Algebra codomain = parse_algebra(j.at("codomain").get<std::string>(), cform);
  std::vector<Mat> images;
  for (const auto& m : j.at("images")) images.push_back(mat_from_json(m));
  std::string label = j.value("label", std::string("file:") + path);
  return from_images(std::move(domain), std::move(codomain), std::move(images), label);
}

Json hom_to_json(const LieHom& f) {
  Json j;
  j["domain"] = f.domain.name();
  j["codomain"] = f.codomain.name();
  if (f.domain.num_factors() == 1) j["domain_form"] = mat_to_json(f.domain.factors()[0].form);
  if (f.codomain.num_factors() == 1) j["codomain_form"] = mat_to_json(f.codomain.factors()[0].form);
  Json imgs = Json::array();
  for (const auto& m : f.images) imgs.push_back(mat_to_json(m));
  j["images"] = std::move(imgs);
  j["label"] = f.label;
  return j;
}

Json report_to_json(const TightnessReport& r) {
  Json j;
  Json factors = Json::array();
  for (const auto& fc : r.factors) {
    Json f;
    f["dc"] = rat_str(fc.dc);
    f["dc_raw"] = rat_str(fc.dc_raw);
    f["tp_Z"] = rat_str(fc.tp_z);
    f["lambda"] = rat_str(fc.lambda);
    f["rank"] = fc.rank;
    factors.push_back(std::move(f));
  }
  j["factors"] = std::move(factors);
  j["target_rank"] = r.target_rank;
  j["norm_numerator"] = rat_str(r.norm_numerator);
  j["tight"] = r.tight;
  j["positive"] = r.positive;
  j["H1"] = r.h1;
  j["H2"] = r.h2;
  if (r.hull_dim)
    j["hull_dim"] = *r.hull_dim;
  else
    j["hull_dim"] = nullptr;
  if (!r.hull_kind.empty()) j["hull_kind"] = r.hull_kind;
  return j;
}

}  // namespace tightlie
