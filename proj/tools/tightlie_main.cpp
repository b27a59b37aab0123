// tightlie: certify tightness/positivity of Hermitian Lie algebra
// homomorphisms in exact arithmetic and probe Bergmann-cocycle geometry on
// bounded symmetric domain realizations.

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tightlie/domain.hpp"
#include "tightlie/report.hpp"
#include "tightlie/search.hpp"

using namespace tightlie;
namespace geom = tightlie::geom;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;

struct Options {
  std::string format = "json";  // json | csv | pretty
  uint64_t seed = 0;
  int restarts = 32;
  int iters = 6000;
  int samples = 1000;
  double tol_transverse = 1e-8;
  double tol_shilov = 1e-6;
  std::string out_path;
};

geom::Tolerances tolerances(const Options& o) {
  geom::Tolerances t;
  t.transverse = o.tol_transverse;
  t.shilov = o.tol_shilov;
  return t;
}

void write_output(const Options& o, const std::string& text) {
  if (o.out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(o.out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + o.out_path);
  out << text;
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json point_to_json(const geom::BoundedDomain& d, const geom::CMat& z) {
  auto c2j = [](geom::Cplx v) { return Json::array({v.real(), v.imag()}); };
  switch (d.kind) {
    case geom::BoundedDomain::Kind::Disk:
      return c2j(z(0, 0));
    case geom::BoundedDomain::Kind::Polydisk: {
      Json row = Json::array();
      for (int i = 0; i < d.r; ++i) row.push_back(c2j(z(0, i)));
      return row;
    }
    default: {
      Json rows = Json::array();
      for (int i = 0; i < z.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < z.cols(); ++j) row.push_back(c2j(z(i, j)));
        rows.push_back(std::move(row));
      }
      return rows;
    }
  }
}

geom::CMat point_from_json(const geom::BoundedDomain& d, const Json& j) {
  auto j2c = [](const Json& v) {
    if (!v.is_array() || v.size() != 2)
      throw std::invalid_argument("complex number must be [re, im]");
    return geom::Cplx(v[0].get<double>(), v[1].get<double>());
  };
  geom::CMat z(d.rows(), d.cols());
  switch (d.kind) {
    case geom::BoundedDomain::Kind::Disk:
      z(0, 0) = j2c(j);
      return z;
    case geom::BoundedDomain::Kind::Polydisk: {
      if (!j.is_array() || static_cast<int>(j.size()) != d.r)
        throw std::invalid_argument("polydisk point needs r complex coordinates");
      for (int i = 0; i < d.r; ++i) z(0, i) = j2c(j[i]);
      return z;
    }
    default: {
      if (!j.is_array() || static_cast<int>(j.size()) != d.rows())
        throw std::invalid_argument("matrix point has wrong row count");
      for (int i = 0; i < d.rows(); ++i) {
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != d.cols())
          throw std::invalid_argument("matrix point has wrong column count");
        for (int k = 0; k < d.cols(); ++k) z(i, k) = j2c(j[i][k]);
      }
      return z;
    }
  }
}

Json header(const Options& o, const std::string& verb) {
  Json j;
  j["verb"] = verb;
  j["seed"] = o.seed;
  return j;
}

std::string render(const Options& o, const Json& j) {
  if (o.format == "pretty") return j.dump(2);
  return j.dump();
}

// --- verbs -----------------------------------------------------------------

int run_algebra_info(const Options& o, const std::string& target) {
  Algebra g = parse_algebra(target);
  Json j = header(o, "algebra-info");
  j["name"] = g.name();
  j["ambient"] = g.ambient();
  j["dim"] = g.dim();
  j["rank"] = g.rank();
  j["tube"] = g.tube();
  j["factors"] = Json::array();
  for (const auto& f : g.factors()) {
    Json fj;
    fj["name"] = f.name;
    fj["family"] = f.family == Family::SpR ? "sp" : "su";
    fj["ambient"] = f.ambient;
    fj["dim"] = f.dim();
    fj["dim_k"] = f.k_dim;
    fj["rank"] = f.rank;
    fj["tube"] = f.tube();
    j["factors"].push_back(std::move(fj));
  }
  j["center_of_k_dim"] = g.center_of_k().size();
  j["Z"] = mat_to_json(g.Z());
  write_output(o, render(o, j));
  return kExitOk;
}

int run_hom_check(const Options& o, const std::string& target, const std::string& dump_path) {
  LieHom f = parse_hom(target);
  Json j = header(o, "hom-check");
  j["target"] = target;
  j["label"] = f.label;
  j["domain"] = f.domain.name();
  j["codomain"] = f.codomain.name();
  HomWitness w = check_homomorphism(f);
  j["homomorphism"] = w.ok;
  if (!w.ok) {
    Json wit;
    wit["pair"] = Json::array({w.i, w.j});
    wit["residual"] = mat_to_json(w.residual);
    j["witness"] = std::move(wit);
    write_output(o, render(o, j));
    return kExitValidation;
  }
  bool cartan = check_cartan(f);
  j["cartan"] = cartan;
  if (!cartan) {
    write_output(o, render(o, j));
    return kExitValidation;
  }
  j["report"] = report_to_json(analyze(f));
  if (!dump_path.empty()) {
    std::ofstream out(dump_path);
    out << hom_to_json(f).dump(2) << "\n";
  }
  write_output(o, render(o, j));
  return kExitOk;
}

int run_hom_hull(const Options& o, const std::string& target) {
  LieHom f = parse_hom(target);
  HomWitness w = check_homomorphism(f);
  if (!w.ok) {
    std::cerr << "hom-hull: '" << target << "' is not a homomorphism (basis pair " << w.i << ","
              << w.j << ")\n";
    return kExitValidation;
  }
  HullResult h = hermitian_hull(f);
  Json j = header(o, "hom-hull");
  j["target"] = target;
  j["codomain"] = f.codomain.name();
  j["kind"] = h.kind;
  j["tight"] = h.tight;
  if (!h.tight) j["warning"] = "map is not tight; closure reported anyway";
  j["dim"] = h.dim;
  auto iso = isotypic_decomposition(f);
  j["isotypic"] = iso;
  // hull blocks are indexed by the distinct component sizes (repeated
  // isomorphic components fold into one diagonal block)
  std::vector<int> distinct;
  for (int n : iso)
    if (distinct.empty() || distinct.back() != n) distinct.push_back(n);
  size_t blocks = 0;
  for (int n : distinct) blocks += static_cast<size_t>(n) * (2 * n + 1);
  j["hull_blocks"] = distinct;
  j["hull_block_dim_sum"] = blocks;
  write_output(o, render(o, j));
  return kExitOk;
}

int run_cocycle_eval(const Options& o, const std::string& domain, const std::string& points,
                     const std::string& points_file) {
  geom::BoundedDomain d = geom::BoundedDomain::parse(domain);
  Json pj;
  if (!points_file.empty()) {
    std::ifstream in(points_file);
    if (!in) throw std::invalid_argument("cannot open points file: " + points_file);
    pj = Json::parse(in);
  } else {
    pj = Json::parse(points);
  }
  if (!pj.is_array() || pj.size() != 3)
    throw std::invalid_argument("--points must be a JSON array of three points");
  geom::CMat x = point_from_json(d, pj[0]), y = point_from_json(d, pj[1]),
             z = point_from_json(d, pj[2]);
  geom::CocycleEval e = geom::bergmann_cocycle(d, x, y, z, tolerances(o));
  Json j = header(o, "cocycle-eval");
  j["domain"] = d.name();
  j["beta"] = e.beta;
  j["arg_parts"] = Json::array({e.arg_parts[0], e.arg_parts[1], e.arg_parts[2]});
  j["min_h"] = e.min_transversality;
  Json cls = Json::array();
  for (const auto* pt : {&x, &y, &z}) {
    geom::DomainPoint dp = geom::classify(d, *pt, tolerances(o));
    cls.push_back(dp.cls == geom::PointClass::Interior
                      ? "interior"
                      : (dp.cls == geom::PointClass::Shilov ? "shilov" : "other_boundary"));
  }
  j["classification"] = std::move(cls);
  write_output(o, render(o, j));
  return kExitOk;
}

int run_cocycle_sup(const Options& o, const std::string& domain, bool serial) {
  geom::BoundedDomain d = geom::BoundedDomain::parse(domain);
  geom::SupResult r = serial
                          ? geom::sup_search_serial(d, o.restarts, o.iters, o.seed, tolerances(o))
                          : geom::sup_search(d, o.restarts, o.iters, o.seed, tolerances(o));
  Json j = header(o, "cocycle-sup");
  j["domain"] = d.name();
  j["restarts"] = o.restarts;
  j["iters"] = o.iters;
  j["sup"] = r.best_beta;
  j["bound"] = d.rank() / 2.0;
  j["best_restart"] = r.best_restart;
  j["evals"] = r.evals;
  Json arg = Json::array();
  for (const auto& pt : r.argmax) arg.push_back(point_to_json(d, pt));
  j["argmax"] = std::move(arg);
  write_output(o, render(o, j));
  return kExitOk;
}

int run_shilov_scan(const Options& o, const std::string& domain, bool serial) {
  geom::BoundedDomain d = geom::BoundedDomain::parse(domain);
  geom::ScanResult r = serial
                           ? geom::integrality_scan_serial(d, o.samples, o.seed, tolerances(o))
                           : geom::integrality_scan(d, o.samples, o.seed, tolerances(o));
  if (o.format == "csv") {
    std::ostringstream os;
    os << "beta,min_h,lattice_distance\n";
    for (const auto& row : r.rows)
      os << fmt_double(row.beta) << "," << fmt_double(row.min_h) << ","
         << fmt_double(row.lattice_distance) << "\n";
    write_output(o, os.str());
    return kExitOk;
  }
  Json j = header(o, "shilov-scan");
  j["domain"] = d.name();
  j["samples"] = o.samples;
  j["accepted"] = r.rows.size();
  j["attempted"] = r.attempted;
  j["sup_abs_beta"] = r.sup_abs;
  Json arg = Json::array();
  for (const auto& pt : r.argmax) arg.push_back(point_to_json(d, pt));
  j["argmax"] = std::move(arg);
  double maxdist = 0;
  for (const auto& row : r.rows) maxdist = std::max(maxdist, row.lattice_distance);
  j["max_lattice_distance"] = maxdist;
  const int bins = 41;
  std::vector<long> counts(bins, 0);
  double lo = -d.rank() / 2.0, hi = d.rank() / 2.0;
  for (const auto& row : r.rows) {
    int b = static_cast<int>((row.beta - lo) / (hi - lo) * bins);
    b = std::max(0, std::min(bins - 1, b));
    ++counts[static_cast<size_t>(b)];
  }
  j["histogram"] = Json();
  j["histogram"]["lo"] = lo;
  j["histogram"]["hi"] = hi;
  j["histogram"]["counts"] = counts;
  write_output(o, render(o, j));
  return kExitOk;
}

int run_boundary_trace(const Options& o, const std::string& target, int directions, double tmax) {
  LieHom f = parse_hom(target);
  if (!f.domain.same_presentation(sl2()))
    throw std::invalid_argument("boundary-trace: homomorphism must start from sl2");
  if (f.codomain.num_factors() != 1 || f.codomain.factors()[0].family != Family::SpR)
    throw std::invalid_argument("boundary-trace: symplectic codomains only");
  HomWitness w = check_homomorphism(f);
  if (!w.ok) {
    std::cerr << "boundary-trace: '" << target << "' is not a homomorphism\n";
    return kExitValidation;
  }
  const auto& fac = f.codomain.factors()[0];
  const int n = fac.n;
  auto frame = standard_symplectic_frame(fac);  // F^{-1} (2Z) F = J_std
  Eigen::MatrixXd fm(2 * n, 2 * n);
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2 * n; ++j) fm(i, j) = frame[static_cast<size_t>(i)][static_cast<size_t>(j)];
  Eigen::MatrixXd fmi = fm.inverse();

  geom::BoundedDomain d = geom::BoundedDomain::siegel(n);
  geom::Tolerances tol = tolerances(o);

  Json rays = Json::array();
  std::vector<geom::CMat> limits;
  double worst_residual = 0;
  for (int k = 0; k < directions; ++k) {
    double theta = 2.0 * M_PI * (k + 0.137) / directions;
    // exact image of the tangent direction, then numerically framed
    Eigen::MatrixXd ximg(2 * n, 2 * n);
    {
      Mat imgH = f.images[1], imgS = f.images[2];
      for (int i = 0; i < 2 * n; ++i)
        for (int j = 0; j < 2 * n; ++j)
          ximg(i, j) = std::cos(theta) * rat_double(imgH.at(i, j).re) +
                       std::sin(theta) * rat_double(imgS.at(i, j).re);
    }
    Eigen::MatrixXd y = fmi * ximg * fm;  // p-element [[A,B],[B,-A]] of sp_std
    Eigen::MatrixXd a = 0.5 * (y.topLeftCorner(n, n) + y.topLeftCorner(n, n).transpose());
    Eigen::MatrixXd b = 0.5 * (y.topRightCorner(n, n) + y.topRightCorner(n, n).transpose());
    geom::CMat tangent = a.cast<geom::Cplx>() + geom::Cplx(0, 1) * b.cast<geom::Cplx>();
    geom::DomainPoint lim = geom::boundary_limit(d, tangent, tmax, tol);
    limits.push_back(lim.z);
    worst_residual = std::max(worst_residual, lim.shilov_residual);
    Json rj;
    rj["theta"] = theta;
    rj["shilov_residual"] = lim.shilov_residual;
    rj["class"] = lim.cls == geom::PointClass::Shilov ? "shilov" : "other";
    rays.push_back(std::move(rj));
  }
  double min_h = 1e300;
  long long pairs = 0;
  for (size_t i = 0; i < limits.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      min_h = std::min(min_h, std::abs(geom::h_kernel(d, limits[i], limits[j])));
      ++pairs;
    }
  Json j = header(o, "boundary-trace");
  j["hom"] = target;
  j["directions"] = directions;
  j["tmax"] = tmax;
  j["rays"] = std::move(rays);
  j["max_shilov_residual"] = worst_residual;
  j["pairs"] = pairs;
  j["min_pair_h"] = min_h;
  j["all_pairs_transverse"] = min_h > 1e-3;
  write_output(o, render(o, j));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* threads = std::getenv("TIGHTLIE_THREADS")) {
    int t = std::atoi(threads);
    if (t > 0) omp_set_num_threads(t);
  }

  CLI::App app{"tightlie: exact tightness certification for Hermitian Lie algebra "
               "homomorphisms and Bergmann cocycle experiments"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--seed", o.seed, "deterministic seed (echoed in reports)")->capture_default_str();
  app.add_option("--restarts", o.restarts, "optimizer restarts")->capture_default_str();
  app.add_option("--iters", o.iters, "optimizer iteration budget per restart")
      ->capture_default_str();
  app.add_option("--samples", o.samples, "scan sample count")->capture_default_str();
  app.add_option("--tol-transverse", o.tol_transverse, "|h| transversality threshold")
      ->capture_default_str();
  app.add_option("--tol-shilov", o.tol_shilov, "Shilov membership residual")
      ->capture_default_str();
  app.add_option("--out", o.out_path, "write the report to a file instead of stdout");
  bool json_flag = false, csv_flag = false, pretty_flag = false;
  app.add_flag("--json", json_flag, "machine-readable JSON output (default)");
  app.add_flag("--csv", csv_flag, "CSV output (shilov-scan only)");
  app.add_flag("--pretty", pretty_flag, "indented human-readable output");

  std::string target, domain, points, points_file, dump_path;
  int directions = 20;
  double tmax = 20.0;
  bool serial = false;

  auto* info = app.add_subcommand("algebra-info", "describe an algebra");
  info->fallthrough();
  info->add_option("target", target, "algebra descriptor, e.g. sp(4,R) or su(1,2)")->required();

  auto* hcheck = app.add_subcommand("hom-check", "validate a homomorphism and report tightness");
  hcheck->fallthrough();
  hcheck->add_option("target", target, "homomorphism descriptor, e.g. irrep:sp(8)")->required();
  hcheck->add_option("--dump-hom", dump_path, "write the map in from_images JSON form");

  auto* hhull = app.add_subcommand("hom-hull", "Hermitian hull / generated subalgebra");
  hhull->fallthrough();
  hhull->add_option("target", target, "homomorphism descriptor (domain sl2)")->required();

  auto* ceval = app.add_subcommand("cocycle-eval", "evaluate the Bergmann cocycle on a triple");
  ceval->fallthrough();
  ceval->add_option("--domain", domain, "disk | polydisk:R | ball:P,Q | siegel:N")->required();
  ceval->add_option("--points", points, "JSON array of three points");
  ceval->add_option("--points-file", points_file, "file holding the JSON array");

  auto* csup = app.add_subcommand("cocycle-sup", "maximize beta over interior triples");
  csup->fallthrough();
  csup->add_option("--domain", domain)->required();
  csup->add_flag("--serial", serial, "use the serial reference kernel");

  auto* scan = app.add_subcommand("shilov-scan", "integrality scan over random Shilov triples");
  scan->fallthrough();
  scan->add_option("--domain", domain)->required();
  scan->add_flag("--serial", serial, "use the serial reference kernel");

  auto* btrace = app.add_subcommand("boundary-trace",
                                    "exponentiate sl2 boundary directions through a hom");
  btrace->fallthrough();
  btrace->add_option("--hom", target, "homomorphism descriptor (default irrep:sp(4))");
  btrace->add_option("--directions", directions)->capture_default_str();
  btrace->add_option("--tmax", tmax)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  int format_count = (json_flag ? 1 : 0) + (csv_flag ? 1 : 0) + (pretty_flag ? 1 : 0);
  if (format_count > 1) {
    std::cerr << "choose at most one of --json/--csv/--pretty\n";
    return kExitUsage;
  }
  if (csv_flag) o.format = "csv";
  if (pretty_flag) o.format = "pretty";
  if (csv_flag && !scan->parsed()) {
    std::cerr << "--csv is only supported for shilov-scan\n";
    return kExitUsage;
  }

  try {
    if (info->parsed()) return run_algebra_info(o, target);
    if (hcheck->parsed()) return run_hom_check(o, target, dump_path);
    if (hhull->parsed()) return run_hom_hull(o, target);
    if (ceval->parsed()) {
      if (points.empty() && points_file.empty()) {
        std::cerr << "cocycle-eval needs --points or --points-file\n";
        return kExitUsage;
      }
      return run_cocycle_eval(o, domain, points, points_file);
    }
    if (csup->parsed()) return run_cocycle_sup(o, domain, serial);
    if (scan->parsed()) return run_shilov_scan(o, domain, serial);
    if (btrace->parsed())
      return run_boundary_trace(o, target.empty() ? "irrep:sp(4)" : target, directions, tmax);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
