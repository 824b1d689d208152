#include "cli.hpp"

#include "coxdef/coxdef.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

namespace coxdef::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    parts.push_back(item);
  if (!s.empty() && s.back() == sep)
    parts.emplace_back();
  return parts;
}

std::vector<int> parse_ints(const std::string& s, const char* what) {
  std::vector<int> v;
  if (s.empty())
    return v;
  for (const auto& p : split(s, ',')) {
    std::size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(p, &used);
    } catch (const std::exception&) {
      throw UsageError(std::string(what) + ": '" + p + "' is not an integer");
    }
    if (used != p.size())
      throw UsageError(std::string(what) + ": '" + p + "' is not an integer");
    v.push_back(x);
  }
  return v;
}

std::vector<double> parse_doubles(const std::string& s, const char* what) {
  std::vector<double> v;
  if (s.empty())
    return v;
  for (const auto& p : split(s, ',')) {
    std::size_t used = 0;
    double x = 0;
    try {
      x = std::stod(p, &used);
    } catch (const std::exception&) {
      throw UsageError(std::string(what) + ": '" + p + "' is not a number");
    }
    if (used != p.size())
      throw UsageError(std::string(what) + ": '" + p + "' is not a number");
    v.push_back(x);
  }
  return v;
}

QuadPrismOrders parse_quad_orders(const std::string& s) {
  const auto v = parse_ints(s, "--orders");
  if (v.size() != 4)
    throw UsageError("--orders needs four values n12,n23,n34,n14");
  return QuadPrismOrders(v[0], v[1], v[2], v[3]);
}

json matrix_json(const Mat& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.dim(); ++c)
      row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

json coords_json(const StandardCoordinates& c) {
  return {{"t13", c.t13}, {"t24", c.t24}, {"v23", c.v23}, {"v24", c.v24}, {"v34", c.v34}};
}

json condition_json(const ConditionResult& c) {
  return {{"pass", c.pass}, {"worst", c.worst}, {"failures", c.failures}};
}

// Flags shared by the chart-based subcommands.
struct ChartOptions {
  std::string orders = "3,3,3,3";
  std::string chart = "general";
  double t13 = 4.0, t24 = 4.0;
  double v12 = -1.0, v23 = -1.0, v24 = -1.0, v34 = -1.0, v14 = -1.0, v44 = 0.0;
  double a4 = 1.0;

  void attach(CLI::App* app) {
    app->add_option("--orders", orders, "finite orders n12,n23,n34,n14")->capture_default_str();
    app->add_option("--chart", chart, "general, concurrent or standard")
        ->check(CLI::IsMember({"general", "concurrent", "standard"}))
        ->capture_default_str();
    app->add_option("--t13", t13, "M13 M31 (general, standard)")->capture_default_str();
    app->add_option("--t24", t24, "M24 M42 (general, standard)")->capture_default_str();
    app->add_option("--v12", v12, "concurrent chart")->capture_default_str();
    app->add_option("--v23", v23)->capture_default_str();
    app->add_option("--v24", v24, "general, standard")->capture_default_str();
    app->add_option("--v34", v34)->capture_default_str();
    app->add_option("--v14", v14, "concurrent chart")->capture_default_str();
    app->add_option("--v44", v44, "free coordinate of v_4 (concurrent)")->capture_default_str();
    app->add_option("--a4", a4, "fourth coordinate of alpha_4 for the standard chart")
        ->capture_default_str();
  }

  json inputs() const {
    json j = {{"orders", orders}, {"chart", chart}};
    if (chart == "concurrent") {
      j["v12"] = v12;
      j["v23"] = v23;
      j["v14"] = v14;
      j["v34"] = v34;
      j["v44"] = v44;
    } else {
      j["t13"] = t13;
      j["t24"] = t24;
      j["v23"] = v23;
      j["v24"] = v24;
      j["v34"] = v34;
      if (chart == "standard")
        j["a4"] = a4;
    }
    return j;
  }
};

struct BuiltPoint {
  QuadPrismOrders orders;
  ReflectionSystem sys;
  std::optional<StandardChartPoint> standard;
};

BuiltPoint build_point(const ChartOptions& o) {
  const auto orders = parse_quad_orders(o.orders);
  if (o.chart == "concurrent") {
    ConcurrentChartParams p;
    p.orders = orders;
    p.v12 = o.v12;
    p.v23 = o.v23;
    p.v14 = o.v14;
    p.v34 = o.v34;
    p.v44 = o.v44;
    return {orders, build_concurrent(p), std::nullopt};
  }
  if (o.chart == "standard") {
    const auto pt = build_standard(orders, StandardCoordinates{o.t13, o.t24, o.v23, o.v24, o.v34});
    return {orders, realize_representation(pt, o.a4), pt};
  }
  GeneralChartParams p;
  p.orders = orders;
  p.t13 = o.t13;
  p.t24 = o.t24;
  p.v23 = o.v23;
  p.v24 = o.v24;
  p.v34 = o.v34;
  return {orders, build_general(p), std::nullopt};
}

json standard_json(const StandardChartPoint& pt) {
  return {{"a1", pt.a1}, {"a2", pt.a2}, {"a3", pt.a3}, {"a4v44", pt.a4v44}};
}

json relation_residuals(const RelationReport& rep) {
  json gens = json::array();
  for (const auto& g : rep.generators)
    gens.push_back({{"generator", g.i + 1}, {"residual", g.residual}, {"pass", g.pass}});
  json pairs = json::array();
  for (const auto& p : rep.pairs) {
    json j = {{"pair", cycle_label({p.pair.i, p.pair.j})}, {"order", p.order.to_string()}};
    if (p.order.is_infinite()) {
      j["product"] = p.value;
      j["plane_trace"] = p.plane_trace;
    } else {
      j["residual"] = p.value;
    }
    j["pass"] = p.pass;
    pairs.push_back(j);
  }
  return {{"generators", gens}, {"pairs", pairs}};
}

json vinberg_json(const VinbergReport& rep) {
  return {{"C1", condition_json(rep.c1)}, {"C2", condition_json(rep.c2)},
          {"C3", condition_json(rep.c3)}, {"C4", condition_json(rep.c4)},
          {"C5", condition_json(rep.c5)}, {"C5_certificate", rep.c5_certificate}};
}

json envelope(const std::string& command, json inputs) {
  return {{"command", command},   {"inputs", std::move(inputs)}, {"results", json::object()},
          {"residuals", json::object()}, {"verdicts", json::object()}, {"seed", nullptr}};
}

void emit(const json& doc, const std::string& file, std::ostream& out) {
  if (file.empty()) {
    out << doc.dump(2) << '\n';
    return;
  }
  std::ofstream f(file);
  if (!f)
    throw UsageError("cannot open " + file + " for writing");
  f << doc.dump(2) << '\n';
}

std::string csv_number(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

int cmd_relations(const ChartOptions& o, double tol, const std::string& file, std::ostream& out) {
  const auto pt = build_point(o);
  const auto edges = pt.orders.edge_orders();
  const auto rel = verify_relations(pt.sys, edges, tol);
  const auto vin = check_vinberg(pt.sys, edges);
  const auto m = cartan_of(pt.sys);

  json doc = envelope("relations", o.inputs());
  doc["inputs"]["tol"] = tol;
  doc["results"] = {{"cartan", matrix_json(m.matrix())},
                    {"T13", m.product(0, 2)},
                    {"T24", m.product(1, 3)}};
  if (pt.standard)
    doc["results"]["standard"] = standard_json(*pt.standard);
  doc["residuals"] = relation_residuals(rel);
  doc["residuals"]["worst_finite"] = rel.worst_finite_residual();
  doc["verdicts"] = {{"relations", rel.all_pass()},
                     {"vinberg", vin.all_pass()},
                     {"pass", rel.all_pass() && vin.all_pass()}};
  emit(doc, file, out);
  return rel.all_pass() && vin.all_pass() ? kExitPass : kExitCheckFailed;
}

int cmd_vinberg(const ChartOptions& o, double tol, const std::string& file, std::ostream& out) {
  const auto pt = build_point(o);
  const auto vin = check_vinberg(pt.sys, pt.orders.edge_orders(), tol);
  const auto m = cartan_of(pt.sys);
  json doc = envelope("vinberg", o.inputs());
  doc["inputs"]["tol"] = tol;
  doc["results"] = {{"cartan", matrix_json(m.matrix())},
                    {"semisimple", is_semisimple(pt.sys)}};
  doc["residuals"] = vinberg_json(vin);
  doc["verdicts"] = {{"pass", vin.all_pass()}};
  emit(doc, file, out);
  return vin.all_pass() ? kExitPass : kExitCheckFailed;
}

int cmd_cocompact(const ChartOptions& o, const std::string& file, std::ostream& out) {
  const auto pt = build_point(o);
  const auto m = cartan_of(pt.sys);
  const bool cc = is_convex_cocompact(m, pt.orders);
  json doc = envelope("cocompact", o.inputs());
  doc["results"] = {{"T13", m.product(0, 2)}, {"T24", m.product(1, 3)}};
  doc["verdicts"] = {{"convex_cocompact", cc}};
  emit(doc, file, out);
  return kExitPass;
}

int cmd_invariants(const ChartOptions& o, double tol, const std::string& file, std::ostream& out) {
  const auto pt = build_point(o);
  const auto inv = cyclic_invariants(cartan_of(pt.sys));
  const auto ids = derived_invariant_identities(inv, pt.orders, tol);
  json doc = envelope("invariants", o.inputs());
  doc["inputs"]["tol"] = tol;
  json values = json::object();
  for (const auto& [c, v] : inv.values())
    values[cycle_label(c)] = v;
  doc["results"] = {{"cyclic_invariants", values}};
  json res = json::array();
  for (const auto& r : ids.residuals)
    res.push_back({{"identity", r.name}, {"lhs", r.lhs}, {"rhs", r.rhs},
                   {"residual", r.residual}, {"pass", r.pass}});
  doc["residuals"] = {{"identities", res}, {"worst", ids.worst()}};
  doc["verdicts"] = {{"pass", ids.all_pass()}};
  emit(doc, file, out);
  return ids.all_pass() ? kExitPass : kExitCheckFailed;
}

struct ScanOptions {
  std::string orders = "3,3,3,3";
  double t13 = 6.0, t24 = 6.0;
  std::size_t samples = 100000;
  std::uint64_t seed = 1;
  std::string box = "-10,-0.01";
  std::size_t buckets = 20;
  std::string out = "json";
};

json record_json(const ScanRecord& r) {
  return {{"v23", r.coords.v23},  {"v24", r.coords.v24},         {"v34", r.coords.v34},
          {"a4v44", r.a4v44},     {"det_M", r.det_m},            {"T13_prod", r.t13_prod},
          {"T24_prod", r.t24_prod}};
}

int cmd_scan(const ScanOptions& o, const std::string& file, std::ostream& out) {
  const auto box = parse_doubles(o.box, "--box");
  if (box.size() != 2)
    throw UsageError("--box needs two values lo,hi");
  ScanConfig cfg;
  cfg.orders = parse_quad_orders(o.orders);
  cfg.t13 = o.t13;
  cfg.t24 = o.t24;
  cfg.samples = o.samples;
  cfg.seed = o.seed;
  cfg.box_lo = box[0];
  cfg.box_hi = box[1];
  cfg.buckets = o.buckets;
  cfg.keep_records = o.out == "csv";
  const auto r = scan_a4v44(cfg);

  if (o.out == "csv") {
    std::ostringstream csv;
    csv << "v23,v24,v34,a4v44,det_M,T13_prod,T24_prod\n";
    for (const auto& rec : r.records)
      csv << csv_number(rec.coords.v23) << ',' << csv_number(rec.coords.v24) << ','
          << csv_number(rec.coords.v34) << ',' << csv_number(rec.a4v44) << ','
          << csv_number(rec.det_m) << ',' << csv_number(rec.t13_prod) << ','
          << csv_number(rec.t24_prod) << '\n';
    if (file.empty()) {
      out << csv.str();
    } else {
      std::ofstream f(file);
      if (!f)
        throw UsageError("cannot open " + file + " for writing");
      f << csv.str();
    }
    return kExitPass;
  }

  json doc = envelope("scan", {{"orders", o.orders},
                               {"t13", o.t13},
                               {"t24", o.t24},
                               {"samples", o.samples},
                               {"box", box},
                               {"buckets", o.buckets}});
  doc["seed"] = o.seed;
  doc["results"] = {{"evaluated", r.evaluated}, {"rejected", r.rejected}};
  if (r.evaluated > 0) {
    doc["results"]["min"] = r.min;
    doc["results"]["max"] = r.max;
    doc["results"]["argmin"] = record_json(r.argmin);
    doc["results"]["argmax"] = record_json(r.argmax);
    doc["results"]["histogram"] = {{"edges", r.histogram.edges}, {"counts", r.histogram.counts}};
  }
  doc["verdicts"] = {{"min_positive", r.evaluated > 0 && r.min > 0.0}};
  emit(doc, file, out);
  return kExitPass;
}

struct OrbifoldOptions {
  std::string chi = "1";
  std::string cones;
  std::string corners;
  int boundary = 0;
};

Rational parse_rational(const std::string& s) {
  const auto parts = split(s, '/');
  if (parts.size() == 1)
    return Rational(parse_ints(parts[0], "--chi").at(0));
  if (parts.size() == 2) {
    const int den = parse_ints(parts[1], "--chi").at(0);
    if (den == 0)
      throw UsageError("--chi has zero denominator");
    return Rational(parse_ints(parts[0], "--chi").at(0), den);
  }
  throw UsageError("--chi must be an integer or p/q");
}

int cmd_orbifold(const OrbifoldOptions& o, const std::string& file, std::ostream& out) {
  OrbifoldSignature sig;
  sig.chi_underlying = parse_rational(o.chi);
  sig.cone_orders = parse_ints(o.cones, "--cones");
  sig.corner_orders = parse_ints(o.corners, "--corners");
  sig.full_boundary_count = o.boundary;
  sig.validate();

  json doc = envelope("orbifold", {{"chi_underlying", to_string(sig.chi_underlying)},
                                   {"cones", sig.cone_orders},
                                   {"corners", sig.corner_orders},
                                   {"boundary", sig.full_boundary_count}});
  const Rational chi = euler_characteristic(sig);
  doc["results"]["chi"] = to_string(chi);
  const bool hyperbolic = chi < 0;
  doc["results"]["teichmuller_dim"] = hyperbolic ? json(teichmuller_dim(sig)) : json(nullptr);
  doc["results"]["d_tp"] = hyperbolic ? json(d_tp(sig)) : json(nullptr);
  doc["results"]["cg05_dim"] =
      hyperbolic && sig.full_boundary_count == 0 ? json(cg05_dim(sig)) : json(nullptr);
  doc["verdicts"] = {{"hyperbolic", hyperbolic}};
  emit(doc, file, out);
  return kExitPass;
}

struct SimplexOptions {
  std::size_t n = 3;
  std::string orders;
  std::string free;
};

int cmd_simplex(const SimplexOptions& o, double tol, const std::string& file, std::ostream& out) {
  SimplexChartParams p;
  p.n = o.n;
  if (p.n < 1 || p.n + 1 > kMaxDim)
    throw UsageError("--n must be in 1.." + std::to_string(kMaxDim - 1));
  const std::size_t sides = p.n + 1;
  p.orders = EdgeOrders(sides);
  std::vector<int> ord = parse_ints(o.orders, "--orders");
  if (ord.empty())
    ord.assign(sides * (sides - 1) / 2, 3);
  if (ord.size() != sides * (sides - 1) / 2)
    throw UsageError("--orders needs " + std::to_string(sides * (sides - 1) / 2) +
                     " values (upper triangle, row by row)");
  std::size_t k = 0;
  for (std::size_t i = 0; i < sides; ++i)
    for (std::size_t j = i + 1; j < sides; ++j)
      p.orders.set(i, j, Order::finite(ord[k++]));

  std::vector<double> free = parse_doubles(o.free, "--free");
  if (free.empty())
    free.assign(p.parameter_count(), -1.0);
  if (free.size() != p.parameter_count())
    throw UsageError("--free needs " + std::to_string(p.parameter_count()) +
                     " values, one per pair i<j off the first side with order > 2");
  k = 0;
  for (std::size_t i = 1; i < sides; ++i)
    for (std::size_t j = i + 1; j < sides; ++j)
      if (p.orders.at(i, j).value() != 2)
        p.free_entries[{i, j}] = free[k++];

  const auto sys = build_simplex(p);
  const auto rel = verify_relations(sys, p.orders, tol);
  const auto vin = check_vinberg(sys, p.orders);
  json doc = envelope("simplex", {{"n", p.n}, {"orders", ord}, {"free", free}});
  doc["inputs"]["tol"] = tol;
  doc["results"] = {{"parameter_count", p.parameter_count()},
                    {"cartan", matrix_json(cartan_of(sys).matrix())}};
  doc["residuals"] = relation_residuals(rel);
  doc["verdicts"] = {{"relations", rel.all_pass()},
                     {"vinberg", vin.all_pass()},
                     {"pass", rel.all_pass() && vin.all_pass()}};
  emit(doc, file, out);
  return rel.all_pass() && vin.all_pass() ? kExitPass : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Deformation spaces of the Coxeter orbifold D^2(;n12,n23,n34,n14) x R", "coxdef"};
  app.require_subcommand(1);
  std::string file;
  app.add_option("--file", file, "write output here instead of stdout");

  ChartOptions chart;
  double tol = kTolRelation;
  auto* relations = app.add_subcommand("relations", "verify Coxeter relations and Vinberg's conditions");
  chart.attach(relations);
  relations->add_option("--tol", tol, "Frobenius tolerance")->capture_default_str();

  ChartOptions vchart;
  double vtol = kTolAlg;
  auto* vinberg = app.add_subcommand("vinberg", "report Vinberg's conditions C1-C5");
  vchart.attach(vinberg);
  vinberg->add_option("--tol", vtol)->capture_default_str();

  ChartOptions cchart;
  auto* cocompact = app.add_subcommand("cocompact", "convex cocompactness verdict");
  cchart.attach(cocompact);

  ChartOptions ichart;
  double itol = 1e-9;
  auto* invariants = app.add_subcommand("invariants", "cyclic invariants and the eleven identities");
  ichart.attach(invariants);
  invariants->add_option("--tol", itol, "relative tolerance")->capture_default_str();

  ScanOptions scan;
  auto* scan_cmd = app.add_subcommand("scan", "sample a4 v44 over (v23, v24, v34)");
  scan_cmd->add_option("--orders", scan.orders)->capture_default_str();
  scan_cmd->add_option("--t13", scan.t13)->capture_default_str();
  scan_cmd->add_option("--t24", scan.t24)->capture_default_str();
  scan_cmd->add_option("--samples", scan.samples)->capture_default_str();
  scan_cmd->add_option("--seed", scan.seed)->capture_default_str();
  scan_cmd->add_option("--box", scan.box, "bounds lo,hi for each of v23, v24, v34")
      ->capture_default_str();
  scan_cmd->add_option("--buckets", scan.buckets)->capture_default_str();
  scan_cmd->add_option("--out", scan.out)
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  OrbifoldOptions orb;
  auto* orbifold = app.add_subcommand("orbifold", "Euler characteristic and dimension counts");
  orbifold->add_option("--chi", orb.chi, "Euler characteristic of the underlying surface")
      ->capture_default_str();
  orbifold->add_option("--cones", orb.cones, "cone point orders, comma separated");
  orbifold->add_option("--corners", orb.corners, "corner reflector orders, comma separated");
  orbifold->add_option("--boundary", orb.boundary, "full boundary components")
      ->capture_default_str();

  SimplexOptions simp;
  double stol = kTolRelation;
  auto* simplex = app.add_subcommand("simplex", "Coxeter n-simplex chart");
  simplex->add_option("--n", simp.n)->capture_default_str();
  simplex->add_option("--orders", simp.orders,
                      "orders n_ij for i<j over the n+1 sides, row by row (default all 3)");
  simplex->add_option("--free", simp.free,
                      "free entries v_ij, 2<=i<j, row by row, skipping order-2 pairs (default -1)");
  simplex->add_option("--tol", stol)->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (relations->parsed())
      return cmd_relations(chart, tol, file, out);
    if (vinberg->parsed())
      return cmd_vinberg(vchart, vtol, file, out);
    if (cocompact->parsed())
      return cmd_cocompact(cchart, file, out);
    if (invariants->parsed())
      return cmd_invariants(ichart, itol, file, out);
    if (scan_cmd->parsed())
      return cmd_scan(scan, file, out);
    if (orbifold->parsed())
      return cmd_orbifold(orb, file, out);
    if (simplex->parsed())
      return cmd_simplex(simp, stol, file, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace coxdef::cli
