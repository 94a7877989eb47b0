#include "decostab/jobs.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "decostab/errors.hpp"
#include "decostab/fan.hpp"
#include "decostab/instability.hpp"
#include "decostab/stability.hpp"
#include "decostab/version.hpp"
#include "decostab/weights.hpp"

namespace decostab {

namespace {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Parsing helpers.  Every schema problem becomes a UsageError naming the
// offending field.

[[noreturn]] void usage(const std::string& message) { throw UsageError(message); }

const json& require_field(const json& obj, const char* key, const char* where) {
  if (!obj.is_object()) usage(std::string(where) + " must be a JSON object");
  auto it = obj.find(key);
  if (it == obj.end()) {
    usage(std::string(where) + " is missing the field '" + key + "'");
  }
  return *it;
}

const json* optional_field(const json& obj, const char* key) {
  if (!obj.is_object()) return nullptr;
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

long parse_long(const json& v, const char* where) {
  if (!v.is_number_integer()) usage(std::string(where) + " must be an integer");
  return static_cast<long>(v.get<std::int64_t>());
}

int parse_int(const json& v, const char* where) { return static_cast<int>(parse_long(v, where)); }

long field_long(const json& obj, const char* key, const char* where) {
  return parse_long(require_field(obj, key, where), key);
}

int field_int(const json& obj, const char* key, const char* where) {
  return parse_int(require_field(obj, key, where), key);
}

int field_int_or(const json& obj, const char* key, int fallback) {
  const json* v = optional_field(obj, key);
  return v ? parse_int(*v, key) : fallback;
}

bool field_bool_or(const json& obj, const char* key, bool fallback) {
  const json* v = optional_field(obj, key);
  if (!v) return fallback;
  if (!v->is_boolean()) usage(std::string("'") + key + "' must be a boolean");
  return v->get<bool>();
}

mpz_class parse_mpz(const json& v, const char* where) {
  if (v.is_number_integer()) {
    return mpz_class(static_cast<long>(v.get<std::int64_t>()));
  }
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    std::size_t pos = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
    if (pos == s.size()) usage(std::string(where) + ": empty integer string");
    for (std::size_t i = pos; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') {
        usage(std::string(where) + ": '" + s + "' is not an integer");
      }
    }
    return mpz_class(s, 10);
  }
  usage(std::string(where) + " must be an integer or integer string");
}

mpz_class field_mpz(const json& obj, const char* key, const char* where) {
  return parse_mpz(require_field(obj, key, where), key);
}

mpz_class field_mpz_or(const json& obj, const char* key, const mpz_class& fallback) {
  const json* v = optional_field(obj, key);
  return v ? parse_mpz(*v, key) : fallback;
}

Rational parse_rational(const json& v, const char* where) {
  if (v.is_number_integer()) {
    return Rational(static_cast<long>(v.get<std::int64_t>()));
  }
  if (v.is_string()) {
    try {
      return Rational::from_string(v.get<std::string>());
    } catch (const ParameterError& e) {
      usage(std::string(where) + ": " + e.what());
    }
  }
  usage(std::string(where) + " must be an exact rational: an integer or a \"p/q\" string");
}

RatVector parse_rat_vector(const json& v, const char* where) {
  if (!v.is_array()) usage(std::string(where) + " must be an array of rationals");
  RatVector out;
  out.reserve(v.size());
  for (const auto& entry : v) out.push_back(parse_rational(entry, where));
  return out;
}

IntVector parse_int_vector(const json& v, const char* where) {
  if (!v.is_array()) usage(std::string(where) + " must be an array of integers");
  IntVector out;
  out.reserve(v.size());
  for (const auto& entry : v) out.push_back(parse_mpz(entry, where));
  return out;
}

std::vector<int> parse_small_int_vector(const json& v, const char* where) {
  if (!v.is_array()) usage(std::string(where) + " must be an array of integers");
  std::vector<int> out;
  out.reserve(v.size());
  for (const auto& entry : v) out.push_back(parse_int(entry, where));
  return out;
}

/// A polynomial is an ascending coefficient array; a bare rational is
/// accepted as the constant polynomial.
RatPolynomial parse_polynomial(const json& v, const char* where) {
  RatPolynomial p;
  if (v.is_array()) {
    p.coeffs = parse_rat_vector(v, where);
  } else {
    p.coeffs = {parse_rational(v, where)};
  }
  p.normalize();
  return p;
}

TensorPoint parse_tensor_point(const json& v, const char* where) {
  if (!v.is_object()) usage(std::string(where) + " must be a tensor-point object");
  TensorPoint w;
  w.r = field_int(v, "r", where);
  w.a = field_int(v, "a", where);
  w.b = field_int_or(v, "b", 1);
  w.c = field_int_or(v, "c", 0);
  const json& coeffs = require_field(v, "coeffs", where);
  if (!coeffs.is_array()) usage(std::string(where) + ": 'coeffs' must be an array");
  for (const auto& entry : coeffs) {
    if (!entry.is_object()) usage(std::string(where) + ": each coefficient must be an object");
    const json& idx_field = require_field(entry, "idx", "coefficient");
    if (!idx_field.is_array()) usage(std::string(where) + ": 'idx' must be an array");
    IndexTuple idx;
    for (const auto& i : idx_field) {
      idx.push_back(parse_int(i, "idx"));
    }
    const json* copy = optional_field(entry, "copy");
    const int k = copy ? parse_int(*copy, "copy") : 1;
    const Rational val = parse_rational(require_field(entry, "val", "coefficient"), "val");
    if (!w.coeffs.emplace(std::make_pair(idx, k), val).second) {
      usage(std::string(where) + ": duplicate coefficient entry");
    }
  }
  w.validate();
  return w;
}

RatMatrix parse_matrix(const json& v, const char* where) {
  if (!v.is_array()) usage(std::string(where) + " must be an array of rows");
  RatMatrix g;
  g.reserve(v.size());
  for (const auto& row : v) g.push_back(parse_rat_vector(row, where));
  return g;
}

std::vector<RatMatrix> parse_basis_changes(const json& obj) {
  std::vector<RatMatrix> out;
  if (const json* v = optional_field(obj, "basis_changes")) {
    if (!v->is_array()) usage("'basis_changes' must be an array of matrices");
    for (const auto& m : *v) out.push_back(parse_matrix(m, "basis_changes"));
  }
  return out;
}

DegreeBounds parse_degree_bounds(const json& v, const char* where) {
  if (!v.is_object()) {
    usage(std::string(where) + " must map rank strings to [lo, hi] pairs");
  }
  DegreeBounds bounds;
  for (const auto& [key, value] : v.items()) {
    int rank = 0;
    try {
      std::size_t used = 0;
      rank = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      usage(std::string(where) + ": rank key '" + key + "' is not an integer");
    }
    if (!value.is_array() || value.size() != 2) {
      usage(std::string(where) + ": bounds for rank " + key + " must be [lo, hi]");
    }
    bounds[rank] = {parse_mpz(value[0], where), parse_mpz(value[1], where)};
  }
  return bounds;
}

/// (r, d, a, b, c, dLambda, dimX?) payload fields shared by the walls and
/// thresholds commands.
ConfigClass parse_config_class(const json& payload, const char* where) {
  ConfigClass cls;
  cls.r = field_int(payload, "r", where);
  cls.d = field_mpz(payload, "d", where);
  cls.dim_x = field_int_or(payload, "dimX", 1);
  cls.a = field_int(payload, "a", where);
  cls.b = field_int_or(payload, "b", 1);
  cls.c = field_int_or(payload, "c", 0);
  cls.d_lambda = field_mpz_or(payload, "dLambda", 0);
  return cls;
}

SheafNumerics parse_sheaf(const json& v) {
  if (!v.is_object()) usage("'sheaf' must be an object");
  const int rank = field_int(v, "rank", "sheaf");
  const mpz_class degree = field_mpz(v, "degree", "sheaf");
  if (const json* hilbert = optional_field(v, "hilbert")) {
    SheafNumerics s;
    s.rank = rank;
    s.degree = degree;
    s.dim_x = field_int_or(v, "dimX", 1);
    s.hilbert = parse_polynomial(*hilbert, "hilbert");
    s.validate();
    return s;
  }
  const json* genus = optional_field(v, "genus");
  return SheafNumerics::curve(rank, degree, genus ? parse_long(*genus, "genus") : 0);
}

DecoratedConfig parse_decorated_config(const json& v) {
  if (!v.is_object()) usage("'config' must be an object");
  DecoratedConfig config;
  config.sheaf = parse_sheaf(require_field(v, "sheaf", "config"));
  config.generic_point = parse_tensor_point(require_field(v, "point", "config"), "point");
  config.a = field_int_or(v, "a", config.generic_point.a);
  config.b = field_int_or(v, "b", config.generic_point.b);
  config.c = field_int_or(v, "c", config.generic_point.c);
  config.deg_lambda = field_mpz_or(v, "dLambda", 0);
  return config;
}

FiltrationNumerics parse_member(const json& v, int r) {
  if (!v.is_object()) usage("each family member must be an object");
  FiltrationNumerics member;
  member.flag.r = r;
  member.flag.ranks = parse_small_int_vector(require_field(v, "ranks", "member"), "ranks");
  member.flag.alphas = parse_rat_vector(require_field(v, "alphas", "member"), "alphas");
  if (const json* e = optional_field(v, "sub_degrees")) {
    member.sub_degrees = parse_int_vector(*e, "sub_degrees");
  }
  if (const json* subs = optional_field(v, "sub_hilberts")) {
    if (!subs->is_array()) usage("'sub_hilberts' must be an array of polynomials");
    for (const auto& p : *subs) {
      member.sub_hilberts.push_back(parse_polynomial(p, "sub_hilberts"));
    }
  }
  if (const json* order = optional_field(v, "basis_order")) {
    member.basis_order = parse_small_int_vector(*order, "basis_order");
  }
  if (const json* sat = optional_field(v, "saturated")) {
    if (!sat->is_boolean()) usage("'saturated' must be a boolean");
    member.saturated = sat->get<bool>();
  }
  return member;
}

// ---------------------------------------------------------------------------
// Serialization helpers.  Rationals become "p/q" strings; big integers
// become JSON numbers when they fit and decimal strings otherwise.

json mpz_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return json(static_cast<std::int64_t>(z.get_si()));
  return json(z.get_str());
}

json rat_to_json(const Rational& q) { return json(q.str()); }

json rat_vector_to_json(const RatVector& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(rat_to_json(q));
  return out;
}

json int_vector_to_json(const IntVector& v) {
  json out = json::array();
  for (const auto& z : v) out.push_back(mpz_to_json(z));
  return out;
}

json poly_to_json(const RatPolynomial& p) {
  json out = json::array();
  for (const auto& q : p.coeffs) out.push_back(rat_to_json(q));
  return out;
}

/// Constants serialize as bare rational strings (the common curve case);
/// anything of positive degree as the ascending coefficient array.
json poly_to_compact_json(const RatPolynomial& p) {
  if (p.degree() <= 0) return rat_to_json(p.coeff(0));
  return poly_to_json(p);
}

json flag_to_json(const WeightedFlag& flag) {
  json out = json::object();
  out["r"] = flag.r;
  out["ranks"] = flag.ranks;
  out["alphas"] = rat_vector_to_json(flag.alphas);
  return out;
}

json tensor_point_to_json(const TensorPoint& w) {
  json out = json::object();
  out["r"] = w.r;
  out["a"] = w.a;
  out["b"] = w.b;
  out["c"] = w.c;
  json coeffs = json::array();
  for (const auto& [key, val] : w.coeffs) {
    json entry = json::object();
    entry["idx"] = key.first;
    entry["copy"] = key.second;
    entry["val"] = rat_to_json(val);
    coeffs.push_back(std::move(entry));
  }
  out["coeffs"] = std::move(coeffs);
  return out;
}

json certificate_to_json(const InstabilityCertificate& cert) {
  json out = json::object();
  out["lambda_star"] = int_vector_to_json(cert.lambda_star.weights);
  out["mu_value"] = rat_to_json(cert.mu_value);
  out["norm_sq"] = mpz_to_json(cert.norm_sq);
  out["m0_squared"] = rat_to_json(cert.m0_squared());
  out["flag"] = flag_to_json(cert.flag);
  out["sorted_basis_permutation"] = cert.sorted_basis_permutation;
  json chi = json::object();
  chi["q"] = rat_to_json(cert.q);
  chi["block_exponents"] = rat_vector_to_json(cert.chi_star_block_exponents);
  out["chi_star"] = std::move(chi);
  return out;
}

json member_to_json(const FiltrationNumerics& member) {
  json out = json::object();
  out["ranks"] = member.flag.ranks;
  out["alphas"] = rat_vector_to_json(member.flag.alphas);
  if (!member.sub_degrees.empty()) out["sub_degrees"] = int_vector_to_json(member.sub_degrees);
  if (!member.sub_hilberts.empty()) {
    json subs = json::array();
    for (const auto& p : member.sub_hilberts) subs.push_back(poly_to_json(p));
    out["sub_hilberts"] = std::move(subs);
  }
  if (!member.basis_order.empty()) out["basis_order"] = member.basis_order;
  return out;
}

json chamber_to_json(const ChamberReport& chamber) {
  json out = json::object();
  switch (chamber.kind) {
    case ChamberReport::Kind::BottomChamber:
      out["kind"] = "BottomChamber";
      break;
    case ChamberReport::Kind::OnWall:
      out["kind"] = "OnWall";
      break;
    case ChamberReport::Kind::InChamber:
      out["kind"] = "InChamber";
      break;
    case ChamberReport::Kind::TopChamber:
      out["kind"] = "TopChamber";
      break;
  }
  if (chamber.wall_index != 0) out["wall_index"] = chamber.wall_index;
  out["lower"] = poly_to_compact_json(chamber.lower);
  if (chamber.upper) out["upper"] = poly_to_compact_json(*chamber.upper);
  return out;
}

json wall_report_to_json(const WallReport& report) {
  json out = json::object();
  json walls = json::array();
  for (const auto& wall : report.walls) walls.push_back(poly_to_compact_json(wall));
  out["walls"] = std::move(walls);
  json provenance = json::array();
  for (std::size_t i = 0; i < report.provenance.size(); ++i) {
    const WallWitness& w = report.provenance[i];
    json entry = json::object();
    entry["wall"] = poly_to_compact_json(report.walls[i]);
    entry["m_value"] = rat_to_json(w.m_value);
    entry["m_ranks"] = w.m_ranks;
    entry["m_alphas"] = rat_vector_to_json(w.m_alphas);
    entry["sub_degrees"] = int_vector_to_json(w.sub_degrees);
    entry["mu_value"] = rat_to_json(w.mu_value);
    entry["mu_ranks"] = w.mu_ranks;
    entry["mu_alphas"] = rat_vector_to_json(w.mu_alphas);
    entry["level_tuple"] = w.level_tuple;
    entry["scale"] = mpz_to_json(w.scale);
    entry["same_signature"] = w.same_signature;
    provenance.push_back(std::move(entry));
  }
  out["provenance"] = std::move(provenance);
  return out;
}

json degree_bounds_to_json(const DegreeBounds& bounds) {
  json out = json::object();
  for (const auto& [rank, box] : bounds) {
    out[std::to_string(rank)] = json::array({mpz_to_json(box.first), mpz_to_json(box.second)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Command handlers: payload in, result object out.

json run_testset(const json& payload) {
  const TestSet tset =
      test_set(field_int(payload, "a", "testset payload"), field_int_or(payload, "b", 1),
               field_int_or(payload, "c", 0), field_int(payload, "r", "testset payload"));
  json entries = json::array();
  for (const auto& entry : tset.entries) {
    json e = json::object();
    e["ranks"] = entry.ranks;
    e["alphas"] = rat_vector_to_json(entry.alphas);
    entries.push_back(std::move(e));
  }
  json out = json::object();
  out["entries"] = std::move(entries);
  return out;
}

json run_fan(const json& payload) {
  const int r = field_int(payload, "r", "fan payload");
  const json& sets = require_field(payload, "weight_sets", "fan payload");
  if (!sets.is_array() || sets.empty()) {
    usage("'weight_sets' must be a nonempty array of character arrays");
  }
  std::vector<std::vector<IntVector>> weight_sets;
  for (const auto& set : sets) {
    if (!set.is_array() || set.empty()) {
      usage("each weight set must be a nonempty array of characters");
    }
    std::vector<IntVector> chars;
    for (const auto& chi : set) chars.push_back(parse_int_vector(chi, "weight_sets"));
    weight_sets.push_back(std::move(chars));
  }
  const Fan fan = chamber_fan(weight_sets, r);

  json out = json::object();
  out["r"] = fan.r;
  json hyperplanes = json::array();
  for (const auto& h : fan.hyperplanes) hyperplanes.push_back(int_vector_to_json(h));
  out["hyperplanes"] = std::move(hyperplanes);
  json cones = json::array();
  for (const auto& cone : fan.cones) {
    json c = json::object();
    json generators = json::array();
    for (const auto& g : cone.generators) generators.push_back(int_vector_to_json(g));
    c["generators"] = std::move(generators);
    json normals = json::array();
    for (const auto& n : cone.facet_normals) normals.push_back(int_vector_to_json(n));
    c["facet_normals"] = std::move(normals);
    c["sign_vector"] = cone.sign_vector;
    cones.push_back(std::move(c));
  }
  out["cones"] = std::move(cones);
  json edges = json::array();
  for (const auto& e : fan.edge_generators) edges.push_back(int_vector_to_json(e));
  out["edge_generators"] = std::move(edges);
  return out;
}

json run_instability(const json& payload) {
  const bool wrapped = optional_field(payload, "point") != nullptr;
  const TensorPoint w = wrapped
                            ? parse_tensor_point(*optional_field(payload, "point"), "point")
                            : parse_tensor_point(payload, "instability payload");
  json out = json::object();
  if (wrapped && optional_field(payload, "basis_changes")) {
    const std::vector<RatMatrix> changes = parse_basis_changes(payload);
    out["certificate"] = certificate_to_json(instability_ops(w, changes));
  } else {
    auto [cert, residual] = destabilizing_certificate(w);
    out["certificate"] = certificate_to_json(cert);
    json res = json::object();
    res["level_value"] = rat_to_json(residual.level_value);
    res["point"] = tensor_point_to_json(residual.point);
    out["residual"] = std::move(res);
  }
  return out;
}

json run_walls(const json& payload, bool verify_flag) {
  const ConfigClass cls = parse_config_class(payload, "walls payload");
  const DegreeBounds bounds =
      parse_degree_bounds(require_field(payload, "bounds", "walls payload"), "bounds");
  const WallReport report = candidate_walls(cls, bounds);

  json out = wall_report_to_json(report);
  if (const json* delta = optional_field(payload, "delta")) {
    out["chamber"] = chamber_to_json(chamber_report(report, parse_polynomial(*delta, "delta")));
  }
  if (verify_flag || field_bool_or(payload, "verify", false)) {
    json verification = json::array();
    for (const auto& check : verify_walls(cls, report)) {
      json v = json::object();
      v["wall"] = poly_to_compact_json(check.wall);
      v["confirmed"] = check.confirmed;
      v["note"] = check.note;
      verification.push_back(std::move(v));
    }
    out["verification"] = std::move(verification);
  }
  return out;
}

json run_check(const json& payload) {
  const DecoratedConfig config =
      parse_decorated_config(require_field(payload, "config", "check payload"));

  std::vector<FiltrationNumerics> family;
  if (const json* members = optional_field(payload, "family")) {
    if (!members->is_array() || members->empty()) {
      usage("'family' must be a nonempty array of members");
    }
    for (const auto& m : *members) family.push_back(parse_member(m, config.sheaf.rank));
  } else if (const json* bounds = optional_field(payload, "degree_bounds")) {
    family = default_family(config, parse_degree_bounds(*bounds, "degree_bounds"),
                            field_bool_or(payload, "include_permutations", true));
  } else {
    usage("check payload needs 'family' or 'degree_bounds'");
  }

  json out = json::object();
  if (field_bool_or(payload, "asymptotic", false)) {
    const AsymptoticReport report =
        asymptotically_semistable(config, family, parse_basis_changes(payload));
    out["verdict"] = verdict_name(report.verdict);
    out["relative_to_family"] = report.relative_to_family;
    out["generic_point_semistable"] = report.generic_point_semistable;
    out["has_mu_zero_member"] = report.has_mu_zero_member;
    if (report.certificate_index) out["certificate_index"] = *report.certificate_index;
    if (report.instability) out["instability"] = certificate_to_json(*report.instability);
    return out;
  }

  const RatPolynomial delta =
      parse_polynomial(require_field(payload, "delta", "check payload"), "delta");
  const StabilityReport report = delta_semistable(config, delta, family);
  out["verdict"] = verdict_name(report.verdict);
  out["relative_to_family"] = report.relative_to_family;
  if (report.certificate_index) out["certificate_index"] = *report.certificate_index;
  if (report.certificate) out["certificate"] = member_to_json(*report.certificate);
  if (report.certificate_value) {
    out["certificate_value"] = poly_to_compact_json(*report.certificate_value);
  }
  if (const json* walls = optional_field(payload, "walls")) {
    WallReport wall_report;
    if (!walls->is_array()) usage("'walls' must be an array of wall positions");
    for (const auto& w : *walls) {
      wall_report.walls.push_back(parse_polynomial(w, "walls"));
      wall_report.provenance.emplace_back();
    }
    out["chamber"] = chamber_to_json(chamber_report(wall_report, delta));
  }
  return out;
}

json run_thresholds(const json& payload) {
  const bool has_bounds_shape = optional_field(payload, "n_per_rank") != nullptr;
  const bool has_product_shape = optional_field(payload, "weights_1") != nullptr;
  if (has_bounds_shape == has_product_shape) {
    usage("thresholds payload needs exactly one of 'n_per_rank' (delta bounds) or "
          "'weights_1'/'weights_2' (product threshold)");
  }

  json out = json::object();
  if (has_product_shape) {
    const int r = field_int(payload, "r", "thresholds payload");
    const json& w1_field = require_field(payload, "weights_1", "thresholds payload");
    const json& w2_field = require_field(payload, "weights_2", "thresholds payload");
    if (!w1_field.is_array() || !w2_field.is_array()) {
      usage("'weights_1' and 'weights_2' must be arrays of characters");
    }
    std::vector<IntVector> w1, w2;
    for (const auto& chi : w1_field) w1.push_back(parse_int_vector(chi, "weights_1"));
    for (const auto& chi : w2_field) w2.push_back(parse_int_vector(chi, "weights_2"));
    out["eta_infinity"] = rat_to_json(product_threshold(w1, w2, r));
    return out;
  }

  const ConfigClass cls = parse_config_class(payload, "thresholds payload");
  const std::vector<mpz_class> n_per_rank =
      parse_int_vector(require_field(payload, "n_per_rank", "thresholds payload"), "n_per_rank");
  const TestSet tset = test_set(cls.a, cls.b, cls.c, cls.r);
  const DeltaBoundsResult bounds = delta_bounds(cls, tset, n_per_rank);
  out["delta0"] = rat_to_json(bounds.delta0);
  out["delta1"] = rat_to_json(bounds.delta1);
  if (const json* delta_bar = optional_field(payload, "delta_bar")) {
    out["suggested_degree_bounds"] = degree_bounds_to_json(
        suggested_degree_bounds(cls, n_per_rank, parse_rational(*delta_bar, "delta_bar")));
  }
  return out;
}

json run_probe(const json& payload) {
  const TensorPoint w1 =
      parse_tensor_point(require_field(payload, "w1", "probe payload"), "w1");
  const TensorPoint w2 =
      parse_tensor_point(require_field(payload, "w2", "probe payload"), "w2");
  const Rational eta = parse_rational(require_field(payload, "eta", "probe payload"), "eta");
  const ProductProbeReport report = product_instability_probe(w1, w2, eta);

  json out = json::object();
  out["eta"] = rat_to_json(report.eta);
  out["unstable"] = report.unstable;
  out["status"] = std::string(report.unstable ? "unstable" : "semistable") + " at eta=" +
                  report.eta.str();
  out["min_norm_sq"] = rat_to_json(report.min_norm_sq);
  if (report.lambda_star) out["lambda_star"] = int_vector_to_json(report.lambda_star->weights);
  if (report.mu_1) out["mu_1"] = rat_to_json(*report.mu_1);
  if (report.mu_2) out["mu_2"] = rat_to_json(*report.mu_2);
  if (report.combined) out["combined"] = rat_to_json(*report.combined);
  return out;
}

json dispatch(const std::string& command, const json& payload, const JobOptions& options) {
  if (command == "testset") return run_testset(payload);
  if (command == "fan") return run_fan(payload);
  if (command == "instability") return run_instability(payload);
  if (command == "walls") return run_walls(payload, options.verify_walls);
  if (command == "check") return run_check(payload);
  if (command == "thresholds") return run_thresholds(payload);
  if (command == "probe") return run_probe(payload);
  usage("unknown command '" + command + "'");
}

struct ParsedJob {
  std::string command;
  json payload;
  std::optional<long> seed;
};

ParsedJob parse_job(const std::string& job_text, const JobOptions& options) {
  json job;
  try {
    job = json::parse(job_text);
  } catch (const json::parse_error& e) {
    usage(std::string("job document is not valid JSON: ") + e.what());
  }
  if (!job.is_object()) usage("job document must be a JSON object");

  ParsedJob parsed;
  const json& command = require_field(job, "command", "job document");
  if (!command.is_string()) usage("'command' must be a string");
  parsed.command = command.get<std::string>();
  parsed.payload = require_field(job, "payload", "job document");
  if (!parsed.payload.is_object()) usage("'payload' must be a JSON object");
  if (options.seed) {
    parsed.seed = *options.seed;
  } else if (const json* seed = optional_field(job, "seed")) {
    parsed.seed = parse_long(*seed, "seed");
  }
  return parsed;
}

json report_skeleton(const ParsedJob& job) {
  json report = json::object();
  report["command"] = job.command;
  report["payload"] = job.payload;
  if (job.seed) report["seed"] = *job.seed;
  report["library_version"] = kLibraryVersion;
  return report;
}

std::string render(const json& report) { return report.dump(2) + "\n"; }

}  // namespace

std::string run_job_text(const std::string& job_text, const JobOptions& options) {
  const ParsedJob job = parse_job(job_text, options);
  json report = report_skeleton(job);
  try {
    report["result"] = dispatch(job.command, job.payload, options);
  } catch (const json::exception& e) {
    usage(std::string("payload schema error: ") + e.what());
  }
  return render(report);
}

JobOutcome run_job_document(const std::string& job_text, const JobOptions& options) {
  const ParsedJob job = parse_job(job_text, options);
  json report = report_skeleton(job);
  try {
    try {
      report["result"] = dispatch(job.command, job.payload, options);
    } catch (const json::exception& e) {
      usage(std::string("payload schema error: ") + e.what());
    }
  } catch (const DomainError& e) {
    json error = json::object();
    error["code"] = e.code();
    error["message"] = e.what();
    report["error"] = std::move(error);
    return JobOutcome{render(report), 3};
  }
  return JobOutcome{render(report), 0};
}

}  // namespace decostab
