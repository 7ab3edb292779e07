// Command-line front end: one subcommand per library capability, JSON out.
#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "ssddh/catalog.hpp"
#include "ssddh/ddh.hpp"
#include "ssddh/json_io.hpp"

namespace {

using namespace ssddh;
using json_io::Json;
using json_io::to_json;

constexpr int kExitUsage = 2;
constexpr int kExitMalformed = 3;
constexpr int kExitDomain = 4;

struct Outcome {
  int code = 0;
  Json body;
};

class ReadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inline JSON when the text starts like a JSON value, otherwise a file path.
Json load_json(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && std::string("{[\"").find(arg[first]) != std::string::npos) {
    return Json::parse(arg);
  }
  std::ifstream in(arg);
  if (!in) throw ReadError("cannot read input file '" + arg + "'");
  return Json::parse(in);
}

std::vector<Int> parse_ints(const std::vector<std::string>& v) {
  std::vector<Int> out;
  for (const auto& s : v) out.push_back(parse_int(s));
  return out;
}

// Where a command gets its curve from: --curve JSON or a catalog family.
struct CurveSource {
  std::string curve;
  std::string family;
  std::string p;
  std::vector<std::string> params;
  std::string order;

  void attach(CLI::App* app) {
    app->add_option("--curve", curve, "curve JSON (inline or file)");
    app->add_option("--family", family, "catalog family supplying the curve");
    app->add_option("--p", p, "characteristic for --family");
    app->add_option("--param", params, "family parameters")->take_all();
    app->add_option("--order", order, "#E(F_q); counted when omitted");
  }

  // The catalog spec when a family was named.
  std::optional<DistortionSpec> spec() const {
    if (family.empty()) return std::nullopt;
    if (p.empty()) throw ArgumentError("--family needs --p");
    return builtin_distortion(family, parse_int(p), parse_ints(params));
  }

  std::pair<Curve, Int> resolve() const {
    if (auto s = spec()) return {s->curve, order.empty() ? s->order : parse_int(order)};
    if (curve.empty()) throw ArgumentError("give --curve or --family/--p");
    Json j = load_json(curve);
    const Json& cj = j.contains("curve") ? j.at("curve") : j;
    Curve E = json_io::curve_from_json(cj);
    Int n = !order.empty() ? parse_int(order) : j.contains("order") ? json_io::int_from_json(j.at("order"))
                                                                     : naive_point_count(E);
    return {E, n};
  }
};

// Point field degrees are relative to the curve field; embeddings into a
// common field are chosen compatibly with the canonical base embedding.
CurvePoint lift_to(const Curve& E, const CurvePoint& P, unsigned from, const Embedding& base_to_top) {
  if (P.is_identity()) return P;
  const FieldPtr& F = curve_field(E);
  const unsigned top = base_to_top.target()->degree() / F->degree();
  if (top % from != 0) throw ArgumentError("point field is not contained in the working field");
  if (from == top) return P;
  const Embedding mid = compatible_embedding(Embedding(F, from == 1 ? F : extension_of(F, from)), base_to_top);
  return lift_point(P, mid);
}

std::vector<std::pair<CurvePoint, unsigned>> read_points(const Curve& E, const Json& arr, size_t count) {
  if (!arr.is_array() || arr.size() != count) {
    throw json_io::FormatError("expected " + std::to_string(count) + " points");
  }
  std::vector<std::pair<CurvePoint, unsigned>> out;
  for (const auto& pj : arr) {
    unsigned ext = 1;
    CurvePoint P = json_io::point_from_json(E, pj, &ext);
    out.emplace_back(std::move(P), ext);
  }
  return out;
}

struct Handlers {
  std::uint64_t seed = 0x5eedULL;
  std::string pairing = "weil";

  CurveSource info_src;
  std::string info_r;

  std::string pairing_input;

  std::string ddh_input;
  std::string ddh_family;
  std::string ddh_p;
  std::vector<std::string> ddh_params;

  std::string coddh_input;

  std::string h_m;
  std::string h_n;
  std::string h_place;

  std::string s_p;
  unsigned s_a = 1;
  std::string s_t;
  std::string s_r;

  CurveSource dc_src;
  std::string dc_d;
  std::string dc_r;

  std::string dv_input;
  std::string dv_family;
  std::string dv_p;
  std::vector<std::string> dv_params;
  std::string dv_r;
  bool dv_exhaustive = false;

  std::string ci_family;
  std::string ci_p;
  std::vector<std::string> ci_params;
  std::string ci_r;

  CurveSource walk_src;
  std::vector<unsigned> walk_primes;

  Json curve_info() const {
    auto [E, order] = info_src.resolve();
    const CurveClassification cls = curve_classify(E, order);
    Json out{{"curve", to_json(E)}, {"classification", to_json(cls)}, {"j", to_json(E.j_invariant())}};
    if (!info_r.empty()) {
      const Int r = parse_int(info_r);
      TorsionContext ctx(E, order, r);
      Rng rng(seed);
      const CurvePoint P = ctx.one_eigenspace_generator(rng);
      const CurvePoint Q = ctx.q_eigenspace_generator(rng);
      const unsigned ext = ctx.degree();
      out["r"] = to_json(r);
      out["k"] = ctx.k();
      out["points"] = {{"one", to_json(P, ext)},
                       {"q", to_json(Q, ext)},
                       {"mixed", to_json(ctx.curve().add(P, Q), ext)}};
    }
    return out;
  }

  Json pairing_cmd() const {
    const Json in = load_json(pairing_input);
    const Curve E = json_io::curve_from_json(in.at("curve"));
    const Int r = json_io::int_from_json(in.at("r"));
    unsigned eP = 1;
    unsigned eQ = 1;
    const CurvePoint P = json_io::point_from_json(E, in.at("P"), &eP);
    const CurvePoint Q = json_io::point_from_json(E, in.at("Q"), &eQ);
    const unsigned top = std::lcm(eP, eQ);
    const FieldPtr& F = curve_field(E);
    const Embedding emb(F, top == 1 ? F : extension_of(F, top));
    const Curve Ek = base_change(E, emb);
    const FieldElement v = ssddh::pairing(parse_pairing_kind(pairing), Ek, lift_to(E, P, eP, emb), lift_to(E, Q, eQ, emb), r);
    Json out = json_io::pairing_value(v, r);
    out["pairing"] = pairing;
    out["trivial"] = v.is_one();
    return out;
  }

  Json ddh_cmd() const {
    const Json in = load_json(ddh_input);
    std::optional<DistortionSpec> hint;
    if (!ddh_family.empty()) {
      if (ddh_p.empty()) throw ArgumentError("--family needs --p");
      hint = builtin_distortion(ddh_family, parse_int(ddh_p), parse_ints(ddh_params));
    } else if (in.contains("distortion")) {
      hint = json_io::distortion_from_json(in.at("distortion"));
    }
    const Curve E = in.contains("curve") ? json_io::curve_from_json(in.at("curve"))
                    : hint                ? hint->curve
                                          : throw ArgumentError("input needs a curve");
    const Int order = in.contains("order") ? json_io::int_from_json(in.at("order"))
                      : hint && hint->curve == E ? hint->order
                                                 : naive_point_count(E);
    const Int r = json_io::int_from_json(in.at("r"));
    const TorsionContext ctx = hint ? context_for(E, order, r, hint->map) : TorsionContext(E, order, r);
    const auto pts = read_points(E, in.at("points"), 4);
    std::vector<CurvePoint> P;
    for (const auto& [pt, ext] : pts) P.push_back(lift_to(E, pt, ext, ctx.embedding()));
    const DdhVerdict v =
        solve_ddh(ctx, P[0], P[1], P[2], P[3], hint ? &*hint : nullptr, parse_pairing_kind(pairing));
    return {{"verdict", v.valid ? "valid" : "invalid"}, {"method", v.method}, {"pairing", to_string(v.pairing)}};
  }

  Json coddh_cmd() const {
    const Json in = load_json(coddh_input);
    const Curve E = json_io::curve_from_json(in.at("curve"));
    const Int r = json_io::int_from_json(in.at("r"));
    const auto pts = read_points(E, in.at("points"), 4);
    unsigned top = 1;
    for (const auto& [pt, ext] : pts) top = std::lcm(top, ext);
    const FieldPtr& F = curve_field(E);
    const Embedding emb(F, top == 1 ? F : extension_of(F, top));
    std::vector<CurvePoint> P;
    for (const auto& [pt, ext] : pts) P.push_back(lift_to(E, pt, ext, emb));
    const DdhVerdict v = solve_co_ddh(base_change(E, emb), P[0], P[1], P[2], P[3], r, parse_pairing_kind(pairing));
    return {{"verdict", v.valid ? "valid" : "invalid"}, {"method", v.method}, {"pairing", to_string(v.pairing)}};
  }

  Json hilbert_cmd() const {
    const Int m = parse_int(h_m);
    const Int n = parse_int(h_n);
    if (!h_place.empty()) return {{"symbol", hilbert_symbol(m, n, Place::parse(h_place))}};
    return {{"ramified", to_json(ramified_set(m, n))}};
  }

  Json choose_s_cmd() const {
    const Int p = parse_int(s_p);
    const Int t = parse_int(s_t);
    const Int s = choose_s(p, s_a, t, parse_int(s_r));
    return {{"s", to_json(s)},
            {"row", choose_s_row(p, s_a, t)},
            {"certificate", to_json(check_dagger(ipow(p, s_a), t, s))}};
  }

  Json construct_cmd() const {
    auto [E, order] = dc_src.resolve();
    return to_json(construct_distortion(E, order, parse_int(dc_d), parse_int(dc_r)));
  }

  Json verify_cmd() const {
    DistortionSpec spec = !dv_family.empty()
                              ? builtin_distortion(dv_family, dv_p.empty() ? throw ArgumentError("--family needs --p")
                                                                           : parse_int(dv_p),
                                                   parse_ints(dv_params))
                              : json_io::distortion_from_json(load_json(dv_input));
    const Int r = parse_int(dv_r);
    const VerifyReport rep = verify_distortion_report(spec.curve, spec.order, spec.map, r, seed);
    Json out{{"r", to_json(r)},
             {"verified", rep.ok()},
             {"one_eigenspace", rep.one_eigenspace},
             {"q_eigenspace", rep.q_eigenspace}};
    DistortionSpec probe = spec;
    probe.certified_for.clear();
    probe.psi_squared.clear();
    certify(probe, r, seed);
    out["psi_squared"] = probe.psi_squared.empty() ? Json(nullptr) : to_json(probe.psi_squared.front().second);
    if (dv_exhaustive) {
      const ExhaustiveReport ex = verify_distortion_exhaustive(spec.curve, spec.order, spec.map, r, seed);
      out["exhaustive"] = {{"one_checked", to_json(ex.one_checked)},
                           {"one_failures", to_json(ex.one_failures)},
                           {"q_checked", to_json(ex.q_checked)},
                           {"q_failures", to_json(ex.q_failures)}};
    }
    return out;
  }

  static Json catalog_list() {
    Json out = Json::array();
    for (const auto& f : catalog_families()) {
      out.push_back({{"id", f.id}, {"condition", f.condition}, {"curve", f.curve}, {"map", f.map}, {"params", f.params}});
    }
    return out;
  }

  Json catalog_instantiate() const {
    DistortionSpec spec = builtin_distortion(ci_family, parse_int(ci_p), parse_ints(ci_params));
    if (!ci_r.empty()) certify(spec, parse_int(ci_r), seed);
    return to_json(spec);
  }

  Json walk_cmd() const {
    auto [E, order] = walk_src.resolve();
    (void)order;
    const auto cycle = isogeny_cycle_search(E, walk_primes);
    const FieldPtr F2 = extension_of(curve_field(E), 2);
    Json out{{"field", to_json(*F2)}, {"primes", walk_primes}, {"found", cycle.has_value()}};
    out["cycle"] = cycle ? to_json(*cycle) : Json(nullptr);
    return out;
  }
};

Json error_body(const std::string& code, const std::string& message) {
  return {{"error", code}, {"message", message}};
}

Outcome run(std::vector<std::string> args, bool allow_batch);

Outcome run_batch(const std::string& path, bool allow_batch) {
  if (!allow_batch) return {kExitUsage, error_body("usage", "--batch cannot be nested")};
  std::ifstream in(path);
  if (!in) return {kExitMalformed, error_body("malformed_json", "cannot read batch file '" + path + "'")};
  std::vector<std::vector<std::string>> jobs;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;
    std::vector<std::string> args;
    if (line[line.find_first_not_of(" \t")] == '[') {
      try {
        args = Json::parse(line).get<std::vector<std::string>>();
      } catch (const Json::exception& e) {
        return {kExitMalformed, error_body("malformed_json", e.what())};
      }
    } else {
      std::istringstream ss(line);
      for (std::string tok; ss >> tok;) args.push_back(tok);
    }
    jobs.push_back(std::move(args));
  }
  std::vector<std::future<Outcome>> futures;
  for (auto& job : jobs) futures.push_back(std::async(std::launch::async, run, job, false));
  Json results = Json::array();
  int worst = 0;
  for (auto& f : futures) {
    Outcome o = f.get();
    worst = std::max(worst, o.code);
    results.push_back({{"exit", o.code}, {"output", std::move(o.body)}});
  }
  return {worst, results};
}

Outcome run(std::vector<std::string> args, bool allow_batch) {
  CLI::App app{"Pairing-based DDH solvers and distortion maps on supersingular curves", "ssddh"};
  app.set_help_all_flag("--help-all");
  Handlers h;
  std::string batch;
  app.add_option("--seed", h.seed, "PRNG seed for sampled points");
  app.add_option("--pairing", h.pairing, "weil or tate")->check(CLI::IsMember({"weil", "tate"}));
  app.add_option("--batch", batch, "file with one command line per line");
  app.require_subcommand(0, 1);

  auto* info = app.add_subcommand("curve-info", "classification, j-invariant and eigenspace points");
  h.info_src.attach(info);
  info->add_option("--r", h.info_r, "prime r: also report k and eigenspace generators");

  auto* pair = app.add_subcommand("pairing", "Weil or reduced Tate pairing of two points");
  pair->add_option("--input", h.pairing_input, "{curve, r, P, Q}")->required();

  auto* ddh = app.add_subcommand("ddh-check", "decide a DDH tuple in a cyclic subgroup");
  ddh->add_option("--input", h.ddh_input, "{curve, order?, r, points[4], distortion?}")->required();
  ddh->add_option("--family", h.ddh_family, "catalog distortion map to use as hint");
  ddh->add_option("--p", h.ddh_p, "characteristic for --family");
  ddh->add_option("--param", h.ddh_params, "family parameters")->take_all();

  auto* coddh = app.add_subcommand("coddh-check", "decide a co-DDH tuple across two subgroups");
  coddh->add_option("--input", h.coddh_input, "{curve, r, points[4]}")->required();

  auto* hil = app.add_subcommand("hilbert", "Hilbert symbol or ramified places of (m, n)");
  hil->add_option("--m", h.h_m)->required();
  hil->add_option("--n", h.h_n)->required();
  hil->add_option("--place", h.h_place, "prime or inf; omitted: list ramified places");

  auto* cs = app.add_subcommand("choose-s", "s from the existence table, with its certificate");
  cs->add_option("--p", h.s_p)->required();
  cs->add_option("--a", h.s_a, "q = p^a");
  cs->add_option("--t", h.s_t, "Frobenius trace")->required();
  cs->add_option("--r", h.s_r)->required();

  auto* dc = app.add_subcommand("distortion-construct", "build a distortion map from an isogeny cycle");
  h.dc_src.attach(dc);
  dc->add_option("--d", h.dc_d, "degree of the endomorphism")->required();
  dc->add_option("--r", h.dc_r, "prime the map is certified for")->required();

  auto* dv = app.add_subcommand("distortion-verify", "check e_r(P, psi(P)) != 1 on both eigenspaces");
  dv->add_option("--input", h.dv_input, "DistortionSpec JSON");
  dv->add_option("--family", h.dv_family, "catalog family instead of --input");
  dv->add_option("--p", h.dv_p);
  dv->add_option("--param", h.dv_params)->take_all();
  dv->add_option("--r", h.dv_r)->required();
  dv->add_flag("--exhaustive", h.dv_exhaustive, "sweep every nonzero eigenspace point");

  auto* cat = app.add_subcommand("catalog", "built-in distortion maps");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "list families");
  auto* cat_inst = cat->add_subcommand("instantiate", "instantiate a family at p");
  cat_inst->add_option("--family", h.ci_family)->required();
  cat_inst->add_option("--p", h.ci_p)->required();
  cat_inst->add_option("--param", h.ci_params)->take_all();
  cat_inst->add_option("--r", h.ci_r, "also certify for this prime");

  auto* walk = app.add_subcommand("isogeny-walk", "cycle through j(E) over F_{q^2} using the given primes");
  h.walk_src.attach(walk);
  walk->add_option("--primes", h.walk_primes, "prime degrees, used once each")->delimiter(',')->required();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return {0, app.help()};
  } catch (const CLI::CallForAllHelp& e) {
    return {0, app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    return {kExitUsage, error_body("usage", e.what())};
  }

  try {
    if (!batch.empty()) return run_batch(batch, allow_batch);
    if (info->parsed()) return {0, h.curve_info()};
    if (pair->parsed()) return {0, h.pairing_cmd()};
    if (ddh->parsed()) return {0, h.ddh_cmd()};
    if (coddh->parsed()) return {0, h.coddh_cmd()};
    if (hil->parsed()) return {0, h.hilbert_cmd()};
    if (cs->parsed()) return {0, h.choose_s_cmd()};
    if (dc->parsed()) return {0, h.construct_cmd()};
    if (dv->parsed()) {
      if (h.dv_input.empty() == h.dv_family.empty()) throw ArgumentError("give exactly one of --input and --family");
      return {0, h.verify_cmd()};
    }
    if (cat_list->parsed()) return {0, Handlers::catalog_list()};
    if (cat_inst->parsed()) return {0, h.catalog_instantiate()};
    if (walk->parsed()) return {0, h.walk_cmd()};
    return {kExitUsage, error_body("usage", "no subcommand given; see --help")};
  } catch (const Json::exception& e) {
    return {kExitMalformed, error_body("malformed_json", e.what())};
  } catch (const json_io::FormatError& e) {
    return {kExitMalformed, error_body("malformed_json", e.what())};
  } catch (const ReadError& e) {
    return {kExitMalformed, error_body("malformed_json", e.what())};
  } catch (const ArgumentError& e) {
    return {kExitDomain, error_body("argument", e.what())};
  } catch (const CapabilityError& e) {
    return {kExitDomain, error_body("capability", e.what())};
  } catch (const NotFoundError& e) {
    return {kExitDomain, error_body("not_found", e.what())};
  } catch (const std::exception& e) {
    return {kExitDomain, error_body("internal", e.what())};
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const Outcome o = run(std::move(args), true);
  if (o.body.is_string()) {
    std::cout << o.body.get<std::string>();
  } else {
    std::cout << o.body.dump(2) << "\n";
  }
  return o.code;
}
