#include "qcone/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "qcone/cone.hpp"
#include "qcone/dw_faces.hpp"
#include "qcone/generic.hpp"
#include "qcone/oracle.hpp"

namespace qcone {

using Json = nlohmann::ordered_json;

namespace {

constexpr std::string_view kConventionVersion = "1";

Json conventions() {
  Json c;
  c["version"] = kConventionVersion;
  c["vector_order"] = "declared vertex order of the quiver";
  c["euler_form"] = "<a,b> = sum_x a(x) b(x) - sum_{arrows t->h} a(t) b(h)";
  c["weight_pairing"] = "sigma(a) = sum_x sigma(x) a(x)";
  c["canonical_weight"] = "sigma_beta(a) = <beta,a> - <a,beta>";
  c["sigma_cone"] = "Sigma(Q,beta) = {sigma : sigma(beta) = 0, sigma(a) <= 0 for generic subdimensions 0 < a < beta}";
  c["semi_invariant_sign"] =
      "f(g.R) = prod_x det(g_x)^tau(x) f(R) with (g.R)_a = g_h R_a g_t^-1; the reported weight is sigma = -tau";
  c["mu"] = "mu(sigma; b_1,...,b_s) = sum_k (s+1-k) sigma(b_k); b_k sits at index s+1-k";
  c["well_covering"] = "b_i o b_j = 1 for all i < j, counted over F_{p^k} on representations defined over F_p";
  c["codimension"] =
      "ambient codimension in Z^{Q_0}; Theta of s parts is checked to have codimension s (the 'codimension d, "
      "s = n-d,...,0' reading of the bijection statement is not used)";
  return c;
}

Json json_of(const BigInt& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

std::vector<std::int64_t> to_declared(const Quiver& q, const std::vector<std::int64_t>& canonical) {
  std::vector<std::int64_t> out(canonical.size());
  for (std::size_t pos = 0; pos < out.size(); ++pos) out[pos] = canonical[q.canonical_index_of_declared(pos)];
  return out;
}

std::vector<std::int64_t> from_declared(const Quiver& q, const std::vector<std::int64_t>& declared) {
  std::vector<std::int64_t> out(declared.size());
  for (std::size_t pos = 0; pos < out.size(); ++pos) out[q.canonical_index_of_declared(pos)] = declared[pos];
  return out;
}

Json json_of(const Quiver& q, const DimensionVector& v) { return Json(to_declared(q, v.entries())); }
Json json_of(const Quiver& q, const Weight& w) { return Json(to_declared(q, w.entries())); }

Json json_of(const Quiver& q, const IntVector& v) {
  Json out = Json::array();
  for (std::size_t pos = 0; pos < v.size(); ++pos) out.push_back(json_of(v[q.canonical_index_of_declared(pos)]));
  return out;
}

Json json_of(const Quiver& q, const std::vector<DimensionVector>& parts) {
  Json out = Json::array();
  for (const auto& p : parts) out.push_back(json_of(q, p));
  return out;
}

// "sigma_1 + 2 sigma_3" in declared order
std::string linear_form(const Quiver& q, const IntVector& v) {
  std::string out;
  for (std::size_t pos = 0; pos < v.size(); ++pos) {
    const auto& c = v[q.canonical_index_of_declared(pos)];
    if (c == 0) continue;
    const auto name = "sigma_" + q.declared_vertices()[pos];
    const BigInt mag = abs(c);
    std::string term = mag == 1 ? name : mag.get_str() + " " + name;
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + term;
    } else {
      out += (c < 0 ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

Json json_of(const Quiver& q) {
  Json j;
  j["vertices"] = q.declared_vertices();
  Json arrows = Json::array();
  for (const auto& a : q.arrows()) {
    arrows.push_back({{"id", a.id}, {"tail", q.vertices()[a.tail]}, {"head", q.vertices()[a.head]}});
  }
  j["arrows"] = arrows;
  return j;
}

Json json_of(const CountEvidence& e) {
  return {{"prime", e.prime},
          {"field_degree", e.field_degree},
          {"seed", e.seed},
          {"raw_count", e.raw_count},
          {"nodes_visited", e.nodes_visited}};
}

Json json_of(const Quiver& q, const SubrepCount& c) {
  Json j;
  j["alpha"] = json_of(q, c.alpha);
  j["count"] = c.count;
  j["infinite"] = c.infinite;
  Json ev = Json::array();
  for (const auto& e : c.evidence) ev.push_back(json_of(e));
  j["evidence"] = ev;
  return j;
}

Json json_of(const Quiver& q, const Face& f) {
  Json rays_json = Json::array();
  for (const auto& r : f.rays) rays_json.push_back(json_of(q, r));
  return {{"codim", f.codim}, {"active", f.active}, {"dim", f.dim}, {"rays", rays_json}};
}

Json json_of(const Quiver& q, const HCone& cone) {
  Json j;
  Json eqs = Json::array();
  for (const auto& e : cone.equalities()) {
    eqs.push_back({{"normal", json_of(q, e)}, {"text", linear_form(q, e) + " = 0"}});
  }
  j["equalities"] = eqs;
  const auto irredundant = facets(cone);
  Json ineqs = Json::array();
  for (std::size_t i = 0; i < cone.inequalities().size(); ++i) {
    const auto& ineq = cone.inequalities()[i];
    ineqs.push_back({{"index", i},
                     {"normal", json_of(q, ineq.normal)},
                     {"text", linear_form(q, ineq.normal) + " <= 0"},
                     {"labels", json_of(q, ineq.labels)},
                     {"facet", std::find(irredundant.begin(), irredundant.end(), i) != irredundant.end()}});
  }
  j["inequalities"] = ineqs;
  const auto v = rays(cone);
  Json rays_json = Json::array();
  for (const auto& r : v.rays) rays_json.push_back(json_of(q, r));
  Json lin = Json::array();
  for (const auto& l : v.lineality) lin.push_back(json_of(q, l));
  j["rays"] = rays_json;
  j["lineality"] = lin;
  j["dim"] = cone_dim(cone);
  return j;
}

std::string_view status_name(int status) {
  switch (status) {
    case kExitSuccess: return "success";
    case kExitFailure: return "failure";
    case kExitInconclusive: return "inconclusive";
    case kExitBudget: return "budget";
    default: return "usage";
  }
}

int status_of(Verdict v) {
  switch (v) {
    case Verdict::Holds: return kExitSuccess;
    case Verdict::Fails: return kExitFailure;
    case Verdict::Inconclusive: return kExitInconclusive;
  }
  return kExitFailure;
}

const DimensionVector& need(const std::optional<DimensionVector>& v, std::string_view flag, const RunConfig& c) {
  if (!v) {
    throw Error(ErrorKind::ParseError, std::string(flag) + " is required for " + c.command +
                                           (c.oracle.empty() ? "" : " " + c.oracle));
  }
  return *v;
}

CountPolicy count_policy(const RunConfig& c) {
  CountPolicy p;
  p.seed = *c.seed;
  if (!c.primes.empty()) p.primes = c.primes;
  if (c.trials) p.seeds_per_prime = *c.trials;
  if (c.budget) p.budget = *c.budget;
  return p;
}

Json json_of(const Quiver& q, const Rejection& r) {
  Json j;
  j["decomposition"] = json_of(q, r.decomposition.parts());
  j["pair"] = {r.first + 1, r.second + 1};
  j["count"] = json_of(q, r.count);
  return j;
}

Json json_of(const Quiver& q, const DecompositionSet& s) {
  Json j;
  j["parts"] = json_of(q, s.parts);
  if (s.certificate) j["certificate"] = json_of(q, s.certificate->parts());
  return j;
}

Json run_cone(const Inputs& in) {
  return json_of(in.quiver, build_sigma_hrep(in.quiver, need(in.beta, "--beta", in.config)));
}

Json run_faces(const Inputs& in) {
  const auto& q = in.quiver;
  auto sigma = build_sigma_hrep(q, need(in.beta, "--beta", in.config));
  const auto k = in.config.max_codim.value_or(q.num_vertices());
  Json j;
  j["cone"] = json_of(q, sigma);
  j["max_codim"] = k;
  Json faces = Json::array();
  for (const auto& f : faces_up_to_codim(sigma, k)) faces.push_back(json_of(q, f));
  j["faces"] = faces;
  return j;
}

Json run_schur(const Inputs& in) {
  const GenericCalculus calc(in.quiver);
  const auto& beta = need(in.beta, "--beta", in.config);
  Json j;
  j["schur_root"] = calc.is_schur_root(beta);
  j["rational_schur_root"] = calc.is_rational_schur_root(beta);
  j["canonical_weight"] = json_of(in.quiver, canonical_weight(in.quiver, beta));
  j["euler_form_beta_beta"] = euler_form(in.quiver, beta, beta);
  return j;
}

Json run_candecomp(const Inputs& in) {
  const GenericCalculus calc(in.quiver);
  const auto& beta = need(in.beta, "--beta", in.config);
  Json j;
  j["parts"] = json_of(in.quiver, calc.canonical_decomposition(beta));
  j["splittings_found"] = calc.schur_splittings(beta, 2).size();
  return j;
}

Json run_decomp(const Inputs& in, int& status) {
  const auto& q = in.quiver;
  const GenericCalculus calc(q);
  const auto& beta = need(in.beta, "--beta", in.config);
  const auto policy = count_policy(in.config);
  Json levels = Json::array();
  for (std::size_t s = 1; s <= in.config.s_max; ++s) {
    Json level;
    level["s"] = s;
    std::vector<Rejection> rejected;
    try {
      Json sets = Json::array();
      for (const auto& set : wcal_s(calc, beta, s, policy, kDefaultDecompositionBudget, &rejected)) {
        sets.push_back(json_of(q, set));
      }
      level["sets"] = sets;
    } catch (const InconclusiveCount& e) {
      level["inconclusive"] = e.what();
      level["partial"] = json_of(q, e.partial());
      status = kExitInconclusive;
    }
    Json rej = Json::array();
    for (const auto& r : rejected) rej.push_back(json_of(q, r));
    level["rejections"] = rej;
    levels.push_back(level);
  }
  return {{"levels", levels}};
}

Json run_dw(const Inputs& in, int& status) {
  const auto& q = in.quiver;
  DwPolicy policy;
  policy.count = count_policy(in.config);
  auto report = verify_dw(q, need(in.beta, "--beta", in.config), in.config.s_max, policy);
  Json j;
  j["cone"] = json_of(q, report.sigma);
  Json levels = Json::array();
  for (const auto& level : report.levels) {
    Json l;
    l["s"] = level.s;
    Json sets = Json::array();
    for (const auto& s : level.sets) sets.push_back(json_of(q, s));
    l["sets"] = sets;
    Json faces = Json::array();
    for (const auto& f : level.faces) faces.push_back(json_of(q, f));
    l["faces"] = faces;
    Json images = Json::array();
    for (const auto& im : level.images) {
      Json x{{"set", im.set_index}, {"face", json_of(q, im.face)}, {"is_face", im.is_face}};
      x["face_index"] = im.face_index ? Json(*im.face_index) : Json(nullptr);
      images.push_back(x);
    }
    l["theta"] = images;
    l["well_defined"] = to_string(level.well_defined);
    l["injective"] = to_string(level.injective);
    l["surjective"] = to_string(level.surjective);
    l["linearly_independent"] = to_string(level.independent);
    l["distinct_parts"] = to_string(level.distinct_parts);
    l["witnesses"] = level.witnesses;
    Json rej = Json::array();
    for (const auto& r : level.rejections) rej.push_back(json_of(q, r));
    l["rejections"] = rej;
    l["verdict"] = to_string(level.overall());
    levels.push_back(l);
  }
  j["levels"] = levels;
  j["verdict"] = to_string(report.overall());
  status = status_of(report.overall());
  return j;
}

Json run_hom_ext(const Inputs& in, int& status) {
  const auto& q = in.quiver;
  const auto& alpha = need(in.alpha, "--alpha", in.config);
  const auto& beta = need(in.beta, "--beta", in.config);
  SamplingPolicy policy;
  policy.seed = *in.config.seed;
  if (!in.config.primes.empty()) policy.primes = in.config.primes;
  if (in.config.trials) policy.trials = *in.config.trials;
  const GenericCalculus calc(q);
  auto sampled = sampled_hom_ext(q, alpha, beta, policy);
  Json j;
  j["alpha"] = json_of(q, alpha);
  j["beta"] = json_of(q, beta);
  j["euler_form"] = euler_form(q, alpha, beta);
  j["recursive"] = {{"hom", calc.hom(alpha, beta)}, {"ext", calc.ext(alpha, beta)}};
  j["sampled"] = {{"hom", sampled.hom}, {"ext", sampled.ext}};
  Json ev = Json::array();
  for (const auto& e : sampled.evidence) ev.push_back({{"prime", e.prime}, {"seed", e.seed}, {"hom", e.hom}});
  j["evidence"] = ev;
  const bool agree = sampled.hom == calc.hom(alpha, beta);
  j["agree"] = agree;
  if (!agree) status = kExitFailure;
  return j;
}

Json run_circ(const Inputs& in, int& status) {
  const auto& q = in.quiver;
  const auto& alpha = need(in.alpha, "--alpha", in.config);
  const auto& beta = need(in.beta, "--beta", in.config);
  try {
    return json_of(q, alpha_circ_beta(q, alpha, beta, count_policy(in.config)));
  } catch (const InconclusiveCount& e) {
    status = kExitInconclusive;
    auto j = json_of(q, e.partial());
    j["inconclusive"] = e.what();
    return j;
  }
}

Json run_ss(const Inputs& in, int& status) {
  const auto& q = in.quiver;
  const auto& beta = need(in.beta, "--beta", in.config);
  if (!in.sigma) throw Error(ErrorKind::ParseError, "--sigma is required for oracle ss");
  const auto prime = in.config.primes.empty() ? std::uint64_t{10007} : in.config.primes.front();
  const auto samples = in.config.trials.value_or(5);
  const auto budget = in.config.budget.value_or(kDefaultSubspaceBudget);
  const bool member = build_sigma_hrep(q, beta).contains(to_int_vector(*in.sigma));
  Json j;
  j["sigma"] = json_of(q, *in.sigma);
  j["in_sigma_cone"] = member;
  Json ev = Json::array();
  bool agree = true;
  for (std::size_t k = 0; k < samples; ++k) {
    const auto seed = mix_seed(*in.config.seed, k);
    const bool ss = is_semistable(random_rep(q, beta, prime, seed), *in.sigma, budget);
    agree = agree && ss == member;
    ev.push_back({{"prime", prime}, {"seed", seed}, {"semistable", ss}});
  }
  j["samples"] = ev;
  j["agree"] = agree;
  if (!agree) status = kExitFailure;
  return j;
}

Json run_si(const Inputs& in) {
  const auto& q = in.quiver;
  const auto& beta = need(in.beta, "--beta", in.config);
  SemiInvariantPolicy policy;
  policy.seed = *in.config.seed;
  if (!in.config.primes.empty()) policy.prime = in.config.primes.front();
  if (in.config.trials) policy.repetitions = *in.config.trials;
  if (in.config.budget) policy.monomial_budget = *in.config.budget;
  auto w = si_weights_by_degree(q, beta, in.config.deg, policy);
  Json j;
  j["max_degree"] = in.config.deg;
  Json spaces = Json::array();
  for (const auto& s : w.spaces) {
    spaces.push_back({{"degree", s.degree},
                      {"sigma", json_of(q, s.sigma)},
                      {"dimension", s.dimension},
                      {"group_elements", s.group_elements}});
  }
  j["spaces"] = spaces;
  Json prim = Json::array();
  for (const auto& p : primitive_weights(w)) prim.push_back(json_of(q, p));
  j["primitive_weights"] = prim;
  Json free = Json::array();
  for (auto s : w.free_vertices) free.push_back(q.vertices()[s]);
  j["free_vertices"] = free;
  j["false_positive_bound"] = "a fixed non-semi-invariant survives one random group element with probability at most " +
                              std::to_string(w.bound_numerator) + "/" + std::to_string(w.prime);
  return j;
}

bool randomized(const RunConfig& c) { return c.command == "decomp" || c.command == "dw-verify" || c.command == "oracle"; }

}  // namespace

Quiver parse_quiver_document(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("quiver file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw Error(ErrorKind::ParseError, "quiver file: 'vertices' must be a list of strings");
  }
  std::vector<std::string> vertices;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) throw Error(ErrorKind::ParseError, "quiver file: vertex ids must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<RawArrow> arrows;
  if (doc.contains("arrows")) {
    if (!doc["arrows"].is_array()) throw Error(ErrorKind::ParseError, "quiver file: 'arrows' must be a list");
    for (const auto& a : doc["arrows"]) {
      for (const char* key : {"id", "tail", "head"}) {
        if (!a.is_object() || !a.contains(key) || !a[key].is_string()) {
          throw Error(ErrorKind::ParseError, std::string("quiver file: arrow field '") + key + "' must be a string");
        }
      }
      arrows.push_back({a["id"].get<std::string>(), a["tail"].get<std::string>(), a["head"].get<std::string>()});
    }
  }
  return validate_quiver(vertices, arrows);
}

Quiver load_quiver(const std::string& spec) {
  if (spec.size() >= 2 && (spec[0] == 'A' || spec[0] == 'K') &&
      std::all_of(spec.begin() + 1, spec.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    std::size_t k = 0;
    std::from_chars(spec.data() + 1, spec.data() + spec.size(), k);
    if (spec[0] == 'A') {
      if (k < 1) throw Error(ErrorKind::ParseError, "--quiver: A<n> needs n >= 1");
      return linear_quiver(k);
    }
    return kronecker_quiver(k);
  }
  std::ifstream file(spec);
  if (!file) throw Error(ErrorKind::ParseError, "--quiver: cannot open '" + spec + "'");
  std::stringstream buffer;
  buffer << file.rdbuf();
  return parse_quiver_document(buffer.str());
}

std::vector<std::int64_t> parse_vector(std::string_view text, std::string_view field) {
  std::vector<std::int64_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    auto token = text.substr(start, end - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw Error(ErrorKind::ParseError, std::string(field) + ": '" + std::string(token) + "' is not an integer");
    }
    out.push_back(value);
    start = end + 1;
  }
  return out;
}

Inputs parse_inputs(const std::vector<std::string>& args) {
  RunConfig config;
  std::string beta, alpha, sigma, primes;

  CLI::App app{"Semi-invariant cones of quivers, their faces, and brute-force oracles", "qcone"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--quiver", config.quiver, "quiver file (JSON) or builtin A<n> / K<m>")->capture_default_str();
  app.add_option("--beta", beta, "dimension vector, comma separated");
  app.add_option("--alpha", alpha, "dimension vector, comma separated");
  app.add_option("--sigma", sigma, "weight, comma separated");
  app.add_option("--s-max", config.s_max, "largest number of parts")->capture_default_str();
  app.add_option("--max-codim", config.max_codim, "largest face codimension (default: number of vertices)");
  app.add_option("--deg", config.deg, "degree bound for semi-invariants")->capture_default_str();
  app.add_option("--seed", config.seed, "seed for every randomized step");
  app.add_option("--primes", primes, "comma separated primes");
  app.add_option("--trials", config.trials, "samples per prime (oracle ss: number of samples)");
  app.add_option("--budget", config.budget, "subspace or monomial budget");
  app.add_option("--out", config.out, "write the report here instead of stdout");

  const std::vector<std::pair<std::string, std::string>> commands{
      {"cone", "H- and V-description of Sigma(Q,beta)"},
      {"faces", "faces of Sigma(Q,beta) up to --max-codim"},
      {"schur", "Schur and rational Schur tests"},
      {"candecomp", "canonical decomposition"},
      {"decomp", "well-covering decompositions by rational Schur roots"},
      {"dw-verify", "verify the face parametrization up to --s-max parts"},
  };
  for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();
  auto* oracle = app.add_subcommand("oracle", "brute-force oracles");
  oracle->require_subcommand(1);
  oracle->fallthrough();
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"hom", "generic hom, recursive and sampled"},
           {"ext", "generic ext, recursive and sampled"},
           {"circ", "alpha o beta by counting subrepresentations"},
           {"ss", "King semistability of random representations"},
           {"si", "weights of semi-invariants up to --deg"}}) {
    oracle->add_subcommand(name, help)->fallthrough();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }

  for (auto* sub : app.get_subcommands()) config.command = sub->get_name();
  if (config.command == "oracle") {
    for (auto* sub : oracle->get_subcommands()) config.oracle = sub->get_name();
  }
  if (!beta.empty()) config.beta = parse_vector(beta, "--beta");
  if (!alpha.empty()) config.alpha = parse_vector(alpha, "--alpha");
  if (!sigma.empty()) config.sigma = parse_vector(sigma, "--sigma");
  if (!primes.empty()) {
    for (auto p : parse_vector(primes, "--primes")) {
      if (p < 2) throw Error(ErrorKind::ParseError, "--primes: " + std::to_string(p) + " is not a prime");
      config.primes.push_back(static_cast<std::uint64_t>(p));
    }
  }
  if (config.s_max < 1) throw Error(ErrorKind::ParseError, "--s-max must be positive");
  if (config.trials && *config.trials < 1) throw Error(ErrorKind::ParseError, "--trials must be positive");
  if (config.budget && *config.budget < 1) throw Error(ErrorKind::ParseError, "--budget must be positive");
  if (config.deg < 0) throw Error(ErrorKind::ParseError, "--deg must be nonnegative");
  if (randomized(config) && !config.seed) {
    throw Error(ErrorKind::ParseError, "--seed is required for " + config.command +
                                           (config.oracle.empty() ? "" : " " + config.oracle));
  }

  Inputs in{config, load_quiver(config.quiver), std::nullopt, std::nullopt, std::nullopt};
  const auto n = in.quiver.num_vertices();
  auto check_length = [&](const std::vector<std::int64_t>& v, std::string_view flag) {
    if (v.size() != n) {
      throw Error(ErrorKind::DimensionMismatch, std::string(flag) + " has " + std::to_string(v.size()) +
                                                    " entries, the quiver has " + std::to_string(n) + " vertices");
    }
  };
  auto dimension = [&](const std::vector<std::int64_t>& v, std::string_view flag) {
    check_length(v, flag);
    if (std::any_of(v.begin(), v.end(), [](auto x) { return x < 0; })) {
      throw Error(ErrorKind::ParseError, std::string(flag) + " must be nonnegative");
    }
    return DimensionVector(from_declared(in.quiver, v));
  };
  if (config.beta) {
    in.beta = dimension(*config.beta, "--beta");
    if (in.beta->is_zero()) throw Error(ErrorKind::ParseError, "--beta must be nonzero");
  }
  if (config.alpha) in.alpha = dimension(*config.alpha, "--alpha");
  if (config.sigma) {
    check_length(*config.sigma, "--sigma");
    in.sigma = Weight(from_declared(in.quiver, *config.sigma));
  }
  return in;
}

RunResult run(const Inputs& in) {
  const auto& c = in.config;
  int status = kExitSuccess;
  Json result;
  if (c.command == "cone") {
    result = run_cone(in);
  } else if (c.command == "faces") {
    result = run_faces(in);
  } else if (c.command == "schur") {
    result = run_schur(in);
  } else if (c.command == "candecomp") {
    result = run_candecomp(in);
  } else if (c.command == "decomp") {
    result = run_decomp(in, status);
  } else if (c.command == "dw-verify") {
    result = run_dw(in, status);
  } else if (c.command == "oracle" && (c.oracle == "hom" || c.oracle == "ext")) {
    result = run_hom_ext(in, status);
  } else if (c.command == "oracle" && c.oracle == "circ") {
    result = run_circ(in, status);
  } else if (c.command == "oracle" && c.oracle == "ss") {
    result = run_ss(in, status);
  } else if (c.command == "oracle" && c.oracle == "si") {
    result = run_si(in);
  } else {
    throw Error(ErrorKind::ParseError, "unknown command '" + c.command + "'");
  }

  Json report;
  report["tool"] = "qcone";
  report["command"] = c.oracle.empty() ? c.command : c.command + " " + c.oracle;
  report["conventions"] = conventions();
  Json inputs;
  inputs["quiver"] = json_of(in.quiver);
  if (in.beta) inputs["beta"] = json_of(in.quiver, *in.beta);
  if (in.alpha) inputs["alpha"] = json_of(in.quiver, *in.alpha);
  if (in.sigma) inputs["sigma"] = json_of(in.quiver, *in.sigma);
  if (c.command == "decomp" || c.command == "dw-verify") inputs["s_max"] = c.s_max;
  if (c.command == "faces") inputs["max_codim"] = c.max_codim.value_or(in.quiver.num_vertices());
  if (c.oracle == "si") inputs["deg"] = c.deg;
  if (c.seed) inputs["seed"] = *c.seed;
  if (!c.primes.empty()) inputs["primes"] = c.primes;
  if (c.trials) inputs["trials"] = *c.trials;
  if (c.budget) inputs["budget"] = *c.budget;
  report["inputs"] = inputs;
  report["result"] = result;
  report["status"] = status_name(status);
  return RunResult{report.dump(2) + "\n", status};
}

int exit_status_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Inconclusive: return kExitInconclusive;
    case ErrorKind::Budget:
    case ErrorKind::TooLarge: return kExitBudget;
    case ErrorKind::ParseError:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::CyclicQuiver:
    case ErrorKind::DuplicateId:
    case ErrorKind::UnknownVertex:
    case ErrorKind::MismatchedQuiver:
    case ErrorKind::Precondition:
    case ErrorKind::NotBelow:
    case ErrorKind::BadPrime: return kExitUsage;
    default: return kExitFailure;
  }
}

int run_main(const std::vector<std::string>& args, std::string& out, std::string& err) {
  try {
    auto in = parse_inputs(args);
    auto result = run(in);
    if (in.config.out.empty()) {
      out = result.report;
    } else {
      std::ofstream file(in.config.out);
      if (!file) {
        err = "cannot write '" + in.config.out + "'\n";
        return kExitUsage;
      }
      file << result.report;
    }
    return result.status;
  } catch (const HelpRequested& help) {
    out = help.text;
    return kExitSuccess;
  } catch (const Error& e) {
    err = std::string("error: ") + e.what() + "\n";
    return exit_status_for(e.kind());
  }
}

}  // namespace qcone
