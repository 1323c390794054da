#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "effint/cli.hpp"
#include "effint/cyclo.hpp"
#include "effint/darboux.hpp"
#include "effint/poly_parser.hpp"

namespace effint::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Outcome {
  Json results = Json::object();
  Json verdicts = Json::array();
  Json notes = Json::array();
  std::string hash_source;
  std::ostringstream human;
  int exit_code = kExitOk;
};

void verdict(Outcome& o, const std::string& name, bool pass, const std::string& detail) {
  o.verdicts.push_back({{"name", name}, {"pass", pass}, {"detail", detail}});
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string q(const Rational& r) { return to_string(r); }

Json candidate_json(const DarbouxCandidate& c) {
  return {{"f", to_string(c.f)},
          {"degree", c.f.degree().value()},
          {"cofactor", to_string(c.cofactor)},
          {"square_free", c.square_free}};
}

Json foliation_json(const FoliationFile& file, const VectorField& X, const FoliationInfo& info) {
  Json j;
  j["name"] = file.name ? Json(*file.name) : Json(nullptr);
  j["P"] = to_string(X.P());
  j["Q"] = to_string(X.Q());
  j["removed_factor"] = X.removed_factor() ? Json(to_string(*X.removed_factor())) : Json(nullptr);
  j["degree_d"] = info.degree_d;
  j["max_coeff_degree_D"] = info.max_coeff_degree_D;
  j["infinity_invariant"] = info.infinity_invariant;
  return j;
}

void human_foliation(Outcome& o, const VectorField& X, const FoliationInfo& info) {
  o.human << "foliation: P = " << to_string(X.P()) << ", Q = " << to_string(X.Q())
          << " (d = " << info.degree_d << ", D = " << info.max_coeff_degree_D << ")\n";
  if (X.removed_factor()) o.human << "  common factor removed: " << to_string(*X.removed_factor()) << "\n";
}

Json search_json(const SearchResult& r) {
  Json j;
  j["requested_n_max"] = r.requested_n_max;
  j["searched_up_to"] = r.searched_up_to;
  j["truncated"] = r.truncated;
  j["first_integral_regime"] =
      r.first_integral_regime ? Json(*r.first_integral_regime) : Json(nullptr);
  j["nonrational_count"] = r.nonrational_count;
  j["candidates"] = Json::array();
  for (const auto& c : r.candidates) j["candidates"].push_back(candidate_json(c));
  j["notes"] = r.notes;
  return j;
}

void human_search(Outcome& o, const SearchResult& r) {
  o.human << "search: n <= " << r.searched_up_to << " (requested n_max = " << r.requested_n_max
          << (r.truncated ? ", TRUNCATED" : "") << ")\n";
  if (r.candidates.empty()) {
    o.human << "  no rational invariant curves\n";
  } else {
    std::size_t width = 1;
    for (const auto& c : r.candidates) width = std::max(width, to_string(c.f).size());
    o.human << "  " << std::left << std::setw(static_cast<int>(width)) << "f" << "  k\n";
    for (const auto& c : r.candidates)
      o.human << "  " << std::left << std::setw(static_cast<int>(width)) << to_string(c.f) << "  "
              << to_string(c.cofactor) << "\n";
  }
  if (r.nonrational_count != 0)
    o.human << "  non-rational solutions skipped: " << r.nonrational_count << "\n";
  if (r.first_integral_regime)
    o.human << "FirstIntegralRegime at n=" << *r.first_integral_regime << "\n";
  for (const auto& n : r.notes) o.human << "  note: " << n << "\n";
}

// Truncation must never be silent.
void record_search_cap(Outcome& o, const SearchResult& r) {
  bool reported = !r.truncated;
  for (const auto& n : r.notes) {
    if (n.find("truncated") != std::string::npos) {
      o.notes.push_back(n);
      reported = true;
    }
  }
  verdict(o, "search_cap_reported", reported,
          r.truncated ? "search truncated below the requested n_max and reported"
                      : "search covered the requested n_max");
}

std::optional<unsigned> parse_nmax(const std::string& text) {
  if (text == "auto") return std::nullopt;
  unsigned value = 0;
  std::istringstream in(text);
  if (!(in >> value) || !in.eof() || value == 0)
    throw InputError("--nmax expects a positive integer or 'auto' (got '" + text + "')");
  return value;
}

BoundProfile parse_bound_profile(const std::string& text) {
  const auto p = parse_profile(text);
  if (!p) throw InputError("unknown profile '" + text + "' (thmA | a2g1 | a2g1n | a2hyp)");
  return *p;
}

struct Loaded {
  FoliationFile file;
  VectorField X;
  FoliationInfo info;
};

Loaded load(const std::string& path, Outcome& o) {
  const std::string bytes = read_file(path);
  o.hash_source = bytes;
  FoliationFile file = parse_foliation_file(bytes);
  VectorField X(parse_poly(file.P), parse_poly(file.Q));
  const FoliationInfo info = foliation_degree(X);
  return {std::move(file), std::move(X), info};
}

void cmd_curves(Outcome& o, const std::string& path, const std::string& nmax,
                const std::string& profile, unsigned threads) {
  const Loaded in = load(path, o);
  SearchOptions opts;
  opts.n_max = parse_nmax(nmax);
  opts.profile = parse_bound_profile(profile);
  opts.threads = threads;
  const SearchResult r = search_invariant_curves(in.X, opts);
  o.results["foliation"] = foliation_json(in.file, in.X, in.info);
  o.results["profile"] = profile_cli_name(opts.profile);
  o.results["search"] = search_json(r);
  record_search_cap(o, r);
  human_foliation(o, in.X, in.info);
  human_search(o, r);
}

void cmd_check(Outcome& o, const std::string& path) {
  const Loaded in = load(path, o);
  if (in.file.candidates.empty()) throw InputError("check needs a non-empty 'candidates' list");
  o.results["foliation"] = foliation_json(in.file, in.X, in.info);
  o.results["candidates"] = Json::array();
  human_foliation(o, in.X, in.info);
  for (const auto& text : in.file.candidates) {
    const auto c = cofactor(in.X, parse_poly(text));
    Json j;
    j["input"] = text;
    j["f"] = to_string(canonical(parse_poly(text)));
    j["status"] = c ? "invariant" : "NotInvariant";
    j["cofactor"] = c ? Json(to_string(c->cofactor)) : Json(nullptr);
    j["first_integral"] = c && c->cofactor.is_zero();
    o.results["candidates"].push_back(j);
    o.human << "  " << text << ": ";
    if (!c) {
      o.human << "NotInvariant\n";
    } else {
      o.human << "k = " << to_string(c->cofactor)
              << (c->cofactor.is_zero() ? " (first integral)" : "") << "\n";
    }
  }
}

Json structure_json(const LiouvillianStructure& s) {
  Json j;
  j["kind"] = to_string(s.kind);
  j["curves"] = Json::array();
  for (const auto& c : s.curves) {
    Json e{{"f", to_string(c.curve.f)}, {"exponent", q(c.exponent)}};
    if (s.kind == StructureKind::IntegratingFactor) e["mu"] = q(c.pole);
    j["curves"].push_back(e);
  }
  if (s.pole_at_infinity) j["mu_infinity"] = q(*s.pole_at_infinity);
  if (s.kind == StructureKind::IntegratingFactor) j["closedness_verified"] = s.closedness_verified;
  return j;
}

std::string product_text(const LiouvillianStructure& s) {
  std::string text;
  for (const auto& c : s.curves) {
    if (c.exponent == 0) continue;
    if (!text.empty()) text += " * ";
    text += "(" + to_string(c.curve.f) + ")^" + q(c.exponent);
  }
  return text.empty() ? "1" : text;
}

void cmd_darboux(Outcome& o, const std::string& path, const std::string& nmax,
                 const std::string& profile, unsigned threads) {
  const Loaded in = load(path, o);
  SearchOptions opts;
  opts.n_max = parse_nmax(nmax);
  opts.profile = parse_bound_profile(profile);
  opts.threads = threads;
  if (!opts.n_max && in.info.degree_d < 2) {
    opts.n_max = extactic_max_degree(opts.extactic);
    o.notes.push_back("foliation degree d = " + std::to_string(in.info.degree_d) +
                      " < 2 has no degree bound; searching up to the extactic cap n = " +
                      std::to_string(*opts.n_max));
  }
  const SearchResult r = search_invariant_curves(in.X, opts);
  o.results["foliation"] = foliation_json(in.file, in.X, in.info);
  o.results["search"] = search_json(r);
  record_search_cap(o, r);
  human_foliation(o, in.X, in.info);
  human_search(o, r);

  std::vector<DarbouxCandidate> used = without_products(r.candidates);
  for (const auto& text : in.file.candidates) {
    const auto c = cofactor(in.X, parse_poly(text));
    if (!c) {
      o.notes.push_back("supplied candidate " + text + " is not invariant; ignored");
      continue;
    }
    if (std::none_of(used.begin(), used.end(), [&](const auto& u) { return u.f == c->f; }))
      used.push_back(*c);
  }
  o.results["curves_used"] = Json::array();
  for (const auto& c : used) o.results["curves_used"].push_back(candidate_json(c));
  o.results["first_integral"] = nullptr;
  o.results["integrating_factor"] = nullptr;
  if (used.empty()) {
    o.notes.push_back("no invariant curves available; nothing to assemble");
    o.human << "no invariant curves to assemble\n";
    return;
  }

  if (const auto fi = assemble_first_integral(used)) {
    o.results["first_integral"] = structure_json(*fi);
    o.human << "first integral: " << product_text(*fi) << "\n";
  }
  const auto inf = assemble_integrating_factor(in.X, used);
  if (!inf) {
    o.human << "integrating factor: none of Darboux form over these curves\n";
    return;
  }
  Json j = structure_json(*inf);
  const ResidueBudget b = check_residue_budget(*inf, in.info.degree_d);
  j["budget"] = {{"sum", q(b.budget_sum)},
                 {"expected", b.expected},
                 {"residue_infinity", q(b.residue_infinity)},
                 {"expected_residue", q(b.expected_residue)},
                 {"holds", b.holds()}};
  o.results["integrating_factor"] = j;
  verdict(o, "closedness", inf->closedness_verified, "dw - w ^ eta0 expands to zero");
  verdict(o, "residue_budget", b.holds(),
          "sum mu_i deg f_i + mu_inf = " + q(b.budget_sum) + ", d + 2 = " +
              std::to_string(b.expected) + "; Res_inf = " + q(b.residue_infinity));
  o.human << "integrating factor: R = " << product_text(*inf) << "\n"
          << "  mu_infinity = " << q(*inf->pole_at_infinity) << "\n"
          << "  closedness: " << (inf->closedness_verified ? "verified" : "FAILED") << "\n"
          << "  budget: " << q(b.budget_sum) << " = d+2 = " << b.expected
          << (b.holds() ? " ok" : " FAILED") << ", Res_inf = " << q(b.residue_infinity) << "\n";
  if (!b.holds()) o.exit_code = kExitBound;
}

void cmd_speyer(Outcome& o, const std::string& range, bool lambda, unsigned threads) {
  const auto [lo, hi] = parse_m_range(range);
  const SpeyerVariant variant = lambda ? SpeyerVariant::Lambda : SpeyerVariant::Plain;
  o.hash_source = "speyer m=" + std::to_string(lo) + ".." + std::to_string(hi) +
                  " variant=" + std::string(to_string(variant));
  SpeyerOptions opts;
  opts.threads = threads;
  o.results["variant"] = to_string(variant);
  o.results["bound"] = speyer_bound(variant);
  o.results["rows"] = Json::array();
  int best = 0;
  int best_m = 0;
  o.human << "speyer (" << to_string(variant) << "), bound N <= " << speyer_bound(variant) << "\n";
  o.human << "     m  worst_N  cases  witness\n";
  for (int m = lo; m <= hi; ++m) {
    const bool skip = m <= 2 || (lambda && euler_phi(m) < 4);
    if (skip && lo != hi) {
      o.notes.push_back("m = " + std::to_string(m) + " skipped (no " +
                        std::string(to_string(variant)) + " decomposition)");
      continue;
    }
    const SpeyerReport r = lambda ? verify_speyer2(m, opts) : verify_speyer(m, opts);
    const auto& d = r.witness.decomposition;
    Json row{{"m", m},
             {"worst_N", r.worst_N},
             {"cases_scanned", r.cases_scanned},
             {"witness",
              {{"phi_set", d.phi_set},
               {"lambda", d.lambda ? Json(*d.lambda) : Json(nullptr)},
               {"multiset", r.witness.multiset}}}};
    o.results["rows"].push_back(row);
    if (r.worst_N > best) {
      best = r.worst_N;
      best_m = m;
    }
    std::ostringstream phi;
    for (std::size_t i = 0; i < d.phi_set.size(); ++i) phi << (i ? "," : "") << d.phi_set[i];
    std::ostringstream ms;
    for (std::size_t i = 0; i < r.witness.multiset.size(); ++i)
      ms << (i ? "+" : "") << r.witness.multiset[i];
    o.human << std::setw(6) << m << std::setw(9) << r.worst_N << std::setw(7) << r.cases_scanned
            << "  Phi={" << phi.str() << "}"
            << (d.lambda ? " lambda=" + std::to_string(*d.lambda) : std::string()) << "  "
            << ms.str() << " = 0\n";
  }
  o.results["max_worst_N"] = best;
  o.results["argmax_m"] = best_m;
  o.human << "max worst_N = " << best << " (at m = " << best_m << ")\n";
  verdict(o, "speyer_bound", best <= speyer_bound(variant),
          "max worst_N " + std::to_string(best) + " <= " + std::to_string(speyer_bound(variant)));
}

void cmd_kmin(Outcome& o, const std::vector<std::string>& tokens) {
  const auto [data, profile] = parse_orbifold_tokens(tokens);
  auto list = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  };
  o.hash_source = "kmin g=" + std::to_string(data.genus) + " b=" + list(data.b_orders) +
                  " c=" + std::to_string(data.c_count) + " d=" + list(data.d_mults) +
                  " e=" + list(data.e_mults) + " profile=" + std::string(to_string(profile));
  const KminReport r = k_min(data, profile);
  const OrbifoldDegree deg = orbifold_degree(data);
  o.results["data"] = {{"genus", data.genus},
                       {"b", data.b_orders},
                       {"c", data.c_count},
                       {"d", data.d_mults},
                       {"e", data.e_mults}};
  o.results["profile"] = to_string(profile);
  o.results["orbifold_degree"] = {{"canonical", q(deg.canonical)},
                                  {"direct_image", q(deg.direct_image)},
                                  {"total", q(deg.total())}};
  o.results["k_min"] = r.k_min;
  o.results["threshold"] = r.threshold;
  o.results["trace"] = Json::array();
  for (const auto& [k, v] : r.delta_trace) o.results["trace"].push_back({k, v});
  o.results["profile_cap"] = profile_cap(profile);
  verdict(o, "profile_cap", r.within_profile_cap(),
          "k_min " + std::to_string(r.k_min) + " <= " + std::to_string(profile_cap(profile)));
  o.human << "orbifold degree = " << q(deg.total()) << " (canonical " << q(deg.canonical)
          << ", direct image " << q(deg.direct_image) << ")\n";
  o.human << "k_min = " << r.k_min << "  [profile " << to_string(profile) << ", cap "
          << profile_cap(profile) << "]\n";
  o.human << "trace (k, deg):";
  for (const auto& [k, v] : r.delta_trace) o.human << " " << k << ":" << v;
  o.human << "\n";
  if (!r.within_profile_cap())
    throw BoundViolated("k_min = " + std::to_string(r.k_min) + " exceeds the " +
                        std::string(to_string(profile)) + " cap " +
                        std::to_string(profile_cap(profile)));
}

void cmd_bound(Outcome& o, int d, const std::string& profile_text) {
  const BoundProfile profile = parse_bound_profile(profile_text);
  o.hash_source = "bound d=" + std::to_string(d) + " profile=" +
                  std::string(profile_cli_name(profile));
  const int bound = degree_bound(d, profile);
  o.results = {{"d", d},
               {"profile", profile_cli_name(profile)},
               {"multiplier", bound_multiplier(profile)},
               {"bound", bound}};
  o.human << "degree bound (" << profile_name(profile) << ", d = " << d << "): "
          << bound_multiplier(profile) << " (d - 1) = " << bound << "\n";
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const FieldError*>(&e)) return "FieldError";
  if (dynamic_cast<const NegativeExponent*>(&e)) return "NegativeExponent";
  if (dynamic_cast<const UnknownVariable*>(&e)) return "UnknownVariable";
  if (dynamic_cast<const SyntaxError*>(&e)) return "SyntaxError";
  if (dynamic_cast<const InputError*>(&e)) return "InputError";
  if (dynamic_cast<const DegreeTooSmall*>(&e)) return "DegreeTooSmall";
  if (dynamic_cast<const NotBig*>(&e)) return "NotBig";
  if (dynamic_cast<const PhiTooSmall*>(&e)) return "PhiTooSmall";
  if (dynamic_cast<const NoValidDecomposition*>(&e)) return "NoValidDecomposition";
  if (dynamic_cast<const ConstantInput*>(&e)) return "ConstantInput";
  if (dynamic_cast<const DomainError*>(&e)) return "DomainError";
  if (dynamic_cast<const SearchResourceLimit*>(&e)) return "SearchResourceLimit";
  if (dynamic_cast<const ResourceLimit*>(&e)) return "ResourceLimit";
  if (dynamic_cast<const BoundViolated*>(&e)) return "BoundViolated";
  return "Error";
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const BoundViolated*>(&e)) return kExitBound;
  if (dynamic_cast<const ResourceLimit*>(&e)) return kExitResource;
  return kExitInput;
}

unsigned parse_threads(const std::string& text, const std::string& source) {
  unsigned value = 0;
  std::istringstream in(text);
  if (!(in >> value) || !in.eof() || value == 0)
    throw InputError(source + " expects a positive integer (got '" + text + "')");
  return value;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::optional<std::string> env_threads) {
  CLI::App app{"Exact invariant-curve search, sumset verification and orbifold k_min tables",
               "effint"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));
  bool json = false;
  bool no_timestamp = false;
  std::string threads_text;
  app.add_flag("--json", json, "Emit the report as JSON");
  app.add_flag("--no-timestamp", no_timestamp, "Omit the timestamp from the report");
  app.add_option("--threads", threads_text, "Worker threads (default: EFFINT_THREADS or 1)");

  std::string file;
  std::string nmax = "auto";
  std::string profile = "thmA";
  auto* curves = app.add_subcommand("curves", "Search invariant algebraic curves");
  curves->add_option("file", file, "Foliation JSON file")->required();
  curves->add_option("--nmax", nmax, "Maximal curve degree or 'auto'");
  curves->add_option("--profile", profile, "Bound profile: thmA | a2g1 | a2g1n | a2hyp");
  auto* check = app.add_subcommand("check", "Verify the candidate curves listed in a file");
  check->add_option("file", file, "Foliation JSON file")->required();
  auto* darboux = app.add_subcommand("darboux", "Search curves and assemble Darboux structures");
  darboux->add_option("file", file, "Foliation JSON file")->required();
  darboux->add_option("--nmax", nmax, "Maximal curve degree or 'auto'");
  darboux->add_option("--profile", profile, "Bound profile: thmA | a2g1 | a2g1n | a2hyp");
  std::string m_range;
  bool lambda = false;
  auto* speyer = app.add_subcommand("speyer", "Exhaustive roots-of-unity sumset scan");
  speyer->add_option("--m", m_range, "Modulus or range lo..hi")->required();
  speyer->add_flag("--lambda", lambda, "Scan the variant with a removed pair {lambda, -lambda}");
  std::vector<std::string> tokens;
  auto* kmin = app.add_subcommand("kmin", "k_min of orbifold fiber data");
  kmin->add_option("tokens", tokens, "g=.. b=.. c=.. d=.. e=.. profile=..")->required();
  int d = 0;
  auto* bound = app.add_subcommand("bound", "Degree bound for invariant curves");
  bound->add_option("-d", d, "Foliation degree")->required();
  bound->add_option("--profile", profile, "Bound profile: thmA | a2g1 | a2g1n | a2hyp");
  for (auto* sub : {curves, check, darboux, speyer, kmin, bound}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInput;
  }

  CLI::App* used = app.get_subcommands().front();
  Outcome o;
  Json report;
  report["schema_id"] = kSchemaId;
  report["version"] = kVersion;
  report["command"] = {{"name", used->get_name()}, {"argv", args}};

  int code = kExitOk;
  std::optional<Json> error;
  try {
    unsigned threads = 1;
    if (!threads_text.empty()) {
      threads = parse_threads(threads_text, "--threads");
    } else if (env_threads && !env_threads->empty()) {
      threads = parse_threads(*env_threads, "EFFINT_THREADS");
    }
    if (used == curves) cmd_curves(o, file, nmax, profile, threads);
    if (used == check) cmd_check(o, file);
    if (used == darboux) cmd_darboux(o, file, nmax, profile, threads);
    if (used == speyer) cmd_speyer(o, m_range, lambda, threads);
    if (used == kmin) cmd_kmin(o, tokens);
    if (used == bound) cmd_bound(o, d, profile);
    code = o.exit_code;
  } catch (const std::exception& e) {
    code = exit_code_for(e);
    Json j{{"kind", error_kind(e)}, {"message", e.what()}, {"exit_code", code}};
    if (const auto* f = dynamic_cast<const FieldError*>(&e)) {
      j["field"] = f->field();
      if (f->offset()) j["offset"] = *f->offset();
    } else if (const auto* s = dynamic_cast<const SyntaxError*>(&e)) {
      j["offset"] = s->offset();
    }
    error = std::move(j);
    err << "effint: " << e.what() << "\n";
  }

  report["input_sha256"] = sha256_hex(o.hash_source);
  report["results"] = error ? Json(nullptr) : o.results;
  report["verdicts"] = o.verdicts;
  report["resource_notes"] = o.notes;
  if (error) report["error"] = *error;
  if (!no_timestamp) report["timestamp"] = utc_now();

  if (json) {
    out << report.dump(2) << "\n";
  } else if (!error) {
    out << o.human.str();
    for (const auto& v : o.verdicts)
      out << (v["pass"].get<bool>() ? "PASS " : "FAIL ") << v["name"].get<std::string>() << ": "
          << v["detail"].get<std::string>() << "\n";
    for (const auto& n : o.notes) out << "note: " << n.get<std::string>() << "\n";
    out << "input sha256: " << report["input_sha256"].get<std::string>() << "\n";
  }
  return code;
}

}  // namespace effint::cli
