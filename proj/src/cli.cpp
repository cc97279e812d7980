#include "quiver/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <optional>
#include <ostream>

#include "quiver/avoiding_ideal.hpp"
#include "quiver/components.hpp"
#include "quiver/dln_analysis.hpp"
#include "quiver/errors.hpp"
#include "quiver/qip_lattice.hpp"
#include "quiver/qseries.hpp"

namespace quiver::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kCapEnv = "QUIVER_CODIM_CAP";
const BigInt kAutoBruteLimit = 1'000'000;

struct Job {
  std::vector<int> dims;
  int r = 0;
  std::string method = "auto";
  std::optional<int> truncation;
  std::string format = "text";
  std::optional<std::uint64_t> cap;
  bool emit_witnesses = false;
  std::optional<int> max_degree;
  std::uint64_t basis_cap = kDefaultBasisCap;
  int bound = 10;
  bool inject_fault = false;
};

struct Output {
  Json input = Json::object();
  std::string method;
  Json C;
  Json theta;
  Json details = Json::object();
};

// Exact integers stay numbers up to 2^53 and become decimal strings above.
Json big(const BigInt& v) {
  static const BigInt limit = BigInt(1) << 53;
  if (abs(v) <= limit) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

Json big_list(const std::vector<BigInt>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(big(x));
  return a;
}

Json rows_json(const TriangularArray& t) { return t.rows(); }

Json orbit_json(const OrbitDescriptor& o) {
  return Json{{"kostant", rows_json(o.kostant)}, {"rank", rows_json(o.rank)}, {"codim", o.codim}};
}

std::uint64_t resolve_cap(const Job& job) {
  if (job.cap) return *job.cap;
  const char* env = std::getenv(kCapEnv);
  if (!env || !*env) return kDefaultEnumerationCap;
  std::uint64_t v = 0;
  const char* end = env + std::char_traits<char>::length(env);
  auto [p, ec] = std::from_chars(env, end, v);
  if (ec != std::errc() || p != end || v == 0)
    throw InvalidInput(std::string(kCapEnv) + " must be a positive integer, got '" + env + "'");
  return v;
}

Method parse_method(const std::string& s) {
  if (s == "brute") return Method::Brute;
  if (s == "qseries") return Method::QSeries;
  if (s == "qip") return Method::Qip;
  if (s == "closed") return Method::Closed;
  if (s == "ideal") return Method::Ideal;
  throw InvalidInput("method '" + s + "' is not available here");
}

Output begin(const Job& job, const DimensionVector& d, bool with_rank = true) {
  Output o;
  o.input["dims"] = d.entries();
  if (with_rank) o.input["r"] = job.r;
  o.input["sorted"] = d.sorted().entries();
  o.input["permutation"] = d.sorting_permutation();
  return o;
}

MethodOptions method_options(const Job& job) {
  MethodOptions m;
  m.cap = resolve_cap(job);
  m.truncation = job.truncation;
  m.max_degree = job.max_degree;
  m.basis_cap = job.basis_cap;
  return m;
}

Output cmd_components(const Job& job) {
  const DimensionVector d(job.dims);
  require_rank_in_range(d, job.r);
  const auto opts = method_options(job);
  Output o = begin(job, d);
  o.method = job.method;
  std::optional<std::vector<OrbitDescriptor>> witnesses;
  ComponentReport rep;
  if (job.method == "auto") {
    rep = compute_components(d, job.r, Method::Closed, opts);
    Json ran = Json::array({"closed"});
    const BigInt orbits = count_kostant_partitions_saturating(d, job.r, kAutoBruteLimit);
    if (orbits < kAutoBruteLimit && orbits <= opts.cap) {
      o.details["orbit_count"] = big(orbits);
      auto brute = compute_components(d, job.r, Method::Brute, opts);
      if (brute.C != rep.C || brute.theta != rep.theta)
        throw Disagreement("d=" + d.to_string() + " r=" + std::to_string(job.r) + ": closed (C=" + to_string(rep.C) +
                           ", theta=" + to_string(rep.theta) + ") vs brute (C=" + to_string(brute.C) +
                           ", theta=" + to_string(brute.theta) + ")");
      ran.push_back("brute");
      witnesses = std::move(brute.witnesses);
    }
    o.details["methods"] = ran;
  } else {
    rep = compute_components(d, job.r, parse_method(job.method), opts);
    if (rep.method == Method::Brute) witnesses = rep.witnesses;
    o.details["methods"] = Json::array({method_name(rep.method)});
  }
  o.C = big(rep.C);
  o.theta = big(rep.theta);
  if (job.emit_witnesses) {
    if (!witnesses) witnesses = top_components_bruteforce(d, job.r, opts.cap).witnesses;
    Json w = Json::array();
    for (const auto& x : *witnesses) w.push_back(orbit_json(x));
    o.details["witnesses"] = w;
  }
  return o;
}

Output cmd_pseries(const Job& job) {
  const DimensionVector d(job.dims);
  require_rank_in_range(d, job.r);
  const std::uint64_t cap = resolve_cap(job);
  const int t = job.truncation ? *job.truncation : default_truncation(d, job.r);
  if (t < 0) throw InvalidInput("truncation must be nonnegative");
  Output o = begin(job, d);
  QSeries s(t);
  if (job.method == "brute") {
    s = q_series_bruteforce(d, job.r, t, cap);
    o.method = "brute";
  } else if (job.method == "auto" || job.method == "qseries" || job.method == "closed") {
    s = q_series_closed(d, job.r, t);
    o.method = "qseries";
  } else {
    throw InvalidInput("pseries supports --method auto, qseries or brute");
  }
  try {
    auto [c, theta] = extract_C_theta(s);
    o.C = c;
    o.theta = big(theta);
  } catch (const NotFound&) {
    o.C = nullptr;
    o.theta = nullptr;
  }
  o.details["truncation"] = t;
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(c.get_str());
  o.details["coefficients"] = coeffs;
  o.details["series"] = s.to_string();
  return o;
}

Output cmd_qip(const Job& job) {
  const DimensionVector d(job.dims);
  require_rank_in_range(d, job.r);
  const QipInstance inst(d.shifted(-job.r));
  const auto sol = qip_enumerate(inst, resolve_cap(job));
  Output o = begin(job, d);
  o.method = "qip";
  o.C = sol.optimum;
  o.theta = sol.count();
  o.details["reduced_sorted"] = inst.d_sorted.entries();
  o.details["budget"] = inst.budget();
  o.details["optimum"] = sol.optimum;
  o.details["minimizers"] = sol.minimizers;
  if (inst.budget() >= 1) {
    const auto cp = closest_simplex_points(inst.d_sorted);
    Json p = Json::array();
    for (const auto& x : cp.p_hat) p.push_back(to_string(x));
    Json v = Json::array();
    for (const auto& x : cp.v_hats) v.push_back(big_list(x));
    o.details["closest_point"] = Json{{"m", cp.m_relevant}, {"S", big(cp.S)},
                                      {"s_hat", big_list(cp.s_hat)}, {"p_hat", p},
                                      {"rounded", big_list(cp.rounded)}, {"delta", big(cp.delta)},
                                      {"epsilon", cp.epsilon}, {"v_hats", v},
                                      {"D_hat", big(cp.D_hat)}, {"D", big(cp.D)},
                                      {"G_opt", big(cp.G_opt)}};
  }
  return o;
}

Output cmd_rlct(const Job& job) {
  const DimensionVector d(job.dims);
  const auto rep = analyze_network(d, job.r);
  Output o = begin(job, d);
  o.method = "closed";
  o.C = big(rep.sigma_codim);
  o.theta = big(rep.theta);
  o.details["fiber_codim"] = big(rep.fiber_codim);
  o.details["rlct"] = to_string(rep.rlct);
  o.details["rlcm"] = big(rep.rlcm.value);
  o.details["rlcm_boundary"] = rep.rlcm.boundary;
  return o;
}

Output cmd_orbits(const Job& job) {
  const DimensionVector d(job.dims);
  require_rank_in_range(d, job.r);
  const std::uint64_t cap = resolve_cap(job);
  Output o = begin(job, d);
  o.method = "brute";
  EnumerationOptions eo;
  eo.cap = cap;
  eo.top_min = job.r;
  eo.top_max = job.r;
  Json orbits = Json::array();
  std::optional<std::int64_t> best;
  std::int64_t count = 0;
  for_each_kostant_partition(
      d,
      [&](const KostantPartition& m) {
        const auto desc = describe_orbit(m);
        orbits.push_back(orbit_json(desc));
        if (!best || desc.codim < *best) {
          best = desc.codim;
          count = 0;
        }
        if (desc.codim == *best) ++count;
      },
      eo);
  o.C = *best;
  o.theta = count;
  o.details["orbits"] = orbits;
  Json comps = Json::array();
  for (const auto& c : enumerate_components(d, job.r, cap)) comps.push_back(orbit_json(c));
  o.details["closure_components"] = comps;
  return o;
}

Output cmd_ideal(const Job& job) {
  const DimensionVector d(job.dims);
  require_rank_in_range(d, job.r);
  const int n_max = job.max_degree ? *job.max_degree : static_cast<int>(to_int64(codim_closed_form(d, job.r)));
  const auto low = lowest_kernel(d, job.r, n_max, job.basis_cap);
  Output o = begin(job, d);
  o.method = "ideal";
  o.C = low.degree;
  o.theta = big(low.rank);
  o.details["max_degree"] = n_max;
  o.details["degenerate"] = low.degenerate;
  o.details["source_dim"] = low.piece.source_dim;
  o.details["target_dim"] = low.piece.target_dim;
  if (job.emit_witnesses && !low.degenerate) {
    const GradedBasis basis(d, low.degree, job.basis_cap);
    Json k = Json::array();
    for (const auto& v : low.piece.kernel_basis) k.push_back(basis.render(v));
    o.details["kernel_basis"] = k;
  }
  return o;
}

// Flattens nested objects to dotted keys. Arrays of scalars without blanks
// print on one line, other arrays one element per line.
void render_text(std::ostream& out, const std::string& key, const Json& v) {
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) render_text(out, key.empty() ? k : key + "." + k, x);
    return;
  }
  if (v.is_array()) {
    const bool flat = std::all_of(v.begin(), v.end(), [](const Json& x) {
      return x.is_primitive() && !(x.is_string() && x.get<std::string>().find(' ') != std::string::npos);
    });
    if (flat) {
      out << key << ":";
      for (const auto& x : v) out << ' ' << (x.is_string() ? x.get<std::string>() : x.dump());
      out << '\n';
    } else {
      for (std::size_t i = 0; i < v.size(); ++i) render_text(out, key + "[" + std::to_string(i) + "]", v[i]);
      if (v.empty()) out << key << ": (none)\n";
    }
    return;
  }
  out << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
}

void emit(const Job& job, const Output& o, std::ostream& out) {
  Json j;
  j["input"] = o.input;
  j["method"] = o.method;
  j["C"] = o.C;
  j["theta"] = o.theta;
  j["details"] = o.details;
  if (job.format == "json")
    out << j.dump(2) << '\n';
  else
    render_text(out, "", j);
}

void add_common(CLI::App* sub, Job& job, bool method) {
  sub->add_option("-d,--dims", job.dims, "Dimension vector d_0,...,d_N")->delimiter(',')->required();
  sub->add_option("-r,--rank", job.r, "Rank r of the product")->check(CLI::NonNegativeNumber);
  sub->add_option("--format", job.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--cap", job.cap, "Enumeration cap (overrides QUIVER_CODIM_CAP)")->check(CLI::PositiveNumber);
  if (method)
    sub->add_option("--method", job.method, "Method")
        ->check(CLI::IsMember({"auto", "brute", "qseries", "qip", "closed", "ideal"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Job job;
  CLI::App app{"Codimension and top components of product-rank loci of matrix tuples", "quiver-codim"};
  app.require_subcommand(1);

  auto* comp = app.add_subcommand("components", "C and theta by a chosen method");
  add_common(comp, job, true);
  comp->add_option("-T,--truncation", job.truncation, "Series truncation degree");
  comp->add_flag("--emit-witnesses", job.emit_witnesses, "List the minimal-codimension orbits");
  comp->add_option("--max-degree", job.max_degree, "Highest degree scanned by the ideal method");
  comp->add_option("--basis-cap", job.basis_cap, "Basis size cap for the ideal method");

  auto* ps = app.add_subcommand("pseries", "Generating series Q^r_d");
  add_common(ps, job, true);
  ps->add_option("-T,--truncation", job.truncation, "Series truncation degree")->check(CLI::NonNegativeNumber);

  auto* qip = app.add_subcommand("qip", "Quadratic integer program and its closest-point solution");
  add_common(qip, job, false);

  auto* rl = app.add_subcommand("rlct", "Real log-canonical threshold of the deep linear network");
  add_common(rl, job, false);

  auto* orb = app.add_subcommand("orbits", "Orbits in Sigma^r_d and the components of its closure");
  add_common(orb, job, false);

  auto* ideal = app.add_subcommand("ideal", "Lowest-degree kernel of the avoiding-ideal map");
  add_common(ideal, job, false);
  ideal->add_option("--max-degree", job.max_degree, "Highest degree scanned");
  ideal->add_option("--basis-cap", job.basis_cap, "Basis size cap");
  ideal->add_flag("--emit-witnesses", job.emit_witnesses, "Print a kernel basis");

  auto* sc = app.add_subcommand("selfcheck", "Cross-method agreement over all small dimension vectors");
  sc->add_option("--bound", job.bound, "Largest sum of entries")->check(CLI::NonNegativeNumber);
  sc->add_flag("--inject-fault", job.inject_fault, "Use a deliberately wrong codimension formula");
  sc->add_option("--cap", job.cap, "Enumeration cap")->check(CLI::PositiveNumber);
  sc->add_option("--format", job.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.push_back("quiver-codim");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (sc->parsed()) {
      SelfcheckOptions so;
      so.bound = job.bound;
      so.inject_fault = job.inject_fault;
      so.cap = resolve_cap(job);
      const auto rep = selfcheck(so);
      Output o;
      o.input = Json{{"bound", job.bound}, {"inject_fault", job.inject_fault}};
      o.method = "selfcheck";
      o.C = nullptr;
      o.theta = nullptr;
      o.details = Json{{"passed", rep.passed}, {"vectors", rep.vectors}, {"cases", rep.cases}};
      if (!rep.passed) o.details["counterexample"] = rep.counterexample;
      emit(job, o, out);
      if (!rep.passed) {
        err << "selfcheck failed: " << rep.counterexample << '\n';
        return kExitDisagreement;
      }
      return kExitOk;
    }
    Output o;
    if (comp->parsed()) o = cmd_components(job);
    else if (ps->parsed()) o = cmd_pseries(job);
    else if (qip->parsed()) o = cmd_qip(job);
    else if (rl->parsed()) o = cmd_rlct(job);
    else if (orb->parsed()) o = cmd_orbits(job);
    else o = cmd_ideal(job);
    emit(job, o, out);
    return kExitOk;
  } catch (const Disagreement& e) {
    err << "disagreement: " << e.what() << '\n';
    return kExitDisagreement;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const NotFound& e) {
    err << "not found: " << e.what() << '\n';
    return kExitResource;
  } catch (const OverflowError& e) {
    err << "overflow: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitInvalid;
  }
}

}  // namespace quiver::cli
