#include "brauerlab/commands.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "brauerlab/bounds.hpp"
#include "brauerlab/decompose.hpp"
#include "brauerlab/factorsets.hpp"
#include "brauerlab/selftest.hpp"
#include "brauerlab/traceforms.hpp"

namespace brauerlab {

namespace {

/// Runs task(i) for i < count on `jobs` threads; results stay in index order.
template <typename T>
std::vector<T> parallel_map(std::size_t count, unsigned jobs, const std::function<T(std::size_t)>& task) {
  std::vector<T> out(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        out[i] = task(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(jobs, count)));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

FieldElement parse_in(const FieldPtr& F, const std::string& what, const std::string& text) {
  try {
    return parse_field_element(F, text);
  } catch (const std::exception& e) {
    throw InputError(what + ": " + e.what());
  }
}

/// Polynomial in alpha1, alpha2 with scalar coefficients, reduced in K.
KummerField::Elem parse_kummer(const KummerField& K, const std::string& what, const std::string& text) {
  auto ctx = make_field(K.base()->conductor(), {"alpha1", "alpha2"});
  auto f = parse_in(ctx, what, text);
  if (!f.denominator().empty()) throw InputError(what + ": expected a polynomial in alpha1, alpha2");
  auto x = K.zero();
  for (const auto& [mono, coeff] : f.numerator().terms()) {
    auto term = K.mul(K.pow(K.alpha1(), mono[0]), K.pow(K.alpha2(), mono[1]));
    x = K.add(x, K.scale(term, FieldElement(K.base(), coeff)));
  }
  return x;
}

nlohmann::json entries_json(const std::vector<FieldElement>& e) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& x : e) a.push_back(x.to_string());
  return a;
}

}  // namespace

CertificateEnvelope cmd_bounds(long long n, bool roots_of_unity) {
  CertificateEnvelope e;
  e.command = "bounds";
  e.input = {{"n", n}, {"assume_roots_of_unity", roots_of_unity}};
  BoundReport r;
  try {
    r = d_bounds(n, {roots_of_unity});
  } catch (const std::invalid_argument& ex) {
    throw InputError(ex.what());
  }
  e.result = to_json(r);
  e.add("lower <= upper", r.lower <= r.upper, std::to_string(r.lower) + " <= " + std::to_string(r.upper));
  bool cited = !r.lower_citation.empty() && !r.upper_citation.empty();
  for (const auto& p : r.provenance) cited = cited && !p.citation.empty() && !p.formula.empty();
  e.add("every bound cites a formula", cited);
  return e;
}

CertificateEnvelope cmd_udn_factorset(int n, const std::string& check) {
  static const std::set<std::string> kinds{"all", "cocycle", "equivariance", "normalized", "wedge"};
  if (!kinds.count(check)) throw InputError("--check must be one of all, cocycle, equivariance, normalized, wedge");
  if (n < 2 || n > 12) throw InputError("--n must satisfy 2 <= n <= 12");
  const bool odd = n % 2 == 1 && n >= 3;
  if (!odd && (check == "normalized" || check == "wedge"))
    throw InputError("the normalized factor set c'_ijh needs odd n >= 3");
  CertificateEnvelope e;
  e.command = "udn-factorset";
  e.input = {{"n", n}, {"check", check}};
  auto c = udn_factor_set(n);
  auto want = [&](const char* k) { return check == "all" || check == k; };
  if (want("cocycle")) e.append(check_cocycle(c), "c_ijh: ");
  if (want("equivariance")) e.append(check_equivariance(c), "c_ijh: ");
  e.result["factor_set"] = to_json(c);
  if (odd) {
    auto cn = normalized_factor_set(n);
    if (want("cocycle")) e.append(check_cocycle(cn), "c'_ijh: ");
    if (want("equivariance")) e.append(check_equivariance(cn), "c'_ijh: ");
    if (want("normalized")) e.append(check_normalized(cn), "c'_ijh: ");
    if (want("wedge")) e.append(check_wedge_entries(cn), "c'_ijh: ");
    e.result["normalized_factor_set"] = to_json(cn);
  }
  return e;
}

CertificateEnvelope cmd_lattice(const std::string& group, const std::string& subgroup, const std::string& sequence,
                                std::size_t r, int n) {
  CertificateEnvelope e;
  e.command = "lattice";
  if (sequence == "formanek") {
    if (n < 3 || n > 6) throw InputError("--n must satisfy 3 <= n <= 6");
    e.input = {{"sequence", sequence}, {"n", n}};
    auto d = formanek_sequence(n);
    const std::size_t rank = d.sequence.inner.source->rank();
    e.add("kernel rank n^2 + 1", rank == static_cast<std::size_t>(n * n + 1), std::to_string(rank));
    e.append(is_exact(d.sequence), "exactness: ");
    e.add("Ker f = U + U + A(x)A equivariant", is_equivariant(d.decomposition));
    e.add("Ker f = U + U + A(x)A unimodular", abs(determinant(d.decomposition.matrix)) == 1);
    e.result = {{"kernel_rank", rank}, {"decomposition", matrix_to_json(d.decomposition.matrix)}};
    return e;
  }
  if (sequence != "freepres" && sequence != "seq2") throw InputError("--sequence must be freepres, seq2 or formanek");
  std::optional<FamilyMember> member;
  std::vector<std::string> names;
  for (auto& f : group_family()) {
    names.push_back(f.name);
    if (f.name == group) member = f;
  }
  if (!member) {
    std::string all;
    for (const auto& s : names) all += (all.empty() ? "" : ", ") + s;
    throw InputError("unknown group " + group + "; choose from " + all);
  }
  std::optional<Subgroup> h;
  for (const auto& s : member->subgroups) {
    std::string label = s.is_trivial() ? "1" : (s.order() == member->group->order() ? "G" : s.name());
    if (label == subgroup || (!s.name().empty() && s.name() == subgroup)) h = s;
  }
  if (!h) throw InputError("unknown subgroup " + subgroup + " of " + group + " (use 1, G or a listed name)");
  CosetSpace cs(member->group, *h);
  if (cs.index() < 2) throw InputError("H = G gives omega(G/H) = 0");
  e.input = {{"group", group}, {"subgroup", subgroup}, {"sequence", sequence}};
  if (sequence == "freepres") {
    if (r < 1 || r > 4) throw InputError("--r must satisfy 1 <= r <= 4");
    e.input["r"] = r;
    const std::size_t need = min_generators_rel(*h);
    if (need > r) throw InputError("H with " + std::to_string(r) + " elements cannot generate G (needs " + std::to_string(need) + ")");
    auto gens = min_generating_tuple(*h);
    while (gens.size() < r) gens.push_back(member->group->identity());
    auto seq = freepres_sequence(cs, gens);
    const std::size_t rank = seq.inner.source->rank();
    e.add("kernel rank r|G| - [G:H] + 1", rank == r * member->group->order() - cs.index() + 1, std::to_string(rank));
    e.append(is_exact(seq), "exactness: ");
    const bool faithful = is_faithful(*seq.inner.source);
    e.add("faithful iff r >= 2 or H != 1", faithful == faithful_predicate_freepres(*h, r), faithful ? "faithful" : "not faithful");
    nlohmann::json g = nlohmann::json::array();
    for (auto x : gens) g.push_back(format_cycles(member->group->element(x)));
    e.result = {{"kernel_rank", rank}, {"faithful", faithful}, {"generators", g}, {"kernel", lattice_to_json(*seq.inner.source)}};
  } else {
    auto seq = seq2_sequence(cs);
    e.append(is_exact(seq), "exactness: ");
    auto m = seq2_m_map(cs);
    e.add("m equivariant and unimodular", is_equivariant(m) && abs(determinant(m.matrix)) == 1);
    auto omega = augmentation_kernel(cs).first;
    const bool faithful = is_faithful(*tensor(omega, omega));
    e.add("omega^(x)2 faithful iff core trivial and index >= 3", faithful == faithful_predicate_seq2(*h),
          faithful ? "faithful" : "not faithful");
    e.result = {{"omega_rank", omega->rank()}, {"faithful", faithful}, {"P_rank", seq.inner.target->rank()}};
  }
  return e;
}

CrossedAlgebra crossed_from_params(int m, const std::string& params) {
  if (m < 2 || m > 6) throw InputError("--m must satisfy 2 <= m <= 6");
  std::map<std::string, std::string> kv{{"b2", "1"}};
  std::stringstream ss(params);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("--params entries must look like key=value: " + item);
    std::string key = item.substr(0, eq);
    static const std::set<std::string> keys{"a1", "a2", "f1", "f2", "u", "b2"};
    if (!keys.count(key)) throw InputError("unknown parameter " + key + " (expected a1, a2, f1, f2, u, b2)");
    kv[key] = item.substr(eq + 1);
  }
  for (const char* k : {"a1", "a2", "f1", "f2", "u"})
    if (!kv.count(k)) throw InputError(std::string("missing parameter ") + k);
  auto F = make_field(crossed_conductor(m), {});
  auto a1 = parse_in(F, "a1", kv["a1"]), a2 = parse_in(F, "a2", kv["a2"]);
  if (a1.is_zero() || a2.is_zero()) throw InputError("zero parameter");
  auto K = std::make_shared<const KummerField>(F, m, a1, a2);
  auto b1 = K->in_alpha2(parse_in(F, "f1", kv["f1"]), parse_in(F, "f2", kv["f2"]));
  auto u = parse_kummer(*K, "u", kv["u"]);
  auto b2 = parse_kummer(*K, "b2", kv["b2"]);
  try {
    return crossed_from_data(K, u, b1, b2, true);
  } catch (const std::exception& ex) {
    throw InputError(ex.what());
  }
}

CertificateEnvelope cmd_crossed_decompose(int m, const std::optional<std::string>& params, std::size_t random,
                                          std::uint64_t seed, unsigned jobs) {
  CertificateEnvelope e;
  e.command = "crossed-decompose";
  if (params.has_value() == (random > 0)) throw InputError("give exactly one of --params or --random N");
  if (params) {
    e.input = {{"m", m}, {"params", *params}};
    auto A = crossed_from_params(m, *params);
    DecompositionCertificate cert;
    try {
      cert = decompose(A);
    } catch (const std::invalid_argument& ex) {
      throw InputError(ex.what());
    }
    e.append(cert.checks);
    e.result = to_json(cert, A);
    return e;
  }
  if (m < 2 || m > 4) throw InputError("--m must satisfy 2 <= m <= 4 for random instances");
  if (random > 1000) throw InputError("--random must be at most 1000");
  e.seed = seed;
  e.input = {{"m", m}, {"random", random}};
  struct Out {
    nlohmann::json json;
    Certificate checks;
  };
  auto outs = parallel_map<Out>(random, jobs, [&](std::size_t i) {
    Rng rng(Rng::derive(seed, i));
    auto A = random_crossed_instance(m, rng);
    auto cert = decompose(A);
    return Out{to_json(cert, A), cert.checks};
  });
  nlohmann::json list = nlohmann::json::array();
  for (std::size_t i = 0; i < outs.size(); ++i) {
    e.append(outs[i].checks, "instance " + std::to_string(i) + ": ");
    list.push_back(outs[i].json);
  }
  e.result = {{"instances", list}};
  return e;
}

CertificateEnvelope cmd_traceform(int m, std::size_t random, std::uint64_t seed, unsigned jobs) {
  if (m != 2) throw InputError("trace-form analysis covers degree 4 only (--m 2)");
  if (random < 1 || random > 1000) throw InputError("--random must satisfy 1 <= N <= 1000");
  CertificateEnvelope e;
  e.command = "traceform";
  e.seed = seed;
  e.input = {{"m", m}, {"random", random}};
  const auto& eq_cert = generic_witt_certificate(SerreReading::corrected, WittTarget::equiv);
  const auto& lit_cert = generic_witt_certificate(SerreReading::corrected, WittTarget::split_plus_equiv);
  struct Out {
    nlohmann::json json;
    CertificateEnvelope checks;
  };
  auto outs = parallel_map<Out>(random, jobs, [&](std::size_t i) {
    Rng rng(Rng::derive(seed, i));
    for (int attempt = 0; attempt < 1000; ++attempt) {
      auto A = random_crossed_instance(2, rng);
      TraceData td;
      try {
        td = trace_data(A);
      } catch (const std::domain_error&) {
        continue;
      }
      Out o;
      o.checks.append(td.checks);
      auto serre = serre_form(td);
      auto ef = equiv_form(td);
      o.checks.append(ef.audit, "equiv_form: ");
      auto to_eq = witt_derive_equivalence(td, SerreReading::corrected, WittTarget::equiv);
      auto to_lit = witt_derive_equivalence(td, SerreReading::corrected, WittTarget::split_plus_equiv);
      o.checks.add("Witt certificate: serre_form -> equiv_form", to_eq.ok, to_eq.detail);
      o.checks.add("Witt certificate: serre_form -> <1, t1^2 - n1> + equiv_form", to_lit.ok, to_lit.detail);
      auto tf = rational_entries(trace_form(A));
      auto eqr = rational_diagonal(ef.form.entries());
      auto sr = rational_diagonal(serre.entries());
      if (eqr && sr) {
        o.checks.add("trace form isometric to equiv_form over Q(i)", isometry_over_Qi(tf, *eqr));
        o.checks.add("trace form Witt-equivalent to serre_form over Q(i)", witt_equivalent_over_Qi(tf, *sr));
      } else {
        o.checks.add_inconclusive("rational invariants", "entries not rational");
      }
      nlohmann::json data{{"a1", td.a1.to_string()}, {"a2", td.a2.to_string()}, {"f1", td.f1.to_string()},
                          {"f2", td.f2.to_string()}};
      for (int k = 0; k < 3; ++k) {
        data["t" + std::to_string(k + 1)] = td.t[k].to_string();
        data["n" + std::to_string(k + 1)] = td.n[k].to_string();
      }
      nlohmann::json exprs = nlohmann::json::array();
      for (const auto& x : ef.entries) exprs.push_back(expr_to_string(x, ef.generator_names));
      auto inv = invariants_over_Qi(tf);
      o.json = {{"algebra", to_json(A)},
                {"trace_data", data},
                {"trace_form_diagonal", entries_json(diagonalize(trace_form(A)).form.entries())},
                {"serre_form", entries_json(serre.entries())},
                {"equiv_form", {{"entries", entries_json(ef.form.entries())}, {"expressions", exprs},
                                {"generators", ef.generator_names}}},
                {"invariants_over_Qi", {{"rank", inv.rank}, {"discriminant", inv.discriminant.get_str()},
                                        {"hasse_negative", [&] {
                                           nlohmann::json a = nlohmann::json::array();
                                           for (const auto& p : inv.hasse_negative) a.push_back(p.get_str());
                                           return a;
                                         }()}}}};
      return o;
    }
    throw std::runtime_error("no nondegenerate instance in 1000 attempts");
  });
  nlohmann::json list = nlohmann::json::array();
  for (std::size_t i = 0; i < outs.size(); ++i) {
    for (const auto& c : outs[i].checks.checks)
      e.checks.push_back({"instance " + std::to_string(i) + ": " + c.name, c.status, c.details});
    list.push_back(outs[i].json);
  }
  nlohmann::json moves = nlohmann::json::array();
  if (eq_cert.moves)
    for (const auto& mv : *eq_cert.moves) moves.push_back(to_json(mv));
  e.result = {{"serre_reading", reading_name(SerreReading::corrected)},
              {"move_certificate", {{"target", target_name(WittTarget::equiv)}, {"moves", moves}, {"status", eq_cert.detail}}},
              {"literal_target", {{"target", target_name(WittTarget::split_plus_equiv)}, {"status", lit_cert.detail}}},
              {"printed_reading", generic_witt_certificate(SerreReading::printed, WittTarget::equiv).detail},
              {"instances", list}};
  return e;
}

CertificateEnvelope cmd_selftest(std::uint64_t seed, unsigned jobs, int criterion) {
  if (criterion == 0) return selftest_envelope(run_selftest(seed, jobs), seed);
  if (criterion < 1 || criterion > kCriterionCount)
    throw InputError("--criterion must satisfy 1 <= k <= " + std::to_string(kCriterionCount));
  return selftest_envelope({run_criterion(criterion, seed)}, seed);
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"brauerlab: exact certificates for crossed products, factor sets, lattices and trace forms"};
  app.require_subcommand(1);
  std::string out_file;
  std::uint64_t seed = 42;
  unsigned jobs = 1;
  if (const char* env = std::getenv("BRAUERLAB_JOBS")) {
    try {
      jobs = static_cast<unsigned>(std::stoul(env));
    } catch (...) {
      err << "error: BRAUERLAB_JOBS must be a positive integer\n";
      return 2;
    }
  }
  bool timing = false;
  app.add_option("--out", out_file, "write the envelope to FILE instead of standard output");
  app.add_option("--seed", seed, "seed for all randomness");
  app.add_option("--jobs", jobs, "worker threads for independent instances (default BRAUERLAB_JOBS or 1)")
      ->check(CLI::Range(1u, 256u));
  app.add_flag("--timing", timing, "record wall-clock time in the envelope");

  long long bn = 0;
  bool roots = false;
  auto* bounds = app.add_subcommand("bounds", "lower and upper bounds for d(n)");
  bounds->add_option("--n", bn, "degree")->required();
  bounds->add_flag("--assume-roots-of-unity", roots, "base field contains a primitive n-th root of unity");

  int fn = 0;
  std::string check = "all";
  auto* udn = app.add_subcommand("udn-factorset", "factor set of the universal division algebra UD(n)");
  udn->add_option("--n", fn, "degree")->required();
  udn->add_option("--check", check, "all, cocycle, equivariance, normalized or wedge");

  std::string group = "S3", subgroup = "1", sequence = "seq2";
  std::size_t r = 2;
  int ln = 3;
  auto* lat = app.add_subcommand("lattice", "exact sequences of G-lattices and faithfulness");
  lat->add_option("--group", group, "family member, e.g. S3, D4, A4, S4");
  lat->add_option("--subgroup", subgroup, "1, G or a listed subgroup name");
  lat->add_option("--sequence", sequence, "freepres, seq2 or formanek");
  lat->add_option("--r", r, "number of free generators (freepres)");
  lat->add_option("--n", ln, "degree (formanek)");

  int m = 2;
  std::optional<std::string> params;
  std::size_t random = 0;
  auto* cd = app.add_subcommand("crossed-decompose", "decompose (K, Z/m x Z/2, u, b1, b2) into symbols");
  cd->add_option("--m", m, "order of sigma1");
  cd->add_option("--params", params, "a1=..,a2=..,f1=..,f2=..,u=..[,b2=..]");
  cd->add_option("--random", random, "number of seeded random instances");

  int tm = 2;
  std::size_t trandom = 1;
  auto* tf = app.add_subcommand("traceform", "trace forms of degree-4 crossed products");
  tf->add_option("--m", tm, "must be 2");
  tf->add_option("--random", trandom, "number of seeded random instances");

  int criterion = 0;
  auto* st = app.add_subcommand("selftest", "run acceptance criteria 1-9");
  st->add_option("--criterion", criterion, "run a single criterion");

  for (auto* sub : {bounds, udn, lat, cd, tf, st}) {
    sub->add_option("--out", out_file, "write the envelope to FILE");
    sub->add_option("--seed", seed, "seed for all randomness");
    sub->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));
    sub->add_flag("--timing", timing, "record wall-clock time");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  if (jobs == 0) jobs = 1;

  auto t0 = std::chrono::steady_clock::now();
  CertificateEnvelope env;
  try {
    if (*bounds) env = cmd_bounds(bn, roots);
    else if (*udn) env = cmd_udn_factorset(fn, check);
    else if (*lat) env = cmd_lattice(group, subgroup, sequence, r, ln);
    else if (*cd) env = cmd_crossed_decompose(m, params, random, seed, jobs);
    else if (*tf) env = cmd_traceform(tm, trandom, seed, jobs);
    else env = cmd_selftest(seed, jobs, criterion);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  if (timing) env.timing = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const std::string text = serialize(env);
  if (!out_file.empty()) {
    std::ofstream f(out_file, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << out_file << "\n";
      return 2;
    }
    f << text;
  } else {
    out << text;
  }
  for (const auto& c : env.checks)
    if (c.status == CheckStatus::fail) err << "FAIL " << c.name << (c.details.empty() ? "" : ": " + c.details) << "\n";
  return env.status() == CheckStatus::fail ? 1 : 0;
}

}  // namespace brauerlab
