#include "report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "witt/axioms.hpp"

#ifndef WITT_VERSION
#define WITT_VERSION "0.0.0"
#endif

namespace witt::report {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Runs fn(0..count-1) on a pool; results land by index so output order is fixed.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < count;) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

json header(const std::string& command, const RunConfig& cfg) {
  json j;
  j["tool"] = "wittctl";
  j["version"] = WITT_VERSION;
  j["command"] = command;
  json c;
  c["p"] = cfg.p;
  c["m"] = cfg.m;
  c["n"] = cfg.n;
  if (!cfg.lambdas.empty()) c["lambda"] = cfg.lambdas;
  c["gradation"] = cfg.gradation;
  c["seed"] = cfg.seed;
  c["max_ext"] = cfg.max_ext;
  c["max_dim"] = cfg.max_dim;
  if (command == "verify") c["sample"] = cfg.sample;
  if (cfg.corrupt) c["corrupt"] = true;
  j["config"] = c;
  return j;
}

json sparse_json(const SparseVector& v) {
  json a = json::array();
  for (const auto& [i, c] : v.entries) a.push_back({i, c});
  return a;
}

SparseVector sparse_from(const json& a) {
  SparseVector v;
  for (const auto& e : a) v.entries.emplace_back(e.at(0).get<std::uint32_t>(), e.at(1).get<Elem>());
  return v;
}

std::string hex64(std::uint64_t h) {
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

json module_json(const ModuleRealization& M) {
  json j;
  j["provenance"] = M.provenance;
  j["dim"] = M.dim();
  std::size_t odd = 0;
  for (auto q : M.parity) odd += q;
  j["odd_dim"] = odd;
  j["field"] = field_json(M.F);
  json h = json::object();
  for (auto z : M.acting()) h[M.W->label(z)] = hex64(action_hash(M.action[z]));
  j["action_hashes"] = h;
  return j;
}

json invariants_json(const InvariantReport& r) {
  json j;
  j["ok"] = r.ok();
  j["parity"] = r.parity;
  j["chi_reduction"] = r.chi_reduction;
  j["bracket"] = r.bracket;
  j["checked"] = r.checked;
  if (!r.counterexample.empty()) j["counterexample"] = r.counterexample;
  return j;
}

std::vector<Weight> sweep_weights(const WittAlgebra& W, const RunConfig& cfg) {
  const Field& F = W.field();
  std::vector<Weight> out;
  if (!cfg.lambdas.empty() && !(cfg.lambdas.size() == 1 && cfg.lambdas[0] == "all")) {
    for (const auto& s : cfg.lambdas) out.push_back(parse_weight(F, s, W.rank()));
    return out;
  }
  std::size_t total = 1;
  for (std::uint32_t k = 0; k < W.rank(); ++k) total *= W.p();
  for (std::size_t c = 0; c < total; ++c) {
    Weight w(W.rank());
    std::size_t r = c;
    for (std::size_t k = W.rank(); k-- > 0;) {
      w[k] = static_cast<Elem>(r % W.p());
      r /= W.p();
    }
    out.push_back(w);
  }
  return out;
}

std::vector<Gradation> gradations(const RunConfig& cfg) {
  if (cfg.gradation == "I") return {Gradation::I};
  if (cfg.gradation == "II") return {Gradation::II};
  return {Gradation::I, Gradation::II};
}

// lambda - sum eta_i - (p-1) sum eps_j
Weight bottom_weight(const WittAlgebra& W, const Weight& lam) {
  const Field& F = W.field();
  Weight w = lam;
  for (std::uint32_t k = 0; k < W.rank(); ++k) w[k] = F.sub(w[k], k < W.n() ? 1 : W.p() - 1);
  return w;
}

json walk_json(const Field& F, const std::vector<WalkStep>& walk) {
  json a = json::array();
  for (const auto& s : walk) {
    json j;
    j["borel"] = s.borel;
    j["weight"] = weight_string(F, s.weight);
    j["kind"] = s.kind;
    if (s.kind == "eps") {
      j["coord"] = s.coord;
      j["r"] = s.r;
      j["d_order"] = s.d_order;
    } else if (s.kind == "eta") {
      j["coord"] = s.coord;
      j["delta"] = s.delta;
      j["D_kills"] = s.D_kills;
    }
    a.push_back(j);
  }
  return a;
}

json pairing_json(const WittAlgebra& W, const Field& F, const PairingWitness& w) {
  json j;
  j["nonsingular"] = w.nonsingular;
  j["rank"] = w.rank;
  j["required"] = w.required;
  json rows = json::array(), cols = json::array();
  for (auto r : w.rows) rows.push_back(W.label(r));
  for (auto c : w.cols) cols.push_back(W.label(c));
  j["rows"] = rows;
  j["cols"] = cols;
  if (w.nonsingular) j["determinant"] = weight_string(F, {w.determinant});
  if (!w.note.empty()) j["note"] = w.note;
  return j;
}

json inducible_json(const WittAlgebra& W, const Field& F, const InducibleWitness& w) {
  json j;
  j["inducible"] = w.inducible;
  json ord = json::array(), es = json::array(), pr = json::array();
  for (auto f : w.ordering) ord.push_back(W.label(f));
  for (const auto& e : w.e) es.push_back(W.label(F, e));
  for (auto c : w.pairing) pr.push_back(weight_string(F, {c}));
  j["ordering"] = ord;
  j["e"] = es;
  j["pairing"] = pr;
  j["solution_dim"] = w.solution_dim;
  if (!w.note.empty()) j["note"] = w.note;
  return j;
}

}  // namespace

void validate(const RunConfig& cfg) {
  require(cfg.p > 2 && is_prime(cfg.p), "p must be an odd prime");
  require(cfg.m + cfg.n >= 1, "m + n must be at least 1");
  require(cfg.gradation == "I" || cfg.gradation == "II" || cfg.gradation == "both", "gradation must be I, II or both");
  require(cfg.max_ext >= 1 && cfg.max_ext <= 6, "max-ext must lie in 1..6");
  require(cfg.sample > 0 && cfg.sample <= 1, "sample must lie in (0, 1]");
}

json field_json(const Field& F) {
  json j;
  j["p"] = F.p();
  j["k"] = F.k();
  j["modulus"] = F.modulus_string();
  return j;
}

json weight_json(const Weight& w) { return json(w); }

json verdict_json(const SimplicityVerdict& v) {
  json j;
  j["simple"] = v.simple;
  j["method"] = v.method;
  j["probabilistic"] = v.probabilistic;
  if (!v.borel.empty()) j["borel"] = v.borel;
  j["rng_seed"] = v.rng_seed;
  if (v.simple) {
    json mx = json::array();
    for (const auto& w : v.maximal) {
      json e;
      e["weight"] = weight_json(w.weight);
      e["parity"] = w.parity;
      e["dim"] = w.dim;
      e["checked"] = w.checked;
      e["spin_dim"] = w.spin_dim;
      e["vector"] = sparse_json(w.vector);
      mx.push_back(e);
    }
    j["maximal"] = mx;
  } else {
    j["seed"] = sparse_json(v.seed);
    j["dual_seed"] = v.dual_seed;
    j["submodule_dim"] = v.submodule_dim;
  }
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

SimplicityVerdict verdict_from_json(const json& j) {
  SimplicityVerdict v;
  v.simple = j.at("simple").get<bool>();
  v.method = j.at("method").get<std::string>();
  v.probabilistic = j.value("probabilistic", false);
  v.borel = j.value("borel", std::string{});
  v.rng_seed = j.value("rng_seed", std::uint64_t{0});
  v.note = j.value("note", std::string{});
  if (j.contains("maximal"))
    for (const auto& e : j["maximal"]) {
      MaximalWitness w;
      w.weight = e.at("weight").get<Weight>();
      w.parity = e.at("parity").get<std::uint32_t>();
      w.dim = e.at("dim").get<std::size_t>();
      w.checked = e.at("checked").get<std::size_t>();
      w.spin_dim = e.at("spin_dim").get<std::size_t>();
      w.vector = sparse_from(e.at("vector"));
      v.maximal.push_back(std::move(w));
    }
  if (j.contains("seed")) v.seed = sparse_from(j["seed"]);
  v.dual_seed = j.value("dual_seed", false);
  v.submodule_dim = j.value("submodule_dim", std::size_t{0});
  return v;
}

Character parse_character(const WittAlgebra& W, const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::Usage, std::string("character file is not valid JSON: ") + e.what());
  }
  require(j.is_object(), "character file must be a JSON object mapping labels to values");
  auto chi = zero_character(W);
  const Field& F = W.field();
  for (const auto& [label, val] : j.items()) {
    std::uint32_t z = 0;
    try {
      z = W.parse(label);
    } catch (const Error&) {
      fail(ErrorCode::Usage, "character file: unknown basis label '" + label + "'");
    }
    require(W.parity(z) == 0, "character file: odd label '" + label + "' (chi vanishes on the odd part)");
    std::int64_t c = 0;
    if (val.is_number_integer()) {
      c = val.get<std::int64_t>();
    } else if (val.is_array() && val.size() == 1 && val[0].is_number_integer()) {
      c = val[0].get<std::int64_t>();
    } else {
      fail(ErrorCode::Usage, "character file: value for '" + label + "' must be an integer of F_p");
    }
    chi.values[z] = F.from_int(c);
  }
  return chi;
}

Outcome cmd_info(const RunConfig& cfg) {
  validate(cfg);
  const auto t0 = Clock::now();
  const WittAlgebra W(cfg.p, cfg.m, cfg.n);
  json j = header("info", cfg);
  j["field"] = field_json(W.field());
  json d;
  d["W"] = W.dim();
  const auto even = W.even_basis().size();
  d["even"] = even;
  d["odd"] = W.dim() - even;
  d["s"] = W.s();
  json gi = json::object(), gii = json::object();
  for (int k = -1; k <= W.max_degree_I(); ++k) gi[std::to_string(k)] = W.graded_I(k).size();
  for (int k = -1; k <= W.max_degree_II(); ++k) gii[std::to_string(k)] = W.graded_II(k).size();
  d["type_I"] = gi;
  d["type_II"] = gii;
  j["dims"] = d;

  std::map<IntRoot, std::size_t> mult;
  for (std::uint32_t z = 0; z < W.dim(); ++z)
    if (!W.is_cartan(z)) ++mult[W.integer_root(z)];
  json roots = json::array();
  for (const auto& [r, c] : mult) roots.push_back({{"root", r}, {"multiplicity", c}});
  j["roots"] = roots;
  j["root_order"] = "eta_1..eta_n, eps_1..eps_m";

  json chain = json::array();
  for (const auto& B : W.borel_chain().borels) {
    json b;
    b["label"] = B.label;
    b["signs"] = B.signs;
    b["positive"] = B.positive.size();
    b["negative"] = B.negative.size();
    chain.push_back(b);
  }
  j["borel_chain"] = chain;
  json atyp = json::array();
  for (const auto& w : W.atypical_set()) atyp.push_back(weight_string(W.field(), w));
  j["atypical"] = atyp;
  if (cfg.timings) j["seconds"] = seconds_since(t0);
  return {j, 0};
}

Outcome cmd_verify(const RunConfig& cfg) {
  validate(cfg);
  const auto t0 = Clock::now();
  const WittAlgebra base(cfg.p, cfg.m, cfg.n);
  const WittAlgebra W = cfg.corrupt ? base.with_corrupted_constant() : base;
  AxiomOptions opt;
  opt.jacobi_fraction = cfg.sample;
  opt.seed = cfg.seed;
  json j = header("verify", cfg);
  j["field"] = field_json(W.field());
  json suites = json::array();
  bool all = true;
  const auto results = run_axiom_suites(W, opt);
  for (const auto& r : results) {
    json s;
    s["name"] = r.name;
    s["pass"] = r.pass;
    s["checked"] = r.checked;
    if (!r.pass) s["counterexample"] = r.counterexample;
    all = all && r.pass;
    suites.push_back(s);
  }
  j["suites"] = suites;
  j["all_pass"] = all;
  if (cfg.timings) j["seconds"] = seconds_since(t0);
  return {j, all ? 0 : 1};
}

Outcome cmd_kac_table(const RunConfig& cfg) {
  validate(cfg);
  require(cfg.chi_text.empty(), "kac-table is the restricted (chi = 0) path; use nonres for a character file");
  const auto t0 = Clock::now();
  auto W = std::make_shared<const WittAlgebra>(cfg.p, cfg.m, cfg.n);
  const Field& F = W->field();
  const auto lams = sweep_weights(*W, cfg);
  const bool full = cfg.lambdas.empty() || (cfg.lambdas.size() == 1 && cfg.lambdas[0] == "all");
  const auto bmax = W->borel_chain().max();
  const auto chain = W->borel_chain();

  struct Item {
    json row;
    bool simple = false, typical = false, oracle_ok = true, cor = true, inv = true, reval = true;
    Weight highest;
  };
  std::vector<Item> items(lams.size());
  parallel_for(lams.size(), cfg.threads, [&](std::size_t i) {
    const auto t1 = Clock::now();
    const Weight& lam = lams[i];
    Item& it = items[i];
    auto kac = kac_restricted(W, lam, cfg.max_dim);
    SimplicityOptions opt;
    opt.seed = cfg.seed;
    const auto v = is_simple(kac.K, opt);
    const auto ex = exhaustive_simple(kac.K);
    auto L = simple_head(kac);
    Weight hw;
    for (const auto& s : maximal_vectors(L.module, bmax)) hw = s.weight;
    const auto minw = minimal_weight(L.module);
    const auto expect = bottom_weight(*W, lam);
    const auto inv = check_invariants(kac.K);

    it.simple = v.simple;
    it.typical = W->is_typical(lam);
    it.oracle_ok = !ex || *ex == v.simple;
    it.cor = (minw == expect) == it.typical;
    it.inv = inv.ok();
    it.reval = verdict_consistent(verdict_from_json(verdict_json(v)), kac.K.dim());
    it.highest = hw;

    json& r = it.row;
    r["lambda"] = weight_string(F, lam);
    r["typical"] = it.typical;
    r["dim_V"] = kac.V.dim();
    r["dim_K"] = kac.K.dim();
    r["simple"] = v.simple;
    r["verdict"] = verdict_json(v);
    r["oracle"] = ex ? json(*ex) : json(nullptr);
    r["dim_L"] = L.module.dim();
    r["highest_weight"] = weight_string(F, hw);
    r["minimal_weight"] = weight_string(F, minw);
    r["bottom_weight"] = weight_string(F, expect);
    r["minimal_check"] = it.cor;
    r["walk"] = walk_json(F, reflection_walk(L.module, chain));
    r["invariants"] = invariants_json(inv);
    r["K"] = module_json(kac.K);
    if (cfg.timings) r["seconds"] = seconds_since(t1);
  });

  json rows = json::array();
  bool equiv = true, oracle = true, cor = true, inv = true, reval = true;
  std::set<Weight> heads;
  std::size_t simple = 0;
  for (auto& it : items) {
    rows.push_back(std::move(it.row));
    equiv = equiv && it.simple == it.typical;
    oracle = oracle && it.oracle_ok;
    cor = cor && it.cor;
    inv = inv && it.inv;
    reval = reval && it.reval;
    heads.insert(it.highest);
    simple += it.simple;
  }
  json j = header("kac-table", cfg);
  j["field"] = field_json(F);
  j["rows"] = rows;
  json s;
  s["weights"] = lams.size();
  s["simple"] = simple;
  s["atypical"] = lams.size() - simple;
  s["simple_iff_typical"] = equiv;
  s["oracle_agrees"] = oracle;
  s["minimal_weight_check"] = cor;
  s["invariants"] = inv;
  s["witnesses_consistent"] = reval;
  s["distinct_simples"] = heads.size();
  bool ok = equiv && oracle && cor && inv && reval;
  if (full) {
    std::size_t expect = 1;
    for (std::uint32_t k = 0; k < W->rank(); ++k) expect *= W->p();
    s["expected_distinct"] = expect;
    ok = ok && heads.size() == expect;
  }
  s["ok"] = ok;
  j["summary"] = s;
  if (cfg.timings) j["seconds"] = seconds_since(t0);
  return {j, ok ? 0 : 1};
}

Outcome cmd_nonres(const RunConfig& cfg) {
  validate(cfg);
  require(!cfg.chi_text.empty(), "nonres needs a character file (--chi)");
  const auto t0 = Clock::now();
  auto W = std::make_shared<const WittAlgebra>(cfg.p, cfg.m, cfg.n);
  const auto chi = parse_character(*W, cfg.chi_text);
  require(!chi.is_zero(), "chi = 0 is the restricted case; use kac-table");
  const Field F = field_for(*W, chi, cfg.max_ext);
  std::vector<long> offsets;
  if (!cfg.lambdas.empty()) {
    require(cfg.lambdas.size() == 1, "nonres takes a single weight offset");
    for (auto c : parse_weight(W->field(), cfg.lambdas[0], W->rank())) offsets.push_back(c);
  }
  const auto lam = toral_weight(*W, F, chi, offsets);

  json j = header("nonres", cfg);
  j["field"] = field_json(F);
  json cj = json::object();
  for (std::uint32_t z = 0; z < W->dim(); ++z)
    if (chi.values[z]) cj[W->label(z)] = chi.values[z];
  j["chi"] = cj;
  j["lambda"] = weight_string(F, lam);
  const int h1 = height(*W, chi, Gradation::I).height;
  const int h2 = height(*W, chi, Gradation::II).height;
  j["height"] = {{"I", h1}, {"II", h2}};

  // Hypotheses of the height-one sufficiency statement for type I.
  const auto bmax = W->borel_chain().max();
  bool low = true, nplus = true, nminus_witt = false, nminus = true, torus = false;
  for (auto z : W->graded_I(-1)) low = low && chi(z) == 0;
  for (auto z : W->graded_I(0)) {
    if (W->is_cartan(z)) {
      torus = torus || chi(z) != 0;
      continue;
    }
    const auto& e = W->element(z);
    const bool witt = !e.is_D && W->lambda().monomial(e.mono).I.size() == 0;
    if (bmax.is_positive(z)) {
      nplus = nplus && chi(z) == 0;
    } else {
      nminus = nminus && chi(z) == 0;
      if (witt && chi(z) != 0) nminus_witt = true;
    }
  }

  json pred = json::object();
  bool predict1 = false, predict2 = false;
  if (h1 > 1) {
    const auto w = nonsingular_type1(*W, F, chi);
    pred["nonsingular_I"] = pairing_json(*W, F, w);
    predict1 = w.nonsingular;
  }
  if (h1 == 1) {
    json hj;
    hj["standing"] = low && nplus;
    hj["nminus_witt_nonzero"] = nminus_witt;
    hj["nplus_nminus_zero_torus_nonzero"] = nplus && nminus && torus;
    const bool holds = low && nplus && (nminus_witt || (nminus && torus));
    hj["holds"] = holds;
    pred["height_one_I"] = hj;
    predict1 = holds;
  }
  if (h2 > 1) {
    const auto w = nonsingular_type2(*W, F, chi);
    pred["nonsingular_II"] = pairing_json(*W, F, w);
    predict2 = w.nonsingular;
  }

  json mods = json::object();
  bool ok = true;
  for (auto g : gradations(cfg)) {
    const std::string tag = g == Gradation::I ? "I" : "II";
    auto base = simple_base(W, F, chi, g, lam, cfg.max_dim);
    auto K = g == Gradation::I ? kac_type1(base.module, cfg.max_dim) : kac_type2(base.module, cfg.max_dim);
    SimplicityOptions opt;
    opt.seed = cfg.seed;
    const auto v = is_simple(K, opt);
    const auto nt = norton_test(K, cfg.seed);
    const auto inv = check_invariants(K);
    json m;
    m["base"] = module_json(base.module);
    m["base_borel"] = base.borel.label;
    m["base_verma_dim"] = base.verma_dim;
    m["K"] = module_json(K);
    m["simple"] = v.simple;
    m["verdict"] = verdict_json(v);
    m["norton"] = verdict_json(nt);
    m["invariants"] = invariants_json(inv);
    bool predicted = g == Gradation::I ? predict1 : predict2;
    if (g == Gradation::II && h2 == 1) {
      const auto ord = type2_ordering(*W);
      const auto lit = inducible(K, base.module.dim(), ord);
      const auto pro = inducible(K, base.module.dim(), ord, nullptr, true);
      pred["inducible"] = {{"literal", inducible_json(*W, F, lit)}, {"proof_order", inducible_json(*W, F, pro)}};
      predicted = lit.inducible || pro.inducible;
    }
    const bool agree = v.simple == nt.simple;
    const bool consistent = !predicted || v.simple;
    m["predicted_simple"] = predicted;
    m["methods_agree"] = agree;
    m["consistent"] = consistent;
    ok = ok && agree && consistent && inv.ok();
    mods[tag] = m;
  }
  j["predicates"] = pred;
  j["modules"] = mods;
  j["ok"] = ok;
  if (cfg.timings) j["seconds"] = seconds_since(t0);
  return {j, ok ? 0 : 1};
}

namespace {

std::string csv_cell(const json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

}  // namespace

std::string render(const json& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  require(format == "csv", "format must be json or csv");
  std::ostringstream os;
  if (report.contains("rows")) {
    std::vector<std::string> keys;
    std::vector<json> flat;
    for (const auto& r : report["rows"]) {
      json f = r.flatten();
      for (auto it = f.begin(); it != f.end(); ++it)
        if (std::find(keys.begin(), keys.end(), it.key()) == keys.end()) keys.push_back(it.key());
      flat.push_back(f);
    }
    for (std::size_t i = 0; i < keys.size(); ++i) os << (i ? "," : "") << csv_cell(keys[i]);
    os << "\n";
    for (const auto& f : flat) {
      for (std::size_t i = 0; i < keys.size(); ++i) {
        const auto it = f.find(keys[i]);
        os << (i ? "," : "") << (it != f.end() ? csv_cell(*it) : "");
      }
      os << "\n";
    }
    return os.str();
  }
  os << "key,value\n";
  const json flat = report.flatten();
  for (auto it = flat.begin(); it != flat.end(); ++it) os << csv_cell(it.key()) << "," << csv_cell(*it) << "\n";
  return os.str();
}

}  // namespace witt::report
