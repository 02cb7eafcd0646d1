// cotor: enumerate and verify cotorsion pairs, twin pairs and mutation on
// finite triangulated categories.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "cotor/cotor.hpp"

using json = nlohmann::json;
using namespace cotor;

namespace {

enum Exit { ok = 0, violation = 1, invalid = 2, inconclusive = 3 };

struct Config {
  std::string backend;
  int cap = 4;
  int jobs = 1;
  std::uint64_t seed = 0;
  std::string out;
  bool allow_inconclusive = false;
};

using Backend = std::variant<std::unique_ptr<Nakayama>, std::unique_ptr<PolygonCat>>;

std::map<std::string, int> parse_params(const std::string& text) {
  std::map<std::string, int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos) throw InputError("backend parameter without value: " + item);
    try {
      out[item.substr(0, eq)] = std::stoi(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw InputError("backend parameter is not an integer: " + item);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

Backend make_backend(const std::string& spec) {
  const std::size_t colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const auto params = colon == std::string::npos ? std::map<std::string, int>{} : parse_params(spec.substr(colon + 1));
  auto need = [&](const char* key) {
    auto it = params.find(key);
    if (it == params.end()) throw InputError(std::string("backend spec is missing ") + key + ": " + spec);
    return it->second;
  };
  if (kind == "nakayama") {
    if (params.size() != 2) throw InputError("nakayama backend takes m and n: " + spec);
    return std::make_unique<Nakayama>(NakayamaParams{need("m"), need("n")});
  }
  if (kind == "polygon") {
    if (params.size() != 1) throw InputError("polygon backend takes N: " + spec);
    return std::make_unique<PolygonCat>(need("N"));
  }
  throw InputError("unknown backend: " + spec);
}

// "K=[..];K=[..]" with brackets protecting inner separators.
std::map<std::string, std::string> parse_fields(const std::string& text) {
  std::map<std::string, std::string> out;
  int depth = 0;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    const std::size_t eq = cur.find('=');
    if (eq == std::string::npos) throw InputError("expected KEY=[...]: " + cur);
    if (!out.emplace(cur.substr(0, eq), cur.substr(eq + 1)).second) throw InputError("repeated key in " + text);
    cur.clear();
  };
  for (char c : text) {
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (c == ';' && depth == 0) {
      flush();
      continue;
    }
    cur += c;
  }
  flush();
  return out;
}

template <IndecCategory B>
Subcat field(const B& cat, const std::map<std::string, std::string>& f, const std::string& key) {
  auto it = f.find(key);
  if (it == f.end()) throw InputError("missing field " + key);
  return parse_subcat(cat, it->second);
}

template <IndecCategory B>
CotorsionPair parse_pair(const B& cat, const std::string& text) {
  const auto f = parse_fields(text);
  if (f.size() != 2) throw InputError("pair must be U=[..];V=[..]: " + text);
  return {field(cat, f, "U"), field(cat, f, "V")};
}

template <IndecCategory B>
json labels(const B& cat, const Subcat& s) {
  return subcat_labels(cat, s);
}

template <IndecCategory B>
json pair_json(const B& cat, const CotorsionPair& p) {
  return {{"U", labels(cat, p.u)}, {"V", labels(cat, p.v)}};
}

template <IndecCategory B>
json tcp_json(const B& cat, const TwinPair& p) {
  const TwinFlags f = classify(p);
  return {{"S", labels(cat, p.s())},        {"T", labels(cat, p.t())},     {"U", labels(cat, p.u())},
          {"V", labels(cat, p.v())},        {"concentric", f.concentric},  {"degenerate", f.degenerate},
          {"rigid_pair", f.rigid_pair},     {"zz_setting", f.zz_setting}};
}

std::string vstr(Verdict v) { return to_string(v); }

struct Report {
  json result = json::object();
  json verdicts = json::object();
  std::string text;  // raw output (DOT) instead of JSON when non-empty

  void verdict(const std::string& name, Verdict v) { verdicts[name] = vstr(v); }
};

// Twin pair from a spec string, checked to be a twin cotorsion pair.
TwinPair parse_tcp(const PairEngine<Nakayama>& e, const std::string& text) {
  const Nakayama& cat = e.category();
  TwinPair p;
  if (text == "trivial-hovey") {
    p = trivial_hovey(cat);
  } else if (text.rfind("degenerate:", 0) == 0) {
    p = degenerate(parse_pair(cat, text.substr(11)));
  } else if (text.rfind("zz:", 0) == 0) {
    const auto f = parse_fields(text.substr(3));
    p = zz_pair(e, field(cat, f, "I"));
  } else if (text.rfind("explicit:", 0) == 0) {
    const auto f = parse_fields(text.substr(9));
    p = {{field(cat, f, "S"), field(cat, f, "T")}, {field(cat, f, "U"), field(cat, f, "V")}};
  } else {
    throw InputError("unknown twin pair spec: " + text);
  }
  for (const auto* cp : {&p.inner, &p.outer}) {
    const Verdict v = e.is_cotorsion_pair(*cp);
    if (v == Verdict::inconclusive) throw InconclusiveError("cannot decide whether the constituent is a cotorsion pair");
    if (v == Verdict::no) throw InputError("not a cotorsion pair: " + pair_string(cat, *cp));
  }
  if (!is_tcp(cat, p.inner, p.outer)) throw InputError("Ext^1(S,V) is nonzero, not a twin pair");
  return p;
}

Subcat parse_polygon_zz(const PolygonCat& p, const std::string& text) {
  if (text.rfind("zz:", 0) != 0) throw InputError("the polygon model accepts only zz:I=[...] twin pairs");
  return field(p, parse_fields(text.substr(3)), "I");
}

// ---- subcommands -------------------------------------------------------

void enumerate_cp(const Nakayama& cat, const Config& c, Report& r) {
  StarOracle<Nakayama> star(cat, c.cap);
  PairEngine<Nakayama> e(star);
  const CotorsionList l = e.enumerate_cotorsion(c.jobs);
  json pairs = json::array();
  for (const auto& p : l.pairs) {
    json j = pair_json(cat, p);
    const PairFlags f = classify(cat, p);
    j["t_structure"] = f.t_structure;
    j["co_t_structure"] = f.co_t_structure;
    j["cluster_tilting"] = f.cluster_tilting;
    pairs.push_back(j);
  }
  r.result["pairs"] = pairs;
  r.result["count"] = l.pairs.size();
  r.verdict("enumeration_complete", l.complete ? Verdict::yes : Verdict::inconclusive);
}

void enumerate_cp(const PolygonCat& cat, const Config& c, Report& r) {
  const auto pairs = polygon_cotorsion_pairs(cat, c.jobs);
  json arr = json::array();
  for (const auto& [u, v] : pairs) arr.push_back({{"U", labels(cat, u)}, {"V", labels(cat, v)}});
  r.result["pairs"] = arr;
  r.result["count"] = pairs.size();
  r.result["model_layer"] = true;
  r.verdict("ptolemy_cross_count", verdict_of(enumerate_ptolemy(cat, c.jobs) == enumerate_ptolemy_by_closure(cat)));
}

struct TcpFilters {
  bool concentric = false, hovey = false, cond_i = false, cond_ii = false, cond_iii = false;
};

void enumerate_tcp(const Nakayama& cat, const Config& c, const TcpFilters& f, Report& r) {
  Lab<Nakayama> lab(cat, c.cap, c.jobs);
  json arr = json::array();
  Verdict complete = lab.cotorsion().complete ? Verdict::yes : Verdict::inconclusive;
  const bool needs_concentric = f.concentric || f.hovey || f.cond_i || f.cond_ii || f.cond_iii;
  for (const auto& p : lab.tcps()) {
    if (needs_concentric && !p.concentric()) continue;
    json j = tcp_json(cat, p);
    if (p.concentric()) {
      const Verdict h = lab.engine().is_hovey(p).verdict;
      const Verdict c1 = lab.quotient(p).check_condition_I();
      const Verdict c2 = lab.engine().check_condition_II(p);
      const Verdict c3 = lab.engine().check_condition_III(p);
      for (Verdict v : {h, c1, c2, c3}) {
        if (v == Verdict::inconclusive) complete = Verdict::inconclusive;
      }
      if ((f.hovey && h != Verdict::yes) || (f.cond_i && c1 != Verdict::yes) || (f.cond_ii && c2 != Verdict::yes) ||
          (f.cond_iii && c3 != Verdict::yes)) {
        continue;
      }
      j["hovey"] = vstr(h);
      j["cond_I"] = vstr(c1);
      j["cond_II"] = vstr(c2);
      j["cond_III"] = vstr(c3);
    }
    arr.push_back(j);
  }
  r.result["tcps"] = arr;
  r.result["count"] = arr.size();
  r.result["cotorsion_pairs"] = lab.cotorsion().pairs.size();
  r.verdict("enumeration_complete", complete);
}

void inspect(const Nakayama& cat, const Config& c, const std::string& pair, const std::string& tcp, Report& r) {
  StarOracle<Nakayama> star(cat, c.cap);
  PairEngine<Nakayama> e(star);
  if (!pair.empty()) {
    const CotorsionPair p = parse_pair(cat, pair);
    const Verdict v = e.is_cotorsion_pair(p);
    json j = pair_json(cat, p);
    j["cotorsion_pair"] = vstr(v);
    if (v == Verdict::yes) {
      const PairFlags f = classify(cat, p);
      j["t_structure"] = f.t_structure;
      j["co_t_structure"] = f.co_t_structure;
      j["cluster_tilting"] = f.cluster_tilting;
    }
    r.result["pair"] = j;
    if (v == Verdict::inconclusive) r.verdict("decided", v);
    return;
  }
  const TwinPair p = parse_tcp(e, tcp);
  json j = tcp_json(cat, p);
  if (p.concentric()) {
    const DerivedSets d = e.derived_sets(p);
    j["I"] = labels(cat, d.i);
    j["Z"] = labels(cat, d.z);
    j["N_i"] = labels(cat, d.ni);
    j["N_f"] = labels(cat, d.nf);
    const HoveyReport h = e.is_hovey(p);
    j["hovey"] = {{"verdict", vstr(h.verdict)},
                  {"N", labels(cat, h.n)},
                  {"shift_closed", h.shift_closed},
                  {"extension_closed", vstr(h.extension_closed)},
                  {"summand_closed", vstr(h.summand_closed)},
                  {"perp_identities", h.perp_identities}};
    ZIQuotient<Nakayama> q(e, p);
    j["cond_I"] = vstr(q.check_condition_I());
    j["cond_II"] = vstr(e.check_condition_II(p));
    j["cond_III"] = vstr(e.check_condition_III(p));
    r.verdict("remark_identities", verdict_of(d.remark_holds));
  }
  r.result["tcp"] = j;
}

void reduce(const Nakayama& cat, const Config& c, const std::string& tcp, Report& r) {
  StarOracle<Nakayama> star(cat, c.cap);
  PairEngine<Nakayama> e(star);
  const TwinPair p = parse_tcp(e, tcp);
  if (!p.concentric()) throw InputError("reduce: the twin pair is not concentric");
  ZIQuotient<Nakayama> q(e, p);
  const auto objs = q.objects();
  json table = json::array();
  for (int z : objs) {
    const Obj o = Obj::of(z);
    table.push_back({{"object", cat.label(z)},
                     {"bracket_up", obj_to_string(cat, q.bracket_up(z).obj)},
                     {"bracket_down", obj_to_string(cat, q.bracket_down(z).obj)},
                     {"Sigma", obj_to_string(cat, q.Sigma_obj(o))},
                     {"Omega", obj_to_string(cat, q.Omega_obj(o))}});
  }
  json dims = json::array();
  for (int x : objs) {
    json row = json::array();
    for (int y : objs) row.push_back(q.qdim(Obj::of(x), Obj::of(y)));
    dims.push_back(row);
  }
  json sigma = json::object(), omega = json::object();
  for (int u : p.u().members()) sigma[cat.label(u)] = obj_to_string(cat, q.zi_class(q.sigma(u).obj));
  for (int t : p.t().members()) omega[cat.label(t)] = obj_to_string(cat, q.zi_class(q.omega(t).obj));
  r.result["tcp"] = tcp_json(cat, p);
  r.result["I"] = labels(cat, q.derived().i);
  r.result["Z"] = labels(cat, q.derived().z);
  r.result["objects"] = labels(cat, q.object_set());
  r.result["shifts"] = table;
  r.result["hom_dims"] = dims;
  r.result["sigma"] = sigma;
  r.result["omega"] = omega;
}

void reduce(const PolygonCat& cat, const std::string& tcp, Report& r) {
  const Subcat i = parse_polygon_zz(cat, tcp);
  const CutReduction cr = cut_reduction(cat, i);
  json pieces = json::array();
  for (const auto& pc : cr.pieces) pieces.push_back(pc.vertices);
  json dict = json::object();
  json shift = json::object();
  for (const auto& [a, loc] : cr.dictionary) {
    const auto [piece, x, y] = loc;
    dict[cat.label(a)] = {{"piece", piece}, {"local", {x, y}}};
    shift[cat.label(a)] = cat.label(reduced_shift(cat, cr, a, 1));
  }
  r.result["I"] = labels(cat, cr.i);
  r.result["Z"] = labels(cat, cr.z);
  r.result["objects"] = labels(cat, cr.z - cr.i);
  r.result["pieces"] = pieces;
  r.result["dictionary"] = dict;
  r.result["Sigma"] = shift;
  r.result["model_layer"] = true;
}

void mutate(const Nakayama& cat, const Config& c, const std::string& tcp, const std::string& pair, int k, Report& r) {
  Lab<Nakayama> lab(cat, c.cap, c.jobs);
  const TwinPair p = parse_tcp(lab.engine(), tcp);
  if (!p.concentric()) throw InputError("mutate: the twin pair is not concentric");
  if (!lab.satisfies_I_II(p)) throw InputError("mutate: the twin pair does not satisfy (I)+(II)");
  const CotorsionPair ab = parse_pair(cat, pair);
  const auto m = lab.mutation(p);
  const Verdict in = m.in_MP(ab);
  if (in == Verdict::inconclusive) throw InconclusiveError("membership in the mutable class undecided");
  if (in == Verdict::no) throw InputError("the pair is not in the mutable class of this twin pair");
  const CotorsionPair out = m.mutate(ab, k);
  r.result["input"] = pair_json(cat, ab);
  r.result["k"] = k;
  r.result["output"] = pair_json(cat, out);
  r.result["tcp"] = tcp_json(cat, p);
}

void mutate(const PolygonCat& cat, const std::string& tcp, const std::string& pair, int k, Report& r) {
  const Subcat i = parse_polygon_zz(cat, tcp);
  const auto f = parse_fields(pair);
  const Subcat a = field(cat, f, "U");
  const Subcat out = zz_mutate(cat, i, a, k);
  r.result["input"] = {{"U", labels(cat, a)}};
  r.result["k"] = k;
  r.result["output"] = {{"U", labels(cat, out)}, {"V", labels(cat, right_perp(cat, out, -1))}};
  r.result["model_layer"] = true;
}

void verify(const Nakayama& cat, const Config& c, const std::string& suite, Report& r) {
  Lab<Nakayama> lab(cat, c.cap, c.jobs);
  json suites = json::array();
  for (const SuiteResult& s : run_suite(lab, suite, c.seed)) {
    suites.push_back({{"name", s.name},
                      {"verdict", vstr(s.verdict)},
                      {"checks", s.checks},
                      {"counterexamples", s.failures},
                      {"notes", s.notes}});
    r.verdict(s.name, s.verdict);
  }
  r.result["suites"] = suites;
  r.result["cotorsion_pairs"] = lab.cotorsion().pairs.size();
  r.result["twin_pairs"] = lab.tcps().size();
  r.result["concentric"] = lab.concentric().size();
}

void verify(const PolygonCat& cat, const Config& c, const std::string& suite, Report& r) {
  if (suite != "all" && suite != "polygon") throw Unsupported("the polygon model supports only the polygon suite");
  const SuiteResult s = suite_polygon(cat, c.jobs);
  r.result["suites"] = json::array({{{"name", s.name},
                                     {"verdict", vstr(s.verdict)},
                                     {"checks", s.checks},
                                     {"counterexamples", s.failures},
                                     {"notes", s.notes}}});
  r.result["model_layer"] = true;
  r.verdict(s.name, s.verdict);
}

void orbit_graph(const Nakayama& cat, const Config& c, const std::string& tcp, Report& r) {
  Lab<Nakayama> lab(cat, c.cap, c.jobs);
  const TwinPair p = parse_tcp(lab.engine(), tcp);
  if (!p.concentric() || !lab.satisfies_I_II(p)) throw InputError("orbit-graph: need a concentric pair with (I)+(II)");
  const auto m = lab.mutation(p);
  const BijectionReport rep = m.verify_bijection();
  r.verdict("bijection", rep.verdict);
  if (rep.verdict == Verdict::yes) r.text = m.orbit_graph();
}

void orbit_graph(const PolygonCat& cat, const std::string& tcp, Report& r) {
  r.text = polygon_orbit_graph(cat, parse_polygon_zz(cat, tcp));
}

template <IndecCategory B>
json caps_json(const B& cat) {
  const BackendCaps c = cat.caps();
  return {{"morphism_calculus", c.morphism_calculus}, {"exact_triangles", c.exact_triangles}};
}

int exit_code(const json& verdicts, bool allow_inconclusive) {
  bool undecided = false;
  for (const auto& [k, v] : verdicts.items()) {
    if (v == "no") return Exit::violation;
    if (v == "inconclusive") undecided = true;
  }
  return undecided && !allow_inconclusive ? Exit::inconclusive : Exit::ok;
}

void emit(const Config& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw InputError("cannot open output file " + c.out);
  f << text;
}

json header(const Config& c, const std::string& command) {
  return {{"schema", "cotor.report/1"}, {"tool_version", version}, {"command", command},
          {"backend", c.backend},       {"seed", c.seed},          {"cap", c.cap}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cotorsion pairs, twin cotorsion pairs and mutation on finite triangulated categories"};
  app.require_subcommand(1);
  Config cfg;
  TcpFilters filters;
  std::string tcp, pair, suite = "all", other;
  int k = 1;

  auto common = [&](CLI::App* s) {
    s->add_option("--backend", cfg.backend, "nakayama:m=M,n=N or polygon:N=K")->required();
    s->add_option("--cap", cfg.cap, "summand cap for triangle searches")->check(CLI::Range(2, 8));
    s->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1, 256));
    s->add_option("--seed", cfg.seed, "seed for sampled checks");
    s->add_option("--out", cfg.out, "output file");
    s->add_flag("--allow-inconclusive", cfg.allow_inconclusive, "exit 0 on inconclusive verdicts");
  };

  auto* ecp = app.add_subcommand("enumerate-cp", "list all cotorsion pairs");
  common(ecp);
  auto* etcp = app.add_subcommand("enumerate-tcp", "list twin cotorsion pairs");
  common(etcp);
  etcp->add_flag("--concentric", filters.concentric, "keep pairs with S∩T = U∩V");
  etcp->add_flag("--hovey", filters.hovey, "keep Hovey pairs");
  etcp->add_flag("--cond-I", filters.cond_i, "keep pairs satisfying (I)");
  etcp->add_flag("--cond-II", filters.cond_ii, "keep pairs satisfying (II)");
  etcp->add_flag("--cond-III", filters.cond_iii, "keep pairs satisfying (III)");
  auto* insp = app.add_subcommand("inspect-pair", "classify one pair or twin pair");
  common(insp);
  auto* insp_pair = insp->add_option("--pair", pair, "U=[..];V=[..]");
  auto* insp_tcp = insp->add_option("--tcp", tcp, "twin pair spec");
  insp_pair->excludes(insp_tcp);
  auto* red = app.add_subcommand("reduce", "describe Z/I");
  common(red);
  red->add_option("--tcp", tcp)->required();
  auto* mut = app.add_subcommand("mutate", "apply mu_k to a mutable pair");
  common(mut);
  mut->add_option("--tcp", tcp)->required();
  mut->add_option("--pair", pair)->required();
  mut->add_option("--k", k);
  auto* ver = app.add_subcommand("verify", "run property suites");
  common(ver);
  ver->add_option("--suite", suite);
  auto* orb = app.add_subcommand("orbit-graph", "DOT graph of mu_1");
  common(orb);
  orb->add_option("--tcp", tcp)->required();
  auto* mb = app.add_subcommand("match-backends", "match indecomposables of two backends");
  common(mb);
  mb->add_option("--with", other, "second backend spec")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? Exit::ok : Exit::invalid;
  }

  CLI::App* cmd = app.get_subcommands().front();
  const std::string name = cmd->get_name();
  json report = header(cfg, name);
  Report r;
  int rc = Exit::ok;
  try {
    const Backend be = make_backend(cfg.backend);
    std::visit(
        [&](const auto& ptr) {
          const auto& cat = *ptr;
          using B = std::decay_t<decltype(cat)>;
          constexpr bool nak = std::is_same_v<B, Nakayama>;
          report["caps"] = caps_json(cat);
          if (name == "enumerate-cp") {
            if constexpr (nak) enumerate_cp(cat, cfg, r);
            else enumerate_cp(cat, cfg, r);
          } else if (name == "match-backends") {
            const Backend b2 = make_backend(other);
            std::visit(
                [&](const auto& p2) {
                  const auto m = match_backends(cat, *p2);
                  r.result["with"] = other;
                  if (!m) {
                    r.result["dictionary"] = nullptr;
                    return;
                  }
                  json d = json::object();
                  for (int i = 0; i < cat.size(); ++i) d[cat.label(i)] = p2->label((*m)[i]);
                  r.result["dictionary"] = d;
                },
                b2);
          } else if (name == "verify") {
            verify(cat, cfg, suite, r);
          } else if constexpr (nak) {
            if (name == "enumerate-tcp") enumerate_tcp(cat, cfg, filters, r);
            else if (name == "inspect-pair") {
              if (pair.empty() && tcp.empty()) throw InputError("inspect-pair needs --pair or --tcp");
              inspect(cat, cfg, pair, tcp, r);
            } else if (name == "reduce") reduce(cat, cfg, tcp, r);
            else if (name == "mutate") mutate(cat, cfg, tcp, pair, k, r);
            else if (name == "orbit-graph") orbit_graph(cat, cfg, tcp, r);
          } else {
            if (name == "reduce") reduce(cat, tcp, r);
            else if (name == "mutate") mutate(cat, tcp, pair, k, r);
            else if (name == "orbit-graph") orbit_graph(cat, tcp, r);
            else throw Unsupported(name + " needs a backend with a morphism calculus");
          }
        },
        be);
    rc = exit_code(r.verdicts, cfg.allow_inconclusive);
  } catch (const InputError& e) {
    report["error"] = {{"kind", "invalid_input"}, {"message", e.what()}};
    rc = Exit::invalid;
  } catch (const Unsupported& e) {
    report["error"] = {{"kind", "unsupported"}, {"message", e.what()}};
    rc = Exit::invalid;
  } catch (const InconclusiveError& e) {
    report["error"] = {{"kind", "inconclusive"}, {"message", e.what()}};
    rc = cfg.allow_inconclusive ? Exit::ok : Exit::inconclusive;
  } catch (const InternalError& e) {
    report["error"] = {{"kind", "violation"}, {"message", e.what()}};
    rc = Exit::violation;
  }
  report["result"] = r.result;
  report["verdicts"] = r.verdicts;
  report["exit_code"] = rc;
  try {
    if (!r.text.empty() && !report.contains("error")) emit(cfg, r.text);
    else emit(cfg, report.dump(2) + "\n");
  } catch (const InputError& e) {
    std::cerr << e.what() << "\n";
    return Exit::invalid;
  }
  if (report.contains("error")) std::cerr << report["error"]["message"].get<std::string>() << "\n";
  return rc;
}
