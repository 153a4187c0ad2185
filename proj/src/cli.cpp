#include "biggs/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "biggs/arithmetic.hpp"
#include "biggs/cayley.hpp"
#include "biggs/checks.hpp"
#include "biggs/classifier.hpp"
#include "biggs/json_io.hpp"
#include "biggs/word.hpp"

namespace biggs {
namespace {

struct Request {
  int colors = 3;
  int radius = 1;
  std::size_t depth_limit = 64;
  std::size_t max_states = 100'000'000;
  int threads = 1;
  std::string format;
  std::string out_path;
  bool exact = false;
  bool verify = false;
  std::string word;
  int c_max = 7;
  int r_max = 12;
  std::string figure;
  std::string number;
  std::string scope = "fast";
  bool corrupt_generator = false;
};

struct Result {
  std::string document;
  int status = kExitOk;
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void require_format(const Request& rq, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (rq.format == f) return;
  throw ParameterError("format '" + rq.format + "' is not available for this command");
}

BigInt parse_big(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw ParameterError("expected a non-negative integer, got '" + text + "'");
  return BigInt(text);
}

Result run_tree(const Request& rq) {
  const ColoredTree t = ColoredTree::build(rq.colors, rq.radius);
  if (rq.format == "text") {
    std::ostringstream os;
    os << "C=" << rq.colors << " R=" << rq.radius << " N=" << t.vertex_count() << "\n";
    for (Vertex v = 0; v < t.vertex_count(); ++v) {
      os << v << " height " << t.height(v);
      if (auto p = t.parent(v)) os << " parent " << p->vertex << " color " << index_of(p->color);
      const auto ms = t.mirrors(v);
      if (!ms.empty()) {
        os << " mirrors";
        for (Color c : ms) os << " " << index_of(c);
      }
      os << "\n";
    }
    return {os.str()};
  }
  require_format(rq, {"json"});
  return {dump(tree_json(t))};
}

Result run_gens(const Request& rq) {
  const ColoredTree t = ColoredTree::build(rq.colors, rq.radius);
  const auto gens = biggs_generators(t);
  if (rq.format == "text") {
    std::ostringstream os;
    for (std::size_t c = 0; c < gens.size(); ++c) os << c << " " << to_cycle_string(gens[c]) << "\n";
    return {os.str()};
  }
  require_format(rq, {"json"});
  Json j;
  j["C"] = rq.colors;
  j["R"] = rq.radius;
  j["N"] = t.vertex_count();
  Json list = Json::array();
  for (const auto& g : gens) list.push_back(to_cycle_string(g));
  j["generators"] = std::move(list);
  return {dump(j)};
}

Result run_word(const Request& rq) {
  const ColoredTree t = ColoredTree::build(rq.colors, rq.radius);
  const auto raw = parse_letters(rq.word, rq.colors);
  const Word w = Word::free_reduce(raw);
  const Permutation p = evaluate(w, t);
  const Track tr = track(t, raw, 0);
  if (rq.format == "text") return {to_string(w) + " " + to_cycle_string(p) + "\n"};
  require_format(rq, {"json"});
  Json j;
  j["C"] = rq.colors;
  j["R"] = rq.radius;
  j["word"] = to_string(w);
  j["length"] = w.size();
  j["permutation"] = to_cycle_string(p);
  j["order"] = to_decimal(order(p));
  j["sign"] = sign(p);
  j["fixes_root"] = p(0) == 0;
  j["root_track"] = tr.path;
  return {dump(j)};
}

Result run_search(const Request& rq, SearchMode mode) {
  require_format(rq, {"json"});
  const ColoredTree t = ColoredTree::build(rq.colors, rq.radius);
  const auto gens = biggs_generators(t);
  SearchBudget budget;
  budget.depth_limit = rq.depth_limit;
  budget.max_states = rq.max_states;
  budget.threads = rq.threads;
  const auto start = std::chrono::steady_clock::now();
  const SearchOutcome o = mode == SearchMode::Girth ? girth(gens, budget) : diameter(gens, budget);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Json j = search_json(rq.colors, rq.radius, o, secs);
  if (mode == SearchMode::Girth && rq.colors >= 3 && o.kind == OutcomeKind::Exact)
    j["equals_2n_bound"] = BigInt(o.value) == 2 * vertex_count_formula(rq.colors, rq.radius);
  return {dump(j), rq.exact && o.kind != OutcomeKind::Exact ? kExitCapacity : kExitOk};
}

Result run_order(const Request& rq) {
  require_format(rq, {"json"});
  const ColoredTree t = ColoredTree::build(rq.colors, rq.radius);
  const auto gens = biggs_generators(t);
  const GroupVerdict v = classify_alt_sym(schreier_sims(gens), gens);
  return {dump(verdict_json(rq.colors, rq.radius, v))};
}

Result run_classify(const Request& rq) {
  require_format(rq, {"json"});
  ClassifyOptions opt;
  opt.verify = rq.verify;
  const ClassificationReport rep = classify(rq.colors, rq.radius, opt);
  Json j = report_json(rep);
  if (rep.verified) {
    // Surface the verdict at top level as well.
    j["order"] = to_decimal(rep.verified->order);
    j["type"] = to_string(rep.verified->type);
  }
  const bool missing = rq.verify && !rep.verified;
  return {dump(j), rq.exact && missing ? kExitCapacity : kExitOk};
}

std::string projective_cell(const ClassificationReport& rep) {
  if (!rep.projective) return "-";
  if (rep.projective->empty()) return "none";
  std::string s;
  for (const auto& m : *rep.projective) {
    if (!s.empty()) s += ";";
    s += "q=" + m.q.str() + ":d=" + std::to_string(m.d);
  }
  return s;
}

Result run_table1(const Request& rq) {
  const auto reps = table1_report(rq.c_max, rq.r_max, rq.threads);
  if (rq.format == "json") {
    Json list = Json::array();
    for (const auto& r : reps) list.push_back(report_json(r));
    return {dump(list)};
  }
  require_format(rq, {"csv"});
  std::ostringstream os;
  os << "C,R,N,factorization,color,projective_matches\n";
  for (const auto& r : reps)
    os << r.colors << "," << r.radius << "," << r.n << "," << (r.factorization ? to_string(*r.factorization) : "?")
       << "," << to_string(r.color) << "," << projective_cell(r) << "\n";
  return {os.str()};
}

Result run_figure(const Request& rq) {
  const auto id = parse_figure_id(rq.figure);
  if (!id) throw ParameterError("unknown figure '" + rq.figure + "' (fig3, fig4, fig5, fig6)");
  const auto pts = figure_data(*id);
  if (rq.format == "json") {
    Json list = Json::array();
    for (const auto& p : pts) list.push_back(Json{{"x", p.x}, {"series", p.series}, {"value", p.value}});
    return {dump(list)};
  }
  require_format(rq, {"csv"});
  std::ostringstream os;
  os << "x,series,value\n";
  for (const auto& p : pts) os << p.x << "," << p.series << "," << fmt_double(p.value) << "\n";
  return {os.str()};
}

Result run_projective(const Request& rq) {
  const BigInt n = parse_big(rq.number);
  const auto ms = projective_matches(n);
  if (rq.format == "text") {
    std::ostringstream os;
    for (const auto& m : ms) os << "q=" << m.q << " d=" << m.d << " p=" << m.p << " e=" << m.e << "\n";
    if (ms.empty()) os << "none\n";
    return {os.str()};
  }
  require_format(rq, {"json"});
  Json j;
  j["N"] = to_decimal(n);
  Json list = Json::array();
  for (const auto& m : ms) list.push_back(projective_json(m));
  j["matches"] = std::move(list);
  return {dump(j)};
}

Result run_landau(const Request& rq) {
  const BigInt n = parse_big(rq.number);
  if (n > 100000) throw CapacityError("landau is limited to n <= 100000");
  const BigInt g = landau(n.convert_to<unsigned>());
  if (rq.format == "text") return {g.str() + "\n"};
  require_format(rq, {"json"});
  Json j;
  j["n"] = to_decimal(n);
  j["landau"] = to_decimal(g);
  j["ln"] = ln_big(g);
  return {dump(j)};
}

Result run_check(const Request& rq) {
  CheckScope scope;
  if (rq.scope == "fast")
    scope = CheckScope::Fast;
  else if (rq.scope == "full")
    scope = CheckScope::Full;
  else
    throw ParameterError("check scope must be fast or full");
  CheckOptions opt;
  opt.corrupt_generator = rq.corrupt_generator;
  opt.threads = rq.threads;
  std::ostringstream os;
  const auto failures = run_checks(scope, opt, os);
  return {os.str(), failures.empty() ? kExitOk : kExitContradiction};
}

void add_cell(CLI::App* sub, Request& rq) {
  sub->add_option("-C,--colors", rq.colors, "number of colors C")->required()->check(CLI::Range(2, 65535));
  sub->add_option("-R,--radius", rq.radius, "tree radius R")->required()->check(CLI::Range(1, 1 << 20));
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Request rq;
  CLI::App app{"Biggs tree groups: trees, generators, orders, girth and classification"};
  app.name("biggs");
  app.require_subcommand(1, 1);
  app.add_option("--out", rq.out_path, "write the document to this file");

  auto* tree = app.add_subcommand("tree", "colored tree with mirrors");
  add_cell(tree, rq);
  auto* gens = app.add_subcommand("gens", "color involutions as cycle strings");
  add_cell(gens, rq);
  auto* word = app.add_subcommand("word", "evaluate a word such as 0.1.2");
  add_cell(word, rq);
  word->add_option("word", rq.word, "dotted color indices")->required();
  auto* girth_cmd = app.add_subcommand("girth", "girth of the Cayley graph");
  auto* diam_cmd = app.add_subcommand("diameter", "diameter of the Cayley graph");
  for (auto* sub : {girth_cmd, diam_cmd}) {
    add_cell(sub, rq);
    sub->add_option("--depth-limit", rq.depth_limit, "deepest BFS level")->check(CLI::PositiveNumber);
    sub->add_option("--max-states", rq.max_states, "cap on stored group elements")->check(CLI::PositiveNumber);
    sub->add_option("--threads", rq.threads, "OpenMP threads")->check(CLI::PositiveNumber);
    sub->add_flag("--exact", rq.exact, "exit 2 unless the result is exact");
  }
  auto* order_cmd = app.add_subcommand("order", "group order and type via Schreier-Sims");
  add_cell(order_cmd, rq);
  auto* classify_cmd = app.add_subcommand("classify", "predicted type, cycle conditions and witnesses");
  add_cell(classify_cmd, rq);
  classify_cmd->add_flag("--verify", rq.verify, "also compute the group and compare");
  classify_cmd->add_flag("--exact", rq.exact, "exit 2 if --verify could not run");
  auto* table_cmd = app.add_subcommand("table1", "factorizations and colors of N_{C,R}");
  table_cmd->add_option("--c-max", rq.c_max, "largest C")->check(CLI::Range(2, 1000));
  table_cmd->add_option("--r-max", rq.r_max, "largest R")->check(CLI::Range(1, 1000));
  table_cmd->add_option("--threads", rq.threads, "OpenMP threads")->check(CLI::PositiveNumber);
  auto* figure_cmd = app.add_subcommand("figure", "plotted bound values");
  figure_cmd->add_option("id", rq.figure, "fig3, fig4, fig5 or fig6")->required();
  auto* proj_cmd = app.add_subcommand("projective", "prime powers q and d >= 2 with (q^d-1)/(q-1) = N");
  proj_cmd->add_option("N", rq.number, "degree")->required();
  auto* landau_cmd = app.add_subcommand("landau", "largest element order in Sym(n)");
  landau_cmd->add_option("n", rq.number, "degree")->required();
  auto* check_cmd = app.add_subcommand("check", "run the invariant suites");
  check_cmd->add_option("scope", rq.scope, "fast or full")->check(CLI::IsMember({"fast", "full"}));
  check_cmd->add_option("--threads", rq.threads, "OpenMP threads")->check(CLI::PositiveNumber);
  check_cmd->add_flag("--corrupt-generator", rq.corrupt_generator, "test hook: perturb a generator")
      ->group("");

  for (auto* sub : {tree, gens, word, girth_cmd, diam_cmd, order_cmd, classify_cmd, table_cmd, figure_cmd, proj_cmd,
                    landau_cmd})
    sub->add_option("--format", rq.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));

  std::vector<const char*> argv{"biggs"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kExitParameter;
  }

  if (rq.format.empty()) rq.format = table_cmd->parsed() || figure_cmd->parsed() ? "csv" : "json";

  Result res;
  try {
    if (tree->parsed()) res = run_tree(rq);
    else if (gens->parsed()) res = run_gens(rq);
    else if (word->parsed()) res = run_word(rq);
    else if (girth_cmd->parsed()) res = run_search(rq, SearchMode::Girth);
    else if (diam_cmd->parsed()) res = run_search(rq, SearchMode::Diameter);
    else if (order_cmd->parsed()) res = run_order(rq);
    else if (classify_cmd->parsed()) res = run_classify(rq);
    else if (table_cmd->parsed()) res = run_table1(rq);
    else if (figure_cmd->parsed()) res = run_figure(rq);
    else if (proj_cmd->parsed()) res = run_projective(rq);
    else if (landau_cmd->parsed()) res = run_landau(rq);
    else res = run_check(rq);
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParameter;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParameter;
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const ContradictionError& e) {
    err << "contradiction: " << e.what() << "\n";
    return kExitContradiction;
  }

  if (rq.out_path.empty()) {
    out << res.document;
  } else {
    std::ofstream file(rq.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << rq.out_path << "\n";
      return kExitParameter;
    }
    file << res.document;
  }
  if (res.status == kExitContradiction) err << "check failed\n";
  return res.status;
}

}  // namespace biggs
