// pcwedge: exterior squares, Schur and Bogomolov multipliers of finite
// solvable groups given by pc presentations.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pcw/bogomolov.hpp"
#include "pcw/catalog.hpp"
#include "pcw/errors.hpp"
#include "pcw/verify.hpp"
#include "report.hpp"

using namespace pcw;
using cli::Json;

namespace {

enum Exit { kOk = 0, kInvalid = 2, kBound = 3, kCrossCheck = 4 };

struct Input {
  std::string label;  // path or catalog:<name>
  std::string text;
  const catalog::Entry* entry = nullptr;
  Presentation presentation;
};

Input load(const std::string& input) {
  Input in;
  in.label = input;
  if (input.rfind("catalog:", 0) == 0) {
    in.entry = &catalog::get(input.substr(8));
    in.text = in.entry->source;
  } else {
    std::ifstream f(input, std::ios::binary);
    if (!f) throw InvalidInput("cannot read '" + input + "'");
    std::ostringstream os;
    os << f.rdbuf();
    in.text = os.str();
  }
  in.presentation = parse_presentation(in.text);
  return in;
}

struct Options {
  bool json = false;
  std::size_t bound = kDefaultElementBound;
  std::size_t cover_bound = kDefaultCoverBound;
  bool bound_set = false;
};

std::shared_ptr<const FiniteGroup> enumerate(const Input& in, const Options& o) {
  return std::make_shared<const FiniteGroup>(PcGroup(in.presentation), o.bound);
}

Json envelope(const std::string& command, const Input& in) {
  Json j;
  j["schema"] = "1";
  j["command"] = command;
  j["input"] = {{"source", in.label}, {"sha256", cli::sha256_hex(in.text)}};
  return j;
}

void emit(const Options& o, const Json& j, const std::vector<std::pair<std::string, std::string>>& rows) {
  if (o.json) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::size_t w = 0;
  for (const auto& r : rows) w = std::max(w, r.first.size());
  for (const auto& r : rows) std::cout << r.first << std::string(w + 2 - r.first.size(), ' ') << r.second << '\n';
}

std::string str(const BigInt& v) { return v.get_str(); }
std::string str(const InvariantList& v) { return v.str(); }

int cmd_info(const std::string& input, const Options& o) {
  Input in = load(input);
  auto g = enumerate(in, o);
  const Presentation& p = in.presentation;
  InvariantList ab = abelianization(p);
  const std::size_t derived = derived_subgroup(*g).size();
  auto cls = nilpotency_class(*g);
  const std::string cls_s = cls ? std::to_string(*cls) : "not nilpotent";

  Json j = envelope("info", in);
  j["report"] = {{"name", p.name},
                 {"order", str(p.order())},
                 {"generators", std::to_string(p.rank())},
                 {"consistent", true},
                 {"abelianization", cli::to_json(ab)},
                 {"derived_order", std::to_string(derived)},
                 {"nilpotency_class", cls_s}};
  emit(o, j,
       {{"name", p.name},
        {"order", str(p.order())},
        {"generators", std::to_string(p.rank())},
        {"consistent", "yes"},
        {"abelianization", str(ab)},
        {"derived_order", std::to_string(derived)},
        {"nilpotency_class", cls_s}});
  return kOk;
}

int cmd_multiplier(const std::string& input, const Options& o) {
  Input in = load(input);
  ExtSquareData e = build_ext_square(enumerate(in, o));
  Json j = envelope("multiplier", in);
  j["report"] = {{"name", in.presentation.name},
                 {"order", str(in.presentation.order())},
                 {"tails", std::to_string(e.cover->tail_count())},
                 {"consistency_rank", std::to_string(e.consistency.rank())},
                 {"multiplier", cli::to_json(e.multiplier)},
                 {"derived_order", std::to_string(e.derived.size())},
                 {"exterior_square_order", str(e.exterior_square_order)}};
  emit(o, j,
       {{"name", in.presentation.name},
        {"order", str(in.presentation.order())},
        {"tails", std::to_string(e.cover->tail_count())},
        {"multiplier", str(e.multiplier)},
        {"derived_order", std::to_string(e.derived.size())},
        {"exterior_square_order", str(e.exterior_square_order)}});
  return kOk;
}

int cmd_bogomolov(const std::string& input, const std::string& method, const Options& o) {
  Input in = load(input);
  ExtSquareData e = build_ext_square(enumerate(in, o));
  BogomolovReport r = bogomolov_multiplier(e, parse_method(method));
  Json j = envelope("bogomolov", in);
  j["report"] = cli::to_json(r);
  emit(o, j,
       {{"name", r.name},
        {"order", str(r.order)},
        {"abelianization", str(r.abelianization)},
        {"derived_order", str(r.derived_order)},
        {"multiplier", str(r.multiplier)},
        {"m0_order", str(r.m0_order)},
        {"bogomolov", str(r.bogomolov)},
        {"exterior_square_order", str(r.exterior_square_order)},
        {"curly_wedge_order", str(r.curly_wedge_order)},
        {"method", to_string(r.method)}});
  return kOk;
}

int cmd_wedge(const std::string& input, const Options& o) {
  Input in = load(input);
  ExtSquareData e = build_ext_square(enumerate(in, o));
  BogomolovReport r = bogomolov_multiplier(e, M0Method::classes);
  ExteriorSquareEnumeration en(e, o.cover_bound);

  const std::size_t n = in.presentation.rank();
  Json table = Json::array();
  std::vector<std::pair<std::string, std::string>> rows = {
      {"name", r.name},
      {"exterior_square_order", str(r.exterior_square_order)},
      {"enumerated_order", std::to_string(en.order())},
      {"curly_wedge_order", str(r.curly_wedge_order)},
      {"multiplier", str(r.multiplier)},
      {"m0_order", str(r.m0_order)},
      {"m0_index", str(r.m0_index)}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k) {
      const CoverElement& w = e.wedge_table[i][k];
      Json tails = Json::array();
      std::string ts;
      for (auto t : w.tails) {
        tails.push_back(std::to_string(t));
        ts += (ts.empty() ? "" : ",") + std::to_string(t);
      }
      const std::string label = "g" + std::to_string(i + 1) + "^g" + std::to_string(k + 1);
      table.push_back({{"pair", label}, {"gpart", render_word(w.gpart.to_word())}, {"tails", tails}});
      rows.push_back({label, render_word(w.gpart.to_word()) + " | " + ts});
    }
  Json j = envelope("wedge", in);
  j["report"] = {{"name", r.name},
                 {"exterior_square_order", str(r.exterior_square_order)},
                 {"enumerated_order", std::to_string(en.order())},
                 {"curly_wedge_order", str(r.curly_wedge_order)},
                 {"multiplier", cli::to_json(r.multiplier)},
                 {"m0", {{"order", str(r.m0_order)}, {"index", str(r.m0_index)}}},
                 {"generator_wedges", table}};
  emit(o, j, rows);
  return kOk;
}

int cmd_fiveterm(const std::string& input, const std::vector<std::string>& normal, const Options& o) {
  if (normal.empty()) throw InvalidInput("fiveterm needs at least one --normal generator word");
  Input in = load(input);
  auto g = enumerate(in, o);
  WordSubgroup ws = normal_subgroup_from_words(*g, normal);
  FiveTermReport r = five_term_check(g, ws.normal, o.cover_bound);

  Json j = envelope("fiveterm", in);
  j["report"] = cli::to_json(r);
  j["report"]["normal_closure_taken"] = !ws.already_normal;
  std::vector<std::pair<std::string, std::string>> rows = {
      {"name", r.group},
      {"n_order", str(r.order_n)},
      {"normal_closure_taken", ws.already_normal ? "no" : "yes"},
      {"bogomolov_g", str(r.bogomolov_g)},
      {"bogomolov_quotient", str(r.bogomolov_q)},
      {"n_mod_kn_order", str(r.third_term_order)},
      {"abelianization_g", str(r.abelianization_g)},
      {"abelianization_quotient", str(r.abelianization_q)},
      {"partial", r.partial ? "yes" : "no"}};
  for (const auto& c : r.checks) rows.push_back({c.name, (c.passed ? "pass  " : "FAIL  ") + c.detail});
  emit(o, j, rows);
  return r.passed() ? kOk : kCrossCheck;
}

int cmd_verify(const std::vector<std::string>& sources, bool all, const std::string& expect,
               const Options& o) {
  std::vector<std::string> targets = sources;
  if (all)
    for (const auto& n : catalog::list()) targets.push_back("catalog:" + n);
  if (targets.empty()) throw InvalidInput("verify needs an input or --all-catalog");

  VerifyOptions vo;
  vo.element_bound = o.bound;
  vo.cover_bound = o.cover_bound;
  bool ok = true;
  Json reports = Json::array();
  for (const auto& t : targets) {
    Input in = load(t);
    // --expect compares a file against frozen catalog values
    const catalog::Entry* entry = expect.empty() ? in.entry : &catalog::get(expect);
    VerifyReport r = verify_group(in.presentation, vo, entry);
    ok = ok && r.passed();
    Json rj = cli::to_json(r);
    rj["source"] = in.label;
    reports.push_back(rj);
    if (!o.json) {
      std::cout << (r.passed() ? "PASS " : "FAIL ") << in.label << '\n';
      for (const auto& c : r.checks)
        std::cout << "  " << (c.passed ? "ok   " : "FAIL ") << c.name
                  << (c.detail.empty() ? "" : "  " + c.detail) << '\n';
    }
  }
  if (o.json) {
    Json j;
    j["schema"] = "1";
    j["command"] = "verify";
    j["reports"] = reports;
    j["passed"] = ok;
    std::cout << j.dump(2) << '\n';
  }
  return ok ? kOk : kCrossCheck;
}

int cmd_catalog(const std::string& action, const std::string& name) {
  if (action == "list") {
    for (const auto& e : catalog::entries()) std::cout << e.name << "  " << e.description << '\n';
    return kOk;
  }
  if (action == "emit") {
    if (name.empty()) throw InvalidInput("catalog emit needs a name");
    std::cout << catalog::get(name).source;
    return kOk;
  }
  throw InvalidInput("catalog action must be 'list' or 'emit'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pcwedge: Schur and Bogomolov multipliers of finite solvable pc groups"};
  app.require_subcommand(1);
  Options o;
  std::size_t bound = 0;
  app.add_flag("--json", o.json, "machine-readable output");
  app.add_option("--bound", bound,
                 "override element and exterior-square enumeration bounds (defaults 5000 and 200000)");
  app.fallthrough();

  std::string input, method = "classes", action, name, expect;
  std::vector<std::string> normal, inputs;
  bool all = false;

  auto* info = app.add_subcommand("info", "order, abelianization, derived subgroup, class");
  info->add_option("input", input, "file or catalog:<name>")->required();
  auto* mult = app.add_subcommand("multiplier", "Schur multiplier from the tails cover");
  mult->add_option("input", input)->required();
  auto* bog = app.add_subcommand("bogomolov", "Bogomolov multiplier report");
  bog->add_option("input", input)->required();
  bog->add_option("--method", method, "classes, pairs or both")
      ->check(CLI::IsMember({"classes", "pairs", "both"}));
  auto* wed = app.add_subcommand("wedge", "exterior square orders and M0 data");
  wed->add_option("input", input)->required();
  auto* five = app.add_subcommand("fiveterm", "check the five-term exact sequence for G and N");
  five->add_option("input", input)->required();
  five->add_option("--normal", normal, "generator word of N, e.g. \"g3^1\" (repeatable)");
  auto* ver = app.add_subcommand("verify", "run the verification suites");
  ver->add_option("input", inputs);
  ver->add_flag("--all-catalog", all, "verify every catalog entry");
  ver->add_option("--expect", expect, "compare against the expected values of this catalog entry");
  auto* cat = app.add_subcommand("catalog", "list or emit catalog presentations");
  cat->add_option("action", action, "list or emit")->required();
  cat->add_option("name", name);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }
  if (bound) {
    o.bound = bound;
    o.cover_bound = bound;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = kOk;
  try {
    if (*info) code = cmd_info(input, o);
    else if (*mult) code = cmd_multiplier(input, o);
    else if (*bog) code = cmd_bogomolov(input, method, o);
    else if (*wed) code = cmd_wedge(input, o);
    else if (*five) code = cmd_fiveterm(input, normal, o);
    else if (*ver) code = cmd_verify(inputs, all, expect, o);
    else if (*cat) code = cmd_catalog(action, name);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << '\n';
    return kBound;
  } catch (const CrossCheckFailure& e) {
    std::cerr << "cross-check failure: " << e.what() << '\n';
    return kCrossCheck;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!*cat) std::cerr << "total_seconds " << secs << '\n';
  return code;
}
