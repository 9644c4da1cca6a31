#include "dessins/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "dessins/action.hpp"
#include "dessins/congruence.hpp"
#include "dessins/dessin.hpp"
#include "dessins/enumerate.hpp"
#include "dessins/errors.hpp"
#include "dessins/freeword.hpp"
#include "dessins/gamma1.hpp"
#include "dessins/larcher.hpp"

namespace dessins::cli {

namespace {

using nlohmann::json;

struct Output {
  std::string command;
  std::string input;
  json verdict;  // null unless the command decides something
  json data = json::object();
  std::ostringstream text;
  int code = kOk;
};

Dessin load_dessin(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_dessin(buf.str());
}

std::vector<std::size_t> sorted_desc(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t x : v) {
    if (!s.empty()) s += ' ';
    s += std::to_string(x);
  }
  return s;
}

std::string shown(const std::string& cycle_text) {
  return cycle_text.empty() ? "()" : cycle_text;
}

std::string shown_word(const Word& w) {
  return w.empty() ? "1" : format_word(w);
}

void cmd_info(Output& o, const std::string& path) {
  const Dessin d = load_dessin(path);
  const DegreeReport r = report(d);
  const std::string face_text = format_cycles(faces(d));
  o.text << "edges: " << d.edges() << '\n'
         << "sigma: " << shown(format_cycles(d.sigma())) << '\n'
         << "alpha: " << shown(format_cycles(d.alpha())) << '\n'
         << "faces: " << shown(face_text) << '\n'
         << "marked: " << d.marked() << '\n'
         << "black degrees: " << join(sorted_desc(r.black_degrees)) << '\n'
         << "white degrees: " << join(sorted_desc(r.white_degrees)) << '\n'
         << "face degrees: " << join(sorted_desc(r.face_degrees)) << '\n'
         << "level: " << r.level << '\n'
         << "genus: " << r.genus << '\n';
  o.data = {{"edges", d.edges()},
            {"sigma", format_cycles(d.sigma())},
            {"alpha", format_cycles(d.alpha())},
            {"faces", face_text},
            {"marked", d.marked()},
            {"black_degrees", sorted_desc(r.black_degrees)},
            {"white_degrees", sorted_desc(r.white_degrees)},
            {"face_degrees", sorted_desc(r.face_degrees)},
            {"level", r.level},
            {"genus", r.genus}};
}

void cmd_member(Output& o, const std::string& path, const std::string& word) {
  const Dessin d = load_dessin(path);
  const Word w = parse_word(word);
  const std::vector<Label> visited = trace(d, w);
  const bool member = visited.back() == d.marked();
  o.text << "word: " << shown_word(w) << '\n' << "trace:";
  for (Label e : visited) o.text << ' ' << e;
  o.text << '\n' << "member: " << (member ? "yes" : "no") << '\n';
  o.verdict = member ? "member" : "non-member";
  o.data = {{"word", format_word(w)}, {"trace", visited}, {"member", member}};
}

void cmd_generators(Output& o, const std::string& path) {
  const Dessin d = load_dessin(path);
  const std::vector<Word> gens = group_generators(d);
  json words = json::array();
  o.text << "count: " << gens.size() << '\n';
  for (const Word& w : gens) {
    o.text << format_word(w) << '\n';
    words.push_back(format_word(w));
  }
  o.data = {{"count", gens.size()}, {"generators", words}};
}

json violations_json(const FilterVerdict& v) {
  json out = json::array();
  for (const Violation& viol : v.violations) {
    if (viol.missing_width) {
      out.push_back({{"missing_width", true}});
    } else {
      out.push_back({{"face_degree", viol.face_degree},
                     {"vertex_degree", viol.vertex_degree},
                     {"residue", viol.residue}});
    }
  }
  return out;
}

void print_filter(Output& o, const FilterVerdict& v) {
  for (const Violation& viol : v.violations) {
    o.text << format_violation(viol, v.half_level) << '\n';
  }
}

void cmd_larcher(Output& o, const std::string& path) {
  const Dessin d = load_dessin(path);
  const FilterVerdict v = filters(d);
  o.text << "verdict: " << to_string(v.outcome) << '\n'
         << "level: " << 2 * v.half_level << " (n = " << v.half_level << ")\n";
  print_filter(o, v);
  o.verdict = to_string(v.outcome);
  o.data = {{"level", 2 * v.half_level}, {"violations", violations_json(v)}};
}

void cmd_congruence(Output& o, const std::string& path, std::size_t max_cosets,
                    bool skip_filters) {
  const Dessin d = load_dessin(path);
  if (!skip_filters) {
    const FilterVerdict f = filters(d);
    if (f.outcome == FilterOutcome::CertifiedNoncongruence) {
      o.text << "verdict: Noncongruence\n"
             << "level: " << 2 * f.half_level << '\n'
             << "certified by degree filters:\n";
      print_filter(o, f);
      o.verdict = "Noncongruence";
      o.data = {{"level", 2 * f.half_level},
                {"certified_by_filters", true},
                {"violations", violations_json(f)}};
      o.code = kNoncongruence;
      return;
    }
  }
  const CongruenceVerdict v = decide(d, max_cosets);
  o.verdict = to_string(v.outcome);
  o.text << "verdict: " << to_string(v.outcome) << '\n'
         << "level: " << v.level << '\n';
  o.data = {{"level", v.level}, {"certified_by_filters", false}};
  if (v.outcome == CongruenceOutcome::BudgetExceeded) {
    o.text << "coset limit " << max_cosets << " exceeded\n";
    o.data["max_cosets"] = max_cosets;
    o.code = kBudgetExceeded;
    return;
  }
  o.text << "quotient index: " << v.quotient_index << '\n'
         << "generators: " << v.generator_count << '\n';
  o.data["quotient_index"] = v.quotient_index;
  o.data["generator_count"] = v.generator_count;
  if (v.witness) {
    o.text << "witness: " << format_word(*v.witness) << '\n';
    o.data["witness"] = format_word(*v.witness);
  }
  o.code = v.outcome == CongruenceOutcome::Congruence ? kOk : kNoncongruence;
}

void cmd_gamma1(Output& o, const std::string& path) {
  const Gamma1Dessin g = to_gamma1(load_dessin(path));
  o.text << format_gamma1(g);
  o.data = {{"source_edges", g.source_edges},
            {"edges", g.dessin.edges()},
            {"sigma", format_cycles(g.dessin.sigma())},
            {"alpha", format_cycles(g.dessin.alpha())},
            {"marked", g.dessin.marked()}};
}

void cmd_gens_gamma(Output& o, std::int64_t m, std::size_t max_cosets) {
  const CosetTable table = quotient_table(m, max_cosets);
  const std::vector<Word> gens = schreier_generators(table);
  o.text << "modulus: " << m << '\n'
         << "index: " << table.size() << '\n'
         << "generators: " << gens.size() << '\n';
  json words = json::array();
  for (const Word& w : gens) {
    o.text << format_word(w) << '\n';
    words.push_back(format_word(w));
  }
  o.data = {{"modulus", m},
            {"index", table.size()},
            {"count", gens.size()},
            {"generators", words}};
}

void cmd_matrix2word(Output& o, const std::vector<std::int64_t>& entries) {
  const ProjMatrix m(entries[0], entries[1], entries[2], entries[3]);
  const Word w = matrix_to_word(m);
  o.text << shown_word(w) << '\n';
  o.data = {{"matrix", {m.a(), m.b(), m.c(), m.d()}}, {"word", format_word(w)}};
}

void cmd_enumerate(Output& o, std::size_t n, bool classify,
                   std::size_t max_cosets) {
  const EnumerationReport r = enumerate(n, {classify, max_cosets});
  o.text << "edges: " << r.n << '\n'
         << "transitive pairs: " << r.transitive_pairs << '\n'
         << "rooted dessins: " << r.rooted_count << '\n'
         << "subgroups: " << r.subgroup_count << '\n';
  o.data = {{"edges", r.n},
            {"transitive_pairs", r.transitive_pairs},
            {"rooted_count", r.rooted_count},
            {"subgroup_count", r.subgroup_count}};
  if (r.classified) {
    o.text << "congruence: " << r.congruence << '\n'
           << "noncongruence: " << r.noncongruence << '\n'
           << "budget exceeded: " << r.budget_exceeded << '\n'
           << "filter certified: " << r.filter_certified << '\n'
           << "filter inconclusive: " << r.filter_inconclusive << '\n';
    o.data["classification"] = {{"congruence", r.congruence},
                                {"noncongruence", r.noncongruence},
                                {"budget_exceeded", r.budget_exceeded}};
    o.data["filters"] = {{"certified_noncongruence", r.filter_certified},
                         {"inconclusive", r.filter_inconclusive}};
  }
}

void cmd_dot(Output& o, const std::string& path) {
  const std::string dot = to_dot(load_dessin(path));
  o.text << dot;
  o.data = {{"dot", dot}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Dessins and finite-index subgroups of Gamma(2)", "dessins"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit a JSON envelope instead of text");

  Output o;
  std::function<void()> action;
  std::string file, word;
  std::size_t max_cosets = kDefaultMaxCosets;
  bool skip_filters = false, classify = false;
  std::int64_t modulus = 0;
  std::size_t edges = 0;
  std::vector<std::int64_t> entries;

  auto file_command = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "Dessin file")->required();
    return sub;
  };

  auto* info = file_command("info", "Degrees, level and genus");
  info->callback([&] { action = [&] { cmd_info(o, file); }; });

  auto* member = file_command("member", "Trace a word and test membership");
  member->add_option("word", word, "Word in A, B (lowercase = inverse)")
      ->required();
  member->callback([&] { action = [&] { cmd_member(o, file, word); }; });

  auto* generators = file_command("generators", "Free generators of the subgroup");
  generators->callback([&] { action = [&] { cmd_generators(o, file); }; });

  auto* larcher = file_command("larcher", "Degree filters for noncongruence");
  larcher->callback([&] { action = [&] { cmd_larcher(o, file); }; });

  auto* congruence = file_command("congruence", "Decide congruence");
  congruence->add_option("--max-cosets", max_cosets, "Coset limit");
  congruence->add_flag("--skip-filters", skip_filters,
                       "Go straight to the full decision");
  congruence->callback([&] {
    action = [&] { cmd_congruence(o, file, max_cosets, skip_filters); };
  });

  auto* gamma1 = file_command("gamma1", "Convert to the PSL2(Z) dessin");
  gamma1->callback([&] { action = [&] { cmd_gamma1(o, file); }; });

  auto* gens_gamma =
      app.add_subcommand("gens-gamma", "Generators of Gamma(m) in A, B");
  gens_gamma->add_option("m", modulus, "Even modulus")->required();
  gens_gamma->add_option("--max-cosets", max_cosets, "Coset limit");
  gens_gamma->callback(
      [&] { action = [&] { cmd_gens_gamma(o, modulus, max_cosets); }; });

  auto* m2w = app.add_subcommand("matrix2word", "Rewrite a Gamma(2) matrix");
  m2w->add_option("entries", entries, "a b c d")->required()->expected(4);
  m2w->callback([&] { action = [&] { cmd_matrix2word(o, entries); }; });

  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "Count (and classify) index-n subgroups");
  enumerate_cmd->add_option("n", edges, "Edge count")->required();
  enumerate_cmd->add_flag("--classify", classify, "Decide every subgroup");
  enumerate_cmd->add_option("--max-cosets", max_cosets, "Coset limit");
  enumerate_cmd->callback(
      [&] { action = [&] { cmd_enumerate(o, edges, classify, max_cosets); }; });

  auto* dot = file_command("dot", "Graphviz rendering");
  dot->callback([&] { action = [&] { cmd_dot(o, file); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kParseError;
  }

  o.command = app.get_subcommands().front()->get_name();
  o.input = file;
  if (o.command == "gens-gamma") o.input = std::to_string(modulus);
  if (o.command == "enumerate") o.input = std::to_string(edges);
  if (o.command == "member") o.input = file + " " + word;

  std::string error;
  try {
    action();
  } catch (const ParseError& e) {
    o.code = kParseError;
    error = e.what();
  } catch (const BudgetExceeded& e) {
    o.code = kBudgetExceeded;
    error = e.what();
  } catch (const InvariantError& e) {
    o.code = kInvariantViolation;
    error = e.what();
  } catch (const std::overflow_error& e) {
    o.code = kInvariantViolation;
    error = e.what();
  }

  if (as_json) {
    json envelope = {{"command", o.command},
                     {"input", o.input},
                     {"verdict", error.empty() ? o.verdict : json("error")},
                     {"data", error.empty() ? o.data : json{{"message", error}}}};
    out << envelope.dump(2) << '\n';
  } else if (error.empty()) {
    out << o.text.str();
  }
  if (!error.empty()) err << "error: " << error << '\n';
  return o.code;
}

}  // namespace dessins::cli
