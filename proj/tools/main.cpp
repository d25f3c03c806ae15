#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "atomsum/atoms.hpp"
#include "atomsum/decompose.hpp"
#include "atomsum/icg.hpp"
#include "atomsum/numtheory.hpp"
#include "atomsum/repcount.hpp"
#include "atomsum/verify.hpp"

using atomsum::i64;
using nlohmann::json;

namespace {

constexpr i64 kScalarCap = 1'000'000'000;   // formula-only queries
constexpr i64 kMaterializeCap = 1'000'000;  // atom lists and graphs
constexpr i64 kVerifyCountCap = 150;
constexpr i64 kVerifySumsetCap = 150;
constexpr i64 kVerifyLevelsCap = 120;
constexpr i64 kVerifyLemmasCap = 500;

class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

i64 env_cap() {
  const char* raw = std::getenv("ATOMSUM_MAX_N");
  if (raw == nullptr || *raw == '\0') return std::numeric_limits<i64>::max();
  try {
    const i64 value = std::stoll(raw);
    if (value >= 1) return value;
  } catch (const std::exception&) {
  }
  throw usage_error("ATOMSUM_MAX_N must be a positive integer");
}

// The environment may lower built-in caps, never raise them.
void check_cap(i64 n, i64 builtin) {
  const i64 cap = std::min(builtin, env_cap());
  if (n > cap) {
    throw usage_error("n=" + std::to_string(n) + " exceeds limit " + std::to_string(cap));
  }
}

std::string leader_tag(i64 leader, i64 n) {
  std::string s = std::to_string(leader);
  if (leader == n) s += "(zero)";
  return s;
}

std::string join(const std::vector<i64>& values, char sep = ' ') {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::string reason_text(atomsum::ZeroReason reason) {
  switch (reason) {
    case atomsum::ZeroReason::indivisible_c:
      return "g does not divide c";
    case atomsum::ZeroReason::shared_factor:
      return "reduced c shares a factor with reduced a*b";
    case atomsum::ZeroReason::parity:
      return "parity: reduced modulus even, reduced a*b*c odd";
    case atomsum::ZeroReason::none:
      break;
  }
  return "";
}

struct Output {
  std::string format = "text";
  std::string path;

  bool is_json() const { return format == "json"; }

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw usage_error("cannot open output file: " + path);
    file << text;
  }

  void write(const json& j) const { write(j.dump(2) + "\n"); }
};

json atom_json(const atomsum::AtomSet& s) {
  return json{{"n", s.n},
              {"leader", s.leader},
              {"size", static_cast<i64>(s.elements.size())},
              {"elements", s.elements}};
}

std::string atom_text(const atomsum::AtomSet& s) {
  return "leader=" + leader_tag(s.leader, s.n) +
         " size=" + std::to_string(s.elements.size()) + ": " + join(s.elements) + "\n";
}

int cmd_atom(const Output& out, i64 n, i64 a) {
  check_cap(n, kMaterializeCap);
  const atomsum::AtomSet s = atomsum::atom(n, a);
  if (out.is_json()) {
    out.write(atom_json(s));
  } else {
    out.write(atom_text(s));
  }
  return 0;
}

int cmd_atoms(const Output& out, i64 n) {
  check_cap(n, kMaterializeCap);
  const std::vector<atomsum::AtomSet> atoms = atomsum::atom_partition(n);
  if (out.is_json()) {
    json list = json::array();
    for (const atomsum::AtomSet& s : atoms) list.push_back(atom_json(s));
    out.write(json{{"n", n}, {"atoms", list}});
  } else {
    std::string text = "n=" + std::to_string(n) +
                       " atoms=" + std::to_string(atoms.size()) + "\n";
    for (const atomsum::AtomSet& s : atoms) text += atom_text(s);
    out.write(text);
  }
  return 0;
}

int cmd_ideal(const Output& out, i64 n, i64 a) {
  check_cap(n, kScalarCap);
  const atomsum::DivisorIdeal ideal = atomsum::ideal_of(n, a);
  if (out.is_json()) {
    out.write(json{{"n", n},
                   {"a", a},
                   {"leader", ideal.leader},
                   {"order", ideal.order()},
                   {"residue", ideal.residue()}});
  } else {
    out.write("n=" + std::to_string(n) + " a=" + std::to_string(a) +
              " leader=" + leader_tag(ideal.leader, n) +
              " order=" + std::to_string(ideal.order()) +
              " residue=" + std::to_string(ideal.residue()) + "\n");
  }
  return 0;
}

int cmd_count(const Output& out, i64 n, i64 a, i64 b, i64 c) {
  check_cap(n, kScalarCap);
  const atomsum::RepCountBreakdown bd = atomsum::rep_count(n, a, b, c);
  const atomsum::ReducedQuery& q = bd.reduced;
  if (out.is_json()) {
    json j{{"n", n},          {"a", a},
           {"b", b},          {"c", c},
           {"count", bd.count}, {"g", q.g},
           {"valid", q.valid}, {"n_reduced", q.n},
           {"a_reduced", q.a}, {"b_reduced", q.b},
           {"m", bd.m},        {"m1", bd.m1},
           {"m2", bd.m2},      {"m3", bd.m3},
           {"coprime_part", bd.coprime_part}};
    j["c_reduced"] = q.valid ? json(q.c) : json(nullptr);
    j["reason"] = bd.reason == atomsum::ZeroReason::none ? json(nullptr)
                                                         : json(reason_text(bd.reason));
    out.write(j);
  } else {
    std::string text = "count=" + std::to_string(bd.count);
    if (bd.reason != atomsum::ZeroReason::none) text += " reason=" + reason_text(bd.reason);
    text += "\ng=" + std::to_string(q.g) + " n'=" + std::to_string(q.n) +
            " a'=" + std::to_string(q.a) + " b'=" + std::to_string(q.b) +
            " c'=" + (q.valid ? std::to_string(q.c) : std::string("-")) + "\nm=" +
            std::to_string(bd.m) + " m1=" + std::to_string(bd.m1) +
            " m2=" + std::to_string(bd.m2) + " m3=" + std::to_string(bd.m3) +
            " coprime_part=" + std::to_string(bd.coprime_part) + "\n";
    out.write(text);
  }
  return 0;
}

int cmd_member(const Output& out, i64 n, i64 a, i64 b, i64 c) {
  check_cap(n, kScalarCap);
  const bool member = atomsum::in_sumset(n, a, b, c);
  if (out.is_json()) {
    out.write(json{{"n", n}, {"a", a}, {"b", b}, {"c", c}, {"member", member}});
  } else {
    out.write(std::string("member=") + (member ? "yes" : "no") + "\n");
  }
  return 0;
}

int cmd_profile(const Output& out, i64 n, i64 a, i64 b) {
  check_cap(n, kScalarCap);
  const std::map<i64, i64> profile = atomsum::count_profile(n, a, b);
  if (out.is_json()) {
    json counts = json::object();
    for (const auto& [leader, count] : profile) counts[std::to_string(leader)] = count;
    out.write(json{{"n", n}, {"a", a}, {"b", b}, {"profile", counts}});
  } else {
    std::string text = "n=" + std::to_string(n) + " a=" + std::to_string(a) +
                       " b=" + std::to_string(b) + "\n";
    for (const auto& [leader, count] : profile) {
      text += "leader=" + leader_tag(leader, n) + " count=" + std::to_string(count) + "\n";
    }
    out.write(text);
  }
  return 0;
}

int cmd_sumset(const Output& out, i64 n, i64 a, i64 b) {
  check_cap(n, kScalarCap);
  const atomsum::AtomDecomposition dec = atomsum::sumset_decompose(n, a, b);
  const std::string case_name = dec.case_tag == atomsum::ParityCase::A ? "A" : "B";
  if (out.is_json()) {
    out.write(json{{"n", n},
                   {"a", a},
                   {"b", b},
                   {"g", dec.g},
                   {"n_reduced", dec.n_reduced},
                   {"coprime_part", dec.coprime_part},
                   {"case", case_name},
                   {"leaders", dec.leaders}});
  } else {
    std::string text = "n=" + std::to_string(n) + " a=" + std::to_string(a) +
                       " b=" + std::to_string(b) + "\ng=" + std::to_string(dec.g) +
                       " n'=" + std::to_string(dec.n_reduced) + " case=" + case_name +
                       " coprime_part=" + std::to_string(dec.coprime_part) + "\nleaders:";
    for (i64 leader : dec.leaders) text += " " + leader_tag(leader, n);
    out.write(text + "\n");
  }
  return 0;
}

int cmd_locate(const Output& out, i64 n, i64 a, i64 b, i64 c) {
  check_cap(n, kScalarCap);
  const std::optional<i64> leader = atomsum::locate_sum(n, a, b, c);
  if (out.is_json()) {
    out.write(json{{"n", n},
                   {"a", a},
                   {"b", b},
                   {"c", c},
                   {"leader", leader ? json(*leader) : json(nullptr)}});
  } else {
    out.write(leader ? "leader=" + leader_tag(*leader, n) + "\n" : std::string("absent\n"));
  }
  return 0;
}

std::vector<i64> parse_divisor_list(const std::string& raw) {
  std::vector<i64> values;
  std::stringstream ss(raw);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw usage_error("empty entry in divisor list");
    try {
      std::size_t pos = 0;
      const i64 value = std::stoll(item, &pos);
      if (pos != item.size() || value < 0) throw std::invalid_argument(item);
      values.push_back(value);
    } catch (const std::exception&) {
      throw usage_error("bad divisor list entry: " + item);
    }
  }
  if (values.empty()) throw usage_error("divisor list is empty");
  std::vector<i64> sorted(values);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw usage_error("duplicate divisor in list");
  }
  return values;
}

json levels_json(const atomsum::icg::LevelReport& report) {
  json levels = json::array();
  for (const atomsum::icg::Level& level : report.levels) {
    json mult = json::object();
    for (const auto& [leader, count] : level.multiplicities) {
      mult[std::to_string(leader)] = count;
    }
    levels.push_back(json{{"k", level.index}, {"leaders", level.leaders},
                          {"multiplicities", mult}});
  }
  return json{{"n", report.n},
              {"D", report.divisor_set},
              {"levels", levels},
              {"unreachable", report.unreachable}};
}

int cmd_icg(const Output& out, i64 n, const std::string& divisor_list,
            const std::string& action, const std::string& argument) {
  check_cap(n, kMaterializeCap);
  const atomsum::icg::ICGraph graph = atomsum::icg::build(n, parse_divisor_list(divisor_list));

  if (action == "levels") {
    if (!argument.empty()) throw usage_error("levels takes no argument");
    const atomsum::icg::LevelReport report = atomsum::icg::distance_levels(graph);
    if (out.is_json()) {
      out.write(levels_json(report));
      return 0;
    }
    std::string text = "n=" + std::to_string(n) + " D=" + join(graph.divisor_set, ',') +
                       " degree=" + std::to_string(atomsum::icg::degree(graph)) + "\n";
    for (const atomsum::icg::Level& level : report.levels) {
      text += "level " + std::to_string(level.index) + ": atoms:";
      for (i64 leader : level.leaders) text += " " + leader_tag(leader, n);
      text += "  multiplicities:";
      for (const auto& [leader, count] : level.multiplicities) {
        text += " " + leader_tag(leader, n) + "=" + std::to_string(count);
      }
      text += "\n";
    }
    text += "unreachable:";
    if (report.unreachable.empty()) {
      text += " -";
    } else {
      for (i64 leader : report.unreachable) text += " " + leader_tag(leader, n);
    }
    out.write(text + "\n");
    return 0;
  }

  if (action == "power") {
    i64 r = 0;
    try {
      std::size_t pos = 0;
      r = std::stoll(argument, &pos);
      if (pos != argument.size()) throw std::invalid_argument(argument);
    } catch (const std::exception&) {
      throw usage_error("power requires a positive integer argument");
    }
    const atomsum::icg::DistancePower power = atomsum::icg::distance_power(graph, r);
    if (out.is_json()) {
      out.write(json{{"n", n},
                     {"D", graph.divisor_set},
                     {"r", r},
                     {"cumulative", power.cumulative},
                     {"level_exact", power.level_exact}});
    } else {
      out.write("n=" + std::to_string(n) + " D=" + join(graph.divisor_set, ',') +
                " r=" + std::to_string(r) + "\ncumulative: " + join(power.cumulative) +
                "\nlevel-exact: " + join(power.level_exact) + "\n");
    }
    return 0;
  }

  if (action == "export") {
    atomsum::icg::ExportFormat format;
    if (argument == "edges") {
      format = atomsum::icg::ExportFormat::edge_list;
    } else if (argument == "dot") {
      format = atomsum::icg::ExportFormat::dot;
    } else if (argument == "summary") {
      format = atomsum::icg::ExportFormat::summary;
    } else {
      throw usage_error("export format must be edges, dot or summary");
    }
    out.write(atomsum::icg::export_graph(graph, format));
    return 0;
  }

  throw usage_error("unknown icg action: " + action);
}

int cmd_verify(const Output& out, i64 n_max, const std::string& mode) {
  i64 checked = 0;
  i64 mismatches = 0;
  json breakdown = json::object();
  std::vector<std::string> notes;

  if (mode == "count") {
    check_cap(n_max, kVerifyCountCap);
    const atomsum::verify::CountsSweep sweep = atomsum::verify::verify_counts(n_max);
    checked = sweep.checked;
    mismatches = sweep.total_mismatches();
    breakdown = json{{"count", sweep.count_mismatches},
                     {"membership", sweep.member_mismatches},
                     {"constancy", sweep.constancy_violations},
                     {"mass", sweep.mass_mismatches},
                     {"reduction", sweep.reduction_mismatches},
                     {"symmetry", sweep.symmetry_mismatches}};
    notes = sweep.notes;
  } else if (mode == "sumset") {
    check_cap(n_max, kVerifySumsetCap);
    const atomsum::verify::SumsetsSweep sweep = atomsum::verify::verify_sumsets(n_max);
    checked = sweep.checked;
    mismatches = sweep.total_mismatches();
    breakdown = json{{"set", sweep.set_mismatches},
                     {"locate", sweep.locate_mismatches},
                     {"parity", sweep.parity_violations},
                     {"zero", sweep.zero_mismatches}};
    notes = sweep.notes;
  } else if (mode == "levels") {
    check_cap(n_max, kVerifyLevelsCap);
    const atomsum::verify::LevelsSweep sweep = atomsum::verify::verify_levels(n_max);
    checked = sweep.checked;
    mismatches = sweep.total_mismatches();
    breakdown = json{{"graphs", sweep.graphs},
                     {"level", sweep.level_mismatches},
                     {"multiplicity", sweep.multiplicity_mismatches},
                     {"closure", sweep.closure_mismatches}};
    notes = sweep.notes;
  } else if (mode == "lemmas") {
    check_cap(n_max, kVerifyLemmasCap);
    const atomsum::verify::LemmasSweep sweep = atomsum::verify::verify_lemmas(n_max);
    checked = sweep.checked;
    mismatches = sweep.total_mismatches();
    breakdown = json{{"phi", sweep.phi_mismatches},
                     {"phi_star", sweep.phi_star_mismatches},
                     {"f_count", sweep.f_count_mismatches},
                     {"t_sum", sweep.t_sum_mismatches},
                     {"q_sum", sweep.q_sum_mismatches},
                     {"mobius_lcm", sweep.mobius_lcm_mismatches}};
    notes = sweep.notes;
  } else {
    throw usage_error("verify mode must be count, sumset, levels or lemmas");
  }

  if (out.is_json()) {
    out.write(json{{"mode", mode},
                   {"n_max", n_max},
                   {"checked", checked},
                   {"mismatches", mismatches},
                   {"breakdown", breakdown},
                   {"notes", notes}});
  } else {
    std::string text = "mode=" + mode + " n_max=" + std::to_string(n_max) + "\nchecked " +
                       std::to_string(checked) + " queries, " + std::to_string(mismatches) +
                       " mismatches\n";
    for (const std::string& line : notes) text += "mismatch: " + line + "\n";
    out.write(text);
  }
  return mismatches == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Atoms, atom sumsets and integral circulant graphs over Z_n"};
  app.require_subcommand(1);

  Output out;
  app.add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--output", out.path, "Write output to a file instead of stdout");

  const auto nonneg = CLI::Range(static_cast<i64>(0), std::numeric_limits<i64>::max());
  i64 n = 0, a = 0, b = 0, c = 0, n_max = 0;
  std::string divisor_list, action, action_arg, mode;

  CLI::App* atom_cmd = app.add_subcommand("atom", "One atom of Z_n");
  atom_cmd->add_option("n", n)->required()->check(nonneg);
  atom_cmd->add_option("a", a)->required()->check(nonneg);

  CLI::App* atoms_cmd = app.add_subcommand("atoms", "The full atom partition of Z_n");
  atoms_cmd->add_option("n", n)->required()->check(nonneg);

  CLI::App* ideal_cmd = app.add_subcommand("ideal", "Leader and order of the ideal of a");
  ideal_cmd->add_option("n", n)->required()->check(nonneg);
  ideal_cmd->add_option("a", a)->required()->check(nonneg);

  CLI::App* count_cmd =
      app.add_subcommand("count", "Number of representations c = u + v over two atoms");
  count_cmd->add_option("n", n)->required()->check(nonneg);
  count_cmd->add_option("a", a)->required()->check(nonneg);
  count_cmd->add_option("b", b)->required()->check(nonneg);
  count_cmd->add_option("c", c)->required()->check(nonneg);

  CLI::App* member_cmd = app.add_subcommand("member", "Whether c lies in the atom sumset");
  member_cmd->add_option("n", n)->required()->check(nonneg);
  member_cmd->add_option("a", a)->required()->check(nonneg);
  member_cmd->add_option("b", b)->required()->check(nonneg);
  member_cmd->add_option("c", c)->required()->check(nonneg);

  CLI::App* profile_cmd =
      app.add_subcommand("profile", "Representation count per atom, keyed by leader");
  profile_cmd->add_option("n", n)->required()->check(nonneg);
  profile_cmd->add_option("a", a)->required()->check(nonneg);
  profile_cmd->add_option("b", b)->required()->check(nonneg);

  CLI::App* sumset_cmd =
      app.add_subcommand("sumset", "Decompose an atom sumset into atoms");
  sumset_cmd->add_option("n", n)->required()->check(nonneg);
  sumset_cmd->add_option("a", a)->required()->check(nonneg);
  sumset_cmd->add_option("b", b)->required()->check(nonneg);

  CLI::App* locate_cmd =
      app.add_subcommand("locate", "Leader of the atom of the sumset containing c");
  locate_cmd->add_option("n", n)->required()->check(nonneg);
  locate_cmd->add_option("a", a)->required()->check(nonneg);
  locate_cmd->add_option("b", b)->required()->check(nonneg);
  locate_cmd->add_option("c", c)->required()->check(nonneg);

  CLI::App* icg_cmd = app.add_subcommand("icg", "Integral circulant graph tools");
  icg_cmd->add_option("n", n)->required()->check(nonneg);
  icg_cmd->add_option("-d,--divisors", divisor_list, "Comma-separated divisor set")
      ->required();
  icg_cmd->add_option("action", action, "levels | power <r> | export <edges|dot|summary>")
      ->required()
      ->check(CLI::IsMember({"levels", "power", "export"}));
  icg_cmd->add_option("argument", action_arg, "Argument for power/export");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Cross-check closed forms against brute force");
  verify_cmd->add_option("n_max", n_max)->required()->check(nonneg);
  verify_cmd->add_option("mode", mode)
      ->required()
      ->check(CLI::IsMember({"count", "sumset", "levels", "lemmas"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (atom_cmd->parsed()) return cmd_atom(out, n, a);
    if (atoms_cmd->parsed()) return cmd_atoms(out, n);
    if (ideal_cmd->parsed()) return cmd_ideal(out, n, a);
    if (count_cmd->parsed()) return cmd_count(out, n, a, b, c);
    if (member_cmd->parsed()) return cmd_member(out, n, a, b, c);
    if (profile_cmd->parsed()) return cmd_profile(out, n, a, b);
    if (sumset_cmd->parsed()) return cmd_sumset(out, n, a, b);
    if (locate_cmd->parsed()) return cmd_locate(out, n, a, b, c);
    if (icg_cmd->parsed()) return cmd_icg(out, n, divisor_list, action, action_arg);
    if (verify_cmd->parsed()) return cmd_verify(out, n_max, mode);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
