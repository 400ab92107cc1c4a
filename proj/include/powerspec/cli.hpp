#pragma once

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "group_spec.hpp"
#include "pgroup.hpp"
#include "power_graph.hpp"
#include "spectrum.hpp"
#include "verify.hpp"

namespace powerspec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFail = 2;

/// Largest group order accepted on the command line.
inline constexpr std::size_t kMaxOrder = 4096;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline FiniteGroup load_group(const std::string& spec, const std::string& table) {
  if (!spec.empty() && !table.empty()) throw UsageError("give either a group spec or --table, not both");
  if (spec.empty() && table.empty()) throw UsageError("missing group spec (or --table PATH)");
  try {
    FiniteGroup g = table.empty() ? parse_group_spec(spec) : read_table_file(table);
    if (g.order() > kMaxOrder)
      throw UsageError("group order " + std::to_string(g.order()) + " exceeds limit " + std::to_string(kMaxOrder));
    return g;
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

inline Graph graph_of(const GroupStructure& s, const std::string& kind) {
  if (kind == "power") return power_graph(s);
  if (kind == "proper") {
    if (s.size() < 2) throw UsageError("--graph proper: group must have order >= 2");
    return proper_power_graph(s);
  }
  throw UsageError("--graph must be power or proper");
}

inline void emit_spectrum(std::ostream& out, const Spectrum& s, const std::string& format) {
  if (format == "json") {
    out << spectrum_to_json(s).dump() << '\n';
  } else if (format == "tsv") {
    out << "lambda\tmultiplicity\tkind\n";
    for (auto it = s.exact.roots().rbegin(); it != s.exact.roots().rend(); ++it)
      out << it->first << '\t' << it->second << "\texact\n";
    out << std::setprecision(12);
    for (double x : s.numeric) out << x << "\t1\tnumeric\n";
  } else {
    out << (s.is_exact() ? "" : "integer part: ") << s.exact.to_string() << '\n';
    out << spectrum_table(s);
  }
}

inline std::string params_text(const nlohmann::json& params) {
  std::string t;
  for (const auto& [k, v] : params.items()) {
    if (!t.empty()) t += ',';
    t += k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
  }
  return t;
}

inline void emit_reports(std::ostream& out, const std::vector<ClaimReport>& reports, const std::string& format) {
  std::size_t pass = 0, fail = 0, skipped = 0;
  for (const auto& r : reports) (r.passed() ? pass : r.failed() ? fail : skipped)++;
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    out << nlohmann::json{{"reports", arr}, {"pass", pass}, {"fail", fail}, {"inapplicable", skipped}}.dump()
        << '\n';
    return;
  }
  if (format == "tsv") {
    out << "claim\tparams\tverdict\twitness\n";
    for (const auto& r : reports)
      out << r.claim_id << '\t' << params_text(r.params) << '\t' << to_string(r.verdict) << '\t' << r.witness
          << '\n';
    return;
  }
  for (const auto& r : reports) {
    if (r.passed()) continue;
    out << (r.failed() ? "FAIL " : "SKIP ") << r.claim_id << " [" << params_text(r.params) << "] " << r.witness
        << '\n';
  }
  out << pass << " passed, " << fail << " failed, " << skipped << " inapplicable\n";
}

inline void require_min(std::uint64_t value, std::uint64_t min, const std::string& flag) {
  if (value < min) throw UsageError(flag + " must be >= " + std::to_string(min));
}

}  // namespace detail

/// Runs the command line `args` (without the program name). Documents go to
/// `out`, diagnostics to `err`. Returns 0 on success, 1 on usage errors and
/// 2 when any claim fails.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Power graphs of finite groups: Laplacian spectra and claim checks", "powerspec"};
  app.require_subcommand(1);
  std::string format = "text";
  std::string table;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "tsv", "text"}));
  };

  std::string group_spec;
  std::string graph_kind = "power";
  auto* spec_cmd = app.add_subcommand("spectrum", "Laplacian spectrum of a power graph");
  spec_cmd->add_option("group", group_spec, "Group spec: zn:N, qn:N, gq:A, prod:...x..., table:PATH");
  spec_cmd->add_option("--table", table, "Multiplication table file");
  spec_cmd->add_option("--graph", graph_kind, "power or proper");
  add_format(spec_cmd);

  bool with_charpoly = false;
  auto* dec_cmd = app.add_subcommand("decompose", "Join/union decomposition of a p-group power graph");
  dec_cmd->add_option("group", group_spec, "Group spec");
  dec_cmd->add_option("--table", table, "Multiplication table file");
  dec_cmd->add_flag("--charpoly", with_charpoly, "Also print the characteristic polynomial");
  add_format(dec_cmd);

  bool all = false;
  std::vector<std::string> theorems;
  SuiteOptions opt;
  std::string verify_group;
  auto* ver_cmd = app.add_subcommand("verify", "Check claims over parameter ranges");
  ver_cmd->add_flag("--all", all, "Run every claim");
  ver_cmd->add_option("--theorem", theorems, "Claim id (repeatable)");
  ver_cmd->add_option("--cyclic-max", opt.cyclic_max, "Largest n for Z_n claims");
  ver_cmd->add_option("--dicyclic-max", opt.dicyclic_max, "Largest n for Q_n claims");
  ver_cmd->add_option("--pgroup-max", opt.pgroup_max, "Largest p-group order");
  ver_cmd->add_option("--max", opt.scan_max, "Largest n for the conjecture scan");
  ver_cmd->add_option("--group", verify_group, "Check the per-group claims on one group");
  ver_cmd->add_option("--table", table, "Multiplication table file for --group checks");
  add_format(ver_cmd);

  std::uint64_t scan_max = 200;
  auto* scan_cmd = app.add_subcommand("scan", "Conjecture scan over Z_n");
  scan_cmd->add_option("--max", scan_max, "Largest n");
  add_format(scan_cmd);

  auto* info_cmd = app.add_subcommand("info", "Element orders, classes and up-sets");
  info_cmd->add_option("group", group_spec, "Group spec");
  info_cmd->add_option("--table", table, "Multiplication table file");
  add_format(info_cmd);

  auto* graph_cmd = app.add_subcommand("graph", "Export a power graph");
  graph_cmd->add_option("group", group_spec, "Group spec");
  graph_cmd->add_option("--table", table, "Multiplication table file");
  graph_cmd->add_option("--graph", graph_kind, "power or proper");
  add_format(graph_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (spec_cmd->parsed()) {
      const GroupStructure s(detail::load_group(group_spec, table));
      detail::emit_spectrum(out, spectrum(detail::graph_of(s, graph_kind)), format);
      return kExitOk;
    }
    if (dec_cmd->parsed()) {
      const GroupStructure s(detail::load_group(group_spec, table));
      if (!s.p_group_prime()) throw UsageError(s.group().label() + " is not a p-group");
      const auto tree = decompose(s);
      if (format == "json") {
        auto j = decomposition_to_json(tree);
        if (with_charpoly) j = {{"tree", j}, {"charpoly", powerspec::detail::charpoly_json(tree_charpoly(tree))}};
        out << j.dump() << '\n';
      } else {
        out << tree.to_string() << '\n';
        if (with_charpoly) out << tree_charpoly(tree).to_string() << '\n';
      }
      return kExitOk;
    }
    if (ver_cmd->parsed()) {
      detail::require_min(opt.cyclic_max, 2, "--cyclic-max");
      detail::require_min(opt.dicyclic_max, 2, "--dicyclic-max");
      detail::require_min(opt.pgroup_max, 2, "--pgroup-max");
      detail::require_min(opt.scan_max, 2, "--max");
      for (const auto& id : theorems)
        if (std::find(claim_ids().begin(), claim_ids().end(), id) == claim_ids().end())
          throw UsageError("--theorem: unknown claim id '" + id + "'");
      std::vector<ClaimReport> reports;
      if (!verify_group.empty() || !table.empty()) {
        const auto g = detail::load_group(verify_group, table);
        reports.push_back(check_complete_power_graph(g));
        reports.push_back(check_proper_shift(g));
        reports.push_back(check_pgroup_bundle(g));
      } else if (all || !theorems.empty()) {
        reports = run_suite(opt, all ? std::vector<std::string>{} : theorems);
      } else {
        throw UsageError("verify needs --all, --theorem ID or --group SPEC");
      }
      detail::emit_reports(out, reports, format);
      const bool any_fail = std::any_of(reports.begin(), reports.end(), [](const auto& r) { return r.failed(); });
      if (any_fail) err << "one or more claims failed\n";
      return any_fail ? kExitFail : kExitOk;
    }
    if (scan_cmd->parsed()) {
      detail::require_min(scan_max, 2, "--max");
      const auto scan = scan_conjecture(scan_max);
      if (format == "json") {
        out << scan_to_json(scan).dump() << '\n';
      } else {
        out << scan_to_tsv(scan);
        if (format == "text")
          out << "failures (distinct primes): " << scan.failures_strict.size()
              << ", failures (primes may repeat): " << scan.failures_loose.size() << '\n';
      }
      return scan.failures_strict.empty() ? kExitOk : kExitFail;
    }
    if (info_cmd->parsed()) {
      const GroupStructure s(detail::load_group(group_spec, table));
      const auto p = s.p_group_prime();
      nlohmann::json elements = nlohmann::json::array();
      for (Element g = 0; g < s.size(); ++g) {
        nlohmann::json e = {{"index", g},
                            {"label", s.group().element_label(g)},
                            {"order", s.order(g)},
                            {"class_size", s.eq_class(g).size()},
                            {"up_size", s.up_set(g).size()}};
        if (p) e["primitive_classes"] = s.primitive_classes(g, *p).size();
        elements.push_back(e);
      }
      nlohmann::json doc = {{"group", s.group().label()},
                            {"order", s.size()},
                            {"p", p ? nlohmann::json(*p) : nlohmann::json(nullptr)},
                            {"cyclic", s.is_cyclic()},
                            {"generalized_quaternion", s.is_generalized_quaternion()},
                            {"elements", elements}};
      if (format == "json") {
        out << doc.dump() << '\n';
      } else {
        if (format == "text")
          out << s.group().label() << ": order " << s.size() << (p ? ", p-group p=" + std::to_string(*p) : "")
              << (s.is_cyclic() ? ", cyclic" : "") << (s.is_generalized_quaternion() ? ", generalized quaternion" : "")
              << '\n';
        out << "index\tlabel\torder\tclass_size\tup_size" << (p ? "\tprimitive_classes" : "") << '\n';
        for (const auto& e : elements) {
          out << e["index"] << '\t' << e["label"].get<std::string>() << '\t' << e["order"] << '\t'
              << e["class_size"] << '\t' << e["up_size"];
          if (p) out << '\t' << e["primitive_classes"];
          out << '\n';
        }
      }
      return kExitOk;
    }
    if (graph_cmd->parsed()) {
      const GroupStructure s(detail::load_group(group_spec, table));
      const Graph g = detail::graph_of(s, graph_kind);
      if (format == "json")
        out << graph_to_json(g).dump() << '\n';
      else
        write_edge_list(out, g);
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace powerspec::cli
