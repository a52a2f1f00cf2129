#include "mixcay_cli/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "mixcay/classify.hpp"
#include "mixcay/context.hpp"
#include "mixcay/errors.hpp"
#include "mixcay/integrality.hpp"
#include "mixcay/spectra.hpp"
#include "mixcay_cli/io.hpp"

namespace mixcay::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Globals {
  double tol = kSnapTolerance;
  std::string format;
  std::string out_path;
};

struct Result {
  std::string text;
  int code = kSuccess;
};

std::string resolve_format(const Globals& g, const char* fallback) { return g.format.empty() ? fallback : g.format; }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

GroupContext load_context(const std::string& spec, const std::string& table_path) {
  const GroupSpec parsed = parse_group_spec(spec);
  if (table_path.empty()) return GroupContext::build(parsed);
  return GroupContext::with_table(parsed, read_character_table_csv(table_path));
}

std::string class_label(const GroupContext& ctx, ClassIndex c) { return ctx.group.label(ctx.classes.reps[c]); }

std::vector<std::string> labels_of(const Group& group, const ElementSet& set) {
  std::vector<std::string> out;
  for (const auto e : elements_of(set)) out.push_back(group.label(e));
  return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

// --- group -----------------------------------------------------------------

Result cmd_group(const Globals& g, const std::string& spec) {
  const GroupSpec parsed = parse_group_spec(spec);
  const Group group = build_group(parsed);
  const ClassData classes = conjugacy_classes(group);
  const std::string format = resolve_format(g, "json");
  if (format == "json") {
    Json j;
    j["group"] = to_string(parsed);
    j["order"] = group.order();
    j["exponent"] = group.exponent();
    j["abelian"] = group.is_abelian();
    j["ambivalent"] = is_ambivalent(group);
    j["classes"] = Json::array();
    for (ClassIndex c = 0; c < classes.num_classes(); ++c) {
      j["classes"].push_back({{"index", c},
                              {"representative", group.label(classes.reps[c])},
                              {"size", classes.sizes[c]},
                              {"element_order", classes.rep_order[c]},
                              {"inverse_class", classes.inverse_class[c]},
                              {"centralizer_order", classes.centralizer_order[c]}});
    }
    return {dump(j)};
  }
  std::ostringstream os;
  if (format == "csv") {
    os << "index,representative,size,element_order,inverse_class,centralizer_order\n";
    for (ClassIndex c = 0; c < classes.num_classes(); ++c) {
      os << c << ',' << csv_field(group.label(classes.reps[c])) << ',' << classes.sizes[c] << ','
         << classes.rep_order[c] << ',' << classes.inverse_class[c] << ',' << classes.centralizer_order[c] << '\n';
    }
    return {os.str()};
  }
  os << to_string(parsed) << ": order " << group.order() << ", exponent " << group.exponent() << ", "
     << classes.num_classes() << " classes" << (group.is_abelian() ? ", abelian" : "")
     << (is_ambivalent(group) ? ", ambivalent" : "") << '\n';
  for (ClassIndex c = 0; c < classes.num_classes(); ++c) {
    os << "  Cl" << c << " rep " << group.label(classes.reps[c]) << "  size " << classes.sizes[c] << "  order "
       << classes.rep_order[c] << "  inverse Cl" << classes.inverse_class[c] << '\n';
  }
  return {os.str()};
}

// --- chartable -------------------------------------------------------------

Result cmd_chartable(const Globals& g, const std::string& spec) {
  const auto ctx = GroupContext::build(parse_group_spec(spec));
  const std::string format = resolve_format(g, "csv");
  if (format == "json") {
    Json j;
    j["group"] = ctx.spec_string();
    j["classes"] = Json::array();
    for (ClassIndex c = 0; c < ctx.classes.num_classes(); ++c) j["classes"].push_back(class_label(ctx, c));
    j["characters"] = Json::array();
    for (std::size_t r = 0; r < ctx.characters.size(); ++r) {
      Json row = Json::array();
      for (ClassIndex c = 0; c < ctx.classes.num_classes(); ++c) row.push_back(complex_json(ctx.characters.value(r, c)));
      j["characters"].push_back({{"degree", ctx.characters.degree(r)},
                                 {"conjugate", ctx.characters.conjugate(r) + 1},
                                 {"values", row}});
    }
    const auto resid = orthogonality_residual(ctx.classes, ctx.characters);
    j["orthogonality"] = {{"rows", resid.rows}, {"columns", resid.columns}};
    return {dump(j)};
  }
  return {character_table_csv(ctx)};
}

// --- atoms -----------------------------------------------------------------

Result cmd_atoms(const Globals& g, const std::string& spec) {
  const Group group = build_group(parse_group_spec(spec));
  const AtomSystem sys = build_atom_system(group);
  const std::string format = resolve_format(g, "text");
  if (format == "json") {
    Json j;
    j["group"] = spec;
    j["atoms"] = Json::array();
    for (const auto& a : sys.atoms) j["atoms"].push_back(labels_of(group, a));
    j["gamma3_classes"] = Json::array();
    for (const auto& a : sys.atoms3) j["gamma3_classes"].push_back(labels_of(group, a));
    return {dump(j)};
  }
  std::ostringstream os;
  for (const auto& a : sys.atoms) os << "atom {" << join(labels_of(group, a), ", ") << "}\n";
  for (const auto& a : sys.atoms3) os << "gamma3-class {" << join(labels_of(group, a), ", ") << "}\n";
  return {os.str()};
}

// --- spectrum --------------------------------------------------------------

struct SpectrumArgs {
  std::string group;
  std::string set;
  std::string matrix = "H";
  std::string method = "chars";
  std::string table;
};

Result cmd_spectrum(const Globals& g, const SpectrumArgs& a) {
  if (a.matrix == "A" && a.method != "chars") {
    throw CLI::ValidationError("--method", "the direct eigensolver only handles the Hermitian matrix H");
  }
  const auto ctx = load_context(a.group, a.table);
  const ConnectionSet set(ctx.group, parse_set(ctx.group, ctx.classes, a.set));
  const int kmax = static_cast<int>(ctx.classes.num_classes());

  Json j;
  j["group"] = ctx.spec_string();
  j["set"] = labels_of(ctx.group, set.members());
  j["matrix"] = a.matrix;
  j["method"] = a.method;
  j["entries"] = Json::array();

  std::optional<Spectrum> by_chars;
  std::optional<Spectrum> direct;
  bool moments = true;
  std::string summary;

  if (a.method != "direct") {
    const CharacterSpectrum cs = a.matrix == "H" ? hs_spectrum_by_characters(ctx.classes, ctx.characters, set)
                                                 : adjacency_spectrum_by_characters(ctx.classes, ctx.characters, set);
    for (std::size_t r = 0; r < cs.values.size(); ++r) {
      j["entries"].push_back({{"value_re", cs.values[r].real()},
                              {"value_im", cs.values[r].imag()},
                              {"multiplicity", cs.multiplicities[r]},
                              {"character_index", r + 1}});
    }
    by_chars = cs.merged();
    summary = by_chars->to_string();
  }
  if (a.method != "chars") {
    direct = hs_spectrum_direct(build_h_matrix(ctx.group, set));
    if (!by_chars) {
      for (const auto& e : direct->entries) {
        j["entries"].push_back(
            {{"value_re", e.value.real()}, {"value_im", e.value.imag()}, {"multiplicity", e.multiplicity}});
      }
      summary = direct->to_string();
    }
  }
  const Spectrum& reported = by_chars ? *by_chars : *direct;
  if (a.matrix == "H") {
    moments = moment_check(build_h_matrix(ctx.group, set), reported, kmax).ok;
  } else {
    moments = moment_check(build_a_matrix(ctx.group, set), reported, kmax).ok;
  }
  std::optional<bool> agreement;
  if (by_chars && direct) agreement = spectra_agree(*by_chars, *direct, g.tol);

  j["checks"]["moments"] = moments;
  j["checks"]["agreement"] = agreement ? Json(*agreement) : Json(nullptr);
  const int code = (!moments || (agreement && !*agreement)) ? kViolation : kSuccess;
  if (resolve_format(g, "json") == "text") return {summary + "\n", code};
  return {dump(j), code};
}

// --- check -----------------------------------------------------------------

Result cmd_check(const Globals& g, const std::string& spec, const std::string& set_text, const std::string& table) {
  const auto ctx = load_context(spec, table);
  const ConnectionSet set(ctx.group, parse_set(ctx.group, ctx.classes, set_text));
  const auto report = integrality_report(ctx, set, g.tol);
  const auto decomposition = decompose_check(ctx.group, ctx.classes, ctx.characters, set, g.tol);
  const auto eis = is_eisenstein_integral(ctx.classes, ctx.characters, set, g.tol);
  const auto blocks = block_decomposition_check(ctx.group, ctx.classes, ctx.characters, set, g.tol);

  const bool ok = report.agree && decomposition.consistent() && eis.routes_agree && eis.implication_holds &&
                  blocks.g_agree && blocks.implication_holds;

  Json j;
  j["group"] = ctx.spec_string();
  j["set"] = labels_of(ctx.group, set.members());
  Json structural = {{"verdict", report.structural.integral},
                     {"symmetric_part_in_b", report.structural.symmetric_part_in_b},
                     {"skew_part_in_e", report.structural.skew_part_in_e},
                     {"witness", report.structural.witness}};
  structural["offending"] =
      report.structural.offending ? Json(ctx.group.label(*report.structural.offending)) : Json(nullptr);
  Json spectral = {{"verdict", report.spectral.integral}, {"distances", report.spectral.distances}};
  j["integrality"] = {{"structural", structural}, {"spectral", spectral}, {"agree", report.agree}};
  j["decomposition"] = {{"whole", decomposition.whole},
                        {"symmetric_part", decomposition.symmetric_part},
                        {"skew_part", decomposition.skew_part},
                        {"consistent", decomposition.consistent()}};
  Json adjacency = Json::array();
  for (const auto& z : eis.adjacency.values) {
    const auto e = eisenstein_coordinates(z);
    adjacency.push_back({{"a", e.a}, {"b", e.b}});
  }
  j["eisenstein"] = {{"f", eis.values.f},
                     {"g", eis.values.g},
                     {"f_snapped", eis.f_snapped},
                     {"g_snapped", eis.g_snapped},
                     {"f_distance", eis.f_distance},
                     {"g_distance", eis.g_distance},
                     {"adjacency_eigenvalues", adjacency},
                     {"verdict", eis.verdict},
                     {"adjacency_verdict", eis.adjacency_verdict},
                     {"routes_agree", eis.routes_agree},
                     {"hs_integral", eis.hs_integral},
                     {"implication_holds", eis.implication_holds}};
  Json reps = Json::array();
  for (const auto y : blocks.block_reps) reps.push_back(ctx.group.label(y));
  j["blocks"] = {{"partitioned", blocks.partitioned},
                 {"representatives", reps},
                 {"hypothesis_holds", blocks.hypothesis_holds},
                 {"g_from_blocks", blocks.g_from_blocks},
                 {"max_g_gap", blocks.max_g_gap},
                 {"g_agree", blocks.g_agree},
                 {"implication_holds", blocks.implication_holds}};
  j["ok"] = ok;

  if (resolve_format(g, "json") == "text") {
    std::ostringstream os;
    os << "HS-integral: " << (report.spectral.integral ? "yes" : "no") << " (structural "
       << (report.structural.integral ? "yes" : "no") << ", " << report.structural.witness << ")\n";
    os << "Eisenstein-integral: " << (eis.verdict ? "yes" : "no") << '\n';
    os << "consistent: " << (ok ? "yes" : "no") << '\n';
    return {os.str(), ok ? kSuccess : kViolation};
  }
  return {dump(j), ok ? kSuccess : kViolation};
}

// --- classify / conjecture -------------------------------------------------

std::vector<GroupSpec> select_groups(const std::string& groups, std::optional<std::size_t> all_upto) {
  if (!groups.empty() && all_upto) throw CLI::ValidationError("--groups", "use either --groups or --all-upto");
  if (all_upto) return builtin_catalog(*all_upto);
  if (groups.empty()) throw CLI::ValidationError("--groups", "one of --groups or --all-upto is required");
  return parse_group_spec_list(groups);
}

Result cmd_classify(const Globals& g, const std::string& groups, std::optional<std::size_t> all_upto,
                    const std::string& mode, std::size_t bound, std::ostream& err) {
  ClassifyOptions options;
  options.mode = parse_enumeration_mode(mode);
  options.bound = bound;
  options.tol = g.tol;
  std::vector<ClassificationRow> rows;
  for (const auto& spec : select_groups(groups, all_upto)) {
    const auto ctx = GroupContext::build(spec);
    if (all_upto) {
      try {
        normal_set_count(ctx.classes, bound);
      } catch (const Error& e) {
        err << "skipping " << to_string(spec) << ": " << e.what() << '\n';
        continue;
      }
    }
    std::vector<ClassificationRow> group_rows;
    classify(ctx, options, group_rows);
    std::sort(group_rows.begin(), group_rows.end(),
              [](const ClassificationRow& a, const ClassificationRow& b) { return a.mask < b.mask; });
    rows.insert(rows.end(), std::make_move_iterator(group_rows.begin()), std::make_move_iterator(group_rows.end()));
  }

  const std::string format = resolve_format(g, "csv");
  std::ostringstream os;
  if (format == "json") {
    Json j = Json::array();
    for (const auto& r : rows) {
      j.push_back({{"group", r.group},
                   {"set", r.descriptor},
                   {"symmetric_part", r.symmetric_part},
                   {"skew_part", r.skew_part},
                   {"normal", r.normal},
                   {"hs_integral", r.hs_integral},
                   {"eisenstein_integral", r.eisenstein_integral},
                   {"spectrum", r.spectrum}});
    }
    return {dump(j)};
  }
  if (format == "csv") {
    os << "group,set,symmetric_part,skew_part,normal,hs_integral,eisenstein_integral,spectrum\n";
    for (const auto& r : rows) {
      os << csv_field(r.group) << ',' << csv_field(r.descriptor) << ',' << csv_field(r.symmetric_part) << ','
         << csv_field(r.skew_part) << ',' << (r.normal ? "true" : "false") << ','
         << (r.hs_integral ? "true" : "false") << ',' << (r.eisenstein_integral ? "true" : "false") << ','
         << csv_field(r.spectrum) << '\n';
    }
    return {os.str()};
  }
  for (const auto& r : rows) {
    os << r.group << " | " << r.descriptor << " | HS " << (r.hs_integral ? "yes" : "no") << " | Eisenstein "
       << (r.eisenstein_integral ? "yes" : "no") << " | " << r.spectrum << '\n';
  }
  return {os.str()};
}

Json record_json(const ConjectureRecord& r) {
  return {{"group", r.group},          {"y", r.y_label},
          {"character", r.character + 1}, {"c", r.c},
          {"t", r.t},                  {"t_over_3", r.t / 3.0},
          {"t_over_3_distance", r.t_over_3_distance}, {"parity_ok", r.parity_ok}};
}

Result cmd_conjecture(const Globals& g, const std::string& groups, std::optional<std::size_t> all_upto,
                      const std::string& table, bool records) {
  const auto specs = select_groups(groups, all_upto);
  ConjectureScanResult result;
  if (!table.empty()) {
    if (specs.size() != 1) throw CLI::ValidationError("--character-table", "needs exactly one group");
    conjecture_scan(GroupContext::with_table(specs.front(), read_character_table_csv(table)), result, g.tol, records);
  } else {
    for (const auto& spec : specs) conjecture_scan(GroupContext::build(spec), result, g.tol, records);
  }
  const int code = result.clean() ? kSuccess : kViolation;
  if (resolve_format(g, "json") == "text") {
    std::ostringstream os;
    os << "groups: " << result.groups.size() << ", blocks: " << result.blocks_scanned
       << ", counterexamples: " << result.counterexamples.size()
       << ", invariant failures: " << result.invariant_failures.size() << '\n';
    for (const auto& r : result.counterexamples) {
      os << "counterexample: " << r.group << " y=" << r.y_label << " chi" << r.character + 1 << " T=" << r.t << '\n';
    }
    return {os.str(), code};
  }
  Json j;
  j["groups"] = result.groups;
  j["blocks_scanned"] = result.blocks_scanned;
  j["verdict"] = result.verdict();
  j["counterexamples"] = Json::array();
  for (const auto& r : result.counterexamples) j["counterexamples"].push_back(record_json(r));
  j["invariant_failures"] = Json::array();
  for (const auto& r : result.invariant_failures) j["invariant_failures"].push_back(record_json(r));
  if (records) {
    j["records"] = Json::array();
    for (const auto& r : result.records) j["records"].push_back(record_json(r));
  }
  return {dump(j), code};
}

// --- dot -------------------------------------------------------------------

Result cmd_dot(const std::string& spec, const std::string& set_text) {
  const GroupSpec parsed = parse_group_spec(spec);
  const Group group = build_group(parsed);
  const ClassData classes = conjugacy_classes(group);
  const ConnectionSet set(group, parse_set(group, classes, set_text));
  return {to_dot(group, set, "Cay(" + to_string(parsed) + ", S)")};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mixed Cayley graph spectra and integrality", "mixcay"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--tol", g.tol, "Integer snapping tolerance")->capture_default_str();
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", g.out_path, "Write output to this file instead of stdout");

  std::string group_spec, set_text, groups, table, mode = "all";
  std::optional<std::size_t> all_upto;
  std::size_t bound = kDefaultEnumerationBound;
  bool records = false;
  SpectrumArgs spectrum_args;

  auto* group_cmd = app.add_subcommand("group", "Conjugacy classes of a group");
  group_cmd->add_option("--group", group_spec, "Group spec, e.g. alternating:4")->required();

  auto* chartable_cmd = app.add_subcommand("chartable", "Character table (CSV by default)");
  chartable_cmd->add_option("--group", group_spec)->required();

  auto* atoms_cmd = app.add_subcommand("atoms", "Atoms [x] and the Gamma(3) classes <<x>>");
  atoms_cmd->add_option("--group", group_spec)->required();

  auto* spectrum_cmd = app.add_subcommand("spectrum", "HS- or adjacency spectrum of Cay(G, S)");
  spectrum_cmd->add_option("--group", spectrum_args.group)->required();
  spectrum_cmd->add_option("--set", spectrum_args.set, "Tokens Cl[label], #index or label, separated by ';'");
  spectrum_cmd->add_option("--matrix", spectrum_args.matrix)->check(CLI::IsMember({"H", "A"}))->capture_default_str();
  spectrum_cmd->add_option("--method", spectrum_args.method)
      ->check(CLI::IsMember({"chars", "direct", "both"}))
      ->capture_default_str();
  spectrum_cmd->add_option("--character-table", spectrum_args.table, "Use this CSV table instead of computing one");

  auto* check_cmd = app.add_subcommand("check", "HS- and Eisenstein integrality report");
  check_cmd->add_option("--group", group_spec)->required();
  check_cmd->add_option("--set", set_text);
  check_cmd->add_option("--character-table", table);

  auto* classify_cmd = app.add_subcommand("classify", "Classify every normal connection set");
  classify_cmd->add_option("--groups", groups, "Group specs separated by ';'");
  classify_cmd->add_option("--all-upto", all_upto, "Every catalog group of order at most N");
  classify_cmd->add_option("--mode", mode)
      ->check(CLI::IsMember({"all", "mixed-only", "oriented-only", "symmetric-only"}))
      ->capture_default_str();
  classify_cmd->add_option("--bound", bound, "Maximum number of sets per group")->capture_default_str();

  auto* conjecture_cmd = app.add_subcommand("conjecture", "Check that T_y(j)/3 is an integer");
  conjecture_cmd->add_option("--groups", groups);
  conjecture_cmd->add_option("--all-upto", all_upto);
  conjecture_cmd->add_option("--character-table", table, "Scan with this CSV table (single group only)");
  conjecture_cmd->add_flag("--records", records, "Include every scanned (y, j) pair");

  auto* dot_cmd = app.add_subcommand("dot", "Graphviz rendering of Cay(G, S)");
  dot_cmd->add_option("--group", group_spec)->required();
  dot_cmd->add_option("--set", set_text);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsageError;
  }

  Result result;
  try {
    if (group_cmd->parsed()) {
      result = cmd_group(g, group_spec);
    } else if (chartable_cmd->parsed()) {
      result = cmd_chartable(g, group_spec);
    } else if (atoms_cmd->parsed()) {
      result = cmd_atoms(g, group_spec);
    } else if (spectrum_cmd->parsed()) {
      result = cmd_spectrum(g, spectrum_args);
    } else if (check_cmd->parsed()) {
      result = cmd_check(g, group_spec, set_text, table);
    } else if (classify_cmd->parsed()) {
      result = cmd_classify(g, groups, all_upto, mode, bound, err);
    } else if (conjecture_cmd->parsed()) {
      result = cmd_conjecture(g, groups, all_upto, table, records);
    } else {
      result = cmd_dot(group_spec, set_text);
    }
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return e.code() == ErrorCode::InvariantViolation ? kViolation : kUsageError;
  }

  if (g.out_path.empty()) {
    out << result.text;
  } else {
    std::ofstream file(g.out_path);
    if (!file) {
      err << "cannot write " << g.out_path << '\n';
      return kUsageError;
    }
    file << result.text;
  }
  return result.code;
}

}  // namespace mixcay::cli
