// gencol: command-line front end for the generalized-colorability library.
//
// Exit status: 0 decided, 1 input error, 2 inapplicable, 3 disagreement
// between Algorithm A and the brute-force oracle.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gencol/gencol.hpp"

namespace {

using namespace gencol;

constexpr int kExitDecided = 0;
constexpr int kExitInput = 1;
constexpr int kExitInapplicable = 2;
constexpr int kExitDisagreement = 3;

struct Disagreement : Error {
  using Error::Error;
};

std::string read_source(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_sink(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << text;
}

GraphFormat format_or_throw(const std::string& name) {
  auto f = format_from_name(name);
  if (!f) throw InvalidArgument("unknown graph format \"" + name + "\" (graph6, edge_list, dimacs)");
  return *f;
}

// "auto" sniffs the content.
Graph load_graph(const std::string& path, const std::string& format) {
  auto text = read_source(path);
  auto f = format == "auto" ? detect_format(text) : format_or_throw(format);
  try {
    return parse_graph(f, text);
  } catch (const ParseError& e) {
    throw ParseError((path == "-" ? std::string("<stdin>") : path) + ": " + e.what(), e.position());
  }
}

// "auto" picks by extension, falling back to graph6.
GraphFormat output_format(const std::string& path, const std::string& format) {
  if (format != "auto") return format_or_throw(format);
  auto dot = path.rfind('.');
  if (dot != std::string::npos) {
    auto ext = path.substr(dot + 1);
    if (ext == "el" || ext == "edges" || ext == "txt") return GraphFormat::edge_list;
    if (ext == "col" || ext == "dimacs") return GraphFormat::dimacs;
  }
  return GraphFormat::graph6;
}

void print_set(std::ostream& os, const VertexSet& s) { os << s.to_string(); }

void print_human(std::ostream& os, const Decision& d, const Graph& g, const PropertySpec& p, const PropertySpec& q) {
  os << "P = " << p.to_string() << ", Q = " << q.to_string() << ", order " << g.order() << "\n";
  os << "member: " << (d.member ? "true" : "false") << "\n";
  if (d.certificate) {
    os << "P part: ";
    print_set(os, d.certificate->part_a);
    os << "\nQ part: ";
    print_set(os, d.certificate->part_rest);
    os << "\n";
  }
  os << "method: " << (d.method == Method::algorithm_a ? "algorithm_a" : "oracle");
  if (d.tau) os << ", tau " << *d.tau;
  if (d.clique_bound) os << ", n " << d.clique_bound->to_string();
  if (d.co_clique_bound) os << ", m " << d.co_clique_bound->to_string();
  os << "\n";
  const auto& t = d.trace;
  if (d.method == Method::algorithm_a)
    os << "trace: step2 iterations " << t.step2_iterations << ", step2 candidates " << t.step2_candidates_examined
       << " (peak " << t.step2_peak_candidates << "), step3 candidates " << t.step3_candidates_examined
       << ", membership checks " << t.membership_checks << "\n";
  else
    os << "trace: subsets examined " << t.oracle_subsets_examined << ", membership checks " << t.membership_checks
       << "\n";
}

std::size_t env_workers() {
  if (const char* w = std::getenv("GENCOL_WORKERS")) {
    try {
      auto n = std::stoul(w);
      if (n >= 1) return n;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring GENCOL_WORKERS=" << w << "\n";
  }
  return 1;
}

void warn_if_sub_tau(const PropertySpec& p, const PropertySpec& q, std::optional<std::size_t> override_tau) {
  if (!override_tau) return;
  auto n = clique_bound(p);
  auto m = co_clique_bound(q);
  if (!n.bounded() || !m.bounded()) return;
  auto computed = tau(*m.n, *n.n);
  if (*override_tau < computed.tau)
    std::cerr << "warning: --tau " << *override_tau << " is below the computed tau " << computed.tau
              << "; answers may be wrong\n";
}

// ---------------------------------------------------------------------------

struct RecognizeArgs {
  std::string p = "edgeless";
  std::string q = "complete";
  std::string mode = "algorithm_a";
  std::optional<std::size_t> tau;
  std::string format = "auto";
  std::string output = "human";
  std::string input = "-";
};

int cmd_recognize(const RecognizeArgs& a) {
  auto p = parse_spec(a.p);
  auto q = parse_spec(a.q);
  auto g = load_graph(a.input, a.format);
  warn_if_sub_tau(p, q, a.tau);

  RecognizeOptions options;
  options.tau_override = a.tau;
  const bool json = a.output == "json";

  if (a.mode == "oracle") {
    auto d = brute_force(g, p, q, {env_workers()});
    d.clique_bound = clique_bound(p);
    d.co_clique_bound = co_clique_bound(q);
    if (json)
      std::cout << decision_json(d, g, p, q).dump(2) << "\n";
    else
      print_human(std::cout, d, g, p, q);
    return kExitDecided;
  }

  auto d = recognize(g, p, q, options);
  if (a.mode == "algorithm_a") {
    if (json)
      std::cout << decision_json(d, g, p, q).dump(2) << "\n";
    else
      print_human(std::cout, d, g, p, q);
    return kExitDecided;
  }

  auto o = brute_force(g, p, q, {env_workers()});
  const bool agree = o.member == d.member;
  if (json) {
    auto j = decision_json(d, g, p, q);
    j["oracle_member"] = o.member;
    j["agreement"] = agree;
    std::cout << j.dump(2) << "\n";
  } else {
    print_human(std::cout, d, g, p, q);
    std::cout << "oracle member: " << (o.member ? "true" : "false") << "\nagreement: " << (agree ? "true" : "false")
              << "\n";
  }
  if (!agree) throw Disagreement("Algorithm A and the oracle disagree");
  return kExitDecided;
}

struct SweepArgs {
  std::vector<std::string> pairs;
  std::size_t p_max = 6;
  std::size_t random_count = 0;
  std::size_t random_min = 10;
  std::size_t random_max = 14;
  double probability = 0.5;
  std::uint64_t seed = 1;
  std::optional<std::size_t> tau;
};

int cmd_sweep(const SweepArgs& a) {
  if (a.p_max > kMaxEnumerationOrder)
    throw LimitError("--p-max is limited to " + std::to_string(kMaxEnumerationOrder));
  if (a.random_min > a.random_max) throw InvalidArgument("--random-min exceeds --random-max");
  if (a.random_count > 0 && a.random_max > kBruteForceLimit)
    throw LimitError("random orders are limited to " + std::to_string(kBruteForceLimit) + " by the oracle");

  SweepConfig config;
  config.p_max = a.p_max;
  config.random_count = a.random_count;
  config.random_min_order = a.random_min;
  config.random_max_order = a.random_max;
  config.probability = a.probability;
  config.seed = a.seed;
  config.workers = env_workers();
  config.tau_override = a.tau;

  std::vector<std::string> pairs = a.pairs;
  if (pairs.empty()) pairs.push_back("edgeless|complete");
  Json reports = Json::array();
  bool ok = true;
  for (const auto& pair : pairs) {
    auto bar = pair.find('|');
    if (bar == std::string::npos) throw InvalidArgument("--pair expects \"P|Q\", got \"" + pair + "\"");
    auto p = parse_spec(pair.substr(0, bar));
    auto q = parse_spec(pair.substr(bar + 1));
    warn_if_sub_tau(p, q, a.tau);
    auto report = run_sweep(p, q, config);
    ok = ok && report.ok();
    reports.push_back(to_json(report));
    std::cerr << report.p_spec << " | " << report.q_spec << ": " << report.agreements << "/" << report.graphs
              << " agree, " << report.bound_violations << " bound violations, " << report.seconds << "s\n";
  }
  std::cout << reports.dump(2) << "\n";
  if (!ok) throw Disagreement("sweep found disagreements or bound violations");
  return kExitDecided;
}

int cmd_tau(std::size_t m, std::size_t n, const std::string& output) {
  auto b = tau(m, n);
  if (output == "json")
    std::cout << tau_json(b).dump() << "\n";
  else
    std::cout << "tau(" << m << "," << n << ") = " << b.tau << (b.exact ? " (exact)" : " (upper bound)") << "\n";
  return kExitDecided;
}

int cmd_check(const std::string& spec_text, const std::string& input, const std::string& format,
              const std::string& output) {
  auto spec = parse_spec(spec_text);
  auto g = load_graph(input, format);
  bool member = check(spec, g);
  if (output == "json")
    std::cout << Json{{"spec", spec.to_string()}, {"order", g.order()}, {"member", member}}.dump() << "\n";
  else
    std::cout << (member ? "true" : "false") << "\n";
  return kExitDecided;
}

int cmd_gadget(const std::string& which, const std::string& in, const std::string& out, const std::string& format,
               const std::string& to) {
  auto g = load_graph(in, format);
  Graph result;
  if (which == "t6")
    result = t6_gadget(g);
  else if (which == "t7")
    result = t7_gadget(g);
  else
    throw InvalidArgument("gadget must be t6 or t7, got \"" + which + "\"");
  write_sink(out, emit_graph(output_format(out, to), result));
  return kExitDecided;
}

int cmd_gh(const std::string& g_path, const std::string& witness_path, const std::string& out,
           const std::string& format, const std::string& to) {
  auto g = load_graph(g_path, format);
  Json j;
  try {
    j = Json::parse(read_source(witness_path));
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(witness_path + ": " + e.what());
  }
  auto w = witness_from_json(j);
  write_sink(out, emit_graph(output_format(out, to), gh_combinator(g, w)));
  return kExitDecided;
}

int cmd_verify_unique(const std::string& g_path, const std::vector<std::string>& spec_texts, const std::string& format,
                      const std::string& output, const std::string& emit, std::size_t additive_count) {
  auto g = load_graph(g_path, format);
  std::vector<PropertySpec> specs;
  for (const auto& s : spec_texts) specs.push_back(parse_spec(s));
  std::vector<ColoringPartition> all;
  bool unique = true;
  std::set<std::vector<std::vector<Vertex>>> classes;
  for_each_partition(g, specs, [&](const ColoringPartition& c) {
    if (all.empty()) all.push_back(c);
    classes.insert(interchange_normal_form(c, specs));
    return classes.size() <= 1;
  });
  unique = classes.size() == 1;

  if (output == "json") {
    Json j{{"strongly_unique", unique}, {"partitionable", !classes.empty()}};
    if (unique) {
      Json parts = Json::array();
      for (const auto& part : all.front().parts) parts.push_back(to_json(part));
      j["parts"] = parts;
    }
    std::cout << j.dump() << "\n";
  } else {
    std::cout << (unique ? "true" : "false") << "\n";
    if (unique) {
      for (std::size_t i = 0; i < specs.size(); ++i)
        std::cout << "  " << specs[i].to_string() << ": " << all.front().parts[i].to_string() << "\n";
    } else if (classes.empty()) {
      std::cout << "  no partition exists\n";
    }
  }
  if (!emit.empty()) {
    if (!unique) throw InvalidArgument("no witness written: the partition is not strongly unique");
    const auto& parts = all.front().parts;
    auto w = make_witness(g, parts, specs, additive_count, parts.front().first());
    write_sink(emit, witness_json(w).dump(2) + "\n");
  }
  return kExitDecided;
}

struct GenArgs {
  std::string family;
  std::size_t order = 0;
  std::size_t second = 0;
  double probability = 0.5;
  std::uint64_t seed = 1;
  std::string out = "-";
  std::string to = "auto";
};

int cmd_gen(const GenArgs& a) {
  Graph g;
  if (a.family == "complete")
    g = complete_graph(a.order);
  else if (a.family == "empty")
    g = empty_graph(a.order);
  else if (a.family == "path")
    g = path_graph(a.order);
  else if (a.family == "cycle")
    g = cycle_graph(a.order);
  else if (a.family == "complete_bipartite")
    g = complete_bipartite_graph(a.order, a.second);
  else if (a.family == "random")
    g = random_graph(a.order, a.probability, a.seed);
  else
    throw InvalidArgument("unknown family \"" + a.family + "\" (complete, empty, path, cycle, complete_bipartite, random)");
  write_sink(a.out, emit_graph(output_format(a.out, a.to), g));
  return kExitDecided;
}

int cmd_convert(const std::string& in, const std::string& out, const std::string& from, const std::string& to) {
  auto g = load_graph(in, from);
  write_sink(out, emit_graph(output_format(out, to), g));
  return kExitDecided;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized graph colorability: recognition, oracles and reductions"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  const std::vector<std::string> format_names = {"auto", "graph6", "g6", "edge_list", "el", "dimacs", "col"};
  const std::vector<std::string> output_names = {"human", "json"};
  std::function<int()> action;

  RecognizeArgs rec;
  auto* recognize_cmd = app.add_subcommand("recognize", "Decide membership in P∘Q");
  recognize_cmd->add_option("--p", rec.p, "Additive property spec")->capture_default_str();
  recognize_cmd->add_option("--q", rec.q, "Co-additive property spec")->capture_default_str();
  recognize_cmd->add_option("--mode", rec.mode, "algorithm_a, oracle or both")
      ->check(CLI::IsMember({"algorithm_a", "oracle", "both"}))
      ->capture_default_str();
  recognize_cmd->add_option("--tau", rec.tau, "Override the Ramsey constant");
  recognize_cmd->add_option("--format", rec.format, "Input format")->check(CLI::IsMember(format_names));
  recognize_cmd->add_option("--output", rec.output, "human or json")->check(CLI::IsMember(output_names));
  recognize_cmd->add_flag_callback("--json", [&] { rec.output = "json"; }, "Same as --output json");
  recognize_cmd->add_option("input", rec.input, "Graph file, or - for standard input");
  recognize_cmd->callback([&] { action = [&] { return cmd_recognize(rec); }; });

  SweepArgs sw;
  auto* sweep_cmd = app.add_subcommand("sweep", "Compare Algorithm A against the oracle over many graphs");
  sweep_cmd->add_option("--pair", sw.pairs, "\"P|Q\" spec pair (repeatable)");
  sweep_cmd->add_option("--p-max", sw.p_max, "Exhaustive over all labeled graphs up to this order")
      ->capture_default_str();
  sweep_cmd->add_option("--random-count", sw.random_count, "Random graphs in addition")->capture_default_str();
  sweep_cmd->add_option("--random-min", sw.random_min, "Smallest random order")->capture_default_str();
  sweep_cmd->add_option("--random-max", sw.random_max, "Largest random order")->capture_default_str();
  sweep_cmd->add_option("--probability", sw.probability, "Edge probability")->check(CLI::Range(0.0, 1.0));
  sweep_cmd->add_option("--seed", sw.seed, "Random battery seed")->capture_default_str();
  sweep_cmd->add_option("--tau", sw.tau, "Override the Ramsey constant");
  sweep_cmd->callback([&] { action = [&] { return cmd_sweep(sw); }; });

  std::size_t tau_m = 0, tau_n = 0;
  std::string tau_output = "human";
  auto* tau_cmd = app.add_subcommand("tau", "Ramsey constant tau(m, n) = R(m, n) - 1");
  tau_cmd->add_option("m", tau_m, "Independent-set order")->required();
  tau_cmd->add_option("n", tau_n, "Clique order")->required();
  tau_cmd->add_option("--output", tau_output, "human or json")->check(CLI::IsMember(output_names));
  tau_cmd->add_flag_callback("--json", [&] { tau_output = "json"; }, "Same as --output json");
  tau_cmd->callback([&] { action = [&] { return cmd_tau(tau_m, tau_n, tau_output); }; });

  std::string check_spec, check_input = "-", check_format = "auto", check_output = "human";
  auto* check_cmd = app.add_subcommand("check", "Test membership of a graph in one property");
  check_cmd->add_option("spec", check_spec, "Property spec")->required();
  check_cmd->add_option("input", check_input, "Graph file, or - for standard input");
  check_cmd->add_option("--format", check_format, "Input format")->check(CLI::IsMember(format_names));
  check_cmd->add_option("--output", check_output, "human or json")->check(CLI::IsMember(output_names));
  check_cmd->add_flag_callback("--json", [&] { check_output = "json"; }, "Same as --output json");
  check_cmd->callback([&] { action = [&] { return cmd_check(check_spec, check_input, check_format, check_output); }; });

  std::string gadget_kind, gadget_in, gadget_out, gadget_format = "auto", gadget_to = "auto";
  auto* gadget_cmd = app.add_subcommand("gadget", "Build the triangle (t6) or universal-vertex (t7) gadget");
  gadget_cmd->add_option("kind", gadget_kind, "t6 or t7")->required()->check(CLI::IsMember({"t6", "t7"}));
  gadget_cmd->add_option("in", gadget_in, "Input graph, or -")->required();
  gadget_cmd->add_option("out", gadget_out, "Output graph, or -")->required();
  gadget_cmd->add_option("--format", gadget_format, "Input format")->check(CLI::IsMember(format_names));
  gadget_cmd->add_option("--to", gadget_to, "Output format (default: by extension)")->check(CLI::IsMember(format_names));
  gadget_cmd->callback(
      [&] { action = [&] { return cmd_gadget(gadget_kind, gadget_in, gadget_out, gadget_format, gadget_to); }; });

  std::string gh_g, gh_witness, gh_out, gh_format = "auto", gh_to = "auto";
  auto* gh_cmd = app.add_subcommand("gh", "Combine a graph with a uniquely partitionable witness host");
  gh_cmd->add_option("g", gh_g, "Input graph, or -")->required();
  gh_cmd->add_option("witness", gh_witness, "Witness JSON file")->required();
  gh_cmd->add_option("out", gh_out, "Output graph, or -")->required();
  gh_cmd->add_option("--format", gh_format, "Input format")->check(CLI::IsMember(format_names));
  gh_cmd->add_option("--to", gh_to, "Output format (default: by extension)")->check(CLI::IsMember(format_names));
  gh_cmd->callback([&] { action = [&] { return cmd_gh(gh_g, gh_witness, gh_out, gh_format, gh_to); }; });

  std::string vu_g, vu_format = "auto", vu_output = "human", vu_emit;
  std::vector<std::string> vu_specs;
  std::size_t vu_additive = 1;
  auto* vu_cmd = app.add_subcommand("verify-unique", "Test whether a graph's (specs)-partition is strongly unique");
  vu_cmd->add_option("g", vu_g, "Input graph, or -")->required();
  vu_cmd->add_option("specs", vu_specs, "One spec per part")->required();
  vu_cmd->add_option("--format", vu_format, "Input format")->check(CLI::IsMember(format_names));
  vu_cmd->add_option("--output", vu_output, "human or json")->check(CLI::IsMember(output_names));
  vu_cmd->add_flag_callback("--json", [&] { vu_output = "json"; }, "Same as --output json");
  vu_cmd->add_option("--emit-witness", vu_emit, "Write a witness file when unique");
  vu_cmd->add_option("--additive-count", vu_additive, "Leading parts on the P side of the witness")
      ->capture_default_str();
  vu_cmd->callback(
      [&] { action = [&] { return cmd_verify_unique(vu_g, vu_specs, vu_format, vu_output, vu_emit, vu_additive); }; });

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph");
  gen_cmd->add_option("family", gen.family, "complete, empty, path, cycle, complete_bipartite or random")->required();
  gen_cmd->add_option("order", gen.order, "Number of vertices (first side for complete_bipartite)")->required();
  gen_cmd->add_option("second", gen.second, "Second side for complete_bipartite");
  gen_cmd->add_option("--probability", gen.probability, "Edge probability for random")->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--seed", gen.seed, "Seed for random");
  gen_cmd->add_option("-o,--out", gen.out, "Output file, or -");
  gen_cmd->add_option("--to", gen.to, "Output format (default: by extension)")->check(CLI::IsMember(format_names));
  gen_cmd->callback([&] { action = [&] { return cmd_gen(gen); }; });

  std::string conv_in, conv_out, conv_from = "auto", conv_to = "auto";
  auto* convert_cmd = app.add_subcommand("convert", "Convert between graph6, edge_list and dimacs");
  convert_cmd->add_option("in", conv_in, "Input graph, or -")->required();
  convert_cmd->add_option("out", conv_out, "Output graph, or -")->required();
  convert_cmd->add_option("--from", conv_from, "Input format")->check(CLI::IsMember(format_names));
  convert_cmd->add_option("--to", conv_to, "Output format (default: by extension)")->check(CLI::IsMember(format_names));
  convert_cmd->callback([&] { action = [&] { return cmd_convert(conv_in, conv_out, conv_from, conv_to); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitDecided : kExitInput;
  }

  try {
    return action();
  } catch (const Disagreement& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDisagreement;
  } catch (const InapplicableError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInapplicable;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
