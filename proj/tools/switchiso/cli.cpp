#include "switchiso/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "switchiso/classify.hpp"
#include "switchiso/error.hpp"
#include "switchiso/signature.hpp"

namespace switchiso::cli {
namespace {

using nlohmann::ordered_json;

ordered_json spectrum_json(const CycleSpectrum& spectrum) {
  ordered_json out = ordered_json::object();
  for (const auto& [length, count] : spectrum.counts) {
    out[std::to_string(length)] = count;
  }
  return out;
}

std::string spectrum_text(const CycleSpectrum& spectrum) {
  std::ostringstream out;
  out << '(';
  bool first = true;
  for (const auto& [length, count] : spectrum.counts) {
    if (!first) out << ',';
    first = false;
    out << count;
  }
  out << ')';
  return out.str();
}

std::string join(const std::vector<int>& values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

int max_len_for(const RunConfig& config, const Graph& g) {
  return config.max_cycle_len.value_or(default_max_cycle_length(g));
}

void print_json(std::ostream& out, const ordered_json& j) {
  out << j.dump(2) << '\n';
}

int cmd_enumerate(const RunConfig& config, std::ostream& out) {
  const GraphPtr graph = load_graph(config.graph_spec);
  const Classifier classifier(graph);
  const int max_len = max_len_for(config, *graph);
  const auto reports =
      classifier.enumerate_isomorphism_classes(max_len, config.workers);

  if (config.format == Format::kJson) {
    ordered_json arr = ordered_json::array();
    for (const ClassReport& r : reports) {
      arr.push_back({{"canonical", r.canonical.to_string()},
                     {"class_size", r.class_size},
                     {"spectrum", spectrum_json(r.spectrum)},
                     {"frustration", r.frustration},
                     {"min_rep", r.min_rep.to_string()}});
    }
    print_json(out, arr);
    return kExitOk;
  }

  const Graph& g = *graph;
  out << "graph " << config.graph_spec << ": n=" << g.num_vertices()
      << " m=" << g.num_edges() << " c=" << g.num_components()
      << " |Aut|=" << classifier.group().order()
      << " switching classes=" << (std::uint64_t{1} << classifier.basis().coset_dimension())
      << " switching isomorphism classes=" << reports.size() << '\n';
  out << std::left << std::setw(4) << "#" << std::setw(12) << "class_size"
      << std::setw(12) << "frustration" << std::setw(24) << "spectrum"
      << std::setw(32) << "min_rep"
      << "canonical\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const ClassReport& r = reports[i];
    out << std::left << std::setw(4) << i + 1 << std::setw(12) << r.class_size
        << std::setw(12) << r.frustration << std::setw(24)
        << spectrum_text(r.spectrum) << std::setw(32)
        << quoted(r.min_rep.to_string()) << quoted(r.canonical.to_string())
        << '\n';
  }
  if (reports.empty() || reports.front().spectrum.counts.empty()) {
    return kExitOk;
  }
  // Negative cycle counts, one column per class, one row per cycle length.
  out << '\n' << std::right << std::setw(8) << "";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    out << std::setw(5) << ("#" + std::to_string(i + 1));
  }
  out << '\n';
  for (const auto& [length, unused] : reports.front().spectrum.counts) {
    out << std::setw(8) << ("|C" + std::to_string(length) + "-|");
    for (const ClassReport& r : reports) out << std::setw(5) << r.spectrum.at(length);
    out << '\n';
  }
  return kExitOk;
}

int cmd_invariants(const RunConfig& config, std::ostream& out) {
  const GraphPtr graph = load_graph(config.graph_spec);
  const Signature sig = parse_signature(graph, config.signatures.at(0));
  const int max_len = max_len_for(config, *graph);
  const CycleSpectrum spectrum = max_len >= 3
                                     ? negative_cycle_spectrum(sig, max_len)
                                     : CycleSpectrum{};
  const FrustrationResult frustration = frustration_index(sig);
  const Classifier classifier(graph);
  const Signature canonical = classifier.canonical_form(sig);
  const bool balanced = is_balanced(sig, classifier.basis());

  if (config.format == Format::kJson) {
    print_json(out, {{"graph", config.graph_spec},
                     {"negative_edges", sig.to_string()},
                     {"balanced", balanced},
                     {"spectrum", spectrum_json(spectrum)},
                     {"frustration", frustration.size},
                     {"min_rep", frustration.min_rep.to_string()},
                     {"canonical", canonical.to_string()}});
    return kExitOk;
  }
  out << "graph: " << config.graph_spec << '\n'
      << "negative_edges: " << quoted(sig.to_string()) << '\n'
      << "balanced: " << (balanced ? "true" : "false") << '\n'
      << "spectrum:";
  for (const auto& [length, count] : spectrum.counts) {
    out << ' ' << length << ':' << count;
  }
  out << '\n'
      << "frustration: " << frustration.size << '\n'
      << "min_rep: " << quoted(frustration.min_rep.to_string()) << '\n'
      << "canonical: " << quoted(canonical.to_string()) << '\n';
  return kExitOk;
}

int cmd_equivalent(const RunConfig& config, std::ostream& out) {
  const GraphPtr graph = load_graph(config.graph_spec);
  const Signature a = parse_signature(graph, config.signatures.at(0));
  const Signature b = parse_signature(graph, config.signatures.at(1));
  const Classifier classifier(graph);
  const auto witness = classifier.is_switching_isomorphic(a, b);

  if (witness) {
    if (config.format == Format::kJson) {
      print_json(out, {{"equivalent", true},
                       {"perm", witness->perm},
                       {"switch_set", witness->switch_set}});
    } else {
      out << "switching isomorphic\n"
          << "perm: " << join(witness->perm, ' ') << '\n'
          << "switch_set: {" << join(witness->switch_set, ',') << "}\n";
    }
    return kExitOk;
  }
  const int max_len = max_len_for(config, *graph);
  const CycleSpectrum sa =
      max_len >= 3 ? negative_cycle_spectrum(a, max_len) : CycleSpectrum{};
  const CycleSpectrum sb =
      max_len >= 3 ? negative_cycle_spectrum(b, max_len) : CycleSpectrum{};
  if (config.format == Format::kJson) {
    print_json(out, {{"equivalent", false},
                     {"spectra", {spectrum_json(sa), spectrum_json(sb)}}});
  } else {
    out << "not switching isomorphic\n"
        << "spectrum 1: " << spectrum_text(sa) << '\n'
        << "spectrum 2: " << spectrum_text(sb) << '\n';
  }
  return kExitNotEquivalent;
}

int cmd_canonical(const RunConfig& config, std::ostream& out) {
  const GraphPtr graph = load_graph(config.graph_spec);
  const Signature sig = parse_signature(graph, config.signatures.at(0));
  const Signature canonical = Classifier(graph).canonical_form(sig);
  if (config.format == Format::kJson) {
    print_json(out, {{"canonical", canonical.to_string()}});
  } else {
    out << quoted(canonical.to_string()) << '\n';
  }
  return kExitOk;
}

int cmd_frustration(const RunConfig& config, std::ostream& out) {
  const GraphPtr graph = load_graph(config.graph_spec);
  const Signature sig = parse_signature(graph, config.signatures.at(0));
  const FrustrationResult result = frustration_index(sig);
  if (config.format == Format::kJson) {
    print_json(out, {{"frustration", result.size},
                     {"min_rep", result.min_rep.to_string()}});
  } else {
    out << "frustration: " << result.size << '\n'
        << "min_rep: " << quoted(result.min_rep.to_string()) << '\n';
  }
  return kExitOk;
}

int cmd_types(const RunConfig& config, std::ostream& out) {
  const GraphPtr graph = load_graph(config.graph_spec);
  const Classifier classifier(graph);
  const int max_deg = config.max_deg.value_or(graph->num_vertices());
  std::vector<std::pair<int, std::int64_t>> counts;
  if (config.size) {
    counts.emplace_back(*config.size,
                        classifier.automorphic_type_count(*config.size, max_deg));
  } else {
    for (int k = 0; k <= graph->num_edges(); ++k) {
      counts.emplace_back(k, classifier.automorphic_type_count(k, max_deg));
    }
  }
  std::int64_t total = 0;
  for (const auto& [k, c] : counts) total += c;

  if (config.format == Format::kJson) {
    ordered_json by_size = ordered_json::object();
    for (const auto& [k, c] : counts) by_size[std::to_string(k)] = c;
    print_json(out, {{"max_deg", max_deg}, {"counts", by_size}, {"total", total}});
  } else {
    for (const auto& [k, c] : counts) out << "size " << k << ": " << c << '\n';
    if (!config.size) out << "total: " << total << '\n';
  }
  return kExitOk;
}

int cmd_reproduce(const RunConfig& config, std::ostream& out) {
  const auto items = reproduce_items(config.corrupt_golden, config.workers);
  const bool all_pass = std::all_of(items.begin(), items.end(),
                                    [](const auto& i) { return i.pass; });
  if (config.format == Format::kJson) {
    ordered_json arr = ordered_json::array();
    for (const ReproduceItem& i : items) {
      arr.push_back({{"item", i.item},
                     {"expected", i.expected},
                     {"got", i.got},
                     {"pass", i.pass}});
    }
    print_json(out, arr);
  } else {
    for (const ReproduceItem& i : items) {
      out << (i.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(28)
          << i.item << " expected " << i.expected << ", got " << i.got << '\n';
    }
    if (all_pass) {
      out << "all " << items.size() << " items pass\n";
    } else {
      out << "failing:";
      const char* sep = " ";
      for (const ReproduceItem& i : items) {
        if (i.pass) continue;
        out << sep << i.item;
        sep = ", ";
      }
      out << '\n';
    }
  }
  return all_pass ? kExitOk : kExitReproduceFailed;
}

std::size_t required_signatures(std::string_view command) {
  if (command == "equivalent") return 2;
  if (command == "invariants" || command == "canonical" ||
      command == "frustration") {
    return 1;
  }
  return 0;
}

}  // namespace

GraphPtr load_graph(std::string_view spec) {
  if (!spec.empty() && spec.front() == '@') {
    return std::make_shared<const Graph>(
        read_graph_file(std::string(spec.substr(1))));
  }
  return std::make_shared<const Graph>(builtin_graph_from_spec(spec));
}

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const std::size_t needed = required_signatures(config.command);
  if (config.signatures.size() != needed) {
    err << "error: " << config.command << " takes " << needed
        << " signature(s), got " << config.signatures.size() << '\n';
    return kExitParse;
  }
  if (config.command != "reproduce" && config.graph_spec.empty()) {
    err << "error: " << config.command << " needs --graph\n";
    return kExitParse;
  }
  try {
    if (config.command == "enumerate") return cmd_enumerate(config, out);
    if (config.command == "invariants") return cmd_invariants(config, out);
    if (config.command == "equivalent") return cmd_equivalent(config, out);
    if (config.command == "canonical") return cmd_canonical(config, out);
    if (config.command == "frustration") return cmd_frustration(config, out);
    if (config.command == "types") return cmd_types(config, out);
    if (config.command == "reproduce") return cmd_reproduce(config, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::kTooLarge ? kExitGuard : kExitParse;
  }
  err << "error: unknown command '" << config.command << "'\n";
  return kExitParse;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Classify signed graphs up to switching isomorphism", "switchiso"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "text";

  const auto add_common = [&](CLI::App* sub, bool needs_graph) {
    auto* graph = sub->add_option(
        "--graph", config.graph_spec,
        "builtin graph (complete:N, cycle:N, path:N, petersen, heawood) or "
        "@file");
    if (needs_graph) graph->required();
    sub->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--workers", config.workers, "parallel workers")
        ->check(CLI::PositiveNumber);
  };
  const auto add_sig = [&](CLI::App* sub) {
    sub->add_option("--sig", config.signatures,
                    "signature as comma-separated u-v pairs")
        ->expected(1)
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  };
  const auto add_cycle_len = [&](CLI::App* sub) {
    sub->add_option("--max-cycle-len", config.max_cycle_len,
                    "longest cycle counted in spectra (default min(n,6))")
        ->check(CLI::Range(3, 1 << 20));
  };

  auto* enumerate = app.add_subcommand(
      "enumerate", "list switching-isomorphism classes of a graph");
  add_common(enumerate, true);
  add_cycle_len(enumerate);

  auto* invariants =
      app.add_subcommand("invariants", "balance, spectrum, frustration");
  add_common(invariants, true);
  add_sig(invariants);
  add_cycle_len(invariants);

  auto* equivalent = app.add_subcommand(
      "equivalent", "decide switching isomorphism of two signatures");
  add_common(equivalent, true);
  add_sig(equivalent);
  add_cycle_len(equivalent);

  auto* canonical = app.add_subcommand("canonical", "canonical key");
  add_common(canonical, true);
  add_sig(canonical);

  auto* frustration =
      app.add_subcommand("frustration", "frustration index and minimizer");
  add_common(frustration, true);
  add_sig(frustration);

  auto* types = app.add_subcommand(
      "types", "count automorphic types of edge subsets");
  add_common(types, true);
  types->add_option("--size", config.size, "number of negative edges");
  types->add_option("--max-deg", config.max_deg,
                    "maximum negative degree (default n)");

  auto* reproduce = app.add_subcommand(
      "reproduce", "check published K3..K6 and Petersen results");
  add_common(reproduce, false);
  reproduce->add_flag("--corrupt-golden", config.corrupt_golden,
                      "perturb one golden value (harness self-test)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  }
  config.command = app.get_subcommands().front()->get_name();
  config.format = format == "json" ? Format::kJson : Format::kText;
  return execute(config, out, err);
}

}  // namespace switchiso::cli
