#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "satorder/satorder.hpp"

namespace {

using namespace satorder;

constexpr int exit_yes = 0;
constexpr int exit_no = 1;
constexpr int exit_error = 2;

std::string format_set(const std::vector<ElementId>& elements, const io::PosetFile& file) {
  std::string out = "{";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i) out += ", ";
    out += file.name(elements[i]);
  }
  return out + "}";
}

void print_bouquet(std::ostream& out, const char* label, const Bouquet& b, const io::PosetFile& file) {
  out << label << ": " << format_set(b.members, file) << " max " << file.name(b.max) << "\n";
}

int run_check(const std::string& path, const std::string& method) {
  const auto file = io::load_poset(path);
  SaturationVerdict verdict;
  if (method == "fast") verdict = is_saturated_fast(file.poset);
  else if (method == "exhaustive") verdict = is_saturated_exhaustive(file.poset);
  else verdict = is_saturated_oracle(file.poset);
  std::cout << (verdict.saturated ? "saturated" : "not saturated") << "\n";
  return verdict.saturated ? exit_yes : exit_no;
}

int run_witness(const std::string& path) {
  const auto file = io::load_poset(path);
  const auto& poset = file.poset;
  const auto verdict = is_saturated_fast(poset);
  if (const auto* w = verdict.bouquets()) {
    std::cout << "not saturated\n";
    print_bouquet(std::cout, "B0", w->b0, file);
    print_bouquet(std::cout, "B1", w->b1, file);
    const auto rep = merging_representation(poset, w->b0, w->b1);
    std::cout << "merging representation, q* = " << merged_point(poset) << "\n";
    io::write_representation(std::cout, rep);
    std::cout << "alpha:";
    for (auto v : alpha_of(poset, rep).values) std::cout << ' ' << v;
    std::cout << "\n";
    return exit_no;
  }
  std::cout << "saturated; no witness\n";
  std::cout << "certificate: every canonical bouquet pair is skewly topped\n";
  for (ElementId p0 = 0; p0 < poset.size(); ++p0)
    for (ElementId p1 = p0 + 1; p1 < poset.size(); ++p1)
      if (auto pair = canonical_bouquets(poset, p0, p1)) {
        const auto t = skewly_topping(poset, pair->first, pair->second);
        std::cout << "  " << format_set(pair->first.members, file) << " | "
                  << format_set(pair->second.members, file) << " topped by "
                  << file.name(t->m) << "\n";
      }
  if (is_interval_order(poset)) {
    std::cout << "interval representation:\n";
    const auto f = interval_representation(poset);
    for (ElementId p = 0; p < poset.size(); ++p)
      std::cout << "  " << file.name(p) << ": (" << f.intervals[p].left << ", "
                << f.intervals[p].right << ")\n";
  } else {
    const auto w = *find_two_two(poset);
    std::cout << "not an interval order: 2+2 on " << file.name(w.p0) << " < " << file.name(w.p1)
              << ", " << file.name(w.p2) << " < " << file.name(w.p3) << "\n";
  }
  return exit_yes;
}

struct GenerateArgs {
  std::string kind;
  std::size_t n = 3;
  std::size_t k = 1;
  double density = 0.3;
  std::uint64_t seed = 0;
  std::string output;
};

int run_generate(const GenerateArgs& args) {
  io::PosetFile file;
  if (args.kind == "chain") file.poset = gen::chain(args.n);
  else if (args.kind == "antichain") file.poset = gen::antichain(args.n);
  else if (args.kind == "two-plus-two") file.poset = gen::two_plus_two();
  else if (args.kind == "n-poset") file.poset = gen::n_poset();
  else if (args.kind == "topped-two-two") file.poset = gen::topped_two_two();
  else if (args.kind == "figure1") {
    file.poset = gen::figure1_truncation(args.k);
    file.names = gen::figure1_names(args.k);
  } else file.poset = gen::random(args.n, args.density, args.seed);
  if (args.output.empty() || args.output == "-") std::cout << io::format_poset(file);
  else io::save_poset(args.output, file);
  return exit_yes;
}

int run_reps(const std::string& path) {
  const auto file = io::load_poset(path);
  const auto maps = enumerate_parsimonious(file.poset);
  std::cout << maps.size() << " canonical parsimonious alpha maps\n";
  bool all_injective = true;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    std::cout << i << ":";
    for (auto v : maps[i].values) std::cout << ' ' << v;
    const bool injective = maps[i].injective();
    all_injective = all_injective && injective;
    std::cout << (injective ? "" : "  non-injective") << "\n";
  }
  return all_injective ? exit_yes : exit_no;
}

int run_verify(const verify::CampaignConfig& config, const std::string& json_path) {
  const auto report = verify::campaign(config);
  std::cout << verify::to_text(report);
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw error(errc::parse_error, "cannot write " + json_path);
    out << verify::to_json(report).dump(2) << "\n";
  }
  return report.passed() ? exit_yes : exit_no;
}

int run_export_dot(const std::string& path, const std::string& output) {
  const auto file = io::load_poset(path);
  if (output.empty() || output == "-") {
    io::write_dot(std::cout, file);
  } else {
    std::ofstream out(output);
    if (!out) throw error(errc::parse_error, "cannot write " + output);
    io::write_dot(out, file);
  }
  return exit_yes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Saturation and interval-order analysis of finite posets"};
  app.require_subcommand(1);

  std::string path;
  std::string method = "fast";
  auto* check = app.add_subcommand("check", "Decide saturation (exit 0 saturated, 1 not)");
  check->add_option("file", path, "Poset file")->required();
  check->add_option("--method", method, "Checker to use")
      ->check(CLI::IsMember({"fast", "exhaustive", "oracle"}));

  auto* witness = app.add_subcommand(
      "witness", "Print the untopped bouquet pair and q* representation, or a saturation certificate");
  witness->add_option("file", path, "Poset file")->required();

  GenerateArgs gen_args;
  auto* generate = app.add_subcommand(
      "generate",
      "Write a named poset: chain, antichain (--n); two-plus-two, n-poset, topped-two-two; "
      "figure1 (--k; elements l_0..l_{k-1}, l, r_0..r_{k-1}, r, t_0..t_{k-1}); "
      "random (--n --density --seed)");
  generate->add_option("kind", gen_args.kind, "Poset family")
      ->required()
      ->check(CLI::IsMember(
          {"chain", "antichain", "two-plus-two", "n-poset", "topped-two-two", "figure1", "random"}));
  generate->add_option("--n", gen_args.n, "Element count");
  generate->add_option("--k", gen_args.k, "Figure 1 truncation index")->check(CLI::PositiveNumber);
  generate->add_option("--density", gen_args.density, "Pair probability")->check(CLI::Range(0.0, 1.0));
  generate->add_option("--seed", gen_args.seed, "Random seed");
  generate->add_option("-o,--output", gen_args.output, "Output file (default stdout)");

  auto* reps = app.add_subcommand("reps", "List canonical parsimonious alpha maps");
  reps->add_option("file", path, "Poset file")->required();

  verify::CampaignConfig config;
  std::string json_path;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-validate all checkers on a poset corpus");
  verify_cmd->add_option("--n-max", config.n_max, "Largest poset size")->required();
  verify_cmd->add_option("--n-min", config.n_min, "Smallest poset size");
  verify_cmd->add_option("--exhaustive-limit", config.exhaustive_limit,
                         "Enumerate all posets up to this size");
  verify_cmd->add_option("--samples", config.samples_per_n, "Random posets per size above the limit");
  verify_cmd->add_option("--seed", config.seed, "Campaign seed");
  verify_cmd->add_option("--json", json_path, "Also write the report as JSON");

  std::string dot_output;
  auto* dot = app.add_subcommand("export-dot", "Write the Hasse diagram as DOT");
  dot->add_option("file", path, "Poset file")->required();
  dot->add_option("-o,--output", dot_output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_error;
  }

  try {
    if (*check) return run_check(path, method);
    if (*witness) return run_witness(path);
    if (*generate) return run_generate(gen_args);
    if (*reps) return run_reps(path);
    if (*verify_cmd) {
      if (config.exhaustive_limit > config.n_max) config.exhaustive_limit = config.n_max;
      return run_verify(config, json_path);
    }
    if (*dot) return run_export_dot(path, dot_output);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_error;
  }
  return exit_error;
}
