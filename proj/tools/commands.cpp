#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>

#include <CLI11.hpp>

#include "ncycle/arrangement.hpp"
#include "ncycle/embedding.hpp"
#include "ncycle/embedding_io.hpp"
#include "ncycle/formulas.hpp"
#include "ncycle/render.hpp"
#include "ncycle/search.hpp"

namespace ncycle::cli {

namespace {

bool tsv(const std::string& format) { return format == "tsv"; }

std::size_t checked_n(std::int64_t n) {
  parity_case(n);  // throws InvalidN for n < 3
  return static_cast<std::size_t>(n);
}

struct VerifyRow {
  std::int64_t n = 0;
  Parity parity = Parity::Odd;
  std::int64_t f_formula = 0;
  std::int64_t regions_euler = -1;
  std::int64_t regions_traversal = -1;
  std::size_t splitters = 0;
  std::size_t one_off_splitters = 0;
  bool match = false;
  std::string error;
};

VerifyRow verify_one(std::int64_t n, std::uint64_t seed) {
  VerifyRow row;
  row.n = n;
  row.parity = parity_case(n).parity;
  row.f_formula = f_max(n);
  try {
    const auto emb = construct_optimal(static_cast<std::size_t>(n), seed);
    row.regions_euler = region_count_euler(build_arrangement(emb));
    row.regions_traversal = region_count_traversal(emb);
    const auto splits = splitter_analysis(emb);
    row.splitters = splits.splitters();
    row.one_off_splitters = splits.one_off_splitters();
    const auto un = static_cast<std::size_t>(n);
    const bool splitters_ok = row.parity == Parity::Odd
                                  ? row.splitters == un
                                  : row.splitters == 2 && row.one_off_splitters == un - 2;
    row.match = row.regions_euler == row.f_formula && row.regions_traversal == row.f_formula && splitters_ok;
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

int cmd_construct(std::int64_t n_arg, const std::string& out_path, std::uint64_t seed, const std::string& format,
                  std::ostream& out) {
  const std::size_t n = checked_n(n_arg);
  const auto emb = construct_optimal(n, seed);
  const auto arr = build_arrangement(emb);
  if (!out_path.empty()) write_embedding_file(out_path, emb);
  if (tsv(format)) {
    out << "n\tseed\tV\tE\tF\n"
        << n << '\t' << seed << '\t' << arr.vertex_count << '\t' << arr.edge_count << '\t' << arr.face_count << '\n';
  } else {
    out << "n=" << n << " seed=" << seed << " V=" << arr.vertex_count << " E=" << arr.edge_count
        << " F=" << arr.face_count << '\n';
    if (!out_path.empty()) out << "wrote " << out_path << '\n';
  }
  return kOk;
}

int cmd_count(const std::string& in_path, const std::string& format, std::ostream& out, std::ostream& err) {
  const auto emb = read_embedding_file(in_path);
  const auto arr = build_arrangement(emb);
  const auto traversal = region_count_traversal(emb);
  const auto euler = region_count_euler(arr);
  const auto splits = splitter_analysis(emb);
  const std::size_t other = emb.size() - splits.splitters() - splits.one_off_splitters();
  if (tsv(format)) {
    out << "n\tV\tE\tF_euler\tF_traversal\tsplitters\tone_off_splitters\tother\n"
        << emb.size() << '\t' << arr.vertex_count << '\t' << arr.edge_count << '\t' << euler << '\t' << traversal
        << '\t' << splits.splitters() << '\t' << splits.one_off_splitters() << '\t' << other << '\n';
  } else {
    out << "n=" << emb.size() << " V=" << arr.vertex_count << " E=" << arr.edge_count << " F=" << euler
        << " (euler) F=" << traversal << " (traversal)\n"
        << "splitters=" << splits.splitters() << " one_off_splitters=" << splits.one_off_splitters()
        << " other=" << other << '\n';
  }
  if (euler != traversal) {
    err << "internal error: region counters disagree (euler " << euler << ", traversal " << traversal << ")\n";
    return kVerificationFailed;
  }
  return kOk;
}

int cmd_verify(std::int64_t n_min, std::int64_t n_max, std::uint64_t seed, const std::string& format,
               std::ostream& out, std::ostream& err) {
  if (n_min < 3 || n_max < n_min) {
    err << "verify needs 3 <= n-min <= n-max\n";
    return kBadInput;
  }
  if (tsv(format)) {
    out << "n\tparity\tf_formula\tregions_euler\tregions_traversal\tsplitters\tone_off_splitters\tmatch\n";
  } else {
    out << "seed=" << seed << '\n'
        << std::setw(4) << "n" << std::setw(7) << "parity" << std::setw(8) << "f(n)" << std::setw(8) << "euler"
        << std::setw(11) << "traversal" << std::setw(11) << "splitters" << std::setw(9) << "one-off"
        << std::setw(7) << "match" << '\n';
  }
  std::optional<VerifyRow> first_failure;
  for (std::int64_t n = n_min; n <= n_max; ++n) {
    const VerifyRow row = verify_one(n, seed);
    const char* parity = row.parity == Parity::Odd ? "odd" : "even";
    if (tsv(format)) {
      out << row.n << '\t' << parity << '\t' << row.f_formula << '\t' << row.regions_euler << '\t'
          << row.regions_traversal << '\t' << row.splitters << '\t' << row.one_off_splitters << '\t'
          << (row.match ? "yes" : "no") << '\n';
    } else {
      out << std::setw(4) << row.n << std::setw(7) << parity << std::setw(8) << row.f_formula << std::setw(8)
          << row.regions_euler << std::setw(11) << row.regions_traversal << std::setw(11) << row.splitters
          << std::setw(9) << row.one_off_splitters << std::setw(7) << (row.match ? "yes" : "NO") << '\n';
    }
    if (!row.match && !first_failure) first_failure = row;
  }
  if (first_failure) {
    err << "verification failed first at n=" << first_failure->n;
    if (!first_failure->error.empty()) err << ": " << first_failure->error;
    err << '\n';
    return kVerificationFailed;
  }
  return kOk;
}

int cmd_oracle(std::int64_t n_arg, const std::string& format, std::ostream& out) {
  const std::size_t n = checked_n(n_arg);
  const auto result = oracle_max_regions_convex(n);
  const auto expected = f_max(n_arg);
  const bool pass = result.max_regions == expected;
  std::string witness;
  for (std::size_t v : result.witness.order()) witness += (witness.empty() ? "" : " ") + std::to_string(v);
  if (tsv(format)) {
    out << "n\tmax_regions\tf_max\tevaluated\twitness\tresult\n"
        << n << '\t' << result.max_regions << '\t' << expected << '\t' << result.evaluated_count << '\t' << witness
        << '\t' << (pass ? "PASS" : "FAIL") << '\n';
  } else {
    out << result.max_regions << ' ' << (pass ? "PASS" : "FAIL") << '\n'
        << "n=" << n << " f_max=" << expected << " evaluated=" << result.evaluated_count << " witness=[" << witness
        << "]\n";
  }
  return pass ? kOk : kVerificationFailed;
}

int cmd_search(std::int64_t n_arg, std::int64_t trials, std::uint64_t seed, const std::string& out_path,
               const std::string& format, std::ostream& out) {
  const std::size_t n = checked_n(n_arg);
  if (trials < 1) throw std::invalid_argument("--trials must be at least 1");
  const auto result = random_search(n, static_cast<std::size_t>(trials), seed);
  const auto bound = f_max(n_arg);
  const bool within = result.best_regions <= bound;
  if (!out_path.empty()) write_embedding_file(out_path, result.best);
  if (tsv(format)) {
    out << "n\ttrials\tseed\tevaluated\tbest\tf_max\tresult\n"
        << n << '\t' << trials << '\t' << seed << '\t' << result.evaluated << '\t' << result.best_regions << '\t'
        << bound << '\t' << (within ? "PASS" : "FAIL") << '\n';
  } else {
    out << "n=" << n << " trials=" << trials << " seed=" << seed << " evaluated=" << result.evaluated
        << " best=" << result.best_regions << " f_max=" << bound << ' ' << (within ? "PASS" : "FAIL") << '\n';
    if (!out_path.empty()) out << "wrote " << out_path << '\n';
  }
  return within ? kOk : kVerificationFailed;
}

int cmd_render(const std::string& in_path, const std::string& out_path, const RenderOptions& opts,
               std::ostream& out) {
  const auto svg = to_svg(read_embedding_file(in_path), opts);
  if (out_path.empty()) {
    out << svg;
    return kOk;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw IoError("cannot open " + out_path + " for writing");
  file << svg;
  file.flush();
  if (!file) throw IoError("failed writing " + out_path);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximal-region straight-line embeddings of N-cycle graphs"};
  app.require_subcommand(1);

  std::function<int()> action;
  std::string format = "human";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "tsv"}));
  };

  std::int64_t n = 0;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string in_path;

  auto* construct = app.add_subcommand("construct", "Build the optimal embedding for n and report V, E, F");
  construct->add_option("n,--n", n, "Number of corners")->required();
  construct->add_option("--out", out_path, "Embedding file to write");
  construct->add_option("--seed", seed, "Perturbation seed");
  add_format(construct);
  construct->callback([&] { action = [&] { return cmd_construct(n, out_path, seed, format, out); }; });

  auto* count = app.add_subcommand("count", "Count regions of an embedding file both ways");
  count->add_option("input,--in", in_path, "Embedding file")->required();
  add_format(count);
  count->callback([&] { action = [&] { return cmd_count(in_path, format, out, err); }; });

  std::int64_t n_min = 3;
  std::int64_t n_max = 15;
  auto* verify = app.add_subcommand("verify", "Check constructions against the closed form for a range of n");
  verify->add_option("--n-min", n_min, "Smallest n")->capture_default_str();
  verify->add_option("--n-max", n_max, "Largest n")->capture_default_str();
  verify->add_option("--seed", seed, "Perturbation seed");
  add_format(verify);
  verify->callback([&] { action = [&] { return cmd_verify(n_min, n_max, seed, format, out, err); }; });

  auto* oracle = app.add_subcommand("oracle", "Exhaustive maximum over convex-position cyclic orders");
  oracle->add_option("n,--n", n, "Number of corners (3..11)")->required();
  add_format(oracle);
  oracle->callback([&] { action = [&] { return cmd_oracle(n, format, out); }; });

  std::int64_t trials = 1000;
  auto* search = app.add_subcommand("search", "Random placements probing the upper bound");
  search->add_option("n,--n", n, "Number of corners")->required();
  search->add_option("--trials", trials, "Number of random placements")->capture_default_str();
  search->add_option("--seed", seed, "Random seed");
  search->add_option("--out", out_path, "Write the best embedding found");
  add_format(search);
  search->callback([&] { action = [&] { return cmd_search(n, trials, seed, out_path, format, out); }; });

  RenderOptions ropts;
  bool no_labels = false;
  auto* render = app.add_subcommand("render", "Render an embedding file as SVG");
  render->add_option("input,--in", in_path, "Embedding file")->required();
  render->add_option("--out", out_path, "SVG file (default: stdout)");
  render->add_option("--width", ropts.width, "Width in pixels")->capture_default_str();
  render->add_option("--height", ropts.height, "Height in pixels")->capture_default_str();
  render->add_flag("--no-labels", no_labels, "Omit corner labels");
  render->add_flag("--highlight-splitters", ropts.highlight_splitters, "Stroke splitters distinctly");
  render->add_flag("--shade-regions", ropts.shade_regions, "Even-odd fill of the cycle (illustrative)");
  render->add_option("--stroke", ropts.stroke, "Segment stroke colour")->capture_default_str();
  render->add_option("--splitter-stroke", ropts.splitter_stroke, "Splitter stroke colour")->capture_default_str();
  render->add_option("--fill", ropts.fill, "Region fill colour")->capture_default_str();
  render->callback([&] {
    ropts.label_corners = !no_labels;
    action = [&] { return cmd_render(in_path, out_path, ropts, out); };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    return action();
  } catch (const DegenerateInput& e) {
    err << e.what() << '\n';
    return kDegenerate;
  } catch (const PerturbationFailed& e) {
    err << e.what() << '\n';
    return kDegenerate;
  } catch (const IoError& e) {
    err << e.what() << '\n';
    return kIoFailure;
  } catch (const ParseError& e) {
    err << e.what() << '\n';
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kBadInput;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace ncycle::cli
