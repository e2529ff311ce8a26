// epgcolor: 4-clique coloring of single-bend path representations.
//
// Exit codes: 0 success (or valid coloring), 1 invalid coloring, 2 input error.

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "epg/claw.hpp"
#include "epg/generator.hpp"
#include "epg/graph.hpp"
#include "epg/io.hpp"
#include "epg/recolor.hpp"
#include "epg/svg.hpp"
#include "epg/verify.hpp"

namespace {

constexpr int kInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t parse_seed(const std::string& text) {
  try {
    std::size_t used = 0;
    const bool hex = text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X');
    const std::uint64_t v = std::stoull(text, &used, hex ? 16 : 10);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw InputError("--seed: \"" + text + "\" is not a decimal or 0x-hex integer");
  }
}

std::size_t parse_size(std::string text) {
  std::size_t mult = 1;
  if (!text.empty() && (text.back() == 'k' || text.back() == 'K')) {
    mult = 1000;
    text.pop_back();
  }
  try {
    std::size_t used = 0;
    const std::size_t v = std::stoull(text, &used, 10);
    if (used != text.size()) throw std::invalid_argument(text);
    return v * mult;
  } catch (const std::exception&) {
    throw InputError("--sizes: \"" + text + "\" is not a size");
  }
}

void emit(const std::string& out_file, const std::string& content) {
  if (out_file.empty()) {
    std::cout << content;
  } else {
    epg::write_file(out_file, content);
  }
}

std::vector<int> colors_for(const epg::EpgRepresentation& repr, const std::map<epg::PathId, int>& by_id) {
  std::vector<int> out;
  for (const epg::EpgPath& p : repr.paths) {
    auto it = by_id.find(p.id());
    out.push_back(it == by_id.end() ? 0 : it->second);
  }
  return out;
}

epg::Preset parse_preset(const std::string& name) {
  if (name == "uniform") return epg::Preset::uniform;
  if (name == "clustered") return epg::Preset::clustered;
  throw InputError("--preset must be uniform or clustered");
}

int cmd_cliques(const std::string& file, bool claws) {
  const auto repr = epg::load_representation(file);
  const auto graph = epg::derive_graph(repr);
  for (const auto& c : epg::enumerate_cliques_repr(repr, graph)) std::cout << epg::to_string(c) << '\n';
  if (claws) {
    const epg::RepresentationIndex index(repr);
    const auto base = epg::base_coloring(repr);
    for (const auto& [x, buckets] : index.bends) {
      std::string missing;
      for (epg::Shape s : epg::kShapes) {
        if (epg::is_missing(index, x, s, base)) missing += std::string(missing.empty() ? "" : ",") + epg::to_string(s);
      }
      std::cout << "point " << epg::to_string(x) << " missing=" << missing
                << " hot=" << epg::to_string(epg::hot_stems(index, x, base))
                << " exact=" << epg::to_string(epg::exact_mono_claws(index, graph, x, base)) << '\n';
    }
  }
  return 0;
}

int cmd_verify(const std::string& file, const std::string& coloring_file) {
  const auto repr = epg::load_representation(file);
  std::map<epg::PathId, int> colors;
  try {
    colors = epg::parse_coloring_colors(epg::read_file(coloring_file));
  } catch (const epg::ParseError& e) {
    throw InputError(coloring_file + ": " + e.what());
  }
  epg::VerificationReport report;
  try {
    report = epg::verify_coloring(repr, colors);
  } catch (const std::invalid_argument& e) {
    throw InputError(coloring_file + ": " + e.what());
  }
  for (const auto& v : report.violations) {
    std::cout << "monocolored {";
    for (std::size_t i = 0; i < v.clique.size(); ++i) std::cout << (i ? "," : "") << v.clique[i];
    std::cout << "} color " << v.color << '\n';
  }
  if (!report.colors_in_range) std::cout << "colors outside 1..4\n";
  std::cerr << report.clique_count << " maximal cliques, "
            << (report.valid ? "coloring valid" : "coloring INVALID")
            << (report.class4_independent ? ", class 4 independent" : ", class 4 not independent");
  if (report.oracle_checked) std::cerr << (report.oracle_agrees ? ", oracle agrees" : ", ORACLE DISAGREES");
  std::cerr << '\n';
  return report.valid ? 0 : 1;
}

int cmd_bench(const std::string& sizes_text, std::uint64_t seed, int reps) {
  std::vector<std::size_t> sizes;
  std::size_t start = 0;
  while (start <= sizes_text.size()) {
    const std::size_t comma = sizes_text.find(',', start);
    const std::string item = sizes_text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!item.empty()) sizes.push_back(parse_size(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (sizes.empty()) throw InputError("--sizes is empty");
  std::printf("%10s %12s %8s\n", "n", "time_ms", "ratio");
  double previous = 0;
  for (std::size_t n : sizes) {
    const auto repr = epg::random_instance(epg::scaling_params(n, seed));
    std::vector<double> times;
    for (int r = 0; r < std::max(1, reps); ++r) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto result = epg::clique_color(repr);
      const auto t1 = std::chrono::steady_clock::now();
      if (result.colors.size() != repr.paths.size()) return kInputError;
      times.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    std::nth_element(times.begin(), times.begin() + times.size() / 2, times.end());
    const double median = times[times.size() / 2];
    if (previous > 0) {
      std::printf("%10zu %12.3f %8.3f\n", n, median, median / previous);
    } else {
      std::printf("%10zu %12.3f %8s\n", n, median, "-");
    }
    previous = median;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"4-clique coloring of single-bend edge-intersection path representations"};
  app.require_subcommand(1);

  std::string file, out_file, coloring_file;

  auto* color = app.add_subcommand("color", "Compute a 4-clique coloring");
  color->add_option("file", file, "Instance JSON")->required();
  color->add_option("-o,--output", out_file, "Coloring JSON (default stdout)");

  auto* verify = app.add_subcommand("verify", "Check a coloring against all maximal cliques");
  verify->add_option("file", file, "Instance JSON")->required();
  verify->add_option("coloring", coloring_file, "Coloring JSON")->required();

  bool claws = false;
  auto* cliques = app.add_subcommand("cliques", "List maximal cliques, one per line");
  cliques->add_option("file", file, "Instance JSON")->required();
  cliques->add_flag("--claws", claws, "Also print per-bend-point claw analysis");

  std::size_t paths = 0;
  std::string grid_text = "50x50", seed_text = "0", preset_name = "uniform";
  epg::Coord max_length = 10;
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--paths", paths, "Number of paths")->required();
  gen->add_option("--grid", grid_text, "Grid size WxH");
  gen->add_option("--seed", seed_text, "Seed, decimal or 0x-hex");
  gen->add_option("--preset", preset_name, "uniform or clustered");
  gen->add_option("--max-length", max_length, "Maximum segment length");
  gen->add_option("-o,--output", out_file, "Instance JSON (default stdout)");

  auto* graph = app.add_subcommand("graph", "Export the intersection graph as DOT");
  graph->add_option("file", file, "Instance JSON")->required();
  graph->add_option("-o,--output", out_file, "DOT file (default stdout)");

  auto* render = app.add_subcommand("render", "Draw the representation as SVG");
  render->add_option("file", file, "Instance JSON")->required();
  render->add_option("--coloring", coloring_file, "Coloring JSON");
  render->add_option("-o,--output", out_file, "SVG file")->required();

  std::string sizes_text = "1k,2k,4k,8k,16k";
  int reps = 3;
  auto* bench = app.add_subcommand("bench", "Time clique_color on doubling clustered instances");
  bench->add_option("--sizes", sizes_text, "Comma-separated sizes, k = 1000");
  bench->add_option("--seed", seed_text, "Seed, decimal or 0x-hex");
  bench->add_option("--reps", reps, "Repetitions per size (median reported)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*color) {
      const auto repr = epg::load_representation(file);
      emit(out_file, epg::serialize_coloring(repr, epg::clique_color(repr)));
    } else if (*verify) {
      return cmd_verify(file, coloring_file);
    } else if (*cliques) {
      return cmd_cliques(file, claws);
    } else if (*gen) {
      epg::GenParams p;
      p.paths = paths;
      const auto x = grid_text.find_first_of("xX");
      try {
        if (x == std::string::npos) throw std::invalid_argument(grid_text);
        p.width = std::stoi(grid_text.substr(0, x));
        p.height = std::stoi(grid_text.substr(x + 1));
      } catch (const std::exception&) {
        throw InputError("--grid must look like WxH");
      }
      p.seed = parse_seed(seed_text);
      p.preset = parse_preset(preset_name);
      p.max_length = max_length;
      emit(out_file, epg::serialize_representation(epg::random_instance(p)) + "\n");
    } else if (*graph) {
      emit(out_file, epg::to_dot(epg::derive_graph(epg::load_representation(file))));
    } else if (*render) {
      const auto repr = epg::load_representation(file);
      std::vector<int> colors;
      if (!coloring_file.empty()) {
        try {
          colors = colors_for(repr, epg::parse_coloring_colors(epg::read_file(coloring_file)));
        } catch (const epg::ParseError& e) {
          throw InputError(coloring_file + ": " + e.what());
        }
      }
      epg::write_file(out_file, epg::render_svg(repr, colors));
    } else if (*bench) {
      return cmd_bench(sizes_text, parse_seed(seed_text), reps);
    }
  } catch (const epg::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const epg::GeneratorError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return 0;
}
