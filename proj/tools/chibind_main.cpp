// Copyright 2026 The chibind Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// chibind command-line tool.
//
// Exit codes: 0 success, 2 invalid input or precondition rejection, 1
// internal assertion failure or a verification run with violations.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "chibind/colorers.hpp"
#include "chibind/enumerate.hpp"
#include "chibind/errors.hpp"
#include "chibind/harness.hpp"
#include "chibind/patterns.hpp"

namespace {

using namespace chibind;

struct GraphInput {
  std::string g6;
  std::string edges;
  int order = -1;
};

void add_graph_options(CLI::App* cmd, GraphInput& in) {
  auto* g6 = cmd->add_option("--g6", in.g6, "Graph in graph6 format");
  auto* edges = cmd->add_option("--edges", in.edges, "Edge list such as \"0-1,1-2\"");
  cmd->add_option("--order", in.order, "Vertex count for --edges (default: largest endpoint + 1)")->needs(edges);
  g6->excludes(edges);
}

Graph read_graph(const GraphInput& in) {
  if (!in.g6.empty()) return decode_graph6(in.g6);
  if (in.edges.empty() && in.order < 0) throw PreconditionError("give a graph with --g6 or --edges");
  std::vector<std::pair<int, int>> list;
  int top = -1;
  std::stringstream ss(in.edges);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw PreconditionError("edge '" + item + "' is not of the form u-v");
    try {
      const int u = std::stoi(item.substr(0, dash));
      const int v = std::stoi(item.substr(dash + 1));
      list.emplace_back(u, v);
      top = std::max({top, u, v});
    } catch (const std::logic_error&) {
      throw PreconditionError("edge '" + item + "' is not of the form u-v");
    }
  }
  return from_edge_list(in.order >= 0 ? in.order : top + 1, list);
}

void write_json(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw PreconditionError("cannot write '" + path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chibind: exhaustive checks and certified colorings for hereditary graph classes"};
  app.require_subcommand(1);

  VerifyOptions vo;
  std::string json_path;
  bool seconds = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification target over a graph universe");
  verify_cmd->add_option("--target", vo.target, "Target id (see `chibind targets`)")->required();
  verify_cmd->add_option("--n", vo.n_max, "Largest graph order");
  verify_cmd->add_option("--n-min", vo.n_min, "Smallest graph order (default 1)");
  verify_cmd->add_flag("--connected", vo.connected, "Only connected graphs");
  verify_cmd->add_option("--in", vo.input_path, "Read graphs from a graph6 file instead of generating");
  verify_cmd->add_option("--json", json_path, "Write the JSON report here ('-' for stdout)");
  verify_cmd->add_flag("--seconds", seconds, "Include wall time in the JSON report");
  verify_cmd->add_option("--threads", vo.threads, "Worker count (default CHIBIND_THREADS or all cores)");

  GraphInput color_in;
  std::string pipeline;
  bool color_json = false;
  auto* color_cmd = app.add_subcommand("color", "Color one graph with a certified pipeline");
  color_cmd->add_option("--pipeline", pipeline, "Pipeline id (see `chibind pipelines`)")->required();
  add_graph_options(color_cmd, color_in);
  color_cmd->add_flag("--json", color_json, "Print JSON instead of text");

  GraphInput analyze_in;
  bool analyze_json = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Print the structural profile of one graph");
  add_graph_options(analyze_cmd, analyze_in);
  analyze_cmd->add_flag("--json", analyze_json, "Print JSON instead of text");

  int gen_n = 0;
  bool gen_connected = false;
  std::string gen_free;
  auto* gen_cmd = app.add_subcommand("gen", "Print all graphs of one order as graph6, one per line");
  gen_cmd->add_option("--n", gen_n, "Graph order")->required();
  gen_cmd->add_flag("--connected", gen_connected, "Only connected graphs");
  gen_cmd->add_option("--free", gen_free, "Comma-separated forbidden induced subgraphs, e.g. P5,K2,3");

  auto* targets_cmd = app.add_subcommand("targets", "List verification targets");
  auto* pipelines_cmd = app.add_subcommand("pipelines", "List coloring pipelines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*verify_cmd) {
      if (!vo.input_path && vo.n_max == 0) throw PreconditionError("verify needs --n or --in");
      const VerificationReport r = verify(vo);
      if (!json_path.empty()) write_json(json_path, r.to_json(seconds));
      if (json_path != "-") std::cout << r.summary() << "\n";
      return r.ok() ? 0 : 1;
    }
    if (*color_cmd) {
      const RenderedOutput out = color_one(read_graph(color_in), pipeline);
      std::cout << (color_json ? out.json : out.text);
      return 0;
    }
    if (*analyze_cmd) {
      const RenderedOutput out = analyze_one(read_graph(analyze_in));
      std::cout << (analyze_json ? out.json : out.text);
      return 0;
    }
    if (*gen_cmd) {
      std::vector<std::string> names;
      for (const Pattern& p : parse_pattern_list(gen_free)) names.push_back(p.name);
      GraphStream s = filter_stream(generate(gen_n, gen_connected), names);
      while (auto g = s.next()) std::cout << encode_graph6(*g) << "\n";
      return 0;
    }
    if (*targets_cmd) {
      for (const TargetInfo& t : verification_targets()) {
        std::cout << t.id << "\t" << t.statement << "\n";
      }
      return 0;
    }
    if (*pipelines_cmd) {
      for (const std::string& id : pipeline_ids()) std::cout << id << "\n";
      return 0;
    }
  } catch (const PreconditionError& e) {
    std::cerr << "chibind: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "chibind: internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
