// Copyright 2026 The np2io Authors
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

#include "np2io/cli/app.h"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "np2io/cli/commands.h"
#include "np2io/common/errors.h"
#include "np2io/common/files.h"

namespace np2io::cli {
namespace {

std::optional<Label> ParseStub(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return ParseLabel(s);
}

std::vector<std::string> ReadLines(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) throw ConfigError("text file not found: " + path.string());
  std::vector<std::string> lines;
  std::istringstream in(ReadFile(path));
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Insider/outsider noun phrase classification toolkit", "np2io"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  uint64_t seed = 0;
  std::string out_dir;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* out_opt = nullptr;
  auto add_shared = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON run configuration");
    seed_opt = sub->add_option("--seed", seed, "Overrides every seed in the configuration");
    out_opt = sub->add_option("--out", out_dir, "Output directory");
  };
  std::vector<CLI::Option*> seed_opts;
  std::vector<CLI::Option*> out_opts;

  CLI::App* prepare = app.add_subcommand("prepare", "Split a labeled dataset");
  CLI::App* train = app.add_subcommand("train", "Fine-tune the span classifier");
  CLI::App* evaluate = app.add_subcommand("evaluate", "Benchmark models on the test split");
  CLI::App* adversarial = app.add_subcommand("adversarial", "Insider recall on adversarial posts");
  CLI::App* probe = app.add_subcommand("probe", "Label the noun phrases of new text");
  CLI::App* stats = app.add_subcommand("stats", "Label histogram of the dataset");
  for (CLI::App* sub : {prepare, train, evaluate, adversarial, probe, stats}) {
    add_shared(sub);
    seed_opts.push_back(seed_opt);
    out_opts.push_back(out_opt);
  }

  std::vector<std::string> models;
  bool zero_shot = false;
  bool no_zero_shot = false;
  evaluate->add_option("--models", models, "Models to benchmark (default: all)")->delimiter(',');
  evaluate->add_flag("--zero-shot", zero_shot, "Add the zero-shot metric group");
  evaluate->add_flag("--no-zero-shot", no_zero_shot, "Skip the zero-shot metric group");

  std::string stub;
  std::string phrase;
  std::string seeds_file;
  CLI::Option* phrase_opt = adversarial->add_option("--phrase", phrase, "Probe phrase");
  adversarial->add_option("--seeds", seeds_file, "JSONL seed posts {phrase, post}");
  for (CLI::App* sub : {adversarial, probe}) {
    sub->add_option("--stub", stub, "Use a constant model instead of the checkpoint")
        ->check(CLI::IsMember({"insider", "outsider", "na"}, CLI::ignore_case));
  }

  std::vector<std::string> texts;
  std::string text_file;
  bool json_only = false;
  CLI::Option* text_opt = probe->add_option("--text", texts, "Post text (repeatable)");
  CLI::Option* text_file_opt =
      probe->add_option("--text-file", text_file, "File with one post per line");
  text_opt->excludes(text_file_opt);
  probe->add_flag("--json-only", json_only, "Write predictions without HTML");

  CLI::Option* stats_phrase_opt = stats->add_option("--phrase", phrase, "Restrict to one phrase");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    RunConfig config;
    if (!config_path.empty()) config = LoadRunConfig(config_path);
    std::optional<uint64_t> seed_override;
    std::optional<std::filesystem::path> out_override;
    for (CLI::Option* o : seed_opts) {
      if (o->count() > 0) seed_override = seed;
    }
    for (CLI::Option* o : out_opts) {
      if (o->count() > 0) out_override = std::filesystem::path(out_dir);
    }
    ApplyOverrides(config, seed_override, out_override);
    config.Validate();

    if (prepare->parsed()) {
      CmdPrepare(config, out);
    } else if (train->parsed()) {
      CmdTrain(config, out);
    } else if (evaluate->parsed()) {
      if (zero_shot && no_zero_shot) throw ConfigError("--zero-shot and --no-zero-shot conflict");
      EvaluateOptions options;
      options.models = models;
      if (zero_shot) options.zero_shot = true;
      if (no_zero_shot) options.zero_shot = false;
      CmdEvaluate(config, options, out);
    } else if (adversarial->parsed()) {
      AdversarialOptions options;
      if (phrase_opt->count() > 0) options.phrase = phrase;
      options.seeds_file = seeds_file;
      options.stub = ParseStub(stub);
      CmdAdversarial(config, options, out);
    } else if (probe->parsed()) {
      ProbeOptions options;
      options.texts = text_file_opt->count() > 0 ? ReadLines(text_file) : texts;
      if (options.texts.empty()) throw ConfigError("probe needs --text or --text-file");
      options.json_only = json_only;
      options.stub = ParseStub(stub);
      CmdProbe(config, options, out);
    } else if (stats->parsed()) {
      std::optional<std::string> p;
      if (stats_phrase_opt->count() > 0) p = phrase;
      CmdStats(config, p, out);
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}

}  // namespace np2io::cli
