// Command-line driver for the gh-metric-lab shared library. Talks to the
// core exclusively through the C API in ghml.h; all reports go to stdout as
// JSON. Exit codes: 0 success/pass, 1 verdict failure, 2 usage/input error.

#include "ghml.h"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerdictFail = 1;
constexpr int kExitUsage = 2;

struct SpaceDeleter {
  void operator()(ghml_space* s) const { ghml_space_free(s); }
};
using SpacePtr = std::unique_ptr<ghml_space, SpaceDeleter>;

struct StringDeleter {
  void operator()(char* s) const { ghml_string_free(s); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

void print_error(ghml_status status) {
  std::printf("{\"error\":{\"code\":\"%s\",\"message\":\"%s\"}}\n", ghml_status_name(status),
              ghml_last_error());
}

// Exits with a usage error when the file cannot be read.
std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::printf("{\"error\":{\"code\":\"ParseError\",\"message\":\"cannot read %s\"}}\n",
                path.c_str());
    std::exit(kExitUsage);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool is_csv_path(const std::string& path) {
  return path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
}

// Loads and validates a space file, exiting with code 2 on any failure.
SpacePtr load_space(const std::string& path) {
  const std::string text = read_file(path);
  ghml_space* raw = nullptr;
  const ghml_status status = is_csv_path(path) ? ghml_space_from_csv(text.c_str(), &raw)
                                               : ghml_space_from_json(text.c_str(), &raw);
  if (status != GHML_OK) {
    print_error(status);
    std::exit(kExitUsage);
  }
  return SpacePtr(raw);
}

int finish(ghml_status status, const StringPtr& output) {
  if (status != GHML_OK) {
    print_error(status);
    return kExitUsage;
  }
  std::printf("%s\n", output.get());
  return kExitPass;
}

std::vector<int> parse_cluster_list(const std::string& text) {
  std::vector<int> sizes;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) sizes.push_back(std::stoi(item));
  return sizes;
}

int cmd_validate(const std::string& path) {
  const std::string text = read_file(path);
  ghml_space* raw = nullptr;
  const ghml_status status = is_csv_path(path) ? ghml_space_from_csv(text.c_str(), &raw)
                                               : ghml_space_from_json(text.c_str(), &raw);
  if (status != GHML_OK) {
    std::printf("{\"valid\":false,\"error\":{\"code\":\"%s\",\"message\":\"%s\"}}\n",
                ghml_status_name(status), ghml_last_error());
    return kExitUsage;
  }
  SpacePtr space(raw);
  std::printf("{\"valid\":true,\"n\":%d}\n", ghml_space_point_count(space.get()));
  return kExitPass;
}

int run_experiment_command(ghml_status (*runner)(const char*, char**, int*),
                           const std::string& config_json) {
  char* report = nullptr;
  int pass = 0;
  const ghml_status status = runner(config_json.c_str(), &report, &pass);
  StringPtr guard(report);
  if (status != GHML_OK) {
    print_error(status);
    return kExitUsage;
  }
  std::printf("%s\n", guard.get());
  return pass ? kExitPass : kExitVerdictFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Gromov-Hausdorff toolkit for finite metric spaces"};
  app.require_subcommand(1);

  std::string file_a, file_b, file_c;
  std::string epsilon;
  std::string clusters;
  std::string reference;
  bool all_optimal = false;
  std::uint64_t seed = 0;
  int n = 3;
  int trials = 1;

  auto* validate = app.add_subcommand("validate", "check the metric axioms of a space file");
  validate->add_option("file", file_a)->required();

  auto* invariants = app.add_subcommand("invariants", "print s, e, t and delta of a space");
  invariants->add_option("file", file_a)->required();

  auto* ghd = app.add_subcommand("ghd", "exact Gromov-Hausdorff distance of two spaces");
  ghd->add_option("fileX", file_a)->required();
  ghd->add_option("fileY", file_b)->required();
  ghd->add_flag("--all-optimal", all_optimal, "also list the optimal correspondences");

  auto* partition = app.add_subcommand("partition", "canonical partition of X near M");
  partition->add_option("fileM", file_a)->required();
  partition->add_option("fileX", file_b)->required();
  partition->add_option("--epsilon", epsilon)->required();

  auto* remap = app.add_subcommand("remap", "apply the ball isometry D_{M,N,eps} to X");
  remap->add_option("fileM", file_a)->required();
  remap->add_option("fileN", file_b)->required();
  remap->add_option("fileX", file_c)->required();
  remap->add_option("--epsilon", epsilon);

  auto* verify = app.add_subcommand("verify-isometry", "randomized ball-isometry experiment");
  verify->add_option("--n", n)->required();
  verify->add_option("--trials", trials)->required();
  verify->add_option("--seed", seed)->required();

  auto* sn = app.add_subcommand("sn-orbit", "the n! self-isometries of a ball around M");
  sn->add_option("fileM", file_a)->required();
  sn->add_option("--epsilon", epsilon);

  auto* gen = app.add_subcommand("gen", "generate a space (general position or in a ball)");
  gen->add_option("--n", n);
  gen->add_option("--seed", seed)->required();
  gen->add_option("--clusters", clusters, "comma-separated block sizes for in-ball sampling");
  gen->add_option("--reference", reference, "reference space file for in-ball sampling");
  gen->add_option("--epsilon", epsilon);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  if (validate->parsed()) return cmd_validate(file_a);

  if (invariants->parsed()) {
    SpacePtr space = load_space(file_a);
    char* out = nullptr;
    const ghml_status status = ghml_invariants(space.get(), &out);
    return finish(status, StringPtr(out));
  }

  if (ghd->parsed()) {
    SpacePtr x = load_space(file_a);
    SpacePtr y = load_space(file_b);
    char* out = nullptr;
    const ghml_status status = ghml_gh_distance(x.get(), y.get(), all_optimal ? 1 : 0, &out);
    return finish(status, StringPtr(out));
  }

  if (partition->parsed()) {
    SpacePtr m = load_space(file_a);
    SpacePtr x = load_space(file_b);
    char* out = nullptr;
    const ghml_status status =
        ghml_canonical_partition(m.get(), x.get(), epsilon.c_str(), &out);
    return finish(status, StringPtr(out));
  }

  if (remap->parsed()) {
    SpacePtr m = load_space(file_a);
    SpacePtr nn = load_space(file_b);
    SpacePtr x = load_space(file_c);
    ghml_space* raw = nullptr;
    const ghml_status status = ghml_remap(m.get(), nn.get(), x.get(),
                                          epsilon.empty() ? nullptr : epsilon.c_str(), &raw);
    if (status != GHML_OK) {
      print_error(status);
      return kExitUsage;
    }
    SpacePtr v(raw);
    char* out = nullptr;
    const ghml_status to_json = ghml_space_to_json(v.get(), &out);
    return finish(to_json, StringPtr(out));
  }

  if (verify->parsed()) {
    std::ostringstream config;
    config << "{\"seed\":" << seed << ",\"n\":" << n << ",\"trials\":" << trials << "}";
    return run_experiment_command(ghml_run_isometry_experiment, config.str());
  }

  if (sn->parsed()) {
    SpacePtr m = load_space(file_a);
    char* report = nullptr;
    int distinct = 0;
    const ghml_status status =
        ghml_sn_orbit(m.get(), epsilon.empty() ? nullptr : epsilon.c_str(), &report, &distinct);
    StringPtr guard(report);
    if (status != GHML_OK) {
      print_error(status);
      return kExitUsage;
    }
    std::printf("%s\n", guard.get());
    return distinct ? kExitPass : kExitVerdictFail;
  }

  if (gen->parsed()) {
    ghml_space* raw = nullptr;
    ghml_status status;
    if (!reference.empty() || !clusters.empty()) {
      if (reference.empty() || clusters.empty()) {
        std::printf("{\"error\":{\"code\":\"InvalidArgument\",\"message\":"
                    "\"--reference and --clusters must be given together\"}}\n");
        return kExitUsage;
      }
      SpacePtr m = load_space(reference);
      const std::vector<int> sizes = parse_cluster_list(clusters);
      status = ghml_gen_in_ball(seed, m.get(), epsilon.empty() ? nullptr : epsilon.c_str(),
                                sizes.data(), static_cast<int>(sizes.size()), &raw);
    } else {
      status = ghml_gen_general_position(seed, n, nullptr, &raw);
    }
    if (status != GHML_OK) {
      print_error(status);
      return kExitUsage;
    }
    SpacePtr space(raw);
    char* out = nullptr;
    const ghml_status to_json = ghml_space_to_json(space.get(), &out);
    return finish(to_json, StringPtr(out));
  }

  return kExitUsage;
}
