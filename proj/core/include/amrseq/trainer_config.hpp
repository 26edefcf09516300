#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace amrseq {

// Pass-through hyperparameter record for external seq2seq trainers; nothing
// here trains anything. Ranged fields keep both endpoints (a single value is
// a degenerate range).
struct TrainerConfig {
  int layers = 1;
  int nodes = 400;
  std::pair<int, int> buckets = {510, 510};
  std::pair<int, int> epochs = {25, 35};
  std::pair<int, int> vocabulary = {150, 200};
  double learning_rate = 0.5;
  double decay_factor = 0.99;
  double gradient_norm = 5.0;

  bool operator==(const TrainerConfig&) const = default;
};

// Validates positivity and range order; returns problem descriptions.
std::vector<std::string> check(const TrainerConfig& config);

std::string format_trainer_config(const TrainerConfig& config);
TrainerConfig parse_trainer_config(const std::string& text);

void save_trainer_config(const TrainerConfig& config,
                         const std::filesystem::path& path);
TrainerConfig load_trainer_config(const std::filesystem::path& path);

}  // namespace amrseq
