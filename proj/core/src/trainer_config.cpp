#include "amrseq/trainer_config.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <vector>

#include "amrseq/corpus.hpp"
#include "amrseq/errors.hpp"

namespace amrseq {

namespace {

std::string format_number(double value) {
  if (value == std::floor(value) && std::abs(value) < 1e15) {
    return std::to_string(static_cast<long long>(value));
  }
  std::ostringstream out;
  out << value;
  return out.str();
}

std::string format_range(std::pair<int, int> range) {
  if (range.first == range.second) return std::to_string(range.first);
  return std::to_string(range.first) + "-" + std::to_string(range.second);
}

std::pair<int, int> parse_range(const std::string& value, int line) {
  auto dash = value.find('-', 1);  // skip a leading sign
  try {
    if (dash == std::string::npos) {
      int v = std::stoi(value);
      return {v, v};
    }
    return {std::stoi(value.substr(0, dash)),
            std::stoi(value.substr(dash + 1))};
  } catch (const std::exception&) {
    throw ParseError(ErrorKind::UnexpectedToken,
                     "bad range '" + value + "'", line);
  }
}

std::pair<int, int> parse_bucket_pair(const std::string& value, int line) {
  // (510,510) or (510, 510)
  std::string inner = value;
  if (inner.size() >= 2 && inner.front() == '(' && inner.back() == ')') {
    inner = inner.substr(1, inner.size() - 2);
  }
  auto comma = inner.find(',');
  try {
    if (comma == std::string::npos) {
      int v = std::stoi(inner);
      return {v, v};
    }
    return {std::stoi(inner.substr(0, comma)),
            std::stoi(inner.substr(comma + 1))};
  } catch (const std::exception&) {
    throw ParseError(ErrorKind::UnexpectedToken,
                     "bad bucket pair '" + value + "'", line);
  }
}

double parse_double(const std::string& value, int line) {
  try {
    std::size_t used = 0;
    double v = std::stod(value, &used);
    while (used < value.size() && std::isspace(
               static_cast<unsigned char>(value[used]))) {
      ++used;
    }
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ParseError(ErrorKind::UnexpectedToken,
                     "bad number '" + value + "'", line);
  }
}

std::string trim(const std::string& s) {
  auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

std::vector<std::string> check(const TrainerConfig& config) {
  std::vector<std::string> problems;
  auto positive = [&](double v, const char* name) {
    if (v <= 0) problems.push_back(std::string(name) + " must be positive");
  };
  positive(config.layers, "Layers");
  positive(config.nodes, "Nodes");
  positive(config.buckets.first, "Buckets");
  positive(config.buckets.second, "Buckets");
  positive(config.epochs.first, "Epochs");
  positive(config.vocabulary.first, "Vocabulary");
  positive(config.learning_rate, "Learning rate");
  positive(config.decay_factor, "Decay factor");
  positive(config.gradient_norm, "Gradient norm");
  if (config.epochs.first > config.epochs.second) {
    problems.push_back("Epochs range is reversed");
  }
  if (config.vocabulary.first > config.vocabulary.second) {
    problems.push_back("Vocabulary range is reversed");
  }
  return problems;
}

std::string format_trainer_config(const TrainerConfig& config) {
  std::ostringstream out;
  out << "Layers: " << config.layers << '\n'
      << "Nodes: " << config.nodes << '\n'
      << "Buckets: (" << config.buckets.first << "," << config.buckets.second
      << ")\n"
      << "Epochs: " << format_range(config.epochs) << '\n'
      << "Vocabulary: " << format_range(config.vocabulary) << '\n'
      << "Learning rate: " << format_number(config.learning_rate) << '\n'
      << "Decay factor: " << format_number(config.decay_factor) << '\n'
      << "Gradient norm: " << format_number(config.gradient_norm) << '\n';
  return out.str();
}

TrainerConfig parse_trainer_config(const std::string& text) {
  TrainerConfig config;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    auto colon = stripped.find(':');
    if (colon == std::string::npos) {
      throw ParseError(ErrorKind::UnexpectedToken, "expected 'Name: value'",
                       line_no);
    }
    std::string key = trim(stripped.substr(0, colon));
    std::string value = trim(stripped.substr(colon + 1));
    if (key == "Layers") {
      config.layers = parse_range(value, line_no).first;
    } else if (key == "Nodes") {
      config.nodes = parse_range(value, line_no).first;
    } else if (key == "Buckets") {
      config.buckets = parse_bucket_pair(value, line_no);
    } else if (key == "Epochs") {
      config.epochs = parse_range(value, line_no);
    } else if (key == "Vocabulary") {
      config.vocabulary = parse_range(value, line_no);
    } else if (key == "Learning rate") {
      config.learning_rate = parse_double(value, line_no);
    } else if (key == "Decay factor") {
      config.decay_factor = parse_double(value, line_no);
    } else if (key == "Gradient norm") {
      config.gradient_norm = parse_double(value, line_no);
    } else {
      throw ParseError(ErrorKind::UnexpectedToken,
                       "unknown setting '" + key + "'", line_no);
    }
  }
  return config;
}

void save_trainer_config(const TrainerConfig& config,
                         const std::filesystem::path& path) {
  write_text_file(path, format_trainer_config(config));
}

TrainerConfig load_trainer_config(const std::filesystem::path& path) {
  return parse_trainer_config(read_text_file(path));
}

}  // namespace amrseq
