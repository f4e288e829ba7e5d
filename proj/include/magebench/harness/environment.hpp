#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "magebench/common/raster.hpp"
#include "magebench/football/episode.hpp"
#include "magebench/harness/prompts.hpp"
#include "magebench/sokoban/sokoban.hpp"

namespace mage::harness {

class Environment {
 public:
  virtual ~Environment() = default;
  virtual EnvKind kind() const = 0;
  virtual const std::string& id() const = 0;
  virtual const std::vector<std::string>& vocabulary() const = 0;
  virtual bool done() const = 0;
  virtual Raster observe() const = 0;
  // Applies one parsed action; returns the reward it earned. Pre: !done().
  virtual double apply(const std::string& action) = 0;
  // Per applied action.
  virtual const std::vector<double>& rewards() const = 0;
  virtual double score() const = 0;
  virtual std::string termination() const = 0;
  // Environment-specific result fields.
  virtual nlohmann::ordered_json extras() const { return nlohmann::ordered_json::object(); }
};

class SokobanEnv final : public Environment {
 public:
  explicit SokobanEnv(std::shared_ptr<const sokoban::Level> level);

  EnvKind kind() const override { return EnvKind::Sokoban; }
  const std::string& id() const override { return state_.level->id; }
  const std::vector<std::string>& vocabulary() const override;
  bool done() const override { return state_.done; }
  Raster observe() const override;
  double apply(const std::string& action) override;
  const std::vector<double>& rewards() const override { return rewards_; }
  double score() const override;
  std::string termination() const override;
  nlohmann::ordered_json extras() const override;

 private:
  sokoban::State state_;
  std::vector<double> rewards_;
};

class FootballEnv final : public Environment {
 public:
  explicit FootballEnv(football::Scenario scenario, football::EpisodeOptions options = {});

  EnvKind kind() const override { return EnvKind::Football; }
  const std::string& id() const override { return scenario_.id; }
  const std::vector<std::string>& vocabulary() const override;
  bool done() const override { return episode_.done(); }
  Raster observe() const override;
  double apply(const std::string& action) override;
  const std::vector<double>& rewards() const override { return rewards_; }
  double score() const override { return episode_.total_reward(); }
  std::string termination() const override;
  nlohmann::ordered_json extras() const override;

  const football::FootballEpisode& episode() const { return episode_; }

 private:
  football::Scenario scenario_;
  football::FootballEpisode episode_;
  std::vector<double> rewards_;
};

const std::vector<std::string>& sokoban_vocabulary();
const std::vector<std::string>& football_vocabulary();

}  // namespace mage::harness
