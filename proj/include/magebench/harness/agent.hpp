#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "magebench/common/raster.hpp"
#include "magebench/harness/prompts.hpp"
#include "magebench/harness/transcript.hpp"

namespace mage::harness {

// Unreachable endpoint, dead subprocess, malformed reply.
struct AgentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EpisodeInfo {
  EnvKind env = EnvKind::Sokoban;
  Mode mode = Mode::Online;
  PromptSet prompts;
  std::string level_id;
  std::uint64_t seed = 0;
  int max_steps = 0;
  std::vector<std::string> vocabulary;
};

struct Observation {
  int step = 1;
  int attempt = 1;  // 2 and 3 are retries after a parse failure
  Transcript context;
  std::map<int, Raster> frames;  // by step, for every turn in context that carries one
};

class Agent {
 public:
  virtual ~Agent() = default;
  virtual void start(const EpisodeInfo&) {}
  virtual std::string act(const Observation& obs) = 0;
  virtual void finish(double /*score*/) {}
};

// Replies with no action at all, except in football where it idles.
class IdleAgent final : public Agent {
 public:
  void start(const EpisodeInfo& info) override { info_ = info; }
  std::string act(const Observation& obs) override;

 private:
  EpisodeInfo info_;
};

// Uniform over the vocabulary; Global replies carry max_steps actions.
// Reseeded per episode from (seed, level id, episode seed).
class RandomAgent final : public Agent {
 public:
  explicit RandomAgent(std::uint64_t seed) : seed_(seed) {}
  void start(const EpisodeInfo& info) override;
  std::string act(const Observation& obs) override;

 private:
  std::uint64_t seed_;
  EpisodeInfo info_;
  std::mt19937_64 rng_;
};

// Newline-delimited JSON over a child process's stdin/stdout.
class ProcessAgent final : public Agent {
 public:
  explicit ProcessAgent(std::string command, int timeout_ms = 120000);
  ~ProcessAgent() override;
  ProcessAgent(const ProcessAgent&) = delete;
  ProcessAgent& operator=(const ProcessAgent&) = delete;

  void start(const EpisodeInfo& info) override;
  std::string act(const Observation& obs) override;
  void finish(double score) override;

 private:
  void send(const std::string& line);
  std::string receive();

  std::string command_;
  int timeout_ms_;
  int pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  std::string buffer_;
};

// POSTs each message as JSON to one URL; observe replies carry the act.
class HttpAgent final : public Agent {
 public:
  explicit HttpAgent(std::string url, int timeout_s = 120);
  void start(const EpisodeInfo& info) override;
  std::string act(const Observation& obs) override;
  void finish(double score) override;

 private:
  std::string post(const std::string& body);
  std::string host_;
  std::string path_;
  int timeout_s_;
};

// Human play: serves the current observation over HTTP and blocks until an
// act is posted. Endpoints: GET /session, GET /observe, POST /act,
// GET /result.
class InteractiveAgent final : public Agent {
 public:
  InteractiveAgent(std::string host, int port, std::optional<int> timeout_ms = std::nullopt);
  ~InteractiveAgent() override;
  InteractiveAgent(const InteractiveAgent&) = delete;
  InteractiveAgent& operator=(const InteractiveAgent&) = delete;

  int port() const;
  void start(const EpisodeInfo& info) override;
  std::string act(const Observation& obs) override;
  void finish(double score) override;

 private:
  struct Impl;
  Impl* impl_;
};

}  // namespace mage::harness
