#include "httplib.h"
#include "magebench/harness/agent.hpp"
#include "magebench/harness/wire.hpp"

namespace mage::harness {

HttpAgent::HttpAgent(std::string url, int timeout_s) : timeout_s_(timeout_s) {
  const auto scheme = url.find("://");
  const auto path_start = url.find('/', scheme == std::string::npos ? 0 : scheme + 3);
  host_ = path_start == std::string::npos ? url : url.substr(0, path_start);
  path_ = path_start == std::string::npos ? "/" : url.substr(path_start);
  if (host_.empty()) throw AgentError("bad agent url: " + url);
}

std::string HttpAgent::post(const std::string& body) {
  httplib::Client client(host_);
  client.set_connection_timeout(timeout_s_, 0);
  client.set_read_timeout(timeout_s_, 0);
  client.set_write_timeout(timeout_s_, 0);
  auto res = client.Post(path_, body, "application/json");
  if (!res) throw AgentError("agent endpoint unreachable: " + host_ + path_ + " (" + httplib::to_string(res.error()) + ")");
  if (res->status < 200 || res->status >= 300) {
    throw AgentError("agent endpoint returned HTTP " + std::to_string(res->status));
  }
  return res->body;
}

void HttpAgent::start(const EpisodeInfo& info) { post(episode_start_message(info).dump()); }

std::string HttpAgent::act(const Observation& obs) { return act_text(post(observe_message(obs).dump())); }

void HttpAgent::finish(double score) { post(episode_end_message(score).dump()); }

}  // namespace mage::harness
