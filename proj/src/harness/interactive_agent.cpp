#include <chrono>
#include <condition_variable>
#include <mutex>
#include <thread>

#include "httplib.h"
#include "magebench/harness/agent.hpp"
#include "magebench/harness/wire.hpp"

namespace mage::harness {

struct InteractiveAgent::Impl {
  httplib::Server server;
  std::thread thread;
  int port = 0;
  std::optional<int> timeout_ms;

  std::mutex mu;
  std::condition_variable cv;
  std::optional<WireJson> session;
  std::optional<WireJson> pending;  // observe message awaiting a reply
  std::optional<std::string> reply;
  std::uint64_t serial = 0;
  WireJson results = WireJson::array();
};

namespace {

void cors(httplib::Response& res) {
  res.set_header("Access-Control-Allow-Origin", "*");
  res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
  res.set_header("Access-Control-Allow-Headers", "Content-Type");
}

}  // namespace

InteractiveAgent::InteractiveAgent(std::string host, int port, std::optional<int> timeout_ms) : impl_(new Impl) {
  impl_->timeout_ms = timeout_ms;
  auto& s = impl_->server;
  Impl* im = impl_;
  s.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) {
    cors(res);
    res.status = 204;
  });
  s.Get("/session", [im](const httplib::Request&, httplib::Response& res) {
    cors(res);
    std::lock_guard lock(im->mu);
    if (!im->session) {
      res.status = 204;
      return;
    }
    res.set_content(im->session->dump(), "application/json");
  });
  s.Get("/observe", [im](const httplib::Request&, httplib::Response& res) {
    cors(res);
    std::lock_guard lock(im->mu);
    if (!im->pending) {
      res.status = 204;
      return;
    }
    WireJson j = *im->pending;
    j["serial"] = im->serial;
    res.set_content(j.dump(), "application/json");
  });
  s.Post("/act", [im](const httplib::Request& req, httplib::Response& res) {
    cors(res);
    const auto j = nlohmann::json::parse(req.body, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("text") || !j["text"].is_string()) {
      res.status = 400;
      res.set_content(R"({"error":"expected {\"type\":\"act\",\"text\":...}"})", "application/json");
      return;
    }
    {
      std::lock_guard lock(im->mu);
      if (!im->pending) {
        res.status = 409;
        res.set_content(R"({"error":"no observation awaiting an action"})", "application/json");
        return;
      }
      im->reply = j["text"].get<std::string>();
      im->pending.reset();
    }
    im->cv.notify_all();
    res.set_content(R"({"ok":true})", "application/json");
  });
  s.Get("/result", [im](const httplib::Request&, httplib::Response& res) {
    cors(res);
    std::lock_guard lock(im->mu);
    res.set_content(im->results.dump(), "application/json");
  });

  if (port == 0) {
    impl_->port = s.bind_to_any_port(host);
  } else {
    impl_->port = s.bind_to_port(host, port) ? port : -1;
  }
  if (impl_->port < 0) {
    delete impl_;
    throw AgentError("cannot bind interactive endpoint on " + host + ":" + std::to_string(port));
  }
  impl_->thread = std::thread([im] { im->server.listen_after_bind(); });
}

InteractiveAgent::~InteractiveAgent() {
  impl_->server.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
  delete impl_;
}

int InteractiveAgent::port() const { return impl_->port; }

void InteractiveAgent::start(const EpisodeInfo& info) {
  std::lock_guard lock(impl_->mu);
  impl_->session = episode_start_message(info);
}

std::string InteractiveAgent::act(const Observation& obs) {
  std::unique_lock lock(impl_->mu);
  impl_->pending = observe_message(obs);
  impl_->reply.reset();
  ++impl_->serial;
  const auto ready = [this] { return impl_->reply.has_value(); };
  if (impl_->timeout_ms) {
    if (!impl_->cv.wait_for(lock, std::chrono::milliseconds(*impl_->timeout_ms), ready)) {
      impl_->pending.reset();
      throw AgentError("no action posted before the timeout");
    }
  } else {
    impl_->cv.wait(lock, ready);
  }
  std::string text = std::move(*impl_->reply);
  impl_->reply.reset();
  return text;
}

void InteractiveAgent::finish(double score) {
  std::lock_guard lock(impl_->mu);
  WireJson end = episode_end_message(score);
  if (impl_->session) end["level"] = (*impl_->session)["level"];
  impl_->results.push_back(std::move(end));
  impl_->session.reset();
}

}  // namespace mage::harness
