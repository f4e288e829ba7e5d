#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

#include "magebench/harness/agent.hpp"
#include "magebench/harness/wire.hpp"

namespace mage::harness {

ProcessAgent::ProcessAgent(std::string command, int timeout_ms)
    : command_(std::move(command)), timeout_ms_(timeout_ms) {
  int in_pipe[2];
  int out_pipe[2];
  if (pipe(in_pipe) != 0) throw AgentError(std::string("pipe: ") + std::strerror(errno));
  if (pipe(out_pipe) != 0) {
    close(in_pipe[0]);
    close(in_pipe[1]);
    throw AgentError(std::string("pipe: ") + std::strerror(errno));
  }
  pid_ = fork();
  if (pid_ < 0) throw AgentError(std::string("fork: ") + std::strerror(errno));
  if (pid_ == 0) {
    dup2(in_pipe[0], STDIN_FILENO);
    dup2(out_pipe[1], STDOUT_FILENO);
    close(in_pipe[0]);
    close(in_pipe[1]);
    close(out_pipe[0]);
    close(out_pipe[1]);
    execl("/bin/sh", "sh", "-c", command_.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  close(in_pipe[0]);
  close(out_pipe[1]);
  to_child_ = in_pipe[1];
  from_child_ = out_pipe[0];
  // a dead agent should surface as EPIPE, not kill the run
  signal(SIGPIPE, SIG_IGN);
}

ProcessAgent::~ProcessAgent() {
  if (to_child_ >= 0) close(to_child_);
  if (from_child_ >= 0) close(from_child_);
  if (pid_ > 0) {
    int status = 0;
    for (int i = 0; i < 50; ++i) {
      if (waitpid(pid_, &status, WNOHANG) != 0) return;
      usleep(10000);
    }
    kill(pid_, SIGTERM);
    waitpid(pid_, &status, 0);
  }
}

void ProcessAgent::send(const std::string& line) {
  std::string data = line + "\n";
  const char* p = data.data();
  std::size_t left = data.size();
  while (left > 0) {
    const ssize_t n = write(to_child_, p, left);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw AgentError("agent process closed its input: " + command_);
    }
    p += n;
    left -= static_cast<std::size_t>(n);
  }
}

std::string ProcessAgent::receive() {
  for (;;) {
    const auto nl = buffer_.find('\n');
    if (nl != std::string::npos) {
      std::string line = buffer_.substr(0, nl);
      buffer_.erase(0, nl + 1);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      return line;
    }
    pollfd fd{from_child_, POLLIN, 0};
    const int ready = poll(&fd, 1, timeout_ms_);
    if (ready == 0) throw AgentError("agent process timed out: " + command_);
    if (ready < 0) {
      if (errno == EINTR) continue;
      throw AgentError(std::string("poll: ") + std::strerror(errno));
    }
    char chunk[4096];
    const ssize_t n = read(from_child_, chunk, sizeof chunk);
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) throw AgentError("agent process exited: " + command_);
    buffer_.append(chunk, static_cast<std::size_t>(n));
  }
}

void ProcessAgent::start(const EpisodeInfo& info) { send(episode_start_message(info).dump()); }

std::string ProcessAgent::act(const Observation& obs) {
  send(observe_message(obs).dump());
  return act_text(receive());
}

void ProcessAgent::finish(double score) { send(episode_end_message(score).dump()); }

}  // namespace mage::harness
