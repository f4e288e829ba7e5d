#include <doctest.h>

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "magebench/common/base64.hpp"
#include "magebench/football/scenario.hpp"
#include "magebench/harness/agent.hpp"
#include "magebench/harness/classify.hpp"
#include "magebench/harness/parse.hpp"
#include "magebench/harness/planner.hpp"
#include "magebench/harness/transcript.hpp"
#include "magebench/harness/wire.hpp"
#include "magebench/sokoban/level_io.hpp"

using namespace mage;
using namespace mage::harness;

namespace {

// Solved by Up, Up, Left.
const char* kThreeStep =
    "; tier=1 optimal=3 rbest=53.5\n"
    "######\n"
    "#    #\n"
    "#.$  #\n"
    "#    #\n"
    "#  @ #\n"
    "######\n";

std::shared_ptr<const sokoban::Level> three_step() {
  return std::make_shared<const sokoban::Level>(sokoban::parse_level(kThreeStep, "three"));
}

class ScriptedAgent final : public Agent {
 public:
  explicit ScriptedAgent(std::vector<std::string> replies) : replies_(std::move(replies)) {}
  std::string act(const Observation& obs) override {
    seen.push_back(obs);
    const std::string out = replies_[std::min(calls, replies_.size() - 1)];
    ++calls;
    return out;
  }
  std::size_t calls = 0;
  std::vector<Observation> seen;

 private:
  std::vector<std::string> replies_;
};

std::vector<StepRecord> fake_history(int n) {
  std::vector<StepRecord> h;
  for (int i = 1; i <= n; ++i) h.push_back({"output " + std::to_string(i), "a" + std::to_string(i)});
  return h;
}

const std::vector<std::string> kDirs = {"Up", "Down", "Left", "Right"};

}  // namespace

TEST_CASE("parse_actions examples") {
  CHECK(parse_actions("# analyze\n...\n# action\naction_shot", football_vocabulary(), ParseMode::Single) ==
        std::vector<std::string>{"action_shot"});
  CHECK(parse_actions("### Actions\nLeft, Right, Up", kDirs, ParseMode::Sequence) ==
        std::vector<std::string>{"Left", "Right", "Up"});
  CHECK_THROWS_AS(parse_actions("I think we should go up", kDirs, ParseMode::Single), ParseError);
}

TEST_CASE("parse_actions tolerates header and token variations") {
  CHECK(parse_actions("Action: up", kDirs, ParseMode::Single) == std::vector<std::string>{"Up"});
  CHECK(parse_actions("**Action**: `LEFT`", kDirs, ParseMode::Single) == std::vector<std::string>{"Left"});
  CHECK(parse_actions("  #action  \n\n   Down.  \n", kDirs, ParseMode::Single) == std::vector<std::string>{"Down"});
  CHECK(parse_actions("### Analyze\nthink\n### Actions\nUp,Up,\nLeft , 'Down'\n### Notes\nRight", kDirs,
                      ParseMode::Sequence) == std::vector<std::string>{"Up", "Up", "Left", "Down"});
  CHECK(parse_actions("### Actions\n[Up, Right]", kDirs, ParseMode::Sequence) ==
        std::vector<std::string>{"Up", "Right"});
  // the last header carrying a token wins
  CHECK(parse_actions("# action\nUp\n# analyze\nno wait\n# action\nDown", kDirs, ParseMode::Single) ==
        std::vector<std::string>{"Down"});
  // single mode takes the first vocabulary word after the header
  CHECK(parse_actions("# action\nI choose Left then Up", kDirs, ParseMode::Single) ==
        std::vector<std::string>{"Left"});
}

TEST_CASE("parse_actions rejects near misses") {
  CHECK_THROWS_AS(parse_actions("Up, Up", kDirs, ParseMode::Sequence), ParseError);
  CHECK_THROWS_AS(parse_actions("# action\n", kDirs, ParseMode::Single), ParseError);
  CHECK_THROWS_AS(parse_actions("# action\nUpward", kDirs, ParseMode::Single), ParseError);
  CHECK_THROWS_AS(parse_actions("# action\naction_left", kDirs, ParseMode::Single), ParseError);
  CHECK_THROWS_AS(parse_actions("action_left", football_vocabulary(), ParseMode::Single), ParseError);
  CHECK_THROWS_AS(parse_actions("# action\nleft", football_vocabulary(), ParseMode::Single), ParseError);
  CHECK_THROWS_AS(parse_actions("x", {}, ParseMode::Single), std::invalid_argument);
}

TEST_CASE("classify_errors examples") {
  std::vector<OutputRecord> all_bad(10, OutputRecord{false, {}});
  CHECK(classify_errors(all_bad).kind == ErrorKind::InvalidActions);

  std::vector<OutputRecord> nine_up(9, OutputRecord{true, {"Up"}});
  nine_up.push_back({true, {"Left"}});
  const auto rep = classify_errors(nine_up);
  CHECK(rep.kind == ErrorKind::RepeatingActions);
  CHECK(rep.ife);
  CHECK(rep.mode_action_fraction == doctest::Approx(0.9));

  std::vector<OutputRecord> mixed;
  for (int i = 0; i < 10; ++i) mixed.push_back({true, {i < 4 ? "Up" : kDirs[1 + i % 3]}});
  const auto none = classify_errors(mixed);
  CHECK(none.kind == ErrorKind::None);
  CHECK_FALSE(none.ife);
  CHECK_THROWS_AS(classify_errors(std::vector<OutputRecord>{}), std::invalid_argument);
}

TEST_CASE("classification thresholds sit exactly at 90 percent") {
  for (int n : {10, 20, 100, 1000}) {
    CAPTURE(n);
    const int at = n * 9 / 10;
    std::vector<OutputRecord> r(n, OutputRecord{true, {"Up", "Down"}});
    for (int i = 0; i < at; ++i) r[i].parsed = false;
    CHECK(classify_errors(r).kind != ErrorKind::InvalidActions);  // exactly 90%: not above
    r[at].parsed = false;
    CHECK(classify_errors(r).kind == ErrorKind::InvalidActions);

    std::vector<OutputRecord> s;
    for (int i = 0; i < n; ++i) s.push_back({true, {i < at ? "Up" : "Down"}});
    CHECK(classify_errors(s).kind == ErrorKind::RepeatingActions);  // exactly 90%: at or above
    s[at - 1].actions = {"Left"};
    CHECK(classify_errors(s).kind == ErrorKind::None);
  }
}

TEST_CASE("classify_errors depends only on the fractions") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<OutputRecord> r;
    const int n = 1 + static_cast<int>(rng() % 30);
    for (int i = 0; i < n; ++i) {
      OutputRecord o{rng() % 3 != 0, {}};
      const int k = static_cast<int>(rng() % 4);
      for (int j = 0; j < k; ++j) o.actions.push_back(kDirs[rng() % (rng() % 2 ? 1 : 4)]);
      if (!o.parsed) o.actions.clear();
      r.push_back(o);
    }
    const auto a = classify_errors(r);
    std::shuffle(r.begin(), r.end(), rng);
    const auto b = classify_errors(r);
    CHECK(a.kind == b.kind);
    CHECK(a.unparsed_fraction == b.unparsed_fraction);
    CHECK(a.mode_action_fraction == b.mode_action_fraction);
  }
}

TEST_CASE("online window shape over the memory grid") {
  const PromptSet p = load_prompts(EnvKind::Sokoban, Mode::Online);
  for (int am : {1, 5, 10}) {
    for (int om : {1, 2, 3}) {
      if (om > am) continue;
      for (int t = 1; t <= 25; ++t) {
        CAPTURE(am);
        CAPTURE(om);
        CAPTURE(t);
        const auto h = fake_history(t - 1);
        const Transcript tr = online_window(p, h, t, am, om);
        CHECK(tr.agent_turns() == std::min(t - 1, am));
        CHECK(static_cast<int>(tr.actions.size()) == std::min(t - 1, am));
        CHECK(tr.observation_count() == std::min(t, om));
        // user and agent turns alternate, opening and closing with the user
        for (std::size_t i = 0; i < tr.turns.size(); ++i) {
          CHECK(tr.turns[i].role == (i % 2 == 0 ? Role::User : Role::Agent));
        }
        CHECK(tr.turns.back().observation == t);
        // frames are the most recent ones
        int expect = t;
        for (auto it = tr.turns.rbegin(); it != tr.turns.rend(); ++it) {
          if (it->observation) CHECK(*it->observation == expect--);
        }
      }
    }
  }
}

TEST_CASE("online window examples") {
  const PromptSet p = load_prompts(EnvKind::Sokoban, Mode::Online);
  const auto h = fake_history(7);
  const Transcript tr = online_window(p, h, 8, 5, 1);
  CHECK(tr.actions == std::vector<std::string>{"a3", "a4", "a5", "a6", "a7"});
  CHECK(tr.observation_count() == 1);
  CHECK(tr.turns.back().observation == 8);
  // the opening turn carries the rules, the placeholder and the io prompt
  const auto& first = tr.turns.front().text;
  CHECK(first.starts_with("You're going to play a game of Sokoban"));
  CHECK(first.find("image not available.") != std::string::npos);
  CHECK(first.ends_with("# action\nUp"));
  CHECK(tr.turns[2].text.starts_with("Please continue to act according to the\ncurrent game scene."));
  CHECK(tr.turns[2].text.ends_with("image not available."));
  CHECK(tr.turns.back().text == continue_prompt());

  const Transcript wide = online_window(p, fake_history(11), 12, 10, 2);
  const auto& w = wide.turns;
  CHECK(w[w.size() - 2].text == "output 11");
  CHECK(w[w.size() - 3].observation == 11);
  CHECK(w.back().observation == 12);

  const Transcript first_step = online_window(p, {}, 1, 5, 1);
  CHECK(first_step.turns.size() == 1);
  CHECK(first_step.turns[0].observation == 1);
  CHECK(first_step.turns[0].text.find("image not available.") == std::string::npos);

  CHECK_THROWS_AS(online_window(p, fake_history(2), 3, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(online_window(p, fake_history(1), 3, 5, 1), std::invalid_argument);
}

TEST_CASE("prompt assets") {
  const auto g = load_prompts(EnvKind::Sokoban, Mode::Global);
  CHECK_FALSE(g.system_prompt.empty());
  CHECK(g.task_prompt.empty());
  CHECK(g.io_prompt.find("separate by ','") != std::string::npos);
  const auto f = load_prompts(EnvKind::Football, Mode::Online);
  CHECK(f.system_prompt.find("**right side**") != std::string::npos);
  CHECK(f.io_prompt.ends_with("action_left"));
  CHECK_THROWS_AS(load_prompts(EnvKind::Football, Mode::Global), std::invalid_argument);
  CHECK_FALSE(load_prompts(EnvKind::WebUI, Mode::Global).system_prompt.empty());
  const auto t = global_prompt(g);
  REQUIRE(t.turns.size() == 1);
  CHECK(t.turns[0].observation == 1);
}

TEST_CASE("global run applies the parsed sequence") {
  SokobanEnv env(three_step());
  ScriptedAgent agent({"### Actions\nUp, Up, Left"});
  const auto r = run_global(agent, env, load_prompts(EnvKind::Sokoban, Mode::Global),
                            standard_config(EnvKind::Sokoban, Mode::Global));
  CHECK(agent.calls == 1);
  CHECK(r.score == 100.0);
  CHECK(r.termination == "solved");
  CHECK(r.rewards.size() == 3);
  REQUIRE(agent.seen.size() == 1);
  CHECK(agent.seen[0].frames.count(1) == 1);
}

TEST_CASE("global run stops at the terminal state") {
  SokobanEnv env(three_step());
  std::string reply = "### Actions\nUp, Up, Left";
  for (int i = 0; i < 57; ++i) reply += ", Right";
  ScriptedAgent agent({reply});
  const auto r = run_global(agent, env, load_prompts(EnvKind::Sokoban, Mode::Global),
                            standard_config(EnvKind::Sokoban, Mode::Global));
  CHECK(r.decisions[0].actions.size() == 60);
  CHECK(r.rewards.size() == 3);
  CHECK(r.score == 100.0);
}

TEST_CASE("global run with prose replies exhausts the retries and scores idle") {
  SokobanEnv env(three_step());
  ScriptedAgent agent({"I think we should go up"});
  const auto r = run_global(agent, env, load_prompts(EnvKind::Sokoban, Mode::Global),
                            standard_config(EnvKind::Sokoban, Mode::Global));
  CHECK(agent.calls == 3);
  CHECK(r.agent_calls == 3);
  CHECK(r.errors.kind == ErrorKind::InvalidActions);
  CHECK(r.score == 100.0 - 53.5);
  CHECK(r.rewards.empty());
  // retries re-send the same context
  CHECK(agent.seen[1].context.turns[0].text == agent.seen[0].context.turns[0].text);
  CHECK(agent.seen[2].attempt == 3);
}

TEST_CASE("online run retries only after a parse failure") {
  SokobanEnv env(three_step());
  ScriptedAgent agent({"# action\nUp", "hmm", "# action\nUp", "no", "nope", "still no", "# action\nLeft"});
  const auto r = run_online(agent, env, load_prompts(EnvKind::Sokoban, Mode::Online),
                            standard_config(EnvKind::Sokoban, Mode::Online));
  REQUIRE(r.decisions.size() == 4);
  CHECK(r.decisions[0].attempts == 1);
  CHECK(r.decisions[1].attempts == 2);
  CHECK(r.decisions[2].attempts == 3);
  CHECK_FALSE(r.decisions[2].parsed);
  CHECK(r.decisions[3].actions == std::vector<std::string>{"Left"});
  CHECK(r.agent_calls == 7);
  // the unparsed step left the level alone: three moves applied, level solved
  CHECK(r.rewards.size() == 3);
  CHECK(r.score == 100.0);
  // step 4 sees three agent turns, one of them unparsed
  CHECK(agent.seen.back().context.agent_turns() == 3);
  CHECK(agent.seen.back().context.actions == std::vector<std::string>{"Up", "Up"});
}

TEST_CASE("online run never calls the agent more than three times per decision") {
  SokobanEnv env(three_step());
  ScriptedAgent agent({"nothing useful"});
  auto cfg = standard_config(EnvKind::Sokoban, Mode::Online);
  const auto r = run_online(agent, env, load_prompts(EnvKind::Sokoban, Mode::Online), cfg);
  CHECK(r.decisions.size() == 50);
  CHECK(r.agent_calls == 150);
  CHECK(r.errors.kind == ErrorKind::InvalidActions);
  CHECK(r.score == 100.0 - 53.5);
}

TEST_CASE("online run hands the agent windowed context") {
  SokobanEnv env(three_step());
  ScriptedAgent agent({"# action\nRight", "# action\nLeft"});
  auto cfg = standard_config(EnvKind::Sokoban, Mode::Online);
  cfg.max_steps = 12;
  cfg.action_memory = 3;
  cfg.observation_memory = 2;
  run_online(agent, env, load_prompts(EnvKind::Sokoban, Mode::Online), cfg);
  REQUIRE(agent.seen.size() == 12);
  for (const auto& obs : agent.seen) {
    CAPTURE(obs.step);
    CHECK(obs.context.agent_turns() == std::min(obs.step - 1, 3));
    CHECK(obs.frames.size() == static_cast<std::size_t>(std::min(obs.step, 2)));
    for (const auto& turn : obs.context.turns) {
      if (turn.observation) CHECK(obs.frames.count(*turn.observation) == 1);
    }
  }
}

TEST_CASE("planner config validation") {
  PlannerConfig c;
  CHECK_NOTHROW(c.validate());
  c.observation_memory = 6;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = {};
  c.max_parse_retries = -1;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  CHECK(standard_config(EnvKind::Football, Mode::Online).max_steps == 400);
  CHECK(standard_config(EnvKind::Sokoban, Mode::Global).max_parse_retries == 2);

  football::Scenario s = football::generate_scenario(football::Category::Teamwork, 5, 1);
  FootballEnv fenv(s);
  IdleAgent idle;
  CHECK_THROWS_AS(run_global(idle, fenv, {}, standard_config(EnvKind::Football, Mode::Global)),
                  std::invalid_argument);
}

TEST_CASE("builtin agents") {
  auto level = three_step();
  const auto prompts = load_prompts(EnvKind::Sokoban, Mode::Online);
  const auto cfg = standard_config(EnvKind::Sokoban, Mode::Online);

  IdleAgent idle;
  SokobanEnv e1(level);
  const auto ri = run_online(idle, e1, prompts, cfg);
  CHECK(ri.score == 100.0 - level->r_best);
  CHECK(ri.rewards.empty());

  RandomAgent a(11);
  RandomAgent b(11);
  SokobanEnv e2(level);
  SokobanEnv e3(level);
  const auto ra = run_online(a, e2, prompts, cfg, {0, 5});
  const auto rb = run_online(b, e3, prompts, cfg, {0, 5});
  CHECK(to_json(ra).dump() == to_json(rb).dump());
  CHECK(ra.unparsed() == 0);
  CHECK(ra.score >= ri.score);

  RandomAgent g(3);
  SokobanEnv e4(level);
  const auto rg = run_global(g, e4, load_prompts(EnvKind::Sokoban, Mode::Global),
                             standard_config(EnvKind::Sokoban, Mode::Global));
  CHECK(rg.decisions[0].actions.size() == 50);
}

TEST_CASE("football online episode through the harness") {
  football::Scenario s = football::generate_scenario(football::Category::Personal, 4, 3);
  FootballEnv env(s);
  IdleAgent idle;
  const auto r = run_online(idle, env, load_prompts(EnvKind::Football, Mode::Online),
                            standard_config(EnvKind::Football, Mode::Online));
  CHECK(env.done());
  CHECK(r.env == "football");
  CHECK(r.errors.kind == ErrorKind::RepeatingActions);
  CHECK(r.extras["frames"].get<int>() <= 400);
  double sum = 0.0;
  for (double x : r.rewards) sum += x;
  CHECK(r.score == doctest::Approx(sum).epsilon(1e-12));
}

TEST_CASE("episode results are byte-identical across runs and round-trip") {
  const auto prompts = load_prompts(EnvKind::Football, Mode::Online);
  const auto cfg = standard_config(EnvKind::Football, Mode::Online);
  std::string first;
  for (int run = 0; run < 2; ++run) {
    FootballEnv env(football::generate_scenario(football::Category::Teamwork, 2, 4));
    RandomAgent agent(99);
    const auto r = run_online(agent, env, prompts, cfg, {1, 42});
    const std::string dump = to_json(r).dump();
    if (run == 0) first = dump;
    else CHECK(dump == first);
    const auto back = episode_from_json(nlohmann::ordered_json::parse(dump));
    CHECK(to_json(back).dump() == dump);
  }
}

TEST_CASE("wire messages keep their field order") {
  EpisodeInfo info{EnvKind::Sokoban, Mode::Online, load_prompts(EnvKind::Sokoban, Mode::Online), "t1-001", 1, 50,
                   sokoban_vocabulary()};
  const auto start = episode_start_message(info);
  std::vector<std::string> keys;
  for (auto it = start.begin(); it != start.end(); ++it) keys.push_back(it.key());
  CHECK(std::vector<std::string>(keys.begin(), keys.begin() + 4) ==
        std::vector<std::string>{"type", "env", "mode", "prompts"});

  SokobanEnv env(three_step());
  Observation obs;
  obs.step = 2;
  obs.context = online_window(info.prompts, fake_history(1), 2, 5, 1);
  obs.frames.emplace(2, env.observe());
  const auto m = observe_message(obs);
  keys.clear();
  for (auto it = m.begin(); it != m.end(); ++it) keys.push_back(it.key());
  CHECK(std::vector<std::string>(keys.begin(), keys.begin() + 5) ==
        std::vector<std::string>{"type", "step", "text", "image", "mime"});
  CHECK(Raster::from_ppm(base64_decode(m["image"].get<std::string>())) == env.observe());
  CHECK(m["history"].size() == 2);

  CHECK(act_message("x").dump() == R"({"type":"act","text":"x"})");
  CHECK(episode_end_message(12.5).dump() == R"({"type":"episode_end","score":12.5})");
  CHECK(act_text(R"({"type":"act","text":"# action\nUp"})") == "# action\nUp");
  CHECK_THROWS_AS(act_text("garbage"), AgentError);
  CHECK_THROWS_AS(act_text(R"({"type":"observe"})"), AgentError);
}

TEST_CASE("subprocess agent speaks the line protocol") {
  const std::string script =
      "while IFS= read -r line; do case \"$line\" in *'\"observe\"'*) "
      "printf '%s\\n' '{\"type\":\"act\",\"text\":\"# action\\nUp\"}';; esac; done";
  ProcessAgent agent(script, 10000);
  SokobanEnv env(three_step());
  auto cfg = standard_config(EnvKind::Sokoban, Mode::Online);
  cfg.max_steps = 4;
  const auto r = run_online(agent, env, load_prompts(EnvKind::Sokoban, Mode::Online), cfg);
  CHECK(r.decisions.size() == 4);
  CHECK(r.unparsed() == 0);
  CHECK(r.decisions[0].actions == std::vector<std::string>{"Up"});

  ProcessAgent dead("exit 0", 2000);
  SokobanEnv env2(three_step());
  CHECK_THROWS_AS(run_online(dead, env2, load_prompts(EnvKind::Sokoban, Mode::Online), cfg), AgentError);
}

TEST_CASE("http agent posts every message") {
  httplib::Server server;
  std::vector<std::string> types;
  server.Post("/agent", [&](const httplib::Request& req, httplib::Response& res) {
    const auto j = nlohmann::json::parse(req.body);
    types.push_back(j["type"].get<std::string>());
    if (types.back() == "observe") res.set_content(act_message("### Actions\nUp, Up, Left").dump(), "application/json");
    else res.set_content("{}", "application/json");
  });
  const int port = server.bind_to_any_port("127.0.0.1");
  std::thread th([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  HttpAgent agent("http://127.0.0.1:" + std::to_string(port) + "/agent", 5);
  SokobanEnv env(three_step());
  const auto r = run_global(agent, env, load_prompts(EnvKind::Sokoban, Mode::Global),
                            standard_config(EnvKind::Sokoban, Mode::Global));
  server.stop();
  th.join();
  CHECK(r.score == 100.0);
  CHECK(types == std::vector<std::string>{"episode_start", "observe", "episode_end"});

  HttpAgent nowhere("http://127.0.0.1:" + std::to_string(port) + "/agent", 1);
  SokobanEnv env2(three_step());
  CHECK_THROWS_AS(run_global(nowhere, env2, {}, standard_config(EnvKind::Sokoban, Mode::Global)), AgentError);
}

TEST_CASE("interactive agent serves observations and takes posted actions") {
  InteractiveAgent agent("127.0.0.1", 0, 10000);
  REQUIRE(agent.port() > 0);
  SokobanEnv env(three_step());
  EpisodeResult result;
  std::thread runner([&] {
    result = run_online(agent, env, load_prompts(EnvKind::Sokoban, Mode::Online),
                        standard_config(EnvKind::Sokoban, Mode::Online));
  });

  httplib::Client client("127.0.0.1", agent.port());
  const std::vector<std::string> moves = {"Up", "Up", "Left"};
  std::size_t sent = 0;
  std::uint64_t last_serial = 0;
  bool saw_session = false;
  for (int spins = 0; sent < moves.size() && spins < 2000; ++spins) {
    if (auto s = client.Get("/session"); s && s->status == 200) saw_session = true;
    auto res = client.Get("/observe");
    if (res && res->status == 200) {
      const auto j = nlohmann::json::parse(res->body);
      const auto serial = j["serial"].get<std::uint64_t>();
      if (serial != last_serial) {
        CHECK(j["type"] == "observe");
        CHECK(j["image"].is_string());
        CHECK(client.Options("/act")->get_header_value("Access-Control-Allow-Origin") == "*");
        auto post = client.Post("/act", act_message("# action\n" + moves[sent]).dump(), "application/json");
        REQUIRE(post);
        CHECK(post->status == 200);
        last_serial = serial;
        ++sent;
        continue;
      }
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(5));
  }
  runner.join();
  CHECK(saw_session);
  CHECK(result.score == 100.0);
  auto r = client.Get("/result");
  REQUIRE(r);
  const auto results = nlohmann::json::parse(r->body);
  REQUIRE(results.size() == 1);
  CHECK(results[0]["score"].get<double>() == 100.0);
  auto stray = client.Post("/act", act_message("x").dump(), "application/json");
  CHECK(stray->status == 409);
}
