#include <doctest.h>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "json.hpp"
#include "magebench/cli/commands.hpp"
#include "magebench/common/assets.hpp"
#include "magebench/sokoban/level_io.hpp"
#include "magebench/webui/scoring.hpp"
#include "magebench/webui/snapshot_io.hpp"

using namespace mage;
using namespace mage::cli;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    static int n = 0;
    path = fs::temp_directory_path() / ("magebench_cli_" + std::to_string(getpid()) + "_" + std::to_string(n++));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

const fs::path kWebFixtures = fs::path(MAGEBENCH_TEST_FIXTURES) / "webui";

// One generated corpus shared by the run tests.
const fs::path& sokoban_corpus() {
  static TempDir dir;
  static bool made = false;
  if (!made) {
    std::ostringstream log;
    REQUIRE(cmd_generate({"sokoban", 1, dir.path}, log) == kOk);
    made = true;
  }
  return dir.path;
}

RunConfig base_run(const fs::path& out) {
  RunConfig c;
  c.corpus = sokoban_corpus();
  c.out = out;
  c.limit = 6;
  return c;
}

}  // namespace

TEST_CASE("config parsing and validation") {
  RunConfig c;
  apply_json(c, nlohmann::json::parse(R"({"env":"football","agent":"idle","repeats":10,"corpus":"x"})"));
  CHECK(c.env == "football");
  CHECK(c.repeats == 10);
  CHECK(c.planner().max_steps == 400);
  CHECK_NOTHROW(c.validate());
  CHECK_THROWS_AS(apply_json(c, nlohmann::json::parse(R"({"colour":"red"})")), ConfigError);
  CHECK_THROWS_AS(apply_json(c, nlohmann::json::parse(R"({"repeats":"three"})")), ConfigError);

  RunConfig bad = c;
  bad.mode = "global";
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = c;
  bad.observation_memory = 9;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = c;
  bad.agent = "gpt";
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = c;
  bad.corpus.clear();
  CHECK_THROWS_AS(bad.validate(), ConfigError);

  TempDir tmp;
  write_text_file(tmp.path / "c.json", to_json(c).dump());
  CHECK(to_json(load_config(tmp.path / "c.json")).dump() == to_json(c).dump());
}

TEST_CASE("bind address resolution") {
  unsetenv("MAGEBENCH_BIND");
  CHECK(resolve_bind("").port == 8765);
  setenv("MAGEBENCH_BIND", "0.0.0.0:9000", 1);
  CHECK(resolve_bind("").host == "0.0.0.0");
  CHECK(resolve_bind("").port == 9000);
  CHECK(resolve_bind("127.0.0.1:81").port == 81);
  unsetenv("MAGEBENCH_BIND");
  CHECK_THROWS_AS(resolve_bind("localhost"), ConfigError);
  CHECK_THROWS_AS(resolve_bind("localhost:http"), ConfigError);
  CHECK_THROWS_AS(resolve_bind("localhost:70000"), ConfigError);
}

TEST_CASE("generate writes the full corpora deterministically") {
  const auto first = read_text_file(sokoban_corpus() / "manifest.json");
  const auto m = nlohmann::json::parse(first);
  CHECK(m["count"] == 182);
  CHECK(m["tiers"].size() == 8);
  CHECK(sokoban::load_corpus(sokoban_corpus()).size() == 182);

  TempDir again;
  std::ostringstream log;
  REQUIRE(cmd_generate({"sokoban", 1, again.path}, log) == kOk);
  CHECK(read_text_file(again.path / "manifest.json") == first);

  TempDir fb;
  REQUIRE(cmd_generate({"football", 1, fb.path}, log) == kOk);
  const auto fm = nlohmann::json::parse(read_text_file(fb.path / "manifest.json"));
  CHECK(fm["count"] == 108);
  int files = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(fb.path / "scenarios")) ++files;
  CHECK(files == 108);
  CHECK_THROWS_AS(cmd_generate({"webui", 1, fb.path}, log), ConfigError);
}

TEST_CASE("idle run scores 100 minus r_best per level") {
  TempDir out;
  RunConfig c = base_run(out.path);
  c.agent = "idle";
  std::ostringstream log;
  REQUIRE(cmd_run(c, log) == kOk);
  const auto episodes = load_episodes(out.path);
  CHECK(episodes.size() == 18);
  const auto levels = sokoban::load_corpus(sokoban_corpus());
  for (const auto& e : episodes) {
    const auto it = std::find_if(levels.begin(), levels.end(), [&](const auto& l) { return l.id == e.level_id; });
    REQUIRE(it != levels.end());
    CHECK(e.score == 100.0 - it->r_best);
    CHECK(e.errors.kind == harness::ErrorKind::InvalidActions);
  }
  const auto report = nlohmann::json::parse(read_text_file(out.path / "report.json"));
  CHECK(report["complete"] == true);
  CHECK(report["errors"]["invalid_actions_pct"] == 100.0);
  CHECK(nlohmann::json::parse(read_text_file(out.path / "config.json"))["agent"] == "idle");
}

TEST_CASE("random runs are reproducible and never below idle") {
  TempDir a, b, idle;
  std::ostringstream log;
  RunConfig c = base_run(a.path);
  c.mode = "global";
  REQUIRE(cmd_run(c, log) == kOk);
  c.out = b.path;
  c.workers = 3;
  REQUIRE(cmd_run(c, log) == kOk);
  CHECK(read_text_file(a.path / "episodes.jsonl") == read_text_file(b.path / "episodes.jsonl"));

  c.out = idle.path;
  c.agent = "idle";
  c.workers = 1;
  REQUIRE(cmd_run(c, log) == kOk);
  const auto r = load_episodes(a.path);
  const auto i = load_episodes(idle.path);
  REQUIRE(r.size() == i.size());
  for (std::size_t k = 0; k < r.size(); ++k) CHECK(r[k].score >= i[k].score);

  std::ostringstream text, json;
  REQUIRE(cmd_report({{a.path, idle.path}, false, std::nullopt}, text, log) == kOk);
  CHECK(text.str().find("first - second") != std::string::npos);
  REQUIRE(cmd_report({{a.path}, true, 200}, json, log) == kOk);
  const auto parsed = nlohmann::json::parse(json.str());
  CHECK(parsed[0]["best_of_n_sampled"].size() == 3);
}

TEST_CASE("an agent that dies mid-run leaves loadable partial results") {
  TempDir out;
  RunConfig c = base_run(out.path);
  c.agent =
      "process:n=0; while IFS= read -r line; do case \"$line\" in *'\"observe\"'*) n=$((n+1)); "
      "[ $n -gt 70 ] && exit 0; printf '%s\\n' '{\"type\":\"act\",\"text\":\"# action\\nLeft\"}';; esac; done";
  std::ostringstream log;
  CHECK(cmd_run(c, log) == kAgentError);
  const auto episodes = load_episodes(out.path);
  CHECK(episodes.size() >= 1);
  CHECK(episodes.size() < 18);
  const auto report = nlohmann::json::parse(read_text_file(out.path / "report.json"));
  CHECK(report["complete"] == false);
}

TEST_CASE("corpus and config failures map to exit codes through exceptions") {
  TempDir out;
  RunConfig c = base_run(out.path);
  c.corpus = out.path / "missing";
  std::ostringstream log;
  CHECK_THROWS_AS(cmd_run(c, log), CorpusError);
  c = base_run(out.path);
  c.levels = {"no-such-level"};
  CHECK_THROWS_AS(cmd_run(c, log), CorpusError);
  c = base_run(out.path);
  c.repeats = 0;
  CHECK_THROWS_AS(cmd_run(c, log), ConfigError);
}

TEST_CASE("webui runs without code score zero in the parse bucket") {
  TempDir out;
  RunConfig c;
  c.env = "webui";
  c.mode = "global";
  c.agent = "idle";
  c.corpus = kWebFixtures;
  c.out = out.path;
  c.repeats = 1;
  std::ostringstream log;
  REQUIRE(cmd_run(c, log) == kOk);
  const auto episodes = load_episodes(out.path);
  REQUIRE(episodes.size() == 3);
  for (const auto& e : episodes) {
    CHECK(e.score == 0.0);
    CHECK(e.agent_calls == 3);
    CHECK(e.extras["micro_percent"]["parse"] == webui::kMicroPercentTotal);
  }

  TempDir coder;
  c.out = coder.path;
  c.agent =
      "process:while IFS= read -r line; do case \"$line\" in *'\"observe\"'*) "
      "printf '%s\\n' '{\"type\":\"act\",\"text\":\"```html\\n<p>hi</p>\\n```\\n```css\\np{}\\n```\"}';; esac; done";
  REQUIRE(cmd_run(c, log) == kOk);
  CHECK(read_text_file(coder.path / "webui" / "landing" / "r0" / "index.html") == "<p>hi</p>\n");
  CHECK(read_text_file(coder.path / "webui" / "landing" / "r0" / "style.css") == "p{}\n");
  CHECK(load_episodes(coder.path).front().termination == "awaiting_snapshots");
}

TEST_CASE("score-web identities, corrupt snapshots and default weights") {
  TempDir gen;
  for (const auto& page : {"landing", "blog", "form"}) {
    fs::create_directories(gen.path / page);
    for (const auto& e : fs::directory_iterator(kWebFixtures / page / "gt")) {
      fs::copy_file(e.path(), gen.path / page / e.path().filename());
    }
  }
  std::ostringstream out, log;
  REQUIRE(cmd_score_web({kWebFixtures, gen.path, std::nullopt, std::nullopt}, out, log) == kOk);
  auto doc = nlohmann::json::parse(out.str());
  CHECK(doc["weights"]["source"] == "default");
  CHECK(doc["weights"]["default_alpha"] == 1.0);
  CHECK(doc["weights"]["beta"] == 0.5);
  for (const auto& p : doc["pages"]) CHECK(p["report"]["micro_percent"]["aes"] == webui::kMicroPercentTotal);
  CHECK(doc["summary"]["aes"] == 100.0);

  write_text_file(gen.path / "form" / "initial.json", "{ not json");
  std::ostringstream out2;
  REQUIRE(cmd_score_web({kWebFixtures, gen.path, std::nullopt, std::nullopt}, out2, log) == kOk);
  doc = nlohmann::json::parse(out2.str());
  for (const auto& p : doc["pages"]) {
    if (p["page"] == "form") {
      CHECK(p["report"]["micro_percent"]["aes"] == 0);
      CHECK(p["report"]["micro_percent"]["parse"] == webui::kMicroPercentTotal);
    }
  }

  TempDir w;
  write_text_file(w.path / "w.json", R"({"alpha":{"color":2.0},"beta":1.0})");
  std::ostringstream out3;
  REQUIRE(cmd_score_web({kWebFixtures, gen.path, w.path / "w.json", w.path / "r.json"}, out3, log) == kOk);
  CHECK(out3.str().empty());
  CHECK(nlohmann::json::parse(read_text_file(w.path / "r.json"))["weights"]["beta"] == 1.0);
  CHECK_THROWS_AS(cmd_score_web({kWebFixtures, gen.path, w.path / "absent.json", std::nullopt}, out3, log),
                  ConfigError);
}
