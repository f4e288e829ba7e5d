#include "magebench/cli/commands.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <regex>
#include <set>
#include <thread>

#include "magebench/common/assets.hpp"
#include "magebench/common/seed.hpp"
#include "magebench/football/io.hpp"
#include "magebench/harness/agent.hpp"
#include "magebench/harness/parse.hpp"
#include "magebench/metrics/best_of_n.hpp"
#include "magebench/metrics/report.hpp"
#include "magebench/sokoban/generator.hpp"
#include "magebench/sokoban/level_io.hpp"
#include "magebench/webui/snapshot_io.hpp"

namespace mage::cli {

namespace fs = std::filesystem;
using harness::EpisodeResult;
using nlohmann::ordered_json;

namespace {

// ---- corpora --------------------------------------------------------------

std::string football_manifest(std::uint64_t seed, const std::vector<football::Scenario>& scenarios) {
  ordered_json j;
  j["environment"] = "football";
  j["seed"] = seed;
  j["count"] = scenarios.size();
  ordered_json cats = ordered_json::object();
  for (auto c : {football::Category::Personal, football::Category::Teamwork, football::Category::RealWorld}) {
    cats[std::string(football::category_name(c))] =
        std::count_if(scenarios.begin(), scenarios.end(), [c](const auto& s) { return s.category == c; });
  }
  j["categories"] = cats;
  auto& arr = j["scenarios"] = ordered_json::array();
  for (const auto& s : scenarios) {
    arr.push_back({{"id", s.id},
                   {"file", "scenarios/" + s.id + ".json"},
                   {"category", football::category_name(s.category)},
                   {"region", s.region}});
  }
  return j.dump(2) + "\n";
}

std::vector<football::Scenario> load_football_corpus(const fs::path& dir) {
  const auto j = nlohmann::json::parse(read_text_file(dir / "manifest.json"));
  std::vector<football::Scenario> out;
  for (const auto& e : j.at("scenarios")) out.push_back(football::load_scenario(dir / e.at("file").get<std::string>()));
  return out;
}

struct WebPage {
  std::string id;
  std::string description;
  std::vector<webui::PageSnapshot> gt;
};

fs::path gt_dir_of(const fs::path& page) { return fs::is_directory(page / "gt") ? page / "gt" : page; }

std::vector<fs::path> page_dirs(const fs::path& root) {
  if (!fs::is_directory(root)) throw CorpusError("not a directory: " + root.string());
  std::vector<fs::path> dirs;
  bool has_json = false;
  for (const auto& e : fs::directory_iterator(root)) {
    if (e.is_directory()) dirs.push_back(e.path());
    if (e.is_regular_file() && e.path().extension() == ".json") has_json = true;
  }
  if (dirs.empty() && has_json) return {root};
  std::sort(dirs.begin(), dirs.end());
  return dirs;
}

std::vector<WebPage> load_web_corpus(const fs::path& root) {
  std::vector<WebPage> pages;
  for (const auto& dir : page_dirs(root)) {
    WebPage p;
    p.id = dir.filename().string();
    if (fs::exists(dir / "description.md")) p.description = read_text_file(dir / "description.md");
    p.gt = webui::load_page_dir(gt_dir_of(dir));
    if (p.gt.empty()) throw CorpusError("no ground-truth snapshots in " + dir.string());
    pages.push_back(std::move(p));
  }
  if (pages.empty()) throw CorpusError("no pages under " + root.string());
  return pages;
}

// Generated snapshots: unreadable files become ParseError pages.
std::vector<webui::PageSnapshot> load_gen_pages(const fs::path& dir) {
  std::vector<webui::PageSnapshot> pages;
  if (!fs::is_directory(dir)) return pages;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (!e.is_regular_file() || e.path().extension() != ".json") continue;
    try {
      pages.push_back(webui::load_page(e.path()));
    } catch (const std::exception&) {
      webui::PageSnapshot bad;
      bad.action_id = e.path().stem().string();
      bad.status = webui::PageStatus::ParseError;
      pages.push_back(std::move(bad));
    }
  }
  std::sort(pages.begin(), pages.end(), [](const auto& a, const auto& b) {
    const bool ai = a.action_id == "initial", bi = b.action_id == "initial";
    if (ai != bi) return ai;
    return a.action_id < b.action_id;
  });
  return pages;
}

// ---- webui episodes ---------------------------------------------------------

std::map<std::string, std::string> code_blocks(const std::string& text) {
  static const std::regex block(R"(```[ \t]*(html|css|javascript|js)[ \t]*(?:\n|\\n)([\s\S]*?)```)",
                                std::regex::icase);
  std::map<std::string, std::string> out;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), block); it != std::sregex_iterator(); ++it) {
    std::string lang = (*it)[1].str();
    std::transform(lang.begin(), lang.end(), lang.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lang == "js") lang = "javascript";
    out[lang] = (*it)[2].str();
  }
  return out;
}

EpisodeResult run_webui(harness::Agent& agent, const WebPage& page, const RunConfig& cfg,
                        const harness::EpisodeMeta& meta) {
  harness::PromptSet prompts = harness::load_prompts(harness::EnvKind::WebUI, harness::Mode::Global);
  prompts.task_prompt = page.description;
  const auto planner = cfg.planner();
  harness::EpisodeInfo info{harness::EnvKind::WebUI, harness::Mode::Global, prompts, page.id, meta.seed,
                            planner.max_steps, {"write_html", "write_css", "write_javascript"}};
  agent.start(info);

  EpisodeResult r;
  r.env = "webui";
  r.mode = "global";
  r.level_id = page.id;
  r.repeat = meta.repeat;
  r.seed = meta.seed;
  harness::Observation obs;
  obs.context = harness::global_prompt(prompts);
  harness::Decision d;
  std::map<std::string, std::string> files;
  for (int attempt = 1; attempt <= 1 + planner.max_parse_retries; ++attempt) {
    obs.attempt = attempt;
    d.attempts = attempt;
    d.output = agent.act(obs);
    ++r.agent_calls;
    files = code_blocks(d.output);
    if (files.count("html")) break;
  }
  d.parsed = files.count("html") > 0;
  if (d.parsed) {
    for (const auto& [lang, _] : files) d.actions.push_back("write_" + lang);
  }
  r.decisions.push_back(d);
  r.errors = harness::classify_errors(r.outputs());

  const fs::path dir = cfg.out / "webui" / page.id / fmt::format("r{}", meta.repeat);
  static const std::map<std::string, std::string> names = {
      {"html", "index.html"}, {"css", "style.css"}, {"javascript", "script.js"}};
  for (const auto& [lang, code] : files) write_text_file(dir / names.at(lang), code);

  if (!d.parsed) {
    webui::PageSnapshot failed;
    failed.status = webui::PageStatus::ParseError;
    const auto report = webui::aes({failed}, page.gt, {}, {});
    r.score = report.aes_percent();
    r.termination = "parse_error";
    r.extras = ordered_json::parse(webui::format_report(report));
  } else {
    // Scoring needs rendered snapshots of the written page; score-web does it.
    r.termination = "awaiting_snapshots";
    r.extras = {{"pending", true}, {"files", d.actions}};
  }
  agent.finish(r.score);
  return r;
}

// ---- run ---------------------------------------------------------------------

std::unique_ptr<harness::Agent> make_agent(const RunConfig& cfg) {
  if (cfg.agent == "idle") return std::make_unique<harness::IdleAgent>();
  if (cfg.agent == "random") return std::make_unique<harness::RandomAgent>(cfg.seed);
  if (cfg.agent.starts_with("process:")) return std::make_unique<harness::ProcessAgent>(cfg.agent.substr(8));
  if (cfg.agent.starts_with("http://")) return std::make_unique<harness::HttpAgent>(cfg.agent);
  throw ConfigError("agent '" + cfg.agent + "' cannot be created per worker");
}

std::vector<std::string> select_ids(const std::vector<std::string>& all, const RunConfig& cfg) {
  std::vector<std::string> ids;
  if (cfg.levels.empty()) {
    ids = all;
  } else {
    const std::set<std::string> have(all.begin(), all.end());
    for (const auto& l : cfg.levels) {
      if (!have.count(l)) throw CorpusError("level '" + l + "' is not in the corpus");
      ids.push_back(l);
    }
  }
  if (cfg.limit && static_cast<int>(ids.size()) > *cfg.limit) ids.resize(static_cast<std::size_t>(*cfg.limit));
  return ids;
}

class EpisodeWriter {
 public:
  EpisodeWriter(const fs::path& path, std::size_t tasks) : out_(path, std::ios::binary), done_(tasks) {
    if (!out_) throw CorpusError("cannot write " + path.string());
  }
  void put(std::size_t index, EpisodeResult r) {
    std::lock_guard lock(mu_);
    done_[index] = std::move(r);
    while (next_ < done_.size() && done_[next_]) write(next_++);
    out_.flush();
  }
  // After an abort: everything finished, gaps skipped.
  void drain() {
    std::lock_guard lock(mu_);
    for (std::size_t i = next_; i < done_.size(); ++i) {
      if (done_[i]) write(i);
    }
    next_ = done_.size();
    out_.flush();
  }
  std::vector<EpisodeResult> results() {
    std::lock_guard lock(mu_);
    std::vector<EpisodeResult> out;
    for (auto& r : done_) {
      if (r) out.push_back(*r);
    }
    return out;
  }

 private:
  void write(std::size_t i) { out_ << harness::to_json(*done_[i]).dump() << '\n'; }
  std::ofstream out_;
  std::mutex mu_;
  std::vector<std::optional<EpisodeResult>> done_;
  std::size_t next_ = 0;
};

int finish_run(const RunConfig& cfg, const std::vector<std::string>& ids, std::vector<EpisodeResult> results,
               std::ostream& log) {
  metrics::RunSpec spec{cfg.env, cfg.mode, cfg.repeats, {cfg.seed}, ids};
  // pending webui pages are not scores yet
  std::erase_if(results, [](const EpisodeResult& r) { return r.termination == "awaiting_snapshots"; });
  const auto report = metrics::aggregate(results, spec);
  write_text_file(cfg.out / "report.json", metrics::report_json(report).dump(2) + "\n");
  const std::string text = metrics::report_text(report);
  write_text_file(cfg.out / "report.txt", text);
  log << text;
  return kOk;
}

}  // namespace

std::vector<EpisodeResult> load_episodes(const fs::path& run_dir) {
  std::ifstream in(run_dir / "episodes.jsonl");
  if (!in) throw CorpusError("no episodes.jsonl in " + run_dir.string());
  std::vector<EpisodeResult> out;
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (line.empty()) continue;
    const auto j = ordered_json::parse(line, nullptr, false);
    if (j.is_discarded()) throw CorpusError(fmt::format("{}: line {} is not JSON", run_dir.string(), n));
    out.push_back(harness::episode_from_json(j));
  }
  return out;
}

int cmd_generate(const GenerateOptions& opt, std::ostream& log) {
  if (opt.out.empty()) throw ConfigError("no output directory given");
  const auto env = harness::env_from_name(opt.env);
  if (env == harness::EnvKind::Sokoban) {
    const auto levels = sokoban::generate_corpus(opt.seed);
    sokoban::Manifest m;
    m.seed = opt.seed;
    for (const auto& l : levels) {
      const std::string file = "levels/" + l.id + ".txt";
      sokoban::save_level(l, opt.out / file);
      m.levels.push_back({l.id, file, l.difficulty, l.optimal_steps, l.r_best});
    }
    write_text_file(opt.out / "manifest.json", sokoban::format_manifest(m));
    log << fmt::format("wrote {} sokoban levels to {}\n", levels.size(), opt.out.string());
    return kOk;
  }
  if (env == harness::EnvKind::Football) {
    const auto scenarios = football::generate_sweep(opt.seed);
    for (const auto& s : scenarios) football::save_scenario(opt.out / "scenarios" / (s.id + ".json"), s);
    write_text_file(opt.out / "manifest.json", football_manifest(opt.seed, scenarios));
    log << fmt::format("wrote {} football scenarios to {}\n", scenarios.size(), opt.out.string());
    return kOk;
  }
  throw ConfigError("generate supports sokoban and football");
}

int cmd_run(const RunConfig& cfg_in, std::ostream& log) {
  RunConfig cfg = cfg_in;
  cfg.validate();
  if (cfg.agent == "interactive") cfg.workers = 1;
  const auto env = *harness::env_from_name(cfg.env);
  const auto planner = cfg.planner();

  std::vector<std::shared_ptr<const sokoban::Level>> levels;
  std::vector<football::Scenario> scenarios;
  std::vector<WebPage> pages;
  std::vector<std::string> all;
  try {
    switch (env) {
      case harness::EnvKind::Sokoban:
        for (auto& l : sokoban::load_corpus(cfg.corpus)) {
          all.push_back(l.id);
          levels.push_back(std::make_shared<const sokoban::Level>(std::move(l)));
        }
        break;
      case harness::EnvKind::Football:
        scenarios = load_football_corpus(cfg.corpus);
        for (const auto& s : scenarios) all.push_back(s.id);
        break;
      case harness::EnvKind::WebUI:
        pages = load_web_corpus(cfg.corpus);
        for (const auto& p : pages) all.push_back(p.id);
        break;
    }
  } catch (const CorpusError&) {
    throw;
  } catch (const std::exception& e) {
    throw CorpusError(std::string("cannot load corpus: ") + e.what());
  }
  const auto ids = select_ids(all, cfg);
  std::map<std::string, std::size_t> index_of;
  for (std::size_t i = 0; i < all.size(); ++i) index_of[all[i]] = i;

  fs::create_directories(cfg.out);
  write_text_file(cfg.out / "config.json", to_json(cfg).dump(2) + "\n");
  const std::size_t tasks = ids.size() * static_cast<std::size_t>(cfg.repeats);
  EpisodeWriter writer(cfg.out / "episodes.jsonl", tasks);

  const auto prompts = env == harness::EnvKind::WebUI
                           ? harness::PromptSet{}
                           : harness::load_prompts(env, *harness::mode_from_name(cfg.mode));

  std::unique_ptr<harness::InteractiveAgent> interactive;
  if (cfg.agent == "interactive") {
    const auto ep = resolve_bind(cfg.bind);
    interactive = std::make_unique<harness::InteractiveAgent>(ep.host, ep.port, cfg.interactive_timeout_ms);
    log << fmt::format("interactive endpoint on http://{}:{}/ (GET /observe, POST /act)\n", ep.host,
                       interactive->port());
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> abort{false};
  std::atomic<std::size_t> finished{0};
  std::mutex err_mu;
  std::string agent_error;

  const auto worker = [&] {
    std::unique_ptr<harness::Agent> own;
    harness::Agent* agent = interactive.get();
    try {
      if (!agent) {
        own = make_agent(cfg);
        agent = own.get();
      }
      for (std::size_t t = next++; t < tasks && !abort; t = next++) {
        const std::string& id = ids[t / static_cast<std::size_t>(cfg.repeats)];
        const int repeat = static_cast<int>(t % static_cast<std::size_t>(cfg.repeats));
        const harness::EpisodeMeta meta{repeat, derive_seed({cfg.seed, hash_string(id), static_cast<std::uint64_t>(repeat)})};
        const std::size_t li = index_of.at(id);
        EpisodeResult r;
        switch (env) {
          case harness::EnvKind::Sokoban: {
            harness::SokobanEnv e(levels[li]);
            r = harness::run_episode(*agent, e, prompts, planner, meta);
            break;
          }
          case harness::EnvKind::Football: {
            football::EpisodeOptions opt;
            opt.auto_render = cfg.auto_render;
            harness::FootballEnv e(scenarios[li], opt);
            r = harness::run_episode(*agent, e, prompts, planner, meta);
            break;
          }
          case harness::EnvKind::WebUI:
            r = run_webui(*agent, pages[li], cfg, meta);
            break;
        }
        writer.put(t, std::move(r));
        const auto n = ++finished;
        if (n % 50 == 0 || n == tasks) {
          std::lock_guard lock(err_mu);
          log << fmt::format("  {}/{} episodes\n", n, tasks);
        }
      }
    } catch (const harness::AgentError& e) {
      abort = true;
      std::lock_guard lock(err_mu);
      if (agent_error.empty()) agent_error = e.what();
    }
  };

  const int nthreads = std::min<int>(cfg.workers, static_cast<int>(std::max<std::size_t>(tasks, 1)));
  std::vector<std::thread> pool;
  for (int i = 1; i < nthreads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  if (abort) {
    writer.drain();
    log << "agent error: " << agent_error << "\n";
    finish_run(cfg, ids, writer.results(), log);
    return kAgentError;
  }
  return finish_run(cfg, ids, writer.results(), log);
}

int cmd_serve(RunConfig cfg, std::ostream& log) {
  cfg.agent = "interactive";
  cfg.workers = 1;
  return cmd_run(cfg, log);
}

int cmd_score_web(const ScoreWebOptions& opt, std::ostream& out, std::ostream& log) {
  webui::ScoreWeights w;
  std::string source = "default";
  if (opt.weights) {
    std::string text;
    try {
      text = read_text_file(*opt.weights);
    } catch (const std::exception& e) {
      throw ConfigError(e.what());
    }
    const auto j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw ConfigError("weights file is not a JSON object");
    try {
      if (j.contains("alpha")) w.alpha = j["alpha"].get<std::map<std::string, double>>();
      w.default_alpha = j.value("default_alpha", w.default_alpha);
      w.beta = j.value("beta", w.beta);
    } catch (const nlohmann::json::exception&) {
      throw ConfigError("weights file has the wrong shape");
    }
    source = opt.weights->string();
  }

  ordered_json doc;
  doc["weights"] = {{"source", source}, {"alpha", w.alpha}, {"default_alpha", w.default_alpha}, {"beta", w.beta}};
  auto arr = ordered_json::array();
  std::vector<webui::AESReport> reports;
  std::vector<fs::path> gt_pages;
  try {
    gt_pages = page_dirs(opt.gt);
  } catch (const fs::filesystem_error& e) {
    throw CorpusError(e.what());
  }
  const bool single = gt_pages.size() == 1 && gt_pages.front() == opt.gt;
  for (const auto& dir : gt_pages) {
    std::vector<webui::PageSnapshot> gt;
    try {
      gt = webui::load_page_dir(gt_dir_of(dir));
    } catch (const std::exception& e) {
      throw CorpusError("bad ground truth in " + dir.string() + ": " + e.what());
    }
    const std::string id = dir.filename().string();
    const auto gen = load_gen_pages(single ? opt.gen : opt.gen / id);
    auto report = webui::aes(gen, gt, {}, w);
    arr.push_back({{"page", id}, {"report", ordered_json::parse(webui::format_report(report))}});
    log << fmt::format("{:<24} AES {:6.2f}%\n", id, report.aes_percent());
    reports.push_back(std::move(report));
  }
  doc["pages"] = std::move(arr);
  doc["summary"] = metrics::aes_summary_json(metrics::summarize_aes(reports));
  const std::string text = doc.dump(2) + "\n";
  if (opt.out) write_text_file(*opt.out, text);
  else out << text;
  return kOk;
}

int cmd_report(const ReportOptions& opt, std::ostream& out, std::ostream& log) {
  if (opt.runs.empty()) throw ConfigError("report needs at least one run directory");
  std::vector<metrics::AggregateReport> reports;
  ordered_json all = ordered_json::array();
  for (const auto& dir : opt.runs) {
    RunConfig cfg;
    if (fs::exists(dir / "config.json")) cfg = load_config(dir / "config.json");
    auto episodes = load_episodes(dir);
    std::erase_if(episodes, [](const EpisodeResult& r) { return r.termination == "awaiting_snapshots"; });
    metrics::RunSpec spec{cfg.env, cfg.mode, cfg.repeats, {cfg.seed}, {}};
    if (!episodes.empty()) {
      spec.env = episodes.front().env;
      spec.mode = episodes.front().mode;
    }
    auto rep = metrics::aggregate(episodes, spec);
    auto j = metrics::report_json(rep);
    j["run"] = dir.string();
    if (opt.samples && !rep.levels.empty()) {
      std::vector<std::vector<double>> samples;
      for (const auto& l : rep.levels) samples.push_back(l.scores);
      auto mc = ordered_json::array();
      for (const auto& [n, _] : rep.best_of_n) {
        mc.push_back({{"n", n}, {"score", metrics::best_of_n_sampled(samples, n, cfg.seed, *opt.samples)}});
      }
      j["best_of_n_sampled"] = std::move(mc);
    }
    if (!opt.json) out << dir.string() << "\n" << metrics::report_text(rep);
    all.push_back(std::move(j));
    reports.push_back(std::move(rep));
  }
  if (reports.size() == 2) {
    const auto d = metrics::paired_difference(reports[0], reports[1]);
    if (opt.json) {
      all.push_back({{"paired_difference", {{"mean", d.mean}, {"stderr", d.stderr_mean}, {"levels", d.levels}}}});
    } else {
      out << fmt::format("first - second: {:.3f} +/- {:.3f} over {} shared levels\n", d.mean, 2 * d.stderr_mean,
                         d.levels);
    }
  }
  if (opt.json) out << all.dump(2) << "\n";
  log.flush();
  return kOk;
}

}  // namespace mage::cli
