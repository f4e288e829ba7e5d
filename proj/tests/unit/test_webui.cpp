#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <numeric>
#include <random>

#include "magebench/webui/attributes.hpp"
#include "magebench/webui/geometry.hpp"
#include "magebench/webui/hungarian.hpp"
#include "magebench/webui/matching.hpp"
#include "magebench/webui/pso.hpp"
#include "magebench/webui/scoring.hpp"
#include "magebench/webui/snapshot_io.hpp"
#include "support/assignment_oracle.hpp"
#include "support/webui_synth.hpp"

using namespace mage::webui;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = fs::path(MAGEBENCH_TEST_FIXTURES) / "webui";

std::vector<fs::path> fixture_dirs() {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(kFixtures))
    if (e.is_directory()) out.push_back(e.path() / "gt");
  std::sort(out.begin(), out.end());
  return out;
}

ElementSnapshot text_el(BBox b, std::string text, int children = 0, bool atomic = true) {
  ElementSnapshot e;
  e.tag = "span";
  e.bbox = b;
  e.attributes["text"] = std::move(text);
  e.children = children;
  if (atomic) {
    e.filter_by = "text";
    e.eval_by = {"text"};
  }
  return e;
}

}  // namespace

TEST_CASE("giou examples") {
  CHECK(giou({0, 0, 2, 2}, {0, 0, 2, 2}) == 1.0);
  CHECK(giou({0, 0, 2, 2}, {2, 0, 2, 2}) == 0.0);
  CHECK(giou({0, 0, 1, 1}, {9, 9, 1, 1}) == doctest::Approx(-0.98).epsilon(1e-15));
  CHECK(giou({5, 5, 0, 0}, {5, 5, 0, 0}) == 1.0);
  CHECK(giou({0, 0, 0, 0}, {3, 4, 0, 0}) == -1.0);
}

TEST_CASE("giou is symmetric and bounded") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> pos(-50, 50), size(0, 40);
  for (int i = 0; i < 5000; ++i) {
    const BBox a{pos(rng), pos(rng), size(rng), size(rng)};
    const BBox b{pos(rng), pos(rng), size(rng), size(rng)};
    const double g = giou(a, b);
    CHECK(g == doctest::Approx(giou(b, a)).epsilon(1e-12));
    CHECK(g >= -1.0);
    CHECK(g <= 1.0);
    CHECK(giou(a, a) == 1.0);
  }
}

TEST_CASE("attribute similarity by kind") {
  CHECK(attr_similarity(AttrKind::Text, "hello world", "hello world") == 1.0);
  CHECK(attr_similarity(AttrKind::Text, "hello world", "hello there") == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(attr_similarity(AttrKind::Continuous, "10px", "5px") == 0.5);
  CHECK(attr_similarity(AttrKind::Continuous, "10px", "25px") == 0.0);
  CHECK(attr_similarity(AttrKind::Continuous, "10px", "10em") == 0.0);
  CHECK(attr_similarity(AttrKind::Continuous, "0px", "0") == 1.0);
  CHECK(attr_similarity(AttrKind::Continuous, "1.5em", "1.2em") == doctest::Approx(0.8));
  CHECK(attr_similarity(AttrKind::Color, "black", "white") == doctest::Approx(1.0 - 255.0 / 256.0).epsilon(1e-15));
  CHECK(attr_similarity(AttrKind::Color, "#fff", "rgb(255, 255, 255)") == 1.0);
  CHECK(attr_similarity(AttrKind::Color, "rgba(16, 185, 129, 1)", "#10b981") == 1.0);
  CHECK(attr_similarity(AttrKind::Discrete, "solid", "dashed") == 0.0);
  CHECK(attr_similarity(AttrKind::Discrete, "solid", "solid") == 1.0);

  CHECK(kind_of("font-size") == AttrKind::Continuous);
  CHECK(kind_of("border-color") == AttrKind::Color);
  CHECK(kind_of("text") == AttrKind::Text);
  CHECK(kind_of("display") == AttrKind::Discrete);
  CHECK(kind_of("data-whatever") == AttrKind::Discrete);

  const std::vector<std::string> samples = {"", "a b", "12px", "#123456", "rgb(1,2,3)", "block", "-3em", "0"};
  for (AttrKind k : {AttrKind::Text, AttrKind::Continuous, AttrKind::Discrete, AttrKind::Color}) {
    for (const auto& a : samples) {
      CHECK(attr_similarity(k, a, a) == 1.0);
      for (const auto& b : samples) {
        const double s = attr_similarity(k, a, b);
        CHECK(s >= 0.0);
        CHECK(s <= 1.0);
      }
    }
  }
}

TEST_CASE("match score: identity, container penalty, filter") {
  const MatchConfig cfg;
  const auto gt = text_el({0, 0, 100, 20}, "example text tags");
  CHECK(match_score(gt, gt, cfg) == 1.0);
  const auto container = text_el({0, 0, 100, 20}, "example text tags", 1, false);
  CHECK(match_score(container, gt, cfg) == doctest::Approx(1.0 - 1e-3).epsilon(1e-15));
  const auto wrong = text_el({0, 0, 100, 20}, "example not match", 0, false);
  CHECK(match_score(wrong, gt, cfg) == 0.0);

  PageSnapshot gen, truth;
  truth.elements = {gt};
  gen.elements = {wrong, container, text_el({0, 0, 100, 20}, "example text tags", 0, false),
                  text_el({0, 30, 100, 20}, "example not match 1", 0, false)};
  const auto m = match_elements(gen, truth, cfg);
  REQUIRE(m.gen_for_atom.size() == 1);
  CHECK(m.gen_for_atom[0] == std::size_t{2});
}

TEST_CASE("hungarian matches brute force") {
  std::mt19937_64 rng(17);
  CHECK(maximize_assignment({{1, 0}, {0, 1}}).row_to_col == std::vector<int>{0, 1});
  for (int trial = 0; trial < 400; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 6), cols = 1 + static_cast<int>(rng() % 6);
    std::vector<std::vector<double>> w(rows, std::vector<double>(cols));
    for (auto& r : w)
      for (auto& x : r) x = static_cast<double>(static_cast<int>(rng() % 41) - 20);
    const auto a = maximize_assignment(w);
    CHECK(a.value == oracle::brute_force_assignment(w));
    std::vector<int> used;
    for (int c : a.row_to_col)
      if (c >= 0) used.push_back(c);
    CHECK(static_cast<int>(used.size()) == std::min(rows, cols));
    std::sort(used.begin(), used.end());
    CHECK(std::adjacent_find(used.begin(), used.end()) == used.end());
  }
}

TEST_CASE("fixtures score 100% against themselves") {
  const auto dirs = fixture_dirs();
  REQUIRE(dirs.size() >= 3);
  for (const auto& d : dirs) {
    const auto pages = load_page_dir(d);
    REQUIRE_FALSE(pages.empty());
    CHECK(pages.front().action_id == "initial");
    const auto r = aes(pages, pages, {}, {});
    CHECK(r.aes == kMicroPercentTotal);
    CHECK(r.total() == kMicroPercentTotal);
    for (const auto& p : r.pages) CHECK(p.s_act == 1.0);
  }
}

TEST_CASE("perturbing any single evaluated attribute lowers the score") {
  const MatchConfig cfg;
  const ScoreWeights w;
  for (const auto& d : fixture_dirs()) {
    const auto gt = load_page_dir(d);
    for (std::size_t p = 0; p < gt.size(); ++p) {
      for (std::size_t e = 0; e < gt[p].elements.size(); ++e) {
        for (const auto& attr : gt[p].elements[e].eval_by) {
          auto gen = gt;
          auto& v = gen[p].elements[e].attributes[attr];
          switch (kind_of(attr)) {
            case AttrKind::Continuous: v = "999px"; break;
            case AttrKind::Color: v = v == "#000000" ? "#ffffff" : "#000000"; break;
            default: v += " changed"; break;
          }
          const auto r = aes(gen, gt, cfg, w);
          INFO(d.string(), " ", gt[p].action_id, " ", e, " ", attr);
          CHECK(r.aes < kMicroPercentTotal);
          CHECK(r.total() == kMicroPercentTotal);
        }
      }
    }
  }
}

TEST_CASE("element order does not matter and removals never help") {
  std::mt19937_64 rng(8);
  for (const auto& d : fixture_dirs()) {
    const auto gt = load_page_dir(d);
    auto gen = gt;
    // mild degradation so scores are not trivially 100
    for (auto& page : gen)
      for (auto& e : page.elements)
        if (e.attributes.count("font-size")) e.attributes["font-size"] = "15px";
    const auto base = aes(gen, gt, {}, {});
    for (int k = 0; k < 5; ++k) {
      auto shuffled = gen;
      for (auto& page : shuffled) std::shuffle(page.elements.begin(), page.elements.end(), rng);
      CHECK(aes(shuffled, gt, {}, {}).aes == base.aes);
    }
    for (std::size_t e = 0; e < gen[0].elements.size(); ++e) {
      auto removed = gen;
      removed[0].elements.erase(removed[0].elements.begin() + static_cast<long>(e));
      CHECK(aes(removed, gt, {}, {}).aes <= base.aes);
    }
  }
}

TEST_CASE("status handling and loss buckets") {
  const auto gt = load_page_dir(kFixtures / "landing" / "gt");
  REQUIRE(gt.size() == 2);
  SUBCASE("initial render failure zeroes everything") {
    auto gen = gt;
    gen[0].status = PageStatus::RenderError;
    gen[0].elements.clear();
    const auto r = aes(gen, gt, {}, {});
    CHECK(r.aes == 0);
    CHECK(r.render == kMicroPercentTotal);
  }
  SUBCASE("parse failure") {
    std::vector<PageSnapshot> gen(1);
    gen[0].status = PageStatus::ParseError;
    const auto r = aes(gen, gt, {}, {});
    CHECK(r.aes == 0);
    CHECK(r.parse == kMicroPercentTotal);
  }
  SUBCASE("failed interaction loses only that page") {
    auto gen = gt;
    gen[1].status = PageStatus::InteractionError;
    gen[1].elements.clear();
    const auto r = aes(gen, gt, {}, {});
    CHECK(r.aes == kMicroPercentTotal / 2);
    CHECK(r.action == kMicroPercentTotal / 2);
    CHECK(r.pages[0].s_act == 1.0);
    CHECK(r.pages[1].s_act == 0.0);
    auto missing = gt;
    missing.pop_back();
    CHECK(aes(missing, gt, {}, {}).action == kMicroPercentTotal / 2);
  }
  SUBCASE("unmatched atoms land in the match bucket with their weighted share") {
    PageSnapshot truth;
    truth.elements = {text_el({0, 0, 10, 10}, "a"), text_el({0, 20, 20, 20}, "b"), text_el({0, 50, 30, 10}, "c"),
                      text_el({0, 70, 40, 40}, "d")};
    PageSnapshot gen = truth;
    gen.elements.erase(gen.elements.begin() + 1);
    gen.elements.erase(gen.elements.begin() + 2);  // drops "b" and "d"
    ScoreWeights w;
    w.beta = 1.0;
    const auto r = aes({gen}, {truth}, {}, w);
    const double total = 100 + 400 + 300 + 1600;
    const double share = (400 + 1600) / total * 100.0;
    CHECK(r.match == static_cast<std::int64_t>(std::llround(share * 1e6)));
    CHECK(r.aes == static_cast<std::int64_t>(std::llround((100.0 - share) * 1e6)));
    CHECK(r.attr == 0);
    CHECK(r.total() == kMicroPercentTotal);
  }
  SUBCASE("buckets always add up") {
    std::mt19937_64 rng(99);
    for (int k = 0; k < 200; ++k) {
      auto gen = gt;
      for (auto& page : gen) {
        for (auto& e : page.elements) {
          if (rng() % 3 == 0) e.bbox.x += static_cast<double>(rng() % 300);
          for (auto& [name, v] : e.attributes)
            if (rng() % 4 == 0) v = kind_of(name) == AttrKind::Continuous ? std::to_string(rng() % 50) + "px" : "x";
        }
        if (rng() % 4 == 0) page.elements.resize(page.elements.size() / 2);
      }
      if (rng() % 5 == 0) gen[1].status = PageStatus::InteractionError;
      ScoreWeights w;
      w.beta = (rng() % 200) / 100.0;
      const auto r = aes(gen, gt, {}, w);
      CHECK(r.total() == kMicroPercentTotal);
      CHECK(r.aes >= 0);
      CHECK(r.attr >= 0);
    }
  }
}

TEST_CASE("snapshot documents round-trip and are validated") {
  for (const auto& d : fixture_dirs())
    for (const auto& p : load_page_dir(d)) CHECK(parse_page(format_page(p)) == p);
  CHECK_THROWS_AS(parse_page(R"({"action_id":"initial","status":"OK","elements":[]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_page(R"({"elements":[{"tag":"p","bbox":[0,0,1,1],"eval_by":["color"],"attributes":{}}]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_page(R"({"elements":[{"tag":"p","bbox":[0,0,-1,1]}]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_page(R"({"status":"Weird","elements":[]})"), std::invalid_argument);
  const auto p = parse_page(R"({"elements":[{"tag":"p","bbox":[0,0,1,1],"eval_by":["font-size"],"attributes":{"font-size":12}}]})");
  CHECK(p.elements[0].attributes.at("font-size") == "12");
}

TEST_CASE("weight search") {
  SUBCASE("a single separable pair is always agreed with") {
    PageSnapshot gt;
    gt.elements = {text_el({0, 0, 100, 20}, "one two three four")};
    auto good = gt, bad = gt;
    bad.elements[0].attributes["text"] = "one other words here";
    const auto task = make_task({gt}, {{bad}, {good}}, {{1, 0}});
    const auto r = pso_search({task});
    CHECK(r.agreement == 1.0);
  }
  SUBCASE("empty input is rejected") {
    CHECK_THROWS_AS(pso_search({}), std::invalid_argument);
    PreferenceTask t;
    CHECK_THROWS_AS(pso_search({t}), std::invalid_argument);
  }
  SUBCASE("search beats random weights on synthetic rankings and is reproducible") {
    const auto tasks = synth::make_tasks(42);
    PsoConfig cfg;
    cfg.seed = 42;
    const auto a = pso_search(tasks, cfg);
    CHECK(a.agreement >= 0.9);
    CHECK(a.agreement > random_weight_agreement(tasks, cfg, 20));
    CHECK(std::is_sorted(a.best_by_iteration.begin(), a.best_by_iteration.end()));
    cfg.threads = 3;
    const auto b = pso_search(tasks, cfg);
    CHECK(b.agreement == a.agreement);
    CHECK(b.weights.alpha == a.weights.alpha);
    CHECK(b.weights.beta == a.weights.beta);
  }
}
