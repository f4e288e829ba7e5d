#include "magebench/webui/snapshot_io.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"
#include "magebench/common/assets.hpp"

namespace mage::webui {

namespace {
using ojson = nlohmann::ordered_json;

std::string value_text(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}
}  // namespace

std::string_view status_name(PageStatus s) {
  switch (s) {
    case PageStatus::OK: return "OK";
    case PageStatus::ParseError: return "ParseError";
    case PageStatus::RenderError: return "RenderError";
    case PageStatus::InteractionError: return "InteractionError";
  }
  return "?";
}

std::optional<PageStatus> status_from_name(std::string_view name) {
  for (auto s : {PageStatus::OK, PageStatus::ParseError, PageStatus::RenderError, PageStatus::InteractionError})
    if (status_name(s) == name) return s;
  return std::nullopt;
}

void validate(const PageSnapshot& page) {
  if (page.status == PageStatus::OK && page.elements.empty())
    throw std::invalid_argument("snapshot '" + page.action_id + "': OK page without elements");
  for (const auto& e : page.elements) {
    if (e.bbox.w < 0 || e.bbox.h < 0) throw std::invalid_argument("snapshot: negative bbox size on <" + e.tag + ">");
    if (e.filter_by && !e.attributes.count(*e.filter_by))
      throw std::invalid_argument("snapshot: filter_by '" + *e.filter_by + "' missing on <" + e.tag + ">");
    for (const auto& a : e.eval_by)
      if (!e.attributes.count(a)) throw std::invalid_argument("snapshot: eval_by '" + a + "' missing on <" + e.tag + ">");
  }
}

std::string format_page(const PageSnapshot& page) {
  ojson j;
  j["action_id"] = page.action_id;
  j["status"] = status_name(page.status);
  j["viewport"] = {{"w", page.viewport_w}, {"h", page.viewport_h}};
  ojson els = ojson::array();
  for (const auto& e : page.elements) {
    ojson je;
    je["tag"] = e.tag;
    je["bbox"] = {e.bbox.x, e.bbox.y, e.bbox.w, e.bbox.h};
    je["children"] = e.children;
    je["filter_by"] = e.filter_by ? ojson(*e.filter_by) : ojson(nullptr);
    je["eval_by"] = e.eval_by;
    ojson attrs = ojson::object();
    for (const auto& [k, v] : e.attributes) attrs[k] = v;
    je["attributes"] = std::move(attrs);
    els.push_back(std::move(je));
  }
  j["elements"] = std::move(els);
  return j.dump(2) + "\n";
}

PageSnapshot parse_page(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  PageSnapshot p;
  p.action_id = j.value("action_id", std::string("initial"));
  const auto st = status_from_name(j.value("status", std::string("OK")));
  if (!st) throw std::invalid_argument("snapshot: unknown status");
  p.status = *st;
  if (j.contains("viewport")) {
    p.viewport_w = j["viewport"].value("w", 0);
    p.viewport_h = j["viewport"].value("h", 0);
  }
  for (const auto& je : j.value("elements", nlohmann::json::array())) {
    ElementSnapshot e;
    e.tag = je.value("tag", std::string{});
    const auto& b = je.at("bbox");
    if (!b.is_array() || b.size() != 4) throw std::invalid_argument("snapshot: bbox must be [x, y, w, h]");
    e.bbox = {b[0].get<double>(), b[1].get<double>(), b[2].get<double>(), b[3].get<double>()};
    e.children = je.value("children", 0);
    if (je.contains("filter_by") && !je["filter_by"].is_null()) e.filter_by = je["filter_by"].get<std::string>();
    if (je.contains("eval_by")) e.eval_by = je["eval_by"].get<std::vector<std::string>>();
    if (je.contains("attributes"))
      for (const auto& [k, v] : je["attributes"].items()) e.attributes[k] = value_text(v);
    p.elements.push_back(std::move(e));
  }
  validate(p);
  return p;
}

PageSnapshot load_page(const std::filesystem::path& path) { return parse_page(read_text_file(path)); }

void save_page(const std::filesystem::path& path, const PageSnapshot& page) { write_text_file(path, format_page(page)); }

std::vector<PageSnapshot> load_page_dir(const std::filesystem::path& dir) {
  std::vector<PageSnapshot> pages;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") pages.push_back(load_page(entry.path()));
  }
  std::sort(pages.begin(), pages.end(), [](const PageSnapshot& a, const PageSnapshot& b) {
    const bool ai = a.action_id == "initial", bi = b.action_id == "initial";
    if (ai != bi) return ai;
    return a.action_id < b.action_id;
  });
  return pages;
}

}  // namespace mage::webui
