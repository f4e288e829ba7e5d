#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "magebench/webui/snapshot.hpp"

namespace mage::webui {

// {action_id, status, viewport:{w,h}, elements:[{tag, bbox:[x,y,w,h],
// children, filter_by, eval_by:[...], attributes:{name:value}}]}
std::string format_page(const PageSnapshot& page);
PageSnapshot parse_page(const std::string& text);

PageSnapshot load_page(const std::filesystem::path& path);
void save_page(const std::filesystem::path& path, const PageSnapshot& page);

// Every *.json snapshot in a directory; "initial" first, the rest by action id.
std::vector<PageSnapshot> load_page_dir(const std::filesystem::path& dir);

}  // namespace mage::webui
