#pragma once

#include <filesystem>
#include <string>

namespace mage {

// Root of the shipped data files (prompts, football fixtures). The
// MAGEBENCH_ASSETS environment variable overrides the compiled-in path.
std::filesystem::path asset_root();

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace mage
