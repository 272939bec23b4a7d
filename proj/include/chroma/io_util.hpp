#pragma once

#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "chroma/common.hpp"

namespace chroma {

// Writes via a sibling temp file and renames into place, so readers never see
// a partially written file under the final name.
inline void atomic_write(const std::string& path,
                         const std::function<void(std::ostream&)>& writer,
                         bool binary = false) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, binary ? std::ios::binary : std::ios::out);
    if (!out) throw DataError(tmp.string() + ": cannot open for writing");
    writer(out);
    out.flush();
    if (!out) throw DataError(tmp.string() + ": write failed");
  }
  fs::rename(tmp, target);
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(path + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string to_lower(std::string s) {
  for (char& c : s)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  return s;
}

}  // namespace chroma
