#include "schubert/cache.hpp"

#include <filesystem>
#include <fstream>

namespace schubert {

namespace {
constexpr const char* magic = "schubert-bruhat-cache";
}

std::string bruhat_cache_path(const RootSystem& rs, const std::string& dir) {
  return dir + "/" + rs.type().to_string() + ".bruhat";
}

bool load_bruhat_cache(const WeylGroup& wg, const std::string& dir) {
  std::ifstream in(bruhat_cache_path(wg.root_system(), dir));
  if (!in) return false;
  std::string tag, version, type;
  size_t count = 0;
  if (!(in >> tag >> version >> type >> count)) return false;
  if (tag != magic || version != library_version ||
      type != wg.root_system().type().to_string() || count != wg.size())
    return false;
  std::string bits;
  if (!(in >> bits) || bits.size() != count * count) return false;
  std::vector<bool> table(count * count);
  for (size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') return false;
    table[i] = bits[i] == '1';
  }
  return wg.install_bruhat_table(std::move(table));
}

bool save_bruhat_cache(const WeylGroup& wg, const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const std::vector<bool>* table = wg.bruhat_table();
  std::ofstream out(bruhat_cache_path(wg.root_system(), dir));
  if (!out) return false;
  out << magic << ' ' << library_version << ' ' << wg.root_system().type().to_string()
      << ' ' << wg.size() << '\n';
  std::string bits(table->size(), '0');
  for (size_t i = 0; i < table->size(); ++i)
    if ((*table)[i]) bits[i] = '1';
  out << bits << '\n';
  return static_cast<bool>(out);
}

void attach_bruhat_cache(const WeylGroup& wg, const std::string& dir) {
  if (dir.empty()) return;
  if (!load_bruhat_cache(wg, dir)) save_bruhat_cache(wg, dir);
}

}  // namespace schubert
