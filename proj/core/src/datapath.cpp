#include "tphs/datapath.hpp"

#include <cstdlib>
#include <filesystem>

#include "tphs/errors.hpp"

namespace tphs {

std::string data_dir() {
  if (const char* env = std::getenv("TPHS_DATA_DIR")) {
    if (std::filesystem::is_directory(env)) return env;
    throw InvariantError(std::string("TPHS_DATA_DIR is not a directory: ") + env);
  }
#ifdef TPHS_INSTALL_DATA_DIR
  if (std::filesystem::is_directory(TPHS_INSTALL_DATA_DIR)) return TPHS_INSTALL_DATA_DIR;
#endif
#ifdef TPHS_SOURCE_DATA_DIR
  if (std::filesystem::is_directory(TPHS_SOURCE_DATA_DIR)) return TPHS_SOURCE_DATA_DIR;
#endif
  throw InvariantError("no data directory found; set TPHS_DATA_DIR");
}

std::string data_file(const std::string& relative) {
  return data_dir() + "/" + relative;
}

}  // namespace tphs
