#ifndef TPHS_DATAPATH_HPP
#define TPHS_DATAPATH_HPP

#include <string>

namespace tphs {

/// Directory holding the shipped data files (relation tables under
/// relations/, octonion tables under octonion/).  Resolution order:
/// $TPHS_DATA_DIR, the installed share directory, the source tree.
/// Throws InvariantError when none of them exists.
std::string data_dir();

/// data_dir() joined with a relative path, e.g. "relations/quat.rel".
std::string data_file(const std::string& relative);

}  // namespace tphs

#endif  // TPHS_DATAPATH_HPP
