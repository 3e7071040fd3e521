#ifndef LOGSUM_CSV_HPP
#define LOGSUM_CSV_HPP

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace logsum {

// 17-significant-digit decimal rendering, '.' separator.
std::string format_double(double v);

// `# key=value` metadata lines (effective config + build id), LF endings.
void write_metadata(std::ostream& os, const std::vector<std::pair<std::string, std::string>>& kv);

// One CSV row; doubles pre-rendered by the caller via format_double.
void write_row(std::ostream& os, const std::vector<std::string>& cells);

const char* build_id();

}  // namespace logsum

#endif
