#include "logsum/csv.hpp"

#include <cstdio>

namespace logsum {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_metadata(std::ostream& os, const std::vector<std::pair<std::string, std::string>>& kv) {
    os << "# build=" << build_id() << "\n";
    for (const auto& [k, v] : kv) os << "# " << k << "=" << v << "\n";
}

void write_row(std::ostream& os, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) os << ',';
        os << cells[i];
    }
    os << '\n';
}

const char* build_id() {
#ifdef LOGSUM_BUILD_ID
    return LOGSUM_BUILD_ID;
#else
    return "logsum-dev";
#endif
}

}  // namespace logsum
