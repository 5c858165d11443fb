#include "leibconf/report.hpp"

#include <sstream>

namespace leibconf {

std::string join_names(const std::vector<std::string>& names, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < names.size(); ++i) {
        if (i) out += sep;
        out += names[i];
    }
    return out;
}

std::string CheckReport::summary() const {
    std::ostringstream os;
    os << check << ": " << (pass() ? "pass" : "FAIL") << " (" << checked << " identities checked";
    if (!pass()) os << ", " << failures.size() << " failed";
    os << ")";
    if (!pass()) {
        size_t shown = 0;
        for (const auto& f : failures) {
            if (shown++ == 8) {
                os << "\n  ...";
                break;
            }
            os << "\n  " << f.identity << " at (" << join_names(f.where) << "): " << f.residual;
        }
    }
    return os.str();
}

}  // namespace leibconf
