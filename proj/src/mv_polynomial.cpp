#include "sga/mv_polynomial.hpp"

#include <sstream>

namespace sga {

std::string MvPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [ex, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        for (int k = 0; k < nvars_; ++k) {
            const unsigned e = ex[std::size_t(k)];
            if (e == 0) continue;
            os << "*x" << k;
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace sga
