#include "permres/hecke.hpp"

namespace permres {

std::string render(const HeckeElement<LaurentRing>& h) {
    if (h.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : h.sorted_terms()) {
        os << (first ? "" : " + ") << "(" << c.to_string() << ") * T" << w.to_string();
        first = false;
    }
    return os.str();
}

}  // namespace permres
