#include "springer/bounds.hpp"

#include <cstdlib>
#include <string>

namespace springer {

static Bounds make_default() {
    Bounds b;
    if (const char* env = std::getenv("SPRINGER_KIT_MAX_N")) {
        try {
            int v = std::stoi(env);
            if (v > 0) {
                b.tableau_enum = v;
                b.pattern_enum = v;
            }
        } catch (...) {
            // ignore malformed values, keep defaults
        }
    }
    return b;
}

Bounds& bounds() {
    static Bounds b = make_default();
    return b;
}

} // namespace springer
