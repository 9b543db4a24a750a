#include "matchpoly/guards.hpp"

#include <cstdlib>
#include <string>

namespace matchpoly::guards {

namespace {

int env_override() {
    static const int value = [] {
        const char* s = std::getenv("MATCHPOLY_MAX_ORDER");
        if (s == nullptr) return 0;
        try {
            const int v = std::stoi(s);
            return v > 0 ? v : 0;
        } catch (...) {
            return 0;
        }
    }();
    return value;
}

}  // namespace

int max_matching_order() {
    const int o = env_override();
    return o > 16 ? o : 16;
}

int max_subset_order() {
    const int o = env_override();
    return o > 20 ? o : 20;
}

}  // namespace matchpoly::guards
