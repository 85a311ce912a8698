#include "tchrom/limits.hpp"

#include <cstdlib>
#include <string>

namespace tchrom {

namespace {

Limits from_env() {
    Limits l;
    if (const char* env = std::getenv("TCHROM_MAX_N")) {
        try {
            int n = std::stoi(env);
            if (n > 0) {
                l.max_labeling_vertices = n;
                l.max_total_label_vertices = n;
                l.max_coloring_vertices = n;
                l.max_tree_vertices = n;
            }
        } catch (const std::exception&) {
            // malformed value: keep defaults
        }
    }
    return l;
}

Limits g_limits = from_env();

}  // namespace

const Limits& limits() {
    return g_limits;
}

void set_limits(const Limits& l) {
    g_limits = l;
}

}  // namespace tchrom
