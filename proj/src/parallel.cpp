#include "schur/parallel.hpp"

#include <cstdlib>
#include <string>

namespace schur {

unsigned thread_budget() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* cap = std::getenv("SCHUR_REGIONS_THREADS")) {
        try {
            const long v = std::stol(cap);
            if (v >= 1 && static_cast<unsigned>(v) < hw) hw = static_cast<unsigned>(v);
        } catch (...) {
            // unparsable cap: ignore
        }
    }
    return hw;
}

}  // namespace schur
