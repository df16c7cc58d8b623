#include "netgeo/threading.hpp"

#include <cstdlib>
#include <string>

namespace netgeo {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("NETGEO_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace netgeo
