#include "torsorlab/rng.hpp"

namespace torsorlab {

namespace {

uint64_t splitmix64_step(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

uint64_t fnv1a(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace

CheckRng::CheckRng(uint64_t master_seed, std::string_view stream_label)
    : state_(master_seed ^ fnv1a(stream_label)) {
    // Burn-in decorrelates nearby seeds and labels.
    for (int i = 0; i < 4; ++i) splitmix64_step(state_);
}

uint64_t CheckRng::next() { return splitmix64_step(state_); }

uint64_t CheckRng::below(uint64_t bound) {
    if (bound <= 1) return 0;
    uint64_t mask = ~uint64_t{0};
    int bits = 64 - __builtin_clzll(bound - 1);
    mask = bits == 64 ? mask : (uint64_t{1} << bits) - 1;
    while (true) {
        uint64_t v = next() & mask;
        if (v < bound) return v;
    }
}

Subset CheckRng::subset(const GroupRef& g) {
    Subset out(g);
    int n = g->order();
    uint64_t bits = 0;
    for (Element e = 0; e < n; ++e) {
        if (e % 64 == 0) bits = next();
        if ((bits >> (e % 64)) & 1) out.insert(e);
    }
    return out;
}

}  // namespace torsorlab
