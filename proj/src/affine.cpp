#include "torsorlab/affine.hpp"

#include "torsorlab/rng.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace torsorlab {

namespace {

void require_same_shape(const MapGraph& f, const MapGraph& h, const char* what) {
    if (!(f.domain == h.domain) || !(f.codomain == h.codomain))
        throw std::invalid_argument(std::string(what) + ": maps must share domain and codomain");
}

}  // namespace

MapGraph add_section_maps(const MapGraph& f, const MapGraph& h) {
    require_same_shape(f, h, "add_section_maps");
    if (!is_subgroup(f.codomain))
        throw std::invalid_argument("add_section_maps: codomain must be a subgroup");
    const GroupRef& g = f.domain.group();
    MapGraph out(f.domain, f.codomain);
    for (Element e : f.domain.elements()) out.set(e, g->add(f(e), h(e)));
    return out;
}

MapGraph affine_product(const MapGraph& X, const MapGraph& Z, const Subset& a, const Subset& y,
                        const Subset& b) {
    require_same_shape(X, Z, "affine_product");
    if (!(X.domain == y) || !(X.codomain == b))
        throw std::invalid_argument("affine_product: maps must go from y to b");
    if (!is_subgroup(b)) throw std::invalid_argument("affine_product: codomain must be a subgroup");
    const GroupRef& g = y.group();
    const Subset x = graph_of_map(X, GraphSide::left);
    const CanonicalKernel kernel = canonical_kernel(a, x, y, b);
    MapGraph out(y, b);
    for (Element eta : y.elements()) out.set(eta, g->add(X(eta), Z(kernel.B(eta))));
    return out;
}

MapGraph kernel_shift(const Subset& a, const Subset& x, const Subset& y, const Subset& b) {
    ElementMap xpart = proj(x, b, Side::right);  // x ⊤ b
    ElementMap ypart = proj(a, y, Side::left);   // a ⊤ y
    return restrict_map(compose(ypart, xpart), y, y);
}

namespace {

// Shared scan for the two distributivity variants. The evaluator returns the
// two sides for one tuple (x, y, u, v, w).
DistributivityVerdict scan_distributivity(
    const GroupRef& g, const Subset& a, const Subset& b, const CheckMode& mode,
    const char* stream_tag,
    const std::function<std::pair<Subset, Subset>(const Subset&, const Subset&, const Subset&,
                                                  const Subset&, const Subset&)>& sides) {
    DistributivityVerdict verdict;

    std::vector<Subset> sections_b = left_transversal_set(g, b);
    std::vector<Subset> common;
    for (const Subset& s : sections_b)
        if (is_left_transversal(a, s)) common.push_back(s);

    if (common.empty() || sections_b.empty()) {
        verdict.mode = "empty-domain";
        return verdict;
    }

    const long long nc = static_cast<long long>(common.size());
    const long long nb = static_cast<long long>(sections_b.size());
    long long total = 1;
    bool over = false;
    for (long long f : {nc, nc, nb, nb, nb}) {
        total *= f;
        if (total > mode.exhaustive_budget) {
            over = true;
            break;
        }
    }

    auto run_tuple = [&](const Subset& x, const Subset& y, const Subset& u, const Subset& v,
                         const Subset& w) {
        auto [lhs, rhs] = sides(x, y, u, v, w);
        ++verdict.cases;
        if (!(lhs == rhs)) {
            verdict.holds = false;
            verdict.witness = {x, y, u, v, w};
            verdict.sides = {lhs, rhs};
            return false;
        }
        return true;
    };

    if (mode.exhaustive && !over) {
        verdict.mode = "exhaustive";
        for (const Subset& x : common)
            for (const Subset& y : common)
                for (const Subset& u : sections_b)
                    for (const Subset& v : sections_b)
                        for (const Subset& w : sections_b)
                            if (!run_tuple(x, y, u, v, w)) return verdict;
        return verdict;
    }

    verdict.mode = "seeded(" + std::to_string(mode.samples) + ",seed=" +
                   std::to_string(mode.seed) + ")";
    CheckRng rng(mode.seed, std::string(mode.stream_label) + "/" + stream_tag);
    for (long long i = 0; i < mode.samples; ++i) {
        const Subset& x = common[rng.below(common.size())];
        const Subset& y = common[rng.below(common.size())];
        const Subset& u = sections_b[rng.below(sections_b.size())];
        const Subset& v = sections_b[rng.below(sections_b.size())];
        const Subset& w = sections_b[rng.below(sections_b.size())];
        if (!run_tuple(x, y, u, v, w)) return verdict;
    }
    return verdict;
}

}  // namespace

DistributivityVerdict check_left_distributive(const GroupRef& g, const Subset& a, const Subset& b,
                                              const CheckMode& mode) {
    return scan_distributivity(
        g, a, b, mode, "left-distributive",
        [&](const Subset& x, const Subset& y, const Subset& u, const Subset& v, const Subset& w) {
            Subset lhs = gamma(x, a, y, b, sigma(b, u, v, w));
            Subset rhs =
                sigma(b, gamma(x, a, y, b, u), gamma(x, a, y, b, v), gamma(x, a, y, b, w));
            return std::make_pair(lhs, rhs);
        });
}

DistributivityVerdict check_right_distributive(const GroupRef& g, const Subset& a, const Subset& b,
                                               const CheckMode& mode) {
    return scan_distributivity(
        g, a, b, mode, "right-distributive",
        [&](const Subset& x, const Subset& y, const Subset& u, const Subset& v, const Subset& w) {
            Subset lhs = gamma(sigma(b, u, v, w), a, x, b, y);
            Subset rhs =
                sigma(b, gamma(u, a, x, b, y), gamma(v, a, x, b, y), gamma(w, a, x, b, y));
            return std::make_pair(lhs, rhs);
        });
}

FiniteMap zero_map(const GroupRef& src, const GroupRef& dst) {
    FiniteMap f(src, dst);
    std::fill(f.value.begin(), f.value.end(), dst->identity());
    return f;
}

FiniteMap identity_finite_map(const GroupRef& g) {
    FiniteMap f(g, g);
    for (int e = 0; e < g->order(); ++e) f.value[e] = e;
    return f;
}

bool is_homomorphism(const FiniteMap& f) {
    const int n = f.src->order();
    for (Element u = 0; u < n; ++u)
        for (Element v = 0; v < n; ++v)
            if (f(f.src->add(u, v)) != f.dst->add(f(u), f(v))) return false;
    return true;
}

FiniteMap compose(const FiniteMap& f, const FiniteMap& h) {
    require_same_group(h.dst, f.src, "compose: codomain of the inner map");
    FiniteMap out(h.src, f.dst);
    for (int e = 0; e < h.src->order(); ++e) out.value[e] = f(h(e));
    return out;
}

FiniteMap add_maps(const FiniteMap& f, const FiniteMap& h) {
    require_same_group(f.src, h.src, "add_maps: domains");
    require_same_group(f.dst, h.dst, "add_maps: codomains");
    FiniteMap out(f.src, f.dst);
    for (int e = 0; e < f.src->order(); ++e) out.value[e] = f.dst->add(f(e), h(e));
    return out;
}

FiniteMap neg_map(const FiniteMap& f) {
    FiniteMap out(f.src, f.dst);
    for (int e = 0; e < f.src->order(); ++e) out.value[e] = f.dst->neg(f(e));
    return out;
}

bool is_bijective(const FiniteMap& f) {
    if (f.src->order() != f.dst->order()) return false;
    std::vector<char> hit(static_cast<size_t>(f.dst->order()), 0);
    for (Element v : f.value) {
        if (hit[v]) return false;
        hit[v] = 1;
    }
    return true;
}

std::vector<FiniteMap> enumerate_homomorphisms(const GroupRef& src, const GroupRef& dst,
                                               long long cap) {
    long long count = 1;
    for (int i = 0; i < src->order(); ++i) {
        count *= dst->order();
        if (count > cap)
            throw CorpusLimitError("enumerate_homomorphisms: " + std::to_string(dst->order()) +
                                   "^" + std::to_string(src->order()) + " maps exceed cap " +
                                   std::to_string(cap));
    }
    std::vector<FiniteMap> homs;
    for (long long idx = 0; idx < count; ++idx) {
        FiniteMap f(src, dst);
        long long rest = idx;
        for (int e = 0; e < src->order(); ++e) {
            f.value[e] = static_cast<Element>(rest % dst->order());
            rest /= dst->order();
        }
        if (is_homomorphism(f)) homs.push_back(std::move(f));
    }
    return homs;
}

FiniteMap base_change(const FiniteMap& X, const FiniteMap& A) {
    require_same_group(A.src, X.dst, "base_change: twist domain");
    require_same_group(A.dst, X.src, "base_change: twist codomain");
    FiniteMap out(X.src, X.src);
    for (int v = 0; v < X.src->order(); ++v) out.value[v] = X.src->add(v, A(X(v)));
    return out;
}

FiniteMap near_ring_product(const FiniteMap& X, const FiniteMap& Y, const FiniteMap& A) {
    require_same_group(X.src, Y.src, "near_ring_product: domains");
    require_same_group(X.dst, Y.dst, "near_ring_product: codomains");
    require_same_group(A.src, X.dst, "near_ring_product: twist domain");
    require_same_group(A.dst, X.src, "near_ring_product: twist codomain");
    FiniteMap out(X.src, X.dst);
    for (int v = 0; v < X.src->order(); ++v) {
        const Element yv = Y(v);
        out.value[v] = X.dst->add(yv, X(X.src->add(v, A(yv))));
    }
    return out;
}

bool invertible_in_near_ring(const FiniteMap& X, const FiniteMap& A) {
    return is_bijective(base_change(X, A));
}

FiniteMap quasi_inverse(const FiniteMap& X, const FiniteMap& A) {
    const FiniteMap shift = base_change(X, A);
    if (!is_bijective(shift))
        throw std::invalid_argument("quasi_inverse: base change is not bijective");
    FiniteMap inv(X.src, X.src);
    for (int v = 0; v < X.src->order(); ++v) inv.value[shift(v)] = v;
    FiniteMap out(X.src, X.dst);
    for (int v = 0; v < X.src->order(); ++v) out.value[v] = X.dst->neg(X(inv(v)));
    return out;
}

NearRingReport check_near_ring(const GroupRef& V, const GroupRef& W, const FiniteMap& A,
                               const CheckMode& mode, long long enum_cap) {
    require_same_group(A.src, W, "check_near_ring: twist domain");
    require_same_group(A.dst, V, "check_near_ring: twist codomain");
    if (!is_homomorphism(A))
        throw std::invalid_argument("check_near_ring: twist map must be a homomorphism");

    NearRingReport report;
    const FiniteMap zero = zero_map(V, W);

    long long map_count = 1;
    bool enumerable = true;
    for (int i = 0; i < V->order(); ++i) {
        map_count *= W->order();
        if (map_count > enum_cap) {
            enumerable = false;
            break;
        }
    }
    enumerable = enumerable && mode.exhaustive;

    auto fail = [&](const char* law) {
        if (report.failure.empty()) report.failure = law;
    };

    auto decode = [&](long long idx) {
        FiniteMap f(V, W);
        long long rest = idx;
        for (int e = 0; e < V->order(); ++e) {
            f.value[e] = static_cast<Element>(rest % W->order());
            rest /= W->order();
        }
        return f;
    };

    CheckRng rng(mode.seed, std::string(mode.stream_label) + "/near-ring");
    auto random_map = [&] {
        FiniteMap f(V, W);
        for (int e = 0; e < V->order(); ++e)
            f.value[e] = static_cast<Element>(rng.below(static_cast<uint64_t>(W->order())));
        return f;
    };

    std::vector<FiniteMap> pool;
    if (enumerable) {
        pool.reserve(static_cast<size_t>(map_count));
        for (long long idx = 0; idx < map_count; ++idx) pool.push_back(decode(idx));
        report.maps_enumerated = map_count;
    } else {
        for (long long i = 0; i < mode.samples; ++i) pool.push_back(random_map());
    }

    // Unary laws over the pool.
    for (const FiniteMap& X : pool) {
        ++report.cases;
        if (!(near_ring_product(X, zero, A) == X) || !(near_ring_product(zero, X, A) == X)) {
            report.zero_is_identity = false;
            fail("zero-identity");
        }
        if (invertible_in_near_ring(X, A)) {
            ++report.unit_count;
            ++report.cases;
            const FiniteMap inv = quasi_inverse(X, A);
            if (!(near_ring_product(X, inv, A) == zero) ||
                !(near_ring_product(inv, X, A) == zero)) {
                report.quasi_inverses_two_sided = false;
                fail("quasi-inverse");
            }
        }
    }

    // Pair laws: base change is multiplicative and units stay units.
    const long long pool_size = static_cast<long long>(pool.size());
    const bool pairs_exhaustive = enumerable && pool_size * pool_size <= mode.exhaustive_budget;
    auto run_pair = [&](const FiniteMap& X, const FiniteMap& Y) {
        ++report.cases;
        const FiniteMap product = near_ring_product(X, Y, A);
        if (!(base_change(product, A) == compose(base_change(X, A), base_change(Y, A)))) {
            report.base_change_multiplicative = false;
            fail("base-change-multiplicative");
        }
        if (invertible_in_near_ring(X, A) && invertible_in_near_ring(Y, A) &&
            !invertible_in_near_ring(product, A)) {
            report.units_closed = false;
            fail("units-closed");
        }
    };
    if (pairs_exhaustive) {
        for (const FiniteMap& X : pool)
            for (const FiniteMap& Y : pool) run_pair(X, Y);
    } else {
        for (long long i = 0; i < mode.samples; ++i)
            run_pair(pool[rng.below(static_cast<uint64_t>(pool.size()))],
                     pool[rng.below(static_cast<uint64_t>(pool.size()))]);
    }

    // Triple law: associativity.
    const bool triples_exhaustive =
        enumerable && pool_size * pool_size * pool_size <= mode.exhaustive_budget;
    auto run_triple = [&](const FiniteMap& X, const FiniteMap& Y, const FiniteMap& Z) {
        ++report.cases;
        if (!(near_ring_product(near_ring_product(X, Y, A), Z, A) ==
              near_ring_product(X, near_ring_product(Y, Z, A), A))) {
            report.associative = false;
            fail("associativity");
        }
    };
    if (triples_exhaustive) {
        for (const FiniteMap& X : pool)
            for (const FiniteMap& Y : pool)
                for (const FiniteMap& Z : pool) run_triple(X, Y, Z);
    } else {
        for (long long i = 0; i < mode.samples; ++i)
            run_triple(pool[rng.below(static_cast<uint64_t>(pool.size()))],
                       pool[rng.below(static_cast<uint64_t>(pool.size()))],
                       pool[rng.below(static_cast<uint64_t>(pool.size()))]);
    }

    report.mode = std::string(enumerable ? "maps=all" : "maps=seeded") +
                  (pairs_exhaustive ? ",pairs=all" : ",pairs=seeded") +
                  (triples_exhaustive ? ",triples=all" : ",triples=seeded");
    if (!enumerable || !pairs_exhaustive || !triples_exhaustive)
        report.mode += ",samples=" + std::to_string(mode.samples) +
                       ",seed=" + std::to_string(mode.seed);
    return report;
}

ProductPicture product_picture(const GroupRef& y_factor, const GroupRef& b_factor,
                               const FiniteMap& A) {
    require_same_group(A.src, b_factor, "product_picture: hom domain");
    require_same_group(A.dst, y_factor, "product_picture: hom codomain");
    if (!is_homomorphism(A))
        throw std::invalid_argument("product_picture: pivot map must be a homomorphism");
    GroupRef product = make_direct_product(y_factor, b_factor);
    Subset y(product), b(product), pivot(product);
    const int nb = b_factor->order();
    for (Element s = 0; s < y_factor->order(); ++s) y.insert(s * nb);
    for (Element t = 0; t < nb; ++t) {
        b.insert(t);
        pivot.insert(product->add(A(t) * nb, t));
    }
    return ProductPicture{std::move(product), y_factor, b_factor,
                          std::move(y), std::move(b), std::move(pivot), A};
}

MapGraph embed_section_map(const ProductPicture& pic, const FiniteMap& X) {
    require_same_group(X.src, pic.y_factor, "embed_section_map: domain");
    require_same_group(X.dst, pic.b_factor, "embed_section_map: codomain");
    MapGraph out(pic.y, pic.b);
    for (Element s = 0; s < pic.y_factor->order(); ++s)
        out.set(pic.embed_y(s), pic.embed_b(X(s)));
    return out;
}

KernelHomReport check_kernel_homomorphism(const ProductPicture& pic, const CheckMode& mode,
                                          long long enum_cap) {
    KernelHomReport report;
    const GroupRef& g = pic.product;
    const GroupRef& yf = pic.y_factor;
    const GroupRef& bf = pic.b_factor;

    long long map_count = 1;
    bool enumerable = true;
    for (int i = 0; i < yf->order(); ++i) {
        map_count *= bf->order();
        if (map_count > enum_cap) {
            enumerable = false;
            break;
        }
    }
    enumerable = enumerable && mode.exhaustive;

    auto decode = [&](long long idx) {
        FiniteMap f(yf, bf);
        long long rest = idx;
        for (int e = 0; e < yf->order(); ++e) {
            f.value[e] = static_cast<Element>(rest % bf->order());
            rest /= bf->order();
        }
        return f;
    };
    CheckRng rng(mode.seed, std::string(mode.stream_label) + "/kernel-hom");
    auto random_map = [&] {
        FiniteMap f(yf, bf);
        for (int e = 0; e < yf->order(); ++e)
            f.value[e] = static_cast<Element>(rng.below(static_cast<uint64_t>(bf->order())));
        return f;
    };

    std::vector<FiniteMap> pool;
    if (enumerable) {
        pool.reserve(static_cast<size_t>(map_count));
        for (long long idx = 0; idx < map_count; ++idx) pool.push_back(decode(idx));
    } else {
        for (long long i = 0; i < mode.samples; ++i) pool.push_back(random_map());
    }

    auto fail = [&](const char* law) {
        if (report.failure.empty()) report.failure = law;
    };

    // Precompute embeddings, graphs, gates, and kernels for the pool.
    struct Entry {
        MapGraph lifted;
        Subset graph;
        bool admissible;
        MapGraph kernel;
    };
    std::vector<Entry> entries;
    entries.reserve(pool.size());
    for (const FiniteMap& X : pool) {
        MapGraph lifted = embed_section_map(pic, X);
        Subset graph = graph_of_map(lifted, GraphSide::left);
        bool admissible = is_left_transversal(pic.pivot, graph);
        MapGraph kernel = kernel_shift(pic.pivot, graph, pic.y, pic.b);
        entries.push_back(Entry{std::move(lifted), std::move(graph), admissible, std::move(kernel)});
    }

    // Unary law: the kernel bijection is -A(X(eta)) + eta (ordered sum).
    for (size_t i = 0; i < pool.size(); ++i) {
        if (!entries[i].admissible) continue;
        ++report.cases;
        MapGraph formula(pic.y, pic.y);
        for (Element s = 0; s < yf->order(); ++s) {
            Element eta = pic.embed_y(s);
            formula.set(eta, g->add(g->neg(pic.embed_y(pic.hom(pool[i](s)))), eta));
        }
        if (!(entries[i].kernel == formula)) {
            report.kernel_formula = false;
            fail("kernel-formula");
        }
    }

    // Pair laws: bracket of graphs = graph of the product map, and the
    // kernel of the product composes contravariantly.
    const long long pool_size = static_cast<long long>(pool.size());
    const bool pairs_exhaustive = enumerable && pool_size * pool_size <= mode.exhaustive_budget;
    auto run_pair = [&](size_t i, size_t k) {
        if (!entries[i].admissible || !entries[k].admissible) {
            ++report.skipped;
            return;
        }
        ++report.cases;
        const MapGraph& X = entries[i].lifted;
        const MapGraph& Z = entries[k].lifted;
        const MapGraph& BX = entries[i].kernel;
        MapGraph product(pic.y, pic.b);
        for (Element eta : pic.y.elements()) product.set(eta, g->add(X(eta), Z(BX(eta))));
        if (!(graph_of_map(product, GraphSide::left) ==
              gamma(entries[i].graph, pic.pivot, pic.y, pic.b, entries[k].graph))) {
            report.graphs_match = false;
            fail("bracket-graph");
        }
        MapGraph product_kernel =
            kernel_shift(pic.pivot, graph_of_map(product, GraphSide::left), pic.y, pic.b);
        if (!(product_kernel == compose(entries[k].kernel, BX))) {
            report.kernel_multiplicative = false;
            fail("kernel-composition");
        }
    };
    if (pairs_exhaustive) {
        for (size_t i = 0; i < pool.size(); ++i)
            for (size_t k = 0; k < pool.size(); ++k) run_pair(i, k);
    } else {
        for (long long n = 0; n < mode.samples; ++n)
            run_pair(static_cast<size_t>(rng.below(static_cast<uint64_t>(pool.size()))),
                     static_cast<size_t>(rng.below(static_cast<uint64_t>(pool.size()))));
    }

    report.mode = std::string(enumerable ? "maps=all" : "maps=seeded") +
                  (pairs_exhaustive ? ",pairs=all" : ",pairs=seeded");
    if (!enumerable || !pairs_exhaustive)
        report.mode += ",samples=" + std::to_string(mode.samples) +
                       ",seed=" + std::to_string(mode.seed);
    return report;
}

}  // namespace torsorlab
