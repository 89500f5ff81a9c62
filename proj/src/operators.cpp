#include "torsorlab/operators.hpp"

#include <sstream>
#include <stdexcept>

namespace torsorlab {

ElementMap identity_map(const GroupRef& g) {
    ElementMap f(g);
    for (Element e = 0; e < g->order(); ++e) f.value[e] = e;
    return f;
}

ElementMap compose(const ElementMap& f, const ElementMap& h) {
    require_same_group(f.group, h.group, "compose(ElementMap)");
    ElementMap out(f.group);
    for (Element e = 0; e < f.group->order(); ++e) out.value[e] = f.value[h.value[e]];
    return out;
}

ElementMap pointwise_add(const ElementMap& f, const ElementMap& h) {
    require_same_group(f.group, h.group, "pointwise_add");
    ElementMap out(f.group);
    for (Element e = 0; e < f.group->order(); ++e) out.value[e] = f.group->add(f.value[e], h.value[e]);
    return out;
}

ElementMap pointwise_neg(const ElementMap& f) {
    ElementMap out(f.group);
    for (Element e = 0; e < f.group->order(); ++e) out.value[e] = f.group->neg(f.value[e]);
    return out;
}

namespace {

// Builds both component maps of the decomposition w = u-part + v-part at once.
void decompose(const Subset& u, const Subset& v, std::vector<Element>& upart, std::vector<Element>& vpart,
               const char* where) {
    require_same_group(u.group(), v.group(), where);
    if (!is_left_transversal(u, v)) {
        std::ostringstream msg;
        msg << where << ": decomposition requires the left operand (" << u.size()
            << " elements) to be left-transversal to the right operand (" << v.size() << " elements)";
        throw std::invalid_argument(msg.str());
    }
    const FiniteGroup& g = *u.group();
    const int n = g.order();
    upart.assign(static_cast<size_t>(n), -1);
    vpart.assign(static_cast<size_t>(n), -1);
    for (Element a : u.elements())
        for (Element b : v.elements()) {
            Element w = g.add(a, b);
            upart[w] = a;
            vpart[w] = b;
        }
}

}  // namespace

ElementMap proj(const Subset& u, const Subset& v, Side side) {
    std::vector<Element> upart, vpart;
    decompose(u, v, upart, vpart, "proj");
    ElementMap out(u.group());
    out.value = side == Side::left ? std::move(vpart) : std::move(upart);
    return out;
}

ElementMap transvection(const Subset& b, const Subset& x, const Subset& y) {
    ElementMap px = proj(x, b, Side::right);
    ElementMap py = proj(y, b, Side::right);
    const FiniteGroup& g = *b.group();
    ElementMap out(b.group());
    for (Element w = 0; w < g.order(); ++w)
        out.value[w] = g.add(g.add(px.value[w], g.neg(py.value[w])), w);
    return out;
}

ElementMap transvection_check(const Subset& a, const Subset& x, const Subset& y) {
    ElementMap px = proj(a, x, Side::left);
    ElementMap py = proj(a, y, Side::left);
    const FiniteGroup& g = *a.group();
    ElementMap out(a.group());
    for (Element w = 0; w < g.order(); ++w)
        out.value[w] = g.add(g.add(w, g.neg(py.value[w])), px.value[w]);
    return out;
}

ElementMap mult_operator(MultKind kind, const Subset& x, const Subset& a, const Subset& y,
                         const Subset& b, const Subset& z) {
    const GroupRef& gref = x.group();
    const FiniteGroup& g = *gref;
    ElementMap out(gref);
    switch (kind) {
        case MultKind::middle: {
            ElementMap px = proj(a, x, Side::left);
            ElementMap pz = proj(z, b, Side::right);
            for (Element w = 0; w < g.order(); ++w)
                out.value[w] = g.add(g.add(px.value[w], g.neg(w)), pz.value[w]);
            break;
        }
        case MultKind::left: {
            ElementMap pa = proj(a, x, Side::right);
            ElementMap py = proj(y, negate(b), Side::right);
            for (Element w = 0; w < g.order(); ++w)
                out.value[w] = g.add(g.neg(pa.value[py.value[w]]), w);
            break;
        }
        case MultKind::right: {
            ElementMap pyv = proj(negate(a), y, Side::left);
            ElementMap pb = proj(z, b, Side::left);
            for (Element w = 0; w < g.order(); ++w)
                out.value[w] = g.add(w, g.neg(pb.value[pyv.value[w]]));
            break;
        }
    }
    return out;
}

CanonicalKernel canonical_kernel(const Subset& a, const Subset& x, const Subset& y, const Subset& b) {
    ElementMap k_total = proj(a, x, Side::left);         // a ⊤ x
    ElementMap xpart = proj(x, b, Side::right);          // x ⊤ b
    ElementMap ypart = proj(a, y, Side::left);           // a ⊤ y
    CanonicalKernel out{restrict_map(k_total, y, x), restrict_map(compose(ypart, xpart), y, y)};
    return out;
}

MapGraph restrict_map(const ElementMap& f, const Subset& domain, const Subset& codomain) {
    MapGraph out(domain, codomain);
    for (Element e : domain.elements()) {
        Element v = f.value[e];
        if (!codomain.contains(v)) {
            std::ostringstream msg;
            msg << "restrict_map: value " << v << " at " << e << " falls outside the stated codomain";
            throw std::domain_error(msg.str());
        }
        out.value[e] = v;
    }
    return out;
}

}  // namespace torsorlab
