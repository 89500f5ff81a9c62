#include "torsorlab/io.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace torsorlab {
namespace {

bool parse_builtin(const std::string& name, GroupRef& out) {
    if (name == "q8") {
        out = make_quaternion();
        return true;
    }
    if (name == "k4") {
        out = make_klein_four();
        return true;
    }
    if (name.size() < 2) return false;
    char kind = name[0];
    if (kind != 'z' && kind != 's' && kind != 'd') return false;
    long n = 0;
    for (size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
        n = n * 10 + (name[i] - '0');
        if (n > 1000) return false;  // far beyond any corpus order; reject early
    }
    if (n < 1) return false;
    switch (kind) {
        case 'z': out = make_cyclic(static_cast<int>(n)); return true;
        case 's': out = make_symmetric(static_cast<int>(n)); return true;
        default: out = make_dihedral(static_cast<int>(n)); return true;
    }
}

}  // namespace

GroupRef group_from_spec(const std::string& spec) {
    if (spec.rfind("file:", 0) == 0) return load_group_json(spec.substr(5));
    // No builtin name contains 'x', so 'x' can only separate product factors.
    std::vector<std::string> parts;
    std::string cur;
    for (char c : spec) {
        if (c == 'x') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    std::vector<GroupRef> factors;
    factors.reserve(parts.size());
    for (const auto& p : parts) {
        GroupRef g;
        if (!parse_builtin(p, g)) return load_group_json(spec);
        factors.push_back(std::move(g));
    }
    GroupRef acc = factors.front();
    for (size_t i = 1; i < factors.size(); ++i) acc = make_direct_product(acc, factors[i]);
    return acc;
}

GroupRef load_group_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open group file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("invalid JSON in " + path + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("name") || !doc.contains("table"))
        throw std::runtime_error(path + ": expected an object with \"name\" and \"table\"");
    if (!doc["name"].is_string())
        throw std::runtime_error(path + ": \"name\" must be a string");
    if (!doc["table"].is_array())
        throw std::runtime_error(path + ": \"table\" must be an array of rows");
    std::vector<std::vector<Element>> table;
    table.reserve(doc["table"].size());
    for (const auto& row : doc["table"]) {
        if (!row.is_array())
            throw std::runtime_error(path + ": \"table\" rows must be arrays");
        std::vector<Element> r;
        r.reserve(row.size());
        for (const auto& v : row) {
            if (!v.is_number_integer())
                throw std::runtime_error(path + ": table entries must be integers");
            r.push_back(v.get<Element>());
        }
        table.push_back(std::move(r));
    }
    return FiniteGroup::from_cayley_table(doc["name"].get<std::string>(), table);
}

}  // namespace torsorlab
