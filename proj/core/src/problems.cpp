#include "pclab/problems.hpp"

#include "pclab/oracle.hpp"

#include <stdexcept>

namespace pclab {

void validate_tag(const ProblemTag& tag) {
    if (tag.family == Family::path) {
        if (tag.k < 1) throw std::invalid_argument("tag: path length must be >= 1");
        if (tag.pin_count != 0 && tag.pin_count != 2)
            throw std::invalid_argument("tag: path problems are unrestricted or {s,t}-pinned");
    } else {
        if (tag.k < 3) throw std::invalid_argument("tag: only cycles of length at least 3");
        if (tag.pin_count != 0 && tag.pin_count != 1)
            throw std::invalid_argument("tag: cycle problems are unrestricted or s-pinned");
    }
    if (tag.promise && tag.family == Family::path && tag.pin_count != 2)
        throw std::invalid_argument("tag: promise path problems require pinned s,t");
}

std::string to_string(const ProblemTag& tag) {
    std::string s;
    if (tag.promise) s += "Prom";
    if (tag.directed) s += "Dir";
    s += tag.family == Family::path ? "Path" : "Cycle";
    if (tag.pin_count == 1) s += "_s";
    if (tag.pin_count == 2) s += "_st";
    s += tag.mode == LenMode::exact ? "=" : "<=";
    s += std::to_string(tag.k);
    return s;
}

ProblemTag parse_tag(const std::string& text) {
    ProblemTag tag;
    std::size_t pos = 0;
    auto eat = [&](const char* word) {
        std::string w(word);
        if (text.compare(pos, w.size(), w) == 0) {
            pos += w.size();
            return true;
        }
        return false;
    };
    tag.promise = eat("Prom");
    tag.directed = eat("Dir");
    if (eat("Path"))
        tag.family = Family::path;
    else if (eat("Cycle"))
        tag.family = Family::cycle;
    else
        throw std::invalid_argument("tag: expected Path or Cycle in '" + text + "'");
    if (eat("_st"))
        tag.pin_count = 2;
    else if (eat("_s"))
        tag.pin_count = 1;
    if (eat("<="))
        tag.mode = LenMode::at_most;
    else if (eat("="))
        tag.mode = LenMode::exact;
    else
        throw std::invalid_argument("tag: expected =k or <=k in '" + text + "'");
    try {
        tag.k = std::stoi(text.substr(pos));
    } catch (const std::exception&) {
        throw std::invalid_argument("tag: bad length in '" + text + "'");
    }
    validate_tag(tag);
    return tag;
}

QueryClass randomized_class(const ProblemTag& tag) {
    validate_tag(tag);
    if (tag.family == Family::path) {
        // L_k with both endpoints pinned: removing them leaves a path on k-1
        // vertices, which is empty for k=1, one isolated vertex for k=2, and
        // contains an edge from k=3 on.
        if (tag.pin_count == 2) {
            if (tag.k == 1) return QueryClass::constant;
            if (tag.k == 2) return QueryClass::search;
            return QueryClass::quadratic;
        }
        // unrestricted L_k always keeps an edge among free vertices
        return QueryClass::quadratic;
    }
    // C_k minus at most one pinned vertex keeps an edge for every k >= 3
    return QueryClass::quadratic;
}

bool has_external_linear_algorithm(const ProblemTag& tag) {
    validate_tag(tag);
    if (tag.directed) return false;
    if (tag.family == Family::path) {
        if (tag.pin_count == 0 && !tag.promise) return true;  // unrestricted path detection
        return tag.promise && tag.pin_count == 2;             // promised s,t paths
    }
    // undirected promise cycles, restricted or not
    return tag.promise;
}

ProblemInstance make_instance(std::shared_ptr<CountedOracle> oracle, ProblemTag tag,
                              std::vector<int> pinned) {
    validate_tag(tag);
    if (static_cast<int>(pinned.size()) != tag.pin_count)
        throw std::invalid_argument("instance: pinned-vertex arity does not match tag");
    if (oracle) {
        if (oracle->directed() != tag.directed)
            throw std::invalid_argument("instance: oracle direction does not match tag");
        for (int v : pinned)
            if (v < 0 || v >= oracle->n())
                throw std::invalid_argument("instance: pinned vertex out of range");
    }
    return ProblemInstance{std::move(oracle), tag, std::move(pinned)};
}

}  // namespace pclab
