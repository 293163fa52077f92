#pragma once

#include <memory>
#include <string>
#include <vector>

namespace pclab {

class CountedOracle;

enum class Family { path, cycle };
enum class LenMode { exact, at_most };

// One node of the problem grammar (|Prom)(|Dir)(Path|Cycle) with an optional
// pin subscript (s, or s,t for paths) and a length superscript =k or <=k.
struct ProblemTag {
    Family family = Family::path;
    bool directed = false;
    bool promise = false;
    LenMode mode = LenMode::exact;
    int k = 0;
    int pin_count = 0;  // 0 = unrestricted, 1 = _s, 2 = _{s,t}

    bool operator==(const ProblemTag&) const = default;
};

// Throws std::invalid_argument when the tag violates the grammar
// (cycle k < 3, path k < 1, bad pin arity).
void validate_tag(const ProblemTag& tag);

// e.g. "PromDirCycle_s=5", "Path_st<=4", "DirPath=3"
std::string to_string(const ProblemTag& tag);
ProblemTag parse_tag(const std::string& text);

// Classification of the restricted subgraph-containment problems by their
// randomized/quantum query complexity: fully pinned instances are O(1),
// instances whose free part is edgeless reduce to search, everything else
// has a quadratic randomized / linear quantum floor.
enum class QueryClass { constant, search, quadratic };
QueryClass randomized_class(const ProblemTag& tag);

// True when the quantum query complexity of the tag has a known Theta(n)
// characterization that this project treats as an external input rather
// than something it re-derives.
bool has_external_linear_algorithm(const ProblemTag& tag);

// A concrete problem: a counted oracle plus the tag and pinned vertices.
struct ProblemInstance {
    std::shared_ptr<CountedOracle> oracle;
    ProblemTag tag;
    std::vector<int> pinned;  // arity matches tag.pin_count
};

ProblemInstance make_instance(std::shared_ptr<CountedOracle> oracle, ProblemTag tag,
                              std::vector<int> pinned = {});

}  // namespace pclab
