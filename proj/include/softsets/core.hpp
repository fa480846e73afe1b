#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "softsets/errors.hpp"

namespace softsets {

// Absolute tolerance for sums and monotonicity checks on floating inputs.
inline constexpr double kEpsilon = 1e-9;

// A subset of a universe, stored as indices into the universe's object list.
using Subset = std::set<std::size_t>;

Subset unite(const Subset& a, const Subset& b);
Subset intersect(const Subset& a, const Subset& b);
Subset subtract(const Subset& a, const Subset& b);
bool is_subset(const Subset& a, const Subset& b);
bool disjoint(const Subset& a, const Subset& b);

class Universe {
public:
    Universe() = default;
    // Throws SchemaError on an empty list or a duplicate identifier.
    explicit Universe(std::vector<std::string> objects);

    std::size_t size() const { return objects_.size(); }
    const std::vector<std::string>& objects() const { return objects_; }
    const std::string& name(std::size_t i) const { return objects_.at(i); }
    bool contains(const std::string& object) const { return index_.count(object) != 0; }
    std::size_t index_of(const std::string& object) const;

    // Duplicate names raise SchemaError, unknown names UnknownIdentifier.
    Subset subset(const std::vector<std::string>& names) const;
    std::vector<std::string> names(const Subset& s) const;
    Subset full() const;
    Subset from_mask(unsigned long long mask) const;

    bool operator==(const Universe& other) const { return objects_ == other.objects_; }

private:
    std::vector<std::string> objects_;
    std::map<std::string, std::size_t> index_;
};

// Subsets used as map keys: names in universe order joined with '|'. "" is the empty set.
std::string subset_key(const Universe& universe, const Subset& s);
Subset parse_subset_key(const Universe& universe, const std::string& key);

// A finite map from keys to subsets of a universe. Plain soft sets use string keys;
// threshold induction over tuples uses vector keys.

template <class Key>
struct SoftMapping {
    Universe universe;
    std::map<Key, Subset> values;

    std::vector<Key> params() const {
        std::vector<Key> out;
        for (const auto& kv : values) out.push_back(kv.first);
        return out;
    }
    bool operator==(const SoftMapping&) const = default;
};

using SoftSet = SoftMapping<std::string>;
using TupleKey = std::vector<std::string>;

SoftSet make_soft(const Universe& universe,
                  const std::vector<std::pair<std::string, std::vector<std::string>>>& values);
SoftSet null_soft(const Universe& universe, const std::vector<std::string>& params);
SoftSet absolute_soft(const Universe& universe, const std::vector<std::string>& params);
const Subset& value_of(const SoftSet& s, const std::string& param);

SoftSet soft_union_extended(const SoftSet& a, const SoftSet& b);
SoftSet soft_intersection_restricted(const SoftSet& a, const SoftSet& b);
SoftSet soft_complement(const SoftSet& s);
bool is_soft_subset(const SoftSet& a, const SoftSet& b);

struct SoftPoint {
    std::string param;
    std::string object;
    auto operator<=>(const SoftPoint&) const = default;
};

// Soft points in (param, universe order) order.
std::vector<SoftPoint> soft_points(const SoftSet& s);

struct SoftFunctionPair {
    Universe source;
    Universe target;
    std::map<std::string, std::string> objectMap;
    std::map<std::string, std::string> paramMap;
};

SoftSet soft_image(const SoftFunctionPair& pair, const SoftSet& s);
// Domain is every param of paramMap; params whose image is absent from t map to the empty set.
SoftSet soft_preimage(const SoftFunctionPair& pair, const SoftSet& t);

template <class Key>
using ScoreTable = std::map<Key, std::map<std::string, double>>;

template <class Key>
SoftMapping<Key> threshold_induced(const Universe& universe, const ScoreTable<Key>& scores,
                                   const std::map<Key, double>& taus) {
    SoftMapping<Key> out{universe, {}};
    for (const auto& [key, row] : scores) {
        auto tau = taus.find(key);
        if (tau == taus.end()) throw MissingParameter("no threshold for a scored key");
        if (!(tau->second >= 0.0 && tau->second <= 1.0))
            throw ScoreOutOfRange("threshold outside [0,1]");
        if (row.size() != universe.size())
            throw MapNotTotal("score function must cover the universe exactly");
        Subset selected;
        for (const auto& [object, score] : row) {
            if (!(score >= 0.0 && score <= 1.0))
                throw ScoreOutOfRange("score for '" + object + "' outside [0,1]");
            std::size_t idx = universe.index_of(object);
            if (score >= tau->second) selected.insert(idx);
        }
        out.values[key] = std::move(selected);
    }
    return out;
}

// Indicator scores of a soft set: 1 inside F(a), 0 outside.
ScoreTable<std::string> indicator_scores(const SoftSet& s);

using Relation = std::set<std::pair<std::string, std::string>>;  // (object, param)

SoftSet relation_induced(const Universe& universe, const std::vector<std::string>& params,
                         const Relation& rel);
Relation relation_of(const SoftSet& s);

enum class PayloadKind { Number, Tuple, Label };
using Payload = std::variant<double, std::vector<double>, std::string>;

bool payload_matches(const Payload& p, PayloadKind kind);

struct TValuedSoftSet {
    Universe universe;
    std::vector<std::string> params;
    PayloadKind payloadKind = PayloadKind::Number;
    std::map<std::pair<std::string, std::string>, Payload> table;  // (param, object) -> payload

    bool operator==(const TValuedSoftSet&) const = default;
};

using CurriedTable = std::map<std::string, std::map<std::string, Payload>>;

CurriedTable curry(const TValuedSoftSet& tv);
TValuedSoftSet uncurry(const Universe& universe, PayloadKind kind, const CurriedTable& curried);

struct Violation {
    std::string code;
    std::string path;
    std::vector<std::string> witness;
    std::string message;
};

struct ValidationReport {
    std::string kind;
    std::vector<Violation> violations;

    bool passed() const { return violations.empty(); }
    void add(std::string code, std::string path, std::vector<std::string> witness,
             std::string message) {
        violations.push_back({std::move(code), std::move(path), std::move(witness),
                              std::move(message)});
    }
    bool has(const std::string& code) const {
        for (const auto& v : violations)
            if (v.code == code) return true;
        return false;
    }
};

ValidationReport validate(const SoftSet& s);
ValidationReport validate(const TValuedSoftSet& tv);

}  // namespace softsets
