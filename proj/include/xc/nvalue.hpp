#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "xc/value.hpp"

namespace xc {

// A neighbouring value: a defaulted map from device identifiers to literals,
// written default[d1->v1, d2->v2]. Kept canonical: no entry ever equals the
// default, keys strictly ascending (std::map order).
class NValue {
public:
    NValue() = default;
    explicit NValue(Literal def, std::map<DeviceId, Literal> entries = {});

    static NValue lift(Literal l) { return NValue(std::move(l)); }

    const Literal& default_value() const { return default_; }
    const std::map<DeviceId, Literal>& entries() const { return entries_; }

    const Literal& lookup(DeviceId d) const;

    // Map insert/overwrite at one key, re-canonicalized.
    NValue update_at(DeviceId d, Literal l) const;
    // Default swap, entries preserved then re-canonicalized.
    NValue update_default(Literal l) const;
    // Drops entries with keys outside the (ascending) set.
    NValue restrict_to(const std::vector<DeviceId>& keep) const;

    bool equals(const NValue& other) const;

    std::string render() const;

private:
    Literal default_;
    std::map<DeviceId, Literal> entries_;
};

using LiteralFn = std::function<Literal(std::span<const Literal>)>;

// Pointwise application: default = f(defaults); for each key in the union of
// exception keys, f over the looked-up values. Canonicalized.
NValue pointwise_apply(const LiteralFn& f, std::span<const NValue> args);

// Left fold of f over lookup(w, d) for d in neighbours (ascending, self
// excluded), seeded with init.
Literal nfold_local(const std::function<Literal(const Literal&, const Literal&)>& f,
                    const NValue& w, Literal init, const std::vector<DeviceId>& neighbours,
                    DeviceId self);

NValue parse_nvalue(const std::string& text);

}  // namespace xc
