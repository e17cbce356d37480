#include "fspp/reductions.hpp"

#include <array>

namespace fspp {

namespace {

struct Rules {
    int stride_x;
    int stride_y;
    int background;  // -1 when the reduction has no inert filler value
    // Block case for a source value, depending on whether it hosts the
    // questioned cell.
    std::string (*choose)(int value, bool questioned);
};

std::string choose_234_24(int v, bool) {
    return v == 2 ? "value_2" : v == 3 ? "value_3" : "value_4";
}
std::string choose_1234(int v, bool questioned) {
    if (v != 0) return "value_a";
    return questioned ? "questioned_0" : "value_0";
}
std::string choose_0234(int v, bool questioned) {
    if (v != 1) return "value_a";
    return questioned ? "questioned_1" : "value_1";
}
std::string choose_0124(int v, bool) { return v == 3 ? "value_3" : "value_a"; }
std::string choose_0124_124(int v, bool questioned) {
    if (v != 0) return "value_a";
    return questioned ? "questioned_0" : "value_0";
}
std::string choose_0134_direct(int v, bool) { return "value_" + std::to_string(v); }
std::string choose_0134_inflated(int v, bool questioned) {
    if (questioned) return "questioned_0";  // only selected when the questioned value is 0
    return "inflated_" + std::to_string(v);
}

// R0134_134 keeps 3x3 blocks unless the questioned cell holds a 0, whose
// conjunction gadget only exists at the 7x7 scale.
Rules rules_for(ReductionId id, int questioned_value) {
    switch (id) {
        case ReductionId::R234_24: return {6, 5, -1, choose_234_24};
        case ReductionId::R_1234: return {5, 5, 1, choose_1234};
        case ReductionId::R_0234: return {5, 5, 0, choose_0234};
        case ReductionId::R_0124: return {7, 7, 0, choose_0124};
        case ReductionId::R0124_124: return {5, 7, 1, choose_0124_124};
        case ReductionId::R0234_024: return {7, 7, 0, choose_0124};
        case ReductionId::R0134_134:
            if (questioned_value == 0) return {7, 7, 1, choose_0134_inflated};
            return {3, 3, 1, choose_0134_direct};
    }
    throw Error("bad reduction id");
}

}  // namespace

std::string to_string(ReductionId id) {
    switch (id) {
        case ReductionId::R234_24: return "R234_24";
        case ReductionId::R_1234: return "R_1234";
        case ReductionId::R_0234: return "R_0234";
        case ReductionId::R_0124: return "R_0124";
        case ReductionId::R0124_124: return "R0124_124";
        case ReductionId::R0234_024: return "R0234_024";
        case ReductionId::R0134_134: return "R0134_134";
    }
    return "?";
}

std::optional<ReductionId> reduction_from_string(const std::string& name) {
    for (ReductionId id : all_reductions())
        if (to_string(id) == name) return id;
    return std::nullopt;
}

std::vector<ReductionId> all_reductions() {
    return {ReductionId::R234_24,   ReductionId::R_1234,    ReductionId::R_0234,
            ReductionId::R_0124,    ReductionId::R0124_124, ReductionId::R0234_024,
            ReductionId::R0134_134};
}

const ReductionInfo& reduction_info(ReductionId id) {
    static const std::array<ReductionInfo, 7> table = {{
        {ReductionId::R234_24, AllowedSet::of({2, 3, 4}), AllowedSet::of({2, 4}), "R234_24"},
        {ReductionId::R_1234, AllowedSet::full(), AllowedSet::of({1, 2, 3, 4}), "R_1234"},
        {ReductionId::R_0234, AllowedSet::full(), AllowedSet::of({0, 2, 3, 4}), "R_0234"},
        {ReductionId::R_0124, AllowedSet::full(), AllowedSet::of({0, 1, 2, 4}), "R_0124"},
        {ReductionId::R0124_124, AllowedSet::of({0, 1, 2, 4}), AllowedSet::of({1, 2, 4}),
         "R0124_124"},
        {ReductionId::R0234_024, AllowedSet::of({0, 2, 3, 4}), AllowedSet::of({0, 2, 4}),
         "R_0124"},
        {ReductionId::R0134_134, AllowedSet::of({0, 1, 3, 4}), AllowedSet::of({1, 3, 4}),
         "R0134_134"},
    }};
    for (const ReductionInfo& info : table)
        if (info.id == id) return info;
    throw Error("bad reduction id");
}

const std::string& ProvenanceLayer::case_at(Coord source) const {
    return case_ids[static_cast<size_t>(source.y) * source_width + source.x];
}

Coord ProvenanceLayer::rep_offset_at(Coord source) const {
    return rep_offsets[static_cast<size_t>(source.y) * source_width + source.x];
}

Role ProvenanceLayer::role_at(Coord target) const {
    return static_cast<Role>(
        roles[static_cast<size_t>(target.y) * (source_width * stride_x) + target.x]);
}

Coord Provenance::representative(Coord source) const {
    Coord pos = source;
    for (const ProvenanceLayer& layer : layers_) {
        Coord origin = layer.block_origin(pos);
        Coord rep = layer.rep_offset_at(pos);
        pos = {origin.x + rep.x, origin.y + rep.y};
    }
    return pos;
}

ProvenanceEntry Provenance::lookup(Coord target) const {
    if (layers_.empty()) throw Error("empty provenance");
    const ProvenanceLayer& outer = layers_.back();
    ProvenanceEntry entry;
    entry.role = outer.role_at(target);
    Coord pos = target;
    for (auto it = layers_.rbegin(); it != layers_.rend(); ++it) pos = it->source_of(pos);
    entry.source = pos;
    entry.case_id = outer.case_at(outer.source_of(target));
    return entry;
}

ReducedInstance apply_reduction(ReductionId id, const Query& query, const MacrocellLibrary& lib) {
    query.validate();
    const ReductionInfo& info = reduction_info(id);
    if (!is_a_simple(query.config, info.source))
        throw WrongAlphabet(to_string(id) + " wants a " + info.source.to_string() +
                            "-simple instance");

    const int qv = query.config.at(query.cell).grains();
    const Rules rules = rules_for(id, qv);
    const int sw = query.config.width();
    const int sh = query.config.height();

    ProvenanceLayer layer;
    layer.id = id;
    layer.stride_x = rules.stride_x;
    layer.stride_y = rules.stride_y;
    layer.source_width = sw;
    layer.source_height = sh;
    layer.case_ids.resize(static_cast<size_t>(sw) * sh);
    layer.rep_offsets.resize(static_cast<size_t>(sw) * sh);

    Configuration out(sw * rules.stride_x, sh * rules.stride_y);
    layer.roles.assign(out.size(), static_cast<uint8_t>(Role::Wire));

    for (int y = 0; y < sh; ++y) {
        for (int x = 0; x < sw; ++x) {
            const Coord src{x, y};
            const bool questioned = src == query.cell;
            const int v = query.config.at(src).grains();
            const std::string case_id = rules.choose(v, questioned);
            const Macrocell& mc = lib.get(info.pattern_group, case_id);
            if (mc.pattern.width != rules.stride_x || mc.pattern.height != rules.stride_y)
                throw Error("macrocell " + info.pattern_group + "/" + case_id +
                            " does not match the reduction stride");
            Configuration block = mc.instantiate(v);
            if (!is_a_simple(block, info.target))
                throw Error("macrocell " + info.pattern_group + "/" + case_id +
                            " instantiated with " + std::to_string(v) + " is not " +
                            info.target.to_string() + "-simple");

            const size_t si = static_cast<size_t>(y) * sw + x;
            layer.case_ids[si] = case_id;
            layer.rep_offsets[si] = mc.questioned_offset;

            const Coord origin = layer.block_origin(src);
            for (int by = 0; by < rules.stride_y; ++by)
                for (int bx = 0; bx < rules.stride_x; ++bx) {
                    const Coord at{origin.x + bx, origin.y + by};
                    out.set(at, block.at({bx, by}));
                    Role role = Role::Wire;
                    if (Coord{bx, by} == mc.questioned_offset)
                        role = Role::Center;
                    else if (rules.background >= 0 && mc.pattern.at({bx, by}) == rules.background)
                        role = Role::Background;
                    layer.roles[out.index(at)] = static_cast<uint8_t>(role);
                }
        }
    }

    ReducedInstance result;
    const Coord origin = layer.block_origin(query.cell);
    const Coord rep = layer.rep_offset_at(query.cell);
    result.cell = {origin.x + rep.x, origin.y + rep.y};
    result.config = std::move(out);
    result.provenance.push_layer(std::move(layer));
    return result;
}

ReducedInstance reduce_234_to_24(const Query& q, const MacrocellLibrary& lib) {
    return apply_reduction(ReductionId::R234_24, q, lib);
}
ReducedInstance reduce_to_1234(const Query& q, const MacrocellLibrary& lib) {
    return apply_reduction(ReductionId::R_1234, q, lib);
}
ReducedInstance reduce_to_0234(const Query& q, const MacrocellLibrary& lib) {
    return apply_reduction(ReductionId::R_0234, q, lib);
}
ReducedInstance reduce_to_0124(const Query& q, const MacrocellLibrary& lib) {
    return apply_reduction(ReductionId::R_0124, q, lib);
}
ReducedInstance reduce_0124_to_124(const Query& q, const MacrocellLibrary& lib) {
    return apply_reduction(ReductionId::R0124_124, q, lib);
}
ReducedInstance reduce_0234_to_024(const Query& q, const MacrocellLibrary& lib) {
    return apply_reduction(ReductionId::R0234_024, q, lib);
}
ReducedInstance reduce_0134_to_134(const Query& q, const MacrocellLibrary& lib) {
    return apply_reduction(ReductionId::R0134_134, q, lib);
}

ReducedInstance compose(std::span<const ReductionId> chain, const Query& query,
                        const MacrocellLibrary& lib) {
    for (size_t i = 1; i < chain.size(); ++i) {
        const ReductionInfo& prev = reduction_info(chain[i - 1]);
        const ReductionInfo& next = reduction_info(chain[i]);
        if (!prev.target.subset_of(next.source))
            throw ChainMismatch(to_string(prev.id) + " emits " + prev.target.to_string() +
                                " but " + to_string(next.id) + " wants " +
                                next.source.to_string());
    }
    ReducedInstance current;
    current.config = query.config;
    current.cell = query.cell;
    current.config.index(current.cell);  // OutOfBounds early, even for empty chains
    for (ReductionId id : chain) {
        ReducedInstance next = apply_reduction(id, {current.config, current.cell}, lib);
        current.provenance.push_layer(next.provenance.layers().front());
        current.config = std::move(next.config);
        current.cell = next.cell;
    }
    return current;
}

}  // namespace fspp
