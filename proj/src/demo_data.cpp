#include "seqcat/demo_data.hpp"

namespace seqcat::demo {

NamedSequences four_individuals() {
    return {{"Anne", "ACCGACTG"}, {"Bob", "ACATCTG"}, {"Craig", "ACCGTCA"}, {"Doug", "ACTACTG"}};
}

AlignmentSpec four_individual_spec() { return product_spec(boolean_preorder(), {"Anne", "Bob", "Craig", "Doug"}); }

SeqAlignFunctor four_individual_functor(HubMode hubs) {
    const auto spec = four_individual_spec();
    const auto individuals = four_individuals();
    BuildPolicy policy;
    policy.objects = example_objects(spec.omega());
    policy.level = spec.omega()->index_of("[1111]");
    policy.hub_mode = hubs;
    return build_from_pairwise(spec, dna_alphabet(), individuals, align_all_pairs(individuals), policy);
}

RecolorPlan same_table_plan(const SeqAlignFunctor& f) {
    RecolorPlan plan;
    plan.chain_size = 3;
    plan.embedding = {0, 1};
    const auto omega3 = product_spec(chain_preorder(3), f.spec.names).omega();
    const int src = f.base.index_of(parse_segment(f.spec.omega(), "(!8,[0011])"));
    if (src < 0) throw invalid_input("functor has no (!8,[0011]) object");
    const Segment copy = parse_segment(omega3, "(!8,[0022])");
    const Segment hub = parse_segment(omega3, "(!9,[0001])");
    plan.recolor.emplace_back(src, copy);
    plan.new_hubs.push_back(hub);
    plan.links.emplace_back(copy, hub);
    return plan;
}

MechanismCase duplication_case(const std::string& craig, const std::string& other) {
    const auto spec = four_individual_spec();
    const auto& om = spec.omega();
    const int c = om->index_of("[0011]");
    const NamedSequences individuals{{"Craig", craig}, {"Doug", other}};
    BuildPolicy policy;
    policy.objects = {segment_from_patches(om, {2, 1, 1, 4}, {c, c, c, c})};
    policy.level = om->index_of("[1111]");
    const auto pairs = align_all_pairs(individuals, AlignMode::global, TracebackRule::all_optimal);
    MechanismCase out{build_from_pairwise(spec, dna_alphabet(), individuals, pairs, policy),
                      segment_from_patches(om, {2, 1, 4}, {c, c, c}), 2};
    return out;
}

MechanismCase inversion_case() {
    const auto spec = product_spec(chain_preorder(3), {"Anne", "Bob", "Craig", "Doug"});
    const auto& om = spec.omega();
    const int c1 = om->index_of("[0011]");
    const int c2 = om->index_of("[0022]");
    const int level = om->index_of("[1111]");
    const std::vector<int> sizes{2, 1, 1, 1, 1, 1, 4};
    struct Leg {
        std::vector<int> marked;  // patches colored c2
        const char* craig;
        const char* doug;
    };
    const Leg legs[] = {{{1, 2}, "ACeeACGGTCA", "ACGCAeeGTCA"},
                        {{2, 4}, "ACAeCeGGTCA", "ACeGCAeGTCA"},
                        {{4, 5}, "ACACGeeGTCA", "ACeeGCAGTCA"}};
    std::vector<Segment> objects;
    for (const auto& l : legs) {
        std::vector<int> colors(sizes.size(), c1);
        for (int p : l.marked) colors[static_cast<std::size_t>(p)] = c2;
        objects.push_back(segment_from_patches(om, sizes, colors));
    }
    MechanismCase out;
    out.functor.spec = spec;
    out.functor.alphabet = dna_alphabet();
    out.functor.level = level;
    out.functor.base = BaseCategory::full(objects);
    for (std::size_t k = 0; k < objects.size(); ++k) {
        ObjectImage im;
        im.elements.push_back(make_aligned_tuple(spec, out.functor.alphabet, objects[k], level,
                                                 {"", "", legs[k].craig, legs[k].doug}));
        out.functor.images.push_back(std::move(im));
    }
    out.tau = segment_from_patches(om, {2, 1, 1, 1, 4}, {c1, c1, c1, c1, c1});
    out.index = 2;
    return out;
}

}  // namespace seqcat::demo
