#include "seqcat/alignment_functor.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace seqcat {

namespace {

std::string describe(const BaseCategory& b, int m) {
    const auto& bm = b.morphisms[static_cast<std::size_t>(m)];
    std::string f1;
    for (std::size_t k = 0; k < bm.m.f1.size(); ++k) f1 += (k ? "," : "") + std::to_string(bm.m.f1[k]);
    return to_literal(b.objects[static_cast<std::size_t>(bm.src)]) + " -> " +
           to_literal(b.objects[static_cast<std::size_t>(bm.dst)]) + " f1=[" + f1 + "]";
}

bool letters_in_range(const AlignedTuple& x, int alphabet_size) {
    for (const auto& w : x.components)
        for (int l : w.letters)
            if (l < 0 || l >= alphabet_size) return false;
    return true;
}

}  // namespace

BaseCategory BaseCategory::full(std::vector<Segment> objects, const std::vector<std::pair<int, int>>& links) {
    BaseCategory b{std::move(objects), {}};
    std::set<std::tuple<int, int, std::vector<int>>> seen;
    auto add = [&](int s, int d, SegmentMorphism m) {
        if (seen.emplace(s, d, m.f1).second) b.morphisms.push_back({s, d, std::move(m)});
    };
    const int n = static_cast<int>(b.objects.size());
    for (int s = 0; s < n; ++s)
        for (int d = 0; d < n; ++d) {
            const auto& a = b.objects[static_cast<std::size_t>(s)];
            const auto& c = b.objects[static_cast<std::size_t>(d)];
            if (a.n1() != c.n1()) continue;
            if (auto m = quasi_homologous_morphism(a, c)) add(s, d, std::move(*m));
        }
    for (auto [s, d] : links)
        for (auto& m : enumerate_morphisms(b.objects.at(static_cast<std::size_t>(s)), b.objects.at(static_cast<std::size_t>(d))))
            add(s, d, std::move(m));
    for (bool grew = true; grew;) {
        grew = false;
        const std::size_t count = b.morphisms.size();
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = 0; j < count; ++j) {
                const auto& f = b.morphisms[i];
                const auto& g = b.morphisms[j];
                if (f.dst != g.src) continue;
                const std::size_t before = b.morphisms.size();
                add(f.src, g.dst, compose(g.m, f.m));
                grew = grew || b.morphisms.size() != before;
            }
    }
    return b;
}

int BaseCategory::index_of(const Segment& s) const {
    for (std::size_t i = 0; i < objects.size(); ++i)
        if (objects[i] == s) return static_cast<int>(i);
    return -1;
}

std::vector<int> BaseCategory::hom(int src, int dst) const {
    std::vector<int> out;
    for (std::size_t k = 0; k < morphisms.size(); ++k)
        if (morphisms[k].src == src && morphisms[k].dst == dst) out.push_back(static_cast<int>(k));
    return out;
}

int BaseCategory::identity_of(int obj) const {
    const auto id = identity(objects.at(static_cast<std::size_t>(obj)));
    for (int k : hom(obj, obj))
        if (morphisms[static_cast<std::size_t>(k)].m.f1 == id.f1) return k;
    return -1;
}

HubMode parse_hub_mode(const std::string& s) {
    if (s == "lazy") return HubMode::lazy;
    if (s == "reachable-closure") return HubMode::reachable_closure;
    if (s == "full-enumeration") return HubMode::full_enumeration;
    throw invalid_input("unknown hub mode: " + s);
}

std::string to_string(HubMode m) {
    switch (m) {
        case HubMode::lazy: return "lazy";
        case HubMode::reachable_closure: return "reachable-closure";
        case HubMode::full_enumeration: return "full-enumeration";
    }
    return "lazy";
}

bool SeqAlignFunctor::is_lazy(int obj) const {
    const auto& im = images.at(static_cast<std::size_t>(obj));
    return im.hub && !im.materialized;
}

int SeqAlignFunctor::find(int obj, const AlignedTuple& x) const {
    const auto& els = images.at(static_cast<std::size_t>(obj)).elements;
    for (std::size_t k = 0; k < els.size(); ++k)
        if (els[k] == x) return static_cast<int>(k);
    return -1;
}

bool SeqAlignFunctor::contains(int obj, const AlignedTuple& x) const {
    if (!is_lazy(obj)) return find(obj, x) >= 0;
    const auto& im = images[static_cast<std::size_t>(obj)];
    if (!is_aligned_tuple_of(spec, x, base.objects[static_cast<std::size_t>(obj)], level)) return false;
    if (!letters_in_range(x, alphabet.size())) return false;
    return std::find(im.excluded.begin(), im.excluded.end(), x) == im.excluded.end();
}

AlignedTuple SeqAlignFunctor::apply(int morphism, const AlignedTuple& x) const {
    return aligned_image(spec, alphabet, base.morphisms.at(static_cast<std::size_t>(morphism)).m, x);
}

Function SeqAlignFunctor::arrow(int morphism) const {
    const auto& bm = base.morphisms.at(static_cast<std::size_t>(morphism));
    if (is_lazy(bm.src) || is_lazy(bm.dst)) throw invalid_input("arrow between lazy hub images is not materialized");
    const auto& src = images[static_cast<std::size_t>(bm.src)].elements;
    Function f{static_cast<int>(src.size()), static_cast<int>(images[static_cast<std::size_t>(bm.dst)].elements.size()), {}};
    for (const auto& x : src) {
        const int k = find(bm.dst, apply(morphism, x));
        if (k < 0) throw invalid_input("naturality fails for " + describe(base, morphism));
        f.map.push_back(k);
    }
    return f;
}

ValidationReport validate(const SeqAlignFunctor& f) {
    ValidationReport r;
    auto& v = r.violations;
    const auto& b = f.base;
    const int n = static_cast<int>(b.objects.size());
    if (static_cast<int>(f.images.size()) != n) {
        v.push_back("one image per base object is required");
        return r;
    }
    for (int k = 0; k < static_cast<int>(b.morphisms.size()); ++k) {
        const auto& bm = b.morphisms[static_cast<std::size_t>(k)];
        if (bm.src < 0 || bm.src >= n || bm.dst < 0 || bm.dst >= n || !(bm.m.src == b.objects[static_cast<std::size_t>(bm.src)]) ||
            !(bm.m.dst == b.objects[static_cast<std::size_t>(bm.dst)])) {
            v.push_back("base morphism " + std::to_string(k) + " has wrong endpoints");
            return r;
        }
        for (const auto& e : validate_morphism(bm.m)) v.push_back(describe(b, k) + ": " + e);
    }
    for (int o = 0; o < n; ++o)
        if (b.identity_of(o) < 0) v.push_back("missing identity on " + to_literal(b.objects[static_cast<std::size_t>(o)]));
    for (int s = 0; s < n; ++s)
        for (int d = 0; d < n; ++d)
            if (b.objects[static_cast<std::size_t>(s)].n1() == b.objects[static_cast<std::size_t>(d)].n1() && b.hom(s, d).size() > 1)
                v.push_back("more than one morphism " + to_literal(b.objects[static_cast<std::size_t>(s)]) + " -> " +
                            to_literal(b.objects[static_cast<std::size_t>(d)]));
    // Closure under composition.
    for (int i = 0; i < static_cast<int>(b.morphisms.size()); ++i)
        for (int j = 0; j < static_cast<int>(b.morphisms.size()); ++j) {
            const auto& g = b.morphisms[static_cast<std::size_t>(i)];
            const auto& h = b.morphisms[static_cast<std::size_t>(j)];
            if (h.dst != g.src) continue;
            const auto gh = compose(g.m, h.m);
            bool found = false;
            for (int k : b.hom(h.src, g.dst)) found = found || b.morphisms[static_cast<std::size_t>(k)].m.f1 == gh.f1;
            if (!found) v.push_back("composite missing: " + describe(b, j) + " then " + describe(b, i));
        }
    if (!v.empty()) return r;

    for (int o = 0; o < n; ++o) {
        const auto& im = f.images[static_cast<std::size_t>(o)];
        const auto& seg = b.objects[static_cast<std::size_t>(o)];
        if (f.is_lazy(o)) continue;
        std::set<AlignedTuple> seen;
        for (const auto& x : im.elements) {
            if (!is_aligned_tuple_of(f.spec, x, seg, f.level) || !letters_in_range(x, f.alphabet.size()))
                v.push_back("element of " + to_literal(seg) + " is not an aligned tuple of that segment");
            else if (!seen.insert(x).second)
                v.push_back("duplicate element in " + to_literal(seg) + ": " + render_tuple(f.spec, f.alphabet, x));
        }
    }
    if (!v.empty()) return r;

    for (int k = 0; k < static_cast<int>(b.morphisms.size()); ++k) {
        const auto& bm = b.morphisms[static_cast<std::size_t>(k)];
        if (f.is_lazy(bm.src)) {
            if (bm.src != bm.dst && !f.is_lazy(bm.dst))
                v.push_back("lazy hub has a morphism into a finite image: " + describe(b, k));
            continue;
        }
        for (const auto& x : f.images[static_cast<std::size_t>(bm.src)].elements) {
            const auto y = f.apply(k, x);
            if (!f.contains(bm.dst, y))
                v.push_back("naturality fails for " + describe(b, k) + " at " + render_tuple(f.spec, f.alphabet, x) +
                            " (image " + render_tuple(f.spec, f.alphabet, y) + ")");
        }
    }
    // Functor laws on materialized elements.
    for (int o = 0; o < n; ++o) {
        if (f.is_lazy(o)) continue;
        const int id = b.identity_of(o);
        for (const auto& x : f.images[static_cast<std::size_t>(o)].elements)
            if (!(f.apply(id, x) == x)) v.push_back("identity law fails on " + to_literal(b.objects[static_cast<std::size_t>(o)]));
    }
    for (int i = 0; i < static_cast<int>(b.morphisms.size()); ++i)
        for (int j = 0; j < static_cast<int>(b.morphisms.size()); ++j) {
            const auto& g = b.morphisms[static_cast<std::size_t>(i)];
            const auto& h = b.morphisms[static_cast<std::size_t>(j)];
            if (h.dst != g.src || f.is_lazy(h.src)) continue;
            const auto gh = compose(g.m, h.m);
            int c = -1;
            for (int k : b.hom(h.src, g.dst))
                if (b.morphisms[static_cast<std::size_t>(k)].m.f1 == gh.f1) c = k;
            for (const auto& x : f.images[static_cast<std::size_t>(h.src)].elements)
                if (!(f.apply(c, x) == f.apply(i, f.apply(j, x))))
                    v.push_back("composition law fails for " + describe(b, j) + " then " + describe(b, i));
        }
    return r;
}

std::vector<int> visible_indices(const AlignmentSpec& spec, const Segment& s, int level) {
    std::vector<int> out;
    for (int i = 0; i < spec.size(); ++i) {
        const auto& f = spec.maps[static_cast<std::size_t>(i)];
        if (truncate(push_colors(f, s), f(level)).size() > 0) out.push_back(i);
    }
    return out;
}

SeqAlignFunctor build_from_pairwise(const AlignmentSpec& spec, const PointedAlphabet& alphabet,
                                    const NamedSequences& individuals, const std::vector<PairAlignments>& pairwise,
                                    const BuildPolicy& policy) {
    SeqAlignFunctor f;
    f.spec = spec;
    f.alphabet = alphabet;
    f.level = policy.level;
    f.base = BaseCategory::full(policy.objects, policy.links);
    const auto sequence_of = [&](const std::string& name) -> std::optional<std::string> {
        for (const auto& [n, s] : individuals)
            if (n == name) return s;
        return std::nullopt;
    };
    std::vector<int> hubs;
    for (std::size_t o = 0; o < f.base.objects.size(); ++o) {
        const auto& seg = f.base.objects[o];
        const auto vis = visible_indices(spec, seg, f.level);
        ObjectImage im;
        std::vector<std::string> rows(static_cast<std::size_t>(spec.size()));
        if (vis.size() == 2) {
            const auto& ni = spec.names[static_cast<std::size_t>(vis[0])];
            const auto& nj = spec.names[static_cast<std::size_t>(vis[1])];
            for (const auto& pa : pairwise) {
                const bool fwd = pa.first == ni && pa.second == nj;
                const bool rev = pa.first == nj && pa.second == ni;
                if (!fwd && !rev) continue;
                for (const auto& a : pa.alignments) {
                    if (a.length() != seg.n1()) continue;
                    rows[static_cast<std::size_t>(vis[0])] = fwd ? a.top : a.bottom;
                    rows[static_cast<std::size_t>(vis[1])] = fwd ? a.bottom : a.top;
                    im.elements.push_back(make_aligned_tuple(spec, alphabet, seg, f.level, rows));
                }
            }
        } else if (vis.size() == 1) {
            im.hub = true;
            const int i = vis[0];
            if (policy.hub_mode == HubMode::lazy) {
                im.materialized = false;
            } else if (policy.hub_mode == HubMode::full_enumeration) {
                const auto& fi = spec.maps[static_cast<std::size_t>(i)];
                const Segment pushed = push_colors(fi, seg);
                for (auto& w : enumerate_words(pushed, fi(f.level), alphabet, policy.hub_cap)) {
                    AlignedTuple x = make_aligned_tuple(spec, alphabet, seg, f.level, rows);
                    x.components[static_cast<std::size_t>(i)] = std::move(w);
                    im.elements.push_back(std::move(x));
                }
            } else {
                const auto raw = sequence_of(spec.names[static_cast<std::size_t>(i)]);
                if (raw && static_cast<int>(raw->size()) == seg.n1()) {
                    rows[static_cast<std::size_t>(i)] = *raw;
                    im.elements.push_back(make_aligned_tuple(spec, alphabet, seg, f.level, rows));
                }
                hubs.push_back(static_cast<int>(o));
            }
        } else if (vis.empty()) {
            im.elements.push_back(make_aligned_tuple(spec, alphabet, seg, f.level, rows));
        } else {
            throw invalid_input("object " + to_literal(seg) + " has more than two visible indices");
        }
        f.images.push_back(std::move(im));
    }
    // Reachable closure: hubs collect the images of everything mapping into them.
    for (bool grew = true; grew;) {
        grew = false;
        for (int h : hubs)
            for (int k = 0; k < static_cast<int>(f.base.morphisms.size()); ++k) {
                const auto& bm = f.base.morphisms[static_cast<std::size_t>(k)];
                if (bm.dst != h || bm.src == h) continue;
                const auto src = f.images[static_cast<std::size_t>(bm.src)].elements;
                for (const auto& x : src) {
                    auto y = f.apply(k, x);
                    if (f.find(h, y) < 0) {
                        f.images[static_cast<std::size_t>(h)].elements.push_back(std::move(y));
                        grew = true;
                    }
                }
            }
    }
    for (int h : hubs) {
        auto& els = f.images[static_cast<std::size_t>(h)].elements;
        std::sort(els.begin(), els.end());
    }
    return f;
}

std::vector<Segment> example_objects(const PreorderPtr& omega4) {
    const char* literals[] = {"(!7,[0101])", "(!7,[0011])", "(!7,[0001])", "(!8,[1100])", "(!8,[1010])",
                              "(!8,[1001])", "(!8,[0110])", "(!8,[0101])", "(!8,[0011])", "(!8,[0001])",
                              "(!8,[1000])", "(!8,[0100])", "(!8,[0010])", "(!9,[0011])", "(!9,[1100])"};
    std::vector<Segment> out;
    for (const char* l : literals) out.push_back(parse_segment(omega4, l));
    return out;
}

namespace {

struct Recoloring {
    PreorderPtr old_omega;
    PreorderPtr new_omega;
    std::vector<int> embedding;

    int color(int c) const {
        auto comps = old_omega->components(c);
        for (auto& x : comps) x = embedding.at(static_cast<std::size_t>(x));
        return new_omega->from_components(comps);
    }
    Segment segment(const Segment& s) const {
        std::vector<int> colors;
        for (int c : s.colors()) colors.push_back(color(c));
        return Segment(new_omega, s.topology(), colors);
    }
};

// Re-express x on a segment of the new functor; truncation shapes must agree.
AlignedTuple move_tuple(const AlignmentSpec& spec, const AlignedTuple& x, const Segment& target, int level) {
    AlignedTuple y{target, level, {}};
    for (int i = 0; i < spec.size(); ++i) {
        const auto& fi = spec.maps[static_cast<std::size_t>(i)];
        const Segment pushed = push_colors(fi, target);
        const auto tr = truncate(pushed, fi(level));
        const auto& w = x.components[static_cast<std::size_t>(i)];
        if (tr.indices != truncate(w.segment, w.level).indices)
            throw invalid_input("recolored segment " + to_literal(target) + " changes the truncation of index " + spec.names[static_cast<std::size_t>(i)]);
        y.components.push_back({pushed, fi(level), w.letters});
    }
    return y;
}

}  // namespace

SeqAlignFunctor extend_colors(const SeqAlignFunctor& f, const RecolorPlan& plan) {
    const bool same_omega = plan.chain_size == 0;
    if (same_omega && plan.recolor.empty() && plan.new_hubs.empty() && plan.links.empty()) return f;
    const PreorderPtr old_omega = f.spec.omega();
    if (old_omega->factors().empty()) throw invalid_input("extend_colors needs a product preorder");
    const PreorderPtr old_factor = old_omega->factors().front();
    SeqAlignFunctor g;
    g.alphabet = f.alphabet;
    if (same_omega) {
        g.spec = f.spec;
    } else {
        g.spec = product_spec(chain_preorder(plan.chain_size), f.spec.names);
    }
    Recoloring rc{old_omega, g.spec.omega(), plan.embedding};
    if (rc.embedding.empty())
        for (int x = 0; x < old_factor->size(); ++x) rc.embedding.push_back(x);
    if (static_cast<int>(rc.embedding.size()) != old_factor->size()) throw invalid_input("embedding must cover the old factor");
    const auto& new_factor = g.spec.omega()->factors().front();
    for (int x = 0; x < old_factor->size(); ++x)
        for (int y = 0; y < old_factor->size(); ++y)
            if (old_factor->leq(x, y) != new_factor->leq(rc.embedding[static_cast<std::size_t>(x)], rc.embedding[static_cast<std::size_t>(y)]))
                throw invalid_input("embedding must be an order embedding");
    g.level = rc.color(f.level);

    std::vector<Segment> objects;
    for (const auto& s : f.base.objects) objects.push_back(rc.segment(s));
    for (std::size_t o = 0; o < f.base.objects.size(); ++o) {
        const auto& im = f.images[o];
        ObjectImage ni{im.hub, im.materialized, {}, {}};
        for (const auto& x : im.elements) ni.elements.push_back(move_tuple(g.spec, x, objects[o], g.level));
        for (const auto& x : im.excluded) ni.excluded.push_back(move_tuple(g.spec, x, objects[o], g.level));
        g.images.push_back(std::move(ni));
    }
    for (const auto& [src, target] : plan.recolor) {
        if (src < 0 || src >= static_cast<int>(f.base.objects.size())) throw invalid_input("recolor source out of range");
        if (std::find(objects.begin(), objects.end(), target) != objects.end())
            throw invalid_input("recolor target already present: " + to_literal(target));
        objects.push_back(target);
        const auto& from = g.images[static_cast<std::size_t>(src)];
        ObjectImage ni{false, true, {}, {}};
        for (const auto& x : from.elements) ni.elements.push_back(move_tuple(g.spec, x, target, g.level));
        g.images.push_back(std::move(ni));
    }
    for (const auto& h : plan.new_hubs) {
        if (std::find(objects.begin(), objects.end(), h) != objects.end()) continue;
        objects.push_back(h);
        g.images.push_back({true, false, {}, {}});
    }
    std::vector<std::pair<int, int>> links;
    for (const auto& [s, d] : plan.links) {
        auto is = std::find(objects.begin(), objects.end(), s);
        auto id = std::find(objects.begin(), objects.end(), d);
        if (is == objects.end() || id == objects.end()) throw invalid_input("link endpoints must be objects");
        links.emplace_back(static_cast<int>(is - objects.begin()), static_cast<int>(id - objects.begin()));
    }
    g.base = BaseCategory::full(std::move(objects), links);
    const auto report = validate(g);
    if (!report.ok()) throw invalid_input("extended functor is invalid: " + report.violations.front());
    return g;
}

}  // namespace seqcat
