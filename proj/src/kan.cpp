#include "seqcat/kan.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "lazy_limit.hpp"

namespace seqcat {

int CommaCategory::find(int base_object, const std::vector<int>& f1) const {
    for (std::size_t k = 0; k < objects.size(); ++k)
        if (objects[k].base_object == base_object && objects[k].f.f1 == f1) return static_cast<int>(k);
    return -1;
}

CommaCategory comma(const Segment& tau, const BaseCategory& base) {
    CommaCategory c{tau, {}, {}};
    std::map<std::pair<int, std::vector<int>>, int> index;
    for (std::size_t u = 0; u < base.objects.size(); ++u) {
        if (!same_preorder(tau.omega(), base.objects[u].omega())) throw invalid_input("tau and the base use different preorders");
        for (auto& m : enumerate_morphisms(tau, base.objects[u])) {
            index[{static_cast<int>(u), m.f1}] = static_cast<int>(c.objects.size());
            c.objects.push_back({static_cast<int>(u), std::move(m)});
        }
    }
    for (std::size_t g = 0; g < base.morphisms.size(); ++g) {
        const auto& bm = base.morphisms[g];
        if (bm.src == bm.dst && bm.m.f1 == identity(bm.m.src).f1) continue;
        for (std::size_t o = 0; o < c.objects.size(); ++o) {
            if (c.objects[o].base_object != bm.src) continue;
            std::vector<int> f1;
            for (int v : c.objects[o].f.f1) f1.push_back(bm.m.f1[static_cast<std::size_t>(v)]);
            auto it = index.find({bm.dst, f1});
            if (it == index.end()) throw std::logic_error("comma category is missing a composite object");
            c.arrows.push_back({static_cast<int>(o), it->second, static_cast<int>(g)});
        }
    }
    return c;
}

SegCone comma_cone(const CommaCategory& c, const BaseCategory& base) {
    SegCone cone{c.tau, {}, {}, {}};
    for (const auto& o : c.objects) {
        cone.nodes.push_back(base.objects[static_cast<std::size_t>(o.base_object)]);
        cone.legs.push_back(o.f);
    }
    for (const auto& a : c.arrows) cone.edges.push_back({a.src, a.dst, base.morphisms[static_cast<std::size_t>(a.base_morphism)].m});
    return cone;
}

Count& Count::operator*=(std::uint64_t k) {
    if (k == 0) {
        value = 0;
        overflow = false;
    } else if (!overflow && value != 0) {
        if (value > std::numeric_limits<std::uint64_t>::max() / k) overflow = true;
        else value *= k;
    }
    return *this;
}

Count& Count::operator*=(const Count& k) {
    if (k.overflow && value != 0) overflow = true;
    else *this *= k.value;
    return *this;
}

Count& Count::operator+=(const Count& k) {
    if (k.overflow || value > std::numeric_limits<std::uint64_t>::max() - k.value) overflow = true;
    else value += k.value;
    return *this;
}

std::string Count::str() const { return overflow ? ">2^64" : std::to_string(value); }

Count RanValue::cardinality() const {
    Count c;
    for (const auto& f : factors) c *= static_cast<std::uint64_t>(f.size());
    return c;
}

int RanValue::nonterminal_factor_count() const {
    int k = 0;
    for (const auto& f : factors) k += f.terminal() ? 0 : 1;
    return k;
}

int RanValue::factor_of(int comma_object) const {
    for (std::size_t k = 0; k < factors.size(); ++k)
        if (std::find(factors[k].nodes.begin(), factors[k].nodes.end(), comma_object) != factors[k].nodes.end())
            return static_cast<int>(k);
    return -1;
}

std::string RanValue::summary() const {
    struct Group {
        std::string name;
        int size;
        int count;
    };
    auto describe = [&](const RanFactor& f) {
        if (f.nodes.size() == 1) {
            const auto& o = comma.objects[static_cast<std::size_t>(f.nodes[0])];
            return "T" + to_literal(o.f.dst);
        }
        return "L[" + std::to_string(f.nodes.size()) + " nodes]";
    };
    std::vector<Group> main, term;
    for (const auto& f : factors) {
        auto& gs = f.terminal() ? term : main;
        const std::string name = describe(f);
        auto it = std::find_if(gs.begin(), gs.end(), [&](const Group& g) { return g.name == name && g.size == f.size(); });
        if (it == gs.end()) gs.push_back({name, f.size(), 1});
        else ++it->count;
    }
    auto render = [](const std::vector<Group>& gs) {
        std::string s;
        for (const auto& g : gs) {
            if (!s.empty()) s += " x ";
            s += g.name + "{" + std::to_string(g.size) + "}";
            if (g.count > 1) s += "^" + std::to_string(g.count);
        }
        return s;
    };
    std::string out = main.empty() ? "1" : render(main);
    if (!term.empty()) out += " | terminal: " + render(term);
    int free = 0;
    for (bool d : dropped) free += d ? 1 : 0;
    if (free) out += " | free: " + std::to_string(free);
    return out;
}

RanTuple RanValue::element(const std::vector<int>& choice) const {
    if (choice.size() != factors.size()) throw invalid_input("one choice per factor is required");
    RanTuple x(comma.objects.size());
    for (std::size_t k = 0; k < factors.size(); ++k) {
        const auto& f = factors[k];
        const auto& t = f.tuples.at(static_cast<std::size_t>(choice[k]));
        for (std::size_t j = 0; j < f.nodes.size(); ++j) {
            const int node = f.nodes[j];
            x[static_cast<std::size_t>(node)] = node_values[static_cast<std::size_t>(node)][static_cast<std::size_t>(t[j])];
        }
    }
    return x;
}

std::vector<std::vector<int>> RanValue::choices(std::size_t cap) const {
    const Count c = cardinality();
    if (c.overflow || c.value > cap) throw resource_error("Ran value has more elements than the cap");
    std::vector<std::vector<int>> out;
    if (c.value == 0) return out;
    std::vector<int> cur(factors.size(), 0);
    for (std::uint64_t k = 0; k < c.value; ++k) {
        out.push_back(cur);
        for (std::size_t i = factors.size(); i-- > 0;) {
            if (++cur[i] < factors[i].size()) break;
            cur[i] = 0;
        }
    }
    return out;
}

namespace {

RanValue eval_masked(const SeqAlignFunctor& f, CommaCategory c, const std::vector<bool>& keep, const RanOptions& opts) {
    RanValue r;
    r.comma = std::move(c);
    detail::LazyDiagram<AlignedTuple> d;
    for (std::size_t k = 0; k < r.comma.objects.size(); ++k) {
        const auto& o = r.comma.objects[k];
        typename detail::LazyDiagram<AlignedTuple>::Node node;
        node.name = to_literal(o.f.dst) + "#" + std::to_string(k);
        if (!keep[k]) {
            // Lazy with no inbound edges: resolve() drops it.
            node.lazy = true;
        } else if (f.is_lazy(o.base_object)) {
            const int u = o.base_object;
            node.lazy = true;
            node.member = [&f, u](const AlignedTuple& x) { return f.contains(u, x); };
        } else {
            node.values = f.images[static_cast<std::size_t>(o.base_object)].elements;
        }
        d.nodes.push_back(std::move(node));
    }
    for (const auto& a : r.comma.arrows) {
        if (!keep[static_cast<std::size_t>(a.src)] || !keep[static_cast<std::size_t>(a.dst)]) continue;
        const int g = a.base_morphism;
        d.edges.push_back({a.src, a.dst, [&f, g](const AlignedTuple& x) { return f.apply(g, x); }});
    }
    auto res = detail::resolve(d);
    r.node_values = std::move(res.values);
    r.dropped = std::move(res.dropped);
    r.warnings = std::move(res.warnings);
    // Warnings about deliberately excluded objects are noise.
    std::erase_if(r.warnings, [&](const std::string& w) {
        for (std::size_t k = 0; k < keep.size(); ++k)
            if (!keep[k] && w.find(d.nodes[k].name + " ") != std::string::npos) return true;
        return false;
    });
    for (const auto& comp : detail::components(res.diagram, r.dropped)) {
        const auto lim = limit(detail::subdiagram(res.diagram, comp), opts.cap);
        r.factors.push_back({comp, lim.tuples});
    }
    return r;
}

}  // namespace

RanValue ran_eval(const SeqAlignFunctor& f, const Segment& tau, const RanOptions& opts) {
    CommaCategory c = comma(tau, f.base);
    const std::vector<bool> keep(c.objects.size(), true);
    return eval_masked(f, std::move(c), keep, opts);
}

RanValue ran_eval_restricted(const SeqAlignFunctor& f, const CommaCategory& c, const std::vector<int>& objects,
                             const RanOptions& opts) {
    std::vector<bool> keep(c.objects.size(), false);
    for (int o : objects) keep.at(static_cast<std::size_t>(o)) = true;
    return eval_masked(f, c, keep, opts);
}

RanTuple ran_apply(const RanValue& from, const CommaCategory& to, const SegmentMorphism& h, const RanTuple& x) {
    if (!(h.src == from.comma.tau) || !(h.dst == to.tau)) throw invalid_input("morphism does not match the Ran values");
    RanTuple y(to.objects.size());
    for (std::size_t o = 0; o < to.objects.size(); ++o) {
        const auto& obj = to.objects[o];
        std::vector<int> f1;
        for (int v : h.f1) f1.push_back(obj.f.f1[static_cast<std::size_t>(v)]);
        const int src = from.comma.find(obj.base_object, f1);
        if (src < 0) throw std::logic_error("precomposed comma object is missing");
        y[o] = x[static_cast<std::size_t>(src)];
    }
    return y;
}

namespace {

// Pre-image comma objects of tau used by a leg h: tau -> target.
std::vector<int> pulled_objects(const RanValue& from, const CommaCategory& to, const SegmentMorphism& h) {
    std::vector<int> out;
    for (const auto& obj : to.objects) {
        std::vector<int> f1;
        for (int v : h.f1) f1.push_back(obj.f.f1[static_cast<std::size_t>(v)]);
        out.push_back(from.comma.find(obj.base_object, f1));
    }
    return out;
}

bool contains_element(const RanValue& r, const RanTuple& y) {
    for (std::size_t o = 0; o < y.size(); ++o)
        if (!r.dropped[o] && !y[o]) return false;
    for (const auto& fac : r.factors) {
        std::vector<int> t;
        for (int node : fac.nodes) {
            const auto& vals = r.node_values[static_cast<std::size_t>(node)];
            auto it = std::find(vals.begin(), vals.end(), *y[static_cast<std::size_t>(node)]);
            if (it == vals.end()) return false;
            t.push_back(static_cast<int>(it - vals.begin()));
        }
        if (!std::binary_search(fac.tuples.begin(), fac.tuples.end(), t)) return false;
    }
    return true;
}

}  // namespace

CanonicalRanArrow canonical_ran_arrow(const SeqAlignFunctor& f, const RanCone& cone, const RanOptions& opts) {
    CanonicalRanArrow out;
    if (cone.legs.size() != cone.nodes.size()) throw invalid_input("one leg per node is required");
    for (std::size_t a = 0; a < cone.nodes.size(); ++a) {
        if (!(cone.legs[a].src == cone.apex) || !(cone.legs[a].dst == cone.nodes[a])) throw invalid_input("leg endpoints do not match");
        if (!validate_morphism(cone.legs[a]).empty()) throw invalid_input("leg is not a segment morphism");
    }
    for (const auto& e : cone.edges)
        if (!(compose(e.m, cone.legs[static_cast<std::size_t>(e.src)]) == cone.legs[static_cast<std::size_t>(e.dst)]))
            throw invalid_input("cone condition fails");

    const RanValue top = ran_eval(f, cone.apex, opts);
    std::vector<RanValue> rans;
    for (const auto& s : cone.nodes) rans.push_back(ran_eval(f, s, opts));

    detail::LazyDiagram<RanTuple> d;
    for (std::size_t a = 0; a < rans.size(); ++a) {
        typename detail::LazyDiagram<RanTuple>::Node node;
        node.name = to_literal(cone.nodes[a]);
        const auto& ra = rans[a];
        node.lazy = std::find(ra.dropped.begin(), ra.dropped.end(), true) != ra.dropped.end();
        if (node.lazy) {
            bool inbound = false;
            for (const auto& e : cone.edges) inbound = inbound || e.dst == static_cast<int>(a);
            if (!inbound) throw invalid_input("Ran at " + node.name + " has free factors and no inbound edge");
            node.member = [&ra](const RanTuple& y) { return contains_element(ra, y); };
        } else {
            for (const auto& ch : ra.choices(opts.cap)) node.values.push_back(ra.element(ch));
        }
        d.nodes.push_back(std::move(node));
    }
    for (const auto& e : cone.edges) {
        const RanValue* from = &rans[static_cast<std::size_t>(e.src)];
        const CommaCategory* to = &rans[static_cast<std::size_t>(e.dst)].comma;
        const SegmentMorphism m = e.m;
        d.edges.push_back({e.src, e.dst, [from, to, m](const RanTuple& x) { return ran_apply(*from, *to, m, x); }});
    }
    auto res = detail::resolve(d);
    out.warnings = res.warnings;
    std::vector<int> live;
    for (std::size_t a = 0; a < rans.size(); ++a)
        if (!res.dropped[a]) live.push_back(static_cast<int>(a));
    const FinDiagram codiag = detail::subdiagram(res.diagram, live);
    const LimitResult lim = limit(codiag, opts.cap);
    out.codomain_size = lim.size();

    // Factors of Ran(apex) the map depends on.
    std::set<int> dep;
    std::vector<std::vector<int>> pulled(rans.size());
    for (int a : live) {
        pulled[static_cast<std::size_t>(a)] = pulled_objects(top, rans[static_cast<std::size_t>(a)].comma, cone.legs[static_cast<std::size_t>(a)]);
        for (int o : pulled[static_cast<std::size_t>(a)]) {
            if (o < 0) throw std::logic_error("precomposed comma object is missing");
            const int k = top.factor_of(o);
            if (k < 0) throw invalid_input("canonical arrow depends on a free factor of Ran at the apex");
            dep.insert(k);
        }
    }
    out.dependent_factors.assign(dep.begin(), dep.end());
    out.domain_size = top.cardinality();
    Count dep_size;
    for (int k : out.dependent_factors) dep_size *= static_cast<std::uint64_t>(top.factors[static_cast<std::size_t>(k)].size());
    if (dep_size.overflow || dep_size.value > opts.cap) throw resource_error("dependent factors exceed the cap");

    out.restricted = {static_cast<int>(dep_size.value), lim.size(), {}};
    std::vector<int> cur(out.dependent_factors.size(), 0);
    std::vector<int> tuple(live.size());
    for (std::uint64_t n = 0; n < dep_size.value; ++n) {
        RanTuple x(top.comma.objects.size());
        for (std::size_t j = 0; j < out.dependent_factors.size(); ++j) {
            const auto& fac = top.factors[static_cast<std::size_t>(out.dependent_factors[j])];
            const auto& t = fac.tuples[static_cast<std::size_t>(cur[j])];
            for (std::size_t q = 0; q < fac.nodes.size(); ++q)
                x[static_cast<std::size_t>(fac.nodes[q])] =
                    top.node_values[static_cast<std::size_t>(fac.nodes[q])][static_cast<std::size_t>(t[q])];
        }
        for (std::size_t li = 0; li < live.size(); ++li) {
            const int a = live[li];
            const RanTuple y = ran_apply(top, rans[static_cast<std::size_t>(a)].comma, cone.legs[static_cast<std::size_t>(a)], x);
            const int k = res.index_of(a, y);
            if (k < 0) throw std::logic_error("leg image missing from the diagram node");
            tuple[li] = k;
        }
        const int idx = lim.find(tuple);
        if (idx < 0) throw std::logic_error("cone tuple missing from the limit");
        out.restricted.map.push_back(idx);
        for (std::size_t j = cur.size(); j-- > 0;) {
            if (++cur[j] < top.factors[static_cast<std::size_t>(out.dependent_factors[j])].size()) break;
            cur[j] = 0;
        }
    }
    const Classification c = classify(out.restricted);
    bool independent_terminal = true;
    for (std::size_t k = 0; k < top.factors.size(); ++k)
        if (!dep.count(static_cast<int>(k)) && !top.factors[k].terminal()) independent_terminal = false;
    const bool surj = is_surjective(c);
    const bool inj = is_injective(c) && independent_terminal;
    out.classification = surj && inj ? Classification::bijective
                         : surj      ? Classification::surjective_only
                         : inj       ? Classification::injective_only
                                     : Classification::neither;
    return out;
}

CanonicalRanArrow ran_on_morphism(const SeqAlignFunctor& f, const SegmentMorphism& h, const RanOptions& opts) {
    return canonical_ran_arrow(f, RanCone{h.src, {h.dst}, {}, {h}}, opts);
}

std::vector<Word> unit_forward(const SeqAlignFunctor& f, int i, const CommaCategory& c, const Word& z) {
    const auto& fi = f.spec.maps.at(static_cast<std::size_t>(i));
    const int lvl = fi(f.level);
    if (!(z.segment == push_colors(fi, c.tau)) || z.level != lvl) throw invalid_input("word does not live on the pushed segment");
    std::vector<Word> out;
    for (const auto& o : c.objects) {
        const auto pm = push_colors_morphism(fi, o.f);
        out.push_back(word_image(truncate_morphism(pm, lvl), pm.dst, z, f.alphabet.basepoint));
    }
    return out;
}

std::vector<Word> unit_forward(const SeqAlignFunctor& f, int i, const Segment& tau, const Word& z) {
    return unit_forward(f, i, comma(tau, f.base), z);
}

std::optional<std::vector<int>> unit_constraints(const SeqAlignFunctor& f, int i, const CommaCategory& c,
                                                 const std::vector<std::optional<Word>>& target) {
    if (target.size() != c.objects.size()) throw invalid_input("one target component per comma object is required");
    const auto& fi = f.spec.maps.at(static_cast<std::size_t>(i));
    const int lvl = fi(f.level);
    const auto tr = truncate(push_colors(fi, c.tau), lvl);
    std::vector<int> z(static_cast<std::size_t>(tr.size()), -1);
    for (std::size_t o = 0; o < c.objects.size(); ++o) {
        if (!target[o]) continue;
        const auto pm = truncate_morphism(push_colors_morphism(fi, c.objects[o].f), lvl);
        const auto& w = *target[o];
        if (w.letters.size() != pm.mapping.size()) throw invalid_input("target component has the wrong shape");
        for (std::size_t k = 0; k < pm.mapping.size(); ++k) {
            const int src = pm.mapping[k];
            const int letter = w.letters[k];
            if (src == star) {
                if (letter != f.alphabet.basepoint) return std::nullopt;
                continue;
            }
            int& slot = z[static_cast<std::size_t>(tr.rank(src))];
            if (slot == -1) slot = letter;
            else if (slot != letter) return std::nullopt;
        }
    }
    return z;
}

std::vector<Word> unit_solve(const SeqAlignFunctor& f, int i, const CommaCategory& c,
                             const std::vector<std::optional<Word>>& target, std::size_t cap) {
    const auto z = unit_constraints(f, i, c, target);
    if (!z) return {};
    const auto& fi = f.spec.maps.at(static_cast<std::size_t>(i));
    const Segment pushed = push_colors(fi, c.tau);
    std::vector<std::size_t> free;
    for (std::size_t k = 0; k < z->size(); ++k)
        if ((*z)[k] < 0) free.push_back(k);
    Count total;
    for (std::size_t k = 0; k < free.size(); ++k) total *= static_cast<std::uint64_t>(f.alphabet.size());
    if (total.overflow || total.value > cap) throw resource_error("unit solutions exceed the cap");
    std::vector<Word> out;
    Word w{pushed, fi(f.level), *z};
    std::vector<int> digits(free.size(), 0);
    for (std::uint64_t n = 0; n < total.value; ++n) {
        for (std::size_t k = 0; k < free.size(); ++k) w.letters[free[k]] = digits[k];
        out.push_back(w);
        for (std::size_t k = free.size(); k-- > 0;) {
            if (++digits[k] < f.alphabet.size()) break;
            digits[k] = 0;
        }
    }
    return out;
}

std::vector<Word> unit_solve(const SeqAlignFunctor& f, int i, const Segment& tau,
                             const std::vector<std::optional<Word>>& target, std::size_t cap) {
    return unit_solve(f, i, comma(tau, f.base), target, cap);
}

std::vector<std::optional<Word>> project_ran(const RanTuple& x, int i) {
    std::vector<std::optional<Word>> out;
    for (const auto& c : x) {
        if (c) out.push_back(project(*c, i));
        else out.push_back(std::nullopt);
    }
    return out;
}

}  // namespace seqcat
