#include "seqcat/slices.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace seqcat {

namespace {

using Assignment = std::vector<int>;

// Unit constraints of each tuple of each factor, one assignment per requested index.
using FactorConstraints = std::vector<std::vector<std::optional<std::vector<Assignment>>>>;

FactorConstraints factor_constraints(const SeqAlignFunctor& f, const RanValue& ran, const std::vector<int>& indices) {
    FactorConstraints out(ran.factors.size());
    for (std::size_t k = 0; k < ran.factors.size(); ++k) {
        const auto& fac = ran.factors[k];
        for (const auto& t : fac.tuples) {
            std::vector<Assignment> per_index;
            bool ok = true;
            for (int i : indices) {
                std::vector<std::optional<Word>> target(ran.comma.objects.size());
                for (std::size_t q = 0; q < fac.nodes.size(); ++q) {
                    const auto node = static_cast<std::size_t>(fac.nodes[q]);
                    target[node] = project(ran.node_values[node][static_cast<std::size_t>(t[q])], i);
                }
                auto z = unit_constraints(f, i, ran.comma, target);
                if (!z) {
                    ok = false;
                    break;
                }
                per_index.push_back(std::move(*z));
            }
            if (ok) out[k].push_back(std::move(per_index));
            else out[k].push_back(std::nullopt);
        }
    }
    return out;
}

bool merge_into(Assignment& acc, const Assignment& add) {
    for (std::size_t p = 0; p < acc.size(); ++p) {
        if (add[p] < 0) continue;
        if (acc[p] < 0) acc[p] = add[p];
        else if (acc[p] != add[p]) return false;
    }
    return true;
}

struct JoinEntry {
    Count n;
    std::vector<int> choice;
};

// Groups the elements of Ran by their combined unit constraints, factor by factor.
std::map<std::vector<Assignment>, JoinEntry> join(const SeqAlignFunctor& f, const RanValue& ran,
                                                  const std::vector<int>& indices, std::size_t cap) {
    const auto cons = factor_constraints(f, ran, indices);
    std::vector<Assignment> start;
    for (int i : indices) {
        const auto sz = unit_constraints(f, i, ran.comma, std::vector<std::optional<Word>>(ran.comma.objects.size()));
        start.push_back(sz ? *sz : Assignment{});
    }
    std::map<std::vector<Assignment>, JoinEntry> states{{start, JoinEntry{}}};
    for (std::size_t k = 0; k < ran.factors.size(); ++k) {
        std::map<std::vector<Assignment>, JoinEntry> next;
        for (const auto& [key, entry] : states) {
            for (std::size_t t = 0; t < cons[k].size(); ++t) {
                if (!cons[k][t]) continue;
                auto merged = key;
                bool ok = true;
                for (std::size_t j = 0; j < indices.size() && ok; ++j) ok = merge_into(merged[j], (*cons[k][t])[j]);
                if (!ok) continue;
                auto [it, fresh] = next.try_emplace(std::move(merged), JoinEntry{Count::zero(), {}});
                if (fresh) {
                    it->second.choice = entry.choice;
                    it->second.choice.push_back(static_cast<int>(t));
                }
                it->second.n += entry.n;
            }
        }
        if (next.size() > cap) throw resource_error("slice join exceeds the cap");
        states = std::move(next);
    }
    return states;
}

Count free_power(const Assignment& a, int alphabet_size) {
    Count c;
    for (int v : a)
        if (v < 0) c *= static_cast<std::uint64_t>(alphabet_size);
    return c;
}

}  // namespace

std::vector<Word> lifts_of(const SeqAlignFunctor& f, int i, const RanValue& ran, const RanTuple& x, std::size_t cap) {
    return unit_solve(f, i, ran.comma, project_ran(x, i), cap);
}

SliceResult slice_eval(const SeqAlignFunctor& f, int i, const RanValue& ran, const SliceOptions& opts) {
    SliceResult r;
    r.index = i;
    r.ran_size = ran.cardinality();
    r.support = Count::zero();
    r.pairs = Count::zero();
    const auto states = join(f, ran, {i}, opts.cap);
    for (const auto& [key, entry] : states) {
        r.support += entry.n;
        Count p = entry.n;
        p *= free_power(key[0], f.alphabet.size());
        r.pairs += p;
    }
    if (!r.ran_size.overflow && r.ran_size.value <= opts.list_cap) {
        r.listed = true;
        for (const auto& ch : ran.choices(opts.cap)) {
            const RanTuple x = ran.element(ch);
            for (auto& z : lifts_of(f, i, ran, x, opts.cap)) r.elements.push_back({x, std::move(z), i});
        }
    } else if (!states.empty()) {
        const RanTuple x = ran.element(states.begin()->second.choice);
        const auto zs = lifts_of(f, i, ran, x, opts.cap);
        if (!zs.empty()) r.elements.push_back({x, zs.front(), i});
    }
    return r;
}

SliceResult slice_eval(const SeqAlignFunctor& f, int i, const Segment& tau, const SliceOptions& opts) {
    return slice_eval(f, i, ran_eval(f, tau, RanOptions{opts.cap}), opts);
}

WidePullback wide_pullback(const SeqAlignFunctor& f, const RanValue& ran, const std::vector<int>& indices,
                           const SliceOptions& opts) {
    WidePullback w;
    w.indices = indices;
    std::sort(w.indices.begin(), w.indices.end());
    w.indices.erase(std::unique(w.indices.begin(), w.indices.end()), w.indices.end());
    w.support = Count::zero();
    const auto states = join(f, ran, w.indices, opts.cap);
    for (const auto& [key, entry] : states) w.support += entry.n;
    if (!states.empty()) {
        w.witness = ran.element(states.begin()->second.choice);
        for (int i : w.indices) {
            const auto zs = unit_solve(f, i, ran.comma, project_ran(*w.witness, i), opts.cap);
            if (zs.empty()) throw std::logic_error("wide pullback witness has no lift");
            w.witness_z.push_back(zs.front());
        }
    }
    return w;
}

std::vector<WidePullback> pareto_subsets(const SeqAlignFunctor& f, const RanValue& ran, const SliceOptions& opts) {
    const int k = f.spec.size();
    if (k > 20) throw resource_error("too many indices for a subset search");
    std::vector<WidePullback> all;
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        all.push_back(wide_pullback(f, ran, idx, opts));
    }
    auto key = [](const Count& c) { return c.overflow ? std::numeric_limits<std::uint64_t>::max() : c.value; };
    std::vector<WidePullback> front;
    for (std::size_t a = 0; a < all.size(); ++a) {
        bool dominated = false;
        for (std::size_t b = 0; b < all.size() && !dominated; ++b) {
            if (a == b) continue;
            const auto sa = all[a].indices.size(), sb = all[b].indices.size();
            const auto ca = key(all[a].support), cb = key(all[b].support);
            dominated = sb >= sa && cb >= ca && (sb > sa || cb > ca);
        }
        if (!dominated) front.push_back(all[a]);
    }
    return front;
}

std::string to_string(MechanismKind k) {
    switch (k) {
        case MechanismKind::duplication: return "duplication";
        case MechanismKind::inversion: return "inversion";
        case MechanismKind::custom: return "custom";
    }
    return "custom";
}

MechanismTemplate duplication_template() {
    return {MechanismKind::duplication, "duplication", 1, {{0}, {1}}, false};
}

MechanismTemplate inversion_template() {
    return {MechanismKind::inversion, "inversion", 3, {{0, 1}, {1, 3}, {3, 4}}, true};
}

bool MechanismReport::detected(MechanismKind k) const {
    return std::any_of(matches.begin(), matches.end(), [k](const MechanismMatch& m) { return m.kind == k && m.lifted; });
}

namespace {

struct LegShape {
    std::vector<int> inserted;
    bool visible = true;
    bool above = true;
};

LegShape leg_shape(const SegmentMorphism& pm, int level) {
    LegShape s;
    std::vector<bool> hit(static_cast<std::size_t>(pm.dst.n1()), false);
    for (int v : pm.f1) hit[static_cast<std::size_t>(v)] = true;
    const auto& om = *pm.dst.omega();
    for (int p = 0; p < pm.dst.n1(); ++p) {
        if (hit[static_cast<std::size_t>(p)]) continue;
        s.inserted.push_back(p);
        const int c = pm.dst.color_at(p);
        const bool vis = om.leq(level, c);
        s.visible = s.visible && vis;
        s.above = s.above && vis && !om.leq(c, level);
    }
    return s;
}

}  // namespace

MechanismReport detect_mechanisms(const SeqAlignFunctor& f, int i, const Segment& tau,
                                  const std::vector<MechanismTemplate>& templates, const SliceOptions& opts) {
    MechanismReport rep;
    rep.index = i;
    rep.tau = tau;
    const auto& fi = f.spec.maps.at(static_cast<std::size_t>(i));
    const int lvl = fi(f.level);
    const CommaCategory c = comma(tau, f.base);
    std::vector<LegShape> shapes;
    for (const auto& o : c.objects) shapes.push_back(leg_shape(push_colors_morphism(fi, o.f), lvl));

    for (const auto& tpl : templates) {
        int max_dst = 0;
        for (const auto& o : c.objects) max_dst = std::max(max_dst, o.f.dst.n1());
        for (int p = 0; p < max_dst; ++p) {
            // Candidate comma objects per leg of the template.
            std::vector<std::vector<int>> cands;
            for (const auto& rel : tpl.leg_insertions) {
                std::vector<int> want;
                for (int r : rel) want.push_back(p + r);
                std::vector<int> found;
                for (std::size_t o = 0; o < c.objects.size(); ++o) {
                    const auto& s = shapes[o];
                    if (s.inserted == want && (tpl.above_level ? s.above : s.visible)) found.push_back(static_cast<int>(o));
                }
                cands.push_back(std::move(found));
            }
            if (std::any_of(cands.begin(), cands.end(), [](const auto& v) { return v.empty(); })) continue;

            MechanismMatch best;
            bool have = false;
            std::vector<std::size_t> pick(cands.size(), 0);
            for (std::size_t tried = 0; tried < opts.list_cap; ++tried) {
                std::vector<int> objs;
                for (std::size_t j = 0; j < cands.size(); ++j) objs.push_back(cands[j][pick[j]]);
                std::set<int> distinct(objs.begin(), objs.end());
                if (distinct.size() == objs.size()) {
                    const RanValue sub = ran_eval_restricted(f, c, objs, RanOptions{opts.cap});
                    const SliceResult sl = slice_eval(f, i, sub, SliceOptions{opts.cap, 0});
                    MechanismMatch m{tpl.kind, tpl.name, p, tpl.block_len, objs, false, std::nullopt, std::nullopt, {}};
                    if (!sl.elements.empty()) {
                        m.lifted = true;
                        m.x = sl.elements.front().x;
                        m.z = sl.elements.front().z;
                    }
                    std::set<int> imp;
                    for (int o : objs)
                        for (int j : visible_indices(f.spec, f.base.objects[static_cast<std::size_t>(c.objects[static_cast<std::size_t>(o)].base_object)], f.level))
                            if (j != i) imp.insert(j);
                    m.implicated.assign(imp.begin(), imp.end());
                    if (!have || (m.lifted && !best.lifted)) {
                        best = std::move(m);
                        have = true;
                    }
                    if (best.lifted) break;
                }
                std::size_t j = pick.size();
                while (j-- > 0) {
                    if (++pick[j] < cands[j].size()) break;
                    pick[j] = 0;
                }
                if (j == static_cast<std::size_t>(-1)) break;
            }
            if (have) rep.matches.push_back(std::move(best));
        }
    }
    return rep;
}

}  // namespace seqcat
