#include "seqcat/segments.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "seqcat/errors.hpp"

namespace seqcat {

namespace {

std::string compact_label(const std::string& s) {
    std::string out;
    for (char c : s)
        if (c != ',' && c != ' ') out.push_back(c);
    return out;
}

bool is_boolean(const Preorder& p) {
    return p.size() == 2 && p.label(0) == "0" && p.label(1) == "1" && p.leq(0, 1) && !p.leq(1, 0);
}

}  // namespace

Segment::Segment(PreorderPtr omega, std::vector<int> topology, std::vector<int> colors)
    : omega_(std::move(omega)), topology_(std::move(topology)), colors_(std::move(colors)) {
    if (!omega_) throw invalid_input("segment needs an ambient preorder");
    int expected = 0;
    for (int t : topology_) {
        if (t == expected) ++expected;
        else if (t != expected - 1) throw invalid_input("segment topology must be a monotone surjection");
    }
    if (expected != n0()) throw invalid_input("segment topology must be surjective onto its patches");
    for (int c : colors_)
        if (c < 0 || c >= omega_->size()) throw invalid_input("segment color outside the preorder");
}

std::vector<int> Segment::patch_sizes() const {
    std::vector<int> sizes(static_cast<std::size_t>(n0()), 0);
    for (int t : topology_) ++sizes[static_cast<std::size_t>(t)];
    return sizes;
}

bool Segment::operator==(const Segment& o) const {
    return topology_ == o.topology_ && colors_ == o.colors_ && same_preorder(omega_, o.omega_);
}

bool Segment::operator<(const Segment& o) const {
    if (topology_.size() != o.topology_.size()) return topology_.size() < o.topology_.size();
    if (topology_ != o.topology_) return topology_ < o.topology_;
    return colors_ < o.colors_;
}

Segment trivial_segment(const PreorderPtr& omega, int n, int b) {
    if (n < 0) throw invalid_input("segment size must be non-negative");
    if (b < 0 || b >= omega->size()) throw invalid_input("color outside the preorder");
    if (n == 0) return Segment(omega, {}, {});
    return Segment(omega, std::vector<int>(static_cast<std::size_t>(n), 0), {b});
}

Segment segment_from_patches(const PreorderPtr& omega, const std::vector<int>& sizes, const std::vector<int>& colors) {
    if (sizes.size() != colors.size()) throw invalid_input("one color per patch is required");
    std::vector<int> topo;
    for (std::size_t p = 0; p < sizes.size(); ++p) {
        if (sizes[p] <= 0) throw invalid_input("patches must be non-empty");
        topo.insert(topo.end(), static_cast<std::size_t>(sizes[p]), static_cast<int>(p));
    }
    return Segment(omega, std::move(topo), colors);
}

std::vector<std::string> validate_morphism(const SegmentMorphism& m) {
    std::vector<std::string> errs;
    if (!same_preorder(m.src.omega(), m.dst.omega())) errs.push_back("segments over different preorders");
    if (static_cast<int>(m.f1.size()) != m.src.n1()) errs.push_back("f1 is not total");
    if (static_cast<int>(m.f0.size()) != m.src.n0()) errs.push_back("f0 is not total");
    if (!errs.empty()) return errs;
    for (std::size_t i = 0; i < m.f1.size(); ++i) {
        if (m.f1[i] < 0 || m.f1[i] >= m.dst.n1()) errs.push_back("f1 value out of range at " + std::to_string(i));
        else if (i > 0 && m.f1[i] <= m.f1[i - 1]) errs.push_back("f1 not strictly increasing at " + std::to_string(i));
    }
    for (std::size_t p = 0; p < m.f0.size(); ++p) {
        if (m.f0[p] < 0 || m.f0[p] >= m.dst.n0()) errs.push_back("f0 value out of range at " + std::to_string(p));
        else if (p > 0 && m.f0[p] < m.f0[p - 1]) errs.push_back("f0 not monotone at " + std::to_string(p));
    }
    if (!errs.empty()) return errs;
    for (int i = 0; i < m.src.n1(); ++i)
        if (m.f0[static_cast<std::size_t>(m.src.patch(i))] != m.dst.patch(m.f1[static_cast<std::size_t>(i)]))
            errs.push_back("square does not commute at " + std::to_string(i));
    const auto& om = *m.src.omega();
    for (int p = 0; p < m.src.n0(); ++p)
        if (!om.leq(m.dst.color(m.f0[static_cast<std::size_t>(p)]), m.src.color(p)))
            errs.push_back("color does not decrease at patch " + std::to_string(p));
    return errs;
}

SegmentMorphism identity(const Segment& s) {
    SegmentMorphism m{s, s, {}, {}};
    for (int i = 0; i < s.n1(); ++i) m.f1.push_back(i);
    for (int p = 0; p < s.n0(); ++p) m.f0.push_back(p);
    return m;
}

SegmentMorphism compose(const SegmentMorphism& g, const SegmentMorphism& f) {
    if (!(f.dst == g.src)) throw invalid_input("segment morphisms are not composable");
    SegmentMorphism m{f.src, g.dst, {}, {}};
    for (int v : f.f1) m.f1.push_back(g.f1[static_cast<std::size_t>(v)]);
    for (int v : f.f0) m.f0.push_back(g.f0[static_cast<std::size_t>(v)]);
    return m;
}

std::optional<std::vector<int>> induce_f0(const std::vector<int>& f1, const Segment& src, const Segment& dst) {
    if (static_cast<int>(f1.size()) != src.n1()) return std::nullopt;
    std::vector<int> f0(static_cast<std::size_t>(src.n0()), -1);
    for (int i = 0; i < src.n1(); ++i) {
        const int j = f1[static_cast<std::size_t>(i)];
        if (j < 0 || j >= dst.n1() || (i > 0 && j <= f1[static_cast<std::size_t>(i - 1)])) return std::nullopt;
        int& slot = f0[static_cast<std::size_t>(src.patch(i))];
        if (slot == -1) slot = dst.patch(j);
        else if (slot != dst.patch(j)) return std::nullopt;
    }
    const auto& om = *src.omega();
    for (int p = 0; p < src.n0(); ++p)
        if (!om.leq(dst.color(f0[static_cast<std::size_t>(p)]), src.color(p))) return std::nullopt;
    return f0;
}

std::optional<SegmentMorphism> make_morphism(const Segment& src, const Segment& dst, const std::vector<int>& f1) {
    if (!same_preorder(src.omega(), dst.omega())) throw invalid_input("segments over different preorders");
    auto f0 = induce_f0(f1, src, dst);
    if (!f0) return std::nullopt;
    return SegmentMorphism{src, dst, f1, std::move(*f0)};
}

std::vector<SegmentMorphism> enumerate_morphisms(const Segment& src, const Segment& dst) {
    if (!same_preorder(src.omega(), dst.omega())) throw invalid_input("segments over different preorders");
    std::vector<SegmentMorphism> out;
    const int n = src.n1();
    const int m = dst.n1();
    if (n > m) return out;
    const auto& om = *src.omega();
    std::vector<int> f1(static_cast<std::size_t>(n));
    std::vector<int> f0(static_cast<std::size_t>(src.n0()), -1);
    // Depth-first over strictly increasing f1, pruning on fiber and color conditions.
    std::function<void(int, int)> rec = [&](int i, int lo) {
        if (i == n) {
            out.push_back({src, dst, f1, f0});
            return;
        }
        const int p = src.patch(i);
        const bool first_in_patch = (i == 0 || src.patch(i - 1) != p);
        for (int j = lo; j <= m - (n - i); ++j) {
            const int q = dst.patch(j);
            if (first_in_patch) {
                if (!om.leq(dst.color(q), src.color(p))) continue;
                f0[static_cast<std::size_t>(p)] = q;
            } else if (f0[static_cast<std::size_t>(p)] != q) {
                if (q > f0[static_cast<std::size_t>(p)]) break;
                continue;
            }
            f1[static_cast<std::size_t>(i)] = j;
            rec(i + 1, j + 1);
        }
        if (first_in_patch) f0[static_cast<std::size_t>(p)] = -1;
    };
    rec(0, 0);
    return out;
}

std::optional<SegmentMorphism> quasi_homologous_morphism(const Segment& src, const Segment& dst) {
    if (src.n1() != dst.n1()) throw invalid_input("quasi-homologous morphism needs equal domains");
    std::vector<int> f1(static_cast<std::size_t>(src.n1()));
    for (int i = 0; i < src.n1(); ++i) f1[static_cast<std::size_t>(i)] = i;
    return make_morphism(src, dst, f1);
}

Segment push_colors(const MonotoneMap& f, const Segment& s) {
    if (!same_preorder(f.dom(), s.omega())) throw invalid_input("segment colored outside the map's domain");
    std::vector<int> colors;
    for (int c : s.colors()) colors.push_back(f(c));
    return Segment(f.cod(), s.topology(), std::move(colors));
}

SegmentMorphism push_colors_morphism(const MonotoneMap& f, const SegmentMorphism& m) {
    return {push_colors(f, m.src), push_colors(f, m.dst), m.f1, m.f0};
}

bool is_homologous(const Segment& a, const Segment& b) { return a.topology() == b.topology(); }
bool is_quasi_homologous(const Segment& a, const Segment& b) { return a.n1() == b.n1(); }

std::string to_string(const Segment& s) {
    const auto& om = *s.omega();
    const bool boolean = is_boolean(om);
    bool single = true;
    for (const auto& l : om.labels()) single = single && l.size() == 1;
    std::string out;
    const auto sizes = s.patch_sizes();
    for (int p = 0; p < s.n0(); ++p) {
        out += "(";
        const std::string& label = om.label(s.color(p));
        for (int k = 0; k < sizes[static_cast<std::size_t>(p)]; ++k) {
            if (boolean) out += (s.color(p) == 1 ? "•" : "◦");
            else if (single) out += label;
            else out += (k ? " " : "") + label;
        }
        out += ")";
    }
    return out;
}

std::string to_literal(const Segment& s) {
    const auto& om = *s.omega();
    if (s.n0() <= 1) {
        const int c = s.n0() == 1 ? s.color(0) : 0;
        return "(!" + std::to_string(s.n1()) + "," + compact_label(om.label(c)) + ")";
    }
    bool single = true;
    for (int c : s.colors()) single = single && om.label(c).size() == 1;
    std::string out;
    const auto sizes = s.patch_sizes();
    for (int p = 0; p < s.n0(); ++p) {
        const std::string& label = om.label(s.color(p));
        out += "(";
        if (single)
            for (int k = 0; k < sizes[static_cast<std::size_t>(p)]; ++k) out += label;
        else
            out += std::to_string(sizes[static_cast<std::size_t>(p)]) + ":" + compact_label(label);
        out += ")";
    }
    return out;
}

Segment parse_segment(const PreorderPtr& omega, const std::string& literal) {
    std::string s;
    for (char c : literal)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    auto fail = [&]() -> parse_error { return parse_error("malformed segment literal: " + literal); };
    if (s.rfind("(!", 0) == 0) {
        if (s.back() != ')') throw fail();
        const auto comma = s.find(',');
        if (comma == std::string::npos) throw fail();
        int n = 0;
        try {
            n = std::stoi(s.substr(2, comma - 2));
        } catch (const std::exception&) {
            throw fail();
        }
        return trivial_segment(omega, n, omega->index_of(s.substr(comma + 1, s.size() - comma - 2)));
    }
    std::vector<int> sizes, colors;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] != '(') throw fail();
        // Labels may contain brackets, so match the closing parenthesis by depth.
        int depth = 0;
        std::size_t j = i;
        for (; j < s.size(); ++j) {
            if (s[j] == '(') ++depth;
            else if (s[j] == ')' && --depth == 0) break;
        }
        if (j >= s.size()) throw fail();
        const std::string body = s.substr(i + 1, j - i - 1);
        if (body.empty()) throw fail();
        const auto colon = body.find(':');
        if (colon != std::string::npos) {
            try {
                sizes.push_back(std::stoi(body.substr(0, colon)));
            } catch (const std::exception&) {
                throw fail();
            }
            colors.push_back(omega->index_of(body.substr(colon + 1)));
        } else {
            for (char c : body)
                if (c != body[0]) throw parse_error("patch with mixed colors in literal: " + literal);
            sizes.push_back(static_cast<int>(body.size()));
            colors.push_back(omega->index_of(std::string(1, body[0])));
        }
        i = j + 1;
    }
    if (sizes.empty()) throw fail();
    return segment_from_patches(omega, sizes, colors);
}

}  // namespace seqcat
