#include "seqcat/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace seqcat::io {

namespace {

template <class T>
T get(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw parse_error(std::string("missing field: ") + key);
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw parse_error(std::string("bad field: ") + key);
    }
}

template <class T>
T get_or(const json& j, const char* key, T fallback) {
    return j.is_object() && j.contains(key) ? get<T>(j, key) : fallback;
}

void expect_schema(const json& j, const char* schema) {
    if (j.is_object() && j.contains("schema") && j.at("schema") != schema)
        throw parse_error(std::string("expected schema ") + schema);
}

json count_json(const Count& c) { return c.overflow ? json(c.str()) : json(c.value); }

bool single_char_alphabet(const PointedAlphabet& a) {
    for (int s = 0; s < a.size(); ++s) {
        if (s == a.basepoint) continue;
        const auto& sym = a.symbols[static_cast<std::size_t>(s)];
        if (sym.size() != 1 || sym[0] == gap_char) return false;
    }
    return true;
}

Word word_from_json(const PointedAlphabet& a, const Segment& s, int level, const json& row) {
    if (row.is_string()) return word_from_row(a, s, level, row.get<std::string>());
    if (!row.is_array()) throw parse_error("row must be a string or an array of symbols");
    Word w{s, level, {}};
    for (const auto& sym : row) w.letters.push_back(a.index_of(sym.get<std::string>()));
    if (static_cast<int>(w.letters.size()) != truncate(s, level).size()) throw parse_error("row has the wrong length");
    return w;
}

AlignedTuple tuple_from_json(const AlignmentSpec& spec, const PointedAlphabet& a, const Segment& s, int level,
                             const json& rows) {
    if (!rows.is_array() || static_cast<int>(rows.size()) != spec.size()) throw parse_error("one row per index is required");
    AlignedTuple x{s, level, {}};
    for (int i = 0; i < spec.size(); ++i) {
        const auto& fi = spec.maps[static_cast<std::size_t>(i)];
        x.components.push_back(word_from_json(a, push_colors(fi, s), fi(level), rows[static_cast<std::size_t>(i)]));
    }
    return x;
}

std::vector<std::pair<std::string, std::string>> pairs_of(const json& j, const char* key) {
    std::vector<std::pair<std::string, std::string>> out;
    if (!j.contains(key)) return out;
    for (const auto& p : j.at(key)) {
        if (!p.is_array() || p.size() != 2) throw parse_error(std::string("entries of ") + key + " must be pairs");
        out.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
    }
    return out;
}

json comma_object_json(const CommaCategory& c, int o) {
    const auto& obj = c.objects[static_cast<std::size_t>(o)];
    return {{"target", to_literal(obj.f.dst)}, {"f1", obj.f.f1}};
}

}  // namespace

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

NamedSequences parse_fasta(const std::string& text) {
    NamedSequences out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == ';') continue;
        if (line[0] == '>') {
            std::string name = line.substr(1);
            const auto end = name.find_first_of(" \t");
            if (end != std::string::npos) name.resize(end);
            if (name.empty()) throw parse_error("FASTA header without a name");
            out.emplace_back(name, "");
            continue;
        }
        if (out.empty()) throw parse_error("FASTA sequence before the first header");
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) out.back().second.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
    std::set<std::string> names;
    for (const auto& [n, s] : out) {
        if (!names.insert(n).second) throw parse_error("duplicate sequence name: " + n);
        if (s.empty()) throw parse_error("empty sequence: " + n);
    }
    return out;
}

NamedSequences parse_sequences(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (text[first] == '[' || text[first] == '{')) {
        const json j = parse_json(text);
        const json& arr = j.is_object() ? j.at("sequences") : j;
        NamedSequences out;
        for (const auto& e : arr) out.emplace_back(get<std::string>(e, "name"), get<std::string>(e, "sequence"));
        return out;
    }
    return parse_fasta(text);
}

json preorder_to_json(const PreorderPtr& p) {
    json leq = json::array();
    for (int x = 0; x < p->size(); ++x)
        for (int y = 0; y < p->size(); ++y)
            if (x != y && p->leq(x, y)) leq.push_back({p->label(x), p->label(y)});
    return {{"labels", p->labels()}, {"leq", leq}};
}

PreorderPtr preorder_from_json(const json& j) {
    if (j.is_object() && j.contains("chain")) return chain_preorder(get<int>(j, "chain"));
    const auto labels = get<std::vector<std::string>>(j, "labels");
    const std::size_t n = labels.size();
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    for (std::size_t k = 0; k < n; ++k) rel[k][k] = true;
    auto idx = [&](const std::string& l) {
        auto it = std::find(labels.begin(), labels.end(), l);
        if (it == labels.end()) throw parse_error("unknown label in leq: " + l);
        return static_cast<std::size_t>(it - labels.begin());
    };
    for (const auto& [a, b] : pairs_of(j, "leq")) rel[idx(a)][idx(b)] = true;
    // Transitive closure.
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (rel[a][k] && rel[k][b]) rel[a][b] = true;
    return make_preorder(labels, rel);
}

json alphabet_to_json(const PointedAlphabet& a) {
    return {{"symbols", a.symbols}, {"basepoint", a.symbols.at(static_cast<std::size_t>(a.basepoint))}};
}

PointedAlphabet alphabet_from_json(const json& j) {
    return make_alphabet(get<std::vector<std::string>>(j, "symbols"), get<std::string>(j, "basepoint"));
}

TracebackRule parse_traceback_rule(const std::string& s) {
    if (s == "match-diagonal") return TracebackRule::match_diagonal;
    if (s == "all-optimal") return TracebackRule::all_optimal;
    throw invalid_input("unknown traceback rule: " + s);
}

std::string to_string(TracebackRule r) {
    return r == TracebackRule::match_diagonal ? "match-diagonal" : "all-optimal";
}

Config config_from_json(const json& j) {
    expect_schema(j, schema_config);
    Config c;
    c.factor = j.contains("factor") ? preorder_from_json(j.at("factor")) : boolean_preorder();
    c.names = get<std::vector<std::string>>(j, "names");
    if (std::set<std::string>(c.names.begin(), c.names.end()).size() != c.names.size())
        throw invalid_input("individual names must be unique");
    if (j.contains("alphabet")) c.alphabet = alphabet_from_json(j.at("alphabet"));
    c.level = get<std::string>(j, "level");
    if (j.contains("objects") && j.at("objects").is_string()) {
        if (j.at("objects") != "example") throw parse_error("objects must be a list of literals or \"example\"");
        c.example_objects = true;
    } else {
        c.objects = get_or<std::vector<std::string>>(j, "objects", {});
    }
    c.links = pairs_of(j, "links");
    c.hub_mode = parse_hub_mode(get_or<std::string>(j, "hub_mode", "lazy"));
    c.hub_cap = get_or<std::size_t>(j, "hub_cap", c.hub_cap);
    c.mode = parse_align_mode(get_or<std::string>(j, "mode", "global"));
    c.traceback = parse_traceback_rule(get_or<std::string>(j, "traceback", "match-diagonal"));
    c.cap = get_or<std::size_t>(j, "cap", default_cap);
    if (c.cap == 0 || c.hub_cap == 0) throw invalid_input("caps must be positive");
    if (j.contains("recolor")) {
        const auto& r = j.at("recolor");
        RecolorSpec s;
        s.chain_size = get_or<int>(r, "chain_size", 0);
        s.embedding = get_or<std::vector<int>>(r, "embedding", {});
        s.recolor = pairs_of(r, "recolor");
        s.new_hubs = get_or<std::vector<std::string>>(r, "new_hubs", {});
        s.links = pairs_of(r, "links");
        c.recolor = s;
    }
    // Fail early on a level outside Ω.
    spec_of(c).omega()->index_of(c.level);
    return c;
}

json config_to_json(const Config& c) {
    json j{{"schema", schema_config},
           {"factor", preorder_to_json(c.factor)},
           {"names", c.names},
           {"alphabet", alphabet_to_json(c.alphabet)},
           {"level", c.level},
           {"hub_mode", to_string(c.hub_mode)},
           {"hub_cap", c.hub_cap},
           {"mode", to_string(c.mode)},
           {"traceback", to_string(c.traceback)},
           {"cap", c.cap}};
    j["objects"] = c.example_objects ? json("example") : json(c.objects);
    json links = json::array();
    for (const auto& [a, b] : c.links) links.push_back({a, b});
    j["links"] = links;
    if (c.recolor) {
        json r{{"chain_size", c.recolor->chain_size}, {"embedding", c.recolor->embedding}, {"new_hubs", c.recolor->new_hubs}};
        json rc = json::array(), rl = json::array();
        for (const auto& [a, b] : c.recolor->recolor) rc.push_back({a, b});
        for (const auto& [a, b] : c.recolor->links) rl.push_back({a, b});
        r["recolor"] = rc;
        r["links"] = rl;
        j["recolor"] = r;
    }
    return j;
}

AlignmentSpec spec_of(const Config& c) { return product_spec(c.factor, c.names); }

SeqAlignFunctor build_functor(const Config& c, const NamedSequences& individuals) {
    const auto spec = spec_of(c);
    const auto& om = spec.omega();
    BuildPolicy policy;
    if (c.example_objects) {
        policy.objects = example_objects(om);
    } else {
        for (const auto& l : c.objects) policy.objects.push_back(parse_segment(om, l));
    }
    auto index = [&](const std::string& lit) {
        const Segment s = parse_segment(om, lit);
        auto it = std::find(policy.objects.begin(), policy.objects.end(), s);
        if (it == policy.objects.end()) throw invalid_input("link endpoint is not an object: " + lit);
        return static_cast<int>(it - policy.objects.begin());
    };
    for (const auto& [a, b] : c.links) policy.links.emplace_back(index(a), index(b));
    policy.level = om->index_of(c.level);
    policy.hub_mode = c.hub_mode;
    policy.hub_cap = c.hub_cap;
    SeqAlignFunctor f = build_from_pairwise(spec, c.alphabet, individuals,
                                            align_all_pairs(individuals, c.mode, c.traceback), policy);
    if (!c.recolor) return f;
    RecolorPlan plan;
    plan.chain_size = c.recolor->chain_size;
    plan.embedding = c.recolor->embedding;
    const PreorderPtr new_omega =
        plan.chain_size ? product_spec(chain_preorder(plan.chain_size), c.names).omega() : om;
    for (const auto& [src, dst] : c.recolor->recolor) {
        const int k = f.base.index_of(parse_segment(om, src));
        if (k < 0) throw invalid_input("recolor source is not an object: " + src);
        plan.recolor.emplace_back(k, parse_segment(new_omega, dst));
    }
    for (const auto& h : c.recolor->new_hubs) plan.new_hubs.push_back(parse_segment(new_omega, h));
    for (const auto& [a, b] : c.recolor->links)
        plan.links.emplace_back(parse_segment(new_omega, a), parse_segment(new_omega, b));
    return extend_colors(f, plan);
}

json alignments_to_json(const std::vector<PairAlignments>& pairs, AlignMode mode, TracebackRule rule) {
    json arr = json::array();
    for (const auto& p : pairs) {
        json als = json::array();
        for (const auto& a : p.alignments) als.push_back({{"top", a.top}, {"bottom", a.bottom}, {"length", a.length()}});
        arr.push_back({{"first", p.first}, {"second", p.second}, {"count", p.alignments.size()}, {"alignments", als}});
    }
    return {{"schema", schema_alignments}, {"mode", to_string(mode)}, {"traceback", to_string(rule)}, {"pairs", arr}};
}

std::vector<PairAlignments> alignments_from_json(const json& j) {
    expect_schema(j, schema_alignments);
    std::vector<PairAlignments> out;
    for (const auto& p : j.at("pairs")) {
        PairAlignments pa{get<std::string>(p, "first"), get<std::string>(p, "second"), {}};
        for (const auto& a : p.at("alignments")) pa.alignments.push_back({get<std::string>(a, "top"), get<std::string>(a, "bottom")});
        out.push_back(std::move(pa));
    }
    return out;
}

json word_to_json(const PointedAlphabet& a, const Word& w) {
    if (single_char_alphabet(a)) return render_row(a, w, false);
    json arr = json::array();
    for (int l : w.letters) arr.push_back(a.symbols[static_cast<std::size_t>(l)]);
    return arr;
}

json tuple_to_json(const PointedAlphabet& a, const AlignedTuple& x) {
    json rows = json::array();
    for (const auto& w : x.components) rows.push_back(word_to_json(a, w));
    return rows;
}

json functor_to_json(const SeqAlignFunctor& f) {
    const auto& factors = f.spec.omega()->factors();
    if (factors.empty()) throw invalid_input("functor preorder is not a product");
    json objects = json::array();
    for (std::size_t o = 0; o < f.base.objects.size(); ++o) {
        const auto& im = f.images[o];
        json els = json::array(), exc = json::array();
        for (const auto& x : im.elements) els.push_back(tuple_to_json(f.alphabet, x));
        for (const auto& x : im.excluded) exc.push_back(tuple_to_json(f.alphabet, x));
        objects.push_back({{"segment", to_literal(f.base.objects[o])},
                           {"hub", im.hub},
                           {"materialized", im.materialized},
                           {"elements", els},
                           {"excluded", exc}});
    }
    std::set<std::pair<int, int>> links;
    for (const auto& m : f.base.morphisms)
        if (f.base.objects[static_cast<std::size_t>(m.src)].n1() != f.base.objects[static_cast<std::size_t>(m.dst)].n1())
            links.emplace(m.src, m.dst);
    json lj = json::array();
    for (const auto& [a, b] : links) lj.push_back({a, b});
    return {{"schema", schema_functor},
            {"factor", preorder_to_json(factors.front())},
            {"names", f.spec.names},
            {"alphabet", alphabet_to_json(f.alphabet)},
            {"level", f.spec.omega()->label(f.level)},
            {"objects", objects},
            {"links", lj}};
}

SeqAlignFunctor functor_from_json(const json& j) {
    expect_schema(j, schema_functor);
    SeqAlignFunctor f;
    f.spec = product_spec(preorder_from_json(j.at("factor")), get<std::vector<std::string>>(j, "names"));
    f.alphabet = alphabet_from_json(j.at("alphabet"));
    const auto& om = f.spec.omega();
    f.level = om->index_of(get<std::string>(j, "level"));
    std::vector<Segment> objects;
    for (const auto& o : j.at("objects")) objects.push_back(parse_segment(om, get<std::string>(o, "segment")));
    std::vector<std::pair<int, int>> links;
    for (const auto& l : j.at("links")) links.emplace_back(l[0].get<int>(), l[1].get<int>());
    f.base = BaseCategory::full(objects, links);
    for (std::size_t k = 0; k < objects.size(); ++k) {
        const auto& o = j.at("objects")[k];
        ObjectImage im{get<bool>(o, "hub"), get<bool>(o, "materialized"), {}, {}};
        for (const auto& x : o.at("elements")) im.elements.push_back(tuple_from_json(f.spec, f.alphabet, objects[k], f.level, x));
        for (const auto& x : o.at("excluded")) im.excluded.push_back(tuple_from_json(f.spec, f.alphabet, objects[k], f.level, x));
        f.images.push_back(std::move(im));
    }
    return f;
}

json validation_to_json(const ValidationReport& r) {
    return {{"schema", schema_validation}, {"ok", r.ok()}, {"violations", r.violations}};
}

json ran_to_json(const SeqAlignFunctor& f, const RanValue& r, bool materialize, std::size_t cap) {
    json factors = json::array();
    for (const auto& fac : r.factors) {
        json objs = json::array();
        for (int o : fac.nodes) objs.push_back(comma_object_json(r.comma, o));
        factors.push_back({{"objects", objs}, {"size", fac.size()}, {"terminal", fac.terminal()}});
    }
    json dropped = json::array();
    for (std::size_t o = 0; o < r.dropped.size(); ++o)
        if (r.dropped[o]) dropped.push_back(comma_object_json(r.comma, static_cast<int>(o)));
    json j{{"schema", schema_ran},
           {"tau", to_literal(r.comma.tau)},
           {"comma_objects", r.comma.objects.size()},
           {"cardinality", count_json(r.cardinality())},
           {"nonterminal_factors", r.nonterminal_factor_count()},
           {"summary", r.summary()},
           {"factors", factors},
           {"free_objects", dropped},
           {"warnings", r.warnings}};
    if (materialize) {
        json els = json::array();
        for (const auto& ch : r.choices(cap)) {
            json x = json::array();
            for (const auto& c : r.element(ch)) x.push_back(c ? tuple_to_json(f.alphabet, *c) : json(nullptr));
            els.push_back(x);
        }
        j["elements"] = els;
    }
    return j;
}

namespace {

json ran_tuple_json(const PointedAlphabet& a, const RanTuple& x) {
    json out = json::array();
    for (const auto& c : x) out.push_back(c ? tuple_to_json(a, *c) : json(nullptr));
    return out;
}

}  // namespace

json slice_to_json(const SeqAlignFunctor& f, const Segment& tau, const SliceResult& s) {
    json lifted = json::array();
    for (const auto& e : s.elements) lifted.push_back({{"x", ran_tuple_json(f.alphabet, e.x)}, {"z", word_to_json(f.alphabet, e.z)}});
    return {{"schema", schema_slice},
            {"tau", to_literal(tau)},
            {"index", f.spec.names.at(static_cast<std::size_t>(s.index))},
            {"ran_size", count_json(s.ran_size)},
            {"support", count_json(s.support)},
            {"pairs", count_json(s.pairs)},
            {"listed", s.listed},
            {"lifted", lifted}};
}

json mechanisms_to_json(const SeqAlignFunctor& f, const MechanismReport& r) {
    json mechs = json::array(), lifted = json::array();
    for (const auto& m : r.matches) {
        json witnesses = json::array();
        if (m.lifted) {
            json w{{"x", ran_tuple_json(f.alphabet, *m.x)}, {"z", word_to_json(f.alphabet, *m.z)}};
            witnesses.push_back(w);
            lifted.push_back(w);
        }
        json names = json::array();
        for (int j : m.implicated) names.push_back(f.spec.names.at(static_cast<std::size_t>(j)));
        mechs.push_back({{"kind", to_string(m.kind)},
                         {"name", m.name},
                         {"block", {{"start", m.block_start}, {"length", m.block_len}}},
                         {"comma_objects", m.comma_objects},
                         {"lifted", m.lifted},
                         {"witnesses", witnesses},
                         {"implicated", names}});
    }
    return {{"schema", schema_mechanisms},
            {"tau", to_literal(r.tau)},
            {"index", f.spec.names.at(static_cast<std::size_t>(r.index))},
            {"lifted", lifted},
            {"mechanisms", mechs}};
}

namespace {

SegCone cone_body_from_json(const PreorderPtr& omega, const json& j) {
    const Segment apex = parse_segment(omega, get<std::string>(j, "apex"));
    std::vector<Segment> nodes;
    for (const auto& n : j.at("nodes")) nodes.push_back(parse_segment(omega, n.get<std::string>()));
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.value("edges", json::array())) edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    return make_chromology_cone(apex, nodes, edges);
}

}  // namespace

ConeFile cone_from_json(const json& j) {
    expect_schema(j, schema_cone);
    ConeFile c;
    c.omega = preorder_from_json(j.at("omega"));
    c.cone = cone_body_from_json(c.omega, j);
    return c;
}

json cone_to_json(const PreorderPtr& omega, const SegCone& c) {
    json nodes = json::array(), edges = json::array();
    for (const auto& n : c.nodes) nodes.push_back(to_literal(n));
    for (const auto& e : c.edges) edges.push_back({e.src, e.dst});
    return {{"schema", schema_cone}, {"omega", preorder_to_json(omega)}, {"apex", to_literal(c.apex)}, {"nodes", nodes}, {"edges", edges}};
}

json cone_check_to_json(const SegCone& c, const std::vector<int>& levels) {
    json out = json::array();
    const auto& om = c.apex.omega();
    for (int b : levels) {
        const auto arrow = canonical_arrow(c, b);
        out.push_back({{"level", om->label(b)},
                       {"kind", cone_kind(c, b)},
                       {"arrow", to_string(classify(arrow.arrow))},
                       {"colimit_size", arrow.colim.classes},
                       {"truncation_size", arrow.apex_tr.size()}});
    }
    return {{"schema", schema_cone_check}, {"apex", to_literal(c.apex)}, {"levels", out}};
}

ChromologyFile chromology_from_json(const json& j) {
    expect_schema(j, schema_chromology);
    ChromologyFile c;
    c.omega = preorder_from_json(j.at("omega"));
    c.alphabet = j.contains("alphabet") ? alphabet_from_json(j.at("alphabet")) : dna_alphabet();
    if (j.contains("level")) c.level = get<std::string>(j, "level");
    c.chromology.omega = c.omega;
    for (const auto& cj : j.at("cones")) c.chromology.add(cone_body_from_json(c.omega, cj));
    return c;
}

json pedigrad_to_json(const PedigradReport& r, PedigradMode mode, const std::string& level) {
    json cones = json::array();
    for (const auto& c : r.cones)
        cones.push_back({{"n", c.n},
                         {"index", c.index},
                         {"classification", to_string(c.classification)},
                         {"pass", c.pass},
                         {"structural", c.structural}});
    return {{"schema", schema_pedigrad},
            {"mode", mode == PedigradMode::bij ? "bij" : "surj"},
            {"level", level},
            {"pass", r.pass},
            {"cones", cones}};
}

}  // namespace seqcat::io
