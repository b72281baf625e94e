#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "seqcat/alignment_functor.hpp"
#include "seqcat/chromology.hpp"
#include "seqcat/kan.hpp"
#include "seqcat/slices.hpp"

namespace seqcat::io {

using nlohmann::json;

inline constexpr const char* schema_config = "seqcat.config/1";
inline constexpr const char* schema_alignments = "seqcat.alignments/1";
inline constexpr const char* schema_functor = "seqcat.functor/1";
inline constexpr const char* schema_validation = "seqcat.validation/1";
inline constexpr const char* schema_ran = "seqcat.ran/1";
inline constexpr const char* schema_slice = "seqcat.slice/1";
inline constexpr const char* schema_mechanisms = "seqcat.mechanisms/1";
inline constexpr const char* schema_cone = "seqcat.cone/1";
inline constexpr const char* schema_cone_check = "seqcat.cone-check/1";
inline constexpr const char* schema_chromology = "seqcat.chromology/1";
inline constexpr const char* schema_pedigrad = "seqcat.pedigrad/1";

// Throws parse_error on malformed JSON.
json parse_json(const std::string& text);
// Two-space indent and a trailing newline.
std::string dump(const json& j);
std::string read_file(const std::string& path);
void write_text(const std::string& path, const std::string& text);

// FASTA, or a JSON array of {"name", "sequence"} objects.
NamedSequences parse_sequences(const std::string& text);
NamedSequences parse_fasta(const std::string& text);

// {"chain": k} or {"labels": [...], "leq": [[x, y], ...]}; emitted in the second form.
json preorder_to_json(const PreorderPtr& p);
PreorderPtr preorder_from_json(const json& j);

json alphabet_to_json(const PointedAlphabet& a);
PointedAlphabet alphabet_from_json(const json& j);

TracebackRule parse_traceback_rule(const std::string& s);
std::string to_string(TracebackRule r);

struct RecolorSpec {
    int chain_size = 0;
    std::vector<int> embedding;
    // (existing object literal, target literal over the new preorder)
    std::vector<std::pair<std::string, std::string>> recolor;
    std::vector<std::string> new_hubs;
    std::vector<std::pair<std::string, std::string>> links;
};

struct Config {
    PreorderPtr factor;
    std::vector<std::string> names;
    PointedAlphabet alphabet = dna_alphabet();
    std::string level;
    // Literal list, or the 15 example objects when `example_objects` is set.
    std::vector<std::string> objects;
    bool example_objects = false;
    std::vector<std::pair<std::string, std::string>> links;
    HubMode hub_mode = HubMode::lazy;
    std::size_t hub_cap = 100000;
    AlignMode mode = AlignMode::global;
    TracebackRule traceback = TracebackRule::match_diagonal;
    std::size_t cap = default_cap;
    std::optional<RecolorSpec> recolor;
};

Config config_from_json(const json& j);
json config_to_json(const Config& c);
AlignmentSpec spec_of(const Config& c);
// Pairwise alignment, build, then the optional recolor plan.
SeqAlignFunctor build_functor(const Config& c, const NamedSequences& individuals);

json alignments_to_json(const std::vector<PairAlignments>& pairs, AlignMode mode, TracebackRule rule);
std::vector<PairAlignments> alignments_from_json(const json& j);

json tuple_to_json(const PointedAlphabet& a, const AlignedTuple& x);
json word_to_json(const PointedAlphabet& a, const Word& w);

json functor_to_json(const SeqAlignFunctor& f);
SeqAlignFunctor functor_from_json(const json& j);
json validation_to_json(const ValidationReport& r);

json ran_to_json(const SeqAlignFunctor& f, const RanValue& r, bool materialize, std::size_t cap);
json slice_to_json(const SeqAlignFunctor& f, const Segment& tau, const SliceResult& s);
json mechanisms_to_json(const SeqAlignFunctor& f, const MechanismReport& r);

struct ConeFile {
    PreorderPtr omega;
    SegCone cone;
};
ConeFile cone_from_json(const json& j);
json cone_to_json(const PreorderPtr& omega, const SegCone& c);
json cone_check_to_json(const SegCone& c, const std::vector<int>& levels);

struct ChromologyFile {
    PreorderPtr omega;
    PointedAlphabet alphabet;
    std::optional<std::string> level;
    Chromology chromology;
};
ChromologyFile chromology_from_json(const json& j);
json pedigrad_to_json(const PedigradReport& r, PedigradMode mode, const std::string& level);

}  // namespace seqcat::io
