#include <algorithm>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "seqcat/io.hpp"

using namespace seqcat;
using io::json;

namespace {

enum Exit { ok = 0, validation = 1, resource = 2, parse = 3 };

struct Common {
    std::string output;
    std::size_t cap = default_cap;
    int jobs = 1;
};

void emit(const Common& c, const json& j) {
    const std::string text = io::dump(j);
    if (c.output.empty() || c.output == "-") std::cout << text;
    else io::write_text(c.output, text);
}

void add_common(CLI::App* app, Common& c) {
    app->add_option("--output,-o", c.output, "Write the JSON report here instead of stdout");
    app->add_option("--cap", c.cap, "Materialization cap")->check(CLI::PositiveNumber);
    app->add_option("--jobs,-j", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
}

// Runs f over items with at most `jobs` concurrent tasks, keeping input order.
template <class T, class F>
auto parallel_map(const std::vector<T>& items, int jobs, F f) {
    using R = decltype(f(items.front()));
    std::vector<R> out;
    for (std::size_t start = 0; start < items.size(); start += static_cast<std::size_t>(jobs)) {
        std::vector<std::future<R>> batch;
        const std::size_t end = std::min(items.size(), start + static_cast<std::size_t>(jobs));
        for (std::size_t k = start; k < end; ++k) batch.push_back(std::async(std::launch::async, f, std::cref(items[k])));
        for (auto& fut : batch) out.push_back(fut.get());
    }
    return out;
}

int index_of_name(const SeqAlignFunctor& f, const std::string& name) {
    const int i = f.spec.index_of(name);
    if (i < 0) throw invalid_input("unknown index: " + name);
    return i;
}

SeqAlignFunctor load_functor(const std::string& path) { return io::functor_from_json(io::parse_json(io::read_file(path))); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"seqcat: categorical sequence alignment toolkit"};
    app.require_subcommand(1);

    Common common;
    std::string input, config_path, mode = "global", traceback = "match-diagonal", index, level, pedigrad_mode = "bij";
    std::vector<std::string> taus, levels, templates{"duplication", "inversion"}, indices;
    bool materialize = false, pareto = false;
    std::size_t list_cap = 100000;

    auto* align = app.add_subcommand("align", "Pairwise alignments of every pair of sequences");
    align->add_option("input", input, "FASTA or JSON sequences")->required();
    align->add_option("--mode", mode, "global, local or semiglobal");
    align->add_option("--traceback", traceback, "match-diagonal or all-optimal");
    add_common(align, common);

    auto* build = app.add_subcommand("build", "Build and validate a sequence alignment functor");
    build->add_option("input", input, "FASTA or JSON sequences")->required();
    build->add_option("--config", config_path, "Config JSON")->required();
    build->add_option("--mode", mode, "Override the config's alignment mode");
    build->add_option("--level", level, "Override the config's level");
    add_common(build, common);

    auto* ran = app.add_subcommand("ran", "Evaluate the right Kan extension at segments");
    ran->add_option("functor", input, "Functor JSON")->required();
    ran->add_option("--tau", taus, "Segment literal, repeatable")->required();
    ran->add_flag("--materialize", materialize, "List every element");
    add_common(ran, common);

    auto* slice = app.add_subcommand("slice", "Slice of the functor at one index");
    slice->add_option("functor", input, "Functor JSON")->required();
    slice->add_option("--tau", taus, "Segment literal")->required()->expected(1);
    slice->add_option("--index", index, "Individual name")->required();
    slice->add_option("--list-cap", list_cap, "List elements when Ran(tau) is at most this large");
    add_common(slice, common);

    auto* wide = app.add_subcommand("wide-pullback", "Wide pullback of slices over a set of indices");
    wide->add_option("functor", input, "Functor JSON")->required();
    wide->add_option("--tau", taus, "Segment literal")->required()->expected(1);
    wide->add_option("--index", indices, "Individual name, repeatable");
    wide->add_flag("--pareto", pareto, "Report the Pareto set over all non-empty index sets");
    add_common(wide, common);

    auto* mech = app.add_subcommand("mechanisms", "Match mechanism templates against the comma cone");
    mech->add_option("functor", input, "Functor JSON")->required();
    mech->add_option("--tau", taus, "Segment literal")->required()->expected(1);
    mech->add_option("--index", index, "Individual name")->required();
    mech->add_option("--template", templates, "duplication and/or inversion");
    add_common(mech, common);

    auto* cone = app.add_subcommand("check-cone", "Classify a cone of segments");
    cone->add_option("cone", input, "Cone JSON")->required();
    cone->add_option("--level", levels, "Level label, repeatable; default every element");
    add_common(cone, common);

    auto* ped = app.add_subcommand("check-pedigrad", "Check the pedigrad condition of the environment functor");
    ped->add_option("chromology", input, "Chromology JSON")->required();
    ped->add_option("--mode", pedigrad_mode, "bij or surj");
    ped->add_option("--level", level, "Level label; default from the file");
    add_common(ped, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? Exit::ok : Exit::parse;
    }

    try {
        if (*align) {
            const auto seqs = io::parse_sequences(io::read_file(input));
            const auto rule = io::parse_traceback_rule(traceback);
            const auto m = parse_align_mode(mode);
            emit(common, io::alignments_to_json(align_all_pairs(seqs, m, rule), m, rule));
        } else if (*build) {
            auto cfg = io::config_from_json(io::parse_json(io::read_file(config_path)));
            if (build->count("--mode")) cfg.mode = parse_align_mode(mode);
            if (!level.empty()) cfg.level = level;
            cfg.cap = common.cap;
            const auto seqs = io::parse_sequences(io::read_file(input));
            const auto f = io::build_functor(cfg, seqs);
            const auto report = validate(f);
            if (!report.ok()) {
                emit(common, io::validation_to_json(report));
                return Exit::validation;
            }
            emit(common, io::functor_to_json(f));
        } else if (*ran) {
            const auto f = load_functor(input);
            const RanOptions opts{common.cap};
            auto results = parallel_map(taus, common.jobs, [&](const std::string& lit) {
                const auto r = ran_eval(f, parse_segment(f.spec.omega(), lit), opts);
                return io::ran_to_json(f, r, materialize, common.cap);
            });
            if (results.size() == 1) emit(common, results.front());
            else emit(common, json{{"schema", "seqcat.ran-list/1"}, {"results", results}});
        } else if (*slice) {
            const auto f = load_functor(input);
            const Segment tau = parse_segment(f.spec.omega(), taus.front());
            const auto s = slice_eval(f, index_of_name(f, index), tau, SliceOptions{common.cap, list_cap});
            emit(common, io::slice_to_json(f, tau, s));
        } else if (*wide) {
            const auto f = load_functor(input);
            const Segment tau = parse_segment(f.spec.omega(), taus.front());
            const auto r = ran_eval(f, tau, RanOptions{common.cap});
            const SliceOptions opts{common.cap, 0};
            std::vector<WidePullback> ws;
            if (pareto) {
                ws = pareto_subsets(f, r, opts);
            } else {
                std::vector<int> idx;
                for (const auto& n : indices) idx.push_back(index_of_name(f, n));
                ws.push_back(wide_pullback(f, r, idx, opts));
            }
            json arr = json::array();
            for (const auto& w : ws) {
                json names = json::array(), zs = json::array(), x = nullptr;
                for (int i : w.indices) names.push_back(f.spec.names[static_cast<std::size_t>(i)]);
                for (const auto& z : w.witness_z) zs.push_back(io::word_to_json(f.alphabet, z));
                if (w.witness) {
                    x = json::array();
                    for (const auto& c : *w.witness) x.push_back(c ? io::tuple_to_json(f.alphabet, *c) : json(nullptr));
                }
                arr.push_back({{"indices", names},
                               {"support", w.support.overflow ? json(w.support.str()) : json(w.support.value)},
                               {"witness", {{"x", x}, {"z", zs}}}});
            }
            emit(common, json{{"schema", "seqcat.wide-pullback/1"}, {"tau", to_literal(tau)}, {"pareto", pareto}, {"results", arr}});
        } else if (*mech) {
            const auto f = load_functor(input);
            std::vector<MechanismTemplate> tpls;
            for (const auto& t : templates) {
                if (t == "duplication") tpls.push_back(duplication_template());
                else if (t == "inversion") tpls.push_back(inversion_template());
                else throw invalid_input("unknown template: " + t);
            }
            const Segment tau = parse_segment(f.spec.omega(), taus.front());
            emit(common, io::mechanisms_to_json(f, detect_mechanisms(f, index_of_name(f, index), tau, tpls, SliceOptions{common.cap})));
        } else if (*cone) {
            const auto c = io::cone_from_json(io::parse_json(io::read_file(input)));
            std::vector<int> bs;
            if (levels.empty())
                for (int b = 0; b < c.omega->size(); ++b) bs.push_back(b);
            for (const auto& l : levels) bs.push_back(c.omega->index_of(l));
            emit(common, io::cone_check_to_json(c.cone, bs));
        } else if (*ped) {
            const auto c = io::chromology_from_json(io::parse_json(io::read_file(input)));
            const std::string lvl = !level.empty() ? level : c.level.value_or("");
            if (lvl.empty()) throw invalid_input("a level is required");
            const EnvironmentFunctor env(c.alphabet, c.omega->index_of(lvl), common.cap);
            const auto m = parse_pedigrad_mode(pedigrad_mode);
            const auto report = verify_pedigrad(env, c.chromology, m, common.cap);
            emit(common, io::pedigrad_to_json(report, m, lvl));
            if (!report.pass) return Exit::validation;
        }
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return Exit::parse;
    } catch (const json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return Exit::parse;
    } catch (const resource_error& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return Exit::resource;
    } catch (const invalid_input& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return Exit::validation;
    }
    return Exit::ok;
}
