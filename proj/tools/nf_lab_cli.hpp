#pragma once

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "nflab/io.hpp"
#include "nflab/nflab.hpp"

namespace nflab::cli {

enum ExitCode : int { kOk = 0, kFalse = 1, kUsage = 2 };

namespace detail {

inline std::vector<int> split_ints(const std::string& text, const std::string& what) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Error(what + ": bad integer '" + item + "'");
        }
    }
    return out;
}

// Closed form for either block order. For n > m the blocks are swapped,
// the closed form evaluated on (m, n) and relabeled back.
inline SimplicialComplex closed_form_any_order(int n, int m, int k) {
    if (n <= m) return knm_facets_closed_form(BlockSplit{n, m}, k);
    const SimplicialComplex swapped = knm_facets_closed_form(BlockSplit{m, n}, k);
    std::vector<int> images;
    for (int i = 1; i <= m; ++i) images.push_back(n + i);
    for (int j = 1; j <= n; ++j) images.push_back(j);
    return swapped.permuted(Permutation::from_images(images));
}

inline int closed_form_k(const std::string& arg) {
    const std::string prefix = "k=";
    const std::string digits = arg.rfind(prefix, 0) == 0 ? arg.substr(prefix.size()) : arg;
    return split_ints(digits, "closed-form k").at(0);
}

}  // namespace detail

// `path:8`, `cycle:6`, `complete:5`, `knm:3,4`, `bipartite:3,4`,
// `empty:3` ({∅}), `simplex:3`, `closed-form:3,4,k=6`.
inline SimplicialComplex family_literal(const std::string& literal) {
    const auto colon = literal.find(':');
    if (colon == std::string::npos) throw Error("family literal '" + literal + "': expected name:args");
    const std::string name = literal.substr(0, colon);
    const std::string args = literal.substr(colon + 1);
    auto ints = [&](std::size_t count) {
        auto v = detail::split_ints(args, "family literal '" + literal + "'");
        if (v.size() != count) {
            throw Error("family literal '" + literal + "': expected " + std::to_string(count) + " argument(s)");
        }
        return v;
    };
    if (name == "path") return path(ints(1)[0]);
    if (name == "cycle") return cycle(ints(1)[0]);
    if (name == "complete") return complete(ints(1)[0]);
    if (name == "empty") return SimplicialComplex::empty_face(ints(1)[0]);
    if (name == "simplex") return SimplicialComplex::simplex(ints(1)[0]);
    if (name == "knm") {
        auto v = ints(2);
        return disjoint_union(complete(v[0]), complete(v[1]));
    }
    if (name == "bipartite") {
        auto v = ints(2);
        return complete_bipartite(v[0], v[1]);
    }
    if (name == "closed-form") {
        const auto last = args.rfind(',');
        if (last == std::string::npos) throw Error("family literal '" + literal + "': expected n,m,k=K");
        auto nm = detail::split_ints(args.substr(0, last), "family literal '" + literal + "'");
        if (nm.size() != 2) throw Error("family literal '" + literal + "': expected n,m,k=K");
        return detail::closed_form_any_order(nm[0], nm[1], detail::closed_form_k(args.substr(last + 1)));
    }
    throw Error("unknown family '" + name + "'");
}

// A complex argument: "-" for stdin, an existing file (JSON or line
// format), or a family literal.
inline io::ParsedComplex load_complex(const std::string& source, std::istream& stdin_stream) {
    std::string text;
    if (source == "-") {
        text.assign(std::istreambuf_iterator<char>(stdin_stream), std::istreambuf_iterator<char>());
        return io::parse_document(text);
    }
    std::ifstream file(source);
    if (file) {
        text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
        return io::parse_document(text);
    }
    // Inline documents: "5: 1 2 | 2 3" or a JSON object.
    if (!source.empty() && (std::isdigit(static_cast<unsigned char>(source[0])) || source[0] == '{')) {
        return io::parse_document(source);
    }
    if (source.find(':') != std::string::npos) return io::ParsedComplex{family_literal(source), false};
    throw Error("cannot open '" + source + "'");
}

enum class Format { kText, kJson };

class Runner {
public:
    Runner(std::ostream& out, std::ostream& err, std::istream& in) : out_(out), err_(err), in_(in) {}

    int run(std::vector<std::string> args) {
        CLI::App app{"NF-complex laboratory: iterate the Stanley-Reisner complex of the facet ideal", "nf_lab"};
        app.require_subcommand(1);
        app.fallthrough();
        std::string format = "text";
        auto* format_opt = app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

        std::string input;
        std::string second;
        std::uint64_t k = 0;
        std::uint64_t cap = OrbitOptions{}.iteration_cap;
        std::uint64_t limit = 1000;
        std::string literal;
        std::string blocks;
        int census_n = 0;
        std::string classes_path;
        int threads = 0;
        bool up_to_iso = false;

        auto* step = app.add_subcommand("step", "Apply one NF step");
        step->add_option("input", input, "Complex file, '-' or family literal")->required();
        auto* iterate = app.add_subcommand("iterate", "Apply K NF steps");
        iterate->add_option("input", input)->required();
        iterate->add_option("-k,--k", k, "Number of steps")->required();
        auto* number = app.add_subcommand("nf-number", "Smallest t >= 1 with an isomorphic return");
        number->add_option("input", input)->required();
        number->add_option("--cap", cap, "Iteration cap");
        auto* period = app.add_subcommand("period", "Smallest q >= 1 with an exact return");
        period->add_option("input", input)->required();
        period->add_option("--cap", cap, "Iteration cap");
        auto* trace = app.add_subcommand("trace", "Print the orbit step by step");
        trace->add_option("input", input)->required();
        trace->add_option("--limit", limit, "Maximum number of steps")->check(CLI::PositiveNumber);
        auto* covers = app.add_subcommand("covers", "Minimal vertex covers as prime components");
        covers->add_option("input", input)->required();
        auto* iso = app.add_subcommand("isomorphic", "Exit 0 and print a witness if A and B are isomorphic");
        iso->add_option("a", input)->required();
        iso->add_option("b", second)->required();
        auto* family = app.add_subcommand("family", "Emit a family member, e.g. path:8 or knm:3,4");
        family->add_option("literal", literal)->required();
        auto* closed = app.add_subcommand("closed-form", "Closed-form delta^(k) of K_n + K_m");
        closed->add_option("blocks", blocks, "n,m")->required();
        closed->add_option("-k,--k", k, "Step index")->required();
        auto* census_cmd = app.add_subcommand("census", "Enumerate all complexes on [n] and count NF classes");
        census_cmd->add_option("--n", census_n, "Ground-set size")->required();
        census_cmd->add_option("--classes", classes_path, "Write one representative per class as JSON");
        census_cmd->add_option("--threads", threads, "Worker threads (default NF_LAB_THREADS or 1)");
        census_cmd->add_flag("--up-to-iso", up_to_iso, "Also count classes modulo vertex relabeling");

        std::vector<std::string> reversed(args.rbegin(), args.rend());
        try {
            app.parse(reversed);
        } catch (const CLI::CallForHelp&) {
            out_ << app.help();
            return kOk;
        } catch (const CLI::CallForAllHelp&) {
            out_ << app.help("", CLI::AppFormatMode::All);
            return kOk;
        } catch (const CLI::ParseError& e) {
            err_ << "error: " << e.what() << "\n";
            return kUsage;
        }

        const bool explicit_format = format_opt->count() > 0;
        auto fmt = [&](Format fallback) {
            if (!explicit_format) return fallback;
            return format == "json" ? Format::kJson : Format::kText;
        };

        try {
            if (*step) return emit_complex(nf_step(load(input)), fmt(Format::kText));
            if (*iterate) return emit_complex(nf_iterate(load(input), k), fmt(Format::kText));
            if (*number) return cmd_number(load(input), cap, fmt(Format::kText), false);
            if (*period) return cmd_number(load(input), cap, fmt(Format::kText), true);
            if (*trace) return cmd_trace(load(input), limit, fmt(Format::kText));
            if (*covers) return cmd_covers(load(input), fmt(Format::kText));
            if (*iso) return cmd_isomorphic(load(input), load(second), fmt(Format::kText));
            if (*family) return emit_complex(family_literal(literal), fmt(Format::kJson));
            if (*closed) {
                const auto nm = detail::split_ints(blocks, "blocks");
                if (nm.size() != 2) throw Error("blocks: expected n,m");
                return emit_complex(detail::closed_form_any_order(nm[0], nm[1], static_cast<int>(k)),
                                    fmt(Format::kJson));
            }
            if (*census_cmd) {
                if (threads <= 0) threads = threads_from_env();
                return cmd_census(census_n, threads, up_to_iso, classes_path, fmt(Format::kText));
            }
        } catch (const Error& e) {
            err_ << "error: " << e.what() << "\n";
            return kUsage;
        }
        return kUsage;
    }

private:
    SimplicialComplex load(const std::string& source) {
        io::ParsedComplex parsed = load_complex(source, in_);
        if (parsed.reduced) {
            err_ << "warning: " << source << ": non-maximal or repeated faces dropped\n";
        }
        return parsed.complex;
    }

    static int threads_from_env() {
        if (const char* env = std::getenv("NF_LAB_THREADS")) {
            const int t = std::atoi(env);
            if (t > 0) return t;
        }
        return 1;
    }

    int emit_complex(const SimplicialComplex& c, Format f) {
        if (f == Format::kJson) {
            out_ << io::to_json(c).dump() << "\n";
        } else {
            out_ << io::to_line(c) << "\n";
        }
        return kOk;
    }

    int cmd_number(const SimplicialComplex& c, std::uint64_t cap, Format f, bool want_period) {
        OrbitOptions opts;
        opts.iteration_cap = cap;
        const std::uint64_t value = want_period ? nf_period(c, opts) : nf_number(c, opts);
        if (f == Format::kJson) {
            out_ << nlohmann::ordered_json{{want_period ? "period" : "nf_number", value}}.dump() << "\n";
        } else {
            out_ << value << "\n";
        }
        return kOk;
    }

    int cmd_trace(const SimplicialComplex& c, std::uint64_t limit, Format f) {
        const OrbitTrace t = orbit_trace(c, limit);
        if (f == Format::kJson) {
            nlohmann::ordered_json steps = nlohmann::ordered_json::array();
            for (const auto& s : t.steps) {
                steps.push_back({{"k", s.k},
                                 {"dim", s.dim},
                                 {"facets", io::to_json(s.complex).at("facets")},
                                 {"iso", s.isomorphic_to_start}});
            }
            nlohmann::ordered_json doc{{"n", c.n()}, {"steps", std::move(steps)}};
            doc["nf_number"] = t.nf_number ? nlohmann::ordered_json(*t.nf_number) : nlohmann::ordered_json(nullptr);
            doc["period"] = t.period ? nlohmann::ordered_json(*t.period) : nlohmann::ordered_json(nullptr);
            out_ << doc.dump() << "\n";
            return kOk;
        }
        for (const auto& s : t.steps) {
            out_ << "k=" << s.k << " dim=" << s.dim << " facets=" << s.complex.to_string()
                 << " iso=" << (s.isomorphic_to_start ? "true" : "false") << "\n";
        }
        if (t.dropped_steps) out_ << "(" << t.dropped_steps << " steps not stored)\n";
        out_ << "nf_number=" << (t.nf_number ? std::to_string(*t.nf_number) : "?")
             << " period=" << (t.period ? std::to_string(*t.period) : "?") << "\n";
        return kOk;
    }

    int cmd_covers(const SimplicialComplex& c, Format f) {
        const CoverFamily mins = minimal_vertex_covers(c);
        if (f == Format::kJson) {
            nlohmann::ordered_json covers = nlohmann::ordered_json::array();
            for (VertexSet s : mins.covers) covers.push_back(io::facet_to_json(s));
            out_ << nlohmann::ordered_json{{"covers", std::move(covers)}}.dump() << "\n";
            return kOk;
        }
        for (VertexSet s : mins.covers) {
            out_ << "(";
            bool first = true;
            for (int v : s.vertices()) {
                out_ << (first ? "" : ", ") << "x" << v;
                first = false;
            }
            out_ << ")\n";
        }
        return kOk;
    }

    int cmd_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b, Format f) {
        const auto witness = isomorphism(a, b);
        if (f == Format::kJson) {
            nlohmann::ordered_json doc{{"isomorphic", witness.has_value()}};
            if (witness) {
                doc["witness"] = witness->images();
                doc["cycles"] = witness->cycle_notation();
            }
            out_ << doc.dump() << "\n";
        } else if (witness) {
            out_ << witness->cycle_notation() << "\n";
        } else {
            out_ << "not isomorphic\n";
        }
        return witness ? kOk : kFalse;
    }

    int cmd_census(int n, int threads, bool up_to_iso, const std::string& classes_path, Format f) {
        const CensusReport r = census(n, CensusOptions{threads, up_to_iso});
        if (f == Format::kJson) {
            nlohmann::ordered_json hist = nlohmann::ordered_json::object();
            for (auto [size, count] : r.size_histogram) hist[std::to_string(size)] = count;
            nlohmann::ordered_json doc{{"n", n},
                               {"universe", r.universe_size},
                               {"bijection", r.bijection.ok},
                               {"classes", r.class_count},
                               {"histogram", std::move(hist)}};
            if (r.iso_class_count) doc["iso_classes"] = *r.iso_class_count;
            out_ << doc.dump() << "\n";
        } else {
            out_ << "universe=" << r.universe_size << " bijection=" << (r.bijection.ok ? "ok" : "FAILED")
                 << " classes=" << r.class_count << "\n";
            out_ << "histogram:";
            for (auto [size, count] : r.size_histogram) out_ << " " << size << ":" << count;
            out_ << "\n";
            if (r.iso_class_count) out_ << "iso_classes=" << *r.iso_class_count << "\n";
            for (auto [a, b] : r.bijection.collisions) out_ << "collision: " << a << " " << b << "\n";
        }
        if (!classes_path.empty()) {
            nlohmann::ordered_json reps = nlohmann::ordered_json::array();
            for (std::size_t i = 0; i < r.representatives.size(); ++i) {
                nlohmann::ordered_json rep = io::to_json(r.representatives[i]);
                rep["class_size"] = r.class_sizes[i];
                reps.push_back(std::move(rep));
            }
            std::ofstream file(classes_path);
            if (!file) throw Error("cannot write '" + classes_path + "'");
            file << reps.dump(2) << "\n";
        }
        return r.bijection.ok ? kOk : kFalse;
    }

    std::ostream& out_;
    std::ostream& err_;
    std::istream& in_;
};

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               std::istream& in = std::cin) {
    return Runner(out, err, in).run(args);
}

}  // namespace nflab::cli
