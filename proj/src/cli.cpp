#include "mostset/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "mostset/errors.hpp"
#include "mostset/json_io.hpp"

namespace mostset::cli {

namespace {

using io::json;
using io::ordered_json;

constexpr int kSchemaVersion = 1;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

json parse_json(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError("malformed JSON in " + origin + ": " + e.what());
    }
}

// Common per-subcommand state: one input document (inline or file),
// output format, and the modifiers the individual commands use.
struct CommandOptions {
    std::string input_path;
    std::string inline_set;
    std::string family_path;
    std::vector<std::string> dfa_paths;
    std::string element;
    std::uint64_t n = 1000;
    std::string tolerance = "1/1000";
    std::string format = "json";

    json input_document(const std::string& what) const {
        if (!inline_set.empty()) return parse_json(inline_set, "--set");
        if (!input_path.empty()) return parse_json(read_file(input_path), input_path);
        throw InputError("missing input: pass a file or --set JSON for " + what);
    }

    bool json_format() const { return format == "json"; }
};

// Elements written as canonical integers are integers; everything else
// (including digit strings with leading zeros) stays a string.
Element parse_element(const std::string& text) {
    bool canonical = !text.empty();
    std::size_t digits_from = text[0] == '-' ? 1 : 0;
    if (text.size() == digits_from) canonical = false;
    for (std::size_t i = digits_from; i < text.size() && canonical; ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) canonical = false;
    if (canonical && text[digits_from] == '0' && text.size() > digits_from + 1)
        canonical = false;
    if (canonical) {
        try {
            return Element{std::stoll(text)};
        } catch (const std::out_of_range&) {
        }
    }
    return Element{text};
}

void emit(std::ostream& out, const CommandOptions& opts, const ordered_json& payload,
          const std::string& text_form) {
    if (opts.json_format()) {
        ordered_json report;
        report["schema"] = kSchemaVersion;
        for (const auto& [key, value] : payload.items()) report[key] = value;
        out << report.dump() << "\n";
    } else {
        out << text_form;
    }
}

std::string render_element_set(const ElementSet& set) {
    std::string text = "{";
    bool first = true;
    for (const Element& e : set) {
        if (!first) text += ", ";
        text += element_to_string(e);
        first = false;
    }
    return text + "}";
}

ordered_json element_set_to_json(const ElementSet& set) {
    ordered_json arr = ordered_json::array();
    for (const Element& e : set) arr.push_back(io::element_to_json(e));
    return arr;
}

// --- subcommand handlers -------------------------------------------------

void cmd_density(const CommandOptions& opts, std::ostream& out) {
    EventuallyPeriodicSet s = io::eps_from_json(opts.input_document("density"));
    Density d = s.density();
    ordered_json payload;
    payload["mode"] = "exact";
    payload["num"] = d.num();
    payload["den"] = d.den();
    emit(out, opts, payload, "density: " + d.to_string() + "\n");
}

void cmd_most(const CommandOptions& opts, std::ostream& out) {
    json doc = opts.input_document("most");
    EventuallyPeriodicSet universe = io::eps_from_json(doc.at("universe"));
    EventuallyPeriodicSet subset = io::eps_from_json(doc.at("set"));
    bool verdict = most(universe, subset);
    ordered_json payload;
    payload["mode"] = "exact";
    payload["result"] = verdict;
    emit(out, opts, payload, std::string("most: ") + (verdict ? "true" : "false") + "\n");
}

void cmd_mostsim(const CommandOptions& opts, std::ostream& out) {
    json doc = opts.input_document("mostsim");
    bool verdict = most_sim(io::eps_from_json(doc.at("a")), io::eps_from_json(doc.at("b")));
    ordered_json payload;
    payload["mode"] = "exact";
    payload["result"] = verdict;
    emit(out, opts, payload,
         std::string("mostsim: ") + (verdict ? "true" : "false") + "\n");
}

std::string render_dfa_text(const Dfa& dfa) {
    const Dfa canon = canonical_form(dfa);
    std::ostringstream text;
    text << "states: " << canon.state_count() << "\n";
    text << "start: q" << canon.start() << "\n";
    text << "accept: {";
    bool first = true;
    for (std::size_t q = 0; q < canon.state_count(); ++q) {
        if (!canon.accepting(q)) continue;
        if (!first) text << ", ";
        text << "q" << q;
        first = false;
    }
    text << "}\n";
    for (std::size_t q = 0; q < canon.state_count(); ++q)
        for (std::size_t k = 0; k < canon.alphabet().size(); ++k)
            text << "q" << q << " --" << canon.alphabet()[k] << "--> q"
                 << canon.step_index(q, k) << "\n";
    return text.str();
}

void cmd_intersect_most(const CommandOptions& opts, std::ostream& out) {
    if (!opts.dfa_paths.empty()) {
        std::vector<Dfa> dfas;
        for (const std::string& path : opts.dfa_paths)
            dfas.push_back(io::dfa_from_json(parse_json(read_file(path), path)));
        Dfa result = majority_product(dfas);
        ordered_json payload;
        payload["mode"] = "exact";
        payload["result"] = io::dfa_to_json(result);
        emit(out, opts, payload, render_dfa_text(result));
        return;
    }
    if (!opts.family_path.empty()) {
        IndexedFamily family = io::family_from_json(
            parse_json(read_file(opts.family_path), opts.family_path));
        ElementSet result = most_intersect_indexed(family);
        ordered_json payload;
        payload["mode"] = "exact";
        payload["result"] = element_set_to_json(result);
        ordered_json densities = ordered_json::array();
        std::string text = "result: " + render_element_set(result) + "\n";
        for (const Element& e : result) {
            Density d = family.certificate(e)->density();
            ordered_json entry;
            entry["element"] = io::element_to_json(e);
            entry["density"] = io::density_to_json(d);
            densities.push_back(std::move(entry));
            text += element_to_string(e) + ": density " + d.to_string() + "\n";
        }
        payload["densities"] = std::move(densities);
        emit(out, opts, payload, text);
        return;
    }
    FiniteCollection collection =
        io::collection_from_json(opts.input_document("intersect-most"));
    ElementSet result = most_intersect_finite(collection);
    ordered_json payload;
    payload["mode"] = "exact";
    payload["result"] = element_set_to_json(result);
    emit(out, opts, payload, "result: " + render_element_set(result) + "\n");
}

void cmd_acceptance(const CommandOptions& opts, std::ostream& out) {
    if (opts.family_path.empty()) throw InputError("acceptance needs --family FILE");
    if (opts.element.empty()) throw InputError("acceptance needs --element E");
    IndexedFamily family = io::family_from_json(
        parse_json(read_file(opts.family_path), opts.family_path));
    std::vector<int> bits = acceptance_prefix(family, parse_element(opts.element), opts.n);
    ordered_json payload;
    payload["mode"] = "exact";
    payload["result"] = bits;
    std::string text = "bits: ";
    for (int b : bits) text += static_cast<char>('0' + b);
    emit(out, opts, payload, text + "\n");
}

void cmd_density_language(const CommandOptions& opts, std::ostream& out) {
    if (opts.family_path.empty()) throw InputError("density-language needs --family FILE");
    if (opts.element.empty()) throw InputError("density-language needs --element WORD");
    LanguageFamily family = io::language_family_from_json(
        parse_json(read_file(opts.family_path), opts.family_path));
    DensityLanguageMembership result = density_language_membership(family, opts.element);
    ordered_json payload;
    payload["mode"] = "exact";
    payload["result"] = result.member;
    payload["density"] = io::density_to_json(result.certificate_density);
    emit(out, opts, payload,
         std::string("member: ") + (result.member ? "true" : "false") +
             "\ndensity: " + result.certificate_density.to_string() + "\n");
}

void cmd_average_state(const CommandOptions& opts, std::ostream& out) {
    if (!opts.family_path.empty()) {
        IndexedFamily family = io::family_from_json(
            parse_json(read_file(opts.family_path), opts.family_path));
        std::vector<std::string> candidates;
        for (const Element& e : family.candidate_universe())
            candidates.push_back(element_to_string(e));
        auto state = average_state_infinite(InfiniteHypergraph{family}, candidates);
        ordered_json payload;
        payload["mode"] = "exact";
        ordered_json result = ordered_json::array();
        std::string text;
        for (const auto& [vertex, density] : state) {
            ordered_json entry;
            entry["vertex"] = vertex;
            entry["density"] = io::density_to_json(density);
            result.push_back(std::move(entry));
            text += vertex + ": density " + density.to_string() + "\n";
        }
        payload["result"] = std::move(result);
        emit(out, opts, payload, text.empty() ? "average state: {}\n" : text);
        return;
    }
    std::string source;
    Hypergraph h = [&] {
        if (!opts.inline_set.empty())
            return io::hypergraph_from_json(parse_json(opts.inline_set, "--set"));
        if (opts.input_path.empty())
            throw InputError("missing input: pass a file or --set JSON for average-state");
        source = read_file(opts.input_path);
        // JSON documents open with an object; everything else is the
        // line-oriented text format.
        std::size_t first = source.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && source[first] == '{')
            return io::hypergraph_from_json(parse_json(source, opts.input_path));
        return parse_hypergraph_text(source);
    }();
    std::set<std::string> state = average_state(h);
    bool balanced = state.empty();
    ordered_json payload;
    payload["mode"] = "exact";
    payload["result"] = state;
    payload["balanced"] = balanced;
    std::string text = "average state: {";
    bool first_v = true;
    for (const std::string& v : state) {
        if (!first_v) text += ", ";
        text += v;
        first_v = false;
    }
    text += "}\nbalanced: ";
    text += balanced ? "true" : "false";
    emit(out, opts, payload, text + "\n");
}

void cmd_estimate(const CommandOptions& opts, std::ostream& out) {
    if (opts.family_path.empty()) throw InputError("estimate needs --family FILE");
    IndexedFamily family = io::family_from_json(
        parse_json(read_file(opts.family_path), opts.family_path));
    Rational tolerance = io::rational_from_string(opts.tolerance);
    auto members = most_intersect_estimated(family, opts.n, tolerance);
    ordered_json payload;
    payload["mode"] = "estimated";
    payload["n"] = opts.n;
    payload["tol"] = io::density_to_json(tolerance);
    ordered_json result = ordered_json::array();
    std::ostringstream text;
    text << "mode: estimated (n=" << opts.n << ", tol=" << tolerance << ")\n";
    for (const auto& [element, estimate] : members) {
        ordered_json entry;
        entry["element"] = io::element_to_json(element);
        entry["estimate"] = io::estimate_to_json(estimate);
        result.push_back(std::move(entry));
        text << element_to_string(element) << ": " << estimate.member_count << "/"
             << estimate.sample_bound
             << " converged=" << (estimate.converged ? "true" : "false")
             << " oscillation=" << estimate.oscillation << "\n";
    }
    payload["result"] = std::move(result);
    emit(out, opts, payload, text.str());
}

// --- selftest -------------------------------------------------------------

std::string substitute_data_dir(const std::string& arg, const std::string& data_dir) {
    const std::string placeholder = "$DATA";
    std::string result = arg;
    if (auto at = result.find(placeholder); at != std::string::npos)
        result.replace(at, placeholder.size(), data_dir);
    return result;
}

int run_selftest(const std::string& data_dir, std::ostream& out, std::ostream& err) {
    const std::string manifest_path = data_dir + "/selftest.json";
    json manifest = parse_json(read_file(manifest_path), manifest_path);
    std::size_t passed = 0, failed = 0;
    for (const auto& entry : manifest.at("cases")) {
        const std::string name = entry.at("name").get<std::string>();
        std::vector<std::string> argv;
        for (const auto& a : entry.at("argv"))
            argv.push_back(substitute_data_dir(a.get<std::string>(), data_dir));
        const int expect_exit = entry.value("expect_exit", 0);
        const std::string golden =
            read_file(data_dir + "/" + entry.at("golden").get<std::string>());
        std::ostringstream case_out, case_err;
        int code = run(argv, case_out, case_err);
        if (code == expect_exit && case_out.str() == golden) {
            out << "ok " << name << "\n";
            ++passed;
        } else {
            out << "FAIL " << name << "\n";
            if (code != expect_exit)
                err << name << ": exit " << code << ", expected " << expect_exit << "\n";
            if (case_out.str() != golden)
                err << name << ": output mismatch\n--- expected ---\n"
                    << golden << "--- actual ---\n"
                    << case_out.str();
            ++failed;
        }
    }
    out << "selftest: " << passed << " passed, " << failed << " failed\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Most-intersection toolkit: exact natural-density calculus, "
                 "majority set operations, automata density languages, and "
                 "hypergraph majority states."};
    app.require_subcommand(0, 1);

    bool selftest = false;
    std::string data_dir = "data";
    app.add_flag("--selftest", selftest, "run the bundled example suite");
    app.add_option("--data", data_dir, "directory with example inputs and goldens")
        ->capture_default_str();

    CommandOptions opts;
    auto add_common = [&](CLI::App* cmd, bool with_input) {
        cmd->add_option("--format", opts.format, "output format")
            ->check(CLI::IsMember({"json", "text"}))
            ->capture_default_str();
        if (with_input) {
            cmd->add_option("file", opts.input_path, "input file");
            cmd->add_option("--input", opts.input_path, "input file");
            cmd->add_option("--set", opts.inline_set, "inline JSON document");
        }
        return cmd;
    };

    auto* density = add_common(app.add_subcommand(
        "density", "exact density of an eventually periodic set"), true);
    auto* most_cmd = add_common(app.add_subcommand(
        "most", "Most(U, A) for eventually periodic sets"), true);
    auto* mostsim = add_common(app.add_subcommand(
        "mostsim", "MostSim(A, B) over the naturals"), true);
    auto* intersect = add_common(app.add_subcommand(
        "intersect-most", "most-intersection of a collection, family, or DFA list"), true);
    intersect->add_option("--family", opts.family_path, "indexed family JSON file");
    intersect->add_option("--dfas", opts.dfa_paths, "DFA JSON files");
    auto* acceptance = add_common(app.add_subcommand(
        "acceptance", "acceptance-sequence prefix of an element"), false);
    acceptance->add_option("--family", opts.family_path, "indexed family JSON file");
    acceptance->add_option("--element", opts.element, "element to trace");
    acceptance->add_option("--n", opts.n, "prefix length")->capture_default_str();
    auto* denlang = add_common(app.add_subcommand(
        "density-language", "density-language membership of a word"), false);
    denlang->add_option("--family", opts.family_path, "language family JSON file");
    denlang->add_option("--element", opts.element, "word to test");
    auto* average = add_common(app.add_subcommand(
        "average-state", "average state of a hypergraph"), true);
    average->add_option("--family", opts.family_path,
                        "edge family JSON file (infinite hypergraph)");
    auto* estimate = add_common(app.add_subcommand(
        "estimate", "estimated most-intersection via partial densities"), false);
    estimate->add_option("--family", opts.family_path, "indexed family JSON file");
    estimate->add_option("--n", opts.n, "sample bound")->capture_default_str();
    estimate->add_option("--tol", opts.tolerance, "convergence tolerance P/Q")
        ->capture_default_str();

    std::vector<std::string> argv(args.rbegin(), args.rend());  // CLI11 wants reversed args
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (selftest) return run_selftest(data_dir, out, err);
        if (density->parsed()) cmd_density(opts, out);
        else if (most_cmd->parsed()) cmd_most(opts, out);
        else if (mostsim->parsed()) cmd_mostsim(opts, out);
        else if (intersect->parsed()) cmd_intersect_most(opts, out);
        else if (acceptance->parsed()) cmd_acceptance(opts, out);
        else if (denlang->parsed()) cmd_density_language(opts, out);
        else if (average->parsed()) cmd_average_state(opts, out);
        else if (estimate->parsed()) cmd_estimate(opts, out);
        else {
            err << "error: no subcommand given (see --help)\n";
            return 2;
        }
        return 0;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const AlphabetMismatch& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        err << "error: malformed input: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace mostset::cli
