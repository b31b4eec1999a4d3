// lamkit command-line tool.
//
// Exit codes: 0 success, 1 numeric failure (or failed acceptance checks),
// 2 usage error (bad flags, malformed input, violated preconditions).

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lamkit/lamkit.hpp"

namespace {

using namespace lamkit;

constexpr const char* kVersion = "0.1.0";

struct RunConfig {
    int genus = 2;
    unsigned precision_bits = kDefaultPrecisionBits;
    double tol = kObstructionTolerance;
    bool tol_given = false;
    std::uint64_t seed = 7;
    bool json = false;
    std::optional<std::string> csv;  // "" means stdout
    std::string out;
};

/// What a subcommand produces: a JSON document, a text rendering, and
/// optionally CSV rows.
struct Output {
    Json doc = Json::object();
    std::vector<std::string> text;
    std::vector<std::vector<std::string>> csv;
    int exit_code = 0;
};

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

Json config_json(const std::string& command, const RunConfig& cfg) {
    return Json{{"command", command},     {"genus", cfg.genus}, {"precision_bits", cfg.precision_bits},
                {"tol", cfg.tol},         {"seed", cfg.seed},   {"version", kVersion}};
}

Json matrix_json(const Mat2& m) {
    return Json::array({Json::array({to_decimal(m.a), to_decimal(m.b)}), Json::array({to_decimal(m.c), to_decimal(m.d)})});
}

Json class_json(const ProjectiveClass<Real>& c) { return to_json(c.coordinates()); }
Json class_json(const ProjectiveClass<Rational>& c) { return to_json(c.coordinates()); }

std::string short_decimal(const Real& r) { return r.str(12); }

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) {
            throw ParseError("empty entry in list '" + text + "'");
        }
        out.push_back(item.substr(b, e - b + 1));
    }
    return out;
}

TranslationSurface load_or_build(const std::string& in, int genus) {
    if (!in.empty()) {
        return surface_from_json(read_json_file(in));
    }
    return build_double_polygon(genus);
}

// ---------------------------------------------------------------------------

Output cmd_build(const RunConfig& cfg) {
    const auto s = build_double_polygon(cfg.genus);
    Output o;
    o.doc = to_json(s);
    o.text.push_back("double (" + std::to_string(2 * cfg.genus + 1) + ")-gon surface, genus " +
                     std::to_string(cfg.genus) + ", area " + short_decimal(area(s)));
    o.text.push_back("use --out FILE or --json for the surface document");
    return o;
}

Output cmd_cylinders(const RunConfig& cfg, const std::string& in, const std::string& dir_name) {
    const auto s = load_or_build(in, cfg.genus);
    const Direction dir = parse_direction(dir_name);
    const auto cyls = cylinder_decomposition(s, dir);
    Output o;
    o.doc["config"] = config_json("cylinders", cfg);
    o.doc["direction"] = to_string(dir);
    o.doc["area"] = to_decimal(area(s));
    Json list = Json::array();
    o.csv.push_back({"label", "circumference", "height", "modulus"});
    for (const auto& c : cyls) {
        list.push_back({{"label", c.label},
                        {"circumference", to_decimal(c.circumference)},
                        {"height", to_decimal(c.height)},
                        {"modulus", to_decimal(c.modulus())},
                        {"core", to_decimal(c.core_coordinate)}});
        o.csv.push_back({c.label, to_decimal(c.circumference), to_decimal(c.height), to_decimal(c.modulus())});
        o.text.push_back(c.label + ": circumference " + short_decimal(c.circumference) + ", height " +
                         short_decimal(c.height) + ", modulus " + short_decimal(c.modulus()));
    }
    o.doc["cylinders"] = std::move(list);
    return o;
}

Output cmd_affine(const RunConfig& cfg, const std::string& word_text) {
    const AffineModel model(build_double_polygon(cfg.genus));
    const AffineWord word = parse_affine_word(word_text);
    const Mat2 m = model.derivative(word);
    const MatrixClass cls = cfg.tol_given ? classify(m, cfg.tol) : classify(m);
    Output o;
    o.doc["config"] = config_json("affine", cfg);
    o.doc["word"] = to_string(word);
    o.doc["lambda"] = to_decimal(model.lambda());
    o.doc["derivative"] = matrix_json(m);
    o.doc["trace"] = to_decimal(m.trace());
    o.doc["classification"] = to_string(cls);
    o.text.push_back("D(" + to_string(word) + ") = [[" + short_decimal(m.a) + ", " + short_decimal(m.b) + "], [" +
                     short_decimal(m.c) + ", " + short_decimal(m.d) + "]]");
    o.text.push_back("trace " + short_decimal(m.trace()) + ", " + to_string(cls));
    return o;
}

Output cmd_chain(const RunConfig& cfg) {
    const ChainSystem cs = chain_intersection_matrix(cfg.genus);
    const auto flat = derive_intersection_matrix(build_double_polygon(cfg.genus));
    Output o;
    o.doc["config"] = config_json("chain", cfg);
    o.doc["labels"] = cs.labels;
    Json order = Json::array();
    for (int node : cs.chain_order) {
        order.push_back(cs.labels[node]);
    }
    o.doc["chain_order"] = order;
    o.doc["matrix"] = cs.matrix;
    o.doc["flat_ab_block"] = flat;
    o.doc["flat_agrees"] = flat == cs.ab_block();
    std::vector<std::string> header{""};
    header.insert(header.end(), cs.labels.begin(), cs.labels.end());
    o.csv.push_back(header);
    for (std::size_t i = 0; i < cs.matrix.size(); ++i) {
        std::vector<std::string> row{cs.labels[i]};
        std::string line = cs.labels[i] + ":";
        for (int v : cs.matrix[i]) {
            row.push_back(std::to_string(v));
            line += " " + std::to_string(v);
        }
        o.csv.push_back(row);
        o.text.push_back(line);
    }
    std::string order_line = "chain order:";
    for (const auto& l : order) {
        order_line += " " + l.get<std::string>();
    }
    o.text.push_back(order_line);
    o.text.push_back(std::string("flat crossing counts ") + (flat == cs.ab_block() ? "agree" : "DISAGREE"));
    return o;
}

Output cmd_twist_limit(const RunConfig& cfg, const std::string& weights_path, long k, int per_decade, bool every) {
    const TrackWeights w = weights_from_json(read_json_file(weights_path));
    const auto schedule = every ? TraceSchedule::every_step() : TraceSchedule::log_spaced(per_decade);
    const auto trace = iterate_trace(w, k, schedule);
    Output o;
    o.doc["config"] = config_json("twist-limit", cfg);
    o.doc["weights"] = to_json(w);
    o.doc["limit_coefficients"] = to_json(limit_multicurve_coefficients(w));
    o.doc["limit_class"] = class_json(twist_limit(w));
    o.doc["k"] = k;
    o.doc["final_error"] = trace.back().error;
    o.doc["final_class"] = class_json(trace.back().projective);
    try {
        const DecayFit fit = fit_error_decay(trace, std::max(1L, k / 10));
        o.doc["fit"] = {{"slope", fit.slope}, {"constant", fit.constant}, {"points", fit.points}};
        o.text.push_back("fitted error ~ " + acceptance::fmt(fit.constant) + " * k^" + acceptance::fmt(fit.slope));
    } catch (const InvalidParameter&) {
        o.doc["fit"] = nullptr;
    }
    Json samples = Json::array();
    o.csv.push_back({"k", "error"});
    for (const auto& s : trace) {
        samples.push_back({{"k", s.k}, {"error", s.error}});
        o.csv.push_back({std::to_string(s.k), acceptance::fmt(s.error)});
    }
    o.doc["trace"] = std::move(samples);
    o.text.insert(o.text.begin(), "error at k=" + std::to_string(k) + ": " + acceptance::fmt(trace.back().error));
    return o;
}

Output cmd_circle_map(const RunConfig& cfg, int samples) {
    if (samples < 1) {
        throw InvalidParameter("--samples must be positive");
    }
    const CircleMarking m = circle_marking(build_double_polygon(cfg.genus));
    const Real step = pi() / samples;
    Output o;
    o.doc["config"] = config_json("circle-map", cfg);
    o.doc["curves"] = m.labels;
    o.doc["kinks"] = to_json(kink_directions(m));
    std::vector<std::string> header{"theta"};
    header.insert(header.end(), m.labels.begin(), m.labels.end());
    o.csv.push_back(header);
    Json list = Json::array();
    for (int k = 0; k < samples; ++k) {
        const Real theta = step * k;
        const auto cls = direction_foliation(m, theta);
        list.push_back({{"theta", to_decimal(theta)}, {"class", class_json(cls)}});
        std::vector<std::string> row{short_decimal(theta)};
        for (const auto& c : cls.coordinates()) {
            row.push_back(short_decimal(c));
        }
        o.csv.push_back(std::move(row));
    }
    o.doc["samples"] = std::move(list);
    o.text.push_back(std::to_string(samples) + " directions sampled on [0, pi) against " + std::to_string(m.size()) +
                     " curves; use --csv or --json for the data");
    return o;
}

Output cmd_heights(const RunConfig& cfg) {
    const auto s = build_double_polygon(cfg.genus);
    const HeightVector w = heights(s);
    Output o;
    o.doc["config"] = config_json("heights", cfg);
    o.doc["heights"] = to_json(w.values);
    o.doc["area"] = to_decimal(area(s));
    o.csv.push_back({"label", "height"});
    for (std::size_t j = 0; j < w.size(); ++j) {
        const std::string label = "b" + std::to_string(j + 1);
        o.csv.push_back({label, to_decimal(w.values[j])});
        o.text.push_back("w_" + std::to_string(j + 1) + " = " + to_decimal(w.values[j]));
    }
    return o;
}

Output cmd_generic_check(const RunConfig& cfg, std::size_t samples, std::optional<std::size_t> plant) {
    const GenericityResult r = genericity_sample(cfg.genus, samples, cfg.seed, plant);
    Output o;
    o.doc["config"] = config_json("generic-check", cfg);
    o.doc["samples"] = r.samples;
    o.doc["planted_index"] = plant ? Json(*plant) : Json(nullptr);
    o.doc["hits"] = r.hits;
    o.doc["fraction_in_Y"] = r.fraction_in_Y;
    o.text.push_back(std::to_string(r.hits) + " of " + std::to_string(r.samples) + " samples in Y (fraction " +
                     acceptance::fmt(r.fraction_in_Y) + ")");
    return o;
}

Output cmd_witness(const RunConfig& cfg, const std::string& bvec) {
    std::vector<Real> v;
    for (const auto& item : split_list(bvec)) {
        v.push_back(parse_real(item));
    }
    const HeightVector w = heights(build_double_polygon(cfg.genus));
    const Witness wit = contradiction_witness(v, w, cfg.tol);
    Output o;
    o.doc["config"] = config_json("witness", cfg);
    o.doc["in_Y"] = wit.in_y;
    o.doc["separation"] = to_decimal(wit.separation);
    o.doc["limit_class"] = class_json(wit.limit_class);
    o.doc["nu_B_class"] = class_json(wit.nu_b_class);
    o.text.push_back(std::string("in_Y: ") + (wit.in_y ? "true" : "false"));
    o.text.push_back("separation: " + short_decimal(wit.separation));
    return o;
}

Output cmd_amalgam(const RunConfig& cfg, const std::string& word_text, const std::string& edge_left,
                   const std::string& edge_right) {
    const int rank = 2 * cfg.genus;
    const FreeWord zl = parse_free_word(edge_left, rank);
    const FreeWord zr = parse_free_word(edge_right.empty() ? edge_left : edge_right, rank);
    const EdgeGroup edge(zl, zr);
    const AmalgamWord w = parse_amalgam_word(word_text, edge, rank);
    const AmalgamWord reduced = britton_reduce(w, edge);
    const ElementClass cls = classify_element(w, edge);
    Output o;
    o.doc["config"] = config_json("amalgam-reduce", cfg);
    o.doc["edge_word"] = {{"L", to_string(zl)}, {"R", to_string(zr)}};
    o.doc["input"] = to_string(w);
    o.doc["reduced"] = to_string(reduced);
    o.doc["syllable_length"] = reduced.syllable_length();
    o.doc["cyclic_reduction"] = to_string(cyclically_reduce(w, edge));
    o.doc["classification"] = to_string(cls);
    o.text.push_back("reduced: " + to_string(reduced) + " (" + std::to_string(reduced.syllable_length()) +
                     " syllables)");
    o.text.push_back("classification: " + to_string(cls));
    return o;
}

Output cmd_report(const RunConfig& cfg, bool timings) {
    const auto results = run_acceptance({cfg.seed, cfg.precision_bits});
    Output o;
    o.doc["config"] = config_json("report", cfg);
    Json list = Json::array();
    bool all = true;
    for (const auto& r : results) {
        Json entry{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail},
                   {"budget_seconds", r.budget_seconds}};
        if (timings) {
            entry["seconds"] = r.seconds;
        }
        list.push_back(std::move(entry));
        o.text.push_back(summary_line(r));
        all = all && r.passed;
    }
    o.doc["criteria"] = std::move(list);
    o.doc["all_passed"] = all;
    o.text.push_back(all ? "all acceptance checks passed" : "some acceptance checks FAILED");
    o.exit_code = all ? 0 : 1;
    return o;
}

// ---------------------------------------------------------------------------

void write_csv(const std::vector<std::vector<std::string>>& rows, const std::string& path) {
    if (rows.empty()) {
        throw UsageError("this subcommand has no CSV output");
    }
    if (path.empty()) {
        CsvWriter writer(std::cout);
        for (const auto& r : rows) {
            writer.row(r);
        }
        return;
    }
    std::ofstream file(path);
    if (!file) {
        throw UsageError("cannot write '" + path + "'");
    }
    CsvWriter writer(file);
    for (const auto& r : rows) {
        writer.row(r);
    }
}

void emit(const Output& o, const RunConfig& cfg) {
    const bool csv_to_stdout = cfg.csv && cfg.csv->empty();
    if (cfg.csv) {
        write_csv(o.csv, *cfg.csv);
    }
    if (!cfg.out.empty()) {
        std::ofstream file(cfg.out);
        if (!file) {
            throw UsageError("cannot write '" + cfg.out + "'");
        }
        file << o.doc.dump(2) << '\n';
    }
    if (cfg.json) {
        std::cout << o.doc.dump(2) << '\n';
    } else if (!csv_to_stdout) {
        for (const auto& line : o.text) {
            std::cout << line << '\n';
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Flat surfaces, twist dynamics and amalgam words for the double (2g+1)-gon surfaces"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    RunConfig cfg;
    std::optional<unsigned> precision;
    app.add_option("--genus,--g", cfg.genus, "Genus g >= 2")->capture_default_str();
    app.add_option("--precision", precision, "Working precision in bits (>= 64); default from LAMKIT_PRECISION or 128");
    auto* tol_opt = app.add_option("--tol", cfg.tol, "Tolerance for approximate predicates")->capture_default_str();
    app.add_option("--seed", cfg.seed, "Seed for all random sampling")->capture_default_str();
    app.add_flag("--json", cfg.json, "Print the JSON document on stdout");
    app.add_option("--csv", cfg.csv, "Write CSV to FILE (stdout when no FILE is given)")->expected(0, 1);
    app.add_option("--out", cfg.out, "Write the JSON document to FILE");

    std::function<Output()> action;

    auto* build = app.add_subcommand("build", "Build the double (2g+1)-gon surface");
    build->callback([&] { action = [&] { return cmd_build(cfg); }; });

    std::string in_path, dir_name = "horizontal";
    auto* cylinders = app.add_subcommand("cylinders", "Cylinder decomposition in a distinguished direction");
    cylinders->add_option("--in", in_path, "Surface JSON (default: build from --genus)");
    cylinders->add_option("--dir", dir_name, "horizontal or vertical")->capture_default_str();
    cylinders->callback([&] { action = [&] { return cmd_cylinders(cfg, in_path, dir_name); }; });

    std::string affine_word;
    auto* affine = app.add_subcommand("affine", "Derivative and type of a word in TA, TB, sigma");
    affine->add_option("--word", affine_word, "e.g. \"TA^10 sigma TB^-1\"")->required();
    affine->callback([&] { action = [&] { return cmd_affine(cfg, affine_word); }; });

    auto* chain = app.add_subcommand("chain", "Chain intersection matrix");
    chain->callback([&] { action = [&] { return cmd_chain(cfg); }; });

    std::string weights_path;
    long k_max = 10000;
    int per_decade = 10;
    bool every_step = false;
    auto* twist = app.add_subcommand("twist-limit", "Closed-form multitwist limit and its iterative trace");
    twist->add_option("--weights", weights_path, "Track weights JSON")->required();
    twist->add_option("--k", k_max, "Number of twist steps")->capture_default_str();
    twist->add_option("--points-per-decade", per_decade, "Recorded iterates per decade")->capture_default_str();
    twist->add_flag("--every-step", every_step, "Record every iterate");
    twist->callback([&] { action = [&] { return cmd_twist_limit(cfg, weights_path, k_max, per_decade, every_step); }; });

    int circle_samples = 720;
    auto* circle = app.add_subcommand("circle-map", "Projective classes of directional foliations");
    circle->add_option("--samples", circle_samples, "Uniform directions in [0, pi)")->capture_default_str();
    circle->callback([&] { action = [&] { return cmd_circle_map(cfg, circle_samples); }; });

    auto* heights_cmd = app.add_subcommand("heights", "Vertical cylinder heights");
    heights_cmd->callback([&] { action = [&] { return cmd_heights(cfg); }; });

    std::size_t generic_samples = 1000;
    std::optional<std::size_t> plant;
    auto* generic = app.add_subcommand("generic-check", "Fraction of random b-vectors lying in Y");
    generic->add_option("--samples", generic_samples, "Number of samples")->capture_default_str();
    generic->add_option("--plant", plant, "Replace this sample index by the heights themselves");
    generic->callback([&] { action = [&] { return cmd_generic_check(cfg, generic_samples, plant); }; });

    std::string bvec;
    auto* witness = app.add_subcommand("witness", "Separation between the twist limit and [nu_B]");
    witness->add_option("--bvec", bvec, "Comma-separated positive b-intersection vector")->required();
    witness->callback([&] { action = [&] { return cmd_witness(cfg, bvec); }; });

    std::string amalgam_word, edge_left = "g1", edge_right;
    auto* amalgam = app.add_subcommand("amalgam-reduce", "Britton reduction and classification of an amalgam word");
    amalgam->add_option("--word", amalgam_word, "e.g. \"L:g1^2 R:g3 L:z^-1\"")->required();
    amalgam->add_option("--edge-word", edge_left, "Edge generator z in both factors")->capture_default_str();
    amalgam->add_option("--edge-word-right", edge_right, "Edge generator in the right factor, if different");
    amalgam->callback([&] { action = [&] { return cmd_amalgam(cfg, amalgam_word, edge_left, edge_right); }; });

    bool timings = false;
    auto* report = app.add_subcommand("report", "Run the acceptance suite");
    report->add_flag("--timings", timings, "Include wall-clock timings in the JSON document");
    report->callback([&] { action = [&] { return cmd_report(cfg, timings); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        cfg.precision_bits = precision ? *precision : precision_from_environment();
        cfg.tol_given = tol_opt->count() > 0;
        if (cfg.genus < 2) {
            throw InvalidParameter("genus must be at least 2");
        }
        if (!(cfg.tol > 0)) {
            throw InvalidParameter("--tol must be positive");
        }
        const PrecisionGuard guard(cfg.precision_bits);
        const Output o = action();
        emit(o, cfg);
        return o.exit_code;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const InvalidParameter& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const InvalidWeights& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const InvalidEdgeGenerator& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const HypothesisViolation& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: invalid surface: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return 1;
    }
}
