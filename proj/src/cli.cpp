#include "diffposet/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "diffposet/builders.hpp"
#include "diffposet/certify.hpp"
#include "diffposet/formats.hpp"
#include "diffposet/linalg.hpp"
#include "diffposet/threads.hpp"

namespace diffposet {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
    std::string command;
    std::string poset_arg;
    int max_rank = -1;
    int rank = -1;
    int r_override = 0;
    std::string witness = "threads";
    std::string method = "auto";
    std::string highlight = "threads";
    std::string format = "text";
    std::string out_path;
    bool force = false;
};

// default rank caps keeping exact projection computations at desk scale;
// --force lifts them
int default_cap(PosetKind kind) {
    switch (kind) {
        case PosetKind::Young: return 12;
        case PosetKind::YoungPower: return 8;
        case PosetKind::Fibonacci: return 9;
        case PosetKind::File: return -1;
    }
    return -1;
}

const char* kind_name(PosetKind kind) {
    switch (kind) {
        case PosetKind::Young: return "young";
        case PosetKind::YoungPower: return "young-power";
        case PosetKind::Fibonacci: return "fibonacci";
        case PosetKind::File: return "file";
    }
    return "?";
}

struct ResolvedPoset {
    PosetSpec spec;
    GradedPoset poset;
    int r = 0;  // effective r (poset-kind default or --r override); 0 when unknown
};

ResolvedPoset resolve_poset(const Options& opts) {
    PosetSpec spec = parse_poset_spec(opts.poset_arg);

    int max_rank = opts.max_rank;
    if (max_rank < 0 && opts.rank >= 0) max_rank = opts.rank;  // certify/project default
    if (spec.kind != PosetKind::File && max_rank < 0)
        throw std::invalid_argument("--max-rank is required for built posets");

    const int cap = default_cap(spec.kind);
    if (cap >= 0 && max_rank > cap && !opts.force)
        throw std::invalid_argument("max rank " + std::to_string(max_rank) + " exceeds the " +
                                    kind_name(spec.kind) + " default cap " + std::to_string(cap) +
                                    " (use --force to override)");

    int r = opts.r_override;
    if (r == 0 && spec.kind == PosetKind::Young) r = 1;
    if (r == 0 && spec.r) r = *spec.r;

    switch (spec.kind) {
        case PosetKind::Young: {
            spec.max_rank = max_rank;
            return {spec, build_young(max_rank), r};
        }
        case PosetKind::YoungPower: {
            spec.max_rank = max_rank;
            return {spec, build_young_power(*spec.r, max_rank), r};
        }
        case PosetKind::Fibonacci: {
            spec.max_rank = max_rank;
            return {spec, build_fibonacci(*spec.r, max_rank), r};
        }
        case PosetKind::File: {
            std::ifstream in(*spec.path);
            if (!in) throw std::invalid_argument("cannot read poset file '" + *spec.path + "'");
            std::ostringstream buffer;
            buffer << in.rdbuf();
            GradedPoset poset = import_poset(buffer.str());
            if (max_rank > poset.max_rank())
                throw std::invalid_argument("poset file only reaches rank " +
                                            std::to_string(poset.max_rank()) +
                                            "; cannot extend to " + std::to_string(max_rank));
            if (max_rank >= 0 && max_rank < poset.max_rank()) poset = truncate(poset, max_rank);
            spec.max_rank = poset.max_rank();
            return {spec, std::move(poset), r};
        }
    }
    throw std::logic_error("unreachable poset kind");
}

int require_r(const ResolvedPoset& resolved) {
    if (resolved.r <= 0)
        throw std::invalid_argument("--r is required for this command on file posets");
    return resolved.r;
}

// ---------------------------------------------------------------------------
// JSON pieces (all rationals serialized as exact "num/den" strings)

Json j_element(const GradedPoset& poset, ElementRef e) {
    return Json{{"ref", {e.rank, e.index}}, {"label", poset.label(e)}};
}

Json j_matrix(const RatMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).fraction_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json j_validation(const ValidationReport& report) {
    Json violations = Json::array();
    for (const Violation& v : report.violations) {
        Json entry{{"kind", v.kind}, {"rank", v.rank}, {"message", v.message}};
        if (v.element) entry["element"] = {v.element->rank, v.element->index};
        violations.push_back(std::move(entry));
    }
    return Json{{"ok", report.ok},
                {"weakly_increasing", report.weakly_increasing},
                {"violations", std::move(violations)}};
}

Json j_certificate(const GradedPoset& poset, const GapCertificate& cert) {
    Json witness = Json::array();
    for (const ElementRef& e : cert.witness) witness.push_back(j_element(poset, e));
    return Json{{"rank", cert.rank},
                {"bound", cert.bound},
                {"method", cert.method == CertMethod::Gershgorin ? "gershgorin" : "determinant"},
                {"margin", cert.margin.fraction_str()},
                {"valid", cert.valid},
                {"witness", std::move(witness)}};
}

Json j_inputs(const Options& opts, const PosetSpec& spec) {
    Json poset{{"kind", kind_name(spec.kind)},
               {"r", spec.r ? Json(*spec.r) : Json(nullptr)},
               {"path", spec.path ? Json(*spec.path) : Json(nullptr)},
               {"max_rank", spec.max_rank}};
    Json inputs{{"poset", std::move(poset)}};
    if (opts.rank >= 0) inputs["rank"] = opts.rank;
    if (opts.r_override > 0) inputs["r"] = opts.r_override;
    if (opts.command == "certify") {
        inputs["witness"] = opts.witness;
        inputs["method"] = opts.method;
    }
    if (opts.command == "export") inputs["highlight"] = opts.highlight;
    inputs["force"] = opts.force;
    return inputs;
}

// ---------------------------------------------------------------------------

struct CommandResult {
    int exit_code = kExitOk;
    Json results;
    std::string text;
};

CommandResult cmd_build(const Options& opts, const ResolvedPoset& resolved) {
    CommandResult result;
    const GradedPoset& poset = resolved.poset;
    const ValidationReport report = validate(poset);

    Json sizes = Json::array();
    for (int n = 0; n <= poset.max_rank(); ++n) sizes.push_back(poset.rank_size(n));
    result.results = Json{{"rank_sizes", std::move(sizes)},
                          {"edges", poset.total_edges()},
                          {"validation", j_validation(report)}};

    std::ostringstream os;
    os << "poset: " << kind_name(resolved.spec.kind) << ", max rank " << poset.max_rank() << "\n";
    os << "rank sizes:";
    for (int n = 0; n <= poset.max_rank(); ++n) os << " " << poset.rank_size(n);
    os << "\nedges: " << poset.total_edges() << "\n";
    os << "validation: " << (report.ok ? "ok" : "FAILED") << "\n";
    if (!report.ok)
        for (const Violation& v : report.violations) os << "  " << v.kind << ": " << v.message << "\n";
    result.text = os.str();
    result.exit_code = report.ok ? kExitOk : kExitCheckFailed;

    if (!opts.out_path.empty()) {
        std::ofstream out_file(opts.out_path);
        if (!out_file) throw std::invalid_argument("cannot write '" + opts.out_path + "'");
        out_file << serialize_poset_text(poset);
    }
    return result;
}

CommandResult cmd_gaps(const Options&, const ResolvedPoset& resolved) {
    CommandResult result;
    const RankStats stats = rank_stats(resolved.poset);
    const bool weakly = validate(resolved.poset).weakly_increasing;

    Json p = Json::array(), delta = Json::array();
    for (auto v : stats.sizes) p.push_back(v);
    for (auto v : stats.deltas) delta.push_back(v);
    result.results = Json{{"p", std::move(p)}, {"delta", std::move(delta)},
                          {"weakly_increasing", weakly}};

    std::ostringstream os;
    os << "rank   p_n    delta\n";
    for (std::size_t n = 0; n < stats.sizes.size(); ++n) {
        os << std::left << std::setw(7) << n << std::setw(7) << stats.sizes[n];
        if (n == 0) os << "-";
        else os << stats.deltas[n - 1];
        os << "\n";
    }
    os << "weakly increasing: " << (weakly ? "yes" : "no") << "\n";
    result.text = os.str();
    return result;
}

CommandResult cmd_verify(const Options&, const ResolvedPoset& resolved) {
    CommandResult result;
    const int r = require_r(resolved);
    const DifferentialReport report = verify_differential(resolved.poset, r);

    Json failures = Json::array();
    for (const DifferentialFailure& f : report.failures)
        failures.push_back(Json{{"rank", f.rank},
                                {"x", {f.x.rank, f.x.index}},
                                {"y", {f.y.rank, f.y.index}},
                                {"expected", f.expected},
                                {"actual", f.actual}});
    result.results = Json{{"r", report.r},
                          {"verified_through", report.verified_through},
                          {"ok", report.ok()},
                          {"weakly_increasing", report.weakly_increasing},
                          {"failures", std::move(failures)}};

    std::ostringstream os;
    if (report.ok()) {
        os << "differential axiom verified through rank " << report.verified_through
           << " (r = " << r << ")\n";
    } else {
        os << "differential axiom FAILED (r = " << r << "), " << report.failures.size()
           << " bad entries\n";
        std::size_t shown = 0;
        for (const DifferentialFailure& f : report.failures) {
            if (++shown > 20) {
                os << "  ...\n";
                break;
            }
            os << "  rank " << f.rank << ": DU entry at (" << resolved.poset.label(f.x) << ", "
               << resolved.poset.label(f.y) << ") expected " << f.expected << ", got " << f.actual
               << "\n";
        }
    }
    os << "weakly increasing: " << (report.weakly_increasing ? "yes" : "no") << "\n";
    result.text = os.str();
    result.exit_code = report.ok() ? kExitOk : kExitCheckFailed;
    return result;
}

CommandResult cmd_project(const Options& opts, const ResolvedPoset& resolved) {
    if (opts.rank < 1) throw std::invalid_argument("project: --rank must be >= 1");
    CommandResult result;
    const int r = require_r(resolved);
    const int n = opts.rank;
    const GradedPoset& poset = resolved.poset;
    if (n > poset.max_rank()) throw std::invalid_argument("project: --rank outside truncation");

    const RatMatrix m = projection_matrix(poset, r, n);
    const RatMatrix up = operator_matrix(poset, n - 1, Direction::Up);
    const bool idempotent = (multiply(m, m) == m);
    const bool symmetric = is_symmetric(m);
    const bool fixes_image = (multiply(m, up) == up);
    const Rat tr = trace(m);
    const bool trace_ok = (tr == Rat(static_cast<long>(poset.rank_size(n - 1))));
    bool entry_bound = true;
    for (std::size_t i = 0; i < m.rows() && entry_bound; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j).abs() > Rat(1)) {
                entry_bound = false;
                break;
            }
    const bool all_ok = idempotent && symmetric && fixes_image && trace_ok && entry_bound;

    result.results = Json{{"rank", n},
                          {"size", m.rows()},
                          {"matrix", j_matrix(m)},
                          {"trace", tr.fraction_str()},
                          {"laws",
                           Json{{"idempotent", idempotent},
                                {"symmetric", symmetric},
                                {"fixes_image", fixes_image},
                                {"trace_equals_lower_rank_size", trace_ok},
                                {"entry_bound", entry_bound}}}};

    std::ostringstream os;
    os << "projection matrix onto im(U) at rank " << n << " (" << m.rows() << "x" << m.cols()
       << ")\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << "  " << poset.label({n, static_cast<std::uint32_t>(i)}) << ":";
        for (std::size_t j = 0; j < m.cols(); ++j) os << " " << m.at(i, j).str();
        os << "\n";
    }
    os << "trace: " << tr.str() << "\n";
    os << "laws: idempotent " << (idempotent ? "yes" : "NO") << ", symmetric "
       << (symmetric ? "yes" : "NO") << ", M U = U " << (fixes_image ? "yes" : "NO")
       << ", trace = p_{n-1} " << (trace_ok ? "yes" : "NO") << ", |entries| <= 1 "
       << (entry_bound ? "yes" : "NO") << "\n";
    result.text = os.str();
    result.exit_code = all_ok ? kExitOk : kExitCheckFailed;
    return result;
}

CommandResult cmd_threads(const Options&, const ResolvedPoset& resolved) {
    CommandResult result;
    const GradedPoset& poset = resolved.poset;

    Json taus = Json::array();
    std::ostringstream os;
    os << "rank   tau    thread elements\n";
    for (int n = 1; n <= poset.max_rank(); ++n) {
        const ThreadCensus census = thread_elements(poset, n);
        Json elements = Json::array();
        for (const ElementRef& e : census.elements) elements.push_back(j_element(poset, e));
        taus.push_back(Json{{"rank", n}, {"tau", census.tau}, {"elements", std::move(elements)}});
        os << std::left << std::setw(7) << n << std::setw(7) << census.tau;
        for (std::size_t i = 0; i < census.elements.size(); ++i) {
            if (i == 12) {
                os << " ...";
                break;
            }
            os << " " << poset.label(census.elements[i]);
        }
        os << "\n";
    }
    result.results = Json{{"tau", std::move(taus)}};

    if (poset.max_rank() >= 2 && resolved.r > 0) {
        const Rank1ThreadCoverReport cover = rank1_thread_cover_check(poset, resolved.r);
        Json counts = Json::array();
        for (auto c : cover.thread_cover_counts) counts.push_back(c);
        result.results["rank1_cover_check"] = Json{{"ok", cover.ok},
                                                   {"p1", cover.p1},
                                                   {"p1_equals_r", cover.p1_equals_r},
                                                   {"thread_cover_counts", std::move(counts)},
                                                   {"upper_covers_all_r_plus_1",
                                                    cover.upper_covers_all_r_plus_1}};
        os << "rank-1 cover check: every rank-1 element covered by >= 2 thread elements: "
           << (cover.ok ? "yes" : "NO") << "\n";
    }
    result.text = os.str();
    return result;
}

std::vector<ElementRef> resolve_witness(const Options& opts, const ResolvedPoset& resolved, int n) {
    const GradedPoset& poset = resolved.poset;
    if (opts.witness == "threads")
        return thread_witness_small(poset, require_r(resolved), n).elements;
    if (opts.witness == "all") {
        std::vector<ElementRef> all;
        for (std::uint32_t i = 0; i < poset.rank_size(n); ++i) all.push_back({n, i});
        return all;
    }
    if (opts.witness.rfind("list:", 0) == 0) {
        std::vector<ElementRef> listed;
        std::istringstream is(opts.witness.substr(5));
        std::string item;
        while (std::getline(is, item, ',')) {
            if (item.empty()) continue;
            std::size_t pos = 0;
            unsigned long idx = std::stoul(item, &pos);
            if (pos != item.size())
                throw std::invalid_argument("bad witness index '" + item + "'");
            if (idx >= poset.rank_size(n))
                throw std::invalid_argument("witness index " + item + " outside rank " +
                                            std::to_string(n));
            listed.push_back({n, static_cast<std::uint32_t>(idx)});
        }
        if (listed.empty()) throw std::invalid_argument("empty witness list");
        return listed;
    }
    throw std::invalid_argument("unknown witness spec '" + opts.witness +
                                "' (expected threads|all|list:i,j,...)");
}

CommandResult cmd_certify(const Options& opts, const ResolvedPoset& resolved) {
    if (opts.rank < 1) throw std::invalid_argument("certify: --rank must be >= 1");
    CommandResult result;
    const int n = opts.rank;
    const GradedPoset& poset = resolved.poset;
    if (n > poset.max_rank()) throw std::invalid_argument("certify: --rank outside truncation");

    CertStrategy strategy = CertStrategy::Auto;
    if (opts.method == "gershgorin") strategy = CertStrategy::Gershgorin;
    else if (opts.method == "determinant") strategy = CertStrategy::Determinant;
    else if (opts.method != "auto")
        throw std::invalid_argument("unknown method '" + opts.method +
                                    "' (expected gershgorin|determinant|auto)");

    const std::vector<ElementRef> witness = resolve_witness(opts, resolved, n);
    const GapCertificate cert = certify_gap(poset, require_r(resolved), n, witness, strategy);
    const std::int64_t observed = static_cast<std::int64_t>(poset.rank_size(n)) -
                                  static_cast<std::int64_t>(poset.rank_size(n - 1));

    result.results = Json{{"certificate", j_certificate(poset, cert)}, {"observed_gap", observed}};

    std::ostringstream os;
    os << "certificate for rank " << n << ", witness size " << cert.bound << "\n";
    os << "witness:";
    for (const ElementRef& e : cert.witness) os << " " << poset.label(e);
    os << "\nmethod: " << (cert.method == CertMethod::Gershgorin ? "gershgorin" : "determinant")
       << "\nmargin: " << cert.margin.str() << "\nvalid: " << (cert.valid ? "yes" : "no") << "\n";
    if (cert.valid) os << "claim: delta p_" << n << " >= " << cert.bound << "\n";
    os << "observed gap: " << observed << "\n";
    result.text = os.str();
    result.exit_code = cert.valid ? kExitOk : kExitCheckFailed;
    return result;
}

CommandResult cmd_replay(const Options&, const ResolvedPoset& resolved) {
    CommandResult result;
    const int r = require_r(resolved);
    const ReplayReport report = replay_gap_bound(resolved.poset, r);

    Json rows = Json::array();
    std::ostringstream os;
    os << "gap-bound replay: delta p_n >= " << report.bound << " for n >= "
       << report.first_applicable_rank << " (r = " << r << ")\n";
    os << "rank   gap    gershgorin        determinant       status\n";
    for (const ReplayRow& row : report.rows) {
        rows.push_back(Json{{"rank", row.n},
                            {"observed_gap", row.observed_gap},
                            {"observed_ok", row.observed_ok},
                            {"gershgorin", j_certificate(resolved.poset, row.gershgorin)},
                            {"determinant", j_certificate(resolved.poset, row.determinant)}});
        std::ostringstream g, d;
        g << (row.gershgorin.valid ? "ok" : "fail") << " (" << row.gershgorin.margin.str() << ")";
        d << (row.determinant.valid ? "ok" : "fail") << " (" << row.determinant.margin.str() << ")";
        os << std::left << std::setw(7) << row.n << std::setw(7) << row.observed_gap
           << std::setw(18) << g.str() << std::setw(18) << d.str()
           << ((row.observed_ok && row.certified()) ? "ok" : "FAILED") << "\n";
    }
    if (report.rows.empty())
        os << "(no applicable ranks below the truncation boundary)\n";
    result.results = Json{{"r", report.r},
                          {"bound", report.bound},
                          {"first_applicable_rank", report.first_applicable_rank},
                          {"ok", report.ok},
                          {"rows", std::move(rows)}};
    result.text = os.str();
    result.exit_code = report.ok ? kExitOk : kExitCheckFailed;
    return result;
}

CommandResult cmd_export(const Options& opts, const ResolvedPoset& resolved) {
    CommandResult result;
    DotHighlight highlight = DotHighlight::Threads;
    if (opts.highlight == "none") highlight = DotHighlight::None;
    else if (opts.highlight != "threads")
        throw std::invalid_argument("unknown highlight '" + opts.highlight +
                                    "' (expected threads|none)");
    const std::string dot = export_dot(resolved.poset, highlight);
    result.results = Json{{"dot", dot}};
    result.text = dot;
    return result;
}

}  // namespace

PosetSpec parse_poset_spec(const std::string& text) {
    PosetSpec spec;
    const auto colon = text.find(':');
    const std::string kind = text.substr(0, colon);
    const std::string param = (colon == std::string::npos) ? "" : text.substr(colon + 1);
    auto parse_r = [&](const char* what) {
        if (param.empty())
            throw std::invalid_argument(std::string(what) + " needs a parameter, e.g. " + what +
                                        ":2");
        std::size_t pos = 0;
        int r = 0;
        try {
            r = std::stoi(param, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad r parameter '" + param + "'");
        }
        if (pos != param.size() || r < 1) throw std::invalid_argument("bad r parameter '" + param + "'");
        return r;
    };
    if (kind == "young") {
        if (colon != std::string::npos) throw std::invalid_argument("young takes no parameter");
        spec.kind = PosetKind::Young;
        spec.r = 1;
    } else if (kind == "young-power") {
        spec.kind = PosetKind::YoungPower;
        spec.r = parse_r("young-power");
    } else if (kind == "fibonacci") {
        spec.kind = PosetKind::Fibonacci;
        spec.r = parse_r("fibonacci");
    } else if (kind == "file") {
        if (param.empty()) throw std::invalid_argument("file needs a path, e.g. file:poset.txt");
        spec.kind = PosetKind::File;
        spec.path = param;
    } else {
        throw std::invalid_argument("unknown poset kind '" + kind +
                                    "' (expected young|young-power:R|fibonacci:R|file:PATH)");
    }
    return spec;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opts;

    CLI::App app{"differential poset construction, analysis and rank-gap certification"};
    app.require_subcommand(1);

    const std::vector<std::string> commands = {"build",   "verify",  "gaps",   "project",
                                               "threads", "certify", "replay", "export"};
    for (const std::string& name : commands) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--poset", opts.poset_arg,
                        "young | young-power:R | fibonacci:R | file:PATH")
            ->required();
        sub->add_option("--max-rank", opts.max_rank, "truncation rank");
        sub->add_option("--rank", opts.rank, "target rank (project/certify)");
        sub->add_option("--r", opts.r_override, "differential parameter r");
        sub->add_option("--witness", opts.witness, "threads | all | list:i,j,...");
        sub->add_option("--method", opts.method, "gershgorin | determinant | auto");
        sub->add_option("--highlight", opts.highlight, "threads | none (export)");
        sub->add_option("--format", opts.format, "text | json");
        sub->add_option("--out", opts.out_path, "write the report/artifact to a file");
        sub->add_flag("--force", opts.force, "override the default rank caps");
        sub->callback([&opts, name]() { opts.command = name; });
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        out << app.help() << std::endl;
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << std::endl;
        return kExitInputError;
    }

    if (opts.format != "text" && opts.format != "json") {
        err << "error: unknown format '" << opts.format << "'" << std::endl;
        return kExitInputError;
    }

    try {
        const ResolvedPoset resolved = resolve_poset(opts);
        CommandResult result;
        if (opts.command == "build") result = cmd_build(opts, resolved);
        else if (opts.command == "gaps") result = cmd_gaps(opts, resolved);
        else if (opts.command == "verify") result = cmd_verify(opts, resolved);
        else if (opts.command == "project") result = cmd_project(opts, resolved);
        else if (opts.command == "threads") result = cmd_threads(opts, resolved);
        else if (opts.command == "certify") result = cmd_certify(opts, resolved);
        else if (opts.command == "replay") result = cmd_replay(opts, resolved);
        else if (opts.command == "export") result = cmd_export(opts, resolved);
        else throw std::logic_error("unreachable command");

        std::string payload;
        if (opts.format == "json") {
            Json report{{"command", opts.command},
                        {"inputs", j_inputs(opts, resolved.spec)},
                        {"results", std::move(result.results)}};
            payload = report.dump(2) + "\n";
        } else {
            payload = result.text;
        }
        // build's --out carries the poset document itself (see cmd_build)
        if (!opts.out_path.empty() && opts.command != "build") {
            std::ofstream out_file(opts.out_path);
            if (!out_file) {
                err << "error: cannot write '" << opts.out_path << "'" << std::endl;
                return kExitInputError;
            }
            out_file << payload;
        } else {
            out << payload;
        }
        return result.exit_code;
    } catch (const ParseError& e) {
        err << "error: poset file: " << e.what() << std::endl;
        return kExitInputError;
    } catch (const PosetValidationError& e) {
        err << "error: " << e.what() << std::endl;
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << std::endl;
        return kExitInputError;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << std::endl;
        return kExitInputError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << std::endl;
        return kExitCheckFailed;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << std::endl;
        return kExitInputError;
    }
}

}  // namespace diffposet
