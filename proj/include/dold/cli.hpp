#pragma once

#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dold/doldcore.hpp"
#include "dold/genus_opt.hpp"
#include "dold/literals.hpp"
#include "dold/parallel.hpp"
#include "dold/spectra_enum.hpp"
#include "dold/symplectic.hpp"

// Command-line front end. Exit codes: 0 success, 1 semantic failure (not
// realizable, failed verification), 2 usage or parse error, 3 I/O error.
namespace dold::cli {

enum ExitCode : int { ok = 0, semantic_failure = 1, usage_error = 2, io_error = 3 };

enum class OutputFormat { text, json, csv, jsonl };

struct CliConfig {
    OutputFormat format = OutputFormat::text;
    unsigned parallelism = 1;
    Index horizon_cap = symplectic::default_horizon_cap;
    std::string output;  // empty: standard output
};

namespace detail {

using json = nlohmann::ordered_json;

inline json number(const Integer& v) { return enumeration::detail::number(v); }

template <typename Tag>
json pairs(const SparseSequence<Tag>& s) {
    return enumeration::detail::pairs(s);
}

inline json set_json(const APSet& s) { return s.elements(); }

// 2 - sum n a_n over two, when it is a non-negative integer and the spectrum
// has no negative entries.
inline std::optional<Integer> genus_if_defined(const RootSpectrum& r) {
    for (const auto& e : r)
        if (e.second < 0) return std::nullopt;
    const Integer twice = core::twice_genus(r);
    if (twice % 2 != 0) return std::nullopt;
    return twice / 2;
}

inline std::string violations_text(const core::Realizability& v) {
    std::string out;
    for (const auto& x : v.violations) out += (out.empty() ? "" : "; ") + x.describe();
    return out;
}

inline std::string grid(const IntMatrix& m) {
    std::size_t width = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) width = std::max(width, m(i, j).str().size());
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << std::setw(int(width)) << m(i, j).str();
        os << '\n';
    }
    return os.str();
}

inline json matrix_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

struct Streams {
    std::ostream& out;
    std::ostream& err;
};

// Resolves --output: the returned stream is either `fallback` or an owned file.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (path.empty() || path == "-") return;
        file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
        if (!*file_) throw std::ios_base::failure("cannot open " + path);
        stream_ = file_.get();
    }
    std::ostream& get() { return *stream_; }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_;
};

inline void print_conversion(std::ostream& out, OutputFormat format, const RootSpectrum& r, const DoldSequence& a) {
    const auto verdict = core::check_spectrum(r);
    const auto genus = genus_if_defined(r);
    const APSet ap = core::algebraic_periods(a);
    if (format == OutputFormat::json) {
        json j;
        j["spectrum"] = pairs(r);
        j["dold"] = pairs(a);
        j["genus"] = genus ? number(*genus) : json(nullptr);
        j["realizable"] = verdict.realizable;
        json v = json::array();
        for (const auto& x : verdict.violations) v.push_back(x.describe());
        j["violations"] = std::move(v);
        j["ap"] = set_json(ap);
        j["mper"] = set_json(ap.odd_part());
        out << j.dump() << '\n';
        return;
    }
    out << "spectrum: " << literals::format_spectrum(r) << '\n'
        << "dold: " << literals::format_tuple(a) << '\n'
        << "genus: " << (genus ? genus->str() : std::string("n/a")) << '\n'
        << "realizable: " << (verdict ? "yes" : "no (" + violations_text(verdict) + ")") << '\n'
        << "ap: " << literals::format_set(ap) << '\n'
        << "mper: " << literals::format_set(ap.odd_part()) << '\n';
}

inline void print_witness(std::ostream& out, OutputFormat format, const genus::GenusWitness& w) {
    const APSet ap = core::algebraic_periods(w.dold);
    if (format == OutputFormat::json) {
        json j;
        j["genus"] = w.genus;
        j["spectrum"] = pairs(w.spectrum);
        j["dold"] = pairs(w.dold);
        j["ap"] = set_json(ap);
        j["mper"] = set_json(ap.odd_part());
        out << j.dump() << '\n';
        return;
    }
    out << "genus: " << w.genus << '\n'
        << "spectrum: " << literals::format_spectrum(w.spectrum) << '\n'
        << "dold: " << literals::format_tuple(w.dold) << '\n'
        << "ap: " << literals::format_set(ap) << '\n'
        << "mper: " << literals::format_set(ap.odd_part()) << '\n';
}

// Spectrum from exactly one of --spectrum / --dold.
inline RootSpectrum spectrum_input(const std::optional<std::string>& spectrum, const std::optional<std::string>& dold) {
    if (spectrum.has_value() == dold.has_value())
        throw CLI::ValidationError("exactly one of --spectrum and --dold is required");
    return spectrum ? literals::parse_spectrum(*spectrum) : core::dold_to_spectrum(literals::parse_dold(*dold));
}

}  // namespace detail

inline int cmd_convert(const CliConfig& cfg, const std::optional<std::string>& spectrum,
                       const std::optional<std::string>& dold, bool require_realizable, detail::Streams io) {
    RootSpectrum r;
    DoldSequence a;
    if (spectrum) {
        r = literals::parse_spectrum(*spectrum);
        a = core::spectrum_to_dold(r);
    } else {
        a = literals::parse_dold(*dold);
        r = core::dold_to_spectrum(a);
    }
    detail::Sink sink(cfg.output, io.out);
    detail::print_conversion(sink.get(), cfg.format, r, a);
    if (require_realizable && !core::check_spectrum(r)) return semantic_failure;
    return ok;
}

inline int cmd_catalog(const CliConfig& cfg, Index genus, detail::Streams io) {
    const auto format =
        cfg.format == OutputFormat::csv ? enumeration::CatalogFormat::csv : enumeration::CatalogFormat::jsonl;
    detail::Sink sink(cfg.output, io.out);
    enumeration::GenusSummary s;
    enumeration::export_catalog(genus, format, sink.get(), cfg.parallelism, &s);
    io.err << "genus " << s.genus << ": " << s.count_spectra << " spectra, " << s.count_ap_sets << " AP sets, "
           << s.count_mper_sets << " odd AP sets\n";
    return ok;
}

inline int cmd_min_genus(const CliConfig& cfg, const std::string& set_literal, bool odd, detail::Streams io) {
    const APSet target = literals::parse_set(set_literal);
    if (target.empty()) throw CLI::ValidationError("min-genus: the set must be nonempty");
    if (odd)
        for (Index n : target)
            if (n % 2 == 0) throw CLI::ValidationError("min-genus --odd: element " + std::to_string(n) + " is even");
    const auto w = odd ? genus::min_genus_odd(target, cfg.parallelism) : genus::min_genus_exact(target);
    detail::Sink sink(cfg.output, io.out);
    detail::print_witness(sink.get(), cfg.format, w);
    return ok;
}

inline int cmd_realize(const CliConfig& cfg, const RootSpectrum& r, symplectic::Layout layout, detail::Streams io) {
    const auto verdict = core::check_spectrum(r);
    if (!verdict) {
        io.err << "not realizable: " << detail::violations_text(verdict) << '\n';
        return semantic_failure;
    }
    if (r.empty()) {
        io.err << "not realizable: empty spectrum (genus 0)\n";
        return semantic_failure;
    }
    auto [a, form] = symplectic::realize_spectrum(r);
    if (layout == symplectic::Layout::split) {
        a = symplectic::change_layout(a, symplectic::Layout::paired, symplectic::Layout::split);
        form.layout = symplectic::Layout::split;
    }
    const auto report = symplectic::verify_realization(a, form, r, cfg.horizon_cap);
    const auto poly = char_poly(a);
    const char* layout_name = layout == symplectic::Layout::paired ? "paired" : "split";
    detail::Sink sink(cfg.output, io.out);
    auto& out = sink.get();
    if (cfg.format == OutputFormat::json) {
        detail::json j;
        j["spectrum"] = detail::pairs(r);
        j["genus"] = a.rows() / 2;
        j["layout"] = layout_name;
        j["matrix"] = detail::matrix_json(a);
        detail::json coeffs = detail::json::array();
        for (const auto& c : poly.coefficients()) coeffs.push_back(c.str());
        j["char_poly"] = std::move(coeffs);
        j["checks"] = {{"symplectic", report.symplectic},
                       {"char_poly", report.char_poly},
                       {"lefschetz", report.lefschetz},
                       {"horizon", report.horizon}};
        out << j.dump() << '\n';
    } else {
        auto pass = [](bool b) { return b ? "pass" : "FAIL"; };
        out << "spectrum: " << literals::format_spectrum(r) << '\n'
            << "genus: " << a.rows() / 2 << '\n'
            << "layout: " << layout_name
            << (layout == symplectic::Layout::paired ? " (Omega = diag of [[0,1],[-1,0]])"
                                                     : " (Omega = [[0,I],[-I,0]])")
            << '\n'
            << "matrix:\n"
            << detail::grid(a) << "char_poly: " << poly << '\n'
            << "check symplectic: " << pass(report.symplectic) << '\n'
            << "check char_poly: " << pass(report.char_poly) << '\n'
            << "check lefschetz: " << pass(report.lefschetz) << " (n <= " << report.horizon << ")\n";
    }
    return report.all() ? ok : semantic_failure;
}

inline int cmd_bounds(const CliConfig& cfg, const std::string& dold_literal, detail::Streams io) {
    const auto report = core::periodic_point_bounds(literals::parse_dold(dold_literal));
    detail::Sink sink(cfg.output, io.out);
    auto& out = sink.get();
    if (cfg.format == OutputFormat::json) {
        detail::json rows = detail::json::array();
        for (const auto& b : report)
            rows.push_back({{"n", b.n}, {"kind", core::to_string(b.kind)}, {"bound", detail::number(b.bound)}});
        out << rows.dump() << '\n';
        return ok;
    }
    out << "n\tkind\tbound\n";
    for (const auto& b : report) {
        out << b.n << '\t' << core::to_string(b.kind) << "\t>= " << b.bound.str();
        if (b.kind == core::BoundKind::even_pair) out << " (minimal period " << b.n << " or " << b.n / 2 << ")";
        out << '\n';
    }
    return ok;
}

inline int cmd_summary(const CliConfig& cfg, Index from, Index to, detail::Streams io) {
    if (from == 0 || to < from) throw CLI::ValidationError("summary: need 1 <= g_from <= g_to");
    detail::Sink sink(cfg.output, io.out);
    auto& out = sink.get();
    if (cfg.format == OutputFormat::csv) out << "genus,spectra,ap_sets,mper_sets\n";
    if (cfg.format == OutputFormat::text) out << "g\t#Sp\t#AP\t#AP_odd\n";
    for (Index g = from; g <= to; ++g) {
        const auto s = enumeration::summarize(g, cfg.parallelism);
        if (cfg.format == OutputFormat::json) {
            detail::json j{{"genus", s.genus},
                           {"spectra", s.count_spectra},
                           {"ap_sets", s.count_ap_sets},
                           {"mper_sets", s.count_mper_sets}};
            out << j.dump() << '\n';
        } else {
            const char sep = cfg.format == OutputFormat::csv ? ',' : '\t';
            out << s.genus << sep << s.count_spectra << sep << s.count_ap_sets << sep << s.count_mper_sets << '\n';
        }
        out.flush();
    }
    return ok;
}

/// Parses argv-style arguments (args[0] is the program name) and runs the
/// selected subcommand.
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Dold coefficients, root spectra and symplectic realizations of surface homeomorphisms", "dold"};
    app.require_subcommand(1);

    const auto positive = CLI::Range(Index{1}, std::numeric_limits<Index>::max());
    CliConfig cfg;
    cfg.parallelism = default_parallelism();
    std::string format;
    auto add_common = [&](CLI::App* sub, std::vector<std::string> formats) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
        sub->add_option("--threads", cfg.parallelism, "Worker threads (default: DOLD_THREADS or hardware)")
            ->check(positive);
        sub->add_option("-o,--output", cfg.output, "Output file (default: standard output)");
    };

    std::optional<std::string> spectrum_arg, dold_arg;
    bool require_realizable = false;
    auto* convert = app.add_subcommand("convert", "Convert between root spectrum and Dold coefficients");
    convert->add_option("--spectrum", spectrum_arg, "Spectrum, e.g. \"{3,4}\" or \"3:1,4:1\"");
    convert->add_option("--dold", dold_arg, "Dold sequence, e.g. \"(3,1,-1,-1)\" or \"15:-2\"");
    convert->add_flag("--require-realizable", require_realizable, "Exit with 1 if the input is not realizable");
    add_common(convert, {"text", "json"});

    Index genus_arg = 0;
    auto* catalog = app.add_subcommand("catalog", "Export every realizable spectrum of one genus");
    catalog->add_option("genus", genus_arg, "Genus g >= 1")->required()->check(positive);
    add_common(catalog, {"jsonl", "json", "csv"});

    std::string set_arg;
    bool odd = false;
    auto* min_genus = app.add_subcommand("min-genus", "Minimal genus realizing a set of algebraic periods");
    min_genus->add_option("set", set_arg, "Set, e.g. \"{1,2}\"")->required();
    min_genus->add_flag("--odd", odd, "Match only the odd algebraic periods");
    add_common(min_genus, {"text", "json"});

    std::string layout_arg = "paired";
    auto* realize = app.add_subcommand("realize", "Integer symplectic matrix realizing a spectrum");
    realize->add_option("--spectrum", spectrum_arg, "Spectrum literal");
    realize->add_option("--dold", dold_arg, "Dold sequence literal");
    realize->add_option("--layout", layout_arg, "Basis order of the symplectic form")
        ->check(CLI::IsMember({"paired", "split"}));
    realize->add_option("--horizon-cap", cfg.horizon_cap, "Largest Lefschetz horizon to verify")
        ->check(positive);
    add_common(realize, {"text", "json"});

    std::string bounds_arg;
    auto* bounds = app.add_subcommand("bounds", "Periodic point lower bounds for transversal maps");
    bounds->add_option("dold", bounds_arg, "Dold sequence literal")->required();
    add_common(bounds, {"text", "json"});

    Index from = 0, to = 0;
    auto* summary = app.add_subcommand("summary", "Counts of spectra and distinct period sets per genus");
    summary->add_option("g_from", from, "First genus")->required()->check(positive);
    summary->add_option("g_to", to, "Last genus")->required()->check(positive);
    add_common(summary, {"text", "csv", "json"});

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    if (argv.empty()) argv.push_back("dold");
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }

    if (format == "json") cfg.format = catalog->parsed() ? OutputFormat::jsonl : OutputFormat::json;
    else if (format == "jsonl") cfg.format = OutputFormat::jsonl;
    else if (format == "csv") cfg.format = OutputFormat::csv;
    else if (catalog->parsed()) cfg.format = OutputFormat::jsonl;

    detail::Streams io{out, err};
    try {
        if (convert->parsed()) {
            if (spectrum_arg.has_value() == dold_arg.has_value())
                throw CLI::ValidationError("exactly one of --spectrum and --dold is required");
            return cmd_convert(cfg, spectrum_arg, dold_arg, require_realizable, io);
        }
        if (catalog->parsed()) return cmd_catalog(cfg, genus_arg, io);
        if (min_genus->parsed()) return cmd_min_genus(cfg, set_arg, odd, io);
        if (realize->parsed()) {
            const auto layout = layout_arg == "split" ? symplectic::Layout::split : symplectic::Layout::paired;
            return cmd_realize(cfg, detail::spectrum_input(spectrum_arg, dold_arg), layout, io);
        }
        if (bounds->parsed()) return cmd_bounds(cfg, bounds_arg, io);
        if (summary->parsed()) return cmd_summary(cfg, from, to, io);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return usage_error;
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const HorizonError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::ios_base::failure& e) {
        err << "i/o error: " << e.what() << '\n';
        return io_error;
    } catch (const enumeration::ExportError& e) {
        err << "i/o error: " << e.what() << '\n';
        return io_error;
    }
    return usage_error;
}

}  // namespace dold::cli
