#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "hw/characters.hpp"
#include "hw/errors.hpp"
#include "hw/fourier.hpp"
#include "hw/fusion.hpp"
#include "hw/group.hpp"
#include "hw/io.hpp"
#include "hw/irrep.hpp"
#include "hw/verify.hpp"

namespace hw::cli {
namespace {

enum class Format { Pretty, Json, Csv };

struct Options {
    unsigned s = 0;
    std::string format = "pretty";
    std::string out_path;
    std::string label;
    std::string left;
    std::string right;
    std::string element;
    std::string verify_level = "full";
    std::uint64_t seed = 0;
    bool timing = false;
};

Format parse_format(const std::string& text) {
    if (text == "json") return Format::Json;
    if (text == "csv") return Format::Csv;
    return Format::Pretty;
}

std::string residual_text(double value) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(3) << value;
    return os.str();
}

std::string group_name(unsigned s) { return "HW_{2^" + std::to_string(s) + "}"; }

IrrepLabel parse_canonical_label(const std::string& text, unsigned s) {
    const LabelTriple t = parse_label_triple(text, s);
    if (!is_canonical(s, t.p, t.q, t.r)) {
        const IrrepLabel c = canonicalize_label(s, t.p, t.q, t.r);
        throw ParameterError("label (" + text + ") is not canonical for s=" + std::to_string(s) +
                             "; its canonical form is (" + to_string(c) + ")");
    }
    return make_label(s, t.p, t.q, t.r);
}

/// Pads every column to its widest cell.
std::string aligned(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    std::ostringstream os;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) line += "  ";
            line += row[i];
            if (i + 1 < row.size()) line.append(width[i] - row[i].size(), ' ');
        }
        os << line << '\n';
    }
    return os.str();
}

int cmd_irreps(const Options& opt, Format format, std::ostream& out) {
    require_enumerable(opt.s, "irreps");
    const auto irreps = enumerate_irreps(opt.s);
    if (format == Format::Json) {
        io::json arr = io::json::array();
        for (const auto& L : irreps) arr.push_back(io::to_json(L));
        out << arr.dump(2) << '\n';
    } else if (format == Format::Csv) {
        out << io::irreps_csv(irreps);
    } else {
        out << group_name(opt.s) << ": " << irreps.size() << " irreps\n";
        std::vector<std::vector<std::string>> rows{{"p", "q", "r", "t", "dim", "faithful"}};
        for (const auto& L : irreps) {
            rows.push_back({std::to_string(L.p), std::to_string(L.q), std::to_string(L.r), std::to_string(L.t),
                            std::to_string(L.dim()), L.faithful() ? "yes" : "no"});
        }
        out << aligned(rows);
    }
    return kExitOk;
}

int cmd_classes(const Options& opt, Format format, std::ostream& out) {
    const GroupParams params(opt.s);
    const auto classes = enumerate_classes(params);
    if (format == Format::Json) {
        io::json arr = io::json::array();
        for (const auto& c : classes) arr.push_back(io::to_json(c));
        out << arr.dump(2) << '\n';
    } else if (format == Format::Csv) {
        out << io::classes_csv(classes);
    } else {
        out << group_name(opt.s) << ": " << classes.size() << " conjugacy classes\n";
        std::vector<std::vector<std::string>> rows{{"representative", "k", "size"}};
        for (const auto& c : classes) {
            rows.push_back({to_string(c.representative), std::to_string(c.k), std::to_string(c.size)});
        }
        out << aligned(rows);
    }
    return kExitOk;
}

int cmd_chartable(const Options& opt, Format format, std::ostream& out) {
    if (opt.s > kCharTableMaxS) {
        throw ResourceError("chartable is limited to s <= " + std::to_string(kCharTableMaxS));
    }
    const CharacterTable table = character_table(opt.s);
    if (format == Format::Json) {
        out << io::to_json(table).dump(2) << '\n';
    } else if (format == Format::Csv) {
        out << io::character_table_csv(table);
    } else {
        out << group_name(opt.s) << " character table, w = exp(2*pi*i/" << (1u << opt.s) << ")\n";
        std::vector<std::vector<std::string>> rows;
        std::vector<std::string> header{"irrep \\ class"};
        std::vector<std::string> sizes{"size"};
        for (const auto& c : table.classes) {
            header.push_back(to_string(c.representative));
            sizes.push_back(std::to_string(c.size));
        }
        rows.push_back(header);
        rows.push_back(sizes);
        for (std::size_t i = 0; i < table.irreps.size(); ++i) {
            std::vector<std::string> row{to_string(table.irreps[i])};
            for (const auto& v : table.values[i]) row.push_back(v.to_string());
            rows.push_back(row);
        }
        out << aligned(rows);
    }
    return kExitOk;
}

int cmd_matrix(const Options& opt, Format format, std::ostream& out) {
    const GroupParams params(opt.s);
    const IrrepLabel label = parse_canonical_label(opt.label, opt.s);
    const GroupElement g = parse_element(opt.element, params);
    const MonomialMatrix M = irrep_matrix(label, g);
    if (format == Format::Json) {
        out << io::to_json(M).dump(2) << '\n';
    } else if (format == Format::Csv) {
        out << "row,col,exp\n";
        for (std::size_t k = 0; k < M.dim(); ++k) out << k << ',' << M.sigma[k] << ',' << M.phase[k] << '\n';
    } else {
        out << "Gamma(" << to_string(label) << ") at z^" << g.m << " x^" << g.n << " y^" << g.l << ", dim "
            << M.dim() << ", w = exp(2*pi*i/" << M.root_modulus << ")\n";
        std::vector<std::vector<std::string>> rows;
        for (std::size_t k = 0; k < M.dim(); ++k) {
            std::vector<std::string> row(M.dim(), "0");
            row[M.sigma[k]] = M.phase[k] == 0 ? "1" : "w^" + std::to_string(M.phase[k]);
            rows.push_back(std::move(row));
        }
        out << aligned(rows);
    }
    return kExitOk;
}

int cmd_fuse(const Options& opt, Format format, std::ostream& out) {
    if (opt.left.empty() != opt.right.empty()) {
        throw ParameterError("fuse needs both --left and --right, or neither for the full table");
    }
    std::vector<FusionRow> rows;
    if (opt.left.empty()) {
        rows = fusion_table(opt.s).rows;
    } else {
        const IrrepLabel a = parse_canonical_label(opt.left, opt.s);
        const IrrepLabel b = parse_canonical_label(opt.right, opt.s);
        rows.push_back({a, b, fuse(a, b)});
    }
    if (format == Format::Json) {
        if (opt.left.empty()) {
            io::json arr = io::json::array();
            for (const auto& row : rows) arr.push_back(io::to_json(row));
            out << arr.dump(2) << '\n';
        } else {
            out << io::to_json(rows.front()).dump(2) << '\n';
        }
    } else if (format == Format::Csv) {
        out << io::fusion_rows_csv(rows);
    } else {
        for (const auto& row : rows) out << io::format_fusion_rule(row) << '\n';
    }
    return kExitOk;
}

void print_fourier_report(const FourierReport& r, std::ostream& out) {
    out << "fourier (" << to_string(r.label) << "), dim " << r.label.dim() << '\n';
    const auto line = [&](const char* name, double value, bool gating) {
        const char* status = !gating ? "info" : value < kFourierTolerance ? "ok" : "FAIL";
        out << "  " << std::left << std::setw(30) << name << residual_text(value) << "  " << status << '\n';
    };
    line("unitarity_fd", r.unitarity_fd, true);
    line("unitarity_standard", r.unitarity_std, true);
    line("unitarity_omega", r.unitarity_omega, true);
    line("fourier_fourth_power", r.fourth_power, true);
    line("eigen", r.eigen, true);
    line("offdiag_forward", r.offdiag_forward, false);
    line("offdiag_backward", r.offdiag_backward, false);
    line("conjugation_relation", r.conjugation_relation, true);
    line("conjugation_relation_direct", r.conjugation_relation_direct, false);
    out << "  diagonalizing orientations:";
    if (r.diagonalizing.empty()) out << " none";
    for (auto o : r.diagonalizing) out << ' ' << to_string(o);
    out << "\n  result: " << (r.passed() ? "PASS" : "FAIL") << '\n';
}

int cmd_fourier(const Options& opt, Format format, std::ostream& out) {
    std::vector<IrrepLabel> labels;
    if (!opt.label.empty()) {
        labels.push_back(parse_canonical_label(opt.label, opt.s));
    } else {
        if (opt.s > kFourierAllMaxS) {
            throw ResourceError("fourier without --label is limited to s <= " + std::to_string(kFourierAllMaxS));
        }
        for (const auto& L : enumerate_irreps(opt.s)) {
            if (L.p != 0) labels.push_back(L);
        }
    }
    std::vector<FourierReport> reports;
    for (const auto& L : labels) reports.push_back(verify_fourier_relations(L));
    const auto passed = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });

    if (format == Format::Json) {
        if (!opt.label.empty()) {
            io::json obj = io::to_json(reports.front());
            obj["fourier_matrix"] = io::to_json(fourier_FD(labels.front()));
            out << obj.dump(2) << '\n';
        } else {
            io::json arr = io::json::array();
            for (const auto& r : reports) arr.push_back(io::to_json(r));
            out << arr.dump(2) << '\n';
        }
    } else if (format == Format::Csv) {
        out << "label,passed,unitarity_fd,unitarity_standard,unitarity_omega,fourier_fourth_power,eigen,"
               "offdiag_forward,offdiag_backward,conjugation_relation,conjugation_relation_direct\n";
        for (const auto& r : reports) {
            out << io::csv_field(to_string(r.label)) << ',' << (r.passed() ? "true" : "false");
            for (double v : {r.unitarity_fd, r.unitarity_std, r.unitarity_omega, r.fourth_power, r.eigen,
                             r.offdiag_forward, r.offdiag_backward, r.conjugation_relation,
                             r.conjugation_relation_direct}) {
                out << ',' << residual_text(v);
            }
            out << '\n';
        }
    } else {
        for (const auto& r : reports) print_fourier_report(r, out);
        if (reports.size() > 1) out << passed << '/' << reports.size() << " irreps passed\n";
    }
    return static_cast<std::size_t>(passed) == reports.size() ? kExitOk : kExitVerificationFailed;
}

int cmd_verify(const Options& opt, Format format, std::ostream& out) {
    const VerifyReport report = verify(opt.s, parse_verify_level(opt.verify_level), opt.seed);
    const auto npassed =
        std::count_if(report.checks.begin(), report.checks.end(), [](const CheckResult& c) { return c.passed; });
    if (format == Format::Json) {
        io::json checks = io::json::array();
        for (const auto& c : report.checks) {
            io::json obj = {{"name", c.name},
                            {"status", c.passed ? "pass" : "fail"},
                            {"checked", c.checked},
                            {"failures", c.failures}};
            if (c.has_residual) obj["max_residual"] = c.max_residual;
            if (!c.detail.empty()) obj["detail"] = c.detail;
            if (opt.timing) obj["elapsed_seconds"] = c.elapsed_seconds;
            checks.push_back(obj);
        }
        const io::json doc = {{"s", report.s},
                              {"level", to_string(report.level)},
                              {"seed", report.seed},
                              {"passed", report.passed()},
                              {"checks", checks}};
        out << doc.dump(2) << '\n';
    } else if (format == Format::Csv) {
        out << "name,status,checked,failures,max_residual,detail" << (opt.timing ? ",elapsed_seconds" : "") << '\n';
        for (const auto& c : report.checks) {
            out << c.name << ',' << (c.passed ? "pass" : "fail") << ',' << c.checked << ',' << c.failures << ','
                << (c.has_residual ? residual_text(c.max_residual) : "") << ',' << io::csv_field(c.detail);
            if (opt.timing) out << ',' << c.elapsed_seconds;
            out << '\n';
        }
    } else {
        out << "verify " << group_name(report.s) << " level=" << to_string(report.level) << " seed=" << report.seed
            << '\n';
        std::vector<std::vector<std::string>> rows;
        for (const auto& c : report.checks) {
            std::vector<std::string> row{c.passed ? "PASS" : "FAIL", c.name, "checked=" + std::to_string(c.checked),
                                         "failures=" + std::to_string(c.failures)};
            row.push_back(c.has_residual ? "max_residual=" + residual_text(c.max_residual) : "");
            if (opt.timing) {
                std::ostringstream t;
                t << std::fixed << std::setprecision(3) << c.elapsed_seconds << 's';
                row.push_back(t.str());
            }
            if (!c.detail.empty()) row.push_back("first failure: " + c.detail);
            rows.push_back(std::move(row));
        }
        out << aligned(rows);
        out << "overall: " << (report.passed() ? "PASS" : "FAIL") << " (" << npassed << '/' << report.checks.size()
            << " checks passed)\n";
    }
    return report.passed() ? kExitOk : kExitVerificationFailed;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact representation theory of the discrete Heisenberg-Weyl group HW_{2^s}", "hw"};
    app.require_subcommand(1);
    Options opt;

    const auto common = [&](CLI::App* sub) {
        sub->add_option("--s", opt.s, "group parameter, N = 2^s")->required()->check(CLI::PositiveNumber);
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"pretty", "json", "csv"}))
            ->capture_default_str();
        sub->add_option("--out", opt.out_path, "write output to this file");
        return sub;
    };
    common(app.add_subcommand("irreps", "list the canonical irrep labels"));
    common(app.add_subcommand("classes", "list the conjugacy classes"));
    common(app.add_subcommand("chartable", "emit the character table"));
    auto* matrix = common(app.add_subcommand("matrix", "evaluate an irrep matrix at a group element"));
    matrix->add_option("--label", opt.label, "irrep label p,q,r")->required();
    matrix->add_option("--element", opt.element, "group element m,n,l")->required();
    auto* fuse_cmd = common(app.add_subcommand("fuse", "decompose a tensor product, or the whole fusion table"));
    fuse_cmd->add_option("--left", opt.left, "irrep label p,q,r");
    fuse_cmd->add_option("--right", opt.right, "irrep label p,q,r");
    auto* fourier = common(app.add_subcommand("fourier", "check the generalized Fourier transform relations"));
    fourier->add_option("--label", opt.label, "irrep label p,q,r (default: every irrep with p != 0)");
    auto* verify_cmd = common(app.add_subcommand("verify", "run the verification suite"));
    verify_cmd->add_option("--verify-level", opt.verify_level, "full or sampled")
        ->check(CLI::IsMember({"full", "sampled"}))
        ->capture_default_str();
    verify_cmd->add_option("--seed", opt.seed, "seed for sampled checks")->capture_default_str();
    verify_cmd->add_flag("--timing", opt.timing, "include elapsed time per check");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        const auto subs = app.get_subcommands();
        err << "error: " << e.what() << '\n' << (subs.empty() ? app.help() : subs.front()->help());
        return kExitInvalidInput;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    const Format format = parse_format(opt.format);
    std::ostringstream buffer;
    int code = kExitOk;
    try {
        if (command == "irreps") code = cmd_irreps(opt, format, buffer);
        else if (command == "classes") code = cmd_classes(opt, format, buffer);
        else if (command == "chartable") code = cmd_chartable(opt, format, buffer);
        else if (command == "matrix") code = cmd_matrix(opt, format, buffer);
        else if (command == "fuse") code = cmd_fuse(opt, format, buffer);
        else if (command == "fourier") code = cmd_fourier(opt, format, buffer);
        else code = cmd_verify(opt, format, buffer);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitVerificationFailed;
    }

    if (opt.out_path.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(opt.out_path, std::ios::binary);
        file << buffer.str();
        if (!file) {
            err << "error: cannot write " << opt.out_path << '\n';
            return kExitInvalidInput;
        }
    }
    return code;
}

} // namespace hw::cli
