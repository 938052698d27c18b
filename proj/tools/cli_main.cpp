#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "crr/serialize.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitIntegrity = 2;
constexpr int kExitUsage = 64;
constexpr int kExitIo = 74;

struct CommonOpts {
    std::string type_name;
    std::string format_name = "csv";
    std::string out_path;
    int max = 60;
};

int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!std::cout) {
            std::cerr << "error: writing to standard output failed\n";
            return kExitIo;
        }
        return kExitPass;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) {
        std::cerr << "error: cannot open " << out_path << " for writing\n";
        return kExitIo;
    }
    os << text;
    os.flush();
    if (!os) {
        std::cerr << "error: writing to " << out_path << " failed\n";
        return kExitIo;
    }
    return kExitPass;
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_max,
                bool type_required = true) {
    auto* type_opt =
        cmd->add_option("--type", opts.type_name,
                        "affine type: G2_1, D4_3, F4_1, E6_2, E6_1, E7_1, E8_1");
    if (type_required) type_opt->required();
    cmd->add_option("--format", opts.format_name, "output format: csv, json, md")
        ->capture_default_str();
    cmd->add_option("--out", opts.out_path, "write to file instead of stdout");
    if (with_max)
        cmd->add_option("--max", opts.max, "truncation degree")
            ->capture_default_str();
}

struct Parsed {
    crr::AffineType type;
    crr::OutputFormat format;
};

// Returns nullopt after printing a usage diagnostic.
std::optional<Parsed> resolve(const CommonOpts& opts, bool need_type = true) {
    Parsed p{crr::AffineType::G2_1, crr::OutputFormat::Csv};
    if (need_type) {
        auto t = crr::parse_type(opts.type_name);
        if (!t) {
            std::cerr << "error: unknown type '" << opts.type_name << "'\n";
            return std::nullopt;
        }
        p.type = *t;
    }
    auto f = crr::parse_format(opts.format_name);
    if (!f) {
        std::cerr << "error: unknown format '" << opts.format_name << "'\n";
        return std::nullopt;
    }
    p.format = *f;
    return p;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Level-one crystal difference matrices and partition identity checks"};
    app.require_subcommand(1);

    CommonOpts matrix_opts, ccon_opts, icon_opts, sum_opts, product_opts,
        spec_opts, check_opts;
    bool check_all = false;

    auto* cmd_matrix =
        app.add_subcommand("matrix", "emit the difference matrix of a type");
    add_common(cmd_matrix, matrix_opts, false);

    auto* cmd_ccon =
        app.add_subcommand("ccon", "emit the residue classes of the colors");
    add_common(cmd_ccon, ccon_opts, false);

    auto* cmd_icon =
        app.add_subcommand("icon", "emit the excluded positive initial parts");
    add_common(cmd_icon, icon_opts, false);

    auto* cmd_sum = app.add_subcommand(
        "sum", "count admissible colored partitions up to --max");
    add_common(cmd_sum, sum_opts, true);

    auto* cmd_product =
        app.add_subcommand("product", "expand the Euler product up to --max");
    add_common(cmd_product, product_opts, true);

    auto* cmd_spec = app.add_subcommand(
        "specialize",
        "emit the specialized denominator series and their ratio up to --max");
    add_common(cmd_spec, spec_opts, true);

    auto* cmd_check = app.add_subcommand(
        "check", "verify sum side = product side coefficient by coefficient");
    add_common(cmd_check, check_opts, true, false);
    cmd_check->add_flag("--all", check_all, "check every type");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cmd_matrix->parsed()) {
            auto p = resolve(matrix_opts);
            if (!p) return kExitUsage;
            const crr::Crystal crystal(p->type);
            const auto m = crr::difference_matrix(crystal);
            return emit(crr::render_matrix(m, p->format), matrix_opts.out_path);
        }
        if (cmd_ccon->parsed()) {
            auto p = resolve(ccon_opts);
            if (!p) return kExitUsage;
            const crr::Crystal crystal(p->type);
            return emit(crr::render_congruence_table(crystal, p->format),
                        ccon_opts.out_path);
        }
        if (cmd_icon->parsed()) {
            auto p = resolve(icon_opts);
            if (!p) return kExitUsage;
            const crr::Crystal crystal(p->type);
            return emit(crr::render_initial_parts(crystal, p->format),
                        icon_opts.out_path);
        }
        if (cmd_sum->parsed()) {
            auto p = resolve(sum_opts);
            if (!p) return kExitUsage;
            if (sum_opts.max < 0) {
                std::cerr << "error: --max must be >= 0\n";
                return kExitUsage;
            }
            const crr::Crystal crystal(p->type);
            const auto m = crr::difference_matrix(crystal);
            const auto d = crr::count_admissible(crystal, m, sum_opts.max);
            return emit(crr::render_series(p->type, "d", d, p->format),
                        sum_opts.out_path);
        }
        if (cmd_product->parsed()) {
            auto p = resolve(product_opts);
            if (!p) return kExitUsage;
            if (product_opts.max < 0) {
                std::cerr << "error: --max must be >= 0\n";
                return kExitUsage;
            }
            const auto c = crr::product_side_series(p->type, product_opts.max);
            return emit(crr::render_series(p->type, "c", c.coeffs(), p->format),
                        product_opts.out_path);
        }
        if (cmd_spec->parsed()) {
            auto p = resolve(spec_opts);
            if (!p) return kExitUsage;
            if (spec_opts.max < 0) {
                std::cerr << "error: --max must be >= 0\n";
                return kExitUsage;
            }
            const auto dual = crr::affine_config(p->type).dual;
            std::vector<int> ones(crr::affine_config(dual).rank() + 1, 1);
            std::vector<int> shifted = ones;
            shifted[0] = 2;
            const auto principal =
                crr::specialized_denominator(dual, ones, spec_opts.max);
            const auto shifted_series =
                crr::specialized_denominator(dual, shifted, spec_opts.max);
            const auto character =
                crr::normalized_character_series(p->type, spec_opts.max);
            return emit(crr::render_specializations(p->type, principal,
                                                    shifted_series, character,
                                                    p->format),
                        spec_opts.out_path);
        }
        if (cmd_check->parsed()) {
            if (check_all != check_opts.type_name.empty()) {
                // exactly one of --all / --type
                std::cerr << "error: pass exactly one of --type or --all\n";
                return kExitUsage;
            }
            auto p = resolve(check_opts, !check_all);
            if (!p) return kExitUsage;
            if (check_opts.max < 1) {
                std::cerr << "error: --max must be >= 1\n";
                return kExitUsage;
            }
            std::vector<crr::CheckReport> reports;
            if (check_all) {
                for (crr::AffineType t : crr::kAllTypes)
                    reports.push_back(crr::run_check(t, check_opts.max));
            } else {
                reports.push_back(crr::run_check(p->type, check_opts.max));
            }
            bool all_pass = true;
            for (const auto& r : reports) {
                all_pass &= r.pass;
                std::cerr << crr::type_name(r.type) << ": "
                          << (r.pass ? "pass" : "FAIL") << " (max " << r.p_max;
                if (!r.pass) std::cerr << ", first mismatch at " << r.first_mismatch;
                std::cerr << ")\n";
            }
            const int io = emit(crr::render_checks(reports, p->format),
                                check_opts.out_path);
            if (io != kExitPass) return io;
            return all_pass ? kExitPass : kExitMismatch;
        }
    } catch (const crr::IntegrityError& e) {
        std::cerr << "integrity error: " << e.what() << "\n";
        return kExitIntegrity;
    } catch (const crr::SeriesOverflow& e) {
        std::cerr << "integrity error: " << e.what() << "\n";
        return kExitIntegrity;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitIntegrity;
    }
    std::cerr << "error: no subcommand\n";
    return kExitUsage;
}
