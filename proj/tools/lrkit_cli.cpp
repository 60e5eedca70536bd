// Command line front end: enumeration, coefficients, symmetry application,
// model conversion, verification sweeps and the linear-cost benchmark.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "lrkit/companions.hpp"
#include "lrkit/crystal.hpp"
#include "lrkit/oracle.hpp"
#include "lrkit/plactic.hpp"
#include "lrkit/puzzles.hpp"
#include "lrkit/symmetries.hpp"

using namespace lrkit;

namespace {

constexpr const char* kBanner = "boundary convention: (mu, nu, lam) with shape = complement(lam)/mu";

BoundaryTriple parse_triple(const std::string& mu, const std::string& nu, const std::string& lam, int n,
                            int d) {
    AmbientRectangle box{d, n - d};
    return {parse_partition(mu, box), parse_partition(nu, box), parse_partition(lam, box)};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string triple_string(const BoundaryTriple& b) {
    return "(" + partition_to_string(b.mu) + ", " + partition_to_string(b.nu) + ", " +
           partition_to_string(b.lam) + ")";
}

// Large LR tableau for the benchmark: staircase inner shape with constant
// row length, each cell labeled by its height within its column.
SkewTableau benchmark_tableau(long long size) {
    int d = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(size))));
    int len = static_cast<int>((size + d - 1) / d);
    int width = (d - 1) + len;
    AmbientRectangle box{d, width};
    std::vector<int> outer(d), inner(d);
    for (int i = 1; i <= d; ++i) {
        inner[i - 1] = d - i;
        outer[i - 1] = d - i + len;
    }
    SkewShape shape(Partition(outer, box), Partition(inner, box));
    std::vector<std::vector<int>> rows(d);
    for (int i = 1; i <= d; ++i)
        for (int c = shape.row_begin(i); c <= shape.row_end(i); ++c)
            rows[i - 1].push_back(i - std::max(1, d - c + 1) + 1);
    SkewTableau t(shape, rows, d);
    if (!is_lr_tableau(t)) throw std::logic_error("benchmark tableau is not LR");
    return t;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v[v.size() / 2];
}

double time_op(const std::function<void()>& op, int reps) {
    std::vector<double> times;
    for (int k = 0; k < reps; ++k) {
        auto t0 = std::chrono::steady_clock::now();
        op();
        auto t1 = std::chrono::steady_clock::now();
        times.push_back(std::chrono::duration<double>(t1 - t0).count());
    }
    return median(times);
}

double loglog_slope(const std::vector<long long>& sizes, const std::vector<double>& times) {
    const size_t m = sizes.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < m; ++i) {
        double x = std::log(static_cast<double>(sizes[i]));
        double y = std::log(std::max(times[i], 1e-9));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

int run_bench(const std::vector<long long>& sizes, std::ostream& out) {
    struct OpSpec {
        const char* name;
        std::function<SkewTableau(const SkewTableau&)> fn;
    };
    std::vector<OpSpec> ops{{"lozenge", [](const SkewTableau& t) { return lozenge_via_matrix(t); }},
                            {"spade", [](const SkewTableau& t) { return spade(t); }},
                            {"club", [](const SkewTableau& t) { return club(t); }}};
    out << "size";
    for (auto& op : ops) out << "\t" << op.name;
    out << "\n";
    std::vector<std::vector<double>> times(ops.size());
    for (long long s : sizes) {
        SkewTableau t = benchmark_tableau(s);
        out << s;
        int reps = s >= 300000 ? 3 : (s >= 30000 ? 5 : 9);
        for (size_t k = 0; k < ops.size(); ++k) {
            double secs = time_op([&] { ops[k].fn(t); }, reps);
            times[k].push_back(secs);
            out << "\t" << secs;
        }
        out << "\n";
    }
    bool ok = true;
    for (size_t k = 0; k < ops.size(); ++k) {
        double slope = loglog_slope(sizes, times[k]);
        out << ops[k].name << " log-log slope " << slope << "\n";
        if (slope > 1.15) ok = false;
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"littlewood-richardson symmetry toolkit"};
    app.require_subcommand(1);

    std::string mu, nu, lam, in_path, to, op_name, model = "tableau";
    int n = 0, d = 0;
    std::string sizes_csv = "1000,10000,100000,1000000";

    auto* cmd_enum = app.add_subcommand("enumerate", "list LR tableaux or puzzles for a boundary");
    cmd_enum->add_option("--mu", mu)->required();
    cmd_enum->add_option("--nu", nu)->required();
    cmd_enum->add_option("--lam", lam)->required();
    cmd_enum->add_option("--n", n)->required();
    cmd_enum->add_option("--d", d)->required();
    cmd_enum->add_option("--model", model)->check(CLI::IsMember({"tableau", "puzzle"}));

    auto* cmd_coeff = app.add_subcommand("coeff", "print the LR coefficient of a boundary");
    cmd_coeff->add_option("--mu", mu)->required();
    cmd_coeff->add_option("--nu", nu)->required();
    cmd_coeff->add_option("--lam", lam)->required();
    cmd_coeff->add_option("--n", n)->required();
    cmd_coeff->add_option("--d", d)->required();

    auto* cmd_apply = app.add_subcommand("apply", "apply a symmetry to a tableau");
    cmd_apply->add_option("--op", op_name)->required();
    cmd_apply->add_option("--in", in_path)->required();

    auto* cmd_convert = app.add_subcommand("convert", "convert between models");
    cmd_convert->add_option("--to", to)->required()->check(
        CLI::IsMember({"companion", "hive", "puzzle", "tableau"}));
    cmd_convert->add_option("--in", in_path)->required();

    auto* cmd_verify = app.add_subcommand("verify", "run the symmetry sweep");
    cmd_verify->add_option("--n", n)->required();
    cmd_verify->add_option("--d", d);
    bool json_out = false;
    cmd_verify->add_flag("--json", json_out);

    auto* cmd_bench = app.add_subcommand("bench", "linear-cost benchmark for lozenge/spade/club");
    cmd_bench->add_option("--sizes", sizes_csv);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_enum) {
            BoundaryTriple b = parse_triple(mu, nu, lam, n, d);
            std::cout << kBanner << "\n";
            if (model == "tableau") {
                auto set = enumerate_lr(b);
                std::cout << "count " << set.size() << "\n";
                for (const auto& t : set) std::cout << to_json(t) << "\n";
            } else {
                PuzzleBoundary pb = boundary_from_partitions(b.mu, b.nu, b.lam);
                auto set = enumerate_puzzles(pb);
                std::cout << "count " << set.size() << "\n";
                for (const auto& p : set) std::cout << puzzle_to_text(p) << "\n";
            }
            return 0;
        }
        if (*cmd_coeff) {
            BoundaryTriple b = parse_triple(mu, nu, lam, n, d);
            long long c = lr_coefficient(b);
            if (c != lr_coefficient_via_words(b)) {
                std::cerr << "coefficient routes disagree\n";
                return 1;
            }
            std::cout << c << "\n";
            return 0;
        }
        if (*cmd_apply) {
            GroupElement g = group_element_from_name(op_name);
            SkewTableau t = tableau_from_json(read_file(in_path));
            SkewTableau image = apply(g, t);
            std::cout << kBanner << "\n";
            std::cout << to_json(image) << "\n";
            std::cout << "boundary " << triple_string(boundary_data(image)) << "\n";
            return 0;
        }
        if (*cmd_convert) {
            std::string text = read_file(in_path);
            bool is_json = !text.empty() && text.find_first_not_of(" \t\r\n") != std::string::npos &&
                           text[text.find_first_not_of(" \t\r\n")] == '{';
            if (to == "tableau") {
                SkewTableau t = is_json ? hive_to_tableau(hive_from_json(text))
                                        : tao_to_tableau(puzzle_from_text(text));
                std::cout << kBanner << "\n" << to_json(t) << "\n";
                std::cout << "boundary " << triple_string(boundary_data(t)) << "\n";
                return 0;
            }
            SkewTableau t = tableau_from_json(text);
            if (to == "companion") {
                CompanionPair p = companion_pair(t);
                std::cout << "{\"left\":" << to_json(p.left) << ",\"right\":" << to_json(p.right) << "}\n";
            } else if (to == "hive") {
                std::cout << hive_to_json(hive_from_tableau(t)) << "\n";
            } else {
                std::cout << puzzle_to_text(tao_from_tableau(t));
            }
            return 0;
        }
        if (*cmd_verify) {
            bool ok = true;
            for (int dd = (d ? d : 1); dd <= (d ? d : n - 1); ++dd) {
                SweepReport r = verify_symmetry_sweep(n, dd);
                std::cout << (json_out ? report_to_json(r) : report_to_table(r)) << "\n";
                ok = ok && r.ok();
            }
            return ok ? 0 : 1;
        }
        if (*cmd_bench) {
            std::vector<long long> sizes;
            std::stringstream ss(sizes_csv);
            std::string item;
            while (std::getline(ss, item, ',')) sizes.push_back(std::stoll(item));
            return run_bench(sizes, std::cout);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
