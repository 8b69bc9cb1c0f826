#include "ncfusion/cli.hpp"

#include "ncfusion/algebra.hpp"
#include "ncfusion/decorated.hpp"
#include "ncfusion/errors.hpp"
#include "ncfusion/fusion.hpp"
#include "ncfusion/io.hpp"
#include "ncfusion/partition.hpp"
#include "ncfusion/tensor_map.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>

namespace ncfusion::cli {

namespace {

struct Options {
    int upper = 0;
    int lower = 0;
    std::string p_path, q_path, partition_path, algebra_path, legend_path;
    std::string group = "cyclic:2";
    std::string x, y, word, dims;
    int n = 4;
    double tolerance = kDefaultTolerance;
    int max_points = kDefaultMaxPoints;
    bool count_only = false;
    bool strict = false;
    std::string format = "text";
};

std::string text_partition(const Partition &p) {
    std::string out = "NC(" + std::to_string(p.upper()) + "," + std::to_string(p.lower()) + ")";
    for (const auto &b : p.blocks()) {
        out += " {";
        for (std::size_t i = 0; i < b.size(); ++i)
            out += (i ? "," : "") + to_string(b[i]);
        out += "}";
    }
    return out;
}

std::string text_word(const Group &g, const Word &w) { return "(" + format_word(g, w) + ")"; }

std::string big(const BigInt &v) { return v.str(); }

Json big_json(const BigInt &v) {
    if (v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

class Runner {
public:
    Runner(Options &o, std::ostream &out) : o_(o), out_(out) {}

    bool json() const { return o_.format == "json"; }

    Partition load_partition(const std::string &path) const {
        return partition_from_json(parse_json_text(read_text_file(path), path));
    }
    MultiMatrixAlgebra load_algebra() const {
        if (o_.algebra_path.empty())
            throw ValidationError("--algebra is required");
        const auto j = parse_json_text(read_text_file(o_.algebra_path), o_.algebra_path);
        std::vector<MatrixBlock> blocks;
        try {
            for (const auto &b : j.at("blocks"))
                blocks.push_back({b.at("size").get<int>(), b.at("q").get<std::vector<double>>()});
        } catch (const nlohmann::json::exception &ex) {
            throw ParseError(o_.algebra_path + ": " + ex.what());
        }
        return MultiMatrixAlgebra(std::move(blocks), o_.tolerance);
    }
    Group load_group() const { return Group::parse_spec(o_.group); }

    void emit(const Json &j) const { out_ << j.dump(2) << '\n'; }

    void partitions_enumerate() const {
        if (o_.count_only) {
            std::uint64_t count = 0;
            for_each_partition(
                o_.upper, o_.lower, [&](const Partition &) { ++count; }, o_.max_points);
            if (json())
                emit({{"count", count}});
            else
                out_ << count << '\n';
            return;
        }
        Json arr = Json::array();
        for_each_partition(
            o_.upper, o_.lower,
            [&](const Partition &p) {
                if (json())
                    arr.push_back(partition_to_json(p));
                else
                    out_ << text_partition(p) << '\n';
            },
            o_.max_points);
        if (json())
            emit(arr);
    }

    void partitions_compose() const {
        const auto p = load_partition(o_.p_path);
        const auto q = load_partition(o_.q_path);
        const auto c = compose(p, q);
        if (json()) {
            emit({{"result", partition_to_json(c.result)},
                  {"b_p", p.block_count()},
                  {"b_q", q.block_count()},
                  {"b_qp", c.result.block_count()},
                  {"central_blocks", c.central_blocks},
                  {"cycles", c.cycles}});
            return;
        }
        out_ << "qp = " << text_partition(c.result) << '\n'
             << "b(p) = " << p.block_count() << ", b(q) = " << q.block_count()
             << ", b(qp) = " << c.result.block_count() << '\n'
             << "cb(p,q) = " << c.central_blocks << ", cy(p,q) = " << c.cycles << '\n';
    }

    void partitions_unary(const Partition &r) const {
        if (json())
            emit(partition_to_json(r));
        else
            out_ << text_partition(r) << '\n';
    }

    void tmap_build() const {
        const auto a = load_algebra();
        const auto p = load_partition(o_.partition_path);
        const auto t = build_map(a, p);
        if (!o_.legend_path.empty()) {
            std::ofstream legend(o_.legend_path);
            if (!legend)
                throw FileError("cannot write '" + o_.legend_path + "'");
            legend << basis_legend_csv(a);
        }
        if (o_.format == "csv") {
            out_ << tensor_map_to_csv(t);
        } else if (json()) {
            emit(tensor_map_to_json(a, t));
        } else {
            out_ << "T_p: B^" << t.domain_power << " -> B^" << t.codomain_power << " ("
                 << t.matrix.rows() << " x " << t.matrix.cols() << ")\n";
            out_ << "basis:";
            for (const auto &x : a.basis())
                out_ << " (" << x.block << "," << x.row << "," << x.col << ")";
            out_ << '\n' << tensor_map_to_csv(t);
        }
    }

    void tmap_verify() const {
        const auto a = load_algebra();
        const auto p = load_partition(o_.p_path);
        const auto q = load_partition(o_.q_path);
        const auto c = compose(p, q);
        const double dev = verify_composition(a, p, q);
        const bool ok = dev <= o_.tolerance;
        if (json()) {
            emit({{"deviation", dev},
                  {"cycles", c.cycles},
                  {"delta", *a.delta_form()},
                  {"within_tolerance", ok}});
            return;
        }
        out_ << std::setprecision(6) << "max |T_qp - delta^-cy T_q T_p| = " << dev << " (cy = "
             << c.cycles << ", delta = " << *a.delta_form() << ") "
             << (ok ? "ok" : "EXCEEDS TOLERANCE") << '\n';
    }

    void tmap_gram_rank() const {
        const auto a = load_algebra();
        std::vector<TensorMap> maps;
        for_each_partition(
            o_.upper, o_.lower, [&](const Partition &p) { maps.push_back(build_map(a, p)); },
            o_.max_points);
        const int rank = gram_rank(maps);
        if (json())
            emit({{"rank", rank}, {"count", maps.size()}});
        else
            out_ << "rank " << rank << " of " << maps.size() << " maps\n";
    }

    void algebra_check() const {
        const auto a = load_algebra();
        const auto delta = a.delta_form();
        const Json j = {{"is_delta_form", delta.has_value()},
                        {"delta", delta ? Json(*delta) : Json(nullptr)},
                        {"factors", decompose_by_delta(a).size()}};
        if (json())
            emit(j);
        else
            out_ << j.dump() << '\n';
    }

    void algebra_decompose() const {
        const auto a = load_algebra();
        const auto factors = decompose_by_delta(a);
        Json arr = Json::array();
        for (const auto &f : factors) {
            std::vector<int> ids;
            for (int id : f.block_ids)
                ids.push_back(id + 1);
            if (json()) {
                arr.push_back({{"blocks", ids},
                               {"delta", f.delta},
                               {"mass", f.mass},
                               {"dim", f.algebra.dim()},
                               {"algebra", Json::parse(f.algebra.to_json())}});
            } else {
                out_ << "blocks";
                for (int id : ids)
                    out_ << ' ' << id;
                out_ << ": delta = " << f.delta << ", mass = " << f.mass
                     << ", dim = " << f.algebra.dim() << '\n';
            }
        }
        if (json())
            emit({{"factors", arr}});
    }

    void decorated_count() const {
        const auto g = load_group();
        const auto up = parse_word(g, o_.x);
        const auto down = parse_word(g, o_.y);
        if (!o_.strict) {
            const auto count = decorated_hom_dimension(g, up, down, o_.max_points);
            if (json())
                emit({{"count", count}});
            else
                out_ << count << '\n';
            return;
        }
        const auto check = cross_check_with_fusion(g, up, down, o_.max_points);
        if (json()) {
            emit({{"count", check.diagram_count},
                  {"fusion_count", check.fusion_count},
                  {"agrees", check.agrees()}});
            return;
        }
        out_ << check.diagram_count << '\n';
        if (!check.agrees())
            out_ << "discrepancy: fusion rules give " << check.fusion_count << '\n';
    }

    void decorated_list() const {
        const auto g = load_group();
        const auto up = parse_word(g, o_.x);
        const auto down = parse_word(g, o_.y);
        const auto list = enumerate_decorated(g, up, down, o_.max_points);
        if (json()) {
            Json arr = Json::array();
            for (const auto &d : list)
                arr.push_back(decorated_to_json(g, d));
            emit(arr);
            return;
        }
        for (const auto &d : list)
            out_ << text_partition(d.partition) << '\n';
    }

    void emit_combination(const Group &g, const RepCombination &c) const {
        if (json()) {
            emit(combination_to_json(g, c));
            return;
        }
        for (const auto &[w, m] : c.terms())
            out_ << m << ' ' << text_word(g, w) << '\n';
    }

    void fusion_product_cmd() const {
        const auto g = load_group();
        emit_combination(g, fusion_product(g, parse_word(g, o_.x), parse_word(g, o_.y)));
    }

    void fusion_dim() const {
        const auto g = load_group();
        const auto d = dimension(g, parse_word(g, o_.word), o_.n);
        if (json())
            emit({{"dimension", big_json(d)}});
        else
            out_ << big(d) << '\n';
    }

    void fusion_trivial_mult() const {
        const auto g = load_group();
        const int m = multiplicity_of_trivial(g, parse_word(g, o_.x), parse_word(g, o_.y));
        if (json())
            emit({{"multiplicity", m}});
        else
            out_ << m << '\n';
    }

    void fusion_a_trivial_mult() const {
        const auto g = load_group();
        const auto m = a_rep_trivial_multiplicity(g, parse_word(g, o_.word));
        if (json())
            emit({{"multiplicity", m}});
        else
            out_ << m << '\n';
    }

    void fusion_freeprod() const {
        const auto g = load_group();
        RingList rings;
        if (!o_.algebra_path.empty()) {
            rings = factor_rings(load_algebra(), g);
        } else {
            if (o_.dims.empty())
                throw ValidationError("freeprod needs --algebra or --dims");
            std::stringstream ss(o_.dims);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                int n = 0;
                try {
                    n = std::stoi(tok);
                } catch (const std::exception &) {
                    throw ParseError("bad dimension '" + tok + "' in --dims");
                }
                rings.push_back(std::make_shared<WreathWordRing>(g, n));
            }
        }
        const auto w1 = parse_alternating(rings, o_.x);
        const auto w2 = parse_alternating(rings, o_.y);
        const auto c = free_product_fusion(rings, w1, w2);
        if (json()) {
            emit(free_combination_to_json(rings, c));
            return;
        }
        for (const auto &[w, m] : c.terms())
            out_ << m << " [" << format_alternating(rings, w) << "]\n";
    }

private:
    Options &o_;
    std::ostream &out_;
};

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Options o;
    Runner runner(o, out);
    std::function<void()> action;

    CLI::App app{"Noncrossing partitions, intertwiner maps and free wreath product fusion rules",
                 "ncfusion"};
    app.require_subcommand(1);

    auto add_format = [&](CLI::App *cmd, std::vector<std::string> allowed) {
        cmd->add_option("--format", o.format, "Output format")
            ->check(CLI::IsMember(std::move(allowed)));
    };
    auto add_bounds = [&](CLI::App *cmd) {
        cmd->add_option("--max-points", o.max_points, "Enumeration bound on k+l");
    };
    auto add_algebra = [&](CLI::App *cmd) {
        cmd->add_option("--algebra,--spec", o.algebra_path, "Algebra JSON file");
        cmd->add_option("--tolerance", o.tolerance, "Numerical tolerance");
    };

    // partitions
    auto *partitions = app.add_subcommand("partitions", "Noncrossing partitions NC(k,l)");
    partitions->require_subcommand(1);
    {
        auto *c = partitions->add_subcommand("enumerate", "List NC(k,l)");
        c->add_option("--upper", o.upper)->required();
        c->add_option("--lower", o.lower)->required();
        c->add_flag("--count-only", o.count_only);
        add_bounds(c);
        add_format(c, {"text", "json"});
        c->callback([&] { action = [&] { runner.partitions_enumerate(); }; });
    }
    {
        auto *c = partitions->add_subcommand("compose", "Vertical composition qp");
        c->add_option("--p", o.p_path)->required();
        c->add_option("--q", o.q_path)->required();
        add_format(c, {"text", "json"});
        c->callback([&] { action = [&] { runner.partitions_compose(); }; });
    }
    {
        auto *c = partitions->add_subcommand("adjoint", "Reflected diagram");
        c->add_option("--partition", o.partition_path)->required();
        add_format(c, {"text", "json"});
        c->callback([&] {
            action = [&] {
                runner.partitions_unary(adjoint(runner.load_partition(o.partition_path)));
            };
        });
    }
    {
        auto *c = partitions->add_subcommand("tensor", "Horizontal concatenation p (x) q");
        c->add_option("--p", o.p_path)->required();
        c->add_option("--q", o.q_path)->required();
        add_format(c, {"text", "json"});
        c->callback([&] {
            action = [&] {
                runner.partitions_unary(
                    tensor(runner.load_partition(o.p_path), runner.load_partition(o.q_path)));
            };
        });
    }

    // tmap
    auto *tmap = app.add_subcommand("tmap", "Linear maps T_p over a multimatrix algebra");
    tmap->require_subcommand(1);
    {
        auto *c = tmap->add_subcommand("build", "Matrix of T_p");
        add_algebra(c);
        c->add_option("--partition", o.partition_path)->required();
        c->add_option("--legend", o.legend_path, "Write the basis legend CSV here");
        add_format(c, {"text", "json", "csv"});
        c->callback([&] { action = [&] { runner.tmap_build(); }; });
    }
    {
        auto *c = tmap->add_subcommand("verify", "Check T_qp = delta^-cy T_q T_p");
        add_algebra(c);
        c->add_option("--p", o.p_path)->required();
        c->add_option("--q", o.q_path)->required();
        add_format(c, {"text", "json"});
        c->callback([&] { action = [&] { runner.tmap_verify(); }; });
    }
    {
        auto *c = tmap->add_subcommand("gram-rank", "Rank of {T_p : p in NC(k,l)}");
        add_algebra(c);
        c->add_option("--upper", o.upper)->required();
        c->add_option("--lower", o.lower)->required();
        add_bounds(c);
        add_format(c, {"text", "json"});
        c->callback([&] { action = [&] { runner.tmap_gram_rank(); }; });
    }

    // algebra
    auto *algebra = app.add_subcommand("algebra", "Multimatrix algebra with a state");
    algebra->require_subcommand(1);
    {
        auto *c = algebra->add_subcommand("check", "Delta-form test");
        add_algebra(c);
        add_format(c, {"text", "json"});
        c->callback([&] { action = [&] { runner.algebra_check(); }; });
    }
    {
        auto *c = algebra->add_subcommand("decompose", "Delta-homogeneous factors");
        add_algebra(c);
        add_format(c, {"text", "json"});
        c->callback([&] { action = [&] { runner.algebra_decompose(); }; });
    }

    // decorated
    auto *decorated = app.add_subcommand("decorated", "Group-decorated noncrossing partitions");
    decorated->require_subcommand(1);
    for (const char *name : {"count", "list"}) {
        auto *c = decorated->add_subcommand(name, std::string(name) + " admissible diagrams");
        c->add_option("--group", o.group);
        c->add_option("--x", o.x, "Upper labels");
        c->add_option("--y", o.y, "Lower labels");
        add_bounds(c);
        add_format(c, {"text", "json"});
        if (std::string(name) == "count") {
            c->add_flag("--strict", o.strict, "Cross-check against the fusion rules");
            c->callback([&] { action = [&] { runner.decorated_count(); }; });
        } else {
            c->callback([&] { action = [&] { runner.decorated_list(); }; });
        }
    }

    // fusion
    auto *fusion = app.add_subcommand("fusion", "Fusion rules of the free wreath product");
    fusion->require_subcommand(1);
    {
        auto *c = fusion->add_subcommand("product", "omega(x) (x) omega(y)");
        c->add_option("--group", o.group);
        c->add_option("--x", o.x);
        c->add_option("--y", o.y);
        add_format(c, {"text", "json"});
        c->callback([&] { action = [&] { runner.fusion_product_cmd(); }; });
    }
    {
        auto *c = fusion->add_subcommand("dim", "dim omega(word)");
        c->add_option("--group", o.group);
        c->add_option("--word", o.word);
        c->add_option("--n", o.n, "dim B");
        add_format(c, {"text", "json"});
        c->callback([&] { action = [&] { runner.fusion_dim(); }; });
    }
    {
        auto *c = fusion->add_subcommand("trivial-mult", "Multiplicity of 1 in x (x) y");
        c->add_option("--group", o.group);
        c->add_option("--x", o.x);
        c->add_option("--y", o.y);
        add_format(c, {"text", "json"});
        c->callback([&] { action = [&] { runner.fusion_trivial_mult(); }; });
    }
    {
        auto *c = fusion->add_subcommand("a-trivial-mult", "Multiplicity of 1 in a(g1)..a(gk)");
        c->add_option("--group", o.group);
        c->add_option("--word", o.word);
        add_format(c, {"text", "json"});
        c->callback([&] { action = [&] { runner.fusion_a_trivial_mult(); }; });
    }
    {
        auto *c = fusion->add_subcommand("freeprod", "Fusion in a free product of word rings");
        c->add_option("--group", o.group);
        c->add_option("--x", o.x, "Alternating word, e.g. \"1:s;2:e\"");
        c->add_option("--y", o.y);
        c->add_option("--dims", o.dims, "Comma-separated factor dimensions");
        add_algebra(c);
        add_format(c, {"text", "json"});
        c->callback([&] { action = [&] { runner.fusion_freeprod(); }; });
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError &ex) {
        err << "usage error: " << ex.what() << '\n';
        return kUsage;
    }

    try {
        if (action)
            action();
        return kOk;
    } catch (const SizeLimitError &ex) {
        err << "bound error: " << ex.what() << '\n';
        return kBound;
    } catch (const FileError &ex) {
        err << "file error: " << ex.what() << '\n';
    } catch (const ParseError &ex) {
        err << "parse error: " << ex.what() << '\n';
    } catch (const ShapeError &ex) {
        err << "shape error: " << ex.what() << '\n';
    } catch (const PreconditionError &ex) {
        err << "precondition error: " << ex.what() << '\n';
    } catch (const DomainError &ex) {
        err << "domain error: " << ex.what() << '\n';
    } catch (const ValidationError &ex) {
        err << "validation error: " << ex.what() << '\n';
    }
    return kUsage;
}

} // namespace ncfusion::cli
