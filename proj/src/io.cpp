#include "ncfusion/io.hpp"

#include "ncfusion/errors.hpp"

#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

namespace ncfusion {

namespace {

Json word_to_json(const Group &g, const Word &w) {
    Json arr = Json::array();
    for (const auto &x : w)
        arr.push_back(g.name(x));
    return arr;
}

Word word_from_json(const Group &g, const Json &j) {
    Word out;
    for (const auto &x : j)
        out.push_back(g.parse_element(x.get<std::string>()));
    return out;
}

template <class F>
auto guarded(const std::string &what, F &&f) {
    try {
        return f();
    } catch (const nlohmann::json::exception &ex) {
        throw ParseError(what + ": " + ex.what());
    }
}

} // namespace

Json partition_to_json(const Partition &p) {
    Json blocks = Json::array();
    for (const auto &b : p.blocks()) {
        Json pts = Json::array();
        for (const auto &pt : b)
            pts.push_back(to_string(pt));
        blocks.push_back(std::move(pts));
    }
    return {{"upper", p.upper()}, {"lower", p.lower()}, {"blocks", std::move(blocks)}};
}

Partition partition_from_json(const Json &j) {
    return guarded("partition JSON", [&] {
        std::vector<std::vector<PointRef>> blocks;
        for (const auto &b : j.at("blocks")) {
            std::vector<PointRef> pts;
            for (const auto &tok : b)
                pts.push_back(parse_point(tok.get<std::string>()));
            blocks.push_back(std::move(pts));
        }
        return Partition::from_blocks(j.at("upper").get<int>(), j.at("lower").get<int>(), blocks);
    });
}

Json decorated_to_json(const Group &g, const DecoratedPartition &d) {
    Json j = partition_to_json(d.partition);
    j["upper_labels"] = word_to_json(g, d.upper_labels);
    j["lower_labels"] = word_to_json(g, d.lower_labels);
    return j;
}

DecoratedPartition decorated_from_json(const Group &g, const Json &j) {
    return guarded("decorated partition JSON", [&] {
        DecoratedPartition d{partition_from_json(j), word_from_json(g, j.at("upper_labels")),
                             word_from_json(g, j.at("lower_labels"))};
        if (d.upper_labels.size() != static_cast<std::size_t>(d.partition.upper()) ||
            d.lower_labels.size() != static_cast<std::size_t>(d.partition.lower()))
            throw ShapeError("label counts do not match the partition");
        return d;
    });
}

Json combination_to_json(const Group &g, const RepCombination &c) {
    Json arr = Json::array();
    for (const auto &[w, m] : c.terms())
        arr.push_back({{"word", word_to_json(g, w)}, {"mult", m}});
    return arr;
}

RepCombination combination_from_json(const Group &g, const Json &j) {
    return guarded("combination JSON", [&] {
        RepCombination c;
        for (const auto &term : j) {
            const auto m = term.at("mult").get<std::uint64_t>();
            if (m == 0)
                throw ValidationError("multiplicities must be positive");
            c.add(word_from_json(g, term.at("word")), m);
        }
        return c;
    });
}

Json free_combination_to_json(const RingList &rings, const FreeCombination &c) {
    Json arr = Json::array();
    for (const auto &[w, m] : c.terms()) {
        Json letters = Json::array();
        for (const auto &letter : w) {
            Json label = Json::array();
            const auto text = rings[letter.factor]->format(letter.label);
            std::stringstream ss(text);
            std::string tok;
            while (std::getline(ss, tok, ','))
                label.push_back(tok);
            letters.push_back({{"factor", letter.factor + 1}, {"label", std::move(label)}});
        }
        arr.push_back({{"word", std::move(letters)}, {"mult", m}});
    }
    return arr;
}

Json tensor_map_to_json(const MultiMatrixAlgebra &a, const TensorMap &t) {
    Json data = Json::array();
    for (Eigen::Index r = 0; r < t.matrix.rows(); ++r)
        for (Eigen::Index c = 0; c < t.matrix.cols(); ++c)
            data.push_back(t.matrix(r, c));
    Json legend = Json::array();
    for (const auto &x : a.basis())
        legend.push_back({x.block, x.row, x.col});
    return {{"rows", t.matrix.rows()},
            {"cols", t.matrix.cols()},
            {"data", std::move(data)},
            {"legend", std::move(legend)}};
}

std::string tensor_map_to_csv(const TensorMap &t) {
    std::ostringstream os;
    os << std::setprecision(std::numeric_limits<double>::max_digits10);
    for (Eigen::Index r = 0; r < t.matrix.rows(); ++r) {
        for (Eigen::Index c = 0; c < t.matrix.cols(); ++c) {
            if (c)
                os << ',';
            os << t.matrix(r, c);
        }
        os << '\n';
    }
    return os.str();
}

std::string basis_legend_csv(const MultiMatrixAlgebra &a) {
    std::ostringstream os;
    for (const auto &x : a.basis())
        os << x.block << ',' << x.row << ',' << x.col << '\n';
    return os.str();
}

Json parse_json_text(const std::string &text, const std::string &what) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception &ex) {
        throw ParseError(what + ": " + ex.what());
    }
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw FileError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace ncfusion
