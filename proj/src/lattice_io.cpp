#include "hilb2/lattice_io.hpp"

#include <fstream>
#include <sstream>

namespace hilb2 {

namespace {

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Int parse_int(const std::string& tok) {
    try {
        return Int(tok);
    } catch (const std::invalid_argument&) {
        throw ParseError("lattice file: bad integer '" + tok + "'");
    }
}

// Tokens of non-comment content, in order.
std::vector<std::string> tokenize(std::istream& in) {
    std::vector<std::string> toks;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string t;
        while (ls >> t) toks.push_back(t);
    }
    return toks;
}

}  // namespace

PicLattice parse_lattice(std::istream& in) {
    auto toks = tokenize(in);
    size_t i = 0;
    auto next = [&]() -> const std::string& {
        if (i >= toks.size()) throw ParseError("lattice file: unexpected end of input");
        return toks[i++];
    };

    if (toks.empty()) throw ParseError("lattice file: empty input");
    if (next() != "rank") throw ParseError("lattice file: expected 'rank'");
    Int rank_val = parse_int(next());
    if (rank_val < 1 || rank_val > 64) throw ParseError("lattice file: unreasonable rank");
    int rank = static_cast<int>(rank_val.get_si());

    if (next() != "gram") throw ParseError("lattice file: expected 'gram'");
    std::vector<Int> gram;
    gram.reserve(static_cast<size_t>(rank) * rank);
    for (int k = 0; k < rank * rank; ++k) gram.push_back(parse_int(next()));

    if (next() != "ample") throw ParseError("lattice file: expected 'ample'");
    SurfaceClass ample{std::vector<Int>()};
    for (int k = 0; k < rank; ++k) ample.coords.push_back(parse_int(next()));

    std::vector<std::string> labels;
    if (i < toks.size()) {
        if (next() != "labels") throw ParseError("lattice file: unexpected token '" + toks[i - 1] + "'");
        for (int k = 0; k < rank; ++k) labels.push_back(next());
    }
    if (i != toks.size()) throw ParseError("lattice file: trailing tokens after lattice data");

    return PicLattice(rank, std::move(gram), std::move(ample), std::move(labels));
}

PicLattice parse_lattice_string(const std::string& text) {
    std::istringstream is(text);
    return parse_lattice(is);
}

PicLattice load_lattice_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open lattice file: " + path);
    return parse_lattice(f);
}

std::string serialize_lattice(const PicLattice& lat) {
    std::ostringstream os;
    os << "rank " << lat.rank() << "\n";
    os << "gram\n";
    for (int i = 0; i < lat.rank(); ++i) {
        for (int j = 0; j < lat.rank(); ++j) {
            if (j) os << " ";
            os << lat.gram_at(i, j);
        }
        os << "\n";
    }
    os << "ample";
    for (const auto& c : lat.ample().coords) os << " " << c;
    os << "\n";
    if (!lat.labels().empty()) {
        os << "labels";
        for (const auto& s : lat.labels()) os << " " << s;
        os << "\n";
    }
    return os.str();
}

}  // namespace hilb2
