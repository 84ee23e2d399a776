#include "superweyl/liesuper.hpp"

#include <istream>
#include <optional>
#include <tuple>
#include <ostream>
#include <sstream>

namespace sw {

namespace {

CycScalar read_scalar(const std::string& s, int m) { return CycScalar::parse(s, m <= 2 ? 0 : m); }

// Splits "[(a, b), (c, d)]" into the inner "a, b" pieces.
std::vector<std::string> tuples(const std::string& s) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while ((pos = s.find('(', pos)) != std::string::npos) {
        std::size_t end = s.find(')', pos);
        if (end == std::string::npos) throw Error("unterminated tuple in '" + s + "'");
        out.push_back(s.substr(pos + 1, end - pos - 1));
        pos = end + 1;
    }
    return out;
}

SparseVec parse_vec(const std::string& s, int m) {
    SparseVec v;
    for (const auto& t : tuples(s)) {
        std::size_t c = t.find(',');
        if (c == std::string::npos) throw Error("malformed entry '" + t + "'");
        v.set(std::stoi(t.substr(0, c)), read_scalar(t.substr(c + 2), m));
    }
    return v;
}

std::string rest_of(std::istringstream& ls) {
    std::string r;
    std::getline(ls, r);
    std::size_t a = r.find_first_not_of(' ');
    return a == std::string::npos ? std::string() : r.substr(a);
}

}  // namespace

void write_algebra(std::ostream& os, const SuperAlgebra& L) {
    os << "superalgebra " << L.name() << "\n";
    os << "conductor " << L.conductor() << "\n";
    os << "dimension " << L.dim() << "\n";
    os << "basis\n";
    for (const auto& b : L.basis()) os << b.index << " " << (b.parity ? "odd" : "even") << " " << b.label << "\n";
    os << "brackets\n";
    for (int i = 0; i < L.dim(); ++i)
        for (int j = i; j < L.dim(); ++j) {
            const SparseVec& v = L.stored(i, j);
            if (!v.empty()) os << i << " " << j << " " << to_string(v) << "\n";
        }
    if (L.realization()) {
        const auto& R = *L.realization();
        os << "realization " << R.size << "\n";
        os << "rowparity";
        for (int p : R.row_parity) os << " " << p;
        os << "\n";
        if (!R.coord.empty()) {
            os << "coords";
            for (const auto& c : R.coord) os << " " << c;
            os << "\n";
        }
        for (int k = 0; k < L.dim(); ++k) {
            os << "matrix " << k << " [";
            bool first = true;
            for (const auto& [rc, v] : R.mats[k].entries()) {
                if (!first) os << ", ";
                first = false;
                os << "(" << rc.first << ", " << rc.second << ", " << v.str() << ")";
            }
            os << "]\n";
        }
    }
    if (L.embedding()) {
        const auto& E = *L.embedding();
        os << "embedding " << E.parent_dim << " " << E.parent << "\n";
        for (std::size_t k = 0; k < E.images.size(); ++k) os << "image " << k << " " << to_string(E.images[k]) << "\n";
    }
    os << "end\n";
}

SuperAlgebra read_algebra(std::istream& is) {
    std::string line, name;
    int m = 1, n = -1;
    std::vector<BasisElement> basis;
    std::vector<std::tuple<int, int, SparseVec>> brackets;
    std::optional<Realization> real;
    std::optional<Embedding> emb;
    enum { Header, Basis, Brackets, Tail } state = Header;
    bool ended = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "end") {
            ended = true;
            break;
        }
        if (key == "superalgebra") {
            name = rest_of(ls);
        } else if (key == "conductor") {
            ls >> m;
        } else if (key == "dimension") {
            ls >> n;
        } else if (key == "basis") {
            state = Basis;
        } else if (key == "brackets") {
            state = Brackets;
        } else if (key == "realization") {
            state = Tail;
            real.emplace();
            ls >> real->size;
        } else if (key == "rowparity") {
            int p;
            while (ls >> p) real->row_parity.push_back(p);
        } else if (key == "coords") {
            std::string c;
            while (ls >> c) real->coord.push_back(c);
        } else if (key == "matrix") {
            int k;
            ls >> k;
            SparseMatrix M(real->size, real->size);
            for (const auto& t : tuples(rest_of(ls))) {
                std::size_t c1 = t.find(',');
                std::size_t c2 = t.find(',', c1 + 1);
                M.set(std::stoi(t.substr(0, c1)), std::stoi(t.substr(c1 + 2, c2 - c1 - 2)),
                      read_scalar(t.substr(c2 + 2), m));
            }
            if (static_cast<int>(real->mats.size()) != k) throw Error("realization matrices out of order");
            real->mats.push_back(M);
        } else if (key == "embedding") {
            state = Tail;
            emb.emplace();
            ls >> emb->parent_dim;
            emb->parent = rest_of(ls);
        } else if (key == "image") {
            int k;
            ls >> k;
            emb->images.push_back(parse_vec(rest_of(ls), m));
        } else if (state == Basis) {
            BasisElement b;
            b.index = std::stoi(key);
            std::string par;
            ls >> par >> b.label;
            if (par != "even" && par != "odd") throw Error("bad parity '" + par + "'");
            b.parity = par == "odd";
            basis.push_back(b);
        } else if (state == Brackets) {
            int i = std::stoi(key), j;
            ls >> j;
            brackets.emplace_back(i, j, parse_vec(rest_of(ls), m));
        } else {
            throw Error("unrecognized line in algebra file: '" + line + "'");
        }
    }
    if (!ended) throw Error("algebra file truncated (missing 'end')");
    if (n != static_cast<int>(basis.size())) throw Error("dimension does not match basis table");
    SuperAlgebra L(name, m, basis);
    for (const auto& [i, j, v] : brackets) {
        if (i > j) throw Error("bracket rows must have i <= j");
        L.set_bracket(i, j, v);
    }
    if (real) L.set_realization(*real);
    if (emb) L.set_embedding(*emb);
    return L;
}

std::string algebra_to_string(const SuperAlgebra& L) {
    std::ostringstream os;
    write_algebra(os, L);
    return os.str();
}

SuperAlgebra algebra_from_string(const std::string& s) {
    std::istringstream is(s);
    return read_algebra(is);
}

}  // namespace sw
