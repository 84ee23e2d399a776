#include "superweyl/mapweyl.hpp"

#include <sstream>

namespace sw {

void env_axpy(EnvElement& y, const CycScalar& a, const EnvElement& x) {
    if (a.is_zero()) return;
    for (const auto& [m, c] : x) {
        auto it = y.find(m);
        if (it == y.end()) {
            y.emplace(m, a * c);
        } else {
            it->second += a * c;
            if (it->second.is_zero()) y.erase(it);
        }
    }
}

std::string env_to_string(const EnvElement& e, const std::vector<std::string>& names) {
    if (e.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : e) {
        if (!first) os << " + ";
        first = false;
        bool bare = m.empty();
        if (!c.is_one() || bare) {
            os << "(" << c.str() << ")";
            if (!bare) os << "*";
        }
        for (std::size_t i = 0; i < m.size();) {
            std::size_t j = i;
            while (j < m.size() && m[j] == m[i]) ++j;
            if (i > 0) os << "*";
            const std::string& nm = names[m[i]];
            bool plain = nm.find_first_of(".^*") == std::string::npos;
            if (j - i > 1 && !plain)
                os << "(" << nm << ")";
            else
                os << nm;
            if (j - i > 1) os << "^" << (j - i);
            i = j;
        }
    }
    return os.str();
}

PBWEngine::PBWEngine(const SuperAlgebra& L, std::vector<int> order, int cap)
    : L_(&L), order_(std::move(order)), pos_(L.dim(), -1), cap_(cap) {
    if (static_cast<int>(order_.size()) != L.dim()) throw Error("PBW order must list every basis element once");
    for (int p = 0; p < size(); ++p) {
        int b = order_[p];
        if (b < 0 || b >= L.dim() || pos_[b] != -1) throw Error("PBW order is not a permutation");
        pos_[b] = p;
    }
}

bool PBWEngine::is_normal(const Monomial& m) const {
    for (std::size_t i = 1; i < m.size(); ++i) {
        if (m[i - 1] > m[i]) return false;
        if (m[i - 1] == m[i] && parity_at(m[i]) == 1) return false;
    }
    return true;
}

std::vector<std::string> PBWEngine::names() const {
    std::vector<std::string> out;
    for (int b : order_) out.push_back(L_->label(b));
    return out;
}

EnvElement PBWEngine::from_element(const Element& x) const {
    EnvElement out;
    for (const auto& [i, c] : x.e) out[{pos_[i]}] = c;
    return out;
}

const EnvElement& PBWEngine::left_mul(int p, const Monomial& m) {
    auto key = std::make_pair(p, m);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    if (static_cast<int>(m.size()) + 1 > cap_)
        throw CapExceeded("PBW word of length " + std::to_string(m.size() + 1) + " exceeds cap " +
                          std::to_string(cap_));
    EnvElement out;
    if (m.empty() || p < m[0] || (p == m[0] && parity_at(p) == 0)) {
        Monomial w;
        w.reserve(m.size() + 1);
        w.push_back(p);
        w.insert(w.end(), m.begin(), m.end());
        out.emplace(std::move(w), CycScalar(1));
    } else {
        Monomial rest(m.begin() + 1, m.end());
        int y = m[0];
        const SparseVec& br = L_->bracket_basis(order_[p], order_[y]);
        if (p == y) {
            // x x = [x, x] / 2 for odd x
            for (const auto& [k, c] : br.e) env_axpy(out, c / CycScalar(2), left_mul(pos_[k], rest));
        } else {
            CycScalar sign = (parity_at(p) & parity_at(y)) ? CycScalar(-1) : CycScalar(1);
            EnvElement xm = left_mul(p, rest);
            for (const auto& [mon, c] : xm) env_axpy(out, sign * c, left_mul(y, mon));
            for (const auto& [k, c] : br.e) env_axpy(out, c, left_mul(pos_[k], rest));
        }
    }
    return memo_.emplace(std::move(key), std::move(out)).first->second;
}

EnvElement PBWEngine::left_mul(int p, const EnvElement& e) {
    EnvElement out;
    for (const auto& [m, c] : e) env_axpy(out, c, left_mul(p, m));
    return out;
}

EnvElement PBWEngine::multiply(const EnvElement& a, const EnvElement& b) {
    EnvElement out;
    for (const auto& [m, c] : a) {
        EnvElement v = b;
        for (auto it = m.rbegin(); it != m.rend(); ++it) v = left_mul(*it, v);
        env_axpy(out, c, v);
    }
    return out;
}

EnvElement PBWEngine::normal_form(const std::vector<int>& word) {
    EnvElement v{{Monomial{}, CycScalar(1)}};
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = left_mul(*it, v);
    return v;
}

EnvElement PBWEngine::normal_form_by_inversions(const std::vector<int>& word) const {
    std::map<std::vector<int>, CycScalar> pending{{word, CycScalar(1)}};
    EnvElement out;
    auto add = [](std::map<std::vector<int>, CycScalar>& to, std::vector<int> w, const CycScalar& c) {
        auto [it, fresh] = to.emplace(std::move(w), c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) to.erase(it);
        }
    };
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        std::vector<int> w = std::move(node.key());
        CycScalar c = node.mapped();
        if (static_cast<int>(w.size()) > cap_) throw CapExceeded("word exceeds cap during rewriting");
        std::size_t i = 0;
        for (; i + 1 < w.size(); ++i)
            if (w[i] > w[i + 1] || (w[i] == w[i + 1] && parity_at(w[i]) == 1)) break;
        if (i + 1 >= w.size()) {
            EnvElement one{{w, c}};
            env_axpy(out, CycScalar(1), one);
            continue;
        }
        int a = w[i], b = w[i + 1];
        const SparseVec& br = L_->bracket_basis(order_[a], order_[b]);
        CycScalar half = a == b ? CycScalar(Rat(1, 2)) : CycScalar(1);
        if (a != b) {
            std::vector<int> sw = w;
            std::swap(sw[i], sw[i + 1]);
            add(pending, std::move(sw), (parity_at(a) & parity_at(b)) ? -c : c);
        }
        for (const auto& [k, x] : br.e) {
            std::vector<int> nw(w.begin(), w.begin() + i);
            nw.push_back(pos_[k]);
            nw.insert(nw.end(), w.begin() + i + 2, w.end());
            add(pending, std::move(nw), c * x * half);
        }
    }
    return out;
}

}  // namespace sw
