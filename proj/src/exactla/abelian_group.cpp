#include "ecom/exactla/abelian_group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace ecom::exactla {
namespace {

// p-adic valuation of n (n > 0).
unsigned valuation(Integer n, unsigned long p) {
    unsigned v = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        ++v;
    }
    return v;
}

// Prime factorization by trial division; torsion orders here are tiny.
std::map<Integer, unsigned> factor(Integer n) {
    std::map<Integer, unsigned> out;
    for (Integer d = 2; d * d <= n; ++d) {
        while (n % d == 0) {
            ++out[d];
            n /= d;
        }
    }
    if (n > 1) ++out[n];
    return out;
}

}  // namespace

AbelianGroup::AbelianGroup(std::size_t free_rank, const std::vector<Integer>& cyclic_orders)
    : free_rank_(free_rank) {
    // Primary decomposition, then recombine the largest powers of each prime.
    std::map<Integer, std::vector<unsigned>> powers;
    for (Integer n : cyclic_orders) {
        n = abs(n);
        if (n == 0) {
            ++free_rank_;
            continue;
        }
        for (const auto& [p, e] : factor(n)) powers[p].push_back(e);
    }
    std::size_t len = 0;
    for (auto& [p, es] : powers) {
        std::sort(es.begin(), es.end(), std::greater<>());
        len = std::max(len, es.size());
    }
    std::vector<Integer> t(len, Integer(1));
    for (const auto& [p, es] : powers)
        for (std::size_t i = 0; i < es.size(); ++i) {
            Integer pe;
            mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), es[i]);
            t[i] *= pe;
        }
    std::reverse(t.begin(), t.end());
    torsion_ = std::move(t);
}

std::size_t AbelianGroup::p_torsion_count(unsigned long p) const {
    std::size_t n = 0;
    for (const auto& t : torsion_)
        if (mpz_divisible_ui_p(t.get_mpz_t(), p)) ++n;
    return n;
}

AbelianGroup AbelianGroup::operator+(const AbelianGroup& other) const {
    std::vector<Integer> all = torsion_;
    all.insert(all.end(), other.torsion_.begin(), other.torsion_.end());
    return AbelianGroup(free_rank_ + other.free_rank_, all);
}

std::string AbelianGroup::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank_ > 0) {
        os << 'Z';
        if (free_rank_ > 1) os << '^' << free_rank_;
        first = false;
    }
    for (const auto& t : torsion_) {
        if (!first) os << " + ";
        os << "Z/" << t.get_str();
        first = false;
    }
    return os.str();
}

AbelianGroup p_primary(const AbelianGroup& g, unsigned long p) {
    std::vector<Integer> parts;
    for (const auto& t : g.torsion()) {
        unsigned v = valuation(t, p);
        if (v == 0) continue;
        Integer pe;
        mpz_ui_pow_ui(pe.get_mpz_t(), p, v);
        parts.push_back(pe);
    }
    return AbelianGroup(g.free_rank(), parts);
}

AbelianGroup parse_abelian_group(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s == "0" || s.empty()) return AbelianGroup::zero();
    std::size_t free = 0;
    std::vector<Integer> tors;
    std::stringstream ss(s);
    std::string term;
    while (std::getline(ss, term, '+')) {
        if (term.empty() || term[0] != 'Z') throw ParseError("bad abelian group term '" + term + "'");
        if (term == "Z") {
            ++free;
        } else if (term[1] == '^') {
            free += std::stoul(term.substr(2));
        } else if (term[1] == '/') {
            Integer n;
            if (n.set_str(term.substr(2), 10) != 0 || n < 2) throw ParseError("bad cyclic order in '" + term + "'");
            tors.push_back(n);
        } else {
            throw ParseError("bad abelian group term '" + term + "'");
        }
    }
    return AbelianGroup(free, tors);
}

}  // namespace ecom::exactla
