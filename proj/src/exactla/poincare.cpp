#include "ecom/exactla/poincare.hpp"

#include <cctype>
#include <sstream>

#include "ecom/error.hpp"

namespace ecom::exactla {

PoincareSeries::PoincareSeries(std::vector<Coeff> coefficients) : c_(std::move(coefficients)) { trim(); }

PoincareSeries PoincareSeries::monomial(std::size_t degree, Coeff c) {
    std::vector<Coeff> v(degree + 1, 0);
    v[degree] = c;
    return PoincareSeries(std::move(v));
}

void PoincareSeries::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PoincareSeries::Coeff PoincareSeries::total() const {
    Coeff s = 0;
    for (auto x : c_) s += x;
    return s;
}

long long PoincareSeries::euler_characteristic() const {
    long long s = 0;
    for (std::size_t d = 0; d < c_.size(); ++d) s += (d % 2 ? -1LL : 1LL) * static_cast<long long>(c_[d]);
    return s;
}

bool PoincareSeries::is_palindromic() const {
    for (std::size_t i = 0, j = c_.size(); i < j; ++i) {
        --j;
        if (c_[i] != c_[j]) return false;
    }
    return true;
}

PoincareSeries PoincareSeries::substitute_power(std::size_t k) const {
    if (c_.empty()) return {};
    std::vector<Coeff> v((c_.size() - 1) * k + 1, 0);
    for (std::size_t d = 0; d < c_.size(); ++d) v[d * k] = c_[d];
    return PoincareSeries(std::move(v));
}

PoincareSeries PoincareSeries::truncate(std::size_t max_degree) const {
    if (c_.size() <= max_degree + 1) return *this;
    return PoincareSeries(std::vector<Coeff>(c_.begin(), c_.begin() + static_cast<long>(max_degree + 1)));
}

PoincareSeries PoincareSeries::operator+(const PoincareSeries& o) const {
    std::vector<Coeff> v(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = (*this)[i] + o[i];
    return PoincareSeries(std::move(v));
}

PoincareSeries PoincareSeries::operator*(const PoincareSeries& o) const {
    if (c_.empty() || o.c_.empty()) return {};
    std::vector<Coeff> v(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return PoincareSeries(std::move(v));
}

std::string PoincareSeries::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t d = 0; d < c_.size(); ++d) {
        if (c_[d] == 0) continue;
        if (!first) os << '+';
        first = false;
        if (d == 0) {
            os << c_[d];
            continue;
        }
        if (c_[d] != 1) os << c_[d];
        os << 't';
        if (d > 1) os << '^' << d;
    }
    return os.str();
}

PoincareSeries parse_poincare(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty() || s == "0") return {};
    std::vector<PoincareSeries::Coeff> v;
    std::stringstream ss(s);
    std::string term;
    while (std::getline(ss, term, '+')) {
        if (term.empty()) throw ParseError("empty term in series '" + text + "'");
        std::size_t pos = 0;
        PoincareSeries::Coeff coeff = 1;
        bool has_coeff = false;
        while (pos < term.size() && std::isdigit(static_cast<unsigned char>(term[pos]))) ++pos;
        if (pos > 0) {
            coeff = std::stoull(term.substr(0, pos));
            has_coeff = true;
        }
        std::size_t deg = 0;
        if (pos < term.size()) {
            if (term[pos] == '*') ++pos;
            if (pos >= term.size() || term[pos] != 't') throw ParseError("bad term '" + term + "'");
            ++pos;
            deg = 1;
            if (pos < term.size()) {
                if (term[pos] != '^') throw ParseError("bad term '" + term + "'");
                deg = std::stoul(term.substr(pos + 1));
            }
        } else if (!has_coeff) {
            throw ParseError("bad term '" + term + "'");
        }
        if (v.size() <= deg) v.resize(deg + 1, 0);
        v[deg] += coeff;
    }
    return PoincareSeries(std::move(v));
}

PoincareSeries mod_p_series(const std::vector<AbelianGroup>& graded, unsigned long p) {
    std::vector<PoincareSeries::Coeff> v(graded.size(), 0);
    for (std::size_t d = 0; d < graded.size(); ++d) {
        v[d] = graded[d].free_rank() + graded[d].p_torsion_count(p);
        if (d + 1 < graded.size()) v[d] += graded[d + 1].p_torsion_count(p);
    }
    return PoincareSeries(std::move(v));
}

PoincareSeries rational_series(const std::vector<AbelianGroup>& graded) {
    std::vector<PoincareSeries::Coeff> v(graded.size(), 0);
    for (std::size_t d = 0; d < graded.size(); ++d) v[d] = graded[d].free_rank();
    return PoincareSeries(std::move(v));
}

}  // namespace ecom::exactla
