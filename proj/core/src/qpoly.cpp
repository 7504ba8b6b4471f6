#include "specvar/qpoly.hpp"

#include <nlohmann/json.hpp>

#include <sstream>
#include <utility>

namespace specvar {

QPoly QPoly::term(const Rational& exponent, const Integer& coeff) {
    QPoly p;
    if (coeff != 0) p.terms_.emplace(exponent, coeff);
    return p;
}

QPoly QPoly::from_terms(Terms terms) {
    QPoly p;
    p.terms_ = std::move(terms);
    for (auto it = p.terms_.begin(); it != p.terms_.end();) {
        if (it->second == 0) it = p.terms_.erase(it);
        else ++it;
    }
    return p;
}

Integer QPoly::coefficient(const Rational& exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Integer(0) : it->second;
}

Integer QPoly::mass() const {
    Integer total = 0;
    for (const auto& [e, c] : terms_) total += c;
    return total;
}

Rational QPoly::min_exponent() const {
    if (terms_.empty()) throw DomainError("EmptyPoly", "min_exponent of zero polynomial");
    return terms_.begin()->first;
}

Rational QPoly::max_exponent() const {
    if (terms_.empty()) throw DomainError("EmptyPoly", "max_exponent of zero polynomial");
    return terms_.rbegin()->first;
}

void QPoly::add_term(const Rational& e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

QPoly& QPoly::operator+=(const QPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

QPoly QPoly::operator-() const {
    QPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

QPoly operator*(const QPoly& a, const Integer& c) {
    QPoly r;
    if (c == 0) return r;
    for (const auto& [e, coeff] : a.terms_) r.terms_.emplace(e, coeff * c);
    return r;
}

QPoly QPoly::shifted(const Rational& d) const {
    QPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + d, c);
    return r;
}

QPoly QPoly::derivative() const {
    QPoly r;
    for (const auto& [e, c] : terms_) {
        if (e.is_zero()) continue;
        const Rational ce = e * Rational(c);
        if (!ce.is_integer())
            throw DomainError("NonIntegerCoefficient",
                              "derivative of T^" + e.str() + " has a non-integer coefficient");
        r.add_term(e - 1, ce.numerator());
    }
    return r;
}

Integer QPoly::exponent_lcm() const {
    Integer n = 1;
    for (const auto& [e, c] : terms_) n = lcm(n, e.denominator());
    return n;
}

std::map<Integer, Integer> QPoly::rescaled(const Integer& N) const {
    std::map<Integer, Integer> out;
    for (const auto& [e, c] : terms_) {
        const Rational scaled = e * Rational(N);
        if (!scaled.is_integer())
            throw DomainError("BadRescale", "exponent " + e.str() + " not integral after *" + N.str());
        out.emplace(scaled.numerator(), c);
    }
    return out;
}

QPoly QPoly::from_rescaled(const std::map<Integer, Integer>& terms, const Integer& N) {
    QPoly r;
    for (const auto& [k, c] : terms)
        if (c != 0) r.terms_.emplace(Rational(k, N), c);
    return r;
}

namespace {

// Long division with the remainder kept in a dense coefficient array; used
// whenever the rescaled exponent span is modest (it always is for weight
// systems: at most (number of weights) * lcm of the denominators).
std::map<Integer, Integer> divide_dense(const std::map<Integer, Integer>& num,
                                        const std::map<Integer, Integer>& den, long long lo_num,
                                        long long hi_num, const Integer& n) {
    const long long den_lead = den.rbegin()->first.convert_to<long long>();
    const Integer& den_lc = den.rbegin()->second;
    const long long den_lo = den.begin()->first.convert_to<long long>();
    const long long quot_min = lo_num - den_lo;

    std::vector<Integer> rem(static_cast<std::size_t>(hi_num - lo_num + 1));
    for (const auto& [e, c] : num) rem[e.convert_to<long long>() - lo_num] = c;
    std::vector<std::pair<long long, Integer>> steps(den.size());
    std::size_t k = 0;
    for (const auto& [e, c] : den) steps[k++] = {e.convert_to<long long>(), c};

    std::map<Integer, Integer> quot;
    long long top = hi_num;
    while (true) {
        while (top >= lo_num && rem[top - lo_num] == 0) --top;
        if (top < lo_num) break;
        const long long qe = top - den_lead;
        if (qe < quot_min)
            throw NotDivisible("long division over S=T^(1/" + n.str() + ") leaves a remainder");
        const Integer& lead = rem[top - lo_num];
        if (lead % den_lc != 0)
            throw NotDivisible("leading coefficient " + lead.str() + " not divisible by " +
                               den_lc.str());
        const Integer qc = lead / den_lc;
        for (const auto& [e, c] : steps) rem[e + qe - lo_num] -= qc * c;
        quot.emplace_hint(quot.begin(), Integer(qe), qc);
    }
    return quot;
}

std::map<Integer, Integer> divide_sparse(std::map<Integer, Integer> rem,
                                         const std::map<Integer, Integer>& den, const Integer& n) {
    const Integer den_lead_exp = den.rbegin()->first;
    const Integer& den_lead_coeff = den.rbegin()->second;
    const Integer quot_min_exp = rem.begin()->first - den.begin()->first;

    std::map<Integer, Integer> quot;
    while (!rem.empty()) {
        const Integer lead_exp = rem.rbegin()->first;
        const Integer lead_coeff = rem.rbegin()->second;
        const Integer qe = lead_exp - den_lead_exp;
        if (qe < quot_min_exp)
            throw NotDivisible("long division over S=T^(1/" + n.str() + ") leaves a remainder");
        if (lead_coeff % den_lead_coeff != 0)
            throw NotDivisible("leading coefficient " + lead_coeff.str() + " not divisible by " +
                               den_lead_coeff.str());
        const Integer qc = lead_coeff / den_lead_coeff;
        quot.emplace(qe, qc);
        for (const auto& [e, c] : den) {
            const Integer key = e + qe;
            auto [it, inserted] = rem.emplace(key, -qc * c);
            if (!inserted) {
                it->second -= qc * c;
                if (it->second == 0) rem.erase(it);
            } else if (it->second == 0) {
                rem.erase(it);
            }
        }
    }
    return quot;
}

}  // namespace

QPoly qpoly_exact_div(const QPoly& num, const QPoly& den) {
    if (den.is_zero()) throw DomainError("DivisionByZero", "polynomial division by zero");
    if (num.is_zero()) return QPoly();

    const Integer n = lcm(num.exponent_lcm(), den.exponent_lcm());
    auto a = num.rescaled(n);
    const auto d = den.rescaled(n);

    constexpr long long kDenseSpanLimit = 1 << 22;
    const Integer lo = a.begin()->first, hi = a.rbegin()->first;
    std::map<Integer, Integer> quot;
    if (hi - lo < kDenseSpanLimit)
        quot = divide_dense(a, d, lo.convert_to<long long>(), hi.convert_to<long long>(), n);
    else
        quot = divide_sparse(std::move(a), d, n);
    return QPoly::from_rescaled(quot, n);
}

std::string QPoly::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [e, c] : terms_) arr.push_back({e.str(), c.str()});
    return arr.dump();
}

QPoly QPoly::from_json(std::string_view text) {
    const auto arr = nlohmann::json::parse(text);
    if (!arr.is_array()) throw DomainError("ParseError", "QPoly JSON must be an array");
    QPoly r;
    for (const auto& pair : arr) {
        if (!pair.is_array() || pair.size() != 2)
            throw DomainError("ParseError", "QPoly JSON entries must be [exponent, coefficient]");
        r.add_term(Rational::parse(pair[0].get<std::string>()),
                   Integer(pair[1].get<std::string>()));
    }
    return r;
}

std::string QPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        const Integer mag = boost::multiprecision::abs(c);
        if (mag != 1 || e.is_zero()) os << mag.str();
        if (!e.is_zero()) {
            os << "T";
            if (e != Rational(1)) os << "^(" << e.str() << ")";
        }
    }
    return os.str();
}

}  // namespace specvar
