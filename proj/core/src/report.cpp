#include "specvar/report.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

#include "specvar/spectrum.hpp"

namespace specvar::report {

using nlohmann::json;

namespace {

json rationals_json(const std::vector<Rational>& values) {
    json arr = json::array();
    for (const auto& v : values) arr.push_back(v.str());
    return arr;
}

json spectrum_payload(const WeightSystem& w) {
    const Spectrum s = spectrum_from_weights(w);
    const VarianceReport vr = verify_variance_identity(w);
    json j;
    j["weights"] = rationals_json(w.weights());
    j["mu"] = s.mu();
    j["n"] = s.ambient();
    j["spectrum"] = rationals_json(s.values());
    j["variance"] = vr.lhs.str();
    j["rhs"] = vr.rhs.str();
    j["gamma"] = gamma_from_spectrum(s).str();
    j["theorem_1_1"] = vr.equal;
    return j;
}

std::string spectrum_csv_payload(const json& j) {
    std::ostringstream os;
    os << "weights,mu,n,spectrum,variance,rhs,gamma,theorem_1_1\n";
    auto join_strings = [](const json& arr) {
        std::string out;
        for (const auto& v : arr) {
            if (!out.empty()) out += ' ';
            out += v.get<std::string>();
        }
        return out;
    };
    os << '"' << join_strings(j["weights"]) << "\"," << j["mu"].get<std::size_t>() << ','
       << j["n"].get<int>() << ",\"" << join_strings(j["spectrum"]) << "\","
       << j["variance"].get<std::string>() << ',' << j["rhs"].get<std::string>() << ','
       << j["gamma"].get<std::string>() << ',' << (j["theorem_1_1"].get<bool>() ? "true" : "false")
       << '\n';
    return os.str();
}

}  // namespace

std::string spectrum_json(const WeightSystem& w) { return spectrum_payload(w).dump(2) + "\n"; }

std::string spectrum_csv(const WeightSystem& w) {
    return spectrum_csv_payload(spectrum_payload(w));
}

std::string bp_json(const std::vector<int>& exponents) {
    const WeightSystem w = WeightSystem::from_exponents(exponents);
    json j = spectrum_payload(w);
    j["exponents"] = exponents;
    return j.dump(2) + "\n";
}

std::string bp_csv(const std::vector<int>& exponents) {
    return spectrum_csv(WeightSystem::from_exponents(exponents));
}

namespace {

json join_payload(const WeightSystem& left, const WeightSystem& right) {
    const Spectrum a = spectrum_from_weights(left);
    const Spectrum b = spectrum_from_weights(right);
    const Spectrum joined_spectrum = join(a, b);
    const GammaJoinReport bil = gamma_join_check(a, b);

    json j;
    j["left_weights"] = rationals_json(left.weights());
    j["right_weights"] = rationals_json(right.weights());
    j["mu"] = joined_spectrum.mu();
    j["n"] = joined_spectrum.ambient();
    j["spectrum"] = rationals_json(joined_spectrum.values());
    const Rational var = variance(joined_spectrum);
    const Rational rhs = (joined_spectrum.max() - joined_spectrum.min()) / 12;
    j["variance"] = var.str();
    j["rhs"] = rhs.str();
    j["gamma"] = gamma_from_spectrum(joined_spectrum).str();
    j["theorem_1_1"] = (var == rhs);
    j["bilinearity"] = {{"lhs", bil.lhs.str()}, {"rhs", bil.rhs.str()}, {"equal", bil.equal}};
    return j;
}

}  // namespace

std::string join_json(const WeightSystem& left, const WeightSystem& right) {
    return join_payload(left, right).dump(2) + "\n";
}

std::string join_csv(const WeightSystem& left, const WeightSystem& right) {
    const json j = join_payload(left, right);
    std::ostringstream os;
    os << "left_weights,right_weights,mu,n,variance,rhs,gamma,theorem_1_1,bilinearity_lhs,"
          "bilinearity_rhs,bilinearity_equal\n";
    auto join_strings = [](const json& arr) {
        std::string out;
        for (const auto& v : arr) {
            if (!out.empty()) out += ' ';
            out += v.get<std::string>();
        }
        return out;
    };
    os << '"' << join_strings(j["left_weights"]) << "\",\"" << join_strings(j["right_weights"])
       << "\"," << j["mu"].get<std::size_t>() << ',' << j["n"].get<int>() << ','
       << j["variance"].get<std::string>() << ',' << j["rhs"].get<std::string>() << ','
       << j["gamma"].get<std::string>() << ','
       << (j["theorem_1_1"].get<bool>() ? "true" : "false") << ','
       << j["bilinearity"]["lhs"].get<std::string>() << ','
       << j["bilinearity"]["rhs"].get<std::string>() << ','
       << (j["bilinearity"]["equal"].get<bool>() ? "true" : "false") << '\n';
    return os.str();
}

std::string tpqr_json(int p, int q, int r) {
    const Rational g = gamma_tpqr(p, q, r);
    json j;
    j["family"] = "tpqr";
    j["p"] = p;
    j["q"] = q;
    j["r"] = r;
    j["gamma"] = g.str();
    j["nonneg"] = g >= Rational(0);
    j["is_zero"] = g.is_zero();
    return j.dump(2) + "\n";
}

std::string tpqr_csv(int p, int q, int r) {
    const Rational g = gamma_tpqr(p, q, r);
    std::ostringstream os;
    os << "p,q,r,gamma,nonneg,is_zero\n";
    os << p << ',' << q << ',' << r << ',' << g.str() << ','
       << (g >= Rational(0) ? "true" : "false") << ',' << (g.is_zero() ? "true" : "false") << '\n';
    return os.str();
}

std::string bimodal_json(BimodalSeries series, int p) {
    const Rational g = gamma_bimodal(series, p);
    json j;
    j["family"] = "bimodal";
    j["series"] = to_string(series);
    j["kappa"] = bimodal_kappa(series).str();
    j["p"] = p;
    j["gamma"] = g.str();
    j["nonneg"] = g >= Rational(0);
    j["is_zero"] = g.is_zero();
    return j.dump(2) + "\n";
}

std::string bimodal_csv(BimodalSeries series, int p) {
    const Rational g = gamma_bimodal(series, p);
    std::ostringstream os;
    os << "series,p,kappa,gamma,nonneg,is_zero\n";
    os << to_string(series) << ',' << p << ',' << bimodal_kappa(series).str() << ',' << g.str()
       << ',' << (g >= Rational(0) ? "true" : "false") << ','
       << (g.is_zero() ? "true" : "false") << '\n';
    return os.str();
}

std::string scan_tpqr_json(int max) {
    const auto report = scan_tpqr(max);
    json rows = json::array();
    for (const auto& row : report.rows)
        rows.push_back({{"p", row.p},
                        {"q", row.q},
                        {"r", row.r},
                        {"gamma", row.gamma.str()},
                        {"nonneg", row.nonneg},
                        {"is_zero", row.is_zero}});
    json zeros = json::array();
    for (const auto& row : report.zeros) zeros.push_back({{"p", row.p}, {"q", row.q}, {"r", row.r}});
    json j;
    j["family"] = "tpqr";
    j["max"] = max;
    j["rows"] = rows;
    j["summary"] = {{"count", report.rows.size()},
                    {"min_gamma", report.min_gamma ? report.min_gamma->str() : ""},
                    {"zeros", zeros}};
    return j.dump(2) + "\n";
}

std::string scan_tpqr_csv(int max) {
    const auto report = scan_tpqr(max);
    std::ostringstream os;
    os << "p,q,r,gamma,nonneg,is_zero\n";
    for (const auto& row : report.rows)
        os << row.p << ',' << row.q << ',' << row.r << ',' << row.gamma.str() << ','
           << (row.nonneg ? "true" : "false") << ',' << (row.is_zero ? "true" : "false") << '\n';
    return os.str();
}

std::string scan_bimodal_json(int pmax) {
    const auto report = scan_bimodal(pmax);
    json rows = json::array();
    for (const auto& row : report.rows)
        rows.push_back({{"series", to_string(row.series)},
                        {"p", row.p},
                        {"gamma", row.gamma.str()},
                        {"nonneg", row.nonneg},
                        {"is_zero", row.is_zero}});
    json zeros = json::array();
    for (const auto& row : report.zeros)
        zeros.push_back({{"series", to_string(row.series)}, {"p", row.p}});
    json j;
    j["family"] = "bimodal";
    j["pmax"] = pmax;
    j["rows"] = rows;
    j["summary"] = {{"count", report.rows.size()},
                    {"min_gamma", report.min_gamma ? report.min_gamma->str() : ""},
                    {"zeros", zeros}};
    return j.dump(2) + "\n";
}

std::string scan_bimodal_csv(int pmax) {
    const auto report = scan_bimodal(pmax);
    std::ostringstream os;
    os << "series,p,gamma,nonneg,is_zero\n";
    for (const auto& row : report.rows)
        os << to_string(row.series) << ',' << row.p << ',' << row.gamma.str() << ','
           << (row.nonneg ? "true" : "false") << ',' << (row.is_zero ? "true" : "false") << '\n';
    return os.str();
}

std::string checks_json(const frob::FrobeniusModel& model,
                        const std::vector<frob::CheckResult>& checks) {
    json rows = json::array();
    bool all_pass = true;
    for (const auto& c : checks) {
        all_pass = all_pass && c.pass;
        json row;
        row["name"] = c.name;
        row["measured"] = c.measured;
        row["measured_imag"] = c.measured_imag;
        row["expected"] = c.expected;
        row["tol"] = c.tol;
        row["pass"] = c.pass;
        if (!c.detail.empty()) row["detail"] = c.detail;
        rows.push_back(std::move(row));
    }
    json j;
    j["n"] = model.n();
    j["m"] = model.m();
    j["metric"] = model.metric_kind() == frob::MetricKind::test_metric ? "test" : "flat";
    j["checks"] = rows;
    j["all_pass"] = all_pass;
    return j.dump(2) + "\n";
}

std::string checks_csv(const std::vector<frob::CheckResult>& checks) {
    std::ostringstream os;
    os << "name,measured,measured_imag,expected,tol,pass\n";
    os.precision(17);
    for (const auto& c : checks)
        os << c.name << ',' << c.measured << ',' << c.measured_imag << ',' << c.expected << ','
           << c.tol << ',' << (c.pass ? "true" : "false") << '\n';
    return os.str();
}

std::string error_json(const DomainError& e) {
    json j;
    j["error"] = {{"type", e.kind()}, {"message", e.what()}};
    return j.dump(2) + "\n";
}

}  // namespace specvar::report
